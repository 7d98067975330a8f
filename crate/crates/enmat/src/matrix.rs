//! Matrices over a base and the squares between them: composition, tensor,
//! companions and conjoints, restriction and pushforward along functions,
//! mates, and the internal hom.
//!
//! Over a thin base every structural isomorphism of the matrix calculus
//! collapses to an exact equality of matrices, and a square exists exactly
//! when a pointwise order fact holds; those equalities and order facts are
//! what the tests in this crate pin down.

use std::fmt;

use crate::base::{Base, Elem};
use crate::objset::{all_functions, exponent_objset, exponent_size, ObjFun, ObjSet};
use crate::{Error, Result};

/// A rectangular array of base elements indexed by two object sets,
/// row = source element, column = target element.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    src: ObjSet,
    dst: ObjSet,
    base: Base,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(src: ObjSet, dst: ObjSet, base: Base, entries: Vec<Elem>) -> Result<Matrix> {
        if entries.len() != src.len() * dst.len() {
            return Err(Error::MalformedShape(format!(
                "need {} entries for a {}x{} matrix, got {}",
                src.len() * dst.len(),
                src.len(),
                dst.len(),
                entries.len()
            )));
        }
        Ok(Matrix { src, dst, base, entries })
    }

    pub fn from_fn(
        src: ObjSet,
        dst: ObjSet,
        base: Base,
        mut f: impl FnMut(usize, usize) -> Result<Elem>,
    ) -> Result<Matrix> {
        let mut entries = Vec::with_capacity(src.len() * dst.len());
        for i in 0..src.len() {
            for j in 0..dst.len() {
                entries.push(f(i, j)?);
            }
        }
        Ok(Matrix { src, dst, base, entries })
    }

    /// The matrix with every entry bottom.
    pub fn bottom(src: ObjSet, dst: ObjSet, base: Base) -> Matrix {
        let entries = vec![base.bottom(); src.len() * dst.len()];
        Matrix { src, dst, base, entries }
    }

    /// The identity matrix: unit on the diagonal, bottom elsewhere.
    pub fn identity(objects: &ObjSet, base: Base) -> Matrix {
        let n = objects.len();
        let mut entries = vec![base.bottom(); n * n];
        for i in 0..n {
            entries[i * n + i] = base.unit();
        }
        Matrix { src: objects.clone(), dst: objects.clone(), base, entries }
    }

    /// The unit of the pointwise tensor: every entry is the base unit.
    pub fn all_unit(src: ObjSet, dst: ObjSet, base: Base) -> Matrix {
        let entries = vec![base.unit(); src.len() * dst.len()];
        Matrix { src, dst, base, entries }
    }

    pub fn src(&self) -> &ObjSet {
        &self.src
    }

    pub fn dst(&self) -> &ObjSet {
        &self.dst
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_square(&self) -> bool {
        self.src == self.dst
    }

    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.entries[row * self.dst.len() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Elem) {
        let cols = self.dst.len();
        self.entries[row * cols + col] = value;
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    fn same_base(&self, other: &Matrix) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                left: self.base.name(),
                right: other.base.name(),
            });
        }
        Ok(())
    }

    /// Entrywise join of two parallel matrices.
    pub fn join(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_base(b)?;
        if a.src != b.src || a.dst != b.dst {
            return Err(Error::ObjSetMismatch("join needs parallel matrices".into()));
        }
        Matrix::from_fn(a.src.clone(), a.dst.clone(), a.base, |i, j| {
            a.base.join(a.get(i, j), b.get(i, j))
        })
    }

    /// Entrywise meet; needs a closed base.
    pub fn meet(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_base(b)?;
        if a.src != b.src || a.dst != b.dst {
            return Err(Error::ObjSetMismatch("meet needs parallel matrices".into()));
        }
        Matrix::from_fn(a.src.clone(), a.dst.clone(), a.base, |i, j| {
            a.base.meet(a.get(i, j), b.get(i, j))
        })
    }

    /// Pointwise order: every entry of `self` under the matching entry of
    /// `other`, in the 2-cell sense of the base.
    pub fn le(&self, other: &Matrix) -> bool {
        self.src == other.src
            && self.dst == other.dst
            && self.base == other.base
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(&a, &b)| self.base.cell_le(a, b))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.src.len() {
            for j in 0..self.dst.len() {
                if self.get(i, j) != self.base.bottom() {
                    writeln!(f, "{} {} : {}", self.src.name(i), self.dst.name(j), self.get(i, j))?;
                }
            }
        }
        Ok(())
    }
}

/// `second ∘ first`: apply `first: X → Y`, then `second: Y → Z`. The entry
/// at (x, z) is the join over y of `first(x,y) ⊗ second(y,z)`, in that
/// tensor order, so nothing here relies on the base being commutative.
pub fn compose(second: &Matrix, first: &Matrix) -> Result<Matrix> {
    first.same_base(second)?;
    if first.dst != second.src {
        return Err(Error::ObjSetMismatch(format!(
            "compose: middle object sets differ: {} vs {}",
            first.dst, second.src
        )));
    }
    let base = first.base;
    Matrix::from_fn(first.src.clone(), second.dst.clone(), base, |x, z| {
        let mut acc = base.bottom();
        for y in 0..first.dst.len() {
            acc = base.join(acc, base.tensor(first.get(x, y), second.get(y, z))?)?;
        }
        Ok(acc)
    })
}

/// Kronecker-style tensor: `(S ⊗ T)((x,z),(y,w)) = S(x,y) ⊗ T(z,w)` over
/// the product object sets.
pub fn tensor(s: &Matrix, t: &Matrix) -> Result<Matrix> {
    s.same_base(t)?;
    let src = s.src.product(&t.src);
    let dst = s.dst.product(&t.dst);
    let base = s.base;
    let (tn, tm) = (t.src.len(), t.dst.len());
    Matrix::from_fn(src, dst, base, |i, j| {
        let (xs, zs) = (i / tn, i % tn);
        let (yt, wt) = (j / tm, j % tm);
        base.tensor(s.get(xs, yt), t.get(zs, wt))
    })
}

/// The second, pointwise monoidal product on parallel matrices; its unit is
/// `Matrix::all_unit`.
pub fn pointwise_tensor(s: &Matrix, t: &Matrix) -> Result<Matrix> {
    s.same_base(t)?;
    if s.src != t.src || s.dst != t.dst {
        return Err(Error::ObjSetMismatch("pointwise tensor needs parallel matrices".into()));
    }
    Matrix::from_fn(s.src.clone(), s.dst.clone(), s.base, |i, j| {
        s.base.tensor(s.get(i, j), t.get(i, j))
    })
}

/// The companion of `f: X → Y`: unit at (x, f x), bottom elsewhere.
pub fn companion(f: &ObjFun, base: Base) -> Matrix {
    let mut m = Matrix::bottom(f.src().clone(), f.dst().clone(), base);
    for i in 0..f.src().len() {
        m.set(i, f.apply(i), base.unit());
    }
    m
}

/// The conjoint of `f: X → Y`: unit at (f x, x), bottom elsewhere.
pub fn conjoint(f: &ObjFun, base: Base) -> Matrix {
    let mut m = Matrix::bottom(f.dst().clone(), f.src().clone(), base);
    for i in 0..f.src().len() {
        m.set(f.apply(i), i, base.unit());
    }
    m
}

/// Restriction of `n` along `(f, g)`: the collapsed form of
/// `conjoint(g) ∘ n ∘ companion(f)`, with entries `n(f x, g y)`. Exact over
/// a thin base, so the compositional route is kept as a test oracle only.
pub fn restrict(f: &ObjFun, g: &ObjFun, n: &Matrix) -> Result<Matrix> {
    if f.dst() != n.src() || g.dst() != n.dst() {
        return Err(Error::ObjSetMismatch(
            "restrict: function codomains must match the matrix endpoints".into(),
        ));
    }
    Matrix::from_fn(f.src().clone(), g.src().clone(), n.base, |x, y| {
        Ok(n.get(f.apply(x), g.apply(y)))
    })
}

/// Pushforward of `m` along `(f, g)`: the collapsed form of
/// `companion(g) ∘ m ∘ conjoint(f)`, with entries the join of `m` over
/// the fibers of `f` and `g`.
pub fn pushforward(f: &ObjFun, g: &ObjFun, m: &Matrix) -> Result<Matrix> {
    if f.src() != m.src() || g.src() != m.dst() {
        return Err(Error::ObjSetMismatch(
            "pushforward: function domains must match the matrix endpoints".into(),
        ));
    }
    let base = m.base;
    Matrix::from_fn(f.dst().clone(), g.dst().clone(), base, |y, w| {
        let mut acc = base.bottom();
        for x in 0..f.src().len() {
            if f.apply(x) != y {
                continue;
            }
            for z in 0..g.src().len() {
                if g.apply(z) == w {
                    acc = base.join(acc, m.get(x, z))?;
                }
            }
        }
        Ok(acc)
    })
}

/// The internal hom `H(s, t)` from `s: X → Y` to `t: Z → W`, a matrix
/// `Zˣ → Wʸ` whose entry at (n, m) is the meet over all (x, y) of the
/// residual `[s(x,y), t(n x, m y)]`. Needs a closed base; both exponent
/// object sets must stay within `cap`.
pub fn internal_hom(s: &Matrix, t: &Matrix, cap: usize) -> Result<Matrix> {
    s.same_base(t)?;
    let base = s.base;
    if !base.is_closed() {
        return Err(Error::NotClosed(base.name()));
    }
    for (dom, cod) in [(s.src(), t.src()), (s.dst(), t.dst())] {
        let size = exponent_size(dom, cod);
        if size > cap as u128 {
            return Err(Error::ExponentCapExceeded { size, cap });
        }
    }
    let ns = all_functions(s.src(), t.src());
    let ms = all_functions(s.dst(), t.dst());
    let src = exponent_objset(s.src(), t.src());
    let dst = exponent_objset(s.dst(), t.dst());
    let top = base.top()?;
    Matrix::from_fn(src, dst, base, |ni, mi| {
        let (n, m) = (&ns[ni], &ms[mi]);
        let mut acc = top;
        for x in 0..s.src().len() {
            for y in 0..s.dst().len() {
                let r = base.residual(s.get(x, y), t.get(n.apply(x), m.apply(y)))?;
                acc = base.meet(acc, r)?;
            }
        }
        Ok(acc)
    })
}

/// A square between matrices over a pair of vertical functions. Over a thin
/// base it carries no component data: it either holds or it does not.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCell {
    source: Matrix,
    target: Matrix,
    f: ObjFun,
    g: ObjFun,
}

impl TwoCell {
    pub fn new(source: Matrix, target: Matrix, f: ObjFun, g: ObjFun) -> Result<TwoCell> {
        if f.src() != source.src()
            || g.src() != source.dst()
            || f.dst() != target.src()
            || g.dst() != target.dst()
        {
            return Err(Error::MalformedShape(
                "cell boundary functions do not frame the two matrices".into(),
            ));
        }
        source.same_base(&target)?;
        Ok(TwoCell { source, target, f, g })
    }

    /// A cell over identity verticals.
    pub fn globular(source: Matrix, target: Matrix) -> Result<TwoCell> {
        let f = ObjFun::identity(source.src());
        let g = ObjFun::identity(source.dst());
        TwoCell::new(source, target, f, g)
    }

    pub fn source(&self) -> &Matrix {
        &self.source
    }

    pub fn target(&self) -> &Matrix {
        &self.target
    }

    pub fn left(&self) -> &ObjFun {
        &self.f
    }

    pub fn right(&self) -> &ObjFun {
        &self.g
    }

    pub fn is_globular(&self) -> bool {
        self.f.is_identity() && self.g.is_identity()
    }

    /// Whether the cell exists: every component `source(x,y) → target(fx, gy)`
    /// must exist in the base.
    pub fn holds(&self) -> bool {
        let base = self.source.base;
        for x in 0..self.source.src().len() {
            for y in 0..self.source.dst().len() {
                if !base.cell_le(self.source.get(x, y), self.target.get(self.f.apply(x), self.g.apply(y)))
                {
                    return false;
                }
            }
        }
        true
    }

    /// First violating pair of object names, if any.
    pub fn first_violation(&self) -> Option<(String, String)> {
        let base = self.source.base;
        for x in 0..self.source.src().len() {
            for y in 0..self.source.dst().len() {
                if !base.cell_le(self.source.get(x, y), self.target.get(self.f.apply(x), self.g.apply(y)))
                {
                    return Some((
                        self.source.src().name(x).to_string(),
                        self.source.dst().name(y).to_string(),
                    ));
                }
            }
        }
        None
    }

    /// Horizontal composite: `right` sits after `left` (their middle
    /// boundary function must agree).
    pub fn compose_horizontal(left: &TwoCell, right: &TwoCell) -> Result<TwoCell> {
        if left.source.dst() != right.source.src() || left.g != right.f {
            return Err(Error::MalformedShape(
                "horizontal composite needs matching middle boundaries".into(),
            ));
        }
        TwoCell::new(
            compose(&right.source, &left.source)?,
            compose(&right.target, &left.target)?,
            left.f.clone(),
            right.g.clone(),
        )
    }

    /// Vertical composite: `upper` then `lower`; `lower`'s source matrix must
    /// be `upper`'s target.
    pub fn compose_vertical(upper: &TwoCell, lower: &TwoCell) -> Result<TwoCell> {
        if upper.target != lower.source {
            return Err(Error::MalformedShape(
                "vertical composite needs target = source in the middle".into(),
            ));
        }
        TwoCell::new(
            upper.source.clone(),
            lower.target.clone(),
            ObjFun::compose(&lower.f, &upper.f)?,
            ObjFun::compose(&lower.g, &upper.g)?,
        )
    }
}

/// The five presentations of one square `m ⇒ n` over `(f, g)` related by the
/// mate correspondence: the square itself and the four globular cells built
/// from companions and conjoints of `f` and `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MateForm {
    /// `m ⇒ n` over `(f, g)`.
    Square,
    /// `m ⇒ ǧ ∘ n ∘ f̂`, globular.
    Restrict,
    /// `ĝ ∘ m ⇒ n ∘ f̂`, globular.
    SlideTarget,
    /// `m ∘ f̌ ⇒ ǧ ∘ n`, globular.
    SlideSource,
    /// `ĝ ∘ m ∘ f̌ ⇒ n`, globular.
    Extend,
}

impl MateForm {
    pub const ALL: [MateForm; 5] = [
        MateForm::Square,
        MateForm::Restrict,
        MateForm::SlideTarget,
        MateForm::SlideSource,
        MateForm::Extend,
    ];

    pub const GLOBULAR: [MateForm; 4] =
        [MateForm::Restrict, MateForm::SlideTarget, MateForm::SlideSource, MateForm::Extend];
}

/// The frame of a mate correspondence: matrices `m: X → Y`, `n: Z → W` and
/// functions `f: X → Z`, `g: Y → W`. The thin cells themselves carry no
/// witness of this frame, so conversions between globular presentations go
/// through this data.
#[derive(Clone, Debug)]
pub struct MateData {
    m: Matrix,
    n: Matrix,
    f: ObjFun,
    g: ObjFun,
}

impl MateData {
    pub fn new(m: Matrix, n: Matrix, f: ObjFun, g: ObjFun) -> Result<MateData> {
        if f.src() != m.src() || g.src() != m.dst() || f.dst() != n.src() || g.dst() != n.dst() {
            return Err(Error::MalformedShape("mate frame does not fit the matrices".into()));
        }
        m.same_base(&n)?;
        Ok(MateData { m, n, f, g })
    }

    /// Builds the cell in the requested presentation.
    pub fn cell(&self, form: MateForm) -> Result<TwoCell> {
        let base = self.m.base();
        match form {
            MateForm::Square => {
                TwoCell::new(self.m.clone(), self.n.clone(), self.f.clone(), self.g.clone())
            }
            MateForm::Restrict => {
                TwoCell::globular(self.m.clone(), restrict(&self.f, &self.g, &self.n)?)
            }
            MateForm::SlideTarget => TwoCell::globular(
                compose(&companion(&self.g, base), &self.m)?,
                compose(&self.n, &companion(&self.f, base))?,
            ),
            MateForm::SlideSource => TwoCell::globular(
                compose(&self.m, &conjoint(&self.f, base))?,
                compose(&conjoint(&self.g, base), &self.n)?,
            ),
            MateForm::Extend => {
                TwoCell::globular(pushforward(&self.f, &self.g, &self.m)?, self.n.clone())
            }
        }
    }

    pub fn holds(&self, form: MateForm) -> Result<bool> {
        Ok(self.cell(form)?.holds())
    }

    /// Recovers the frame from a cell claimed to be in a given globular
    /// presentation, verifying the claim exactly. `NotGlobular` if the cell
    /// has non-identity boundaries where the form demands a globular cell.
    pub fn from_globular(
        cell: &TwoCell,
        form: MateForm,
        f: ObjFun,
        g: ObjFun,
        m: Matrix,
        n: Matrix,
    ) -> Result<MateData> {
        let data = MateData::new(m, n, f, g)?;
        if form != MateForm::Square && !cell.is_globular() {
            return Err(Error::NotGlobular);
        }
        let expected = data.cell(form)?;
        if expected.source() != cell.source() || expected.target() != cell.target() {
            return Err(Error::MalformedShape(
                "cell does not match the claimed mate presentation".into(),
            ));
        }
        Ok(data)
    }

    pub fn matrices(&self) -> (&Matrix, &Matrix) {
        (&self.m, &self.n)
    }
}

/// The mate of a square in the requested presentation. The input is the
/// general square over `(f, g)`; its own boundary data is the frame.
pub fn mate(cell: &TwoCell, to: MateForm) -> Result<TwoCell> {
    let data = MateData::new(
        cell.source().clone(),
        cell.target().clone(),
        cell.left().clone(),
        cell.right().clone(),
    )?;
    data.cell(to)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Trop;
    use crate::objset::all_functions;

    fn set(names: &[&str]) -> ObjSet {
        ObjSet::new(names.iter().copied()).unwrap()
    }

    fn bool_matrix(src: &ObjSet, dst: &ObjSet, ones: &[(&str, &str)]) -> Matrix {
        let mut m = Matrix::bottom(src.clone(), dst.clone(), Base::boolean());
        for (a, b) in ones {
            m.set(src.position(a).unwrap(), dst.position(b).unwrap(), Elem::Bool(true));
        }
        m
    }

    #[test]
    fn identity_matrix_boolean() {
        let x = set(&["a", "b"]);
        let id = Matrix::identity(&x, Base::boolean());
        assert_eq!(
            id.entries(),
            &[Elem::Bool(true), Elem::Bool(false), Elem::Bool(false), Elem::Bool(true)]
        );
    }

    #[test]
    fn identity_matrix_tropical_unit_is_zero() {
        let x = set(&["a"]);
        let id = Matrix::identity(&x, Base::tropical());
        assert_eq!(id.entries(), &[Elem::Trop(Trop::Fin(0))]);
    }

    #[test]
    fn compose_boolean_chain_of_edges() {
        let x = set(&["a", "b", "c"]);
        let s = bool_matrix(&x, &x, &[("a", "b")]);
        let t = bool_matrix(&x, &x, &[("b", "c")]);
        let ts = compose(&t, &s).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = i == 0 && j == 2;
                assert_eq!(ts.get(i, j), Elem::Bool(expect), "at ({i},{j})");
            }
        }
    }

    #[test]
    fn compose_tropical_adds_weights() {
        let x = set(&["a"]);
        let y = set(&["b"]);
        let z = set(&["c"]);
        let s = Matrix::new(x, y.clone(), Base::tropical(), vec![Elem::Trop(Trop::Fin(3))]).unwrap();
        let t = Matrix::new(y, z, Base::tropical(), vec![Elem::Trop(Trop::Fin(4))]).unwrap();
        assert_eq!(compose(&t, &s).unwrap().entries(), &[Elem::Trop(Trop::Fin(7))]);
    }

    #[test]
    fn compose_nat_counts_parallel_paths() {
        let a = set(&["a"]);
        let y = set(&["b1", "b2"]);
        let c = set(&["c"]);
        let s = Matrix::new(a, y.clone(), Base::nat(), vec![Elem::Nat(1), Elem::Nat(1)]).unwrap();
        let t = Matrix::new(y, c, Base::nat(), vec![Elem::Nat(1), Elem::Nat(1)]).unwrap();
        assert_eq!(compose(&t, &s).unwrap().entries(), &[Elem::Nat(2)]);
    }

    #[test]
    fn tensor_blocks() {
        let x = set(&["a", "b"]);
        let s = bool_matrix(&x, &x, &[("a", "a"), ("a", "b")]);
        let t = bool_matrix(&x, &x, &[("b", "a")]);
        let st = tensor(&s, &t).unwrap();
        assert_eq!(st.src().len(), 4);
        // Block structure: entry ((x,z),(y,w)) = S(x,y) ∧ T(z,w).
        for i in 0..4 {
            for j in 0..4 {
                let expect = s.get(i / 2, j / 2) == Elem::Bool(true)
                    && t.get(i % 2, j % 2) == Elem::Bool(true);
                assert_eq!(st.get(i, j), Elem::Bool(expect));
            }
        }
    }

    #[test]
    fn pointwise_tensor_unit_law() {
        let x = set(&["a", "b"]);
        let s = bool_matrix(&x, &x, &[("a", "b"), ("b", "b")]);
        let j = Matrix::all_unit(x.clone(), x.clone(), Base::boolean());
        assert_eq!(pointwise_tensor(&s, &j).unwrap(), s);
    }

    #[test]
    fn pointwise_tensor_tropical_absorbs() {
        let x = set(&["a"]);
        let s = Matrix::new(x.clone(), x.clone(), Base::tropical(), vec![Elem::Trop(Trop::Fin(2))])
            .unwrap();
        let t = Matrix::new(x.clone(), x.clone(), Base::tropical(), vec![Elem::Trop(Trop::Inf)])
            .unwrap();
        assert_eq!(pointwise_tensor(&s, &t).unwrap().entries(), &[Elem::Trop(Trop::Inf)]);
    }

    #[test]
    fn companion_of_identity_is_identity_matrix() {
        let x = set(&["a", "b", "c"]);
        let f = ObjFun::identity(&x);
        assert_eq!(companion(&f, Base::boolean()), Matrix::identity(&x, Base::boolean()));
        assert_eq!(conjoint(&f, Base::boolean()), Matrix::identity(&x, Base::boolean()));
    }

    #[test]
    fn conjoint_after_companion_of_constant_map() {
        let x = set(&["a", "b"]);
        let u = set(&["u"]);
        let f = ObjFun::constant(x.clone(), u, 0).unwrap();
        let m = compose(&conjoint(&f, Base::boolean()), &companion(&f, Base::boolean())).unwrap();
        assert!(m.entries().iter().all(|&e| e == Elem::Bool(true)));
        assert_eq!(m.entries().len(), 4);
    }

    #[test]
    fn restrict_matches_compositional_form() {
        // restrict(f, g, N) = conjoint(g) ∘ N ∘ companion(f), exactly.
        let x = set(&["a", "b"]);
        let z = set(&["u", "v", "w"]);
        for base in [Base::boolean(), Base::chain(3).unwrap(), Base::nat()] {
            let carrier_probe =
                |i: usize, j: usize| match base.carrier() {
                    Some(c) => c[(i * 3 + j) % c.len()],
                    None => Elem::Nat(((i * 3 + j) % 4) as u64),
                };
            let n = Matrix::from_fn(z.clone(), z.clone(), base, |i, j| Ok(carrier_probe(i, j)))
                .unwrap();
            for f in all_functions(&x, &z) {
                for g in all_functions(&x, &z) {
                    let direct = restrict(&f, &g, &n).unwrap();
                    let composite = compose(
                        &conjoint(&g, base),
                        &compose(&n, &companion(&f, base)).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(direct, composite);
                }
            }
        }
    }

    #[test]
    fn pushforward_matches_compositional_form() {
        let x = set(&["a", "b"]);
        let u = set(&["u"]);
        let f = ObjFun::constant(x.clone(), u.clone(), 0).unwrap();
        let id2 = Matrix::identity(&x, Base::boolean());
        let pushed = pushforward(&f, &f, &id2).unwrap();
        assert_eq!(pushed.entries(), &[Elem::Bool(true)]);

        let composite = compose(
            &companion(&f, Base::boolean()),
            &compose(&id2, &conjoint(&f, Base::boolean())).unwrap(),
        )
        .unwrap();
        assert_eq!(pushed, composite);
    }

    #[test]
    fn pushforward_tropical_fiber_min() {
        let x = set(&["a", "b"]);
        let u = set(&["u"]);
        let f = ObjFun::constant(x.clone(), u, 0).unwrap();
        let m = Matrix::from_fn(x.clone(), x.clone(), Base::tropical(), |i, j| {
            Ok(Elem::Trop(if i == j { Trop::Fin(0) } else { Trop::Fin(5) }))
        })
        .unwrap();
        assert_eq!(pushforward(&f, &f, &m).unwrap().entries(), &[Elem::Trop(Trop::Fin(0))]);
    }

    #[test]
    fn restrict_identity_functions() {
        let x = set(&["a", "b"]);
        let n = bool_matrix(&x, &x, &[("a", "b")]);
        let idf = ObjFun::identity(&x);
        assert_eq!(restrict(&idf, &idf, &n).unwrap(), n);
        assert_eq!(pushforward(&idf, &idf, &n).unwrap(), n);
    }

    #[test]
    fn restrict_along_bijection_permutes() {
        let x = set(&["a", "b"]);
        let y = set(&["u", "v"]);
        let n = bool_matrix(&y, &y, &[("u", "u"), ("v", "v"), ("u", "v")]);
        let swap = ObjFun::from_names(x.clone(), y, &[("a", "v"), ("b", "u")]).unwrap();
        let r = restrict(&swap, &swap, &n).unwrap();
        assert_eq!(r.get(0, 0), Elem::Bool(true)); // N(v, v)
        assert_eq!(r.get(0, 1), Elem::Bool(false)); // N(v, u)
        assert_eq!(r.get(1, 0), Elem::Bool(true)); // N(u, v)
    }

    #[test]
    fn mate_forms_preserve_holds() {
        // Exhaustive over boolean 2x2 matrices and all (f, g): the square and
        // its four globular presentations hold together.
        let x = set(&["x0", "x1"]);
        let base = Base::boolean();
        let fns = all_functions(&x, &x);
        let all_mats: Vec<Matrix> = (0..16u32)
            .map(|bits| {
                Matrix::from_fn(x.clone(), x.clone(), base, |i, j| {
                    Ok(Elem::Bool(bits & (1 << (i * 2 + j)) != 0))
                })
                .unwrap()
            })
            .collect();
        for f in &fns {
            for g in &fns {
                for m in &all_mats {
                    for n in &all_mats {
                        let data =
                            MateData::new(m.clone(), n.clone(), f.clone(), g.clone()).unwrap();
                        let reference = data.holds(MateForm::Square).unwrap();
                        for form in MateForm::ALL {
                            assert_eq!(data.holds(form).unwrap(), reference, "{form:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mate_forms_agree_on_rectangular_frames() {
        // Distinct sizes at all four corners: m: X ⇸ Y, n: Z ⇸ W with
        // |X| = 1, |Y| = 2, |Z| = 2, |W| = 3, exhaustive over boolean.
        let x = set(&["x0"]);
        let y = set(&["y0", "y1"]);
        let z = set(&["z0", "z1"]);
        let w = set(&["w0", "w1", "w2"]);
        let base = Base::boolean();
        let enumerate = |src: &ObjSet, dst: &ObjSet| -> Vec<Matrix> {
            let cells = src.len() * dst.len();
            (0..(1u32 << cells))
                .map(|bits| {
                    Matrix::from_fn(src.clone(), dst.clone(), base, |i, j| {
                        Ok(Elem::Bool(bits & (1 << (i * dst.len() + j)) != 0))
                    })
                    .unwrap()
                })
                .collect()
        };
        for f in all_functions(&x, &z) {
            for g in all_functions(&y, &w) {
                for m in enumerate(&x, &y) {
                    for n in enumerate(&z, &w) {
                        let data =
                            MateData::new(m.clone(), n.clone(), f.clone(), g.clone()).unwrap();
                        let reference = data.holds(MateForm::Square).unwrap();
                        for form in MateForm::ALL {
                            assert_eq!(data.holds(form).unwrap(), reference, "{form:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mate_of_identity_framed_square_is_itself() {
        let x = set(&["a", "b"]);
        let m = bool_matrix(&x, &x, &[("a", "b")]);
        let cell = TwoCell::globular(m.clone(), m.clone()).unwrap();
        let mated = mate(&cell, MateForm::Restrict).unwrap();
        assert_eq!(mated.source(), cell.source());
        assert_eq!(mated.target(), cell.target());
    }

    #[test]
    fn from_globular_rejects_non_globular_cells() {
        let x = set(&["a", "b"]);
        let u = set(&["u"]);
        let f = ObjFun::constant(x.clone(), u.clone(), 0).unwrap();
        let m = bool_matrix(&x, &x, &[]);
        let n = bool_matrix(&u, &u, &[("u", "u")]);
        let square = TwoCell::new(m.clone(), n.clone(), f.clone(), f.clone()).unwrap();
        let err =
            MateData::from_globular(&square, MateForm::Restrict, f.clone(), f.clone(), m, n);
        assert!(matches!(err, Err(Error::NotGlobular)));
    }

    #[test]
    fn internal_hom_single_entry_is_residual() {
        let p = set(&["*"]);
        for base in [Base::boolean(), Base::lukasiewicz(3).unwrap()] {
            for a in base.carrier().unwrap() {
                for b in base.carrier().unwrap() {
                    let s = Matrix::new(p.clone(), p.clone(), base, vec![a]).unwrap();
                    let t = Matrix::new(p.clone(), p.clone(), base, vec![b]).unwrap();
                    let h = internal_hom(&s, &t, 64).unwrap();
                    assert_eq!(h.entries(), &[base.residual(a, b).unwrap()]);
                }
            }
        }
    }

    #[test]
    fn internal_hom_from_unit_reproduces_target() {
        // S = [[1]] on a point, T a preorder on {u, v}: the hom entries at
        // (⟨u⟩,⟨v⟩) etc. are exactly T's entries.
        let p = set(&["*"]);
        let y = set(&["u", "v"]);
        let s = Matrix::identity(&p, Base::boolean());
        let t = bool_matrix(&y, &y, &[("u", "u"), ("v", "v"), ("u", "v")]);
        let h = internal_hom(&s, &t, 64).unwrap();
        assert_eq!(h.src().len(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(h.get(i, j), t.get(i, j));
            }
        }
    }

    #[test]
    fn internal_hom_needs_closed_base() {
        let p = set(&["*"]);
        let s = Matrix::identity(&p, Base::tropical());
        assert!(matches!(internal_hom(&s, &s, 64), Err(Error::NotClosed(_))));
    }

    #[test]
    fn internal_hom_respects_cap() {
        let x = set(&["a", "b", "c"]);
        let s = Matrix::identity(&x, Base::boolean());
        assert!(matches!(
            internal_hom(&s, &s, 8),
            Err(Error::ExponentCapExceeded { size: 27, cap: 8 })
        ));
    }

    #[test]
    fn compose_shape_errors() {
        let x = set(&["a"]);
        let y = set(&["b", "c"]);
        let s = Matrix::bottom(x.clone(), y.clone(), Base::boolean());
        assert!(matches!(compose(&s, &s), Err(Error::ObjSetMismatch(_))));
        let t = Matrix::bottom(y, x, Base::tropical());
        assert!(matches!(compose(&t, &s), Err(Error::BaseMismatch { .. })));
    }
}
