//! Independent oracles and exhaustive enumerators. Everything here is
//! deliberately written against raw entries and base primitives only — no
//! calls into the matrix composition or closure code it is used to check.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::base::{Base, BaseKind, Elem};
use crate::graph::Graph;
use crate::matrix::{self, Matrix, MateData, MateForm, TwoCell};
use crate::objset::{all_functions, ObjFun, ObjSet};
use crate::{Error, Result};

/// Default ceiling on enumeration space sizes.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Path-sum closure computed without any fixpoint: the join over all walks
/// of length up to `|X|² + 1` of the tensor of their edge weights, plus the
/// unit on the diagonal. Walks are accumulated one length at a time; the
/// final two partial sums are asserted equal, so the length bound is
/// verified rather than trusted.
#[allow(clippy::needless_range_loop)]
pub fn path_closure_oracle(g: &Graph) -> Result<Matrix> {
    let n = g.objects().len();
    if n > 8 {
        return Err(Error::BudgetExceeded { size: n as u128, budget: 8 });
    }
    let base = g.base();
    let edge = |i: usize, j: usize| g.mat().get(i, j);
    let max_len = n * n + 1;

    // walks[i][j] = join over all walks of the current length of their weight.
    let mut acc: Vec<Vec<Elem>> = vec![vec![base.bottom(); n]; n];
    let mut walks: Vec<Vec<Elem>> = vec![vec![base.bottom(); n]; n];
    for i in 0..n {
        acc[i][i] = base.unit();
        walks[i][i] = base.unit();
    }
    let mut previous = acc.clone();
    for _len in 1..=max_len {
        let mut next = vec![vec![base.bottom(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if walks[i][k] == base.bottom() {
                    continue;
                }
                for j in 0..n {
                    let extended = base.tensor(walks[i][k], edge(k, j))?;
                    next[i][j] = base.join(next[i][j], extended)?;
                }
            }
        }
        previous = acc.clone();
        for i in 0..n {
            for j in 0..n {
                acc[i][j] = base.join(acc[i][j], next[i][j])?;
            }
        }
        walks = next;
    }
    assert_eq!(previous, acc, "path sums must stabilize within the length bound");

    Matrix::from_fn(g.objects().clone(), g.objects().clone(), base, |i, j| Ok(acc[i][j]))
}

/// Reachability closure by recursive depth-first search; boolean base only.
pub fn reachability_closure(g: &Graph) -> Result<Matrix> {
    if g.base().kind() != BaseKind::Boolean {
        return Err(Error::BaseMismatch { left: g.base().name(), right: "boolean".into() });
    }
    let n = g.objects().len();
    let edge = |i: usize, j: usize| g.mat().get(i, j) == Elem::Bool(true);

    fn visit(v: usize, n: usize, edge: &dyn Fn(usize, usize) -> bool, seen: &mut Vec<bool>) {
        for w in 0..n {
            if edge(v, w) && !seen[w] {
                seen[w] = true;
                visit(w, n, edge, seen);
            }
        }
    }

    Matrix::from_fn(g.objects().clone(), g.objects().clone(), g.base(), |i, j| {
        let mut seen = vec![false; n];
        seen[i] = true;
        visit(i, n, &edge, &mut seen);
        Ok(Elem::Bool(seen[j]))
    })
}

/// All-pairs closure by the classical triple loop over intermediate
/// vertices, with the unit joined onto the diagonal first. Valid on
/// idempotent bases; used as the independent tropical oracle.
pub fn floyd_warshall_closure(g: &Graph) -> Result<Matrix> {
    if !g.base().is_idempotent() {
        return Err(Error::NoOrder(g.base().name()));
    }
    let base = g.base();
    let n = g.objects().len();
    let mut d: Vec<Vec<Elem>> = (0..n)
        .map(|i| (0..n).map(|j| g.mat().get(i, j)).collect())
        .collect();
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = base.join(row[i], base.unit())?;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = base.tensor(d[i][k], d[k][j])?;
                d[i][j] = base.join(d[i][j], through)?;
            }
        }
    }
    Matrix::from_fn(g.objects().clone(), g.objects().clone(), base, |i, j| Ok(d[i][j]))
}

/// A finite space of candidates to enumerate, sized up-front.
#[derive(Clone, Debug)]
pub enum SpaceKind {
    Matrices { src: ObjSet, dst: ObjSet },
    Functions { src: ObjSet, dst: ObjSet },
}

#[derive(Clone, Debug)]
pub struct EnumerationSpace {
    pub base: Base,
    pub kind: SpaceKind,
    pub budget: u128,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Candidate {
    Matrix(Matrix),
    Function(ObjFun),
}

impl Candidate {
    pub fn matrix(&self) -> &Matrix {
        match self {
            Candidate::Matrix(m) => m,
            Candidate::Function(_) => panic!("expected a matrix candidate"),
        }
    }

    pub fn function(&self) -> &ObjFun {
        match self {
            Candidate::Function(f) => f,
            Candidate::Matrix(_) => panic!("expected a function candidate"),
        }
    }
}

impl EnumerationSpace {
    pub fn matrices(base: Base, src: ObjSet, dst: ObjSet) -> EnumerationSpace {
        EnumerationSpace { base, kind: SpaceKind::Matrices { src, dst }, budget: DEFAULT_BUDGET }
    }

    pub fn functions(base: Base, src: ObjSet, dst: ObjSet) -> EnumerationSpace {
        EnumerationSpace { base, kind: SpaceKind::Functions { src, dst }, budget: DEFAULT_BUDGET }
    }

    /// Total number of candidates.
    pub fn size(&self) -> Result<u128> {
        match &self.kind {
            SpaceKind::Matrices { src, dst } => {
                let carrier = self
                    .base
                    .carrier()
                    .ok_or_else(|| Error::InfiniteCarrier(self.base.name()))?;
                let cells = (src.len() * dst.len()) as u32;
                Ok((carrier.len() as u128).pow(cells))
            }
            SpaceKind::Functions { src, dst } => Ok((dst.len() as u128).pow(src.len() as u32)),
        }
    }

    /// Deterministic enumeration, lexicographic by (cell order, carrier
    /// order) for matrices and by exponent order for functions.
    pub fn enumerate(&self) -> Result<Vec<Candidate>> {
        let size = self.size()?;
        if size > self.budget {
            return Err(Error::BudgetExceeded { size, budget: self.budget });
        }
        match &self.kind {
            SpaceKind::Matrices { src, dst } => {
                let carrier = self.base.carrier().expect("checked by size()");
                let cells = src.len() * dst.len();
                let mut out = Vec::with_capacity(size as usize);
                for code in 0..size {
                    // Row-major cell order, first cell most significant.
                    let mut rest = code;
                    let mut entries = vec![carrier[0]; cells];
                    for slot in entries.iter_mut().rev() {
                        *slot = carrier[(rest % carrier.len() as u128) as usize];
                        rest /= carrier.len() as u128;
                    }
                    out.push(Candidate::Matrix(Matrix::new(
                        src.clone(),
                        dst.clone(),
                        self.base,
                        entries,
                    )?));
                }
                Ok(out)
            }
            SpaceKind::Functions { src, dst } => {
                Ok(all_functions(src, dst).into_iter().map(Candidate::Function).collect())
            }
        }
    }
}

/// Outcome of counting two predicate-filtered spaces against each other,
/// with an optional explicit pairing that must be a bijection.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub left_count: usize,
    pub right_count: usize,
    pub pairing_checked: bool,
    pub mismatches: Vec<String>,
}

impl BijectionReport {
    pub fn pass(&self) -> bool {
        self.left_count == self.right_count && self.mismatches.is_empty()
    }
}

pub fn bijection_check(
    left: &EnumerationSpace,
    left_pred: &dyn Fn(&Candidate) -> bool,
    right: &EnumerationSpace,
    right_pred: &dyn Fn(&Candidate) -> bool,
    pairing: Option<&dyn Fn(&Candidate) -> Candidate>,
) -> Result<BijectionReport> {
    let lefts: Vec<Candidate> =
        left.enumerate()?.into_iter().filter(|c| left_pred(c)).collect();
    let rights: Vec<Candidate> =
        right.enumerate()?.into_iter().filter(|c| right_pred(c)).collect();
    let mut mismatches = Vec::new();
    let mut pairing_checked = false;
    if let Some(map) = pairing {
        pairing_checked = true;
        let images: Vec<Candidate> = lefts.iter().map(map).collect();
        for (k, image) in images.iter().enumerate() {
            if !rights.contains(image) {
                mismatches.push("image of a left candidate is not on the right".to_string());
            } else if images[..k].contains(image) {
                mismatches.push("pairing is not injective".to_string());
            }
        }
        if mismatches.is_empty() && lefts.len() != rights.len() {
            mismatches.push("pairing cannot be onto: counts differ".into());
        }
    }
    Ok(BijectionReport {
        left_count: lefts.len(),
        right_count: rights.len(),
        pairing_checked,
        mismatches,
    })
}

/// One pass/fail line of a law suite.
#[derive(Clone, Debug)]
pub struct SuiteCheck {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            match (&c.pass, &c.detail) {
                (true, _) => writeln!(f, "pass  {}", c.name)?,
                (false, Some(d)) => writeln!(f, "FAIL  {} ({d})", c.name)?,
                (false, None) => writeln!(f, "FAIL  {}", c.name)?,
            }
        }
        Ok(())
    }
}

fn random_objset(rng: &mut ChaCha8Rng, tag: &str, max: usize) -> ObjSet {
    let n = rng.gen_range(1..=max);
    ObjSet::new((0..n).map(|i| format!("{tag}{i}"))).expect("generated names are distinct")
}

fn random_matrix(rng: &mut ChaCha8Rng, base: Base, src: &ObjSet, dst: &ObjSet) -> Matrix {
    Matrix::from_fn(src.clone(), dst.clone(), base, |_, _| Ok(base.sample(rng)))
        .expect("sampling cannot fail")
}

fn random_function(rng: &mut ChaCha8Rng, src: &ObjSet, dst: &ObjSet) -> ObjFun {
    let images = (0..src.len()).map(|_| rng.gen_range(0..dst.len())).collect();
    ObjFun::new(src.clone(), dst.clone(), images).expect("generated images are in range")
}

/// The randomized double-category law suite: associativity and unit of
/// composition, functoriality of the tensor (the interchange of the two
/// monoidal structures), and preservation of holding squares under both
/// composites — all as exact equalities of matrices, over the four standard
/// bases with a fixed seed.
pub fn double_category_suite(seed: u64, cases: usize) -> SuiteReport {
    let bases =
        [Base::boolean(), Base::tropical(), Base::nat(), Base::chain(3).expect("valid size")];
    let mut checks = Vec::new();
    for base in bases {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ base.name().len() as u64);
        let mut failure: Option<String> = None;
        for case in 0..cases {
            if let Err(e) = run_double_category_case(&mut rng, base) {
                failure = Some(format!("case {case}: {e}"));
                break;
            }
        }
        checks.push(SuiteCheck {
            name: format!("double-category laws over {}", base.name()),
            pass: failure.is_none(),
            detail: failure,
        });
    }
    SuiteReport { checks }
}

fn run_double_category_case(rng: &mut ChaCha8Rng, base: Base) -> Result<()> {
    let fail = |what: &str| Err(Error::LawViolation { structure: "double category", witness: what.into() });

    let x = random_objset(rng, "x", 5);
    let y = random_objset(rng, "y", 5);
    let z = random_objset(rng, "z", 5);
    let w = random_objset(rng, "w", 5);
    let s = random_matrix(rng, base, &x, &y);
    let t = random_matrix(rng, base, &y, &z);
    let r = random_matrix(rng, base, &z, &w);

    // Associativity and unit laws, exactly.
    let left = matrix::compose(&r, &matrix::compose(&t, &s)?)?;
    let right = matrix::compose(&matrix::compose(&r, &t)?, &s)?;
    if left != right {
        return fail("associativity");
    }
    if matrix::compose(&Matrix::identity(&y, base), &s)? != s {
        return fail("left unit");
    }
    if matrix::compose(&s, &Matrix::identity(&x, base))? != s {
        return fail("right unit");
    }

    // Functoriality of the tensor against composition.
    let s2 = random_matrix(rng, base, &x, &y);
    let t2 = random_matrix(rng, base, &y, &z);
    let tensored_then_composed =
        matrix::compose(&matrix::tensor(&t, &t2)?, &matrix::tensor(&s, &s2)?)?;
    let composed_then_tensored =
        matrix::tensor(&matrix::compose(&t, &s)?, &matrix::compose(&t2, &s2)?)?;
    if tensored_then_composed != composed_then_tensored {
        return fail("tensor functoriality");
    }
    let ids = matrix::tensor(&Matrix::identity(&x, base), &Matrix::identity(&z, base))?;
    if ids != Matrix::identity(&x.product(&z), base) {
        return fail("tensor of identities");
    }

    // Interchange on squares: horizontal and vertical composites of holding
    // cells hold. Holding cells are manufactured by pushing a matrix forward
    // along its boundary functions.
    let f = random_function(rng, &x, &z);
    let g = random_function(rng, &y, &w);
    let alpha = TwoCell::new(
        s.clone(),
        matrix::pushforward(&f, &g, &s)?,
        f.clone(),
        g.clone(),
    )?;
    if !alpha.holds() {
        return fail("cocartesian square must hold");
    }
    let v = random_objset(rng, "v", 5);
    let u = random_objset(rng, "u", 5);
    let s3 = random_matrix(rng, base, &y, &v);
    let h = random_function(rng, &v, &u);
    let beta =
        TwoCell::new(s3.clone(), matrix::pushforward(&g, &h, &s3)?, g.clone(), h.clone())?;
    let horizontal = TwoCell::compose_horizontal(&alpha, &beta)?;
    if !horizontal.holds() {
        return fail("horizontal composite of holding squares");
    }
    let f2 = random_function(rng, &z, &z);
    let g2 = random_function(rng, &w, &w);
    let gamma = TwoCell::new(
        alpha.target().clone(),
        matrix::pushforward(&f2, &g2, alpha.target())?,
        f2,
        g2,
    )?;
    let vertical = TwoCell::compose_vertical(&alpha, &gamma)?;
    if !vertical.holds() {
        return fail("vertical composite of holding squares");
    }
    Ok(())
}

/// Law reports for every shipped base instance.
pub fn base_law_suite() -> SuiteReport {
    let checks = crate::base::shipped_instances()
        .into_iter()
        .map(|b| {
            let report = crate::base::validate_base(&b);
            SuiteCheck {
                name: format!("base laws for {}", b.name()),
                pass: report.all_pass(),
                detail: if report.all_pass() { None } else { Some(report.to_string()) },
            }
        })
        .collect();
    SuiteReport { checks }
}

/// The exhaustive mate suite at the given sizes: all four globular
/// presentations of every square hold together, and the four hold-sets are
/// equinumerous with the square form.
pub fn mate_suite(base: Base, size: usize) -> Result<SuiteReport> {
    let x = ObjSet::new((0..size).map(|i| format!("x{i}")))?;
    let space = EnumerationSpace::matrices(base, x.clone(), x.clone());
    let mats: Vec<Matrix> =
        space.enumerate()?.into_iter().map(|c| c.matrix().clone()).collect();
    let fns = all_functions(&x, &x);
    let mut counts = [0usize; 5];
    for f in &fns {
        for g in &fns {
            for m in &mats {
                for n in &mats {
                    let data = MateData::new(m.clone(), n.clone(), f.clone(), g.clone())?;
                    let reference = data.holds(MateForm::Square)?;
                    for (slot, form) in MateForm::ALL.iter().enumerate() {
                        let held = data.holds(*form)?;
                        if held != reference {
                            return Ok(SuiteReport {
                                checks: vec![SuiteCheck {
                                    name: format!("mate suite over {}", base.name()),
                                    pass: false,
                                    detail: Some(format!("{form:?} disagrees with the square")),
                                }],
                            });
                        }
                        if held {
                            counts[slot] += 1;
                        }
                    }
                }
            }
        }
    }
    let pass = counts.iter().all(|&c| c == counts[0]);
    Ok(SuiteReport {
        checks: vec![SuiteCheck {
            name: format!("mate suite over {} (hold-set size {})", base.name(), counts[0]),
            pass,
            detail: if pass { None } else { Some(format!("{counts:?}")) },
        }],
    })
}
