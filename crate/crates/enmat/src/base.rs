//! Thin monoidal bases: commutative semirings and quantales whose elements
//! weight the matrices everywhere else in this crate.
//!
//! A base carries two commutative monoids on one carrier, `join`/`bottom` and
//! `tensor`/`unit`, with tensor distributing over join and annihilating
//! bottom. When join is idempotent the carrier is a poset under
//! `a ⊑ b  ⇔  join(a, b) = b`; when the carrier is finite and residuals
//! exist the base is *closed* and also supports `meet`, `top` and
//! `residual` (the largest `c` with `tensor(a, c) ⊑ b`).

use std::fmt;

use rand::Rng;

use crate::{Error, Result};

/// A tropical weight: an exact integer or the absorbing infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Trop {
    Fin(i64),
    Inf,
}

/// One element of a base's carrier. Each variant belongs to exactly one
/// family of bases; equality is bit-exact and canonical.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    Bool(bool),
    Trop(Trop),
    Nat(u64),
    /// A level of a finite chain (plain or Łukasiewicz), counted from 0.
    Level(u8),
    /// A subset of the two-element group, as a 2-bit mask.
    Mask(u8),
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Bool(b) => write!(f, "{}", if *b { 1 } else { 0 }),
            Elem::Trop(Trop::Fin(n)) => write!(f, "{n}"),
            Elem::Trop(Trop::Inf) => write!(f, "inf"),
            Elem::Nat(n) => write!(f, "{n}"),
            Elem::Level(k) => write!(f, "{k}"),
            Elem::Mask(m) => {
                let mut parts = Vec::new();
                if m & 1 != 0 {
                    parts.push("0");
                }
                if m & 2 != 0 {
                    parts.push("1");
                }
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BaseKind {
    /// Two-element Boolean algebra: join = or, tensor = and.
    Boolean,
    /// Min-plus weights over the integers with an infinity sentinel.
    Tropical,
    /// Counting weights: join = +, tensor = ×. Not idempotent.
    Nat,
    /// An n-element chain with tensor = min (a frame).
    Chain(u8),
    /// An n-element chain with Łukasiewicz tensor max(a + b - top, 0).
    Lukasiewicz(u8),
    /// The powerset of the two-element group, tensor induced by addition mod 2.
    PowersetZ2,
}

/// A shipped base instance. Values are plain `Copy` data and every operation
/// is pure, so bases can be shared freely across threads.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Base {
    kind: BaseKind,
}

const MAX_CHAIN: u8 = 64;

impl Base {
    pub fn boolean() -> Base {
        Base { kind: BaseKind::Boolean }
    }

    pub fn tropical() -> Base {
        Base { kind: BaseKind::Tropical }
    }

    pub fn nat() -> Base {
        Base { kind: BaseKind::Nat }
    }

    pub fn chain(n: u8) -> Result<Base> {
        if n == 0 || n > MAX_CHAIN {
            return Err(Error::InvalidObjSet(format!(
                "chain size must be between 1 and {MAX_CHAIN}, got {n}"
            )));
        }
        Ok(Base { kind: BaseKind::Chain(n) })
    }

    pub fn lukasiewicz(n: u8) -> Result<Base> {
        if n == 0 || n > MAX_CHAIN {
            return Err(Error::InvalidObjSet(format!(
                "chain size must be between 1 and {MAX_CHAIN}, got {n}"
            )));
        }
        Ok(Base { kind: BaseKind::Lukasiewicz(n) })
    }

    pub fn powerset_z2() -> Base {
        Base { kind: BaseKind::PowersetZ2 }
    }

    /// Parses a base name: `boolean`, `tropical`, `nat`, `chain<n>`,
    /// `lukasiewicz<n>` (also accepted without angle brackets), `pz2`.
    pub fn from_name(name: &str) -> Result<Base> {
        let parse_n = |rest: &str| -> Result<u8> {
            let digits = rest.strip_prefix('<').and_then(|r| r.strip_suffix('>')).unwrap_or(rest);
            digits
                .parse::<u8>()
                .map_err(|_| Error::InvalidObjSet(format!("bad chain size in base name: {name}")))
        };
        match name {
            "boolean" => Ok(Base::boolean()),
            "tropical" => Ok(Base::tropical()),
            "nat" => Ok(Base::nat()),
            "pz2" => Ok(Base::powerset_z2()),
            _ if name.starts_with("lukasiewicz") => {
                Base::lukasiewicz(parse_n(&name["lukasiewicz".len()..])?)
            }
            _ if name.starts_with("chain") => Base::chain(parse_n(&name["chain".len()..])?),
            _ => Err(Error::InvalidObjSet(format!("unknown base: {name}"))),
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            BaseKind::Boolean => "boolean".into(),
            BaseKind::Tropical => "tropical".into(),
            BaseKind::Nat => "nat".into(),
            BaseKind::Chain(n) => format!("chain<{n}>"),
            BaseKind::Lukasiewicz(n) => format!("lukasiewicz<{n}>"),
            BaseKind::PowersetZ2 => "pz2".into(),
        }
    }

    pub fn kind(&self) -> BaseKind {
        self.kind
    }

    pub fn bottom(&self) -> Elem {
        match self.kind {
            BaseKind::Boolean => Elem::Bool(false),
            BaseKind::Tropical => Elem::Trop(Trop::Inf),
            BaseKind::Nat => Elem::Nat(0),
            BaseKind::Chain(_) | BaseKind::Lukasiewicz(_) => Elem::Level(0),
            BaseKind::PowersetZ2 => Elem::Mask(0),
        }
    }

    pub fn unit(&self) -> Elem {
        match self.kind {
            BaseKind::Boolean => Elem::Bool(true),
            BaseKind::Tropical => Elem::Trop(Trop::Fin(0)),
            BaseKind::Nat => Elem::Nat(1),
            BaseKind::Chain(n) | BaseKind::Lukasiewicz(n) => Elem::Level(n - 1),
            BaseKind::PowersetZ2 => Elem::Mask(0b01),
        }
    }

    pub fn join(&self, a: Elem, b: Elem) -> Result<Elem> {
        match (self.kind, a, b) {
            (BaseKind::Boolean, Elem::Bool(x), Elem::Bool(y)) => Ok(Elem::Bool(x | y)),
            (BaseKind::Tropical, Elem::Trop(x), Elem::Trop(y)) => Ok(Elem::Trop(match (x, y) {
                (Trop::Inf, t) | (t, Trop::Inf) => t,
                (Trop::Fin(p), Trop::Fin(q)) => Trop::Fin(p.min(q)),
            })),
            (BaseKind::Nat, Elem::Nat(x), Elem::Nat(y)) => x
                .checked_add(y)
                .map(Elem::Nat)
                .ok_or_else(|| Error::Overflow(self.name())),
            (BaseKind::Chain(_) | BaseKind::Lukasiewicz(_), Elem::Level(x), Elem::Level(y)) => {
                Ok(Elem::Level(x.max(y)))
            }
            (BaseKind::PowersetZ2, Elem::Mask(x), Elem::Mask(y)) => Ok(Elem::Mask(x | y)),
            _ => panic!("element {a:?}/{b:?} does not belong to base {}", self.name()),
        }
    }

    pub fn tensor(&self, a: Elem, b: Elem) -> Result<Elem> {
        match (self.kind, a, b) {
            (BaseKind::Boolean, Elem::Bool(x), Elem::Bool(y)) => Ok(Elem::Bool(x & y)),
            (BaseKind::Tropical, Elem::Trop(x), Elem::Trop(y)) => Ok(Elem::Trop(match (x, y) {
                (Trop::Inf, _) | (_, Trop::Inf) => Trop::Inf,
                (Trop::Fin(p), Trop::Fin(q)) => {
                    Trop::Fin(p.checked_add(q).ok_or_else(|| Error::Overflow(self.name()))?)
                }
            })),
            (BaseKind::Nat, Elem::Nat(x), Elem::Nat(y)) => x
                .checked_mul(y)
                .map(Elem::Nat)
                .ok_or_else(|| Error::Overflow(self.name())),
            (BaseKind::Chain(_), Elem::Level(x), Elem::Level(y)) => Ok(Elem::Level(x.min(y))),
            (BaseKind::Lukasiewicz(n), Elem::Level(x), Elem::Level(y)) => {
                let top = (n - 1) as i32;
                Ok(Elem::Level((x as i32 + y as i32 - top).max(0) as u8))
            }
            (BaseKind::PowersetZ2, Elem::Mask(x), Elem::Mask(y)) => {
                let mut out = 0u8;
                for s in 0..2u8 {
                    for t in 0..2u8 {
                        if x & (1 << s) != 0 && y & (1 << t) != 0 {
                            out |= 1 << (s ^ t);
                        }
                    }
                }
                Ok(Elem::Mask(out))
            }
            _ => panic!("element {a:?}/{b:?} does not belong to base {}", self.name()),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        !matches!(self.kind, BaseKind::Nat)
    }

    /// Exhaustive carrier in canonical ascending order, for finite bases.
    pub fn carrier(&self) -> Option<Vec<Elem>> {
        match self.kind {
            BaseKind::Boolean => Some(vec![Elem::Bool(false), Elem::Bool(true)]),
            BaseKind::Chain(n) | BaseKind::Lukasiewicz(n) => {
                Some((0..n).map(Elem::Level).collect())
            }
            BaseKind::PowersetZ2 => Some((0..4).map(Elem::Mask).collect()),
            BaseKind::Tropical | BaseKind::Nat => None,
        }
    }

    /// True when meets, top and residuals are available. In this crate that
    /// is exactly the finite idempotent instances.
    pub fn is_closed(&self) -> bool {
        matches!(
            self.kind,
            BaseKind::Boolean
                | BaseKind::Chain(_)
                | BaseKind::Lukasiewicz(_)
                | BaseKind::PowersetZ2
        )
    }

    /// The canonical order `a ⊑ b ⇔ join(a, b) = b`. Only idempotent bases
    /// carry one; for the counting base only equality 2-cells exist and this
    /// reports `NoOrder`.
    pub fn order(&self, a: Elem, b: Elem) -> Result<bool> {
        if !self.is_idempotent() {
            return Err(Error::NoOrder(self.name()));
        }
        Ok(self.join(a, b)? == b)
    }

    /// Whether a 2-cell component `a → b` exists in the base. For idempotent
    /// bases this is the canonical order. For the counting base the carrier
    /// stands for finite sets, where a function `a → b` exists exactly when
    /// `a` is empty or `b` is inhabited.
    pub fn cell_le(&self, a: Elem, b: Elem) -> bool {
        if self.is_idempotent() {
            self.join(a, b).map(|j| j == b).unwrap_or(false)
        } else {
            a == self.bottom() || b != self.bottom()
        }
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Result<Elem> {
        match (self.kind, a, b) {
            (BaseKind::Boolean, Elem::Bool(x), Elem::Bool(y)) => Ok(Elem::Bool(x & y)),
            (BaseKind::Chain(_) | BaseKind::Lukasiewicz(_), Elem::Level(x), Elem::Level(y)) => {
                Ok(Elem::Level(x.min(y)))
            }
            (BaseKind::PowersetZ2, Elem::Mask(x), Elem::Mask(y)) => Ok(Elem::Mask(x & y)),
            _ => Err(Error::NotClosed(self.name())),
        }
    }

    pub fn top(&self) -> Result<Elem> {
        match self.kind {
            BaseKind::Boolean => Ok(Elem::Bool(true)),
            BaseKind::Chain(n) | BaseKind::Lukasiewicz(n) => Ok(Elem::Level(n - 1)),
            BaseKind::PowersetZ2 => Ok(Elem::Mask(0b11)),
            _ => Err(Error::NotClosed(self.name())),
        }
    }

    /// The residual `[a, b]`: the largest `c` with `tensor(a, c) ⊑ b`,
    /// computed as the join of all such carrier elements.
    pub fn residual(&self, a: Elem, b: Elem) -> Result<Elem> {
        if !self.is_closed() {
            return Err(Error::NotClosed(self.name()));
        }
        let carrier = self.carrier().expect("closed bases are finite");
        let mut acc = self.bottom();
        for c in carrier {
            if self.cell_le(self.tensor(a, c)?, b) {
                acc = self.join(acc, c)?;
            }
        }
        Ok(acc)
    }

    /// Draws a carrier element; used by the randomized law checks on
    /// infinite bases and by the randomized suites. Magnitudes are kept
    /// small so products stay exact.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Elem {
        match self.kind {
            BaseKind::Boolean => Elem::Bool(rng.gen_bool(0.5)),
            BaseKind::Tropical => {
                if rng.gen_bool(0.15) {
                    Elem::Trop(Trop::Inf)
                } else {
                    Elem::Trop(Trop::Fin(rng.gen_range(-20..=20)))
                }
            }
            BaseKind::Nat => Elem::Nat(rng.gen_range(0..=6)),
            BaseKind::Chain(n) | BaseKind::Lukasiewicz(n) => Elem::Level(rng.gen_range(0..n)),
            BaseKind::PowersetZ2 => Elem::Mask(rng.gen_range(0..4)),
        }
    }
}

/// Outcome of checking one algebraic law.
#[derive(Clone, Debug)]
pub struct LawCheck {
    pub law: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Law report for a whole base; failures are entries, never errors.
#[derive(Clone, Debug)]
pub struct BaseLawReport {
    pub base: String,
    pub exhaustive: bool,
    pub checks: Vec<LawCheck>,
}

impl BaseLawReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for BaseLawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "base {} ({})",
            self.base,
            if self.exhaustive { "exhaustive" } else { "randomized" }
        )?;
        for c in &self.checks {
            match (&c.pass, &c.witness) {
                (true, _) => writeln!(f, "  pass  {}", c.law)?,
                (false, Some(w)) => writeln!(f, "  FAIL  {} at {}", c.law, w)?,
                (false, None) => writeln!(f, "  FAIL  {}", c.law)?,
            }
        }
        Ok(())
    }
}

/// Seed for the randomized law checks on infinite carriers; recorded here so
/// reruns are reproducible.
pub const LAW_SAMPLE_SEED: u64 = 0x5eed_0001;

pub(crate) struct RawBase<'a> {
    pub join: &'a dyn Fn(Elem, Elem) -> Result<Elem>,
    pub tensor: &'a dyn Fn(Elem, Elem) -> Result<Elem>,
    pub bottom: Elem,
    pub unit: Elem,
    pub idempotent: bool,
    pub closed: Option<RawClosed<'a>>,
}

pub(crate) struct RawClosed<'a> {
    pub meet: &'a dyn Fn(Elem, Elem) -> Result<Elem>,
    pub top: Elem,
    pub residual: &'a dyn Fn(Elem, Elem) -> Result<Elem>,
}

/// Runs every law over the provided element list (the carrier, or samples),
/// collecting one `LawCheck` per law with the first counterexample found.
pub(crate) fn run_law_checks(ops: &RawBase<'_>, elems: &[Elem]) -> Vec<LawCheck> {
    let mut out = Vec::new();
    let le = |a: Elem, b: Elem| -> bool {
        if ops.idempotent {
            (ops.join)(a, b).map(|j| j == b).unwrap_or(false)
        } else {
            a == b
        }
    };

    let mut check3 = |law: &'static str, f: &dyn Fn(Elem, Elem, Elem) -> Result<bool>| {
        let mut witness = None;
        'search: for &a in elems {
            for &b in elems {
                for &c in elems {
                    if !f(a, b, c).unwrap_or(false) {
                        witness = Some(format!("(a={a}, b={b}, c={c})"));
                        break 'search;
                    }
                }
            }
        }
        out.push(LawCheck { law, pass: witness.is_none(), witness });
    };

    check3("join associativity", &|a, b, c| {
        Ok((ops.join)((ops.join)(a, b)?, c)? == (ops.join)(a, (ops.join)(b, c)?)?)
    });
    check3("join commutativity", &|a, b, _| Ok((ops.join)(a, b)? == (ops.join)(b, a)?));
    check3("join bottom unit", &|a, _, _| Ok((ops.join)(a, ops.bottom)? == a));
    check3("tensor associativity", &|a, b, c| {
        Ok((ops.tensor)((ops.tensor)(a, b)?, c)? == (ops.tensor)(a, (ops.tensor)(b, c)?)?)
    });
    check3("tensor commutativity", &|a, b, _| Ok((ops.tensor)(a, b)? == (ops.tensor)(b, a)?));
    check3("tensor unit", &|a, _, _| Ok((ops.tensor)(a, ops.unit)? == a));
    check3("distributivity (left)", &|a, b, c| {
        Ok((ops.tensor)(a, (ops.join)(b, c)?)?
            == (ops.join)((ops.tensor)(a, b)?, (ops.tensor)(a, c)?)?)
    });
    check3("distributivity (right)", &|a, b, c| {
        Ok((ops.tensor)((ops.join)(b, c)?, a)?
            == (ops.join)((ops.tensor)(b, a)?, (ops.tensor)(c, a)?)?)
    });
    check3("annihilation", &|a, _, _| Ok((ops.tensor)(a, ops.bottom)? == ops.bottom));

    if ops.idempotent {
        check3("join idempotence", &|a, _, _| Ok((ops.join)(a, a)? == a));
        check3("order antisymmetry", &|a, b, _| Ok(!(le(a, b) && le(b, a) && a != b)));
        check3("order transitivity", &|a, b, c| Ok(!(le(a, b) && le(b, c)) || le(a, c)));
        check3("join is least upper bound", &|a, b, c| {
            let j = (ops.join)(a, b)?;
            let upper = le(a, j) && le(b, j);
            let least = !(le(a, c) && le(b, c)) || le(j, c);
            Ok(upper && least)
        });
    }

    if let Some(closed) = &ops.closed {
        check3("residuation", &|a, b, c| {
            let r = (closed.residual)(a, b)?;
            Ok(le((ops.tensor)(a, c)?, b) == le(c, r))
        });
        check3("meet is greatest lower bound", &|a, b, c| {
            let m = (closed.meet)(a, b)?;
            let lower = le(m, a) && le(m, b);
            let greatest = !(le(c, a) && le(c, b)) || le(c, m);
            Ok(lower && greatest)
        });
        check3("top", &|a, _, _| Ok(le(a, closed.top)));
    }

    out
}

/// Checks every law of the base: exhaustively when the carrier is finite,
/// otherwise over 1000 sampled triples with a recorded seed.
pub fn validate_base(base: &Base) -> BaseLawReport {
    let (elems, exhaustive) = match base.carrier() {
        Some(c) => (c, true),
        None => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(LAW_SAMPLE_SEED);
            let mut v: Vec<Elem> = (0..14).map(|_| base.sample(&mut rng)).collect();
            v.push(base.bottom());
            v.push(base.unit());
            (v, false)
        }
    };
    // 16 sampled elements give 4096 triples per law, comfortably past the
    // 1000 random cases the contract asks for.
    let join = |a, b| base.join(a, b);
    let tensor = |a, b| base.tensor(a, b);
    let meet = |a, b| base.meet(a, b);
    let residual = |a, b| base.residual(a, b);
    let closed = if base.is_closed() {
        Some(RawClosed {
            meet: &meet,
            top: base.top().expect("closed base has a top"),
            residual: &residual,
        })
    } else {
        None
    };
    let ops = RawBase {
        join: &join,
        tensor: &tensor,
        bottom: base.bottom(),
        unit: base.unit(),
        idempotent: base.is_idempotent(),
        closed,
    };
    BaseLawReport { base: base.name(), exhaustive, checks: run_law_checks(&ops, &elems) }
}

/// All shipped instances at their test sizes.
pub fn shipped_instances() -> Vec<Base> {
    vec![
        Base::boolean(),
        Base::tropical(),
        Base::nat(),
        Base::chain(2).unwrap(),
        Base::chain(3).unwrap(),
        Base::lukasiewicz(3).unwrap(),
        Base::powerset_z2(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_laws_pass() {
        let report = validate_base(&Base::boolean());
        assert!(report.exhaustive);
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn all_shipped_instances_pass_laws() {
        for base in shipped_instances() {
            let report = validate_base(&base);
            assert!(report.all_pass(), "{report}");
        }
    }

    #[test]
    fn tropical_distributivity_randomized() {
        // min-plus distributivity over 1000 random triples, checked directly.
        use rand::SeedableRng;
        let base = Base::tropical();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let (a, b, c) = (base.sample(&mut rng), base.sample(&mut rng), base.sample(&mut rng));
            let lhs = base.tensor(a, base.join(b, c).unwrap()).unwrap();
            let rhs = base
                .join(base.tensor(a, b).unwrap(), base.tensor(a, c).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(validate_base(&base).all_pass());
    }

    #[test]
    fn broken_base_fails_annihilation_with_witness() {
        let base = Base::boolean();
        let join = |a, b| base.join(a, b);
        // tensor(a, bottom) = unit breaks annihilation.
        let tensor = |a: Elem, b: Elem| -> Result<Elem> {
            if b == base.bottom() || a == base.bottom() {
                Ok(base.unit())
            } else {
                base.tensor(a, b)
            }
        };
        let ops = RawBase {
            join: &join,
            tensor: &tensor,
            bottom: base.bottom(),
            unit: base.unit(),
            idempotent: true,
            closed: None,
        };
        let checks = run_law_checks(&ops, &base.carrier().unwrap());
        let ann = checks.iter().find(|c| c.law == "annihilation").unwrap();
        assert!(!ann.pass);
        assert!(ann.witness.is_some());
    }

    #[test]
    fn residual_boolean() {
        let b = Base::boolean();
        let (t, f) = (Elem::Bool(true), Elem::Bool(false));
        assert_eq!(b.residual(t, f).unwrap(), f);
        assert_eq!(b.residual(f, f).unwrap(), t);
    }

    #[test]
    fn residual_lukasiewicz_3chain() {
        // {0, ½, 1} as levels {0, 1, 2}: residual(½, 0) = ½.
        let b = Base::lukasiewicz(3).unwrap();
        assert_eq!(b.residual(Elem::Level(1), Elem::Level(0)).unwrap(), Elem::Level(1));
    }

    #[test]
    fn residual_unit_is_identity() {
        for base in shipped_instances().into_iter().filter(Base::is_closed) {
            for b in base.carrier().unwrap() {
                assert_eq!(base.residual(base.unit(), b).unwrap(), b);
            }
        }
    }

    #[test]
    fn residual_not_closed() {
        assert!(matches!(
            Base::tropical().residual(Elem::Trop(Trop::Fin(1)), Elem::Trop(Trop::Fin(0))),
            Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn canonical_order_examples() {
        let b = Base::boolean();
        assert!(b.order(Elem::Bool(false), Elem::Bool(true)).unwrap());

        // Smaller distance is larger in the path order.
        let t = Base::tropical();
        assert!(t.order(Elem::Trop(Trop::Fin(5)), Elem::Trop(Trop::Fin(3))).unwrap());
        assert!(!t.order(Elem::Trop(Trop::Fin(3)), Elem::Trop(Trop::Fin(5))).unwrap());

        assert!(matches!(Base::nat().order(Elem::Nat(2), Elem::Nat(3)), Err(Error::NoOrder(_))));
    }

    #[test]
    fn residuation_adjointness_exhaustive() {
        // tensor(a, c) ⊑ b  ⇔  c ⊑ residual(a, b), for every finite closed base.
        for base in shipped_instances().into_iter().filter(Base::is_closed) {
            let carrier = base.carrier().unwrap();
            for &a in &carrier {
                for &b in &carrier {
                    let r = base.residual(a, b).unwrap();
                    for &c in &carrier {
                        let lhs = base.order(base.tensor(a, c).unwrap(), b).unwrap();
                        let rhs = base.order(c, r).unwrap();
                        assert_eq!(lhs, rhs, "base {} a={a} b={b} c={c}", base.name());
                    }
                }
            }
        }
    }

    #[test]
    fn base_names_round_trip() {
        for base in shipped_instances() {
            assert_eq!(Base::from_name(&base.name()).unwrap(), base);
        }
        assert_eq!(Base::from_name("chain3").unwrap(), Base::chain(3).unwrap());
    }

    #[test]
    fn nat_overflow_is_reported() {
        let b = Base::nat();
        assert!(matches!(b.tensor(Elem::Nat(u64::MAX), Elem::Nat(2)), Err(Error::Overflow(_))));
        assert!(matches!(b.join(Elem::Nat(u64::MAX), Elem::Nat(1)), Err(Error::Overflow(_))));
    }
}
