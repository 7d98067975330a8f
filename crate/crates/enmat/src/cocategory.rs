//! Cocategories: the dual structures, square matrices supported on the
//! diagonal whose entries sit under the unit and under their own square.
//! Over a thin base the coidentity law forces every off-diagonal entry to
//! bottom, so a cocategory is a choice of idempotent-below-unit diagonal.
//! The machinery — pushforwards, the cofree construction, tensor — is
//! exercised in full regardless.

use crate::base::Base;
use crate::category::{LawWitness, StructureReport};
use crate::graph::{is_graph_morphism, tensor_graph, Graph};
use crate::matrix::{self, Matrix};
use crate::objset::{all_functions, exponent_size, ObjFun, ObjSet};
use crate::{Error, Result};

/// A validated cocategory.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocategory {
    graph: Graph,
}

impl Cocategory {
    pub fn new(graph: Graph) -> Result<Cocategory> {
        let report = check_cocategory(&graph)?;
        if !report.ok() {
            return Err(Error::LawViolation {
                structure: "cocategory",
                witness: report.witness_string(),
            });
        }
        Ok(Cocategory { graph })
    }

    /// The one-object cocategory with entry the base unit: the monoidal unit.
    pub fn unit(base: Base) -> Cocategory {
        Cocategory { graph: Graph::unit(base) }
    }

    /// The identity-matrix cocategory on an object set.
    pub fn discrete(objects: &ObjSet, base: Base) -> Cocategory {
        Cocategory { graph: Graph::discrete(objects, base) }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn objects(&self) -> &ObjSet {
        self.graph.objects()
    }

    pub fn mat(&self) -> &Matrix {
        self.graph.mat()
    }

    pub fn base(&self) -> Base {
        self.graph.base()
    }
}

/// Checks the two cocategory laws on a square graph:
/// cocomposition `C(x,z) ⊑ ⊕_y C(x,y) ⊗ C(y,z)` and coidentity
/// `C(x,y) ⊑ 1_X(x,y)`.
pub fn check_cocategory(graph: &Graph) -> Result<StructureReport> {
    let c = graph.mat();
    let base = graph.base();
    let n = graph.objects().len();
    let mut report = StructureReport::default();

    'cocomp: for x in 0..n {
        for z in 0..n {
            let mut acc = base.bottom();
            for y in 0..n {
                acc = base.join(acc, base.tensor(c.get(x, y), c.get(y, z))?)?;
            }
            if !base.cell_le(c.get(x, z), acc) {
                report.violations.push(LawWitness {
                    law: "cocomposition",
                    at: format!("({}, {})", graph.objects().name(x), graph.objects().name(z)),
                });
                break 'cocomp;
            }
        }
    }
    let identity = Matrix::identity(graph.objects(), base);
    'coid: for x in 0..n {
        for y in 0..n {
            if !base.cell_le(c.get(x, y), identity.get(x, y)) {
                report.violations.push(LawWitness {
                    law: "coidentity",
                    at: format!("({}, {})", graph.objects().name(x), graph.objects().name(y)),
                });
                break 'coid;
            }
        }
    }
    Ok(report)
}

/// The cofree cocategory on a graph: the greatest fixpoint of
/// `Φ(C) = G ∧ 1_X ∧ (C ∘ C)`, iterated downward from `G ∧ 1_X`. Needs a
/// closed base; the finite carrier guarantees the descent stabilizes, and
/// without one `NotClosed` is raised before any iteration.
pub fn cofree_cocategory(graph: &Graph) -> Result<Cocategory> {
    let base = graph.base();
    if !base.is_closed() || base.carrier().is_none() {
        return Err(Error::NotClosed(base.name()));
    }
    let identity = Matrix::identity(graph.objects(), base);
    let start = Matrix::meet(graph.mat(), &identity)?;
    let mut current = start.clone();
    loop {
        let next = Matrix::meet(&start, &matrix::compose(&current, &current)?)?;
        if next == current {
            break;
        }
        current = next;
    }
    Cocategory::new(Graph::new(current)?)
}

/// Corestriction of a cocategory along a function: `f_* C f^*` is again a
/// cocategory over idempotent bases.
pub fn pushforward_cocategory(f: &ObjFun, c: &Cocategory) -> Result<Cocategory> {
    if f.src() != c.objects() {
        return Err(Error::ObjSetMismatch(
            "pushforward: function must start at the cocategory's objects".into(),
        ));
    }
    Cocategory::new(Graph::new(matrix::pushforward(f, f, c.mat())?)?)
}

/// Tensor of cocategories over the product object set; the laws are
/// re-validated (the cocomposition of the tensor reorders factors, which is
/// where commutativity of the base comes in).
pub fn tensor_cocategory(c: &Cocategory, d: &Cocategory) -> Result<Cocategory> {
    Cocategory::new(tensor_graph(&c.graph, &d.graph)?)
}

/// Whether `f` is a cofunctor: again the underlying graph-morphism fact.
pub fn is_cofunctor(c: &Cocategory, d: &Cocategory, f: &ObjFun) -> Result<bool> {
    Ok(is_graph_morphism(&c.graph, &d.graph, f)?.holds)
}

/// All cofunctors `c → d`, in exponent order.
pub fn count_cofunctors(c: &Cocategory, d: &Cocategory, cap: usize) -> Result<Vec<ObjFun>> {
    let size = exponent_size(c.objects(), d.objects());
    if size > cap as u128 {
        return Err(Error::ExponentCapExceeded { size, cap });
    }
    let mut found = Vec::new();
    for f in all_functions(c.objects(), d.objects()) {
        if is_cofunctor(c, d, &f)? {
            found.push(f);
        }
    }
    Ok(found)
}

/// Every cocategory on the given objects over a finite base, by exhausting
/// diagonals and keeping the lawful ones. Off-diagonal entries are bottom by
/// the coidentity law, so diagonals are all that vary.
pub fn all_cocategories(objects: &ObjSet, base: Base) -> Result<Vec<Cocategory>> {
    let carrier = base
        .carrier()
        .ok_or_else(|| Error::InfiniteCarrier(base.name()))?;
    let n = objects.len();
    let total = (carrier.len() as u128).pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut m = Matrix::bottom(objects.clone(), objects.clone(), base);
        for i in 0..n {
            m.set(i, i, carrier[(rest % carrier.len() as u128) as usize]);
            rest /= carrier.len() as u128;
        }
        let g = Graph::new(m)?;
        if check_cocategory(&g)?.ok() {
            out.push(Cocategory { graph: g });
        }
    }
    Ok(out)
}
