//! Categories weighted in a base: square matrices whose entries are
//! reflexive (unit under the diagonal) and transitive (composites under the
//! entries). Over the boolean base these are preorders; over the tropical
//! base, generalized metric spaces.

use crate::base::Base;
use crate::graph::{is_graph_morphism, tensor_graph, Graph};
use crate::matrix::{self, Matrix};
use crate::objset::{all_functions, exponent_size, ObjFun, ObjSet};
use crate::{Error, Result};

/// One violated law with its first witness.
#[derive(Clone, Debug)]
pub struct LawWitness {
    pub law: &'static str,
    pub at: String,
}

/// Report from `check_category` / `check_cocategory`.
#[derive(Clone, Debug, Default)]
pub struct StructureReport {
    pub violations: Vec<LawWitness>,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn witness_string(&self) -> String {
        self.violations
            .iter()
            .map(|w| format!("{} at {}", w.law, w.at))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// A validated category.
#[derive(Clone, Debug, PartialEq)]
pub struct Category {
    graph: Graph,
}

impl Category {
    pub fn new(graph: Graph) -> Result<Category> {
        let report = check_category(&graph)?;
        if !report.ok() {
            return Err(Error::LawViolation {
                structure: "category",
                witness: report.witness_string(),
            });
        }
        Ok(Category { graph })
    }

    /// The discrete category on an object set.
    pub fn discrete(objects: &ObjSet, base: Base) -> Category {
        Category { graph: Graph::discrete(objects, base) }
    }

    /// The one-object category with hom the base unit.
    pub fn unit(base: Base) -> Category {
        Category { graph: Graph::unit(base) }
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

/// Checks the two category laws on a square graph:
/// composition `⊕_y A(x,y) ⊗ A(y,z) ⊑ A(x,z)` and identity
/// `unit ⊑ A(x,x)`.
pub fn check_category(graph: &Graph) -> Result<StructureReport> {
    let a = graph.mat();
    let base = graph.base();
    let n = graph.objects().len();
    let mut report = StructureReport::default();

    'comp: for x in 0..n {
        for z in 0..n {
            let mut acc = base.bottom();
            for y in 0..n {
                acc = base.join(acc, base.tensor(a.get(x, y), a.get(y, z))?)?;
            }
            if !base.cell_le(acc, a.get(x, z)) {
                report.violations.push(LawWitness {
                    law: "composition",
                    at: format!("({}, {})", graph.objects().name(x), graph.objects().name(z)),
                });
                break 'comp;
            }
        }
    }
    for x in 0..n {
        if !base.cell_le(base.unit(), a.get(x, x)) {
            report.violations.push(LawWitness {
                law: "identity",
                at: graph.objects().name(x).to_string(),
            });
            break;
        }
    }
    Ok(report)
}

/// The free category on a graph: the least fixpoint of
/// `C ↦ identity ⊕ (G ∘ C)`, i.e. the join of all matrix powers of `G`
/// with the identity — reachability over the boolean base, all-pairs
/// shortest paths over the tropical one.
///
/// Iteration ascends from the bottom matrix. On a finite idempotent base the
/// ascent stabilizes on its own; otherwise the iteration cap applies
/// (default `4·|X|²`), and hitting it — or overflowing the counting base —
/// reports `NonConvergent`, the expected outcome for counting weights on a
/// cyclic graph.
pub fn free_category(graph: &Graph) -> Result<Category> {
    free_category_capped(graph, None)
}

pub fn free_category_capped(graph: &Graph, max_iter: Option<usize>) -> Result<Category> {
    let base = graph.base();
    let objects = graph.objects();
    let n = objects.len();
    let cap = max_iter.unwrap_or_else(|| (4 * n * n).max(4));
    let uncapped = max_iter.is_none() && base.is_idempotent() && base.carrier().is_some();
    let identity = Matrix::identity(objects, base);

    let mut current = Matrix::bottom(objects.clone(), objects.clone(), base);
    let mut iterations = 0usize;
    loop {
        let next = match matrix::compose(graph.mat(), &current)
            .and_then(|gc| Matrix::join(&identity, &gc))
        {
            Ok(m) => m,
            // Unbounded growth of counting weights is divergence, not a fault.
            Err(Error::Overflow(_)) => return Err(Error::NonConvergent { iterations }),
            Err(e) => return Err(e),
        };
        if next == current {
            break;
        }
        current = next;
        iterations += 1;
        if !uncapped && iterations > cap {
            return Err(Error::NonConvergent { iterations });
        }
    }
    Category::new(Graph::new(current)?)
}

/// Restriction of a category along a function: `f^* B f_*` is again a
/// category.
pub fn pullback_category(f: &ObjFun, b: &Category) -> Result<Category> {
    if f.dst() != b.objects() {
        return Err(Error::ObjSetMismatch(
            "pullback: function must land in the category's objects".into(),
        ));
    }
    Category::new(Graph::new(matrix::restrict(f, f, b.mat())?)?)
}

/// Tensor of categories over the product object set; the laws are
/// re-validated on the result.
pub fn tensor_category(a: &Category, b: &Category) -> Result<Category> {
    Category::new(tensor_graph(&a.graph, &b.graph)?)
}

/// Whether `f` is a functor between the categories: over a thin base the
/// functor axioms are exactly the graph-morphism order fact.
pub fn is_functor(a: &Category, b: &Category, f: &ObjFun) -> Result<bool> {
    Ok(is_graph_morphism(&a.graph, &b.graph, f)?.holds)
}

/// All functors `a → b`, in exponent order.
pub fn count_functors(a: &Category, b: &Category, cap: usize) -> Result<Vec<ObjFun>> {
    let size = exponent_size(a.objects(), b.objects());
    if size > cap as u128 {
        return Err(Error::ExponentCapExceeded { size, cap });
    }
    let mut found = Vec::new();
    for f in all_functions(a.objects(), b.objects()) {
        if is_functor(a, b, &f)? {
            found.push(f);
        }
    }
    Ok(found)
}
