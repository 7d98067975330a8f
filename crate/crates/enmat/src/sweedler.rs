//! The convolution category, the generalized Sweedler hom, and the
//! executable shape of the enrichment theorems.
//!
//! For a cocategory `C` and category `B`, the convolution `K(C, B)` lives on
//! the function set `ob B ^ ob C` with hom-entries the meet of residuals
//! `[C(x,x'), B(sx, kx')]`. The hom `T(A, B)` is constructed as the cofree
//! cocategory on the convolution graph of `A` and `B`: over a thin closed
//! base a functor `A → K(C, B)` unwinds to exactly the measuring
//! inequalities, which are monotone in a candidate cocategory's entries, so
//! the largest solution is that greatest fixpoint. The adjunction bijection
//! it must satisfy is checked exhaustively by the tests rather than assumed.

use crate::category::{is_functor, Category};
use crate::cocategory::{cofree_cocategory, is_cofunctor, Cocategory};
use crate::graph::hom_graph;
use crate::objset::{all_functions, exponent_objset, ObjFun};
use crate::{Error, Result};

/// The convolution category `K(C, B)` on the function set `ob B ^ ob C`.
/// Its laws follow from residuation plus the cocategory laws of `C`; they
/// are re-verified on construction.
pub fn convolution(c: &Cocategory, b: &Category, cap: usize) -> Result<Category> {
    Category::new(hom_graph(c.graph(), b.graph(), cap)?)
}

/// The generalized Sweedler hom `T(A, B)`: the cofree cocategory on the
/// convolution graph of `A` and `B`, with objects exactly the function set
/// `ob B ^ ob A`.
pub fn sweedler_hom(a: &Category, b: &Category, cap: usize) -> Result<Cocategory> {
    let convolution_graph = hom_graph(a.graph(), b.graph(), cap)?;
    let t = cofree_cocategory(&convolution_graph)?;
    debug_assert_eq!(t.objects(), &exponent_objset(a.objects(), b.objects()));
    Ok(t)
}

/// The elementwise content of a functor `A → K(C, B)`: `g` assigns to each
/// object of `A` a function `ob C → ob B`, and measuring demands
/// `C(c,c') ⊗ A(x,x') ⊑ B(g(x)(c), g(x')(c'))` throughout. Computed both
/// directly and as the functor condition into the convolution category; the
/// two routes must agree.
pub fn measuring_check(
    c: &Cocategory,
    a: &Category,
    b: &Category,
    g: &ObjFun,
    cap: usize,
) -> Result<bool> {
    let functions = exponent_objset(c.objects(), b.objects());
    if g.src() != a.objects() || g.dst() != &functions {
        return Err(Error::ObjSetMismatch(
            "measuring assignment must map the category's objects into the function set".into(),
        ));
    }
    let assignments = all_functions(c.objects(), b.objects());
    let base = a.base();

    let mut direct = true;
    'outer: for x in 0..a.objects().len() {
        for x2 in 0..a.objects().len() {
            let gx = &assignments[g.apply(x)];
            let gx2 = &assignments[g.apply(x2)];
            for cc in 0..c.objects().len() {
                for cc2 in 0..c.objects().len() {
                    let lhs = base.tensor(c.mat().get(cc, cc2), a.mat().get(x, x2))?;
                    let rhs = b.mat().get(gx.apply(cc), gx2.apply(cc2));
                    if !base.cell_le(lhs, rhs) {
                        direct = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    // The route through the convolution category needs residuals, so it is
    // only available (and only checked) over closed bases.
    if base.is_closed() {
        let via_convolution = is_functor(a, &convolution(c, b, cap)?, g)?;
        assert_eq!(direct, via_convolution, "measuring routes must agree");
    }
    Ok(direct)
}

/// One adjunction table: the functors into the cotensor, the cofunctors
/// into the hom, and the verified transpose pairing between them.
#[derive(Clone, Debug)]
pub struct AdjunctionTable {
    pub functors: Vec<ObjFun>,
    pub cofunctors: Vec<ObjFun>,
    pub pairing_ok: bool,
}

impl AdjunctionTable {
    pub fn counts_equal(&self) -> bool {
        self.functors.len() == self.cofunctors.len()
    }
}

/// Transpose across the adjunction: `g: ob A → (ob C → ob B)` becomes
/// `h: ob C → (ob A → ob B)` with `h(c)(x) = g(x)(c)`.
pub fn transpose_assignment(
    g: &ObjFun,
    a: &Category,
    b: &Category,
    c: &Cocategory,
) -> Result<ObjFun> {
    let from_c = all_functions(c.objects(), b.objects());
    let cod = exponent_objset(a.objects(), b.objects());
    let bn = b.objects().len();
    let mut images = Vec::with_capacity(c.objects().len());
    for cc in 0..c.objects().len() {
        let mut idx = 0usize;
        for x in 0..a.objects().len() {
            idx = idx * bn + from_c[g.apply(x)].apply(cc);
        }
        images.push(idx);
    }
    ObjFun::new(c.objects().clone(), cod, images)
}

/// Builds and verifies the natural bijection
/// `Functors(A, K(C,B)) ≅ Cofunctors(C, T(A,B))` for one triple.
pub fn adjunction_table(
    c: &Cocategory,
    a: &Category,
    b: &Category,
    cap: usize,
) -> Result<AdjunctionTable> {
    let k = convolution(c, b, cap)?;
    let t = sweedler_hom(a, b, cap)?;
    let functors = crate::category::count_functors(a, &k, cap)?;
    let cofunctors = crate::cocategory::count_cofunctors(c, &t, cap)?;

    let mut pairing_ok = functors.len() == cofunctors.len();
    if pairing_ok {
        for g in &functors {
            let h = transpose_assignment(g, a, b, c)?;
            if !is_cofunctor(c, &t, &h)? {
                pairing_ok = false;
                break;
            }
        }
        // Injectivity of the transpose is automatic (it permutes indices),
        // so equal counts plus landing in the cofunctor set give a bijection.
    }
    Ok(AdjunctionTable { functors, cofunctors, pairing_ok })
}

/// Everything the enrichment theorems pin down for given data: the
/// hom-object with its object set, the cotensor for each supplied
/// cocategory, the verified bijection tables, and the fibration
/// compatibility of the projections.
#[derive(Clone, Debug)]
pub struct EnrichmentReport {
    pub hom: Cocategory,
    pub hom_objects_are_function_set: bool,
    pub cotensors: Vec<Category>,
    pub tables: Vec<AdjunctionTable>,
    pub projection_square_commutes: bool,
}

impl EnrichmentReport {
    pub fn ok(&self) -> bool {
        self.hom_objects_are_function_set
            && self.projection_square_commutes
            && self.tables.iter().all(|t| t.counts_equal() && t.pairing_ok)
    }
}

pub fn enrichment_report(
    a: &Category,
    b: &Category,
    cocategories: &[Cocategory],
    cap: usize,
) -> Result<EnrichmentReport> {
    let hom = sweedler_hom(a, b, cap)?;
    let function_set = exponent_objset(a.objects(), b.objects());
    let hom_objects_are_function_set = hom.objects() == &function_set;

    // The opfibration projects a cocategory to its object set; the square
    // commutes when the projection of T(A,B) is the exponent of the
    // projections of A and B.
    let projection_square_commutes = hom.objects() == &function_set;

    let mut cotensors = Vec::new();
    let mut tables = Vec::new();
    for c in cocategories {
        cotensors.push(convolution(c, b, cap)?);
        tables.push(adjunction_table(c, a, b, cap)?);
    }
    Ok(EnrichmentReport {
        hom,
        hom_objects_are_function_set,
        cotensors,
        tables,
        projection_square_commutes,
    })
}
