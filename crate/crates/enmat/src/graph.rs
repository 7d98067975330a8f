//! Weighted graphs as square matrices, morphisms between them in both
//! characterizations, and the graph-level hom and tensor.

use crate::base::Base;
use crate::matrix::{self, Matrix, TwoCell};
use crate::objset::{ObjFun, ObjSet};
use crate::{Error, Result};

/// A graph: an endo-matrix over its set of objects.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    mat: Matrix,
}

impl Graph {
    pub fn new(mat: Matrix) -> Result<Graph> {
        if !mat.is_square() {
            return Err(Error::MalformedShape(format!(
                "a graph needs a square matrix, got {} -> {}",
                mat.src(),
                mat.dst()
            )));
        }
        Ok(Graph { mat })
    }

    /// The discrete graph: identity matrix over the objects.
    pub fn discrete(objects: &ObjSet, base: Base) -> Graph {
        Graph { mat: Matrix::identity(objects, base) }
    }

    /// One object, entry = unit: the monoidal unit for the graph tensor.
    pub fn unit(base: Base) -> Graph {
        let point = ObjSet::singleton("*");
        Graph { mat: Matrix::all_unit(point.clone(), point, base) }
    }

    pub fn objects(&self) -> &ObjSet {
        self.mat.src()
    }

    pub fn mat(&self) -> &Matrix {
        &self.mat
    }

    pub fn base(&self) -> Base {
        self.mat.base()
    }
}

/// Result of testing one function as a graph morphism.
#[derive(Clone, Debug)]
pub struct MorphismCheck {
    pub holds: bool,
    /// First pair of source objects violating the order fact, if any.
    pub counterexample: Option<(String, String)>,
}

/// Whether `f` carries a morphism `g → h`: the square `g ⇒ restrict(f,f,h)`
/// must hold. The equivalent corestriction form `pushforward(f,f,g) ⇒ h` is
/// computed as well and the two must agree.
pub fn is_graph_morphism(g: &Graph, h: &Graph, f: &ObjFun) -> Result<MorphismCheck> {
    if f.src() != g.objects() || f.dst() != h.objects() {
        return Err(Error::ObjSetMismatch(
            "morphism function must map the source objects to the target objects".into(),
        ));
    }
    let direct = TwoCell::globular(g.mat.clone(), matrix::restrict(f, f, &h.mat)?)?;
    let pushed = TwoCell::globular(matrix::pushforward(f, f, &g.mat)?, h.mat.clone())?;
    let (a, b) = (direct.holds(), pushed.holds());
    assert_eq!(a, b, "restriction and corestriction characterizations must agree");
    Ok(MorphismCheck { holds: a, counterexample: direct.first_violation() })
}

/// The internal hom of graphs: objects are the functions between the object
/// sets, entries the meet of residuals `[g(x,x'), h(sx, kx')]`.
pub fn hom_graph(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    Graph::new(matrix::internal_hom(&g.mat, &h.mat, cap)?)
}

/// Tensor of graphs over the product object set.
pub fn tensor_graph(g: &Graph, h: &Graph) -> Result<Graph> {
    Graph::new(matrix::tensor(&g.mat, &h.mat)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Elem;
    use crate::objset::all_functions;

    fn set(names: &[&str]) -> ObjSet {
        ObjSet::new(names.iter().copied()).unwrap()
    }

    fn bool_graph(objs: &ObjSet, ones: &[(&str, &str)]) -> Graph {
        let mut m = Matrix::bottom(objs.clone(), objs.clone(), Base::boolean());
        for (a, b) in ones {
            m.set(objs.position(a).unwrap(), objs.position(b).unwrap(), Elem::Bool(true));
        }
        Graph::new(m).unwrap()
    }

    #[test]
    fn identity_is_morphism() {
        let x = set(&["a", "b"]);
        let g = bool_graph(&x, &[("a", "b")]);
        let check = is_graph_morphism(&g, &g, &ObjFun::identity(&x)).unwrap();
        assert!(check.holds);
    }

    #[test]
    fn edge_into_preorder() {
        let x = set(&["a", "b"]);
        let y = set(&["u", "v"]);
        let g = bool_graph(&x, &[("a", "b")]);
        let h = bool_graph(&y, &[("u", "u"), ("v", "v"), ("u", "v")]);

        let good = ObjFun::from_names(x.clone(), y.clone(), &[("a", "u"), ("b", "v")]).unwrap();
        assert!(is_graph_morphism(&g, &h, &good).unwrap().holds);

        let bad = ObjFun::from_names(x, y, &[("a", "v"), ("b", "u")]).unwrap();
        let check = is_graph_morphism(&g, &h, &bad).unwrap();
        assert!(!check.holds);
        assert_eq!(check.counterexample, Some(("a".into(), "b".into())));
    }

    #[test]
    fn restriction_and_corestriction_agree_exhaustively() {
        // Both arrow forms of a morphism, over every graph pair and function
        // on two-element sets over the 2-chain.
        let x = set(&["a", "b"]);
        let base = Base::chain(2).unwrap();
        let carrier = base.carrier().unwrap();
        let mats: Vec<Matrix> = (0..16usize)
            .map(|code| {
                Matrix::from_fn(x.clone(), x.clone(), base, |i, j| {
                    Ok(carrier[(code >> (i * 2 + j)) & 1])
                })
                .unwrap()
            })
            .collect();
        for gm in &mats {
            for hm in &mats {
                let g = Graph::new(gm.clone()).unwrap();
                let h = Graph::new(hm.clone()).unwrap();
                for f in all_functions(&x, &x) {
                    // is_graph_morphism asserts the two forms agree.
                    let _ = is_graph_morphism(&g, &h, &f).unwrap();
                }
            }
        }
    }

    #[test]
    fn morphisms_compose() {
        let x = set(&["a", "b"]);
        let g = bool_graph(&x, &[("a", "b")]);
        let h = bool_graph(&x, &[("a", "b"), ("a", "a"), ("b", "b")]);
        let k = bool_graph(&x, &[("a", "b"), ("a", "a"), ("b", "b"), ("b", "a")]);
        let id = ObjFun::identity(&x);
        assert!(is_graph_morphism(&g, &h, &id).unwrap().holds);
        assert!(is_graph_morphism(&h, &k, &id).unwrap().holds);
        let composite = ObjFun::compose(&id, &id).unwrap();
        assert!(is_graph_morphism(&g, &k, &composite).unwrap().holds);
    }

    #[test]
    fn hom_graph_from_unit_point() {
        let y = set(&["u", "v"]);
        let g = Graph::unit(Base::boolean());
        let h = bool_graph(&y, &[("u", "u"), ("v", "v"), ("u", "v")]);
        let hom = hom_graph(&g, &h, 64).unwrap();
        assert_eq!(hom.objects().len(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(hom.mat().get(i, j), h.mat().get(i, j));
            }
        }
    }

    #[test]
    fn hom_graph_discrete_source_entries() {
        // G discrete on two objects, H = u ≤ v: each hom entry is the meet of
        // the two diagonal residual constraints, worked out by hand.
        let x = set(&["a", "b"]);
        let y = set(&["u", "v"]);
        let g = Graph::discrete(&x, Base::boolean());
        let h = bool_graph(&y, &[("u", "u"), ("v", "v"), ("u", "v")]);
        let hom = hom_graph(&g, &h, 64).unwrap();
        assert_eq!(hom.objects().len(), 4);
        // Entry at (s, k) = ∧_x H(s x, k x); spot-check s = ⟨u,u⟩, k = ⟨u,v⟩
        // → H(u,u) ∧ H(u,v) = 1, and s = ⟨v,u⟩, k = ⟨u,u⟩ → H(v,u) ∧ H(u,u) = 0.
        let s = hom.objects().position("⟨u,u⟩").unwrap();
        let k = hom.objects().position("⟨u,v⟩").unwrap();
        assert_eq!(hom.mat().get(s, k), Elem::Bool(true));
        let s2 = hom.objects().position("⟨v,u⟩").unwrap();
        let k2 = hom.objects().position("⟨u,u⟩").unwrap();
        assert_eq!(hom.mat().get(s2, k2), Elem::Bool(false));
    }

    #[test]
    fn tensor_hom_bijection_exhaustive() {
        // Graph morphisms F ⊗ G → H correspond to morphisms
        // F → hom(G, H) under currying of the underlying functions;
        // exhaustive over the 2-chain on sets of size ≤ 2.
        let base = Base::chain(2).unwrap();
        for sx in 1..=2usize {
            for sz in 1..=2usize {
                for sy in 1..=2usize {
                    let x = ObjSet::new((0..sx).map(|i| format!("x{i}"))).unwrap();
                    let z = ObjSet::new((0..sz).map(|i| format!("z{i}"))).unwrap();
                    let y = ObjSet::new((0..sy).map(|i| format!("y{i}"))).unwrap();
                    let graphs = |objs: &ObjSet| -> Vec<Graph> {
                        let carrier = base.carrier().unwrap();
                        let cells = objs.len() * objs.len();
                        (0..(carrier.len().pow(cells as u32)))
                            .map(|code| {
                                let mut rest = code;
                                Graph::new(
                                    Matrix::from_fn(objs.clone(), objs.clone(), base, |_, _| {
                                        let e = carrier[rest % carrier.len()];
                                        rest /= carrier.len();
                                        Ok(e)
                                    })
                                    .unwrap(),
                                )
                                .unwrap()
                            })
                            .collect()
                    };
                    for f_graph in graphs(&x) {
                        for g_graph in graphs(&z) {
                            for h_graph in graphs(&y) {
                                let product = tensor_graph(&f_graph, &g_graph).unwrap();
                                let hom = hom_graph(&g_graph, &h_graph, 64).unwrap();
                                let mut uncurried_count = 0usize;
                                let mut curried_count = 0usize;
                                for phi in all_functions(product.objects(), &y) {
                                    // Curried form: x ↦ (z ↦ phi(x, z)).
                                    let curried = ObjFun::new(
                                        x.clone(),
                                        hom.objects().clone(),
                                        (0..sx)
                                            .map(|xi| {
                                                ObjFun::new(
                                                    z.clone(),
                                                    y.clone(),
                                                    (0..sz)
                                                        .map(|zi| phi.apply(xi * sz + zi))
                                                        .collect(),
                                                )
                                                .unwrap()
                                                .exponent_index()
                                            })
                                            .collect(),
                                    )
                                    .unwrap();
                                    let uncurried_holds =
                                        is_graph_morphism(&product, &h_graph, &phi)
                                            .unwrap()
                                            .holds;
                                    let curried_holds =
                                        is_graph_morphism(&f_graph, &hom, &curried)
                                            .unwrap()
                                            .holds;
                                    assert_eq!(uncurried_holds, curried_holds);
                                    uncurried_count += usize::from(uncurried_holds);
                                    curried_count += usize::from(curried_holds);
                                }
                                assert_eq!(uncurried_count, curried_count);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_graph_unit_neutral_up_to_renaming() {
        let x = set(&["a", "b"]);
        let g = bool_graph(&x, &[("a", "b")]);
        let t = tensor_graph(&g, &Graph::unit(Base::boolean())).unwrap();
        assert_eq!(t.objects().len(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(t.mat().get(i, j), g.mat().get(i, j));
            }
        }
    }
}
