//! Property tests for the structural invariants that hold on arbitrary
//! inputs, not just the enumerated ones.

use enmat::base::{Base, Elem, Trop};
use enmat::category::free_category;
use enmat::graph::Graph;
use enmat::matrix::{self, MateData, MateForm, Matrix};
use enmat::objset::{ObjFun, ObjSet};

use proptest::prelude::*;

fn objset(tag: &'static str, n: usize) -> ObjSet {
    ObjSet::new((0..n).map(|i| format!("{tag}{i}"))).unwrap()
}

fn trop_entries(cells: usize) -> impl Strategy<Value = Vec<Elem>> {
    proptest::collection::vec(
        prop_oneof![
            3 => (0i64..10).prop_map(|n| Elem::Trop(Trop::Fin(n))),
            1 => Just(Elem::Trop(Trop::Inf)),
        ],
        cells,
    )
}

fn bool_entries(cells: usize) -> impl Strategy<Value = Vec<Elem>> {
    proptest::collection::vec(any::<bool>().prop_map(Elem::Bool), cells)
}

prop_compose! {
    fn trop_triple()(
        (nx, ny, nz, nw) in (1usize..4, 1usize..4, 1usize..4, 1usize..4)
    )(
        s in trop_entries(nx * ny),
        t in trop_entries(ny * nz),
        r in trop_entries(nz * nw),
        sizes in Just((nx, ny, nz, nw)),
    ) -> (Matrix, Matrix, Matrix) {
        let (nx, ny, nz, nw) = sizes;
        let (x, y, z, w) = (objset("x", nx), objset("y", ny), objset("z", nz), objset("w", nw));
        (
            Matrix::new(x, y.clone(), Base::tropical(), s).unwrap(),
            Matrix::new(y, z.clone(), Base::tropical(), t).unwrap(),
            Matrix::new(z, w, Base::tropical(), r).unwrap(),
        )
    }
}

proptest! {
    #[test]
    fn compose_is_associative_and_unital((s, t, r) in trop_triple()) {
        let left = matrix::compose(&r, &matrix::compose(&t, &s).unwrap()).unwrap();
        let right = matrix::compose(&matrix::compose(&r, &t).unwrap(), &s).unwrap();
        prop_assert_eq!(left, right);

        let id_src = Matrix::identity(s.src(), s.base());
        let id_dst = Matrix::identity(s.dst(), s.base());
        prop_assert_eq!(matrix::compose(&s, &id_src).unwrap(), s.clone());
        prop_assert_eq!(matrix::compose(&id_dst, &s).unwrap(), s);
    }

    #[test]
    fn pointwise_tensor_is_commutative_and_unital(
        n in 1usize..4,
        m in 1usize..4,
        seed_a in proptest::collection::vec(0i64..10, 9),
        seed_b in proptest::collection::vec(0i64..10, 9),
    ) {
        let (x, y) = (objset("x", n), objset("y", m));
        let from_seed = |seed: &[i64]| {
            Matrix::from_fn(x.clone(), y.clone(), Base::tropical(), |i, j| {
                Ok(Elem::Trop(Trop::Fin(seed[(i * 3 + j) % seed.len()])))
            })
            .unwrap()
        };
        let (a, b) = (from_seed(&seed_a), from_seed(&seed_b));
        prop_assert_eq!(
            matrix::pointwise_tensor(&a, &b).unwrap(),
            matrix::pointwise_tensor(&b, &a).unwrap()
        );
        let unit = Matrix::all_unit(x.clone(), y.clone(), Base::tropical());
        prop_assert_eq!(matrix::pointwise_tensor(&a, &unit).unwrap(), a);
    }

    #[test]
    fn mate_presentations_agree_on_random_frames(
        m_entries in bool_entries(4),
        n_entries in bool_entries(9),
        f_img in proptest::collection::vec(0usize..3, 2),
        g_img in proptest::collection::vec(0usize..3, 2),
    ) {
        let x = objset("x", 2);
        let z = objset("z", 3);
        let m = Matrix::new(x.clone(), x.clone(), Base::boolean(), m_entries).unwrap();
        let n = Matrix::new(z.clone(), z.clone(), Base::boolean(), n_entries).unwrap();
        let f = ObjFun::new(x.clone(), z.clone(), f_img).unwrap();
        let g = ObjFun::new(x, z, g_img).unwrap();
        let data = MateData::new(m, n, f, g).unwrap();
        let reference = data.holds(MateForm::Square).unwrap();
        for form in MateForm::ALL {
            prop_assert_eq!(data.holds(form).unwrap(), reference);
        }
    }

    #[test]
    fn closure_is_a_fixpoint_above_the_graph(entries in trop_entries(9)) {
        let x = objset("v", 3);
        let g = Graph::new(Matrix::new(x.clone(), x.clone(), Base::tropical(), entries).unwrap())
            .unwrap();
        let c = free_category(&g).unwrap();
        // C = 1 ⊕ (G ∘ C), and G sits under C pointwise.
        let step = Matrix::join(
            &Matrix::identity(&x, Base::tropical()),
            &matrix::compose(g.mat(), c.mat()).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(&step, c.mat());
        prop_assert!(g.mat().le(c.mat()));
    }
}
