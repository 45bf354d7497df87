mod common;

use nested_quot::classify::{canonicalize, classify};
use nested_quot::linalg::{rational, QMatrix, Rational, Subspace};
use nested_quot::module::{ext1_dim, hom_dim};
use nested_quot::quot::{
    hom_from_kernel_dim, nested_tangent_dim, nested_tangent_dim_with, NestedQuotPoint,
};
use proptest::prelude::*;
use rand::Rng;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| QMatrix::from_i64(r, c, &v))
    })
}

fn vectors(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(rational), dim), 0..=count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in small_matrix(6, 6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn grassmann_identity(u in vectors(5, 4), w in vectors(5, 4)) {
        let u = Subspace::span(5, &u);
        let w = Subspace::span(5, &w);
        let sum = u.sum(&w).unwrap();
        let cap = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u) && u.contains_subspace(&cap));
    }

    #[test]
    fn classify_is_idempotent_under_canonicalization(
        m in 1usize..=5, r in 1usize..=4, mut n in prop::collection::vec(0usize..=6, 1..=4)
    ) {
        n.sort();
        prop_assume!(n.iter().any(|&k| k > 0));
        let a = classify(m, r, &n).unwrap();
        let b = classify(m, r, &canonicalize(&n).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn euler_identity(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = rng.gen_range(1..=3);
        let r = rng.gen_range(1..=3);
        let p = common::random_point(&mut rng, m, r, 3);
        let t2 = common::random_module(&mut rng, m, 3);
        let lhs = hom_from_kernel_dim(&p, &t2).unwrap();
        let rhs = r * t2.dim() + ext1_dim(p.module(), &t2).unwrap() - hom_dim(p.module(), &t2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nested_tangent_invariances(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = rng.gen_range(1..=3);
        let r = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=3);
        let top = rng.gen_range(1..=3);
        let n = common::random_lengths(&mut rng, d, top);
        let z = common::random_local_chain(&mut rng, m, r, &n);
        let base = nested_tangent_dim(&z).unwrap().tangent_dim;

        prop_assert_eq!(nested_tangent_dim_with(&z, 1).unwrap().tangent_dim, base);

        let gs: Vec<QMatrix> = z.levels().iter().map(|l| common::invertible(&mut rng, l.length())).collect();
        prop_assert_eq!(nested_tangent_dim(&z.gauge(&gs).unwrap()).unwrap().tangent_dim, base);

        let shift: Vec<Rational> = (0..m).map(|_| common::small_rational(&mut rng)).collect();
        prop_assert_eq!(nested_tangent_dim(&z.translate(&shift)).unwrap().tangent_dim, base);

        prop_assert_eq!(nested_tangent_dim(&z.canonicalize()).unwrap().tangent_dim, base);
    }

    #[test]
    fn additivity(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = rng.gen_range(1..=3);
        let r = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=2);
        let pieces: Vec<Vec<usize>> = (0..2)
            .map(|_| {
                let top = rng.gen_range(1..=2);
                common::random_lengths(&mut rng, d, top)
            })
            .collect();
        let (sum, parts) = common::random_configuration(&mut rng, m, r, &pieces);
        let separate: usize = parts.iter().map(|p| nested_tangent_dim(p).unwrap().tangent_dim).sum();
        prop_assert_eq!(nested_tangent_dim(&sum).unwrap().tangent_dim, separate);
    }

    #[test]
    fn depth_one_and_repeated_levels(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = rng.gen_range(1..=3);
        let r = rng.gen_range(1..=3);
        let p = common::random_point(&mut rng, m, r, 3);
        let hom = hom_from_kernel_dim(&p, p.module()).unwrap();
        let single = nested_tangent_dim(&NestedQuotPoint::single(p.clone())).unwrap().tangent_dim;
        prop_assert_eq!(single, hom);
        let doubled = nested_tangent_dim(&NestedQuotPoint::constant(p, 2)).unwrap().tangent_dim;
        prop_assert_eq!(doubled, hom);
    }
}
