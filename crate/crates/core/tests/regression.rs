//! Frozen values computed by this implementation, to catch silent changes.

use nested_quot::bounds::Bounds;
use nested_quot::classify::{nested_fat_point_witness, verify_smoothness};
use nested_quot::quot::nested_tangent_dim;

#[test]
fn nested_fat_point_tangents() {
    // (m, r, tangent, Delta rows, Delta columns)
    let frozen = [(2, 2, 7, 4, 11), (2, 3, 9, 5, 14), (3, 2, 10, 6, 16), (3, 3, 12, 7, 19)];
    for (m, r, t, rows, cols) in frozen {
        let rep = nested_tangent_dim(&nested_fat_point_witness(m, r, 1).unwrap()).unwrap();
        assert_eq!((rep.tangent_dim, rep.delta_target, rep.delta_domain), (t, rows, cols), "(m, r) = ({m}, {r})");
    }
}

#[test]
fn sweep_maxima() {
    // (m, r, lengths, fixed points, max tangent)
    let frozen: [(usize, usize, &[usize], usize, usize); 6] = [
        (2, 1, &[1, 3], 3, 8),
        (2, 1, &[1, 2, 3], 4, 7),
        (3, 1, &[1, 3], 6, 11),
        (3, 1, &[4], 13, 18),
        (2, 2, &[3], 10, 11),
        (3, 3, &[3], 37, 27),
    ];
    for (m, r, n, count, max) in frozen {
        let rep = verify_smoothness(m, r, n, &Bounds::default()).unwrap();
        assert_eq!((rep.fixed_points(), rep.max_tangent_dim), (count, max), "({m}, {r}, {n:?})");
    }
}
