//! Random stable points for the integration tests.
//!
//! A random local chain starts from a torus-fixed chain at the origin and is
//! then deformed without leaving the stable commuting locus:
//! the variables are replaced by polynomials in them with an invertible
//! linear part, the framing is replaced by an invertible combination plus
//! nilpotent corrections, and each level is conjugated by a random matrix.
//! Multi-point configurations are direct sums of chains translated to
//! distinct rational points.
#![allow(dead_code)]

use nested_quot::classify::enumerate_fixed_points;
use nested_quot::linalg::{ratio, rational, QMatrix, Rational};
use nested_quot::module::FiniteModule;
use nested_quot::quot::{NestedQuotPoint, QuotPoint};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut impl Rng) -> Rational {
    rational(rng.gen_range(-3..=3))
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// A random invertible integer matrix of size `n`.
pub fn invertible(rng: &mut impl Rng, n: usize) -> QMatrix {
    if n == 0 {
        return QMatrix::identity(0);
    }
    loop {
        let entries = (0..n * n).map(|_| small_int(rng)).collect();
        let g = QMatrix::from_vec(n, n, entries).unwrap();
        if g.is_invertible() {
            return g;
        }
    }
}

/// A random polynomial without constant term in the commuting matrices `xs`,
/// of degree at most two, with the given linear coefficients.
fn polynomial(rng: &mut impl Rng, xs: &[QMatrix], linear: &[Rational]) -> QMatrix {
    let n = xs[0].rows();
    let mut acc = QMatrix::zeros(n, n);
    for (x, c) in xs.iter().zip(linear) {
        acc = &acc + &x.scale(c);
    }
    for j in 0..xs.len() {
        for k in j..xs.len() {
            if rng.gen_bool(0.4) {
                acc = &acc + &(&xs[j] * &xs[k]).scale(&small_int(rng));
            }
        }
    }
    acc
}

/// Random deformation data shared by all levels of a chain.
struct Deformation {
    /// Linear part of the variable substitution, invertible `m x m`.
    linear: QMatrix,
    /// Framing mix, invertible `r x r`.
    mix: QMatrix,
    seed: u64,
}

impl Deformation {
    fn new(rng: &mut impl Rng, m: usize, r: usize) -> Self {
        Deformation {
            linear: invertible(rng, m),
            mix: invertible(rng, r),
            seed: rng.gen(),
        }
    }

    /// Applies the deformation to one level. The same seed is used at every
    /// level so the substitution polynomials agree across the chain.
    fn apply(&self, p: &QuotPoint) -> QuotPoint {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let xs = p.module().actions();
        let m = xs.len();
        let n = p.length();
        if n == 0 {
            return p.clone();
        }
        let actions: Vec<QMatrix> = (0..m)
            .map(|i| polynomial(&mut rng, xs, self.linear.row(i)))
            .collect();
        let r = p.rank();
        let framing = (0..r)
            .map(|j| {
                let mut v = vec![rational(0); n];
                for k in 0..r {
                    let coeff = &self.mix[(j, k)];
                    let zero_linear = vec![rational(0); m];
                    let correction = polynomial(&mut rng, xs, &zero_linear);
                    let w = p.framing()[k].clone();
                    let cw = correction.mul_vec(&w);
                    for t in 0..n {
                        v[t] += coeff * &w[t] + &cw[t];
                    }
                }
                v
            })
            .collect();
        QuotPoint::new(FiniteModule::new(actions).unwrap(), framing).expect("deformation keeps stability")
    }
}

/// A random chain supported at the origin with the given lengths.
pub fn random_local_chain(rng: &mut impl Rng, m: usize, r: usize, lengths: &[usize]) -> NestedQuotPoint {
    let fps = enumerate_fixed_points(m, r, lengths).unwrap();
    let fp = fps.choose(rng).unwrap();
    let z = fp.to_nested_point().unwrap();
    let def = Deformation::new(rng, m, r);
    let levels: Vec<QuotPoint> = z.levels().iter().map(|l| def.apply(l)).collect();
    let maps: Vec<QMatrix> = z.maps().iter().map(|p| p.matrix().clone()).collect();
    let z = NestedQuotPoint::new(levels, maps).expect("deformation respects the chain");
    let gs: Vec<QMatrix> = z.levels().iter().map(|l| invertible(rng, l.length())).collect();
    z.gauge(&gs).unwrap()
}

/// A random non-decreasing tuple of depth `d` with top entry `top`.
pub fn random_lengths(rng: &mut impl Rng, d: usize, top: usize) -> Vec<usize> {
    let mut n: Vec<usize> = (0..d - 1).map(|_| rng.gen_range(0..=top)).collect();
    n.push(top);
    n.sort();
    n
}

fn distinct_points(rng: &mut impl Rng, m: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut pts: Vec<Vec<Rational>> = Vec::new();
    while pts.len() < count {
        let p: Vec<Rational> = (0..m).map(|_| small_rational(rng)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Direct sum of chains with the given per-piece lengths (all of depth `d`),
/// translated to distinct random rational points. Returns the pieces too.
pub fn random_configuration(
    rng: &mut impl Rng,
    m: usize,
    r: usize,
    pieces: &[Vec<usize>],
) -> (NestedQuotPoint, Vec<NestedQuotPoint>) {
    let pts = distinct_points(rng, m, pieces.len());
    let parts: Vec<NestedQuotPoint> = pieces
        .iter()
        .zip(&pts)
        .map(|(n, p)| random_local_chain(rng, m, r, n).translate(p))
        .collect();
    let sum = NestedQuotPoint::direct_sum(&parts).unwrap();
    let gs: Vec<QMatrix> = sum.levels().iter().map(|l| invertible(rng, l.length())).collect();
    (sum.gauge(&gs).unwrap(), parts)
}

/// A random single-level point of total length at most `max_len` with up to
/// two support points.
pub fn random_point(rng: &mut impl Rng, m: usize, r: usize, max_len: usize) -> QuotPoint {
    let total = rng.gen_range(1..=max_len);
    let first = if total >= 2 && rng.gen_bool(0.5) { rng.gen_range(1..total) } else { total };
    let mut pieces = vec![vec![first]];
    if first < total {
        pieces.push(vec![total - first]);
    }
    let (z, _) = random_configuration(rng, m, r, &pieces);
    z.levels()[0].clone()
}

/// A random finite module (no framing) of length at most `max_len`.
pub fn random_module(rng: &mut impl Rng, m: usize, max_len: usize) -> FiniteModule {
    let r = rng.gen_range(1..=2);
    random_point(rng, m, r, max_len).module().clone()
}
