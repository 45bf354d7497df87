use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{QMatrix, Rational};
use crate::error::{Error, Result};

/// Largest integer we are willing to factor by trial division when looking
/// for rational roots.
const MAX_FACTOR: u64 = 1 << 40;

/// Coefficients of `det(t I - A)`, lowest degree first (monic, length n+1).
///
/// Faddeev-LeVerrier recursion; exact over the rationals.
pub fn characteristic_polynomial(a: &QMatrix) -> Vec<Rational> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = QMatrix::zeros(n, n);
    for k in 1..=n {
        let prev = coeffs[n - k + 1].clone();
        m = &(a * &m) + &QMatrix::scalar(n, &prev);
        let am = a * &m;
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v <= MAX_FACTOR)
        .ok_or_else(|| Error::ResourceBound {
            what: "rational-root search constant".into(),
            limit: MAX_FACTOR as usize,
            requested: usize::MAX,
        })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Distinct rational roots of a polynomial given lowest degree first.
pub fn rational_roots(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let mut coeffs: Vec<Rational> = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..shift);
    }
    if coeffs.len() <= 1 {
        return Ok(roots);
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let ps = divisors(&ints[0])?;
    let qs = divisors(ints.last().expect("nonempty"))?;
    let mut seen = std::collections::BTreeSet::new();
    for &p in &ps {
        for &q in &qs {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
                if seen.insert(cand.clone()) && eval(&coeffs, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}
