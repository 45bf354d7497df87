//! Exact linear algebra over the rationals.
//!
//! Everything is exact: ranks and kernel dimensions are the whole point of
//! the crate, and they are distinguished by gaps of one.

mod echelon;
mod matrix;
mod poly;
mod subspace;

pub use echelon::{to_dense, to_sparse, Echelon, SparseVec};
pub use matrix::QMatrix;
pub use poly::{characteristic_polynomial, rational_roots};
pub use subspace::{restrict_map, Subspace};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"` and reduces to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("malformed rational {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) if valid_int(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse {
            line: 0,
            message: format!("zero denominator in {s:?}"),
        });
    }
    Ok(Rational::new(n, d))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "--1"] {
            assert!(parse_rational(s).is_err(), "{s:?} should be rejected");
        }
    }
}
