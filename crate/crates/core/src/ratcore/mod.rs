//! Exact rational scalars and dense matrix algebra.
//!
//! Every sign decision made elsewhere in the crate (is a minor negative, is
//! an LP optimum zero, is an inverse entry nonpositive) is taken on values
//! produced here, so nothing in this module ever rounds.

mod index_set;
mod matrix;
mod poly;
pub mod ser;

pub use index_set::IndexSet;
pub use matrix::RatMatrix;
pub use poly::{CharPoly, Poly, RootSigns};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `p / q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as a rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Three-way sign of an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &Rational) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
///
/// Rejects zero denominators and anything that is not an optionally signed
/// decimal integer on each side of the slash.
pub fn parse_rational(token: &str) -> Option<Rational> {
    fn parse_int(s: &str) -> Option<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    }
    match token.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => parse_int(token).map(Rational::from_integer),
    }
}

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-1/3"), Some(rat(-1, 3)));
        assert_eq!(parse_rational("2/4"), Some(rat(1, 2)));
        assert_eq!(parse_rational("+7"), Some(int(7)));
        assert_eq!(parse_rational("1/-3"), Some(rat(-1, 3)));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "0.5", "a", "1/", "/2", "1/2/3", "--1", "1e3"] {
            assert_eq!(parse_rational(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn rational_display_round_trips() {
        let x = rat(1, 3);
        assert_eq!(x.to_string(), "1/3");
        assert_eq!(parse_rational(&x.to_string()), Some(x));
        assert_eq!(int(-4).to_string(), "-4");
    }
}
