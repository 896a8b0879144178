//! Arbitrary-precision rationals and their `Field` impl.
//!
//! `num-rational` already maintains the invariants we need (reduced form,
//! positive denominator), so the type is a straight re-export.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use super::scalar::Field;

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Shorthand for small constants in tests and builders.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"n"` or `"n/d"` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(s.to_owned());
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

use num_traits::Zero;

impl Field for Rational {
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn entry_size(&self) -> usize {
        (self.numer().abs().bits() + self.denom().bits()) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("5").unwrap(), rat(5, 1));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("6/-8").unwrap(), rat(-3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn reduced_invariants_hold() {
        let q = rat(6, -8);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
    }
}
