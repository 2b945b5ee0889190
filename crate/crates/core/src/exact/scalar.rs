//! Exact rational scalars.
//!
//! [`Scalar`] is `num_rational::BigRational`, which is kept reduced with a
//! positive denominator after every operation.

use alloc::format;
use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = num_rational::BigRational;

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn to_text(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// Converts an integral scalar to `i64`, if it is one and it fits.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    use num_traits::ToPrimitive;
    if s.is_integer() {
        s.numer().to_i64()
    } else {
        None
    }
}

/// Least common multiple of the denominators of `values` (1 for none).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the absolute values of `values` (0 for none / all zero).
pub fn integer_content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in [int(0), int(-7), ratio(3, -6), ratio(22, 7)] {
            assert_eq!(parse(&to_text(&s)).unwrap(), s);
        }
        assert_eq!(to_text(&ratio(2, -4)), "-1/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn reduced_and_positive_denominator() {
        let s = ratio(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
    }
}
