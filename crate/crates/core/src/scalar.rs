//! The commutative-ring contract every higher module is generic over.
//!
//! Two instances are provided: [`Rational`] (a field) and
//! [`MultiPoly`](crate::multipoly::MultiPoly) over the rationals. Univariate
//! polynomials over any `Ring` are themselves a `Ring`, which is how
//! characteristic polynomials are computed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision reduced fraction. Normalization is eager: the
/// denominator is positive and coprime to the numerator after every operation.
pub type Rational = BigRational;

/// Exact commutative ring with identity.
///
/// `inverse` is the optional inversion of the contract: it returns `Some`
/// exactly for units of the ring. `exact_div` is division that is known to
/// be exact (as in fraction-free elimination); it returns `None` when the
/// quotient does not exist in the ring.
pub trait Ring:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self;

    fn inverse(&self) -> Option<Self>;

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inverse().map(|inv| self.clone() * inv)
    }

    fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

/// `a (a+1) ... (a+n-1)`; the empty product is 1.
pub fn rising_factorial<R: Ring>(a: &R, n: usize) -> R {
    (0..n).fold(R::one(), |acc, i| acc * (a.clone() + R::from_int(i as i64)))
}

/// `a (a-1) ... (a-n+1)`; the empty product is 1.
pub fn falling_factorial<R: Ring>(a: &R, n: usize) -> R {
    (0..n).fold(R::one(), |acc, i| acc * (a.clone() - R::from_int(i as i64)))
}

/// Binomial coefficient as a ring element.
pub fn binomial<R: Ring>(n: usize, k: usize) -> R {
    if k > n {
        return R::zero();
    }
    // Small n only: the intermediate product is an exact integer.
    let value = num_integer::binomial(BigInt::from(n), BigInt::from(k));
    let as_i64: i64 = value
        .try_into()
        .expect("binomial coefficient exceeds i64 range");
    R::from_int(as_i64)
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Canonical text form: `p/q`, or `p` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q`, `p`, with an optional leading `-` or U+2212 minus sign.
/// Non-reduced input is accepted and reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let (negative, body) = if let Some(rest) = trimmed.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = trimmed.strip_prefix('-') {
        (true, rest)
    } else {
        (false, trimmed)
    };
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    if body.is_empty() || body.starts_with(['-', '+', '\u{2212}']) {
        return Err(bad());
    }
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = den.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    let q = BigRational::new(numer, denom);
    Ok(if negative { -q } else { q })
}

/// True when `q` is strictly positive.
pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&int(2), 0), int(1));
        assert_eq!(rising_factorial(&int(1), 3), int(6));
        assert_eq!(rising_factorial(&rational(1, 2), 2), rational(3, 4));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&int(5), 0), int(1));
        assert_eq!(falling_factorial(&int(2), 2), int(2));
        assert_eq!(falling_factorial(&rational(3, 2), 2), rational(3, 4));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/4").unwrap(), rational(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rational(-3, 4));
        assert_eq!(parse_rational("\u{2212}2").unwrap(), int(-2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("--1").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&rational(-3, 4)), "-3/4");
        assert_eq!(format_rational(&rational(8, 4)), "2");
        assert_eq!(format_rational(&Rational::zero()), "0");
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = rational(0, -5);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(Rational::zero().inverse().is_none());
        assert_eq!(rational(2, 3).inverse(), Some(rational(3, 2)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial::<Rational>(5, 2), int(10));
        assert_eq!(binomial::<Rational>(2, 3), int(0));
        assert_eq!(binomial::<Rational>(0, 0), int(1));
    }
}
