//! Arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps
//! numerator and denominator coprime with a positive denominator and prints
//! as `p/q` (or `p` when `q = 1`). This module adds the handful of helpers
//! the rest of the crate leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("not a rational: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Parses a comma- or space-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_rational)
        .collect()
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a nonnegative rational, if it is a square in ℚ.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Rational) -> BigInt {
    q.numer().div_ceil(q.denom())
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Gcd of the numerators (after scaling to a common denominator the caller
/// is responsible for). Zero inputs are skipped.
pub fn numerator_gcd<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .filter(|q| !q.is_zero())
        .fold(BigInt::zero(), |acc, q| acc.gcd(q.numer()))
}

/// Approximate value as `f64`, for reporting only.
pub fn to_f64(q: &Rational) -> f64 {
    big_to_f64_ratio(q.numer(), q.denom())
}

pub(crate) fn big_to_f64_ratio(n: &BigInt, d: &BigInt) -> f64 {
    // Shift both to ~60 significant bits so the quotient survives huge inputs.
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let nn: BigInt = n >> shift_n as usize;
    let dd: BigInt = d >> shift_d as usize;
    let nf = nn.to_f64().unwrap_or(f64::NAN);
    let df = dd.to_f64().unwrap_or(f64::NAN);
    (nf / df) * 2f64.powi((shift_n - shift_d) as i32)
}

/// Natural logarithm of a positive big integer, accurate to ~1e-15 relative.
pub fn ln_big(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "log of nonpositive integer");
    let bits = n.bits() as i64;
    let shift = (bits - 60).max(0);
    let top: BigInt = n >> shift as usize;
    let top_f = top.to_f64().unwrap_or(f64::NAN);
    top_f.ln() + (shift as f64) * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(q: &Rational) -> f64 {
    ln_big(q.numer()) - ln_big(q.denom())
}

/// Serializes a rational as its `p/q` string.
pub fn ser<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn ser_vec<S: Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

pub fn ser_opt<S: Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), Rational::zero());
        assert_eq!(rat(0, 5).denom(), &BigInt::one());
    }

    #[test]
    fn printing() {
        assert_eq!(rat(3, 2).to_string(), "3/2");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(rat(-1, 3).to_string(), "-1/3");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-7/21").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational(" 5 ").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            parse_rational_list("1, -1/2 3").unwrap(),
            vec![int(1), rat(-1, 2), int(3)]
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(floor(&rat(-3, 2)), BigInt::from(-2));
        assert_eq!(ceil(&rat(-3, 2)), BigInt::from(-1));
    }

    #[test]
    fn logs() {
        let big = BigInt::from(2).pow(300u32);
        assert!((ln_big(&big) - 300.0 * std::f64::consts::LN_2).abs() < 1e-12);
        assert!((ln_rational(&rat(1, 5)) + 5f64.ln()).abs() < 1e-15);
    }
}
