//! Arbitrary-precision integers and normalized rationals.
//!
//! `Integer` and `Rational` are the `num` big-number types; this module adds
//! the exact root extraction and string formats the rest of the crate relies
//! on. Rationals are always reduced with a positive denominator, so the sign
//! lives on the numerator and equal values have equal representations.

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    Negative,
    #[error("not a perfect square")]
    NotASquare,
    #[error("not a perfect fourth power")]
    NotAFourthPower,
    #[error("cannot parse {0:?} as a number")]
    Parse(String),
}

/// Builds the reduced fraction `num/den` with a positive denominator.
pub fn normalize(num: Integer, den: Integer) -> Result<Rational, NumError> {
    if den.is_zero() {
        return Err(NumError::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Shorthand for small literal fractions. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    normalize(num.into(), den.into()).expect("literal fraction with zero denominator")
}

pub fn rat_from_int(n: Integer) -> Rational {
    Rational::from_integer(n)
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &Integer) -> Integer {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub fn is_square(n: &Integer) -> bool {
    exact_isqrt(n).is_some()
}

/// The nonnegative rational `r` with `r² = q`.
pub fn exact_sqrt(q: &Rational) -> Result<Rational, NumError> {
    if q.is_negative() {
        return Err(NumError::Negative);
    }
    let num = exact_isqrt(q.numer()).ok_or(NumError::NotASquare)?;
    let den = exact_isqrt(q.denom()).ok_or(NumError::NotASquare)?;
    Ok(Rational::new_raw(num, den))
}

/// The nonnegative rational `r` with `r⁴ = q`.
pub fn exact_fourth_root(q: &Rational) -> Result<Rational, NumError> {
    if q.is_negative() {
        return Err(NumError::NotAFourthPower);
    }
    let root = |n: &Integer| exact_isqrt(n).and_then(|s| exact_isqrt(&s));
    let num = root(q.numer()).ok_or(NumError::NotAFourthPower)?;
    let den = root(q.denom()).ok_or(NumError::NotAFourthPower)?;
    Ok(Rational::new_raw(num, den))
}

/// Decimal string for integers, `p/q` for rationals (denominator dropped when 1).
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_integer(s: &str) -> Result<Integer, NumError> {
    s.trim()
        .parse::<Integer>()
        .map_err(|_| NumError::Parse(s.to_string()))
}

pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s)?)),
        Some((p, q)) => normalize(parse_integer(p)?, parse_integer(q)?),
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator(values: &[Rational]) -> Integer {
    values
        .iter()
        .fold(Integer::one(), |acc, q| acc.lcm(q.denom()))
}

/// Multiplies every value by the common denominator `D`, returning the
/// integer vector and `D`.
pub fn clear_rational_denominators(values: &[Rational]) -> (Vec<Integer>, Integer) {
    let d = common_denominator(values);
    let cleared = values
        .iter()
        .map(|q| q.numer() * (&d / q.denom()))
        .collect();
    (cleared, d)
}

/// Divides out the gcd and makes the first nonzero entry positive.
/// Returns the input unchanged (apart from sign) when all entries are zero.
pub fn primitive(values: &[Integer]) -> Vec<Integer> {
    let g = values.iter().fold(Integer::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<Integer> = if g.is_zero() {
        values.to_vec()
    } else {
        values.iter().map(|x| x / &g).collect()
    };
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.sign() == Sign::Minus {
            out.iter_mut().for_each(|x| *x = -&*x);
        }
    }
    out
}

/// Primitive integer representative of a rational vector under scaling.
pub fn primitive_rational(values: &[Rational]) -> Vec<Integer> {
    primitive(&clear_rational_denominators(values).0)
}
