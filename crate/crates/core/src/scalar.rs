//! Arbitrary-precision rational scalars and the exact comparison helpers
//! everything downstream builds on.
//!
//! `Rational` is backed by `num_rational::BigRational`, which keeps values
//! canonical (positive denominator, reduced) after every operation. No
//! floating point enters any verdict; inequalities containing a square root
//! are decided in squared form via [`cmp_sqrt_scaled`].

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact signed rational scalar, canonical after every operation.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued `Rational`.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("operand must be nonnegative: {0}")]
    NegativeOperand(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Binomial coefficient `C(n, k)` as an exact integer.
///
/// Out-of-range `k` (negative or above `n`) yields 0, matching the
/// convention `e_k = 0` outside `0..=n`.
pub fn binomial_int(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut c = BigInt::one();
    // c stays integral at every step: after multiplying by (n-k+i) the
    // product of i consecutive integers is divisible by i!.
    for i in 1..=k {
        c = c * BigInt::from(n - k + i) / BigInt::from(i);
    }
    c
}

/// Binomial coefficient `C(n, k)` as an integer-valued `Rational`.
pub fn binomial(n: u64, k: i64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

/// Exact ordering of `lhs` versus `sqrt(factor) * rhs`.
///
/// All three operands must be nonnegative; the comparison is decided by
/// squaring, which never materializes the root.
pub fn cmp_sqrt_scaled(
    lhs: &Rational,
    rhs: &Rational,
    factor: &Rational,
) -> Result<Ordering, ScalarError> {
    for (name, v) in [("lhs", lhs), ("rhs", rhs), ("factor", factor)] {
        if v.is_negative() {
            return Err(ScalarError::NegativeOperand(format!("{name} = {v}")));
        }
    }
    Ok((lhs * lhs).cmp(&(factor * rhs * rhs)))
}

/// Parses a rational from `"p"`, `"p/q"` or an exact decimal literal such
/// as `"0.25"`. A single leading sign is accepted.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| ParseRationalError::Invalid(s.into()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| ParseRationalError::Invalid(s.into()))?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.into()));
        }
        if d.is_negative() {
            return Err(ParseRationalError::Invalid(s.into()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(ParseRationalError::Invalid(s.into()));
        }
        let int_val = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int_digits).map_err(|_| ParseRationalError::Invalid(s.into()))?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac_val = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(frac_part).map_err(|_| ParseRationalError::Invalid(s.into()))?
        };
        let num = (int_val * &scale + frac_val) * BigInt::from(sign);
        return Ok(Rational::new(num, scale));
    }
    let n = BigInt::from_str(t).map_err(|_| ParseRationalError::Invalid(s.into()))?;
    Ok(Rational::from_integer(n))
}

/// Canonical string form: `"p/q"`, with `/q` omitted when the denominator
/// is one. This is the wire format used by every file the tools emit.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Fixed-point decimal rendering with `digits` places, rounding half away
/// from zero. Display convenience only; verdicts never use it.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
    let double = BigInt::from(2);
    let half_adjusted = if num.is_negative() {
        (num * &double - &den) / (den * &double)
    } else {
        (num * &double + &den) / (den * &double)
    };
    let neg = half_adjusted.is_negative();
    let abs = half_adjusted.magnitude().to_string();
    let mut int_part;
    let frac_part;
    if abs.len() > digits {
        int_part = abs[..abs.len() - digits].to_string();
        frac_part = abs[abs.len() - digits..].to_string();
    } else {
        int_part = "0".to_string();
        frac_part = format!("{abs:0>digits$}");
    }
    if neg && (int_part != "0" || frac_part.chars().any(|c| c != '0')) {
        int_part = format!("-{int_part}");
    }
    if digits == 0 {
        int_part
    } else {
        format!("{int_part}.{frac_part}")
    }
}

/// Serde adapter storing a `Rational` as its canonical string.
pub mod rational_string {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }
}
