//! Arbitrary-precision rational helpers.
//!
//! Rationals are the primitive scalar of the whole crate. `num_rational`
//! keeps values in lowest terms automatically, which the canonical-form
//! invariants elsewhere rely on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

pub fn half() -> Rat {
    frac(1, 2)
}

/// Parse `"p"` or `"p/q"` (optionally signed) into a rational in lowest terms.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    let (num_str, den_str) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: Int = num_str.parse().map_err(|_| bad())?;
    let den: Int = den_str.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Format as `"p"` or `"p/q"`, always in lowest terms.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Fractional part in `[0, 1)`.
pub fn fract_mod1(r: &Rat) -> Rat {
    r - r.floor()
}

/// Denominator as `u64`; errors when it does not fit.
pub fn denom_u64(r: &Rat) -> Result<u64, Error> {
    r.denom().to_u64().ok_or(Error::DenominatorTooLarge)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return a.max(b);
    }
    a / a.gcd(&b) * b
}

/// Exact conversion to `i64`; panics if the rational is not an integer in range.
/// Only used on values whose integrality was certified beforehand.
pub fn to_i64(r: &Rat) -> i64 {
    debug_assert!(is_integer(r));
    r.numer().to_i64().expect("integer out of i64 range")
}
