//! Rational helpers on top of [`num_rational::BigRational`].
//!
//! `BigRational` keeps every value reduced with a positive denominator, which
//! is exactly the normal form the rest of the crate relies on for equality.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact integer square root test.
pub fn is_square_int(n: &BigInt) -> bool {
    if n.sign() == Sign::Minus {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// True iff `r = q^2` for some rational `q`.
pub fn is_rational_square(r: &Rat) -> bool {
    // reduced form: a/b is a square iff a and b both are
    !r.is_negative() && is_square_int(r.numer()) && is_square_int(r.denom())
}

pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    use num_integer::Integer;
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Residue of `r` modulo the prime `p`, or `None` when `p` divides the denominator.
pub fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    use num_integer::Integer;
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb);
    if d.is_zero() {
        return None;
    }
    let n = r.numer().mod_floor(&pb);
    let n = u64::try_from(n).ok()?;
    let d = u64::try_from(d).ok()?;
    Some(super::fp::mul_mod(n, super::fp::inv_mod(d, p), p))
}
