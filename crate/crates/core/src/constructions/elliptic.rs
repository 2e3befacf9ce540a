//! Elliptic curves `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over `Q`,
//! their Weierstrass invariants, the 5-division quintic and its sextic
//! resolvent, and Frobenius traces by point counting.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::fp::is_prime;
use crate::arith::rat::rat_mod_p;
use crate::arith::{fmt_rat, int, parse_rat, Rat, RatPoly};
use crate::error::{Error, Result};

/// Largest prime accepted by [`ap`].
pub const AP_PRIME_BOUND: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurveQ {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a6: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub b2: Rat,
    pub b4: Rat,
    pub b6: Rat,
    pub b8: Rat,
    pub c4: Rat,
    pub c6: Rat,
    pub disc: Rat,
}

impl Serialize for Invariants {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Invariants", 7)?;
        for (k, v) in [
            ("b2", &self.b2),
            ("b4", &self.b4),
            ("b6", &self.b6),
            ("b8", &self.b8),
            ("c4", &self.c4),
            ("c6", &self.c6),
            ("disc", &self.disc),
        ] {
            st.serialize_field(k, &fmt_rat(v))?;
        }
        st.end()
    }
}

/// Invariants of the (possibly singular) Weierstrass equation.
pub fn ec_invariants(a: &[Rat; 5]) -> Invariants {
    let [a1, a2, a3, a4, a6] = a;
    let b2 = a1 * a1 + int(4) * a2;
    let b4 = int(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + int(4) * a6;
    let b8 = a1 * a1 * a6 + int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - int(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + int(36) * &b2 * &b4 - int(216) * &b6;
    let disc = -(&b2 * &b2 * &b8) - int(8) * &b4 * &b4 * &b4 - int(27) * &b6 * &b6
        + int(9) * &b2 * &b4 * &b6;
    Invariants {
        b2,
        b4,
        b6,
        b8,
        c4,
        c6,
        disc,
    }
}

impl EllipticCurveQ {
    pub fn new(a: [Rat; 5]) -> Result<Self> {
        if ec_invariants(&a).disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        let [a1, a2, a3, a4, a6] = a;
        Ok(EllipticCurveQ { a1, a2, a3, a4, a6 })
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(int))
    }

    /// Parses `a1,a2,a3,a4,a6`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<Rat> = s.split(',').map(parse_rat).collect::<Result<_>>()?;
        let a: [Rat; 5] = parts.try_into().map_err(|_| {
            Error::Parse(format!(
                "expected five coefficients a1,a2,a3,a4,a6 in `{s}`"
            ))
        })?;
        Self::new(a)
    }

    pub fn coeffs(&self) -> [Rat; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn invariants(&self) -> Invariants {
        ec_invariants(&self.coeffs())
    }
}

impl fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs().iter().map(fmt_rat).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// `x^5 - 40 D x^2 - 5 c4 D x - c4^2 D`.
pub fn theta_e5(e: &EllipticCurveQ) -> RatPoly {
    let Invariants { c4, disc: d, .. } = e.invariants();
    RatPoly::new(vec![
        -(&c4 * &c4 * &d),
        int(-5) * &c4 * &d,
        int(-40) * &d,
        int(0),
        int(0),
        int(1),
    ])
}

/// `x^6 + b2 x^5 + 10 b4 x^4 + 40 b6 x^3 + 80 b8 x^2 + 16 (b2 b8 - b4 b6) x
///  + (-b2 b4 b6 + b2^2 b8 - 5 b6^2)`.
pub fn f_e6(e: &EllipticCurveQ) -> RatPoly {
    let Invariants { b2, b4, b6, b8, .. } = e.invariants();
    RatPoly::new(vec![
        -(&b2 * &b4 * &b6) + &b2 * &b2 * &b8 - int(5) * &b6 * &b6,
        int(16) * (&b2 * &b8 - &b4 * &b6),
        int(80) * &b8,
        int(40) * &b6,
        int(10) * &b4,
        b2,
        int(1),
    ])
}

/// Reduction of the coefficients mod `p`, or why the model is bad at `p`.
pub fn reduce_curve(e: &EllipticCurveQ, p: u64) -> Result<[u64; 5]> {
    let d = e.invariants().disc;
    let mut out = [0u64; 5];
    for (o, a) in out.iter_mut().zip(e.coeffs().iter()) {
        *o = rat_mod_p(a, p).ok_or(Error::BadReduction(p))?;
    }
    if rat_mod_p(&d, p).is_none_or(|v| v == 0) {
        return Err(Error::BadReduction(p));
    }
    Ok(out)
}

/// `a_p = p + 1 - #E(F_p)` by enumerating `x` and solving the quadratic in `y`.
pub fn ap(e: &EllipticCurveQ, p: u64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > AP_PRIME_BOUND {
        return Err(Error::PrimeTooLarge(p, AP_PRIME_BOUND));
    }
    let [a1, a2, a3, a4, a6] = reduce_curve(e, p)?;
    let mut points: u64 = 1;
    if p == 2 {
        for x in 0..2 {
            for y in 0..2 {
                let lhs = (y * y + a1 * x * y + a3 * y) % 2;
                let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                points += u64::from(lhs == rhs);
            }
        }
    } else {
        // y^2 + B y = C has 1 + chi(B^2 + 4C) solutions
        let mut is_square = vec![false; p as usize];
        for y in 0..p {
            is_square[(y * y % p) as usize] = true;
        }
        for x in 0..p {
            let b = (a1 * x + a3) % p;
            let c = (((x + a2) % p * x % p + a4) % p * x % p + a6) % p;
            let d = (b * b + 4 * c) % p;
            points += if d == 0 {
                1
            } else if is_square[d as usize] {
                2
            } else {
                0
            };
        }
    }
    Ok(p as i64 + 1 - points as i64)
}
