//! Galois group of quintics `x^5 + s x^3 + t x + t` via the Weber sextic
//! resolvent: the group sits inside `F20` exactly when the resolvent has a
//! rational root, and inside `A5` exactly when the discriminant is a square.

use serde::Serialize;

use super::zassenhaus::{has_rational_root, is_irreducible_q, rational_roots};
use crate::arith::{discriminant, fmt_rat, int, is_rational_square, Rat, RatPoly};
use crate::error::{Error, Result};

/// Reads `(s, t)` off a quintic of the shape `x^5 + s x^3 + t x + t`.
pub fn hermite_params(h: &RatPoly) -> Result<(Rat, Rat)> {
    let c = |i| h.coeff(i);
    let shaped =
        h.degree() == Some(5) && h.is_monic() && c(4) == int(0) && c(2) == int(0) && c(1) == c(0);
    if shaped {
        Ok((c(3), c(1)))
    } else {
        Err(Error::NotHermiteShape)
    }
}

/// `x^5 + s x^3 + t x + t`.
pub fn hermite_quintic(s: &Rat, t: &Rat) -> RatPoly {
    RatPoly::new(vec![
        t.clone(),
        t.clone(),
        int(0),
        s.clone(),
        int(0),
        int(1),
    ])
}

/// The cubic coefficients `(b0, b2, b4)` of the resolvent.
pub fn resolvent_cubic_coeffs(s: &Rat, t: &Rat) -> (Rat, Rat, Rat) {
    let s2 = s * s;
    let s4 = &s2 * &s2;
    let t2 = t * t;
    let b0 = int(-176) * &s2 * &t2 + int(28) * &s4 * t + int(4000) * s * &t2 - &s4 * &s2
        + int(320) * &t2 * t;
    let b2 = int(3) * &s4 - int(8) * &s2 * t + int(240) * &t2;
    let b4 = int(-3) * &s2 - int(20) * t;
    (b0, b2, b4)
}

/// `(x^3 + b4 x^2 + b2 x + b0)^2 - 1024 disc(h) x` for `h = x^5 + s x^3 + t x + t`.
pub fn weber_resolvent(s: &Rat, t: &Rat) -> Result<RatPoly> {
    let d = discriminant(&hermite_quintic(s, t))?;
    if d == int(0) {
        return Err(Error::ZeroDiscriminant);
    }
    let (b0, b2, b4) = resolvent_cubic_coeffs(s, t);
    let cubic = RatPoly::new(vec![b0, b2, b4, int(1)]);
    Ok(&cubic * &cubic - RatPoly::monomial(int(1024) * d, 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuinticGalois {
    pub s: String,
    pub t: String,
    pub irreducible: bool,
    /// Present only for irreducible quintics.
    pub resolvent: Option<String>,
    pub resolvent_rational_roots: Vec<String>,
    pub disc: String,
    pub disc_square: bool,
    pub is_s5: bool,
    pub reason: Option<String>,
}

/// Decides whether the splitting field of a Hermite-shape quintic has group `S5`.
pub fn quintic_galois(h: &RatPoly) -> Result<QuinticGalois> {
    let (s, t) = hermite_params(h)?;
    let disc = discriminant(h)?;
    let disc_square = is_rational_square(&disc);
    let mut out = QuinticGalois {
        s: fmt_rat(&s),
        t: fmt_rat(&t),
        irreducible: false,
        resolvent: None,
        resolvent_rational_roots: vec![],
        disc: fmt_rat(&disc),
        disc_square,
        is_s5: false,
        reason: None,
    };
    if !is_irreducible_q(h)? {
        out.reason = Some("quintic is reducible over Q".into());
        return Ok(out);
    }
    out.irreducible = true;
    let r = weber_resolvent(&s, &t)?;
    out.resolvent = Some(r.to_string());
    let solvable = has_rational_root(&r)?;
    if solvable {
        out.resolvent_rational_roots = rational_roots(&r)?.iter().map(fmt_rat).collect();
    }
    out.reason = if solvable {
        Some("resolvent has a rational root: group is contained in F20".into())
    } else if disc_square {
        Some("discriminant is a square: group is A5".into())
    } else {
        None
    };
    out.is_s5 = out.reason.is_none();
    Ok(out)
}

pub fn quintic_is_s5(h: &RatPoly) -> Result<bool> {
    Ok(quintic_galois(h)?.is_s5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    fn prime_factors(n: &BigInt) -> Vec<(BigInt, u32)> {
        let mut n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::from(2);
        while &d * &d <= n {
            let mut e = 0;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            if e > 0 {
                out.push((d.clone(), e));
            }
            d += 1;
        }
        if n > BigInt::from(1) {
            out.push((n, 1));
        }
        out
    }

    fn divisors_of_square(b: &BigInt) -> Vec<BigInt> {
        let mut out = vec![BigInt::from(1)];
        for (p, e) in prime_factors(b) {
            let mut next = Vec::new();
            for d in &out {
                let mut pk = d.clone();
                for _ in 0..=2 * e {
                    next.push(pk.clone());
                    pk *= &p;
                }
            }
            out = next;
        }
        out
    }

    /// Integer roots of a monic integer resolvent by the rational root
    /// theorem; the constant term is `b0^2`.
    fn roots_by_divisors(f: &RatPoly, b0: &Rat) -> Vec<Rat> {
        let c = f.primitive_integer();
        assert_eq!(c.last().unwrap(), &BigInt::from(1));
        assert!(!b0.is_zero());
        let eval = |x: &BigInt| c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a);
        let mut roots = Vec::new();
        for d in divisors_of_square(&b0.to_integer()) {
            for x in [d.clone(), -d] {
                if eval(&x).is_zero() {
                    roots.push(Rat::from_integer(x));
                }
            }
        }
        roots.sort();
        roots
    }

    #[test]
    fn shape() {
        assert_eq!(
            hermite_quintic(&int(0), &int(-1)),
            RatPoly::from_ints(&[-1, -1, 0, 0, 0, 1])
        );
        assert_eq!(
            hermite_quintic(&int(0), &int(0)),
            RatPoly::from_ints(&[0, 0, 0, 0, 0, 1])
        );
        assert_eq!(
            hermite_quintic(&int(1), &int(1)),
            RatPoly::from_ints(&[1, 1, 0, 1, 0, 1])
        );
        assert_eq!(
            hermite_params(&RatPoly::from_ints(&[-1, -1, 0, 0, 0, 1])).unwrap(),
            (int(0), int(-1))
        );
        assert_eq!(
            hermite_params(&RatPoly::from_ints(&[-1, 2, 0, 0, 0, 1])),
            Err(Error::NotHermiteShape)
        );
    }

    #[test]
    fn resolvent_at_witness() {
        let (b0, b2, b4) = resolvent_cubic_coeffs(&int(0), &int(-1));
        assert_eq!((b0, b2, b4), (int(-320), int(240), int(20)));
        let r = weber_resolvent(&int(0), &int(-1)).unwrap();
        assert_eq!(
            r,
            RatPoly::from_ints(&[102400, -3091456, 44800, 8960, 880, 40, 1])
        );
        assert_eq!(
            weber_resolvent(&int(0), &int(0)),
            Err(Error::ZeroDiscriminant)
        );
    }

    #[test]
    fn s5_examples() {
        let g = quintic_galois(&RatPoly::from_ints(&[-1, -1, 0, 0, 0, 1])).unwrap();
        assert!(g.is_s5);
        assert_eq!(g.disc, "2869");
        let r = weber_resolvent(&int(0), &int(-1)).unwrap();
        assert!(roots_by_divisors(&r, &int(-320)).is_empty());

        let g = quintic_galois(&RatPoly::from_ints(&[1, 1, 0, 0, 0, 1])).unwrap();
        assert!(!g.irreducible && !g.is_s5);
    }

    /// First `(s, t)` in the box `|s|, |t| <= 20` (scanned by `s` then `t`)
    /// whose quintic is irreducible and whose resolvent has a rational root.
    #[test]
    fn solvable_witness() {
        let mut found = None;
        'scan: for s in -20..=20 {
            for t in -20..=20 {
                let (s, t) = (int(s), int(t));
                let h = hermite_quintic(&s, &t);
                if t.is_zero() || !is_irreducible_q(&h).unwrap() {
                    continue;
                }
                let r = weber_resolvent(&s, &t).unwrap();
                let roots = rational_roots(&r).unwrap();
                let b0 = resolvent_cubic_coeffs(&s, &t).0;
                if !b0.is_zero() {
                    assert_eq!(roots, roots_by_divisors(&r, &b0), "s={s} t={t}");
                }
                if !roots.is_empty() {
                    found = Some((s, t));
                    break 'scan;
                }
            }
        }
        let (s, t) = found.expect("a solvable specialization in the box");
        assert_eq!((s.clone(), t.clone()), (int(-10), int(20)));
        let g = quintic_galois(&hermite_quintic(&s, &t)).unwrap();
        assert!(g.irreducible);
        assert!(!g.resolvent_rational_roots.is_empty());
        assert!(!g.is_s5);
        assert_eq!(g.resolvent_rational_roots, vec!["500"]);
        assert!(weber_resolvent(&s, &t).unwrap().eval(&int(500)).is_zero());
    }

    #[test]
    fn rational_parameters() {
        let h = hermite_quintic(&rat(1, 2), &rat(-3, 7));
        assert_eq!(hermite_params(&h).unwrap(), (rat(1, 2), rat(-3, 7)));
        assert!(weber_resolvent(&rat(1, 2), &rat(-3, 7)).is_ok());
    }
}
