//! Exact real-root counting by Sturm sequences, and the cycle type of complex
//! conjugation acting on the roots.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::rat::sign;
use crate::arith::{Rat, RatPoly};
use crate::error::{Error, Result};

/// `p0 = f`, `p1 = f'`, `p(i+1) = -rem(p(i-1), p(i))`.
///
/// Each member is rescaled by a positive constant (monic up to sign), which
/// leaves every sign variation count unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<RatPoly>,
}

fn normalize_positive(p: RatPoly) -> RatPoly {
    let l = p.leading().abs();
    p.scale(&l.recip())
}

impl SturmChain {
    pub fn new(f: &RatPoly) -> Result<Self> {
        match f.degree() {
            None => return Err(Error::ConstantPolynomial),
            Some(0) => {
                return Ok(SturmChain {
                    polys: vec![f.clone()],
                })
            }
            Some(_) => {}
        }
        let mut polys = vec![
            normalize_positive(f.clone()),
            normalize_positive(f.derivative()),
        ];
        loop {
            let n = polys.len();
            let r = polys[n - 2].rem(&polys[n - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push(normalize_positive(-r));
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.polys
    }

    /// Sign variations of the chain evaluated at `x`.
    pub fn variations_at(&self, x: &Rat) -> usize {
        variations(self.polys.iter().map(|p| sign(&p.eval(x))))
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.polys.iter().map(|p| {
            let s = sign(&p.leading());
            if !positive && p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `1 + max |a_i / a_n|`: every complex root has absolute value below it.
pub fn cauchy_bound(f: &RatPoly) -> Rat {
    let lc = f.leading();
    let n = f.coeffs().len() - 1;
    f.coeffs()[..n]
        .iter()
        .map(|c| (c / &lc).abs())
        .fold(Rat::zero(), |m, v| if v > m { v } else { m })
        + Rat::one()
}

/// Number of distinct real roots of the squarefree `f`, restricted to the open
/// interval `(a, b)` when one is given.
pub fn count_real_roots(f: &RatPoly, interval: Option<(&Rat, &Rat)>) -> Result<usize> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::ConstantPolynomial);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let chain = SturmChain::new(f)?;
    let (lo, hi) = match interval {
        Some((a, b)) => {
            for e in [a, b] {
                if f.eval(e).is_zero() {
                    return Err(Error::EndpointIsRoot(crate::arith::rat::fmt_rat(e)));
                }
            }
            if a >= b {
                return Ok(0);
            }
            (a.clone(), b.clone())
        }
        None => {
            let bound = cauchy_bound(f);
            (-bound.clone(), bound)
        }
    };
    let (vl, vh) = (chain.variations_at(&lo), chain.variations_at(&hi));
    // no root sits at an endpoint, so V(lo) - V(hi) counts roots in (lo, hi)
    vl.checked_sub(vh)
        .ok_or_else(|| Error::Inconsistent("Sturm variation count went negative".into()))
}

/// Cycle type of complex conjugation on the roots of a real polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationType {
    pub fixed_points: usize,
    pub two_cycles: usize,
}

pub fn conjugation_type(f: &RatPoly) -> Result<ConjugationType> {
    let n = f.degree().unwrap_or(0);
    let real = count_real_roots(f, None)?;
    if real > n || !(n - real).is_multiple_of(2) {
        return Err(Error::Inconsistent(format!(
            "{real} real roots for a degree-{n} polynomial"
        )));
    }
    Ok(ConjugationType {
        fixed_points: real,
        two_cycles: (n - real) / 2,
    })
}

/// Whether complex conjugation acts as an `S5`-element of type (2,2).
///
/// In the natural action on five roots such an element fixes one root; in the
/// transitive action on six roots it fixes two (see
/// [`crate::groups::s5::fixed_point_table`]).
pub fn condition2_holds(f: &RatPoly) -> Result<bool> {
    let deg = f.deg();
    let want = match deg {
        5 => 1,
        6 => 2,
        _ => {
            return Err(Error::WrongDegree {
                expected: "5 or 6".into(),
                got: deg,
            })
        }
    };
    Ok(conjugation_type(f)?.fixed_points == want)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn examples() {
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), None).unwrap(), 0);
        assert_eq!(
            count_real_roots(&p(&[-1, -1, 0, 0, 0, 1]), None).unwrap(),
            1
        );
        let explicit = p(&[11, 64, 80, 40, 0, 4, 1]);
        assert_eq!(count_real_roots(&explicit, None).unwrap(), 2);
        assert!(condition2_holds(&explicit).unwrap());
        assert!(condition2_holds(&p(&[-1, -1, 0, 0, 0, 1])).unwrap());
        assert!(!condition2_holds(&p(&[1, 0, 0, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn conjugation_types() {
        let t = conjugation_type(&p(&[1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!((t.fixed_points, t.two_cycles), (0, 3));
        let t = conjugation_type(&p(&[-1, -1, 0, 0, 0, 1])).unwrap();
        assert_eq!((t.fixed_points, t.two_cycles), (1, 2));
        let t = conjugation_type(&p(&[11, 64, 80, 40, 0, 4, 1])).unwrap();
        assert_eq!((t.fixed_points, t.two_cycles), (2, 2));
    }

    #[test]
    fn intervals() {
        // x^2 - 2
        let f = p(&[-2, 0, 1]);
        assert_eq!(count_real_roots(&f, Some((&int(0), &int(2)))).unwrap(), 1);
        assert_eq!(count_real_roots(&f, Some((&int(-2), &int(2)))).unwrap(), 2);
        assert_eq!(
            count_real_roots(&f, Some((&rat(3, 2), &int(2)))).unwrap(),
            0
        );
        let g = p(&[-1, 0, 1]);
        assert!(matches!(
            count_real_roots(&g, Some((&int(1), &int(3)))),
            Err(Error::EndpointIsRoot(_))
        ));
    }

    #[test]
    fn errors() {
        assert_eq!(
            count_real_roots(&p(&[1, 2, 1]), None),
            Err(Error::NotSquarefree)
        );
        assert!(matches!(
            condition2_holds(&p(&[1, 0, 1])),
            Err(Error::WrongDegree { .. })
        ));
    }
}
