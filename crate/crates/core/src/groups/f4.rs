//! `F4 = F2(a)` with `a^2 = a + 1`, the group `SL2(F4)`, and its action on
//! the five points of `P1(F4)`.

use std::fmt;

use serde::Serialize;

use super::perm::Perm5;
use crate::error::{Error, Result};

/// Encoded as two bits: `0, 1, a = 2, a + 1 = 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    /// Generator of `F4^*`.
    pub const A: F4 = F4(2);
    pub const A1: F4 = F4(3);

    pub fn all() -> [F4; 4] {
        [F4(0), F4(1), F4(2), F4(3)]
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, o: F4) -> F4 {
        // (x1 a + x0)(y1 a + y0) with a^2 = a + 1
        let (x1, x0) = (self.0 >> 1, self.0 & 1);
        let (y1, y0) = (o.0 >> 1, o.0 & 1);
        let hi = x1 & y1;
        let c1 = (x1 & y0) ^ (x0 & y1) ^ hi;
        let c0 = (x0 & y0) ^ hi;
        F4(c1 << 1 | c0)
    }

    pub fn inv(self) -> Option<F4> {
        F4::all().into_iter().find(|y| self.mul(*y) == F4::ONE)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "a", "a+1"][self.0 as usize])
    }
}

/// `[[m00, m01], [m10, m11]]` with determinant 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SL2F4([[F4; 2]; 2]);

fn det(m: [[F4; 2]; 2]) -> F4 {
    m[0][0].mul(m[1][1]).add(m[0][1].mul(m[1][0]))
}

impl SL2F4 {
    pub fn new(m: [[F4; 2]; 2]) -> Result<Self> {
        if det(m) == F4::ONE {
            Ok(SL2F4(m))
        } else {
            Err(Error::NotSpecialLinear)
        }
    }

    pub fn identity() -> Self {
        SL2F4([[F4::ONE, F4::ZERO], [F4::ZERO, F4::ONE]])
    }

    pub fn entries(&self) -> [[F4; 2]; 2] {
        self.0
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (self.0, o.0);
        let e = |i: usize, j: usize| a[i][0].mul(b[0][j]).add(a[i][1].mul(b[1][j]));
        SL2F4([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn inverse(&self) -> Self {
        // char 2 and det 1: [[d, b], [c, a]]
        let m = self.0;
        SL2F4([[m[1][1], m[0][1]], [m[1][0], m[0][0]]])
    }

    pub fn trace(&self) -> F4 {
        self.0[0][0].add(self.0[1][1])
    }

    pub fn order(&self) -> usize {
        let mut x = *self;
        let mut n = 1;
        while x != Self::identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    /// All 60 elements.
    pub fn all() -> Vec<SL2F4> {
        let mut out = Vec::new();
        for a in F4::all() {
            for b in F4::all() {
                for c in F4::all() {
                    for d in F4::all() {
                        if let Ok(m) = SL2F4::new([[a, b], [c, d]]) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Points of `P1(F4)` in the frozen order `inf, 0, 1, a, a+1`.
pub const P1F4_POINTS: [Option<F4>; 5] = [
    None,
    Some(F4::ZERO),
    Some(F4::ONE),
    Some(F4::A),
    Some(F4::A1),
];

fn p1_index(pt: Option<F4>) -> usize {
    P1F4_POINTS.iter().position(|q| *q == pt).unwrap()
}

fn mobius(m: [[F4; 2]; 2], pt: Option<F4>) -> Option<F4> {
    let (num, den) = match pt {
        None => (m[0][0], m[1][0]),
        Some(z) => (m[0][0].mul(z).add(m[0][1]), m[1][0].mul(z).add(m[1][1])),
    };
    den.inv().map(|inv| num.mul(inv))
}

/// Permutation of `P1(F4)` induced by `z -> (m00 z + m01) / (m10 z + m11)`.
pub fn sl2f4_to_a5(m: &SL2F4) -> Perm5 {
    let mut images = [0u8; 5];
    for (i, &pt) in P1F4_POINTS.iter().enumerate() {
        images[i] = p1_index(mobius(m.0, pt)) as u8;
    }
    Perm5::from_images(images).expect("Mobius transformations are bijective")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SL2F4Class {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "5A")]
    FiveA,
    #[serde(rename = "5B")]
    FiveB,
}

/// `[[0, 1], [1, a]]`
pub fn five_a_rep() -> SL2F4 {
    SL2F4([[F4::ZERO, F4::ONE], [F4::ONE, F4::A]])
}

/// `[[0, 1], [1, a^2]]`
pub fn five_b_rep() -> SL2F4 {
    SL2F4([[F4::ZERO, F4::ONE], [F4::ONE, F4::A.mul(F4::A)]])
}

pub fn are_conjugate(x: &SL2F4, y: &SL2F4) -> bool {
    SL2F4::all()
        .iter()
        .any(|p| p.mul(x).mul(&p.inverse()) == *y)
}

pub fn sl2f4_class_of(m: &SL2F4) -> Result<SL2F4Class> {
    Ok(match m.order() {
        1 => SL2F4Class::One,
        2 => SL2F4Class::Two,
        3 => SL2F4Class::Three,
        5 if are_conjugate(m, &five_a_rep()) => SL2F4Class::FiveA,
        5 if are_conjugate(m, &five_b_rep()) => SL2F4Class::FiveB,
        o => {
            return Err(Error::Inconsistent(format!(
                "element of order {o} outside the listed classes"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    #[test]
    fn field_axioms() {
        for x in F4::all() {
            assert_eq!(x.add(x), F4::ZERO);
            assert_eq!(x.mul(F4::ONE), x);
            if !x.is_zero() {
                assert_eq!(x.mul(x.inv().unwrap()), F4::ONE);
            }
            for y in F4::all() {
                assert_eq!(x.mul(y), y.mul(x));
                for z in F4::all() {
                    assert_eq!(x.mul(y.add(z)), x.mul(y).add(x.mul(z)));
                    assert_eq!(x.mul(y).mul(z), x.mul(y.mul(z)));
                }
            }
        }
        assert_eq!(F4::A.mul(F4::A), F4::A1);
        // a generates F4^*: a, a^2, a^3 are distinct and a^3 = 1
        assert_eq!(F4::A.mul(F4::A).mul(F4::A), F4::ONE);
    }

    #[test]
    fn det_check() {
        assert!(SL2F4::new([[F4::A, F4::ZERO], [F4::ZERO, F4::A]]).is_err());
        assert_eq!(SL2F4::all().len(), 60);
    }

    #[test]
    fn representative_images() {
        assert!(sl2f4_to_a5(&SL2F4::identity()).is_identity());
        let u = SL2F4::new([[F4::ONE, F4::ZERO], [F4::ONE, F4::ONE]]).unwrap();
        let pu = sl2f4_to_a5(&u);
        assert_eq!(pu.cycle_type(), vec![2, 2, 1]);
        assert!(pu.is_even());
        assert_eq!(sl2f4_to_a5(&five_a_rep()).cycle_type(), vec![5]);
    }

    #[test]
    fn image_is_a5() {
        let all = SL2F4::all();
        let images: BTreeSet<_> = all.iter().map(sl2f4_to_a5).collect();
        assert_eq!(images.len(), 60);
        assert!(images.iter().all(|g| g.is_even()));
        for x in &all {
            for y in all.iter().step_by(5) {
                assert_eq!(
                    sl2f4_to_a5(&x.mul(y)),
                    sl2f4_to_a5(x).compose(&sl2f4_to_a5(y))
                );
            }
        }
    }

    #[test]
    fn classes() {
        let d = SL2F4::new([[F4::A, F4::ZERO], [F4::ZERO, F4::A.inv().unwrap()]]).unwrap();
        assert_eq!(sl2f4_class_of(&d).unwrap(), SL2F4Class::Three);
        assert_eq!(sl2f4_class_of(&five_a_rep()).unwrap(), SL2F4Class::FiveA);
        assert_eq!(sl2f4_class_of(&five_b_rep()).unwrap(), SL2F4Class::FiveB);
        let mut sizes: BTreeMap<SL2F4Class, usize> = BTreeMap::new();
        for m in SL2F4::all() {
            *sizes.entry(sl2f4_class_of(&m).unwrap()).or_default() += 1;
        }
        assert_eq!(
            sizes.values().copied().collect::<Vec<_>>(),
            vec![1, 15, 20, 12, 12]
        );
    }
}
