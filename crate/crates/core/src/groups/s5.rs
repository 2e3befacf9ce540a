//! The two conjugacy classes of subgroups `S5 < S6` and the tests telling
//! them apart.
//!
//! The transitive copy is `PGL2(F5)` acting on the six points of `P1(F5)`,
//! enumerated in the fixed order `inf, 0, 1, 2, 3, 4` (points `1..6`).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::perm::{class_size_in, is_subgroup, is_transitive, Perm6};
use super::symplectic::phi;
use crate::error::{Error, Result};

/// Index of a point of `P1(F5)`; `None` is infinity.
fn p1f5_index(pt: Option<u64>) -> usize {
    match pt {
        None => 0,
        Some(z) => 1 + z as usize,
    }
}

fn mobius_f5(m: [u64; 4], pt: Option<u64>) -> Option<u64> {
    use crate::arith::fp::{inv_mod, mul_mod};
    let [a, b, c, d] = m;
    let p = 5;
    let (num, den) = match pt {
        None => (a, c),
        Some(z) => ((mul_mod(a, z, p) + b) % p, (mul_mod(c, z, p) + d) % p),
    };
    if den == 0 {
        None
    } else {
        Some(mul_mod(num, inv_mod(den, p), p))
    }
}

/// `PGL2(F5)` acting on `P1(F5)`: a transitive subgroup of `S6` of order 120.
pub fn transitive_s5() -> Vec<Perm6> {
    let points: Vec<Option<u64>> = std::iter::once(None).chain((0..5).map(Some)).collect();
    let mut out = BTreeSet::new();
    for a in 0..5u64 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    if (a * d + 25 - b * c % 5) % 5 == 0 {
                        continue;
                    }
                    let mut images = [0u8; 6];
                    for &pt in &points {
                        images[p1f5_index(pt)] = p1f5_index(mobius_f5([a, b, c, d], pt)) as u8;
                    }
                    out.insert(Perm6::from_images(images).expect("Mobius maps are bijective"));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Stabilizer of the point 6 in `S6`.
pub fn point_stabilizer_s5() -> Vec<Perm6> {
    Perm6::all()
        .into_iter()
        .filter(|g| g.apply(5) == 5)
        .collect()
}

/// Conjugacy class of an element of an abstract group isomorphic to `S5`,
/// named by its cycle type in the natural action on five letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum S5Class {
    #[serde(rename = "1")]
    Identity,
    #[serde(rename = "(2)")]
    Transposition,
    #[serde(rename = "(2,2)")]
    DoubleTransposition,
    #[serde(rename = "(3)")]
    ThreeCycle,
    #[serde(rename = "(4)")]
    FourCycle,
    #[serde(rename = "(5)")]
    FiveCycle,
    #[serde(rename = "(3,2)")]
    ThreeTwo,
}

/// Identifies the `S5` class of `g in h` from its order and the size of its
/// conjugacy class in `h`; these two invariants separate all seven classes.
pub fn s5_class_in(g: &Perm6, h: &[Perm6]) -> Result<S5Class> {
    let size = class_size_in(g, h);
    use S5Class::*;
    let class = match (g.order(), size) {
        (1, 1) => Identity,
        (2, 10) => Transposition,
        (2, 15) => DoubleTransposition,
        (3, 20) => ThreeCycle,
        (4, 30) => FourCycle,
        (5, 24) => FiveCycle,
        (6, 20) => ThreeTwo,
        (o, s) => {
            return Err(Error::Inconsistent(format!(
                "element {g} of order {o} with class size {s} does not fit S5"
            )))
        }
    };
    Ok(class)
}

/// For every `S5` class: the set of `S6` cycle types its elements have.
pub fn fixed_point_table(h: &[Perm6]) -> Result<BTreeMap<S5Class, BTreeSet<Vec<usize>>>> {
    let mut table: BTreeMap<S5Class, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for g in h {
        table
            .entry(s5_class_in(g, h)?)
            .or_default()
            .insert(g.cycle_type());
    }
    Ok(table)
}

/// All `S6` cycle types occurring in `h`.
pub fn cycle_types(h: &[Perm6]) -> BTreeSet<Vec<usize>> {
    h.iter().map(|g| g.cycle_type()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum S5Type {
    /// Transitive on six letters; elements of order 3 and 6 have trace 0.
    S5a,
    /// Fixes a letter; elements of order 3 and 6 have trace 1.
    S5b,
}

/// Classifies a subgroup `h < S6` of order 120.
///
/// The transitivity criterion decides; the trace criterion on `phi(h)` and the
/// presence of a (3,3)-element must agree with it.
pub fn classify_s5_image(h: &[Perm6]) -> Result<S5Type> {
    let distinct: BTreeSet<_> = h.iter().collect();
    if distinct.len() != 120 {
        return Err(Error::NotS5(distinct.len()));
    }
    if !is_subgroup(h) {
        return Err(Error::Inconsistent(
            "input is not closed under composition".into(),
        ));
    }
    let by_transitivity = if is_transitive(h) {
        S5Type::S5a
    } else {
        S5Type::S5b
    };

    let traces: BTreeSet<u8> = h
        .iter()
        .filter(|g| matches!(g.order(), 3 | 6))
        .map(|g| phi(g).trace())
        .collect();
    let by_trace = match traces.iter().copied().collect::<Vec<_>>()[..] {
        [0] => S5Type::S5a,
        [1] => S5Type::S5b,
        _ => {
            return Err(Error::Inconsistent(format!(
                "order-3/6 elements have mixed traces {traces:?}"
            )))
        }
    };
    let has_33 = h.iter().any(|g| g.cycle_type() == [3, 3]);
    let by_33 = if has_33 { S5Type::S5a } else { S5Type::S5b };

    if by_trace != by_transitivity || by_33 != by_transitivity {
        return Err(Error::Inconsistent(format!(
            "transitivity says {by_transitivity:?}, trace says {by_trace:?}, (3,3) test says {by_33:?}"
        )));
    }
    Ok(by_transitivity)
}
