//! Evidence that the mod-5 representation of an elliptic curve is surjective.
//!
//! Frobenius at a good prime `p != 5` has trace `a_p` and determinant `p`
//! mod 5. Each maximal subgroup class of `GL2(F5)` with surjective
//! determinant only realizes some `(trace, det)` pairs; one observed pair
//! outside that set rules the class out.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::elliptic::{ap, EllipticCurveQ, AP_PRIME_BOUND};
use crate::arith::fp::primes_between;

/// Escape probability below which a surviving subgroup counts as refuted.
pub const REFUTATION_THRESHOLD: f64 = 1e-9;

/// Fewer usable primes than this leaves the verdict open.
pub const MIN_PRIMES: usize = 5;

type M2 = [u8; 4];

fn mul(a: &M2, b: &M2) -> M2 {
    let e = |i: usize, j: usize| (a[2 * i] * b[j] + a[2 * i + 1] * b[2 + j]) % 5;
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

fn det(m: &M2) -> u8 {
    (m[0] * m[3] + 25 - m[1] * m[2] % 5) % 5
}

fn trace(m: &M2) -> u8 {
    (m[0] + m[3]) % 5
}

/// The 480 elements of `GL2(F5)` as `[a, b, c, d]`.
pub fn gl2_f5() -> Vec<M2> {
    let mut out = Vec::with_capacity(480);
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    let m = [a, b, c, d];
                    if det(&m) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

fn closure(gens: &[M2]) -> BTreeSet<M2> {
    let mut group: BTreeSet<M2> = BTreeSet::from([[1, 0, 0, 1]]);
    let mut frontier = vec![[1, 0, 0, 1]];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if group.insert(y) {
                frontier.push(y);
            }
        }
    }
    group
}

/// Order of the image in `PGL2(F5)`.
fn projective_order(m: &M2) -> usize {
    let mut x = *m;
    let mut n = 1;
    while !(x[1] == 0 && x[2] == 0 && x[0] == x[3]) {
        x = mul(&x, m);
        n += 1;
    }
    n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Obstruction {
    Borel,
    SplitCartanNormalizer,
    NonsplitCartanNormalizer,
    /// Preimage of `S4 < PGL2(F5)`.
    Exceptional,
}

impl Obstruction {
    pub const ALL: [Obstruction; 4] = [
        Obstruction::Borel,
        Obstruction::SplitCartanNormalizer,
        Obstruction::NonsplitCartanNormalizer,
        Obstruction::Exceptional,
    ];
}

/// A representative of each maximal subgroup class, all containing the scalars.
pub fn obstruction_subgroup(o: Obstruction) -> Vec<M2> {
    let all = gl2_f5();
    let set: BTreeSet<M2> = match o {
        Obstruction::Borel => all.into_iter().filter(|m| m[2] == 0).collect(),
        Obstruction::SplitCartanNormalizer => all
            .into_iter()
            .filter(|m| (m[1] == 0 && m[2] == 0) || (m[0] == 0 && m[3] == 0))
            .collect(),
        Obstruction::NonsplitCartanNormalizer => {
            // F25 = F5(sqrt 2): a + b sqrt 2 acts as [[a, 2b], [b, a]]
            let cartan = all.iter().filter(|m| m[0] == m[3] && m[1] == 2 * m[2] % 5);
            let conj: M2 = [1, 0, 0, 4];
            cartan.flat_map(|m| [*m, mul(m, &conj)]).collect()
        }
        Obstruction::Exceptional => {
            let scalars: Vec<M2> = (1..5).map(|a| [a, 0, 0, a]).collect();
            let fours: Vec<&M2> = all.iter().filter(|m| projective_order(m) == 4).collect();
            let threes: Vec<&M2> = all.iter().filter(|m| projective_order(m) == 3).collect();
            fours
                .iter()
                .flat_map(|g| threes.iter().map(move |h| (*g, *h)))
                .map(|(g, h)| {
                    let mut gens = vec![*g, *h];
                    gens.extend(&scalars);
                    closure(&gens)
                })
                .find(|grp| grp.len() == 96)
                .expect("PGL2(F5) = S5 contains S4")
        }
    };
    set.into_iter().collect()
}

pub type TraceDet = (u8, u8);

/// `(trace, det)` pairs realized by each obstruction, and by the whole group
/// with multiplicities.
pub struct TraceDetTables {
    pub full: BTreeMap<TraceDet, usize>,
    pub by_obstruction: BTreeMap<Obstruction, BTreeSet<TraceDet>>,
}

pub fn trace_det_tables() -> &'static TraceDetTables {
    static TABLES: OnceLock<TraceDetTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut full = BTreeMap::new();
        for m in gl2_f5() {
            *full.entry((trace(&m), det(&m))).or_insert(0) += 1;
        }
        let by_obstruction = Obstruction::ALL
            .iter()
            .map(|&o| {
                let s = obstruction_subgroup(o)
                    .iter()
                    .map(|m| (trace(m), det(m)))
                    .collect();
                (o, s)
            })
            .collect();
        TraceDetTables {
            full,
            by_obstruction,
        }
    })
}

/// Fraction of `GL2(F5)` whose `(trace, det)` lies in the obstruction's set:
/// the chance that one Frobenius from a full image fails to rule it out.
pub fn escape_probability(o: Obstruction) -> f64 {
    let t = trace_det_tables();
    let inside: usize = t.by_obstruction[&o].iter().map(|k| t.full[k]).sum();
    inside as f64 / 480.0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mod5Verdict {
    ConsistentFull,
    Inconclusive,
    RefutedFull,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Survivor {
    pub obstruction: Obstruction,
    /// Probability that a full image would have left it standing this long.
    pub escape_probability: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mod5Evidence {
    pub prime_bound: u64,
    pub primes_used: usize,
    pub primes_skipped: Vec<u64>,
    /// Observed `(a_p mod 5, p mod 5)` pairs, keyed `"trace,det"`.
    pub trace_det_pairs: BTreeMap<String, usize>,
    pub obstructions_eliminated: Vec<Obstruction>,
    pub surviving: Vec<Survivor>,
    pub verdict: Mod5Verdict,
}

pub fn mod5_full_evidence(e: &EllipticCurveQ, prime_bound: u64) -> Mod5Evidence {
    let primes: Vec<u64> = primes_between(2, prime_bound.min(AP_PRIME_BOUND))
        .into_iter()
        .filter(|&p| p != 5)
        .collect();
    let traces: Vec<(u64, Option<i64>)> = primes.par_iter().map(|&p| (p, ap(e, p).ok())).collect();

    let mut pairs: BTreeMap<TraceDet, usize> = BTreeMap::new();
    let mut skipped = Vec::new();
    for (p, a) in traces {
        match a {
            Some(a) => {
                *pairs
                    .entry((a.rem_euclid(5) as u8, (p % 5) as u8))
                    .or_insert(0) += 1
            }
            None => skipped.push(p),
        }
    }
    let used: usize = pairs.values().sum();
    let tables = trace_det_tables();
    let mut eliminated = Vec::new();
    let mut surviving = Vec::new();
    for o in Obstruction::ALL {
        if pairs.keys().any(|k| !tables.by_obstruction[&o].contains(k)) {
            eliminated.push(o);
        } else {
            surviving.push(Survivor {
                obstruction: o,
                escape_probability: escape_probability(o).powi(used as i32),
            });
        }
    }
    let verdict = if used < MIN_PRIMES {
        Mod5Verdict::Inconclusive
    } else if surviving.is_empty() {
        Mod5Verdict::ConsistentFull
    } else if surviving
        .iter()
        .any(|s| s.escape_probability < REFUTATION_THRESHOLD)
    {
        Mod5Verdict::RefutedFull
    } else {
        Mod5Verdict::Inconclusive
    };
    Mod5Evidence {
        prime_bound,
        primes_used: used,
        primes_skipped: skipped,
        trace_det_pairs: pairs
            .into_iter()
            .map(|((t, d), n)| (format!("{t},{d}"), n))
            .collect(),
        obstructions_eliminated: eliminated,
        surviving,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_subgroup(h: &[M2]) -> bool {
        let s: BTreeSet<&M2> = h.iter().collect();
        h.iter().all(|a| h.iter().all(|b| s.contains(&mul(a, b))))
    }

    #[test]
    fn subgroup_orders() {
        assert_eq!(gl2_f5().len(), 480);
        let want = [
            (Obstruction::Borel, 80),
            (Obstruction::SplitCartanNormalizer, 32),
            (Obstruction::NonsplitCartanNormalizer, 48),
            (Obstruction::Exceptional, 96),
        ];
        for (o, n) in want {
            let h = obstruction_subgroup(o);
            assert_eq!(h.len(), n, "{o:?}");
            assert!(is_subgroup(&h), "{o:?}");
            let dets: BTreeSet<u8> = h.iter().map(det).collect();
            assert_eq!(dets.len(), 4, "{o:?} must have surjective determinant");
        }
    }

    #[test]
    fn every_obstruction_misses_some_pair() {
        let t = trace_det_tables();
        assert_eq!(t.full.len(), 20);
        for o in Obstruction::ALL {
            assert!(t.by_obstruction[&o].len() < t.full.len(), "{o:?}");
            assert!(escape_probability(o) < 1.0);
        }
    }

    #[test]
    fn curve_43_is_full() {
        let e = EllipticCurveQ::from_ints([0, 1, 1, 0, 0]).unwrap();
        let ev = mod5_full_evidence(&e, 1000);
        assert_eq!(ev.verdict, Mod5Verdict::ConsistentFull);
        assert_eq!(ev.primes_skipped, vec![43]);
    }

    #[test]
    fn cm_curves_are_not_full() {
        for a in [[0, 0, 0, 0, 1], [0, 0, 0, 1, 0]] {
            let e = EllipticCurveQ::from_ints(a).unwrap();
            let ev = mod5_full_evidence(&e, 1000);
            assert_ne!(ev.verdict, Mod5Verdict::ConsistentFull, "{a:?}");
            assert!(!ev.surviving.is_empty());
        }
    }

    #[test]
    fn too_few_primes() {
        let e = EllipticCurveQ::from_ints([0, 1, 1, 0, 0]).unwrap();
        assert_eq!(mod5_full_evidence(&e, 7).verdict, Mod5Verdict::Inconclusive);
    }
}
