//! Frobenius cycle-type sampling and the hypothesis gate for sextic models.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::factor_fp::distinct_degree;
use super::quintic::{hermite_params, quintic_galois, weber_resolvent};
use super::zassenhaus::is_irreducible_q;
use crate::arith::fp::{is_prime, primes_between};
use crate::arith::rat::lcm_of_denominators;
use crate::arith::{discriminant, is_rational_square, FpPoly, RatPoly};
use crate::error::{Error, Result};
use crate::groups::transitive_s5;
use crate::roots::{condition2_holds, count_real_roots};

/// Factor degrees of `f mod p`, in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreePattern(Vec<usize>);

impl DegreePattern {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreePattern(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for DegreePattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn reduce_mod_p(f: &RatPoly, p: u64) -> Option<FpPoly> {
    let d = lcm_of_denominators(f.coeffs());
    let pb = num_bigint::BigInt::from(p);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let v = (c.numer() * (&d / c.denom())) % &pb;
            let v = if v < num_bigint::BigInt::from(0) {
                v + &pb
            } else {
                v
            };
            u64::try_from(v).unwrap()
        })
        .collect();
    Some(FpPoly::new(p, coeffs)).filter(|g| g.degree() == f.degree())
}

/// Cycle type of Frobenius at `p`, read off the factorization of `f mod p`.
pub fn degree_pattern(f: &RatPoly, p: u64) -> Result<DegreePattern> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::ConstantPolynomial);
    }
    let g = reduce_mod_p(&RatPoly::from_bigints(&f.primitive_integer()), p)
        .filter(FpPoly::is_squarefree)
        .ok_or(Error::BadPrime(p))?;
    let mut degrees = Vec::new();
    for (h, d) in distinct_degree(&g.monic()) {
        let k = h.degree().unwrap() / d;
        degrees.extend(std::iter::repeat_n(d, k));
    }
    Ok(DegreePattern::new(degrees))
}

/// Cycle types of the transitive `S5 < S6`, read from the group itself.
pub fn allowed_patterns() -> &'static BTreeSet<DegreePattern> {
    static ALLOWED: OnceLock<BTreeSet<DegreePattern>> = OnceLock::new();
    ALLOWED.get_or_init(|| {
        transitive_s5()
            .iter()
            .map(|g| DegreePattern::new(g.cycle_type()))
            .collect()
    })
}

/// Degree patterns over all good primes `p <= prime_bound`, with counts.
pub fn cycle_type_samples(f: &RatPoly, prime_bound: u64) -> BTreeMap<DegreePattern, usize> {
    let per_prime: Vec<Option<DegreePattern>> = primes_between(2, prime_bound)
        .par_iter()
        .map(|&p| degree_pattern(f, p).ok())
        .collect();
    let mut out = BTreeMap::new();
    for pat in per_prime.into_iter().flatten() {
        *out.entry(pat).or_insert(0) += 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GaloisVerdict {
    CertifiedS5a,
    ConsistentS5a,
    /// Nothing contradicts a transitive `S5`, but the sample did not witness
    /// both a (3,3) and a (5,1) element.
    Inconclusive,
    Refuted,
}

impl GaloisVerdict {
    pub fn supports_s5a(self) -> bool {
        matches!(
            self,
            GaloisVerdict::CertifiedS5a | GaloisVerdict::ConsistentS5a
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvidenceParams {
    pub prime_bound: u64,
    pub seed: u64,
}

impl Default for EvidenceParams {
    fn default() -> Self {
        EvidenceParams {
            prime_bound: 500,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeRange {
    pub from: u64,
    pub to: u64,
    pub good: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompanionCheck {
    pub quintic: String,
    pub quintic_is_s5: bool,
    pub resolvent_matches: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisEvidence {
    pub irreducible: bool,
    pub disc_nonsquare: bool,
    pub patterns: BTreeMap<DegreePattern, usize>,
    pub forbidden: Vec<DegreePattern>,
    pub witnessed_33: bool,
    pub witnessed_51: bool,
    pub primes_used: PrimeRange,
    pub seed: u64,
    pub companion: Option<CompanionCheck>,
    pub verdict: GaloisVerdict,
}

fn check_companion(f: &RatPoly, h: &RatPoly) -> Result<CompanionCheck> {
    let (s, t) = hermite_params(h)?;
    let q = quintic_galois(h)?;
    let mut out = CompanionCheck {
        quintic: h.to_string(),
        quintic_is_s5: q.is_s5,
        resolvent_matches: false,
        reason: q.reason,
    };
    match weber_resolvent(&s, &t) {
        Ok(r) => out.resolvent_matches = r.monic() == f.monic(),
        Err(e) => out.reason = Some(e.to_string()),
    }
    if !out.resolvent_matches && out.reason.is_none() {
        out.reason = Some("sextic is not the resolvent of the companion".into());
    }
    Ok(out)
}

fn expect_sextic(f: &RatPoly) -> Result<()> {
    if f.degree() != Some(6) {
        return Err(Error::WrongDegree {
            expected: "6".into(),
            got: f.deg(),
        });
    }
    Ok(())
}

/// Evidence that the Galois group of `f` is the transitive `S5 < S6`.
///
/// A certificate needs a companion quintic `x^5 + s x^3 + t x + t` with group
/// `S5` whose resolvent is `f` up to scaling.
pub fn sextic_s5a_evidence(
    f: &RatPoly,
    companion: Option<&RatPoly>,
    params: EvidenceParams,
) -> Result<GaloisEvidence> {
    expect_sextic(f)?;
    let irreducible = is_irreducible_q(f)?;
    let disc_nonsquare = !is_rational_square(&discriminant(f)?);
    let patterns = cycle_type_samples(f, params.prime_bound);
    let allowed = allowed_patterns();
    let forbidden: Vec<DegreePattern> = patterns
        .keys()
        .filter(|p| !allowed.contains(*p))
        .cloned()
        .collect();
    let has = |d: &[usize]| patterns.contains_key(&DegreePattern::new(d.to_vec()));
    let (witnessed_33, witnessed_51) = (has(&[3, 3]), has(&[5, 1]));
    let companion = companion.map(|h| check_companion(f, h)).transpose()?;

    let verdict = if !irreducible || !disc_nonsquare || !forbidden.is_empty() {
        GaloisVerdict::Refuted
    } else if companion
        .as_ref()
        .is_some_and(|c| c.quintic_is_s5 && c.resolvent_matches)
    {
        GaloisVerdict::CertifiedS5a
    } else if witnessed_33 && witnessed_51 {
        GaloisVerdict::ConsistentS5a
    } else {
        GaloisVerdict::Inconclusive
    };
    Ok(GaloisEvidence {
        irreducible,
        disc_nonsquare,
        primes_used: PrimeRange {
            from: 2,
            to: params.prime_bound,
            good: patterns.values().sum(),
        },
        patterns,
        forbidden,
        witnessed_33,
        witnessed_51,
        seed: params.seed,
        companion,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub input: String,
    pub coeffs: String,
    pub squarefree: bool,
    pub galois: GaloisEvidence,
    /// Number of distinct real roots; absent when `f` is not squarefree.
    pub real_roots: Option<usize>,
    pub condition2: bool,
    pub pass: bool,
    pub reasons: Vec<String>,
}

/// Runs every hypothesis check on a sextic `f` and collects why it fails.
pub fn check_theorem_hypotheses(
    f: &RatPoly,
    companion: Option<&RatPoly>,
    params: EvidenceParams,
) -> Result<CheckReport> {
    expect_sextic(f)?;
    let squarefree = f.is_squarefree();
    let galois = sextic_s5a_evidence(f, companion, params)?;
    let real_roots = if squarefree {
        Some(count_real_roots(f, None)?)
    } else {
        None
    };
    let condition2 = squarefree && condition2_holds(f)?;

    let mut reasons = Vec::new();
    if !squarefree {
        reasons.push("not squarefree".to_string());
    }
    if !galois.irreducible {
        reasons.push("reducible over Q".into());
    }
    if !galois.disc_nonsquare {
        reasons.push("discriminant is a square".into());
    }
    for p in &galois.forbidden {
        reasons.push(format!("cycle pattern {p} is not in the transitive S5"));
    }
    if galois.verdict == GaloisVerdict::Inconclusive {
        for (seen, name) in [(galois.witnessed_33, "3,3"), (galois.witnessed_51, "5,1")] {
            if !seen {
                reasons.push(format!(
                    "pattern {name} not witnessed below {}",
                    params.prime_bound
                ));
            }
        }
    }
    if let Some(c) = galois.companion.as_ref().and_then(|c| c.reason.as_ref()) {
        reasons.push(format!("companion: {c}"));
    }
    if squarefree && !condition2 {
        reasons.push(format!(
            "{} real roots; condition (2) needs exactly 2",
            real_roots.unwrap_or(0)
        ));
    }
    let pass = squarefree && galois.verdict.supports_s5a() && condition2;
    Ok(CheckReport {
        input: f.to_string(),
        coeffs: f.to_coeff_list(),
        squarefree,
        galois,
        real_roots,
        condition2,
        pass,
        reasons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn explicit() -> RatPoly {
        p(&[11, 64, 80, 40, 0, 4, 1])
    }

    #[test]
    fn patterns() {
        assert_eq!(
            degree_pattern(&p(&[1, 0, 1]), 5).unwrap().to_string(),
            "1,1"
        );
        assert_eq!(degree_pattern(&p(&[1, 0, 1]), 3).unwrap().to_string(), "2");
        assert_eq!(
            degree_pattern(&p(&[-1, -1, 0, 0, 0, 1]), 5)
                .unwrap()
                .to_string(),
            "5"
        );
        assert_eq!(degree_pattern(&p(&[1, 0, 1]), 2), Err(Error::BadPrime(2)));
        assert_eq!(degree_pattern(&p(&[1, 0, 2]), 2), Err(Error::BadPrime(2)));
        assert_eq!(degree_pattern(&p(&[1, 0, 1]), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn allowed_set_from_group() {
        let got: Vec<String> = allowed_patterns().iter().map(|p| p.to_string()).collect();
        let mut want = vec![
            "1,1,1,1,1,1",
            "2,2,1,1",
            "2,2,2",
            "3,3",
            "4,1,1",
            "5,1",
            "6",
        ];
        want.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, want);
    }

    #[test]
    fn explicit_sextic_sample() {
        let s = cycle_type_samples(&explicit(), 500);
        assert!(s.keys().all(|k| allowed_patterns().contains(k)));
        assert!(s.contains_key(&DegreePattern::new(vec![3, 3])));
        assert!(s.contains_key(&DegreePattern::new(vec![5, 1])));
        let e = sextic_s5a_evidence(&explicit(), None, EvidenceParams::default()).unwrap();
        assert_eq!(e.verdict, GaloisVerdict::ConsistentS5a);
        assert_eq!(
            e,
            sextic_s5a_evidence(&explicit(), None, EvidenceParams::default()).unwrap()
        );
    }

    #[test]
    fn certified_resolvent() {
        let h = p(&[-1, -1, 0, 0, 0, 1]);
        let r = weber_resolvent(&int(0), &int(-1)).unwrap();
        let e = sextic_s5a_evidence(&r, Some(&h), EvidenceParams::default()).unwrap();
        assert_eq!(e.verdict, GaloisVerdict::CertifiedS5a);
        let c = check_theorem_hypotheses(&r, Some(&h), EvidenceParams::default()).unwrap();
        assert!(c.pass, "{:?}", c.reasons);
        assert_eq!(c.real_roots, Some(2));

        // the wrong companion does not certify
        let wrong = p(&[-2, -2, 0, 0, 0, 1]);
        let e = sextic_s5a_evidence(&r, Some(&wrong), EvidenceParams::default()).unwrap();
        assert_eq!(e.verdict, GaloisVerdict::ConsistentS5a);
        assert!(!e.companion.unwrap().resolvent_matches);
    }

    #[test]
    fn negative_controls() {
        let c =
            check_theorem_hypotheses(&p(&[1, 0, 0, 0, 0, 0, 1]), None, EvidenceParams::default())
                .unwrap();
        assert!(!c.pass);
        assert_eq!(c.real_roots, Some(0));
        assert_eq!(c.galois.verdict, GaloisVerdict::Refuted);

        // x^6 - 2 has dihedral group of order 12: every cycle type is allowed,
        // but no 5-cycle ever shows up
        let c =
            check_theorem_hypotheses(&p(&[-2, 0, 0, 0, 0, 0, 1]), None, EvidenceParams::default())
                .unwrap();
        assert!(!c.pass);
        assert!(!c.galois.witnessed_51);
        assert!(!c.galois.verdict.supports_s5a());

        assert!(matches!(
            check_theorem_hypotheses(&p(&[1, 0, 1]), None, EvidenceParams::default()),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn explicit_passes() {
        let c = check_theorem_hypotheses(&explicit(), None, EvidenceParams::default()).unwrap();
        assert!(c.pass, "{:?}", c.reasons);
        assert_eq!(c.real_roots, Some(2));
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"verdict\":\"ConsistentS5a\""));
    }
}
