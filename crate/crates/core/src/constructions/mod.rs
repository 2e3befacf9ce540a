//! Two families of sextics meeting the hypotheses: Weber resolvents of
//! Hermite quintics, and the 5-division sextics of elliptic curves.

pub mod elliptic;
pub mod hermite;
pub mod mod5;

pub use elliptic::{ap, ec_invariants, f_e6, theta_e5, EllipticCurveQ, Invariants};
pub use hermite::{
    grid_sample, lower_st, region_classify, write_grid_csv, GridRow, HermiteParams, Quadrant, Rect,
    RegionClass, SturmClass,
};
pub use mod5::{mod5_full_evidence, Mod5Evidence, Mod5Verdict, Obstruction};

use serde::Serialize;

use crate::error::Result;
use crate::galois::{check_theorem_hypotheses, is_irreducible_q, CheckReport, EvidenceParams};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremExReport {
    pub curve: String,
    pub invariants: Invariants,
    pub theta: String,
    pub sextic: String,
    pub sextic_irreducible: bool,
    pub mod5: Mod5Evidence,
    /// The sextic gate run on the same polynomial, as a cross-check.
    pub sextic_check: CheckReport,
    pub pass: bool,
    pub inconsistencies: Vec<String>,
}

/// Full mod-5 image and an irreducible 5-division sextic; the mod-5 part is
/// sampled evidence, not a proof.
pub fn theorem_ex_check(e: &EllipticCurveQ, params: EvidenceParams) -> Result<TheoremExReport> {
    let f = f_e6(e);
    let sextic_irreducible = is_irreducible_q(&f)?;
    let mod5 = mod5_full_evidence(e, params.prime_bound);
    let pass = mod5.verdict == Mod5Verdict::ConsistentFull && sextic_irreducible;
    let sextic_check = check_theorem_hypotheses(&f, None, params)?;
    let mut inconsistencies = Vec::new();
    if pass && !sextic_check.pass {
        inconsistencies.push(format!(
            "mod-5 route passes but the sextic gate does not: {}",
            sextic_check.reasons.join("; ")
        ));
    }
    if pass && sextic_check.galois.verdict == crate::galois::GaloisVerdict::Refuted {
        inconsistencies.push("Frobenius sample contradicts a transitive S5".into());
    }
    Ok(TheoremExReport {
        curve: e.to_string(),
        invariants: e.invariants(),
        theta: theta_e5(e).to_string(),
        sextic: f.to_string(),
        sextic_irreducible,
        mod5,
        sextic_check,
        pass,
        inconsistencies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_43_passes() {
        let e = EllipticCurveQ::from_ints([0, 1, 1, 0, 0]).unwrap();
        let r = theorem_ex_check(
            &e,
            EvidenceParams {
                prime_bound: 1000,
                seed: 0,
            },
        )
        .unwrap();
        assert!(r.pass);
        assert!(r.sextic_check.pass);
        assert!(r.inconsistencies.is_empty());
    }

    #[test]
    fn cm_curve_fails() {
        let e = EllipticCurveQ::from_ints([0, 0, 0, 0, 1]).unwrap();
        let r = theorem_ex_check(
            &e,
            EvidenceParams {
                prime_bound: 1000,
                seed: 0,
            },
        )
        .unwrap();
        assert!(!r.pass);
        assert_ne!(r.mod5.verdict, Mod5Verdict::ConsistentFull);
    }
}
