//! Factorization and Galois-group evidence for sextics and quintics.

pub mod evidence;
pub mod factor_fp;
pub mod quintic;
pub mod zassenhaus;

pub use evidence::{
    allowed_patterns, check_theorem_hypotheses, cycle_type_samples, degree_pattern,
    sextic_s5a_evidence, CheckReport, DegreePattern, EvidenceParams, GaloisEvidence, GaloisVerdict,
};
pub use factor_fp::{factor_mod_p, is_irreducible_fp, FpFactorization};
pub use quintic::{
    hermite_params, hermite_quintic, quintic_galois, quintic_is_s5, weber_resolvent, QuinticGalois,
};
pub use zassenhaus::{factor_q, has_rational_root, is_irreducible_q, rational_roots};
