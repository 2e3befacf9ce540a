//! Exact-arithmetic toolkit for genus-2 curves `y^2 = f(x)` whose mod-2
//! Galois image is the transitive copy of `S5` inside `S6 = GSp4(F2)`.
//!
//! * [`arith`]: rationals, dense polynomials over `Q` and `F_p`, resultants.
//! * [`roots`]: Sturm-sequence real root counting and complex conjugation types.
//! * [`groups`]: `W = V/U`, `phi: S6 -> GSp(W)`, `SL2(F4) = A5`, `S5(a)`/`S5(b)`.
//! * [`galois`]: factorization mod `p` and over `Q`, Frobenius sampling, the
//!   quintic `S5` certificate and the sextic hypothesis gate.
//! * [`constructions`]: Hermite's family with its Weber resolvent, and the
//!   elliptic-curve 5-division sextic with mod-5 image evidence.
//! * [`scan`]: ingestion and parallel checking of genus-2 curve lists.

pub mod arith;
pub mod constructions;
pub mod error;
pub mod galois;
pub mod groups;
pub mod roots;
pub mod scan;

pub use error::{Error, Result};
