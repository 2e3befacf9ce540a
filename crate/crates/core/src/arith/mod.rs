//! Exact integer/rational arithmetic and univariate polynomial algebra.

pub mod fp;
pub mod poly;
pub mod rat;

pub use fp::FpPoly;
pub use poly::{discriminant, resultant, RatPoly};
pub use rat::{fmt_rat, int, is_rational_square, parse_rat, rat, Rat};
