//! Exact rational arithmetic and dense linear algebra over ℚ.
//!
//! Everything downstream (identity checks, coboundary ranks, radicals) is
//! computed with these types; there is no floating point anywhere.

mod matrix;
mod poly;
pub mod rational;
mod subspace;

pub use matrix::{nullspace, rank, Echelon, Matrix};
pub use poly::UniPoly;
pub use rational::{format_rational, int, one, parse_rational, rat, zero, Rational};
pub use subspace::Subspace;
