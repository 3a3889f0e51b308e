//! Exact polynomial calculus for 3×3 matrix fields.

pub mod identities;
mod matrix;
mod piecewise;
pub mod pointwise;
mod poly;
pub mod random;

pub use matrix::{curl, div, CompiledMatrix, PolyMatrix, PolyVector};
pub use piecewise::{Branch, CompiledField, PiecewiseField};
pub use pointwise::{anti, trace_hcurl, trace_hsymcurl};
pub use poly::{Axis, CompiledPoly, Exponents, Poly3};
