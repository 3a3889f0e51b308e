//! Finite elements for matrix-valued fields on tetrahedral meshes.
//!
//! Three conforming discretizations of a 3×3 field `P` are provided:
//!
//! - [`Family::Lagrange`]: nodal `[H¹]^{3×3}`, 36 local unknowns,
//! - [`Family::Nedelec`]: row-wise lowest-order edge elements, `[H(curl)]³`, 18 local unknowns,
//! - [`Family::SymCurl`]: the `H(sym Curl)` element whose vertex unknowns decouple the
//!   trace between neighbouring elements, 36 local unknowns.
//!
//! All three are used to solve the model problem
//!
//! ```text
//! sym P + Curl(sym Curl P) = M   in Ω = [-1, 1]³,   P = P̃ on ∂Ω
//! ```
//!
//! through its weak form. The [`bench`] module drives the three analytical benchmark
//! cases (vortex, normal jump, identity jump) through refinement sweeps and measures
//! the error in L² and in the H(sym Curl) norm.

pub mod bench;
pub mod elements;
pub mod error;
pub mod mesh;
pub mod quadrature;
pub mod system;
pub mod tensorcalc;

pub use elements::Family;
pub use error::{Error, Result};
