//! Voigt flattening of 3×3 matrices, row-major: `P₁₁, P₁₂, P₁₃, P₂₁, …, P₃₃`.

use nalgebra::{Matrix3, SMatrix, SVector};

pub type Voigt = SVector<f64, 9>;
pub type VoigtOperator = SMatrix<f64, 9, 9>;

pub const fn index(row: usize, col: usize) -> usize {
    3 * row + col
}

pub fn to_voigt(m: &Matrix3<f64>) -> Voigt {
    Voigt::from_fn(|k, _| m[(k / 3, k % 3)])
}

pub fn from_voigt(v: &Voigt) -> Matrix3<f64> {
    Matrix3::from_fn(|i, j| v[index(i, j)])
}

/// The matrix `𝕊` with `𝕊 vec(P) = vec(sym P)`.
pub fn sym_operator() -> VoigtOperator {
    VoigtOperator::from_fn(|a, b| {
        let transposed = index(a % 3, a / 3);
        0.5 * (f64::from(a == b) + f64::from(transposed == b))
    })
}

/// Vertex functionals of the `H(sym Curl)` element, one per row:
///
/// | row | functional    |
/// |-----|---------------|
/// | 0   | `P₁₁ - P₂₂`   |
/// | 1–3 | `P₁₂, P₁₃, P₂₁` |
/// | 4   | `P₂₂ - P₃₃`   |
/// | 5–7 | `P₂₃, P₃₁, P₃₂` |
/// | 8   | `tr P`        |
///
/// Rows 0–7 are shared between elements meeting at a vertex, row 8 is element-local.
pub fn dof_functionals() -> VoigtOperator {
    let mut l = VoigtOperator::zeros();
    l[(0, 0)] = 1.0;
    l[(0, 4)] = -1.0;
    l[(4, 4)] = 1.0;
    l[(4, 8)] = -1.0;
    for k in [1, 2, 3, 5, 6, 7] {
        l[(k, k)] = 1.0;
    }
    for k in [0, 4, 8] {
        l[(8, k)] = 1.0;
    }
    l
}

/// Number of vertex functionals shared across element boundaries.
pub const SHARED_FUNCTIONALS: usize = 8;
/// Row of the element-local trace functional in [`dof_functionals`].
pub const TRACE_FUNCTIONAL: usize = 8;
