//! Nodal linear element: `N = [n₁𝟙₉  n₂𝟙₉  n₃𝟙₉  n₄𝟙₉]`, local unknown `9k + v` is the
//! Voigt component `v` at vertex `k`.

use nalgebra::Vector3;

use super::voigt;
use super::{BasisFunction, Family, LocalBasis};
use crate::mesh::TetGeometry;

/// Reference gradients of the barycentric hats `1-ξ-η-ζ, ξ, η, ζ`.
pub(crate) fn reference_hat_gradients() -> [Vector3<f64>; 4] {
    [Vector3::new(-1.0, -1.0, -1.0), Vector3::x(), Vector3::y(), Vector3::z()]
}

pub fn lagrange_local(geometry: &TetGeometry) -> LocalBasis {
    let x1 = geometry.vertices[0];
    let mut functions = Vec::with_capacity(36);
    for (k, grad_ref) in reference_hat_gradients().iter().enumerate() {
        // chain rule: ∇ₓ n = J⁻ᵀ ∇_ξ n, and n(x₁) = δ_k0 fixes the constant
        let grad = geometry.inv_t * grad_ref;
        let offset = f64::from(k == 0) - grad.dot(&x1);
        for v in 0..9 {
            let (row, col) = (v / 3, v % 3);
            let mut f = BasisFunction::zero();
            f.constant[v] = offset;
            f.gradient.set_row(v, &grad.transpose());
            // curl of the row (n e_col) is ∇n × e_col, placed in row `row`
            let c = grad.cross(&Vector3::ith(col, 1.0));
            for d in 0..3 {
                f.curl[voigt::index(row, d)] = c[d];
            }
            functions.push(f);
        }
    }
    LocalBasis {
        family: Family::Lagrange,
        geometry: *geometry,
        functions,
    }
}

