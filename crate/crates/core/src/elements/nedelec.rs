//! Lowest-order Nédélec edge element of the first kind, applied to each row of `P`.
//!
//! The reference functions are the Whitney forms `ϑ = λ_a ∇λ_b - λ_b ∇λ_a` for the local
//! edges `a → b` of [`LOCAL_EDGES`]. They are pushed forward with the covariant Piola map
//! `θ = J⁻ᵀ ϑ`, their curls with the contravariant map `curl θ = J curl_ξ ϑ / det J`, and
//! each is multiplied by the orientation sign of its edge so that neighbouring elements
//! agree on the tangential direction. Local unknown `3i + r` is edge `i` in row `r`.

use nalgebra::{Matrix3, Vector3};

use super::voigt;
use super::{lagrange::reference_hat_gradients, BasisFunction, Family, LocalBasis};
use crate::mesh::{TetGeometry, LOCAL_EDGES};

/// Reference function of local edge `i` as `(ϑ(0), Dϑ)`, so that `ϑ(ξ) = ϑ(0) + Dϑ ξ`.
pub fn reference_edge_function(i: usize) -> (Vector3<f64>, Matrix3<f64>) {
    let (a, b) = LOCAL_EDGES[i];
    let grads = reference_hat_gradients();
    let value_at_origin = [1.0, 0.0, 0.0, 0.0];
    let (ga, gb) = (grads[a], grads[b]);
    let constant = gb * value_at_origin[a] - ga * value_at_origin[b];
    let derivative = gb * ga.transpose() - ga * gb.transpose();
    (constant, derivative)
}

fn curl_of_derivative(d: &Matrix3<f64>) -> Vector3<f64> {
    Vector3::new(d[(2, 1)] - d[(1, 2)], d[(0, 2)] - d[(2, 0)], d[(1, 0)] - d[(0, 1)])
}

pub fn nedelec_local(geometry: &TetGeometry, edge_signs: &[f64; 6]) -> LocalBasis {
    let g = geometry.inv_t;
    let x1 = geometry.vertices[0];
    let mut functions = Vec::with_capacity(18);
    for (i, &sign) in edge_signs.iter().enumerate() {
        let (c_ref, d_ref) = reference_edge_function(i);
        // θ(x) = J⁻ᵀ ϑ(J⁻¹ (x - x₁))
        let grad = g * d_ref * g.transpose();
        let constant = g * c_ref - grad * x1;
        let curl = geometry.jacobian * curl_of_derivative(&d_ref) / geometry.det;
        for row in 0..3 {
            let mut f = BasisFunction::zero();
            for comp in 0..3 {
                let k = voigt::index(row, comp);
                f.constant[k] = sign * constant[comp];
                f.gradient.set_row(k, &(grad.row(comp) * sign));
                f.curl[k] = sign * curl[comp];
            }
            functions.push(f);
        }
    }
    LocalBasis {
        family: Family::Nedelec,
        geometry: *geometry,
        functions,
    }
}
