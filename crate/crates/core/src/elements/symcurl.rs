//! The `H(sym Curl)` element, built directly on the physical tetrahedron.
//!
//! The ansatz is the monomial basis `X = [1𝟙₉  x𝟙₉  y𝟙₉  z𝟙₉]`. Stacking the vertex
//! functionals `L X` evaluated at the four vertices gives the 36 × 36 matrix `C⁻¹`; the
//! columns of `C` are the coefficients of the dual basis `B = X C`, and the Curls follow
//! as `Curl B = (Curl X) C`. Local unknown `9k + i` is functional `i` (see
//! [`dof_functionals`](super::voigt::dof_functionals)) at vertex `k`.

use nalgebra::{DMatrix, Vector3};

use super::voigt::{self, dof_functionals};
use super::{BasisFunction, Family, LocalBasis};
use crate::error::{Error, Result};
use crate::mesh::TetGeometry;

/// Upper bound on the 1-norm condition number of `C⁻¹`.
pub const MAX_CONDITION: f64 = 1e12;

fn monomials(x: &Vector3<f64>) -> [f64; 4] {
    [1.0, x.x, x.y, x.z]
}

/// `Curl X`: constant 9 × 36, column `9m + j`, `j = 3r + c`. For `m = d + 1` the field is
/// `x_d e_r ⊗ e_c`, whose row `r` has curl `e_d × e_c`.
fn curl_of_monomials() -> DMatrix<f64> {
    let mut cx = DMatrix::zeros(9, 36);
    for d in 0..3 {
        for j in 0..9 {
            let (r, c) = (j / 3, j % 3);
            let v = Vector3::ith(d, 1.0).cross(&Vector3::ith(c, 1.0));
            for k in 0..3 {
                cx[(voigt::index(r, k), 9 * (d + 1) + j)] = v[k];
            }
        }
    }
    cx
}

fn one_norm(m: &DMatrix<f64>) -> f64 {
    m.column_iter().map(|c| c.abs().sum()).fold(0.0, f64::max)
}

pub fn symcurl_local(geometry: &TetGeometry) -> Result<LocalBasis> {
    let l = dof_functionals();
    let mut c_inv = DMatrix::zeros(36, 36);
    for (k, x) in geometry.vertices.iter().enumerate() {
        for (m, mono) in monomials(x).iter().enumerate() {
            for i in 0..9 {
                for j in 0..9 {
                    c_inv[(9 * k + i, 9 * m + j)] = l[(i, j)] * mono;
                }
            }
        }
    }
    let c = c_inv
        .clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::Element("singular functional matrix".into()))?;
    let cond = one_norm(&c_inv) * one_norm(&c);
    if !(cond <= MAX_CONDITION) {
        return Err(Error::Element(format!("functional matrix condition {cond:e} exceeds {MAX_CONDITION:e}")));
    }

    let curls = curl_of_monomials() * &c;
    let functions = (0..36)
        .map(|q| {
            let col = c.column(q);
            let mut f = BasisFunction::zero();
            f.constant.copy_from(&col.rows(0, 9));
            for d in 0..3 {
                f.gradient.set_column(d, &col.rows(9 * (d + 1), 9));
            }
            f.curl.copy_from(&curls.column(q));
            f
        })
        .collect();
    Ok(LocalBasis {
        family: Family::SymCurl,
        geometry: *geometry,
        functions,
    })
}
