//! Canonical interpolation: each family's degrees of freedom applied to a field.
//!
//! Shared unknowns (vertex values, edge integrals, shared vertex functionals) evaluate the
//! field pointwise, so points on `x = 0` see the `otherwise` piece. The element-local
//! SymCurl trace unknowns use the piece selected by the element centroid.

use nalgebra::DVector;

use super::DofMap;
use crate::elements::element_branch;
use crate::elements::voigt::{dof_functionals, to_voigt, SHARED_FUNCTIONALS, TRACE_FUNCTIONAL};
use crate::elements::Family;
use crate::error::Result;
use crate::mesh::Mesh;
use crate::quadrature::edge_rule;
use crate::tensorcalc::PiecewiseField;

/// Default degree of the edge rule used for the Nédélec edge integrals; exact for cubic fields.
pub const EDGE_RULE_DEGREE: u32 = 3;

pub fn interpolate_field(mesh: &Mesh, dofs: &DofMap, field: &PiecewiseField) -> Result<DVector<f64>> {
    interpolate_field_with(mesh, dofs, field, EDGE_RULE_DEGREE)
}

/// [`interpolate_field`] with a chosen edge rule degree for the Nédélec edge integrals.
pub fn interpolate_field_with(
    mesh: &Mesh,
    dofs: &DofMap,
    field: &PiecewiseField,
    edge_degree: u32,
) -> Result<DVector<f64>> {
    let f = field.compile();
    let mut out = DVector::zeros(dofs.count);
    match dofs.family {
        Family::Lagrange => {
            for (v, x) in mesh.vertices.iter().enumerate() {
                out.rows_mut(9 * v, 9).copy_from(&to_voigt(&f.eval(x)));
            }
        }
        Family::Nedelec => {
            let rule = edge_rule(edge_degree)?;
            for (e, &[a, b]) in mesh.edges.iter().enumerate() {
                let (xa, xb) = (mesh.vertices[a], mesh.vertices[b]);
                let t = xb - xa;
                for (s, w) in rule.points.iter().zip(&rule.weights) {
                    let p = f.eval(&(xa + t * *s));
                    for r in 0..3 {
                        out[3 * e + r] += w * p.row(r).transpose().dot(&t);
                    }
                }
            }
        }
        Family::SymCurl => {
            let l = dof_functionals();
            for (v, x) in mesh.vertices.iter().enumerate() {
                let vals = l * to_voigt(&f.eval(x));
                out.rows_mut(SHARED_FUNCTIONALS * v, SHARED_FUNCTIONALS)
                    .copy_from(&vals.rows(0, SHARED_FUNCTIONALS));
            }
            let trace = l.row(TRACE_FUNCTIONAL);
            for t in 0..mesh.num_tets() {
                let geometry = mesh.jacobian(t)?;
                let branch = element_branch(&geometry);
                let local = dofs.local(t);
                for (k, x) in geometry.vertices.iter().enumerate() {
                    let dof = local[9 * k + TRACE_FUNCTIONAL];
                    out[dof] = (trace * to_voigt(&f.eval_branch(branch, x)))[0];
                }
            }
        }
    }
    Ok(out)
}
