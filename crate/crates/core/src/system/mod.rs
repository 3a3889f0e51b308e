//! Global assembly, Dirichlet elimination and solution of the discrete problem
//!
//! ```text
//! find P_h with P_h = Π P̃ on ∂Ω:
//!   ∫ ⟨sym P_h, sym δP⟩ + ⟨sym Curl P_h, sym Curl δP⟩ dX = ∫ ⟨δP, M⟩ dX   for all δP
//! ```
//!
//! where `Π` is the canonical interpolant of the chosen family.

mod dofmap;
mod interpolate;
mod solver;

use nalgebra::{DVector, Matrix3, Vector3};
use nalgebra_sparse::{pattern::SparsityPattern, CsrMatrix};

pub use dofmap::{build_dof_map, DofMap};
pub use interpolate::{interpolate_field, interpolate_field_with, EDGE_RULE_DEGREE};
pub use solver::{relative_residual, solve, spmv, to_dense, SolverOptions};

use crate::elements::{element_branch, local_load, local_stiffness, Family, LocalBasis};
use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::quadrature::tet_rule;
use crate::tensorcalc::PiecewiseField;

/// Exactness degrees of the quadrature rules used in each stage.
///
/// The defaults integrate every benchmark quantity exactly: the stiffness integrand is
/// quadratic, the load pairs a linear basis with a cubic field, the squared error of a
/// cubic field is of degree 6 and edge integrals of cubic fields are cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureDegrees {
    pub stiffness: u32,
    pub load: u32,
    pub norms: u32,
    /// Edge rule for the Nédélec interpolant of the boundary data.
    pub edge: u32,
}

impl Default for QuadratureDegrees {
    fn default() -> Self {
        Self {
            stiffness: 2,
            load: 4,
            norms: 6,
            edge: EDGE_RULE_DEGREE,
        }
    }
}

/// The local basis of `family` on tetrahedron `tet`, oriented by the mesh edge signs.
pub fn local_basis(family: Family, mesh: &Mesh, tet: usize) -> Result<LocalBasis> {
    let geometry = mesh.jacobian(tet)?;
    let signs = mesh.tet_edges[tet].map(|(_, s)| s);
    LocalBasis::new(family, &geometry, &signs).map_err(|e| e.context(format!("element {tet}")))
}

/// The assembled, unconstrained system `K a = f`.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub matrix: CsrMatrix<f64>,
    pub rhs: DVector<f64>,
}

impl LinearSystem {
    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    /// `½ aᵀ K a - aᵀ f`.
    pub fn energy(&self, a: &DVector<f64>) -> f64 {
        0.5 * a.dot(&spmv(&self.matrix, a)) - a.dot(&self.rhs)
    }

    /// `max |K_ij - K_ji|`.
    pub fn max_asymmetry(&self) -> f64 {
        max_asymmetry(&self.matrix)
    }
}

pub fn max_asymmetry(m: &CsrMatrix<f64>) -> f64 {
    m.triplet_iter()
        .map(|(i, j, &v)| {
            let t = m.get_entry(j, i).map_or(0.0, |e| e.into_value());
            (v - t).abs()
        })
        .fold(0.0, f64::max)
}

fn sparsity(dofs: &DofMap) -> SparsityPattern {
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); dofs.count];
    for t in 0..dofs.num_tets() {
        let local = dofs.local(t);
        for &i in local {
            rows[i].extend_from_slice(local);
        }
    }
    let mut offsets = Vec::with_capacity(dofs.count + 1);
    let mut indices = Vec::new();
    offsets.push(0);
    for mut row in rows {
        row.sort_unstable();
        row.dedup();
        indices.extend(row);
        offsets.push(indices.len());
    }
    SparsityPattern::try_from_offsets_and_indices(dofs.count, dofs.count, offsets, indices)
        .expect("rows are sorted and deduplicated")
}

/// Assembles stiffness and load over all elements in ascending order.
pub fn assemble(
    mesh: &Mesh,
    dofs: &DofMap,
    load: &PiecewiseField,
    degrees: &QuadratureDegrees,
) -> Result<LinearSystem> {
    let k_rule = tet_rule(degrees.stiffness)?;
    let f_rule = tet_rule(degrees.load)?;
    if degrees.stiffness < 2 {
        return Err(Error::InvalidInput(format!(
            "stiffness quadrature needs degree >= 2, got {}",
            degrees.stiffness
        )));
    }
    let field = load.compile();
    let pattern = sparsity(dofs);
    let nnz = pattern.nnz();
    let mut values = vec![0.0; nnz];
    let mut rhs = DVector::zeros(dofs.count);
    for t in 0..mesh.num_tets() {
        let basis = local_basis(dofs.family, mesh, t)?;
        let k = local_stiffness(&basis, &k_rule);
        let f = local_load(&basis, &field, element_branch(&basis.geometry), &f_rule);
        let local = dofs.local(t);
        for (a, &i) in local.iter().enumerate() {
            rhs[i] += f[a];
            let start = pattern.major_offsets()[i];
            let cols = pattern.lane(i);
            for (b, &j) in local.iter().enumerate() {
                let pos = cols.binary_search(&j).expect("pattern covers element couplings");
                values[start + pos] += k[(a, b)];
            }
        }
    }
    let matrix = CsrMatrix::try_from_pattern_and_values(pattern, values).expect("values match the pattern");
    Ok(LinearSystem { matrix, rhs })
}

/// A system with the Dirichlet unknowns eliminated.
#[derive(Debug, Clone)]
pub struct ConstrainedSystem {
    pub matrix: CsrMatrix<f64>,
    pub rhs: DVector<f64>,
    /// Full-space index of each reduced unknown.
    pub free: Vec<usize>,
    /// Prescribed values on constrained unknowns, zero elsewhere.
    pub prescribed: DVector<f64>,
}

impl ConstrainedSystem {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Inserts a reduced solution into the full coefficient vector.
    pub fn expand(&self, reduced: &DVector<f64>) -> DVector<f64> {
        let mut full = self.prescribed.clone();
        for (r, &i) in self.free.iter().enumerate() {
            full[i] = reduced[r];
        }
        full
    }

    pub fn solve(&self, options: &SolverOptions) -> Result<DVector<f64>> {
        Ok(self.expand(&solve(&self.matrix, &self.rhs, options)?))
    }
}

/// Symmetric elimination of the boundary unknowns of `dofs` with values taken from
/// `prescribed` (a full coefficient vector, typically an interpolant).
pub fn apply_dirichlet(system: &LinearSystem, dofs: &DofMap, prescribed: &DVector<f64>) -> Result<ConstrainedSystem> {
    if prescribed.len() != dofs.count || system.dim() != dofs.count {
        return Err(Error::InvalidInput(format!(
            "prescribed vector of length {} for {} unknowns",
            prescribed.len(),
            dofs.count
        )));
    }
    let mut reduced_index = vec![None; dofs.count];
    let mut free = Vec::new();
    for d in 0..dofs.count {
        if !dofs.is_boundary(d) {
            reduced_index[d] = Some(free.len());
            free.push(d);
        }
    }
    let mut fixed = DVector::zeros(dofs.count);
    for d in dofs.boundary_dofs() {
        fixed[d] = prescribed[d];
    }

    let (offsets, cols, vals) = (
        system.matrix.row_offsets(),
        system.matrix.col_indices(),
        system.matrix.values(),
    );
    let mut new_offsets = Vec::with_capacity(free.len() + 1);
    let mut new_cols = Vec::new();
    let mut new_vals = Vec::new();
    let mut rhs = DVector::zeros(free.len());
    new_offsets.push(0);
    for (r, &i) in free.iter().enumerate() {
        let mut b = system.rhs[i];
        for k in offsets[i]..offsets[i + 1] {
            match reduced_index[cols[k]] {
                Some(c) => {
                    new_cols.push(c);
                    new_vals.push(vals[k]);
                }
                None => b -= vals[k] * fixed[cols[k]],
            }
        }
        rhs[r] = b;
        new_offsets.push(new_cols.len());
    }
    let n = free.len();
    let matrix = CsrMatrix::try_from_csr_data(n, n, new_offsets, new_cols, new_vals)
        .expect("column order is preserved by the reduction");
    Ok(ConstrainedSystem {
        matrix,
        rhs,
        free,
        prescribed: fixed,
    })
}

/// `(P_h(x), sym Curl P_h(x))` at a point of Ω.
pub fn fe_evaluate(
    mesh: &Mesh,
    dofs: &DofMap,
    coeffs: &DVector<f64>,
    point: &Vector3<f64>,
) -> Result<(Matrix3<f64>, Matrix3<f64>)> {
    let (tet, _) = mesh.locate_point(point)?;
    evaluate_in(mesh, dofs, coeffs, tet, point)
}

/// Like [`fe_evaluate`], but on a known element.
pub fn evaluate_in(
    mesh: &Mesh,
    dofs: &DofMap,
    coeffs: &DVector<f64>,
    tet: usize,
    point: &Vector3<f64>,
) -> Result<(Matrix3<f64>, Matrix3<f64>)> {
    let basis = local_basis(dofs.family, mesh, tet)?;
    let local: Vec<f64> = dofs.local(tet).iter().map(|&d| coeffs[d]).collect();
    Ok(basis.evaluate(&local, point))
}
