//! Benchmark cases, error norms and refinement studies.
//!
//! Errors are measured as
//!
//! ```text
//! ‖P̃ - P_h‖²_L2  = ∫ |P̃ - P_h|²
//! ‖P̃ - P_h‖²_HsC = ‖P̃ - P_h‖²_L2 + ∫ |sym Curl (P̃ - P_h)|²
//! ```
//!
//! with Frobenius norms and the exact field evaluated on the piece selected by each
//! element's centroid.

mod cases;
mod rates;

use std::time::Instant;

use nalgebra::DVector;

pub use cases::{make_case, vortex_field, vortex_moment_mismatches, vortex_moment_reference, Benchmark, BenchmarkCase, Smoothness};
pub use rates::{estimate_rate, fit_slope, Norm, Rate, EXACT_THRESHOLD};

use crate::elements::voigt::from_voigt;
use crate::elements::{element_branch, Family};
use crate::error::{Error, Result};
use crate::mesh::{generate_cube_mesh_with, DiagonalParity, Mesh};
use crate::quadrature::tet_rule;
use crate::system::{
    apply_dirichlet, assemble, build_dof_map, interpolate_field_with, local_basis, DofMap, QuadratureDegrees,
    SolverOptions,
};

/// Refinement levels (cells per axis) of the standard study.
pub const LEVELS: [usize; 5] = [2, 4, 6, 8, 10];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRecord {
    /// Cells per axis.
    pub n: usize,
    pub elements: usize,
    pub dofs: usize,
    pub l2_error: f64,
    pub hsc_error: f64,
    /// Wall time of the level in seconds.
    pub seconds: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RunOptions {
    pub degrees: QuadratureDegrees,
    pub solver: SolverOptions,
    pub parity: DiagonalParity,
}

/// `(‖P̃ - P_h‖_L2, ‖P̃ - P_h‖_HsC)` for coefficients `coeffs` of the space `dofs`.
pub fn error_norms(
    mesh: &Mesh,
    dofs: &DofMap,
    coeffs: &DVector<f64>,
    case: &BenchmarkCase,
    norm_degree: u32,
) -> Result<(f64, f64)> {
    let rule = tet_rule(norm_degree)?;
    let exact = case.exact.compile();
    let exact_sym_curl = case.exact.map(|p| p.sym_curl()).compile();
    let (mut l2, mut curl) = (0.0, 0.0);
    for t in 0..mesh.num_tets() {
        let basis = local_basis(dofs.family, mesh, t)?;
        let local: Vec<f64> = dofs.local(t).iter().map(|&d| coeffs[d]).collect();
        let f = basis.combine(&local);
        let c = from_voigt(&f.curl);
        let sym_curl_h = (c + c.transpose()) * 0.5;
        let g = &basis.geometry;
        let branch = element_branch(g);
        let jac = g.det.abs();
        for (p, w) in rule.iter() {
            let x = g.to_physical(p);
            let e = exact.eval_branch(branch, &x) - from_voigt(&f.value(&x));
            let s = exact_sym_curl.eval_branch(branch, &x) - sym_curl_h;
            l2 += w * jac * e.norm_squared();
            curl += w * jac * s.norm_squared();
        }
    }
    Ok((l2.sqrt(), (l2 + curl).sqrt()))
}

/// Mesh, assemble, constrain, solve and measure one level.
pub fn run_level(family: Family, case: &BenchmarkCase, n: usize, options: &RunOptions) -> Result<ConvergenceRecord> {
    let start = Instant::now();
    let ctx = |stage: &str| format!("{family}/{}/n={n}: {stage}", case.benchmark);
    let mesh = generate_cube_mesh_with(n, options.parity).map_err(|e| e.context(ctx("mesh")))?;
    let dofs = build_dof_map(family, &mesh);
    let boundary = interpolate_field_with(&mesh, &dofs, &case.exact, options.degrees.edge).map_err(|e| e.context(ctx("interpolation")))?;
    let system = assemble(&mesh, &dofs, &case.moment, &options.degrees).map_err(|e| e.context(ctx("assembly")))?;
    let reduced = apply_dirichlet(&system, &dofs, &boundary).map_err(|e| e.context(ctx("boundary conditions")))?;
    let coeffs = reduced.solve(&options.solver).map_err(|e| e.context(ctx("solve")))?;
    let (l2_error, hsc_error) =
        error_norms(&mesh, &dofs, &coeffs, case, options.degrees.norms).map_err(|e| e.context(ctx("error norms")))?;
    Ok(ConvergenceRecord {
        n,
        elements: mesh.num_tets(),
        dofs: dofs.count,
        l2_error,
        hsc_error,
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn run_convergence(
    family: Family,
    case: &BenchmarkCase,
    levels: &[usize],
    options: &RunOptions,
) -> Result<Vec<ConvergenceRecord>> {
    validate_levels(levels)?;
    levels.iter().map(|&n| run_level(family, case, n, options)).collect()
}

/// Errors of the canonical interpolant of the exact field at each level.
pub fn interpolation_error(
    family: Family,
    case: &BenchmarkCase,
    levels: &[usize],
    options: &RunOptions,
) -> Result<Vec<ConvergenceRecord>> {
    validate_levels(levels)?;
    levels
        .iter()
        .map(|&n| {
            let start = Instant::now();
            let mesh = generate_cube_mesh_with(n, options.parity)?;
            let dofs = build_dof_map(family, &mesh);
            let coeffs = interpolate_field_with(&mesh, &dofs, &case.exact, options.degrees.edge)?;
            let (l2_error, hsc_error) = error_norms(&mesh, &dofs, &coeffs, case, options.degrees.norms)?;
            Ok(ConvergenceRecord {
                n,
                elements: mesh.num_tets(),
                dofs: dofs.count,
                l2_error,
                hsc_error,
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

fn validate_levels(levels: &[usize]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::InvalidInput("no refinement levels given".into()));
    }
    if let Some(bad) = levels.iter().find(|&&n| n < 2 || !n.is_multiple_of(2)) {
        return Err(Error::InvalidInput(format!("refinement level {bad} is not a positive even number")));
    }
    Ok(())
}
