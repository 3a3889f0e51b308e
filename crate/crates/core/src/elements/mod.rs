//! Local element spaces for matrix fields on one tetrahedron.
//!
//! Every basis function of the three linear families is an affine map `x ↦ c + G x` into
//! Voigt vectors with a constant Curl. [`LocalBasis`] stores that affine data in physical
//! coordinates together with the Curl, which each family computes through its own route:
//! the chain rule for Lagrange, the contravariant Piola map for Nédélec and `(Curl X) C`
//! for the `H(sym Curl)` element.

mod lagrange;
mod nedelec;
mod symcurl;
pub mod voigt;

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector, Matrix3, SMatrix, Vector3};

use crate::error::{Error, Result};
use crate::mesh::TetGeometry;
use crate::quadrature::QuadRule;
use crate::tensorcalc::{Branch, CompiledField};
use voigt::{from_voigt, sym_operator, Voigt};

pub use lagrange::lagrange_local;
pub use nedelec::{nedelec_local, reference_edge_function};
pub use symcurl::{symcurl_local, MAX_CONDITION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Lagrange,
    Nedelec,
    SymCurl,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Lagrange, Family::Nedelec, Family::SymCurl];

    pub fn local_dofs(self) -> usize {
        match self {
            Family::Lagrange | Family::SymCurl => 36,
            Family::Nedelec => 18,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Lagrange => "lagrange",
            Family::Nedelec => "nedelec",
            Family::SymCurl => "symcurl",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown element family `{s}`")))
    }
}

/// An affine matrix field `x ↦ constant + gradient · x` (Voigt rows) with constant Curl.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisFunction {
    pub constant: Voigt,
    /// `gradient[(k, d)] = ∂ P_k / ∂ x_d`.
    pub gradient: SMatrix<f64, 9, 3>,
    pub curl: Voigt,
}

impl BasisFunction {
    pub fn zero() -> Self {
        Self {
            constant: Voigt::zeros(),
            gradient: SMatrix::zeros(),
            curl: Voigt::zeros(),
        }
    }

    pub fn value(&self, x: &Vector3<f64>) -> Voigt {
        self.constant + self.gradient * x
    }

    /// Row-wise curl computed directly from the gradient, independent of how `curl` was set.
    pub fn curl_from_gradient(&self) -> Voigt {
        let g = |r: usize, c: usize, d: usize| self.gradient[(voigt::index(r, c), d)];
        let mut out = Voigt::zeros();
        for r in 0..3 {
            out[voigt::index(r, 0)] = g(r, 2, 1) - g(r, 1, 2);
            out[voigt::index(r, 1)] = g(r, 0, 2) - g(r, 2, 0);
            out[voigt::index(r, 2)] = g(r, 1, 0) - g(r, 0, 1);
        }
        out
    }

    fn axpy(&mut self, a: f64, other: &BasisFunction) {
        self.constant += other.constant * a;
        self.gradient += other.gradient * a;
        self.curl += other.curl * a;
    }
}

/// The local shape functions of one family on one tetrahedron, in physical coordinates.
#[derive(Debug, Clone)]
pub struct LocalBasis {
    pub family: Family,
    pub geometry: TetGeometry,
    pub functions: Vec<BasisFunction>,
}

impl LocalBasis {
    /// Builds the basis of `family`. `edge_signs` orients the Nédélec functions and is
    /// ignored by the nodal families.
    pub fn new(family: Family, geometry: &TetGeometry, edge_signs: &[f64; 6]) -> Result<Self> {
        match family {
            Family::Lagrange => Ok(lagrange_local(geometry)),
            Family::Nedelec => Ok(nedelec_local(geometry, edge_signs)),
            Family::SymCurl => symcurl_local(geometry),
        }
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// The 9 × n ansatz matrix at physical point `x`.
    pub fn ansatz(&self, x: &Vector3<f64>) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(9, self.len());
        for (j, f) in self.functions.iter().enumerate() {
            a.set_column(j, &f.value(x));
        }
        a
    }

    /// The 9 × n matrix of row-wise Curls (constant on the element).
    pub fn curl_matrix(&self) -> DMatrix<f64> {
        let mut c = DMatrix::zeros(9, self.len());
        for (j, f) in self.functions.iter().enumerate() {
            c.set_column(j, &f.curl);
        }
        c
    }

    /// Collapses local coefficients into a single affine field.
    pub fn combine(&self, coeffs: &[f64]) -> BasisFunction {
        assert_eq!(coeffs.len(), self.len(), "coefficient count");
        let mut out = BasisFunction::zero();
        for (f, &c) in self.functions.iter().zip(coeffs) {
            if c != 0.0 {
                out.axpy(c, f);
            }
        }
        out
    }

    /// `(P_h(x), sym Curl P_h)` for local coefficients.
    pub fn evaluate(&self, coeffs: &[f64], x: &Vector3<f64>) -> (Matrix3<f64>, Matrix3<f64>) {
        let f = self.combine(coeffs);
        let c = from_voigt(&f.curl);
        (from_voigt(&f.value(x)), (c + c.transpose()) * 0.5)
    }
}

/// `K = ∫_T Bᵀ 𝕊 B + (Curl B)ᵀ 𝕊 Curl B dX`.
pub fn local_stiffness(basis: &LocalBasis, rule: &QuadRule) -> DMatrix<f64> {
    assert!(rule.degree >= 2, "stiffness needs a rule of degree >= 2");
    let s = DMatrix::from_column_slice(9, 9, sym_operator().as_slice());
    let g = &basis.geometry;
    let jac = g.det.abs();
    let n = basis.len();
    let mut k = DMatrix::zeros(n, n);
    for (p, w) in rule.iter() {
        let a = basis.ansatz(&g.to_physical(p));
        let sa = &s * &a;
        k.gemm_tr(w * jac, &a, &sa, 1.0);
    }
    let c = basis.curl_matrix();
    let sc = &s * &c;
    k.gemm_tr(g.volume(), &c, &sc, 1.0);
    // exact symmetry; the two products above differ only by rounding
    let kt = k.transpose();
    (k + kt) * 0.5
}

/// `f = ∫_T Bᵀ vec(M) dX` with `M` evaluated on `branch`.
pub fn local_load(basis: &LocalBasis, field: &CompiledField, branch: Branch, rule: &QuadRule) -> DVector<f64> {
    let g = &basis.geometry;
    let jac = g.det.abs();
    let mut f = DVector::zeros(basis.len());
    for (p, w) in rule.iter() {
        let x = g.to_physical(p);
        let m = voigt::to_voigt(&field.eval_branch(branch, &x));
        for (j, bf) in basis.functions.iter().enumerate() {
            f[j] += w * jac * bf.value(&x).dot(&m);
        }
    }
    f
}

/// Branch of a piecewise field selected by the element centroid.
pub fn element_branch(geometry: &TetGeometry) -> Branch {
    Branch::of(&geometry.centroid())
}
