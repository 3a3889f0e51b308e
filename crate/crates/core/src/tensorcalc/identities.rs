//! Exact checks of the complex identities behind `sym Curl`:
//!
//! - `di Di sym Curl P = 0` (the range of `sym Curl` lies in the kernel of `di Di`),
//! - `sym Curl D u = 0` for gradient fields,
//! - `Curl(λ𝟙) = -Anti(∇λ)`, hence `sym Curl(λ𝟙) = 0` for spherical fields,
//! - `sym[p𝟙 Anti(ν)ᵀ] = 0`, spherical fields have no `H(sym Curl)` trace.
//!
//! The polynomial checks are exact: a check passes only if the result is the zero
//! polynomial.

use nalgebra::Matrix3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::PolyMatrix;
use super::pointwise::trace_hsymcurl;
use super::random;

/// Degree bound of the random fields.
pub const FIELD_DEGREE: u32 = 3;
/// Coefficients are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 5;
const TRACE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    DivDivSymCurl,
    SymCurlOfGradient,
    CurlOfSpherical,
    SphericalTrace,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::DivDivSymCurl,
        Identity::SymCurlOfGradient,
        Identity::CurlOfSpherical,
        Identity::SphericalTrace,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Identity::DivDivSymCurl => "di Di sym Curl P = 0",
            Identity::SymCurlOfGradient => "sym Curl D u = 0",
            Identity::CurlOfSpherical => "Curl(l 1) = -Anti(grad l), sym Curl(l 1) = 0",
            Identity::SphericalTrace => "sym[p 1 Anti(n)^T] = 0",
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: Identity,
    pub samples: usize,
    /// The first offending field, rendered as text.
    pub failure: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs every identity on `count` random samples drawn from a generator seeded with `seed`.
pub fn run_suite(seed: u64, count: usize) -> Vec<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Identity::ALL
        .iter()
        .map(|&id| IdentityReport {
            identity: id,
            samples: count,
            failure: (0..count).find_map(|_| check_one(id, &mut rng)),
        })
        .collect()
}

fn check_one<R: Rng>(id: Identity, rng: &mut R) -> Option<String> {
    match id {
        Identity::DivDivSymCurl => {
            let p = random::poly_matrix(rng, FIELD_DEGREE, COEFF_BOUND);
            let r = p.sym_curl().div_div();
            (!r.is_zero()).then(|| format!("P =\n{p}\ndi Di sym Curl P = {r}"))
        }
        Identity::SymCurlOfGradient => {
            let u = random::poly_vector(rng, FIELD_DEGREE, COEFF_BOUND);
            let r = PolyMatrix::gradient_rows(&u).sym_curl();
            (!r.is_zero()).then(|| format!("u = ({}, {}, {})\nsym Curl D u =\n{r}", u[0], u[1], u[2]))
        }
        Identity::CurlOfSpherical => {
            let lambda = random::poly(rng, FIELD_DEGREE, COEFF_BOUND);
            let s = PolyMatrix::scalar_identity(&lambda);
            let c = s.curl();
            let sum = &c + &PolyMatrix::anti(&lambda.gradient());
            let sc = c.sym();
            (!(sum.is_zero() && sc.is_zero())).then(|| {
                format!("lambda = {lambda}\nCurl + Anti(grad) =\n{sum}\nsym Curl =\n{sc}")
            })
        }
        Identity::SphericalTrace => {
            let p: f64 = rng.gen_range(-5.0..5.0);
            let nu = random::unit_vector(rng);
            let t = trace_hsymcurl(&(Matrix3::identity() * p), &nu).expect("unit normal");
            (t.amax() > TRACE_TOL).then(|| format!("p = {p}, nu = {nu:?}, trace = {t:?}"))
        }
    }
}
