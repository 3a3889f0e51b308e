//! Quadrature on the reference tetrahedron `{ξ, η, ζ ≥ 0, ξ + η + ζ ≤ 1}` and on `[0, 1]`.
//!
//! Degrees 1 and 2 use the classical symmetric 1- and 4-point rules. Higher degrees use a
//! collapsed (conical product) Gauss–Legendre rule, which has strictly positive weights
//! for every degree.

use nalgebra::Vector3;
use num_rational::Ratio;

use crate::error::{Error, Result};

pub const MAX_TET_DEGREE: u32 = 6;
pub const MAX_EDGE_DEGREE: u32 = 5;

#[derive(Debug, Clone)]
pub struct QuadRule {
    pub points: Vec<Vector3<f64>>,
    pub weights: Vec<f64>,
    pub degree: u32,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vector3<f64>, f64)> {
        self.points.iter().zip(self.weights.iter().copied())
    }

    /// `∫_T f` over the reference tetrahedron.
    pub fn integrate(&self, f: impl Fn(&Vector3<f64>) -> f64) -> f64 {
        self.iter().map(|(p, w)| w * f(p)).sum()
    }
}

/// One-dimensional rule on `[0, 1]`.
#[derive(Debug, Clone)]
pub struct LineRule {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
    pub degree: u32,
}

impl LineRule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.points.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).sum()
    }
}

/// A tetrahedron rule exact for all polynomials of total degree `<= degree`.
pub fn tet_rule(degree: u32) -> Result<QuadRule> {
    match degree {
        1 => Ok(QuadRule {
            points: vec![Vector3::repeat(0.25)],
            weights: vec![1.0 / 6.0],
            degree,
        }),
        2 => {
            let a = (5.0 + 3.0 * 5f64.sqrt()) / 20.0;
            let b = (5.0 - 5f64.sqrt()) / 20.0;
            Ok(QuadRule {
                points: vec![
                    Vector3::new(b, b, b),
                    Vector3::new(a, b, b),
                    Vector3::new(b, a, b),
                    Vector3::new(b, b, a),
                ],
                weights: vec![1.0 / 24.0; 4],
                degree,
            })
        }
        3..=MAX_TET_DEGREE => Ok(collapsed_rule(degree)),
        _ => Err(Error::InvalidInput(format!(
            "tetrahedron quadrature degree must be in 1..={MAX_TET_DEGREE}, got {degree}"
        ))),
    }
}

/// Gauss–Legendre rule on `[0, 1]` exact to `degree`.
pub fn edge_rule(degree: u32) -> Result<LineRule> {
    if !(1..=MAX_EDGE_DEGREE).contains(&degree) {
        return Err(Error::InvalidInput(format!(
            "edge quadrature degree must be in 1..={MAX_EDGE_DEGREE}, got {degree}"
        )));
    }
    let (points, weights) = gauss_legendre_unit((degree / 2 + 1) as usize);
    Ok(LineRule { points, weights, degree })
}

/// `∫_T ξ^a η^b ζ^c = a! b! c! / (a + b + c + 3)!` over the reference tetrahedron.
pub fn exact_tet_monomial(a: u32, b: u32, c: u32) -> Ratio<u128> {
    let fact = |n: u32| (1..=u128::from(n)).product::<u128>();
    Ratio::new(fact(a) * fact(b) * fact(c), fact(a + b + c + 3))
}

// Duffy map ξ = u, η = (1-u) v, ζ = (1-u)(1-v) w with Jacobian (1-u)²(1-v). The
// Jacobian raises the polynomial degree in u by 2 and in v by 1.
fn collapsed_rule(degree: u32) -> QuadRule {
    let n = |d: u32| ((d + 2) / 2) as usize;
    let (us, wu) = gauss_legendre_unit(n(degree + 2));
    let (vs, wv) = gauss_legendre_unit(n(degree + 1));
    let (ws, ww) = gauss_legendre_unit(n(degree));
    let mut points = Vec::with_capacity(us.len() * vs.len() * ws.len());
    let mut weights = Vec::with_capacity(points.capacity());
    for (&u, &wu) in us.iter().zip(&wu) {
        for (&v, &wv) in vs.iter().zip(&wv) {
            for (&w, &ww) in ws.iter().zip(&ww) {
                let xi = u;
                let eta = (1.0 - u) * v;
                let zeta = (1.0 - u) * (1.0 - v) * w;
                points.push(Vector3::new(xi, eta, zeta));
                weights.push(wu * wv * ww * (1.0 - u).powi(2) * (1.0 - v));
            }
        }
    }
    QuadRule { points, weights, degree }
}

/// `n`-point Gauss–Legendre nodes and weights mapped to `[0, 1]`.
fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Newton iteration from the Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    let nodes = nodes.into_iter().map(|x| 0.5 * (x + 1.0)).collect();
    let weights = weights.into_iter().map(|w| 0.5 * w).collect();
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}
