//! Seeded random polynomial fields for the identity checks.

use nalgebra::Vector3;
use num_rational::Rational64;
use rand::Rng;

use super::matrix::{PolyMatrix, PolyVector};
use super::poly::Poly3;

/// Dense polynomial of total degree `<= max_degree`, integer coefficients in `[-bound, bound]`.
pub fn poly<R: Rng + ?Sized>(rng: &mut R, max_degree: u32, bound: i64) -> Poly3 {
    let mut terms = Vec::new();
    for a in 0..=max_degree {
        for b in 0..=(max_degree - a) {
            for c in 0..=(max_degree - a - b) {
                let k = rng.gen_range(-bound..=bound);
                terms.push((Rational64::from_integer(k), [a, b, c]));
            }
        }
    }
    Poly3::from_terms(terms)
}

pub fn poly_vector<R: Rng + ?Sized>(rng: &mut R, max_degree: u32, bound: i64) -> PolyVector {
    std::array::from_fn(|_| poly(rng, max_degree, bound))
}

pub fn poly_matrix<R: Rng + ?Sized>(rng: &mut R, max_degree: u32, bound: i64) -> PolyMatrix {
    PolyMatrix::from_fn(|_, _| poly(rng, max_degree, bound))
}

/// Uniformly distributed direction on the unit sphere.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}
