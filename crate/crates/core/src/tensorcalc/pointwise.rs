//! Point evaluations: `Anti`, the two tangential-type traces and matrix projections.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

const UNIT_TOL: f64 = 1e-12;

/// The skew matrix with `anti(v) * w = v × w`.
pub fn anti(v: &Vector3<f64>) -> Matrix3<f64> {
    v.cross_matrix()
}

pub fn sym(m: &Matrix3<f64>) -> Matrix3<f64> {
    (m + m.transpose()) * 0.5
}

pub fn skew(m: &Matrix3<f64>) -> Matrix3<f64> {
    (m - m.transpose()) * 0.5
}

pub fn dev(m: &Matrix3<f64>) -> Matrix3<f64> {
    m - Matrix3::identity() * (m.trace() / 3.0)
}

fn check_unit(normal: &Vector3<f64>) -> Result<()> {
    let n = normal.norm();
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::InvalidInput(format!("normal must have unit length, got |ν| = {n}")));
    }
    Ok(())
}

/// Tangential trace of `[H(curl)]³`: `P Anti(ν)ᵀ`.
pub fn trace_hcurl(p: &Matrix3<f64>, normal: &Vector3<f64>) -> Result<Matrix3<f64>> {
    check_unit(normal)?;
    Ok(p * anti(normal).transpose())
}

/// Trace of `H(sym Curl)`: `sym[P Anti(ν)ᵀ]`.
pub fn trace_hsymcurl(p: &Matrix3<f64>, normal: &Vector3<f64>) -> Result<Matrix3<f64>> {
    Ok(sym(&trace_hcurl(p, normal)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anti_of_basis_vectors() {
        let a = anti(&Vector3::z());
        let expected = Matrix3::new(0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(a, expected);
        assert_eq!(anti(&Vector3::zeros()), Matrix3::zeros());
        assert_eq!(anti(&Vector3::x()) * Vector3::y(), Vector3::z());
    }

    #[test]
    fn hcurl_trace_examples() {
        let e1 = Vector3::x();
        let t = trace_hcurl(&Matrix3::identity(), &e1).unwrap();
        assert_eq!(t, anti(&e1).transpose());
        assert_eq!(trace_hcurl(&Matrix3::zeros(), &e1).unwrap(), Matrix3::zeros());
        // normal projection e1⊗e1 has no tangential part on a face with normal e1
        let e11 = e1 * e1.transpose();
        assert_eq!(trace_hcurl(&e11, &e1).unwrap(), Matrix3::zeros());
    }

    #[test]
    fn hsymcurl_trace_examples() {
        let nu = Vector3::new(1.0, 2.0, -2.0) / 3.0;
        let t = trace_hsymcurl(&(Matrix3::identity() * 4.5), &nu).unwrap();
        assert!(t.norm() < 1e-15);
        assert_eq!(trace_hsymcurl(&Matrix3::zeros(), &nu).unwrap(), Matrix3::zeros());

        let e12 = Vector3::x() * Vector3::y().transpose();
        let t = trace_hsymcurl(&e12, &Vector3::z()).unwrap();
        // e1⊗e2 Anti(e3)ᵀ = e1⊗(Anti(e3) e2) = e1⊗(e3 × e2) = -e1⊗e1
        let expected = Matrix3::new(-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(t, expected);
    }

    #[test]
    fn non_unit_normal_rejected() {
        let r = trace_hcurl(&Matrix3::identity(), &Vector3::new(1.0, 1.0, 0.0));
        assert!(matches!(r, Err(Error::InvalidInput(_))));
        let r = trace_hsymcurl(&Matrix3::identity(), &Vector3::zeros());
        assert!(matches!(r, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn projections_split_matrix() {
        let m = Matrix3::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0);
        assert!((sym(&m) + skew(&m) - m).norm() < 1e-15);
        assert!(dev(&m).trace().abs() < 1e-14);
    }
}
