use nalgebra::{Matrix3, Vector3};
use num_rational::Rational64;
use proptest::prelude::*;
use symcurl::tensorcalc::{anti, trace_hcurl, trace_hsymcurl, Axis, Poly3, PolyMatrix, PolyVector};

/// Number of monomials of total degree ≤ 3 in three variables.
const CUBIC_TERMS: usize = 20;

fn cubic_exponents() -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=3 {
        for b in 0..=(3 - a) {
            for c in 0..=(3 - a - b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn cubic() -> impl Strategy<Value = Poly3> {
    prop::collection::vec(-5i64..=5, CUBIC_TERMS).prop_map(|coeffs| {
        Poly3::from_terms(
            coeffs
                .into_iter()
                .zip(cubic_exponents())
                .map(|(k, e)| (Rational64::from_integer(k), e)),
        )
    })
}

fn cubic_vector() -> impl Strategy<Value = PolyVector> {
    [cubic(), cubic(), cubic()]
}

fn cubic_matrix() -> impl Strategy<Value = PolyMatrix> {
    [cubic_vector(), cubic_vector(), cubic_vector()].prop_map(|rows| PolyMatrix { entries: rows })
}

fn vector() -> impl Strategy<Value = Vector3<f64>> {
    prop::array::uniform3(-10.0f64..10.0).prop_map(Vector3::from)
}

fn unit() -> impl Strategy<Value = Vector3<f64>> {
    vector().prop_filter("non-zero", |v| v.norm() > 1e-3).prop_map(|v| v.normalize())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn div_div_annihilates_sym_curl(p in cubic_matrix()) {
        prop_assert!(p.sym_curl().div_div().is_zero());
    }

    #[test]
    fn div_annihilates_curl(p in cubic_matrix()) {
        prop_assert!(p.curl().div().iter().all(Poly3::is_zero));
    }

    #[test]
    fn sym_curl_annihilates_gradients(u in cubic_vector()) {
        prop_assert!(PolyMatrix::gradient_rows(&u).sym_curl().is_zero());
    }

    #[test]
    fn curl_of_spherical_field(lambda in cubic()) {
        let s = PolyMatrix::scalar_identity(&lambda);
        prop_assert!((&s.curl() + &PolyMatrix::anti(&lambda.gradient())).is_zero());
        prop_assert!(s.sym_curl().is_zero());
    }

    #[test]
    fn strong_operator_is_linear(p in cubic_matrix(), q in cubic_matrix()) {
        let lhs = (&p + &q).strong_operator();
        let rhs = &p.strong_operator() + &q.strong_operator();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn anti_is_skew_and_crosses(v in vector(), w in vector()) {
        let a = anti(&v);
        prop_assert_eq!(a.transpose(), -a);
        prop_assert!((a * w - v.cross(&w)).amax() <= 1e-12 * (1.0 + v.norm() * w.norm()));
    }

    #[test]
    fn spherical_fields_have_no_symcurl_trace(p in -10.0f64..10.0, nu in unit()) {
        let t = trace_hsymcurl(&(Matrix3::identity() * p), &nu).unwrap();
        prop_assert!(t.amax() <= 1e-12);
    }

    #[test]
    fn hcurl_trace_kills_normal_dyads(nu in unit(), a in vector()) {
        // rows parallel to ν have no tangential part
        let p = a * nu.transpose();
        prop_assert!(trace_hcurl(&p, &nu).unwrap().amax() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn derivatives_commute(p in cubic()) {
        prop_assert_eq!(p.diff(Axis::X).diff(Axis::Y), p.diff(Axis::Y).diff(Axis::X));
    }

    #[test]
    fn evaluation_is_a_ring_map(p in cubic(), q in cubic(), x in vector()) {
        let scale = 1.0 + p.eval(&x).abs() * q.eval(&x).abs();
        prop_assert!(((&p * &q).eval(&x) - p.eval(&x) * q.eval(&x)).abs() <= 1e-9 * scale);
        prop_assert!(((&p + &q).eval(&x) - p.eval(&x) - q.eval(&x)).abs() <= 1e-9 * scale);
    }
}

#[test]
fn non_unit_normals_rejected() {
    let p = Matrix3::identity();
    assert!(trace_hcurl(&p, &Vector3::new(2.0, 0.0, 0.0)).is_err());
    assert!(trace_hsymcurl(&p, &Vector3::zeros()).is_err());
}

#[test]
fn hcurl_trace_of_identity() {
    let t = trace_hcurl(&Matrix3::identity(), &Vector3::x()).unwrap();
    assert_eq!(t, anti(&Vector3::x()).transpose());
}
