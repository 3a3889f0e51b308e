//! Acceptance gate: runs every acceptance criterion and prints one line per criterion.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;

use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcurl::bench::{
    estimate_rate, fit_slope, interpolation_error, run_convergence, vortex_moment_mismatches, Benchmark,
    ConvergenceRecord, Norm, RunOptions, LEVELS,
};
use symcurl::elements::voigt::{dof_functionals, index, to_voigt};
use symcurl::elements::{local_stiffness, LocalBasis};
use symcurl::mesh::{generate_cube_mesh, TetGeometry, LOCAL_EDGES};
use symcurl::quadrature::{edge_rule, exact_tet_monomial, tet_rule, MAX_TET_DEGREE};
use symcurl::system::build_dof_map;
use symcurl::tensorcalc::identities::run_suite;
use symcurl::Family;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn within(actual: f64, expected: f64, rel: f64) -> bool {
    ((actual - expected) / expected).abs() <= rel
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn study(family: Family, benchmark: Benchmark) -> Result<Vec<ConvergenceRecord>, String> {
    run_convergence(family, &benchmark.case(), &LEVELS, &RunOptions::default()).map_err(|e| e.to_string())
}

fn rate(records: &[ConvergenceRecord], norm: Norm) -> Result<f64, String> {
    estimate_rate(records, norm)
        .map_err(|e| e.to_string())?
        .order()
        .ok_or_else(|| "series is exact, no rate".to_string())
}

fn check_series(
    what: &str,
    records: &[ConvergenceRecord],
    norm: Norm,
    expected: &[f64],
) -> Result<(), String> {
    for (r, &e) in records.iter().zip(expected) {
        let a = norm.of(r);
        ensure(within(a, e, 0.15), || format!("{what} n={}: {a:.6} vs {e:.6}", r.n))?;
    }
    Ok(())
}

fn in_range(what: &str, value: f64, lo: f64, hi: f64) -> Result<(), String> {
    ensure((lo..=hi).contains(&value), || format!("{what} = {value:.3} outside [{lo}, {hi}]"))
}

fn criterion_1() -> Check {
    let expected = [
        (Family::Lagrange, [243, 1125, 3087, 6561, 11979]),
        (Family::Nedelec, [270, 1620, 4914, 11016, 20790]),
        (Family::SymCurl, [376, 2280, 7064, 16072, 30648]),
    ];
    for (n_idx, &n) in LEVELS.iter().enumerate() {
        let mesh = generate_cube_mesh(n).map_err(|e| e.to_string())?;
        for (family, counts) in &expected {
            let got = build_dof_map(*family, &mesh).count;
            ensure(got == counts[n_idx], || format!("{family} n={n}: {got} != {}", counts[n_idx]))?;
        }
    }
    Ok("15 counts match".into())
}

fn criterion_2() -> Check {
    let l2_ref = [
        (Family::Lagrange, [2.001268, 0.490123, 0.213860, 0.118652, 0.075233]),
        (Family::Nedelec, [2.204564, 1.049169, 0.686781, 0.510634, 0.406501]),
        (Family::SymCurl, [1.785570, 0.453260, 0.200791, 0.112467, 0.071783]),
    ];
    let hsc_ref = [
        (Family::Lagrange, [5.255326, 2.647609, 1.756105, 1.311500, 1.045895]),
        (Family::Nedelec, [5.048746, 2.619432, 1.745978, 1.307143, 1.044095]),
        (Family::SymCurl, [5.177029, 2.641034, 1.754562, 1.310955, 1.045652]),
    ];
    let mut summary = Vec::new();
    for ((family, l2), (_, hsc)) in l2_ref.iter().zip(&hsc_ref) {
        let records = study(*family, Benchmark::Vortex)?;
        check_series(&format!("{family} L2"), &records, Norm::L2, l2)?;
        check_series(&format!("{family} HsC"), &records, Norm::HSymCurl, hsc)?;
        let l2_rate = rate(&records, Norm::L2)?;
        let hsc_rate = rate(&records, Norm::HSymCurl)?;
        let (lo, hi) = if *family == Family::Nedelec { (0.8, 1.2) } else { (1.8, 2.2) };
        in_range(&format!("{family} L2 rate"), l2_rate, lo, hi)?;
        in_range(&format!("{family} HsC rate"), hsc_rate, 0.8, 1.2)?;
        summary.push(format!("{family} L2 {l2_rate:.2} HsC {hsc_rate:.2}"));
    }
    Ok(summary.join(", "))
}

fn criterion_3() -> Check {
    let ned = study(Family::Nedelec, Benchmark::NormalJump)?;
    let worst = ned.iter().map(|r| r.l2_error.max(r.hsc_error)).fold(0.0, f64::max);
    ensure(worst <= 1e-10, || format!("nedelec error {worst:e} > 1e-10"))?;
    let mut summary = vec![format!("nedelec max error {worst:.1e}")];
    for (family, first) in [(Family::Lagrange, 1.047416), (Family::SymCurl, 0.891548)] {
        let records = study(family, Benchmark::NormalJump)?;
        let r = rate(&records, Norm::L2)?;
        in_range(&format!("{family} L2 rate"), r, 0.35, 0.65)?;
        let e = records[0].l2_error;
        ensure(within(e, first, 0.15), || format!("{family} n=2 L2 {e:.6} vs {first}"))?;
        summary.push(format!("{family} rate {r:.2}"));
    }
    Ok(summary.join(", "))
}

fn criterion_4() -> Check {
    let sc = study(Family::SymCurl, Benchmark::IdentityJump)?;
    let e = sc[0].l2_error.max(sc[0].hsc_error);
    ensure(e <= 1e-10, || format!("symcurl n=2 error {e:e} > 1e-10"))?;
    let mut summary = vec![format!("symcurl n=2 error {e:.1e}")];
    let mut nedelec = Vec::new();
    for (family, first) in [(Family::Lagrange, 1.649242), (Family::Nedelec, 1.365295)] {
        let records = study(family, Benchmark::IdentityJump)?;
        let r = rate(&records, Norm::L2)?;
        in_range(&format!("{family} L2 rate"), r, 0.35, 0.65)?;
        let e = records[0].l2_error;
        ensure(within(e, first, 0.15), || format!("{family} n=2 L2 {e:.6} vs {first}"))?;
        summary.push(format!("{family} rate {r:.2}"));
        if family == Family::Nedelec {
            nedelec = records;
        }
    }
    check_series(
        "nedelec HsC",
        &nedelec,
        Norm::HSymCurl,
        &[1.814654, 1.463053, 1.365813, 1.315575, 1.286065],
    )?;
    let tail = &nedelec[2..];
    let hs: Vec<f64> = tail.iter().map(|r| 2.0 / r.n as f64).collect();
    let es: Vec<f64> = tail.iter().map(|r| r.hsc_error).collect();
    let slope = fit_slope(&hs, &es);
    in_range("nedelec HsC tail slope", slope, -0.15, 0.15)?;
    summary.push(format!("nedelec HsC tail slope {slope:.3}"));
    Ok(summary.join(", "))
}

fn criterion_5() -> Check {
    let reports = run_suite(2024, 50);
    for r in &reports {
        ensure(r.passed(), || {
            format!("{}: {}", r.identity.description(), r.failure.as_deref().unwrap_or(""))
        })?;
    }
    Ok(format!("{} identity groups x 50 fields exact", reports.len()))
}

fn random_tet(rng: &mut ChaCha8Rng) -> TetGeometry {
    loop {
        let mut v: [Vector3<f64>; 4] = std::array::from_fn(|_| Vector3::from_fn(|_, _| rng.gen_range(-1.0..1.0)));
        let Ok(g) = TetGeometry::new(v) else { continue };
        if g.volume() < 0.02 {
            continue;
        }
        if g.det < 0.0 {
            v.swap(2, 3);
        }
        return TetGeometry::new(v).expect("reordered tetrahedron");
    }
}

fn interior_point(rng: &mut ChaCha8Rng, g: &TetGeometry) -> Vector3<f64> {
    let w: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.05..1.0));
    let s: f64 = w.iter().sum();
    g.vertices.iter().zip(w).map(|(v, w)| v * (w / s)).sum()
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let l = dof_functionals();
    let k_rule = tet_rule(2).map_err(|e| e.to_string())?;
    let line = edge_rule(3).map_err(|e| e.to_string())?;
    for _ in 0..20 {
        let g = random_tet(&mut rng);
        let signs: [f64; 6] = std::array::from_fn(|_| if rng.gen_bool(0.5) { 1.0 } else { -1.0 });
        let x = interior_point(&mut rng, &g);

        let lag = LocalBasis::new(Family::Lagrange, &g, &signs).map_err(|e| e.to_string())?;
        let pu: f64 = (0..4).map(|k| lag.functions[9 * k].value(&x)[0]).sum();
        ensure((pu - 1.0).abs() <= 1e-12, || format!("partition of unity {pu}"))?;

        let ned = LocalBasis::new(Family::Nedelec, &g, &signs).map_err(|e| e.to_string())?;
        for (i, &(a, b)) in LOCAL_EDGES.iter().enumerate() {
            let (xa, xb) = (g.vertices[a], g.vertices[b]);
            let t = xb - xa;
            for (j, f) in ned.functions.iter().enumerate() {
                for row in 0..3 {
                    let v = signs[i]
                        * line.integrate(|s| {
                            let p = f.value(&(xa + t * s));
                            (0..3).map(|c| p[index(row, c)] * t[c]).sum()
                        });
                    let expected = f64::from(j == 3 * i + row);
                    ensure((v - expected).abs() <= 1e-12, || format!("edge duality {v} vs {expected}"))?;
                }
            }
        }

        let sc = LocalBasis::new(Family::SymCurl, &g, &signs).map_err(|e| e.to_string())?;
        for (q, f) in sc.functions.iter().enumerate() {
            for (k, xk) in g.vertices.iter().enumerate() {
                let vals = l * f.value(xk);
                for i in 0..9 {
                    let expected = f64::from(q == 9 * k + i);
                    ensure((vals[i] - expected).abs() <= 1e-12, || format!("functional duality {}", vals[i]))?;
                }
            }
        }
        let field = |p: &Vector3<f64>| Matrix3::new(1.0 + p.y, p.x, -p.z, 0.5, p.x - p.y, 2.0, p.z, 0.0, -p.x);
        let coeffs: Vec<f64> = g
            .vertices
            .iter()
            .flat_map(|xk| (l * to_voigt(&field(xk))).iter().copied().collect::<Vec<_>>())
            .collect();
        let (v, _) = sc.evaluate(&coeffs, &x);
        let err = (v - field(&x)).amax();
        ensure(err <= 1e-12, || format!("linear reproduction error {err:e}"))?;

        for basis in [&lag, &ned, &sc] {
            let k = local_stiffness(basis, &k_rule);
            let asym = (&k - k.transpose()).amax();
            ensure(asym <= 1e-12, || format!("{} stiffness asymmetry {asym:e}", basis.family))?;
            let norm = k.amax();
            let min = SymmetricEigen::new(k).eigenvalues.min();
            ensure(min >= -1e-10 * norm, || format!("{} min eigenvalue {min:e}", basis.family))?;
        }
    }
    Ok("20 random tetrahedra".into())
}

fn criterion_7() -> Check {
    let mut checked = 0;
    for deg in 1..=MAX_TET_DEGREE {
        let rule = tet_rule(deg).map_err(|e| e.to_string())?;
        for a in 0..=deg {
            for b in 0..=(deg - a) {
                for c in 0..=(deg - a - b) {
                    let q = rule.integrate(|p| p.x.powi(a as i32) * p.y.powi(b as i32) * p.z.powi(c as i32));
                    let e = exact_tet_monomial(a, b, c).to_f64().expect("finite");
                    ensure(((q - e) / e).abs() <= 1e-12, || format!("degree {deg} ({a},{b},{c}): {q} vs {e}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} monomials across degrees 1..={MAX_TET_DEGREE}"))
}

fn criterion_8() -> Check {
    let case = Benchmark::Vortex.case();
    let mut summary = Vec::new();
    for (family, lo, hi) in [(Family::Lagrange, 1.8, 2.2), (Family::Nedelec, 0.8, 1.2), (Family::SymCurl, 1.8, 2.2)] {
        let records = interpolation_error(family, &case, &LEVELS, &RunOptions::default()).map_err(|e| e.to_string())?;
        let r = rate(&records, Norm::L2)?;
        in_range(&format!("{family} interpolation rate"), r, lo, hi)?;
        summary.push(format!("{family} {r:.2}"));
    }
    Ok(summary.join(", "))
}

fn criterion_9() -> Check {
    let mismatches = vortex_moment_mismatches();
    ensure(mismatches.is_empty(), || format!("entries differ: {mismatches:?}"))?;
    Ok("9 entries equal".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("DOF-count exactness", criterion_1),
        ("vortex benchmark", criterion_2),
        ("normal-jump benchmark", criterion_3),
        ("identity-jump benchmark", criterion_4),
        ("identity suite", criterion_5),
        ("element properties", criterion_6),
        ("quadrature oracle", criterion_7),
        ("interpolation rates", criterion_8),
        ("vortex load cross-check", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
