use std::fs;
use std::process::{Command, Output};

fn symcurl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcurl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn lagrange_vortex_csv_matches_reference_first_point() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("vortex.csv");
    let out = symcurl(&[
        "converge",
        "--element",
        "lagrange",
        "--benchmark",
        "vortex",
        "--levels",
        "2,4,6,8,10",
        "--load-degree",
        "2",
        "--norm-degree",
        "2",
        "--edge-degree",
        "1",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "elements,dofs,l2_error,hsc_error");
    assert!(lines[1].starts_with("40,243,2.00"), "{}", lines[1]);
    assert!(lines[5].starts_with("5000,11979,"));
    let mantissa = lines[1].split(',').nth(2).unwrap().split('e').next().unwrap();
    assert_eq!(mantissa.replace('.', "").len(), 15);
    assert!(stdout(&out).contains("rate l2: 2."));
}

#[test]
fn exact_case_prints_exact_rate() {
    let out = symcurl(&["converge", "--element", "symcurl", "--benchmark", "identity-jump", "--levels", "2"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("rate l2: exact") && s.contains("rate hsc: exact"), "{s}");
}

#[test]
fn csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = symcurl(&[
            "converge",
            "--element",
            "nedelec",
            "--benchmark",
            "normal-jump",
            "--levels",
            "2,4",
            "--csv",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        fs::read(path).unwrap()
    };
    assert_eq!(run("a.csv"), run("b.csv"));
}

#[test]
fn svg_plot_written() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("plot.svg");
    let out = symcurl(&[
        "converge",
        "--element",
        "symcurl",
        "--benchmark",
        "normal-jump",
        "--levels",
        "2,4",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(svg).unwrap();
    assert!(text.contains(r#"version="1.1""#) && text.contains("<polyline"));
}

#[test]
fn invalid_flags_exit_2() {
    let missing = symcurl(&["converge", "--benchmark", "vortex"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("Usage"));
    for args in [
        &["converge", "--element", "hermite", "--benchmark", "vortex"][..],
        &["converge", "--element", "lagrange", "--benchmark", "vortex", "--levels", "2,3"],
        &["converge", "--element", "lagrange", "--benchmark", "vortex", "--tol", "-1"],
        &["mesh-export", "3", "mesh.vtk"],
    ] {
        assert_eq!(symcurl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solver_failure_exits_1_and_names_stage() {
    let out = symcurl(&[
        "converge",
        "--element",
        "lagrange",
        "--benchmark",
        "vortex",
        "--levels",
        "2",
        "--stiffness-degree",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("lagrange/vortex/n=2: assembly"), "{}", stderr(&out));
}

#[test]
fn identities_pass_deterministically() {
    let a = symcurl(&["verify-identities", "--seed", "7", "--count", "10"]);
    let b = symcurl(&["verify-identities", "--seed", "7", "--count", "10"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS")).count(), 4);

    let empty = symcurl(&["verify-identities", "--count", "0"]);
    assert!(empty.status.success());
    assert!(stderr(&empty).contains("warning"));
}

#[test]
fn mesh_export_writes_vtk() {
    let dir = tempfile::tempdir().unwrap();
    for (n, points, cells) in [("2", 27, 40), ("10", 1331, 5000)] {
        let path = dir.path().join(format!("mesh{n}.vtk"));
        let out = symcurl(&["mesh-export", n, path.to_str().unwrap()]);
        assert!(out.status.success());
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.contains(&format!("POINTS {points} double")));
        assert!(text.contains(&format!("CELLS {cells} ")));
    }
    let bad = symcurl(&["mesh-export", "2", dir.path().join("missing/mesh.vtk").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}
