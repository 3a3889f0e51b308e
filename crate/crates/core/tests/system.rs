use symcurl::bench::{Benchmark, RunOptions};
use symcurl::mesh::generate_cube_mesh;
use symcurl::system::{apply_dirichlet, assemble, build_dof_map, interpolate_field, QuadratureDegrees, SolverOptions};
use symcurl::Family;

#[test]
fn dof_counts_for_all_levels() {
    let expected = [
        (Family::Lagrange, [243, 1125, 3087, 6561, 11979]),
        (Family::Nedelec, [270, 1620, 4914, 11016, 20790]),
        (Family::SymCurl, [376, 2280, 7064, 16072, 30648]),
    ];
    for (family, counts) in expected {
        for (n, count) in [2, 4, 6, 8, 10].into_iter().zip(counts) {
            let mesh = generate_cube_mesh(n).unwrap();
            assert_eq!(build_dof_map(family, &mesh).count, count, "{family} n = {n}");
        }
    }
}

#[test]
fn vortex_energy_decreases_under_refinement() {
    let case = Benchmark::Vortex.case();
    let degrees = QuadratureDegrees::default();
    let options = RunOptions::default();
    for family in Family::ALL {
        let mut previous = f64::INFINITY;
        for n in [2, 4, 6, 8] {
            let mesh = generate_cube_mesh(n).unwrap();
            let dofs = build_dof_map(family, &mesh);
            let sys = assemble(&mesh, &dofs, &case.moment, &degrees).unwrap();
            let g = interpolate_field(&mesh, &dofs, &case.exact).unwrap();
            let a = apply_dirichlet(&sys, &dofs, &g).unwrap().solve(&options.solver).unwrap();
            let energy = sys.energy(&a);
            assert!(energy <= previous + 1e-12 * previous.abs(), "{family} n = {n}: {energy} > {previous}");
            previous = energy;
        }
    }
}

#[test]
fn iterative_solver_meets_tolerance_on_large_system() {
    use symcurl::system::relative_residual;
    let case = Benchmark::Vortex.case();
    let mesh = generate_cube_mesh(6).unwrap();
    let dofs = build_dof_map(Family::SymCurl, &mesh);
    let sys = assemble(&mesh, &dofs, &case.moment, &QuadratureDegrees::default()).unwrap();
    let g = interpolate_field(&mesh, &dofs, &case.exact).unwrap();
    let reduced = apply_dirichlet(&sys, &dofs, &g).unwrap();
    assert!(reduced.dim() > SolverOptions::default().dense_threshold);
    let a = symcurl::system::solve(&reduced.matrix, &reduced.rhs, &SolverOptions::default()).unwrap();
    assert!(relative_residual(&reduced.matrix, &a, &reduced.rhs) <= 1e-12);
}
