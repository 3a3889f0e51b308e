//! `symcurl` command-line driver: convergence studies, identity checks and mesh export.

mod plot;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symcurl::bench::{estimate_rate, run_level, Benchmark, ConvergenceRecord, Norm, RunOptions, LEVELS};
use symcurl::mesh::{generate_cube_mesh_with, DiagonalParity};
use symcurl::system::{QuadratureDegrees, SolverOptions};
use symcurl::tensorcalc::identities::run_suite;
use symcurl::Family;

#[derive(Debug, Parser)]
#[command(name = "symcurl", version, about = "Tetrahedral H(sym Curl) finite element studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a refinement study and report errors and convergence rates.
    Converge(RunConfig),
    /// Check the tensor calculus identities on seeded random polynomial fields.
    VerifyIdentities {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Number of random fields per identity.
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Write the cube mesh with `n` cells per axis as legacy ASCII VTK.
    MeshExport {
        #[arg(value_parser = parse_level)]
        n: usize,
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Parity::Odd)]
        parity: Parity,
    },
}

#[derive(Debug, Args)]
struct RunConfig {
    /// Element family: lagrange, nedelec or symcurl.
    #[arg(long)]
    element: Family,
    /// Benchmark: vortex, normal-jump or identity-jump.
    #[arg(long)]
    benchmark: Benchmark,
    /// Comma separated cells per axis, each even.
    #[arg(long, value_delimiter = ',', value_parser = parse_level, default_values_t = LEVELS)]
    levels: Vec<usize>,
    /// CSV output path; `-` writes to standard output.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// SVG log-log plot output path.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Relative residual tolerance of the linear solver.
    #[arg(long, value_parser = parse_tolerance)]
    tol: Option<f64>,
    /// Exactness degree of the stiffness quadrature.
    #[arg(long)]
    stiffness_degree: Option<u32>,
    /// Exactness degree of the load quadrature.
    #[arg(long)]
    load_degree: Option<u32>,
    /// Exactness degree of the error norm quadrature.
    #[arg(long)]
    norm_degree: Option<u32>,
    /// Exactness degree of the edge rule in the Nédélec interpolant.
    #[arg(long)]
    edge_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Parity::Odd)]
    parity: Parity,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Parity {
    Even,
    Odd,
}

impl From<Parity> for DiagonalParity {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Even => DiagonalParity::Even,
            Parity::Odd => DiagonalParity::Odd,
        }
    }
}

fn parse_level(s: &str) -> Result<usize, String> {
    let n: usize = s.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    if n < 2 || !n.is_multiple_of(2) {
        return Err(format!("`{n}` is not a positive even number"));
    }
    Ok(n)
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    if !(t.is_finite() && t > 0.0) {
        return Err(format!("`{s}` is not a positive tolerance"));
    }
    Ok(t)
}

impl RunConfig {
    fn options(&self) -> RunOptions {
        let d = QuadratureDegrees::default();
        RunOptions {
            degrees: QuadratureDegrees {
                stiffness: self.stiffness_degree.unwrap_or(d.stiffness),
                load: self.load_degree.unwrap_or(d.load),
                norms: self.norm_degree.unwrap_or(d.norms),
                edge: self.edge_degree.unwrap_or(d.edge),
            },
            solver: SolverOptions {
                tolerance: self.tol.unwrap_or(SolverOptions::default().tolerance),
                ..Default::default()
            },
            parity: self.parity.into(),
        }
    }
}

fn write_csv<W: Write>(mut w: W, records: &[ConvergenceRecord]) -> io::Result<()> {
    writeln!(w, "elements,dofs,l2_error,hsc_error")?;
    for r in records {
        writeln!(w, "{},{},{:.14e},{:.14e}", r.elements, r.dofs, r.l2_error, r.hsc_error)?;
    }
    w.flush()
}

fn write_file(path: &Path, what: &str, f: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Result<(), String> {
    let file = File::create(path).map_err(|e| format!("{what}: cannot create {}: {e}", path.display()))?;
    let mut w = BufWriter::new(file);
    f(&mut w).and_then(|_| w.flush()).map_err(|e| format!("{what}: writing {}: {e}", path.display()))
}

fn rate_text(records: &[ConvergenceRecord], norm: Norm) -> String {
    estimate_rate(records, norm).map_or_else(|_| "n/a".to_string(), |r| r.to_string())
}

fn cmd_converge(config: &RunConfig) -> ExitCode {
    let options = config.options();
    let case = config.benchmark.case();
    println!("{} / {}", config.element, config.benchmark);
    println!("{:>4} {:>8} {:>8} {:>22} {:>22} {:>9}", "n", "elements", "dofs", "l2_error", "hsc_error", "seconds");
    let mut records = Vec::with_capacity(config.levels.len());
    for &n in &config.levels {
        match run_level(config.element, &case, n, &options) {
            Ok(r) => {
                println!(
                    "{:>4} {:>8} {:>8} {:>22.14e} {:>22.14e} {:>9.3}",
                    r.n, r.elements, r.dofs, r.l2_error, r.hsc_error, r.seconds
                );
                records.push(r);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        }
    }
    println!("rate l2: {}", rate_text(&records, Norm::L2));
    println!("rate hsc: {}", rate_text(&records, Norm::HSymCurl));

    let mut outputs = Ok(());
    if let Some(path) = &config.csv {
        outputs = if path.as_os_str() == "-" {
            write_csv(io::stdout().lock(), &records).map_err(|e| format!("csv: {e}"))
        } else {
            write_file(path, "csv", |w| write_csv(w, &records))
        };
    }
    if let (Ok(()), Some(path)) = (&outputs, &config.svg) {
        let title = format!("{} / {}", config.element, config.benchmark);
        let svg = plot::render(&records, &title);
        outputs = write_file(path, "svg", |w| w.write_all(svg.as_bytes()));
    }
    match outputs {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_verify_identities(seed: u64, count: usize) -> ExitCode {
    if count == 0 {
        eprintln!("warning: --count 0 checks no fields; every identity passes vacuously");
    }
    let mut failed = false;
    for report in run_suite(seed, count) {
        let name = report.identity.description();
        match &report.failure {
            None => println!("PASS {name} ({} fields)", report.samples),
            Some(field) => {
                failed = true;
                println!("FAIL {name}\n{field}");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_mesh_export(n: usize, path: &Path, parity: Parity) -> ExitCode {
    let result = generate_cube_mesh_with(n, parity.into())
        .map_err(|e| format!("mesh: {e}"))
        .and_then(|mesh| {
            write_file(path, "vtk", |w| mesh.write_vtk(w))?;
            Ok(mesh)
        });
    match result {
        Ok(mesh) => {
            println!(
                "wrote {}: {} points, {} cells",
                path.display(),
                mesh.num_vertices(),
                mesh.num_tets()
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Converge(config) => cmd_converge(config),
        Command::VerifyIdentities { seed, count } => cmd_verify_identities(*seed, *count),
        Command::MeshExport { n, path, parity } => cmd_mesh_export(*n, path, *parity),
    }
}
