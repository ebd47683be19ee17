use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hyperbolical::bench::report::sig6;
use hyperbolical::bench::{dump_wavefunction, parse_state_label, run_single, run_table1, BenchConfig, Mode};
use hyperbolical::potential::{solve_approx_constants, PUBLISHED_C0, PUBLISHED_GAMMA};
use hyperbolical::{Error, PotentialParams};

const PASS: u8 = 0;
const VIOLATION: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "hyperbolical", version, about = "Bound states of V(r) = D[1 - σ₀ coth(αr)]²")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print γ, c₀ and the matching residuals, then attempt the slope-condition root solve.
    Constants {
        /// Root solver tolerance on γ.
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Energy of one state.
    Solve {
        #[command(flatten)]
        physics: Physics,
        #[arg(long, default_value = "both")]
        mode: Mode,
        /// Max analytic vs numeric relative error in percent (mode=both).
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Reproduce the embedded literature table.
    Table1 {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory for table1.csv and table1.json.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Max analytic vs numeric relative error in percent.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Sample the normalized radial wavefunction to CSV with a JSON sidecar.
    Wavefunction {
        #[command(flatten)]
        physics: Physics,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Physics {
    #[arg(long)]
    state: String,
    #[arg(long = "D")]
    d: Option<f64>,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    sigma0: f64,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    hbar: Option<f64>,
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Physics {
    fn resolve(&self) -> Result<(BenchConfig, PotentialParams), Error> {
        let cfg = load_config(self.config.as_ref())?;
        let p = PotentialParams::new(
            self.d.unwrap_or(cfg.d),
            self.alpha,
            self.sigma0,
            self.mu.unwrap_or(cfg.mu),
            self.hbar.unwrap_or(cfg.hbar),
        )?;
        Ok((cfg, p))
    }
}

fn load_config(path: Option<&PathBuf>) -> Result<BenchConfig, Error> {
    path.map_or_else(|| Ok(BenchConfig::default()), |p| BenchConfig::from_file(p))
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::InvalidParameter(_) | Error::Label { .. } | Error::Config { .. } => USAGE,
        _ => VIOLATION,
    }
}

fn fail(err: Error) -> ExitCode {
    match err {
        Error::Unbound { .. } => println!("notice: {err}"),
        _ => eprintln!("error: {err}"),
    }
    ExitCode::from(exit_for(&err))
}

fn constants(tolerance: f64) -> Result<u8, Error> {
    let published = hyperbolical::ApproxConstants::published();
    println!("gamma           = {PUBLISHED_GAMMA}");
    println!("c0              = {PUBLISHED_C0}");
    println!("c0 (recomputed) = {}", published.c0);
    println!("residual_first  = {:e}", published.residual_first);
    println!("residual_second = {:e}", published.residual_second);
    match solve_approx_constants(tolerance) {
        Ok(c) => {
            println!("solved gamma    = {}", c.gamma);
            println!("solved c0       = {}", c.c0);
            let ok = (c.gamma - PUBLISHED_GAMMA).abs() <= 1e-9 && (c.c0 - PUBLISHED_C0).abs() <= 1e-12;
            Ok(if ok { PASS } else { VIOLATION })
        }
        Err(e @ Error::InvalidParameter(_)) => Err(e),
        Err(e) => {
            println!("solve failed    : {e}");
            Ok(VIOLATION)
        }
    }
}

fn solve(physics: &Physics, mode: Mode, tolerance: Option<f64>) -> Result<u8, Error> {
    let label = parse_state_label(&physics.state)?;
    let (mut cfg, p) = physics.resolve()?;
    if let Some(t) = tolerance {
        cfg.accuracy_percent = t;
    }
    let report = run_single(&label, &p, mode, &cfg)?;
    println!("{report}");
    if let (Some(rel), Some(_)) = (report.rel_err_percent(), tolerance) {
        if rel > cfg.accuracy_percent {
            eprintln!("relative error {}% exceeds {}%", sig6(rel), cfg.accuracy_percent);
            return Ok(VIOLATION);
        }
    }
    Ok(PASS)
}

fn table1(config: Option<&PathBuf>, out: &Path, tolerance: Option<f64>) -> Result<u8, Error> {
    let mut cfg = load_config(config)?;
    if let Some(t) = tolerance {
        cfg.accuracy_percent = t;
    }
    let report = run_table1(&cfg)?;
    print!("{}", report.render());
    let (csv, json) = report.write_files(out)?;
    println!("wrote {} and {}", csv.display(), json.display());
    let violations = report.violations();
    for v in &violations {
        eprintln!("violation: {v}");
    }
    if violations.is_empty() {
        Ok(PASS)
    } else {
        eprintln!("{} tolerance violations", violations.len());
        Ok(VIOLATION)
    }
}

fn wavefunction(physics: &Physics, out: &Path) -> Result<u8, Error> {
    let label = parse_state_label(&physics.state)?;
    let (cfg, p) = physics.resolve()?;
    let side = dump_wavefunction(&label, &p, &cfg.constants()?, out)?;
    println!(
        "{} E = {} beta = {} delta = {} N = {} nodes = {} -> {}",
        side.state,
        sig6(side.energy),
        sig6(side.beta),
        sig6(side.delta),
        sig6(side.norm_constant),
        side.node_count,
        out.display()
    );
    Ok(PASS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Constants { tolerance } => constants(*tolerance),
        Command::Solve { physics, mode, tolerance } => solve(physics, *mode, *tolerance),
        Command::Table1 { config, out, tolerance } => table1(config.as_ref(), out, *tolerance),
        Command::Wavefunction { physics, out } => wavefunction(physics, out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => fail(e),
    }
}
