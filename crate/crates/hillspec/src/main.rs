//! Command-line front end. Exit codes: 0 ok, 1 validation failure,
//! 2 bad input, 3 numerical failure (the failing operation is named on
//! standard error).

use clap::{Args, Parser, Subcommand};
use hillspec::asymptotics::decay_profile;
use hillspec::fourier_ops::{converged_spectrum_from, BcSpec};
use hillspec::localization::{certify_localization, DiskRadius};
use hillspec::pipeline::{
    cross_engine_gap_table, cross_engine_spectrum, eigenvalue_count, validate,
};
use hillspec::potential::PotentialFourier;
use hillspec::report::fmt_f64;
use num_complex::Complex64;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hillspec", version, about = "Spectra of Hill operators with singular periodic potentials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Potential file (JSON); omit for v = 0
    #[arg(long)]
    potential: Option<std::path::PathBuf>,
    /// Boundary condition: per+ | per- | dir | theta=<v>
    #[arg(long, default_value = "per+")]
    bc: BcSpec,
    /// Highest band index
    #[arg(long = "n-max", default_value_t = 5)]
    n_max: u32,
    /// Convergence tolerance
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Override the starting Fourier cutoff
    #[arg(long = "K")]
    k_cut: Option<usize>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Output format
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues from both engines with the agreement column
    Spectrum(CommonArgs),
    /// Discriminant samples over a real lambda grid
    Monodromy(CommonArgs),
    /// Region-wise eigenvalue count certification
    Localize {
        #[command(flatten)]
        common: CommonArgs,
        /// Localization threshold (disks are checked for N < n <= 2N)
        #[arg(long = "N", default_value_t = 8)]
        n_threshold: u32,
        /// Shrinking disk radii r_n = n^(3/4) instead of n/4
        #[arg(long)]
        shrinking: bool,
    },
    /// Gap table and decay profile
    Gaps(CommonArgs),
    /// Full property suite; nonzero exit on any failure
    Validate(CommonArgs),
}

enum CliError {
    BadInput(String),
    Numerical(String),
    ValidationFailed,
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::BadInput(format!("io: {e}"))
    }
}

fn load_potential(args: &CommonArgs) -> Result<PotentialFourier, CliError> {
    match &args.potential {
        None => Ok(PotentialFourier::zero()),
        Some(path) => PotentialFourier::from_path(path)
            .map_err(|e| CliError::BadInput(format!("potential file {}: {e}", path.display()))),
    }
}

fn emit(args: &CommonArgs, text: String) -> Result<(), CliError> {
    match &args.out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
    }
}

fn run_spectrum(args: &CommonArgs) -> Result<(), CliError> {
    let p = load_potential(args)?;
    let count = eigenvalue_count(args.bc, args.n_max);
    let rep = cross_engine_spectrum(&p, args.bc, count, args.tol)
        .map_err(|e| CliError::Numerical(format!("spectrum: {e}")))?;
    let text = if args.format == "csv" { rep.to_csv() } else { rep.to_json() };
    emit(args, text)
}

fn run_monodromy(args: &CommonArgs) -> Result<(), CliError> {
    let p = load_potential(args)?;
    if !p.is_real() {
        return Err(CliError::BadInput(
            "monodromy sampling is defined on a real lambda grid; potential must be real".into(),
        ));
    }
    let hi = (args.n_max as f64 + 0.5).powi(2);
    let steps = 200usize;
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let lam = -10.0 + (hi + 10.0) * i as f64 / (steps - 1) as f64;
        let sol = hillspec::floquet::integrate_fundamental(&p, Complex64::new(lam, 0.0), args.tol.clamp(1e-13, 1e-6))
            .map_err(|e| CliError::Numerical(format!("monodromy: {e}")))?;
        rows.push((lam, sol.delta, sol.wronskian_defect));
    }
    let text = if args.format == "csv" {
        let mut out = String::from("lambda,delta_re,delta_im,wronskian_defect\n");
        for (lam, d, w) in &rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt_f64(*lam),
                fmt_f64(d.re),
                fmt_f64(d.im),
                fmt_f64(*w)
            ));
        }
        out
    } else {
        let objs: Vec<serde_json::Value> = rows
            .iter()
            .map(|(lam, d, w)| {
                serde_json::json!({
                    "lambda": lam,
                    "delta_re": d.re,
                    "delta_im": d.im,
                    "wronskian_defect": w,
                })
            })
            .collect();
        serde_json::to_string_pretty(&objs).expect("serialization is infallible")
    };
    emit(args, text)
}

fn run_localize(common: &CommonArgs, n_threshold: u32, shrinking: bool) -> Result<(), CliError> {
    let p = load_potential(common)?;
    let count = eigenvalue_count(common.bc, 2 * n_threshold + 1).max(2);
    let k0 = common.k_cut.unwrap_or(4 * count.max(8));
    let cs = converged_spectrum_from(&p, common.bc, count, common.tol, k0)
        .map_err(|e| CliError::Numerical(format!("localize: {e}")))?;
    let radius = if shrinking { DiskRadius::Shrinking } else { DiskRadius::Default };
    let rep = certify_localization(&p, common.bc, n_threshold, &cs.eigenvalues, radius);
    let text = if common.format == "csv" {
        rep.to_csv()
    } else {
        serde_json::to_string_pretty(&rep).expect("serialization is infallible")
    };
    emit(common, text)?;
    if rep.pass {
        Ok(())
    } else {
        Err(CliError::ValidationFailed)
    }
}

fn run_gaps(args: &CommonArgs) -> Result<(), CliError> {
    let p = load_potential(args)?;
    let table = cross_engine_gap_table(&p, args.n_max, args.tol)
        .map_err(|e| CliError::Numerical(format!("gaps: {e}")))?;
    let text = if args.format == "csv" {
        table.to_csv()
    } else {
        let decay = decay_profile(&table).ok();
        serde_json::to_string_pretty(&serde_json::json!({
            "table": table,
            "decay": decay,
        }))
        .expect("serialization is infallible")
    };
    emit(args, text)
}

fn run_validate(args: &CommonArgs) -> Result<(), CliError> {
    let p = load_potential(args)?;
    let rep = validate(&p);
    for s in &rep.suites {
        eprintln!("{}: {} ({})", s.name, if s.pass { "pass" } else { "FAIL" }, s.detail);
    }
    emit(args, rep.to_json())?;
    if rep.pass {
        Ok(())
    } else {
        Err(CliError::ValidationFailed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(a) => run_spectrum(a),
        Command::Monodromy(a) => run_monodromy(a),
        Command::Localize { common, n_threshold, shrinking } => {
            run_localize(common, *n_threshold, *shrinking)
        }
        Command::Gaps(a) => run_gaps(a),
        Command::Validate(a) => run_validate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::ValidationFailed) => {
            eprintln!("validation failed");
            ExitCode::from(1)
        }
        Err(CliError::BadInput(msg)) => {
            eprintln!("bad input: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("numerical failure in {msg}");
            ExitCode::from(3)
        }
    }
}
