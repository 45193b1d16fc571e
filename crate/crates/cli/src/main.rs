//! Command-line front end: instance file I/O, subcommand dispatch,
//! deterministic seeds, human-readable traces and JSON reports.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use maxfree_core::Error;

#[derive(Parser)]
#[command(
    name = "maxfree",
    version,
    about = "Exact toolkit for free polyhedra, relative convexity and Helly numbers"
)]
struct Cli {
    /// Write the machine-readable run report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<std::path::PathBuf>,

    /// Seed for randomized modes; fixed default keeps runs reproducible.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Helly numbers of finite ground sets.
    Helly {
        #[command(subcommand)]
        action: HellyCommand,
    },
    /// Freeness, maximalization, certificates and enlargement.
    Sfree {
        #[command(subcommand)]
        action: SfreeCommand,
    },
    /// Separate a polyhedron from a facet of another.
    Separate(SeparateArgs),
    /// Parity (midpoint) searches over lattices.
    Parity {
        #[command(subcommand)]
        action: ParityCommand,
    },
    /// Bound verification harnesses.
    Verify {
        #[command(subcommand)]
        action: VerifyCommand,
    },
    /// Convert a full-dimensional polyhedron file to its interior's strict
    /// system.
    Convert(ConvertArgs),
}

#[derive(Subcommand)]
enum HellyCommand {
    /// Exact Helly number with a validated witness family.
    Compute(HellyComputeArgs),
}

#[derive(Args)]
struct HellyComputeArgs {
    /// Point-set instance file.
    #[arg(long, value_name = "FILE")]
    points: std::path::PathBuf,
    /// Randomized lower-bound mode for sets beyond the enumeration cap.
    #[arg(long)]
    lower_bound: bool,
    /// Sample count for the lower-bound mode.
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

#[derive(Subcommand)]
enum SfreeCommand {
    /// Is the interior of the polyhedron disjoint from the ground set?
    Check(SfreeCheckArgs),
    /// Run the blocking/redundancy maximalization procedure.
    Maximalize(SfreeMaximalizeArgs),
    /// Certify maximality via facet witnesses.
    Certify(SfreeCertifyArgs),
    /// Enlarge via facet-preserving separation until certified or capped.
    Improve(SfreeImproveArgs),
}

#[derive(Args)]
struct SfreeCheckArgs {
    #[arg(long, value_name = "FILE")]
    polyhedron: std::path::PathBuf,
    #[arg(long, value_name = "FILE", conflicts_with = "union")]
    points: Option<std::path::PathBuf>,
    #[arg(long, value_name = "FILE")]
    union: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SfreeMaximalizeArgs {
    /// Strict-system seed file.
    #[arg(long, value_name = "FILE")]
    system: std::path::PathBuf,
    #[arg(long, value_name = "FILE")]
    points: std::path::PathBuf,
    /// Processing order as 1-based constraint indices, e.g. "2,1".
    #[arg(long, value_name = "LIST")]
    order: Option<String>,
}

#[derive(Args)]
struct SfreeCertifyArgs {
    #[arg(long, value_name = "FILE")]
    polyhedron: std::path::PathBuf,
    #[arg(long, value_name = "FILE", conflicts_with = "union")]
    points: Option<std::path::PathBuf>,
    #[arg(long, value_name = "FILE")]
    union: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SfreeImproveArgs {
    #[arg(long, value_name = "FILE")]
    polyhedron: std::path::PathBuf,
    #[arg(long, value_name = "FILE")]
    union: std::path::PathBuf,
    /// Enlargement step cap.
    #[arg(long, default_value_t = 100)]
    iterations: usize,
}

#[derive(Args)]
struct SeparateArgs {
    /// The polyhedron providing the facet.
    #[arg(long, value_name = "FILE")]
    p: std::path::PathBuf,
    /// The polyhedron to separate.
    #[arg(long, value_name = "FILE")]
    q: std::path::PathBuf,
    /// Facet index into the irredundant facet list of p (0-based).
    #[arg(long)]
    facet: usize,
}

#[derive(Subcommand)]
enum ParityCommand {
    /// Find two points with a lattice midpoint.
    Find(ParityFindArgs),
}

#[derive(Args)]
struct ParityFindArgs {
    #[arg(long, value_name = "FILE")]
    lattice: std::path::PathBuf,
    #[arg(long, value_name = "FILE")]
    points: std::path::PathBuf,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Cube-vertex witness family checks and truncation profiles.
    Doignon(VerifyDoignonArgs),
    /// Instance-level bound comparison.
    Bounds(VerifyBoundsArgs),
}

#[derive(Args)]
struct VerifyDoignonArgs {
    /// Lattice dimension.
    #[arg(long)]
    d: usize,
    /// Also compute the truncation profile for radii 1..=T.
    #[arg(long)]
    t: Option<i64>,
}

#[derive(Args)]
struct VerifyBoundsArgs {
    /// Bounds-instance file.
    #[arg(long, value_name = "FILE")]
    instance: std::path::PathBuf,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_name = "FILE")]
    polyhedron: std::path::PathBuf,
    /// Output path for the strict-system file (stdout section otherwise).
    #[arg(long, value_name = "FILE")]
    output: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = report::RunReport::new(cli.seed);
    let outcome = commands::dispatch(&cli.command, cli.seed, &mut report);
    match outcome {
        Ok(()) => {
            report.finish();
            if let Some(path) = &cli.json {
                if let Err(e) = report.write_json(path) {
                    eprintln!("error: cannot write report: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match &e {
                Error::Internal(_) => 1u8,
                _ => 2u8,
            };
            ExitCode::from(code)
        }
    }
}
