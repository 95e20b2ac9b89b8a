//! `genuslab` — command-line laboratory for curves `x - a*x^p = y^p` over
//! `F_p(t)`.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a mathematical check
//! failed, 2 = usage error, 3 = resource/budget error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use genuslab::CoreError;

#[derive(Parser, Debug)]
#[command(
    name = "genuslab",
    version,
    about = "Curves over F_p(t) that drop genus under inseparable base change: \
             point enumeration, genus verification, brute-force oracles",
    after_help = "Environment variables GENUSLAB_JSON, GENUSLAB_WORKERS, \
                  GENUSLAB_BUDGET and GENUSLAB_SEED mirror the global flags."
)]
pub struct Cli {
    /// Write the machine-readable JSON document to this path.
    #[arg(long, global = true, env = "GENUSLAB_JSON")]
    json: Option<PathBuf>,

    /// Worker threads for parallel enumeration and search.
    #[arg(long, global = true, env = "GENUSLAB_WORKERS")]
    workers: Option<usize>,

    /// Candidate budget for brute-force searches.
    #[arg(long, global = true, env = "GENUSLAB_BUDGET", default_value_t = 1 << 28)]
    budget: u64,

    /// Seed for the randomized spot checks.
    #[arg(long, global = true, env = "GENUSLAB_SEED", default_value_t = 0x67656e75736c61_u64)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose the admissible index set into orbits of the index map.
    Orbits {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Enumerate the constructed points of C_n over F_{p^k}(t).
    Points {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Emit only the first L points (deterministic prefix).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check the point-count bounds by exact orbit counting.
    Bounds {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Compute the relative genus via Riemann-Roch dimension counts.
    Genus {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Explicit curve coefficient (text form, e.g. "t + t^5" or
        /// "(t+1)/(t^2)"); default is the C_n coefficient.
        #[arg(long)]
        a: Option<String>,
        /// Also run the independent semilinear-kernel oracle (small p only).
        #[arg(long)]
        oracle: bool,
    },
    /// Verify the absolute-genus-zero parametrization and pull every
    /// constructed point back to its parameter.
    ParamCheck {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Exhaustive coefficient-space oracle over GF(p^k), compared against
    /// the orbit construction.
    OracleCoeffs {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        partitions: u32,
        /// Persist/resume progress at this path.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Exhaustive bounded-height point search on C_n over F_{p^k}(t).
    OraclePoints {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        height: u64,
        #[arg(long, default_value_t = 8)]
        partitions: u32,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Evaluate the family coefficient t*f(u) and check the specialization
    /// u = t^(q+1) against the C_n coefficient.
    Family {
        #[arg(long)]
        p: u64,
        /// Text form of u, e.g. "t^4" or "0".
        #[arg(long)]
        u: String,
    },
    /// Run every desk-scale check and print a pass/fail matrix.
    Report {
        /// Curve parameters as p,n (repeatable); default matrix is
        /// (3,1) (3,2) (3,3) (5,1).
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(u64, u32)>,
        /// Include the semilinear genus oracle where feasible.
        #[arg(long)]
        oracle: bool,
    },
}

fn parse_pair(s: &str) -> Result<(u64, u32), String> {
    let (p, n) = s
        .split_once(',')
        .ok_or_else(|| format!("expected p,n but got '{s}'"))?;
    Ok((
        p.trim().parse().map_err(|e| format!("bad p: {e}"))?,
        n.trim().parse().map_err(|e| format!("bad n: {e}"))?,
    ))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(2)
                }
            };
        }
    };

    let workers = cli.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot build worker pool: {e}");
            return ExitCode::from(3);
        }
    };

    match pool.install(|| commands::dispatch(&cli)) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &CoreError) -> u8 {
    match e {
        CoreError::InvalidInput(_)
        | CoreError::CtxMismatch
        | CoreError::DivisionByZero
        | CoreError::Parse(_) => 2,
        CoreError::ResourceLimit(_)
        | CoreError::Checkpoint(_)
        | CoreError::Interrupted
        | CoreError::Io(_)
        | CoreError::Json(_) => 3,
        CoreError::ConstructionFailure(_) | CoreError::CheckFailed(_) => 1,
    }
}
