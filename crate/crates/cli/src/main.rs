//! `rlgraphs`: build random-like graph families, run exact censuses and
//! check universality, clique bounds and the non-universality certificate.
//!
//! Exit codes: 0 success, 1 usage or other error, 2 an `--expect` check
//! failed, 3 malformed input, 4 a resource limit was hit.

mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Result;
use clap::{Parser, Subcommand};
use rlgraphs::constructions::DEFAULT_SEED;
use rlgraphs::graph::{set_max_order, CirculantParam};

use commands::{Consistency, Format, Status};
use source::{InputError, SourceArgs};

/// Environment variable overriding the largest graph order any builder accepts.
const MAX_ORDER_ENV: &str = "RLGRAPHS_MAX_ORDER";

#[derive(Parser, Debug)]
#[command(name = "rlgraphs", version, about = "Random-like graph families and exact induced-subgraph statistics")]
struct Cli {
    /// Worker threads for the parallel kernels (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output file (default: stdout)
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph as graph6, with a provenance sidecar `<out>.json`
    Gen {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Induced 3- or 4-vertex census with identity checks
    Census {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
        order: u8,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Exit with 2 unless every identity holds
        #[arg(long)]
        expect: bool,
    },
    /// Which l-vertex graphs occur as induced subgraphs
    Universal {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "l", value_name = "L")]
        l: usize,
        /// Exit with 2 unless the graph is l-universal
        #[arg(long)]
        expect: bool,
    },
    /// Exact clique number, optionally the independence number too
    Clique {
        #[command(flatten)]
        source: SourceArgs,
        /// Time budget in seconds; an exhausted budget yields a lower bound
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
        #[arg(long)]
        alpha: bool,
        /// Exit with 2 unless the clique number is exact and at most this
        #[arg(long, value_name = "BOUND")]
        expect_at_most: Option<usize>,
    },
    /// Certificate that a tower graph is not 24l*2^l-universal
    Obstruct {
        #[arg(long = "l", value_name = "L", default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED.0)]
        seed: u64,
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
        /// Exit with 2 unless the verdict is true
        #[arg(long)]
        expect: bool,
    },
    /// 3-vertex densities along a family and their deviations from 1/8, 3/8
    Limits {
        /// circulant, doubled-circulant, blowup, cgw, tower:<level>, random or complete
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "opt")]
        r: CirculantParam,
        /// Comma-separated parameter values
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
        #[arg(long, default_value_t = 0.01)]
        eps: f64,
        #[arg(long, default_value_t = DEFAULT_SEED.0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Exit with 2 unless every row has this property
        #[arg(long, value_enum)]
        expect: Option<Consistency>,
    },
    /// Run the built-in claim checks and print a pass/fail table
    VerifyClaims {
        /// Only these claim ids
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn secs(s: Option<f64>) -> Result<Option<Duration>> {
    s.map(|s| Duration::try_from_secs_f64(s).map_err(|e| anyhow::anyhow!("bad budget {s}: {e}"))).transpose()
}

fn run(cli: Cli) -> Result<Status> {
    if let Ok(value) = std::env::var(MAX_ORDER_ENV) {
        let max = value.parse().map_err(|_| anyhow::anyhow!("{MAX_ORDER_ENV}={value} is not a number"))?;
        set_max_order(max);
    }
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gen { source } => commands::gen(&source, out),
        Command::Census { source, order, format, expect } => commands::census(&source, order as usize, format, out, expect),
        Command::Universal { source, l, expect } => commands::universal(&source, l, out, expect),
        Command::Clique { source, budget, alpha, expect_at_most } => {
            commands::clique(&source, secs(budget)?, alpha, expect_at_most, out)
        }
        Command::Obstruct { l, n, seed, budget, expect } => commands::obstruct(l, n, seed, secs(budget)?, out, expect),
        Command::Limits { family, r, ks, eps, seed, format, expect } => {
            commands::limits(&family, r, &ks, eps, seed, format, out, expect)
        }
        Command::VerifyClaims { only, json } => commands::verify_claims(&only, json, out),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use rlgraphs::Error as E;
    if err.downcast_ref::<InputError>().is_some() {
        return 3;
    }
    match err.downcast_ref::<E>() {
        Some(E::MalformedGraph6 { .. }) => 3,
        Some(E::TooLarge { .. } | E::Overflow { .. } | E::Timeout { .. } | E::CertificateFailed { .. }) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ExpectationFailed(why)) => {
            eprintln!("expectation failed: {why}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
