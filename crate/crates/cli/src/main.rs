//! `shimura`: exact computations on explicit recursive Shimura towers.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use shimura_towers::ffield::DEFAULT_CEILING;

#[derive(Parser, Debug)]
#[command(name = "shimura", version, about = "Exact computations on explicit recursive Shimura towers")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// emit CSV
    #[arg(long, global = true)]
    pub csv: bool,
    /// worker threads (default: all cores)
    #[arg(long, global = true, env = "SHIMURA_THREADS")]
    pub threads: Option<usize>,
    /// largest field size q^k accepted anywhere
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub max_field: u64,
    /// JSON file of additional towers, in the `catalog --json` schema
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    #[arg(long)]
    pub tower: String,
    #[arg(long)]
    pub prime: u64,
    /// base field F_{p^ext}
    #[arg(long, default_value_t = 1)]
    pub ext: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every stored identity of the towers
    VerifyIdentities {
        #[arg(long)]
        tower: Option<String>,
    },
    /// List the towers
    Catalog,
    /// Rational places N_{n,k} of level n over F_{q^k}, k = 1..=extensions
    Count {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 1)]
        extensions: u32,
    },
    /// Genus of a level, by Riemann–Hurwitz and optionally from point counts
    Genus {
        #[arg(long)]
        tower: String,
        #[arg(long)]
        level: usize,
        /// prime used from level 3 on
        #[arg(long, default_value_t = 13)]
        prime: u64,
        /// also fit the genus to N_{n,1..=K}
        #[arg(long)]
        zeta: Option<u32>,
    },
    /// Places, genus and N/g for levels 2..=level
    Lambda {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        level: usize,
    },
    /// Completely splitting points
    Splitting {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Modular polynomial of level 1 or 2
    Modpoly {
        #[arg(long)]
        tower: String,
        #[arg(long, default_value_t = 1)]
        level: usize,
        /// compute over F_p and compare with the reduction of the exact one
        #[arg(long)]
        prime: Option<u64>,
        /// check vanishing at random correspondence points (needs a seed)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Evaluation code on splitting chains
    Code {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        pole_bound: usize,
        /// exhaustive minimum distance when q^dim is at most this
        #[arg(long, default_value_t = shimura_towers::agcode::BRUTE_FORCE_CEILING)]
        brute_ceiling: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail("thread_pool", &e.to_string());
        }
    }
    let format = if cli.global.csv { Format::Csv } else { Format::Json };
    match commands::run(&cli) {
        Ok(out) => match out.print(format) {
            // a closed pipe (`| head`) is not an error of ours
            Ok(()) => ExitCode::from(if out.passed { 0 } else { 1 }),
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(if out.passed { 0 } else { 1 }),
            Err(e) => fail("io", &e.to_string()),
        },
        Err(e) => fail(e.code(), &e.to_string()),
    }
}

fn fail(code: &str, message: &str) -> ExitCode {
    eprintln!("{}", serde_json::json!({ "error": { "code": code, "message": message } }));
    ExitCode::from(2)
}
