// SPDX-License-Identifier: MIT
//! `grasscat`: profiles, roots, tubes and censuses from the command line.
//!
//! Exit status 0 on success, 1 on usage errors, 2 on domain errors.

mod commands;
mod input;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grasscat_core::oracle::{DEFAULT_SEED, PRIMES};

use input::{parse_kn, Kn, Usage};

#[derive(Debug, Parser)]
#[command(name = "grasscat", version, about = "Rank-one filtrations, roots and tubes of Grassmannian cluster categories")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Parameters as `k,n`.
    #[arg(long, global = true, value_parser = parse_kn)]
    pub kn: Option<Kn>,
    /// Seeds for randomized oracle steps; the first drives single-seed commands.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [DEFAULT_SEED])]
    pub seed: Vec<u64>,
    /// Primary prime for the module oracle.
    #[arg(long, global = true, default_value_t = PRIMES[0])]
    pub prime: u64,
    /// Second prime for cross-checks.
    #[arg(long, global = true, default_value_t = PRIMES[1])]
    pub second_prime: u64,
    /// Truncation length for matrix output; defaults to `2n`.
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
    /// Worker threads for enumeration and census work.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Permit `k > n/2`.
    #[arg(long, global = true)]
    pub allow_large_k: bool,
    /// Print only the number of results.
    #[arg(long, global = true)]
    pub count_only: bool,
    /// Output format; `census` and `enumerate` default to TSV, the rest to JSON.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Diagnostics on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Rank2Boxes,
    Canonical,
    Imaginary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitSide {
    Start,
    End,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data of a profile or of a vector in ℤⁿ(k).
    Root {
        #[arg(long, conflicts_with = "x", required_unless_present = "x")]
        profile: Option<String>,
        /// Multiplicity vector, comma separated.
        #[arg(long)]
        x: Option<String>,
    },
    /// Shape predicates, root data and configuration verdict of a profile.
    ClassifyProfile {
        #[arg(long)]
        profile: String,
    },
    /// Quasi-boxes between an upper and a lower row.
    Boxes {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// Removes common labels and common non-labels of two rows.
    Collapse {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// Shifts a profile, or a-shifts a pair of rows.
    Shift {
        #[arg(long, required_unless_present_all = ["upper", "lower"])]
        profile: Option<String>,
        #[arg(long, requires = "lower")]
        upper: Option<String>,
        #[arg(long, requires = "upper")]
        lower: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// One step of the inverse translate on profiles.
    Tau {
        #[arg(long)]
        profile: String,
    },
    /// Almost split sequences with rank-one end terms.
    Ar {
        #[arg(long)]
        subset: String,
        /// Apply the splitting rule for `{i, i+2, i+4}`.
        #[arg(long, value_enum)]
        split: Option<SplitSide>,
    },
    /// Walks a `τ`-orbit from a starting profile.
    Tube {
        #[arg(long)]
        start: String,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// The rigid indecomposable rank 3 census over (3,9).
    Census {
        /// Skip the tube-id column.
        #[arg(long)]
        no_tubes: bool,
    },
    /// Exhaustive generators.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Number of rows for `canonical`.
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Rigidity, indecomposability and relation checks at both primes.
    OracleCheck {
        #[arg(long)]
        profile: String,
        /// Also print the arrow matrices.
        #[arg(long)]
        matrices: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(j) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("warning: {e}");
        }
    }
    let started = Instant::now();
    let result = commands::run(&cli);
    if cli.global.verbose > 0 {
        eprintln!("elapsed {:.2?}", started.elapsed());
    }
    match result {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) if e.downcast_ref::<Usage>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
