//! nct: a command line workbench for radicals of cluster tilting
//! subcategories of bounded quiver algebra module categories.
//!
//! Exit codes: 0 success, 1 mathematical failure (a check failed),
//! 2 input error, 3 budget exceeded.

mod commands;

use clap::{Parser, Subcommand};
use nct_core::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nct", version, about = "radical and finiteness workbench for cluster tilting subcategories")]
struct Cli {
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Random seed (overrides NCT_SEED; recorded in every report).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Budget for sweeps and searches.
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Re-check emitted morphisms and certificate identities before writing.
    #[arg(long, global = true)]
    verify: bool,

    /// Cap the worker thread pool.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra presentation and report its dimension and basis.
    CheckAlgebra { algebra: PathBuf },
    /// List the path basis per ordered vertex pair.
    Basis { algebra: PathBuf },
    /// A canonical basis of Hom(X, Y).
    Hom {
        algebra: PathBuf,
        source: PathBuf,
        target: PathBuf,
    },
    /// Decompose a module into indecomposable summands.
    DecomposeModule { algebra: PathBuf, module: PathBuf },
    /// Enumerate all indecomposables up to a dimension cap (F_2 / F_3).
    Enumerate {
        algebra: PathBuf,
        /// Cap on the total dimension swept.
        #[arg(long, default_value_t = nct_core::oracle::DEFAULT_MAX_TOTAL_DIM)]
        max_dim: usize,
    },
    /// Verify the n-cluster tilting definition against a complete list.
    CheckNct {
        algebra: PathBuf,
        subcategory: PathBuf,
        /// Subcategory file listing all indecomposables (trusted input).
        #[arg(long)]
        complete: PathBuf,
    },
    /// Radical ladder: powers per pair up to stabilization.
    Radical {
        algebra: PathBuf,
        subcategory: PathBuf,
    },
    /// Depth of a morphism in the subcategory radical filtration.
    Depth {
        algebra: PathBuf,
        subcategory: PathBuf,
        morphism: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Per-simple theta = envelope . cover data with depths.
    Theta {
        algebra: PathBuf,
        subcategory: PathBuf,
    },
    /// Full finiteness certificate for the listed subcategory.
    CertifyFinite {
        algebra: PathBuf,
        subcategory: PathBuf,
    },
    /// Decompose a radical morphism into sums of composites of
    /// irreducibles.
    DecomposeMorphism {
        algebra: PathBuf,
        subcategory: PathBuf,
        morphism: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Longest witnessed nonzero composite of radical basis morphisms.
    ChainSearch {
        algebra: PathBuf,
        subcategory: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
        /// Restrict to monomorphisms (experimental evidence only).
        #[arg(long, conflicts_with = "epi")]
        mono: bool,
        /// Restrict to epimorphisms (experimental evidence only).
        #[arg(long)]
        epi: bool,
    },
    /// Sample random chains of Harada-Sai length and check they vanish.
    HaradaSai {
        algebra: PathBuf,
        subcategory: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Inconsistency(_) => 1,
        Error::BudgetExceeded(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let seed = cli
        .seed
        .or_else(|| std::env::var("NCT_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(nct_core::rng::DEFAULT_SEED);
    let config = commands::Config {
        seed,
        budget: cli.budget,
        verify: cli.verify,
        out: cli.out.clone(),
    };
    match commands::run(&cli.command, &config) {
        Ok(math_ok) => {
            if math_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
