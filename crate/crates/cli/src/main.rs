mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::report::Status;

/// Codimensions of varieties of algebras and dialgebras.
#[derive(Parser, Debug)]
#[command(name = "dicodim", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit one CSV row per result.
    #[arg(long, global = true)]
    csv: bool,
    /// Largest multilinear free space to materialize.
    #[arg(long, global = true, env = "DICODIM_MAX_FREE_DIM")]
    max_free_dim: Option<usize>,
    /// Largest number of candidate rows per degree.
    #[arg(long, global = true, env = "DICODIM_MAX_ROWS")]
    max_rows: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Codimensions c_1..c_N of a variety.
    Codim {
        #[arg(short = 'v', long = "variety")]
        variety: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// The di-variety presentation.
    Di {
        #[arg(short = 'v', long = "variety")]
        variety: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// The pre-variety presentation.
    Pre {
        #[arg(short = 'v', long = "variety")]
        variety: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Codimensions of the variety generated by an algebra.
    VarCodim {
        #[arg(short = 'a', long = "algebra")]
        algebra: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Whether an algebra satisfies the identities of a variety.
    Check {
        #[arg(short = 'a', long = "algebra")]
        algebra: String,
        #[arg(short = 'v', long = "variety")]
        variety: String,
    },
    /// The hat algebra of a dialgebra and its embedding check.
    Hat {
        #[arg(short = 'a', long = "algebra")]
        algebra: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Compare the codimensions of Var(D) and its hat variety for n = 2..N.
    Theorem4 {
        #[arg(short = 'a', long = "algebra")]
        algebra: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Exact checks of the Zinbiel, tensor and codimension identities.
    Verify(VerifyArgs),
    /// Shipped algebras and varieties.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("check").required(true).args(["lemma3", "zn_dim", "lemma1", "eq2"])))]
struct VerifyArgs {
    /// The Zinbiel sum identity in degrees 1..N.
    #[arg(long)]
    lemma3: bool,
    /// The dimension of the right-normed span in degrees 1..N.
    #[arg(long)]
    zn_dim: bool,
    /// The isomorphism Z ⊠ (P ⊗ A) ≅ (P ⊠ Z) ⊗ A with Z the divided powers of degree < N+1.
    #[arg(long)]
    lemma1: bool,
    /// c_n(di-V) = n c_n(V) for n = 1..N.
    #[arg(long, requires = "variety")]
    eq2: bool,
    #[arg(short = 'v', long = "variety")]
    variety: Option<String>,
    #[arg(short = 'n', long = "n")]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum ZooAction {
    /// List shipped algebras and varieties.
    List,
    /// Print a shipped file.
    Show { name: String },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut limits = dicodim::Limits::default();
    if let Some(d) = cli.global.max_free_dim {
        limits.max_free_dim = d;
    }
    if let Some(r) = cli.global.max_rows {
        limits.max_rows = r;
    }
    match commands::run(cli.command, &limits) {
        Ok(report) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("report serializes"));
            } else if cli.global.csv {
                print!("{}", report.to_csv());
            } else {
                print!("{}", report.to_table());
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Failed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
