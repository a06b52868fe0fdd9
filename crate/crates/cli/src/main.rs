use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

/// Associated primes of powers of weighted edge ideals of increasing trees.
#[derive(Debug, Parser)]
#[command(name = "tree-assoc", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Witness-space cap for oracle computations.
    #[arg(long, default_value_t = tree_assoc::oracle::DEFAULT_BUDGET, global = true)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether the input is a tree and whether it is increasing.
    Validate { file: PathBuf },
    /// List every valid root.
    Roots { file: PathBuf },
    /// List vertex covers.
    Covers {
        file: PathBuf,
        #[command(flatten)]
        which: CoverKind,
    },
    /// Associated primes of the t-th power.
    Ass {
        file: PathBuf,
        #[arg(long)]
        t: u64,
        /// Compute by witness search instead of the strong-cover criterion.
        #[arg(long)]
        oracle: bool,
    },
    /// Same as `ass --oracle`.
    OracleAss {
        file: PathBuf,
        #[arg(long)]
        t: u64,
    },
    /// Index of stability and the stable set of associated primes.
    Astab { file: PathBuf },
    /// Compare the criterion against the oracle for t = 1..=tmax.
    Verify {
        file: PathBuf,
        #[arg(long)]
        tmax: u64,
    },
    /// Emit a random weighted tree.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        wmax: u64,
        #[arg(long)]
        seed: u64,
        /// Resample until the tree is increasing.
        #[arg(long)]
        increasing: bool,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct CoverKind {
    #[arg(long)]
    pub strong: bool,
    #[arg(long)]
    pub minimal: bool,
    #[arg(long)]
    pub all: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(report)) => {
            print!("{report}");
            ExitCode::from(3)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
