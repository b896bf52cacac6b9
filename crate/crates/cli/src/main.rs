//! `mroman`: exact Roman / perfect Roman domination on middle graphs.
//!
//! Exit codes: 0 ok, 1 theorem diagnostic or survey violation, 2 input or
//! parse error, 3 size guard exceeded.

mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use middle_roman::roman::{DEFAULT_SIZE_GUARD, MAX_SIZE_GUARD};
use middle_roman::{Error, ParseError, Solver};

use source::{Format, GraphSource};

#[derive(Debug, Parser)]
#[command(name = "mroman", version, about)]
pub struct Cli {
    /// Largest element count the exact search accepts (at most 64)
    #[arg(long, global = true, env = "MR_SIZE_GUARD", default_value_t = DEFAULT_SIZE_GUARD)]
    size_guard: usize,
    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Gamma {
    /// γ_R(G)
    R,
    /// γ_pR(G)
    Pr,
    /// γ_R★(G) = γ_R(M(G))
    RStar,
    /// γ_pR★(G) = γ_pR(M(G))
    PrStar,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute domination numbers with witnesses
    Solve {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Which numbers to compute (repeatable); all four by default
        #[arg(long, value_enum)]
        gamma: Vec<Gamma>,
    },
    /// Print the middle graph M(G) and its element map
    Middle {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Emit the closed-form PMRDF for a path or cycle
    Construct {
        #[arg(long, value_name = "N", group = "shape", required = true)]
        path: Option<usize>,
        #[arg(long, value_name = "N", group = "shape")]
        cycle: Option<usize>,
    },
    /// Check whether γ_R★ = γ_pR★ agrees with the structural characterization
    Check {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Verify the invariants over a graph6 corpus or seeded random graphs
    Survey {
        /// graph6 (one graph per line) or edge-list file
        #[arg(long, value_name = "PATH", group = "corpus", required = true)]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Number of random G(n, p) graphs
        #[arg(long, value_name = "COUNT", group = "corpus")]
        random: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only check γ_R(M(G)) = n
        #[arg(long)]
        kim_only: bool,
    },
    /// Tabulate γ_pR★ for complete or complete bipartite graphs
    OpenProblems {
        #[arg(long, group = "kind", required = true)]
        complete: bool,
        #[arg(long, group = "kind")]
        complete_bipartite: bool,
        /// Largest n for K_n, largest m + n for K_{m,n}
        #[arg(long, value_name = "N")]
        max: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Guard(String),
    Diagnostic(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Diagnostic(_) => 1,
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } => CliError::Guard(e.to_string()),
            Error::Construction(_) => CliError::Diagnostic(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Guard(m) | CliError::Diagnostic(m) => f.write_str(m),
        }
    }
}

/// Printed text plus the exit code to finish with.
pub struct Report {
    pub text: String,
    pub code: u8,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let solver = Solver::new(cli.size_guard).map_err(|_| {
        CliError::Input(format!(
            "size guard {} exceeds the maximum of {MAX_SIZE_GUARD}",
            cli.size_guard
        ))
    })?;
    let out = cli.output;
    match cli.command {
        Command::Solve {
            source,
            format,
            gamma,
        } => commands::solve(&solver, &source.load(format)?, &gamma, out),
        Command::Middle { source, format } => commands::middle(&source.load(format)?, out),
        Command::Construct { path, cycle } => commands::construct(path, cycle, out),
        Command::Check { source, format } => commands::check(&solver, &source.load(format)?, out),
        Command::Survey {
            file,
            format,
            random,
            min_n,
            max_n,
            seed,
            kim_only,
        } => {
            let inputs = match (file, random) {
                (Some(path), _) => source::load_file(&path, format)?,
                (None, Some(count)) => commands::random_inputs(count, min_n, max_n, seed)?,
                (None, None) => unreachable!("clap requires a corpus"),
            };
            Ok(commands::survey(&solver, &inputs, kim_only, out))
        }
        Command::OpenProblems {
            complete,
            complete_bipartite: _,
            max,
        } => commands::open_problems(&solver, complete, max, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
