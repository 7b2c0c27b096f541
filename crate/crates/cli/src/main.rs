mod commands;
mod output;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

/// Modular symmetric functions and generalized Stirling numbers.
#[derive(Parser, Debug)]
#[command(name = "modsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Stirling triangle.
    Table(TableArgs),
    /// Evaluate a symmetric function at integers or symbolically.
    Eval(EvalArgs),
    /// List combinatorial objects, one per line, followed by their count.
    Enumerate(EnumerateArgs),
    /// Check catalog identities on a parameter grid and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_name = "FAMILY", required_unless_present = "family")]
    family_pos: Option<String>,
    /// stirling2, stirling1, stirling2mod, stirling1mod or stirling1higher
    #[arg(long, conflicts_with = "family_pos")]
    family: Option<String>,
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long)]
    n_max: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(value_name = "FUNCTION", required_unless_present = "function")]
    function_pos: Option<String>,
    /// M, E, e, h or Ml
    #[arg(long, conflicts_with = "function_pos")]
    function: Option<String>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Comma-separated integers, or `symbolic:N` for N variables.
    #[arg(long, allow_hyphen_values = true)]
    vars: String,
    /// enumeration, recurrence or convolution (M only)
    #[arg(long)]
    method: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(value_name = "FAMILY", required_unless_present = "family")]
    family_pos: Option<String>,
    /// paths, tilings, partitions, partitions-mod, partitions-bounded, perms or nested-tuples
    #[arg(long, conflicts_with = "family_pos")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    board: Option<usize>,
    #[arg(long)]
    blocks: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_name = "ID", required_unless_present_any = ["id", "seed_check"])]
    id_pos: Option<String>,
    /// Catalog id such as PS1, or `all`.
    #[arg(long, conflicts_with = "id_pos")]
    id: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    s_max: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    p_list: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    ell: Option<Vec<usize>>,
    #[arg(long)]
    board_max: Option<usize>,
    /// Bounds for flags not given: quick or full.
    #[arg(long, default_value = "full")]
    profile: String,
    /// Run the built-in broken variants and check that each is caught.
    #[arg(long, hide = true)]
    seed_check: bool,
    #[command(flatten)]
    out: OutputArgs,
}

/// Failures reported to the user, by exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<modsym_core::Error> for CliError {
    fn from(e: modsym_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("MODSYM_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "MODSYM_THREADS must be a positive integer, got '{v}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Table(a) => commands::table(a),
        Command::Eval(a) => commands::eval(a),
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Verify(a) => commands::verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
