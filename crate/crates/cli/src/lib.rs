//! Command-line front end: argument parsing, command dispatch and report
//! rendering.

mod commands;
pub mod report;

use clap::{Args, Parser, Subcommand};

pub use report::{render_report, Format, Item, Metadata, RunReport, Status};
use triop_core::par::Jobs;
use triop_core::sampling::DEFAULT_SEED;
use triop_core::scalar::DEFAULT_D;

#[derive(Debug, Parser)]
#[command(name = "triop", version, about = "Exact checks for O-operators, 3-Pre-Lie algebras and 3-Lie CYBE solutions")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Seed for every randomized check.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Worker count: 0 uses all cores, 1 runs sequentially.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Adds per-item wall-clock durations to the report.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Checks the fundamental identity of an algebra document.
    VerifyAlgebra {
        #[arg(long)]
        input: String,
    },
    /// Checks the O-operator condition of an operator document.
    VerifyOperator {
        /// Algebra document; the 3-dimensional algebra when omitted.
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        operator: String,
        /// Comma-separated `name=expr` parameter values.
        #[arg(long)]
        params: Option<String>,
    },
    /// The catalogue of O-operator families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Prints the 3-Pre-Lie product induced by a family.
    Induce {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: Option<String>,
    },
    /// 3-Pre-Lie documents and the printed induced tables.
    #[command(subcommand)]
    Prelie(PrelieCommand),
    /// Expands the axioms for the generic 2-dimensional product.
    Dim2Experiment,
    /// Builds the semidirect product with the coadjoint (or adjoint)
    /// representation.
    Semidirect {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, value_enum, default_value = "coadjoint")]
        rep: RepKind,
    },
    /// Classical Yang-Baxter checks.
    #[command(subcommand)]
    Cybe(CybeCommand),
    /// Finds the families containing a numeric 3x3 matrix.
    Classify {
        #[arg(long)]
        matrix: String,
    },
    /// Enumerates integer matrices with entries in [-bound, bound].
    SearchGrid {
        #[arg(long, default_value_t = 1)]
        bound: u32,
    },
    /// Seeded agreement checks between independent deciders.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Verify {
        /// Also checks this many sampled numeric instances per family.
        #[arg(long, default_value_t = 0)]
        instances: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum PrelieCommand {
    Verify {
        #[arg(long)]
        input: String,
    },
    Diff {
        /// One family; every family when omitted.
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CybeCommand {
    Verify {
        /// One solution such as `r7`; every solution when omitted.
        #[arg(long)]
        solution: Option<String>,
    },
    Bracket {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        tensor: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RepKind {
    Adjoint,
    Coadjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteName {
    Conditions,
    Prelie,
    Lemma,
}

/// Invalid input: unreadable file, malformed document, bad parameter or
/// failed precondition. Maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Context {
    pub d: u32,
    pub seed: u64,
    pub jobs: Jobs,
    pub timings: bool,
}

/// `TRIOP_D` if set, otherwise the default radicand.
pub fn d_from_env(value: Option<&str>) -> Result<u32, InputError> {
    match value {
        None => Ok(DEFAULT_D),
        Some(v) => {
            let d: u32 = v.trim().parse().map_err(|_| InputError(format!("TRIOP_D={v:?} is not an integer")))?;
            triop_core::scalar::validate_d(d).map_err(|e| InputError(format!("TRIOP_D: {e}")))
        }
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(cli: &Cli, d: u32) -> Result<RunReport, InputError> {
    let ctx = Context { d, seed: cli.global.seed, jobs: Jobs::from_count(cli.global.jobs), timings: cli.global.timings };
    commands::dispatch(&cli.command, &ctx)
}

/// Full entry point on an argument vector: returns the exit code, the
/// standard output and the standard error text.
pub fn run<I, T>(args: I, triop_d: Option<&str>) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let d = match d_from_env(triop_d) {
        Ok(d) => d,
        Err(e) => return (2, String::new(), format!("error: {e}\n")),
    };
    match execute(&cli, d) {
        Ok(report) => (report.exit_code(), render_report(&report, cli.global.format), String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
