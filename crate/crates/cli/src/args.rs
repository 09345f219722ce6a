use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zagier_core::formulas::ConvergenceSeries;
use zagier_core::verify::Identity;

#[derive(Debug, Parser)]
#[command(name = "zagier-kit", version, about = "Zagier polynomials and modified Bernoulli numbers, exactly and by Bessel series")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Target absolute accuracy of every series.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Largest number of explicit Bessel terms per series.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Bernoulli number cache file, read at start and extended on exit.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Admissible x range for the Bessel series, as `lo,hi`.
    #[arg(long, global = true)]
    pub x_window: Option<String>,

    /// Worker threads (0 picks one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// File of `key = value` lines supplying defaults for the options above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    EvenFormula,
    OddFormula,
    ZagierNumber,
    ZagierType,
    Asymptotic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate B*_n(x), or B*_n when no x is given.
    Eval {
        /// Polynomial index n of B*_n.
        #[arg(long)]
        n: usize,
        /// Evaluation point, `p/q` or a decimal.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
    },
    /// Tabulate a method over a range of n and a list of x.
    Table {
        /// Inclusive range `a..b` of polynomial indices.
        #[arg(long, default_value = "1..10")]
        n: String,
        #[arg(long, default_value_t = 1)]
        step: usize,
        /// Comma-separated evaluation points; omit for the numbers B*_n.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        /// Add exact values and errors next to numeric methods.
        #[arg(long)]
        compare: bool,
    },
    /// Run an identity check suite.
    Verify {
        /// Identity name, or `all`.
        #[arg(long)]
        identity: String,
        /// Largest n for the denominator suite.
        #[arg(long, default_value_t = 60)]
        n_max: usize,
    },
    /// Plain against accelerated partial sums of one series.
    Converge {
        #[arg(long)]
        series: ConvergenceSeries,
        /// Series parameter: the Bessel order is 2n (cosine) or 2n+1 (sine).
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value = "1/2")]
        x: String,
        /// Comma-separated explicit term counts.
        #[arg(long, default_value = "10,20,50,100,200,500,1000,2000,5000")]
        terms: String,
    },
}

/// Parses an identity name or `all`.
pub fn parse_identities(s: &str) -> Result<Vec<Identity>, String> {
    if s == "all" {
        return Ok(Identity::ALL.to_vec());
    }
    s.parse::<Identity>().map(|i| vec![i]).map_err(|e| e.to_string())
}
