use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wallislab", version, about = "Exact and certified checks of Wallis's formula and the probability integral")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enclose or estimate π
    Pi(PiArgs),
    /// Tabulate a sequence
    Table(TableArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Evaluate the integral of e^(-x²) from 0 to t
    Erf(ErfArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Json => "json",
            Self::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PiMethod {
    Wallis,
    Variation4,
    Machin,
}

impl PiMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Wallis => "wallis",
            Self::Variation4 => "variation4",
            Self::Machin => "machin",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PiArgs {
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub terms: u64,
    #[arg(long, value_enum, default_value = "wallis")]
    pub method: PiMethod,
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..=1000))]
    pub digits: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// a_n, I_n, E_n, v1..v5 or binom_ratio
    #[arg(long)]
    pub sequence: String,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub step: u64,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=900))]
    pub digits: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// stieltjes, squeeze, wallis, disguise, sandwich, conservation or all
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ErfMethod {
    Direct,
    Borwein,
}

impl ErfMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Direct => "direct",
            Self::Borwein => "borwein",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ErfArgs {
    /// Upper limit, a nonnegative number or `inf`
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "direct")]
    pub method: ErfMethod,
    #[command(flatten)]
    pub output: OutputArgs,
}
