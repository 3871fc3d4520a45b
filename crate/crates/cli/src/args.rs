//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bsk", version, about = "Bessel-Struve kernel numerics on the unit disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Series,
    Integral,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Sampling grid, `N_RxN_THETA` with optional `@EPS`.
    #[arg(long, default_value = "64x128@0.001")]
    pub grid: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-15)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 500)]
    pub max_terms: usize,
    #[arg(long, default_value_t = 10)]
    pub quad_levels: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LambdaArgs {
    #[arg(long, default_value_t = 1.0)]
    pub lambda_re: f64,
    #[arg(long, default_value_t = 0.0)]
    pub lambda_im: f64,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long = "A")]
    pub a: f64,
    #[arg(long = "B")]
    pub b: f64,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Evaluate the kernel at one point.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        z_re: f64,
        #[arg(long, default_value_t = 0.0)]
        z_im: f64,
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Check every identity that applies to the given order on the grid.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        lambda: LambdaArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Theorem verdict and sampled membership for one parameter set.
    #[command(allow_negative_numbers = true)]
    Janowski {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Accepted only as 0: the predicates need real λ.
        #[arg(long, default_value_t = 0.0)]
        lambda_im: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Classify evenly spaced orders.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Accepted only as 0: the predicates need real λ.
        #[arg(long, default_value_t = 0.0)]
        lambda_im: f64,
        #[arg(long)]
        alpha_lo: f64,
        #[arg(long)]
        alpha_hi: f64,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Sampled check of g_{α+1} ≺ q.
    #[command(allow_negative_numbers = true)]
    Dominance {
        #[arg(long)]
        alpha: f64,
        /// identity | scaled:c | mobius:A,B | poly:c0,c1,... with optional @r
        #[arg(long)]
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Positive root of 4αΓ(α+1) = √π Γ(α+1/2).
    Alpha0 {
        #[command(flatten)]
        common: Common,
    },
}
