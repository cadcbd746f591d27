//! Command-line grammar.
//!
//! Words are compact letter strings (`PMPM`, `R1R2`, `ZZbZ` — `Zb` is a
//! two-character token). Profiles are `kind:key=value,...` flags:
//! `expfrac:B=1,s=2`, `heat:t=1`, `poly:p=4`, `delta:l0=1,i=0,j=0`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "gevcalc",
    about = "Operator calculus on the unitary duals of SU(2) and the Heisenberg group",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    Subl,
    Beltrami,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Write the report here instead of standard output (temp file + atomic
    /// rename; no partial files on failure)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sweep an SU(2) Riesz-symbol operator norm over spin indices
    Su2Riesz {
        /// Word over {P, M, R1, R2}, e.g. PM or R1R2
        #[arg(long)]
        word: String,
        /// Smallest spin index (half-integer, > 0)
        #[arg(long, default_value_t = 0.5)]
        l_min: f64,
        /// Largest spin index (half-integer)
        #[arg(long)]
        l_max: f64,
        /// Diagonal operator for the fractional power
        #[arg(long, value_enum, default_value_t = OperatorArg::Subl)]
        operator: OperatorArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep a Heisenberg Riesz-symbol norm over representation parameters
    HeisRiesz {
        /// Word over {X, Y, Z, Zb}, e.g. ZZb
        #[arg(long)]
        word: String,
        /// Comma-separated nonzero λ values, e.g. 0.25,1,4
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<f64>,
        /// Hermite truncation N (needs 2·|word| < N)
        #[arg(long)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Per-spin factor norms of the three-factor Riesz decomposition
    FactorBounds {
        /// Word over {P, M} of length >= 2
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 5.0)]
        l_min: f64,
        #[arg(long, default_value_t = 50.0)]
        l_max: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fit a Gevrey order to the L^k seminorms of a coefficient profile
    GevreyFit {
        /// Profile flag, e.g. expfrac:B=1,s=2 or heat:t=1
        #[arg(long)]
        profile: String,
        /// Band limit (half-integer)
        #[arg(long)]
        band: f64,
        #[arg(long, default_value_t = 12)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the three-way equivalence battery on a profile
    GevreyBattery {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        band: f64,
        /// Claimed Gevrey order for the Roumieu grid and the verdict
        #[arg(long)]
        s_claim: f64,
        #[arg(long, default_value_t = 12)]
        k_max: usize,
        #[arg(long, default_value_t = 6)]
        max_word_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed-form supremum of λ^k e^{-Dλ^{1/(2s)}} over λ >= 0
    MultiplierSup {
        #[arg(long)]
        k: f64,
        /// Exponential coefficient D > 0
        #[arg(long)]
        d: f64,
        /// Order parameter s > 0
        #[arg(long)]
        s: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Partial sums of Σ (2l+1)·Σ_m (1 + l(l+1) - m²)^{-2N}
    BesselSeries {
        /// Power N >= 1 of the Bessel multiplier
        #[arg(long)]
        n: u32,
        /// Largest spin index (half-integer)
        #[arg(long)]
        l_max: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the full invariant suite; exit 0 iff every invariant passes
    CheckAll,
}
