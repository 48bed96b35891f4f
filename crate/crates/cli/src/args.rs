use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hypvol",
    version,
    about = "Volumes and Euler characteristics of small arithmetic hyperbolic manifolds and orbifolds"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Working precision in bits; pins the precision (no escalation).
    #[arg(long, global = true, env = "HYPVOL_PRECISION", value_parser = clap::value_parser!(u32).range(64..))]
    pub precision: Option<u32>,

    /// Ceiling for automatic precision doubling.
    #[arg(long, global = true, env = "HYPVOL_MAX_PRECISION", default_value_t = 4096)]
    pub max_precision: u32,

    /// Largest prime in Euler products.
    #[arg(long, global = true, env = "HYPVOL_PRIME_CUTOFF", default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(2..))]
    pub prime_cutoff: u64,

    #[arg(long, global = true, env = "HYPVOL_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// How L_{l0|k} enters odd-dimensional orbifold volumes.
    #[arg(long, global = true, env = "HYPVOL_L_MODE", value_enum, default_value_t = LModeArg::Exact)]
    pub l_mode: LModeArg,

    /// How cover degrees are derived from Euler characteristics.
    #[arg(long, global = true, env = "HYPVOL_PARITY_RULE", value_enum, default_value_t = ParityArg::DenominatorOnly)]
    pub parity_rule: ParityArg,

    /// Significant digits for ball midpoints.
    #[arg(long, global = true, env = "HYPVOL_DIGITS", default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..=1000))]
    pub digits: u32,

    /// Rounding of printed decimals; the published tables truncate.
    #[arg(long, global = true, env = "HYPVOL_ROUNDING", value_enum, default_value_t = RoundingArg::Truncate)]
    pub rounding: RoundingArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of |chi(M^n)| (even n) or vol(M^n).
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Dimensions, e.g. `4..18` (inclusive) or `14`.
        #[arg(value_parser = parse_range)]
        range: RangeInclusive<u32>,
    },
    /// Check that every manifold cover of the smallest compact orbifold is
    /// larger than M^n.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all", value_parser = clap::value_parser!(u32).range(30..))]
        n: Option<u32>,
        /// All dimensions 30..=60.
        #[arg(long)]
        all: bool,
    },
    /// Print a single quantity.
    Value(ValueArgs),
}

#[derive(Debug, Args)]
pub struct ValueArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, value_enum)]
    pub kind: Option<LambdaKindArg>,
    #[arg(long, value_enum)]
    pub form: Option<FormArg>,
    /// For chi-compact: replace the default lambda factor by the one at a
    /// place with residue field of this size.
    #[arg(long)]
    pub lambda_q: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LModeArg {
    Exact,
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    DenominatorOnly,
    ForceEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RoundingArg {
    Truncate,
    HalfEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Euler,
    Volume,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Bernoulli,
    ZetaNeg,
    ZetaKNeg,
    ChiNoncompact,
    ChiCompact,
    VolNoncompact,
    VolCompact,
    CConstant,
    Lambda,
    Index,
    SuborbifoldChi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LambdaKindArg {
    Plain,
    Prime,
    Bar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    BrHyperspecial,
    BrCombined,
    DrOddCombined,
    TwoDr,
    BrMinus1,
}

pub const TABLE_DIMENSIONS: RangeInclusive<u32> = 4..=60;

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("not a dimension: {t:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    if !TABLE_DIMENSIONS.contains(&lo) || !TABLE_DIMENSIONS.contains(&hi) {
        return Err(format!(
            "dimensions must lie in {}..{}",
            TABLE_DIMENSIONS.start(),
            TABLE_DIMENSIONS.end()
        ));
    }
    Ok(lo..=hi)
}
