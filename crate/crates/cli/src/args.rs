use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use keralapi::{Backend, Correction, ExactInt, Formula, Policy, RoundingMode};

use crate::render::OutputFormat;

pub const DEFAULT_DIAMETER: &str = "900000000000";

#[derive(Debug, Parser)]
#[command(
    name = "keralapi",
    version,
    about = "Exact reconstructions of historical circumference computations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integer square root by digit pairs
    Sqrt(SqrtArgs),
    /// The √(12·D²) series ledger
    Varman(VarmanArgs),
    /// One evaluation of a formula
    Circumference(CircumferenceArgs),
    /// A formula evaluated over a range of term counts
    Scan(ScanArgs),
    /// Where a formula's value stops changing
    FixedPoint(FixedPointArgs),
    /// First term index that rounds to zero
    Onset(OnsetArgs),
    /// Decode a numeral phrase
    Decode(DecodeArgs),
    /// Encode a number as katapayādi syllables
    Encode(EncodeArgs),
    /// Compare a circumference with the reference value
    Compare(CompareArgs),
    /// Regenerate one of the stored tables
    Reproduce(ReproduceArgs),
}

/// Plain decimal integers only; `1e17` and the like are refused.
pub fn parse_int(s: &str) -> Result<ExactInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a plain decimal integer"));
    }
    s.parse().map_err(|e| format!("`{s}`: {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Floor,
    Nearest,
    FinalFloor,
    FinalNearest,
    /// floor, nearest and final-nearest side by side
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Scaled,
    Rational,
}

#[derive(Debug, Clone, Args)]
pub struct PolicyOpts {
    #[arg(long, value_enum, default_value = "floor")]
    pub policy: PolicyArg,
    /// Representation used by the final-* policies
    #[arg(long, value_enum, default_value = "scaled")]
    pub backend: BackendArg,
    /// Fractional digits kept by the scaled backend
    #[arg(long, default_value_t = keralapi::policy::DEFAULT_FRAC_DIGITS)]
    pub frac_digits: u32,
}

impl PolicyOpts {
    fn backend(&self) -> Backend {
        match self.backend {
            BackendArg::Rational => Backend::Rational,
            BackendArg::Scaled => Backend::Scaled {
                frac_digits: self.frac_digits,
            },
        }
    }

    /// The selected policies; `all` expands to three.
    pub fn policies(&self) -> Vec<Policy> {
        let exact = |mode| Policy::ExactFinal {
            mode,
            backend: self.backend(),
        };
        match self.policy {
            PolicyArg::Floor => vec![Policy::FloorEachOp],
            PolicyArg::Nearest => vec![Policy::NearestEachOp],
            PolicyArg::FinalFloor => vec![exact(RoundingMode::Floor)],
            PolicyArg::FinalNearest => vec![exact(RoundingMode::NearestHalfUp)],
            PolicyArg::All => vec![
                Policy::FloorEachOp,
                Policy::NearestEachOp,
                exact(RoundingMode::NearestHalfUp),
            ],
        }
    }

    pub fn single(&self) -> Result<Policy, String> {
        match self.policy {
            PolicyArg::All => Err("`--policy all` is only accepted by scan".to_string()),
            _ => Ok(self.policies()[0]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaArg {
    F1,
    F2,
    F3,
    F4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorrectionArg {
    C1,
    C2,
    C3,
}

#[derive(Debug, Clone, Args)]
pub struct FormulaOpts {
    #[arg(long, value_enum)]
    pub formula: FormulaArg,
    /// Correction term for f2 (default c3)
    #[arg(long, value_enum)]
    pub correction: Option<CorrectionArg>,
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true, default_value = DEFAULT_DIAMETER)]
    pub diameter: ExactInt,
}

impl FormulaOpts {
    pub fn formula(&self) -> Result<Formula, String> {
        let correction = self.correction.map(|c| match c {
            CorrectionArg::C1 => Correction::C1,
            CorrectionArg::C2 => Correction::C2,
            CorrectionArg::C3 => Correction::C3,
        });
        match (self.formula, correction) {
            (FormulaArg::F2, c) => Ok(Formula::F2(c.unwrap_or(Correction::C3))),
            (_, Some(_)) => Err("--correction only applies to f2".to_string()),
            (FormulaArg::F1, None) => Ok(Formula::F1),
            (FormulaArg::F3, None) => Ok(Formula::F3),
            (FormulaArg::F4, None) => Ok(Formula::F4),
        }
    }
}

#[derive(Debug, Args)]
pub struct SqrtArgs {
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub n: ExactInt,
    /// Print the digit-pair worksheet
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value = "floor")]
    pub round: RoundArg,
    /// Truncated decimal root with this many fractional digits
    #[arg(long, conflicts_with_all = ["trace", "round"])]
    pub frac_digits: Option<u32>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundArg {
    Floor,
    Nearest,
}

#[derive(Debug, Args)]
pub struct VarmanArgs {
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub diameter: ExactInt,
    #[command(flatten)]
    pub policy: PolicyOpts,
    /// Number of terms (required for final-* policies)
    #[arg(long)]
    pub terms: Option<u64>,
    /// Print every row of the ledger
    #[arg(long)]
    pub ledger: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CircumferenceArgs {
    #[command(flatten)]
    pub formula: FormulaOpts,
    #[arg(long)]
    pub terms: u64,
    #[command(flatten)]
    pub policy: PolicyOpts,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub formula: FormulaOpts,
    #[arg(long)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    #[command(flatten)]
    pub policy: PolicyOpts,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct FixedPointArgs {
    #[command(flatten)]
    pub formula: FormulaOpts,
    #[command(flatten)]
    pub policy: PolicyOpts,
    #[arg(long, default_value_t = keralapi::convergence::DEFAULT_WINDOW)]
    pub window: u64,
    #[arg(long, default_value_t = 100_000)]
    pub max_terms: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct OnsetArgs {
    #[command(flatten)]
    pub formula: FormulaOpts,
    #[arg(long, value_enum, default_value = "floor")]
    pub policy: RoundArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Katapayadi,
    Bhutasamkhya,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[arg(long, value_enum)]
    pub system: SystemArg,
    /// Extra lexicon entries (word<TAB>digits or word<TAB>E<k>)
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    #[arg(required = true)]
    pub tokens: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EncodeSystemArg {
    Katapayadi,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[arg(long, value_enum, default_value = "katapayadi")]
    pub system: EncodeSystemArg,
    #[arg(value_parser = parse_int, allow_negative_numbers = true)]
    pub n: ExactInt,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub circumference: ExactInt,
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    pub diameter: ExactInt,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    VarmanLedger,
    Table2,
    Table3,
    TableF4,
    F3FixedPoints,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long, value_enum)]
    pub table: TableArg,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}
