//! Exact reconstructions of Kerala-school circumference computations.
//!
//! All arithmetic is on unbounded integers and exact rationals; there is
//! no floating point anywhere in the crate. The main entry points are:
//!
//! * [`sqrt::isqrt_traced`], Āryabhaṭa's digit-pair square root,
//! * [`series::build_ledger`], the √(12·D²) series under a rounding [`Policy`],
//! * [`formulas::circumference`] and [`formulas::scan_range`] for F1–F4,
//! * [`convergence::fixed_point`] and [`convergence::vanish_onset`],
//! * the numeral codecs in [`numerals`],
//! * [`reference`] for comparison against a stored value of π.

pub mod convergence;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod numerals;
pub mod policy;
pub mod reference;
pub mod scaled;
pub mod series;
pub mod sqrt;

pub use convergence::{fixed_point, vanish_onset, ConvergenceReport, DetectionMethod};
pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRatio, RoundingMode};
pub use formulas::{circumference, scan_range, ComputationResult, Correction, Formula};
pub use policy::{Backend, Policy, TermValue};
pub use scaled::ScaledValue;
pub use series::{build_ledger, varman_circumference, LedgerRow, SeriesLedger};
pub use sqrt::{isqrt, isqrt_traced, sqrt_scaled, SqrtTrace};
