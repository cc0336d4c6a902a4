//! Where a formula's value stops changing.
//!
//! Three detectors are available:
//!
//! * **Analytic vanish onset** (F3, F4 under the integer policies): once a
//!   rounded term is zero every later term is too, since the denominators
//!   grow monotonically. The onset is found by exact integer comparison.
//! * **Tail bound** (F1, F3, F4 under exact-final policies): the terms
//!   alternate and shrink, so every later partial sum lies between two
//!   consecutive ones. When both ends of that bracket, widened by the
//!   backend error, round to the same integer, the value is settled.
//! * **Windowed scan** (everything else): the value must repeat for
//!   `window` consecutive additional terms.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{ExactInt, ExactRatio};
use crate::formulas::{circumference, Formula, Summation};
use crate::policy::Policy;

pub const DEFAULT_WINDOW: u64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectionMethod {
    AnalyticVanish,
    TailBound,
    WindowedScan { window: u64 },
}

impl DetectionMethod {
    pub fn name(&self) -> String {
        match self {
            DetectionMethod::AnalyticVanish => "analytic-vanish".to_string(),
            DetectionMethod::TailBound => "tail-bound".to_string(),
            DetectionMethod::WindowedScan { window } => format!("windowed-scan({window})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub formula: Formula,
    pub diameter: ExactInt,
    pub policy: Policy,
    pub fixed_value: ExactInt,
    pub onset: u64,
    pub method: DetectionMethod,
    pub max_terms_examined: u64,
}

/// Smallest n whose rounded F3/F4 term is zero.
pub fn vanish_onset(formula: Formula, diameter: &ExactInt, policy: Policy) -> Result<u64> {
    let (numer, odd_base): (ExactInt, fn(u64) -> u64) = match formula {
        Formula::F3 => (diameter * 4u8, |n| 2 * n + 1),
        Formula::F4 => (diameter * 16u8, |n| 2 * n - 1),
        other => {
            return Err(Error::UnsupportedFormula {
                operation: "vanish_onset",
                formula: other.to_string(),
            })
        }
    };
    // Floor: zero once numer < den. Half-up: zero once 2·numer < den.
    let threshold = match policy {
        Policy::FloorEachOp => numer,
        Policy::NearestEachOp => numer * 2u8,
        Policy::ExactFinal { .. } => {
            return Err(Error::domain(
                "vanish onset needs a per-operation rounding policy",
            ))
        }
    };
    let denom = |n: u64| -> ExactInt {
        let m = BigInt::from(odd_base(n));
        match formula {
            Formula::F3 => &m * &m * &m - &m,
            _ => {
                let m2 = &m * &m;
                &m2 * &m2 * &m + &m * 4u8
            }
        }
    };
    let vanished = |n: u64| denom(n) > threshold;

    let mut hi = 1u64;
    while !vanished(hi) {
        hi *= 2;
    }
    let mut lo = hi / 2;
    // invariant: !vanished(lo) or lo == 0, vanished(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if vanished(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub fn fixed_point(
    formula: Formula,
    diameter: &ExactInt,
    policy: Policy,
    window: u64,
    max_terms: u64,
) -> Result<ConvergenceReport> {
    if window == 0 {
        return Err(Error::domain("window must be at least 1"));
    }
    if max_terms == 0 {
        return Err(Error::domain("max_terms must be at least 1"));
    }
    let report = |fixed_value, onset, method, examined| ConvergenceReport {
        formula,
        diameter: diameter.clone(),
        policy,
        fixed_value,
        onset,
        method,
        max_terms_examined: examined,
    };

    match (formula, policy) {
        (Formula::F3 | Formula::F4, Policy::FloorEachOp | Policy::NearestEachOp) => {
            let onset = vanish_onset(formula, diameter, policy)?;
            if onset > max_terms {
                return Err(Error::NoConvergence { max_terms });
            }
            let value = circumference(formula, diameter, onset, policy)?.circumference;
            Ok(report(value, onset, DetectionMethod::AnalyticVanish, onset))
        }
        (Formula::F1 | Formula::F3 | Formula::F4, Policy::ExactFinal { mode, .. }) => {
            let mut sum = Summation::new(formula, diameter, policy)?;
            let mut prev: Option<(ExactRatio, ExactRatio)> = None;
            let mut run: Option<(ExactInt, u64)> = None;
            while sum.terms() < max_terms {
                sum.advance()?;
                let n = sum.terms();
                let (lo, hi) = sum.partial_sum().bounds();
                let rounded = lo.round(mode);
                let decided = rounded == hi.round(mode);
                run = match run {
                    Some((v, start)) if decided && v == rounded => Some((v, start)),
                    _ if decided => Some((rounded.clone(), n)),
                    _ => None,
                };
                if let (Some((plo, phi)), Some((v, start))) = (&prev, &run) {
                    let lower = plo.min(&lo);
                    let upper = phi.max(&hi);
                    if lower.round(mode) == *v && upper.round(mode) == *v {
                        return Ok(report(v.clone(), *start, DetectionMethod::TailBound, n));
                    }
                }
                prev = Some((lo, hi));
            }
            Err(Error::NoConvergence { max_terms })
        }
        _ => {
            let mut sum = Summation::new(formula, diameter, policy)?;
            let mut run: Option<(ExactInt, u64)> = None;
            while sum.terms() < max_terms {
                sum.advance()?;
                let n = sum.terms();
                let v = sum.circumference()?;
                let start = match run {
                    Some((ref prev, start)) if *prev == v => start,
                    _ => n,
                };
                if n - start >= window {
                    return Ok(report(
                        v,
                        start,
                        DetectionMethod::WindowedScan { window },
                        n,
                    ));
                }
                run = Some((v, start));
            }
            Err(Error::NoConvergence { max_terms })
        }
    }
}
