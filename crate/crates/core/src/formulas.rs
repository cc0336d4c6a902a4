//! The four circumference formulas F1–F4 and the F2 correction terms.
//!
//! Every alternating term is a single division whose numerator is formed
//! exactly first (`4D`, `16D`, `4D·(n²+1)`, ...), rounded once under the
//! policy, and then added to a signed running total.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::policy::{Policy, TermValue};
use crate::series::{seed_term, varman_circumference};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Correction {
    /// `1/(4n)`
    C1,
    /// `n/(4n²+1)`
    C2,
    /// `(n²+1)/(n(4n²+5))`
    C3,
}

impl Correction {
    /// Numerator and denominator of F(n).
    pub fn ratio(self, n: u64) -> (ExactInt, ExactInt) {
        let n = BigInt::from(n);
        let n2 = &n * &n;
        match self {
            Correction::C1 => (BigInt::from(1u8), n * 4u8),
            Correction::C2 => (n.clone(), n2 * 4u8 + 1u8),
            Correction::C3 => (&n2 + 1u8, n * (n2 * 4u8 + 5u8)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Correction::C1 => "c1",
            Correction::C2 => "c2",
            Correction::C3 => "c3",
        }
    }
}

impl FromStr for Correction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c1" => Ok(Correction::C1),
            "c2" => Ok(Correction::C2),
            "c3" => Ok(Correction::C3),
            other => Err(Error::domain(format!("unknown correction `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    /// The √(12·D²) series with successive division by 3.
    F1,
    /// `4D/1 − 4D/3 + ⋯ + (−1)^(n−1)·4D/(2n−1) + (−1)^n·4D·F(n)`
    F2(Correction),
    /// `3D + 4D/(3³−3) − 4D/(5³−5) + ⋯`
    F3,
    /// `16D/(1⁵+4·1) − 16D/(3⁵+4·3) + ⋯`
    F4,
}

impl Formula {
    pub fn name(&self) -> &'static str {
        match self {
            Formula::F1 => "f1",
            Formula::F2(_) => "f2",
            Formula::F3 => "f3",
            Formula::F4 => "f4",
        }
    }

    pub fn correction(&self) -> Option<Correction> {
        match self {
            Formula::F2(c) => Some(*c),
            _ => None,
        }
    }

    /// Numerator and denominator of the k-th alternating term (F2–F4).
    fn term_ratio(&self, diameter: &ExactInt, k: u64) -> (ExactInt, ExactInt) {
        let big_k = BigInt::from(k);
        match self {
            Formula::F1 => unreachable!("F1 terms come from the ledger recurrence"),
            Formula::F2(_) => (diameter * 4u8, big_k * 2u8 - 1u8),
            Formula::F3 => {
                let m: ExactInt = big_k * 2u8 + 1u8;
                (diameter * 4u8, &m * &m * &m - &m)
            }
            Formula::F4 => {
                let m: ExactInt = big_k * 2u8 - 1u8;
                let m2 = &m * &m;
                (diameter * 16u8, &m2 * &m2 * &m + &m * 4u8)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::F2(c) => write!(f, "f2({})", c.name()),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputationResult {
    pub formula: Formula,
    pub diameter: ExactInt,
    pub n: u64,
    pub policy: Policy,
    pub circumference: ExactInt,
}

/// `4D·F(n)` as one division under `policy`.
pub fn correction_value(
    correction: Correction,
    n: u64,
    diameter: &ExactInt,
    policy: &Policy,
) -> Result<TermValue> {
    if n == 0 {
        return Err(Error::domain("correction index must be at least 1"));
    }
    let (p, q) = correction.ratio(n);
    policy.quotient(&(diameter * 4u8 * p), &q)
}

fn validate(diameter: &ExactInt, n: u64) -> Result<()> {
    if !diameter.is_positive() {
        return Err(Error::domain(format!(
            "diameter must be positive, got {diameter}"
        )));
    }
    if n == 0 {
        return Err(Error::domain("number of terms must be at least 1"));
    }
    Ok(())
}

pub fn circumference(
    formula: Formula,
    diameter: &ExactInt,
    n: u64,
    policy: Policy,
) -> Result<ComputationResult> {
    validate(diameter, n)?;
    let value = match formula {
        Formula::F1 => varman_circumference(diameter, policy, Some(n))?,
        _ => {
            let mut sum = Summation::new(formula, diameter, policy)?;
            sum.advance_to(n)?;
            sum.circumference()?
        }
    };
    Ok(ComputationResult {
        formula,
        diameter: diameter.clone(),
        n,
        policy,
        circumference: value,
    })
}

/// One result per term count in `n_from..=n_to`, sharing the running sum.
pub fn scan_range(
    formula: Formula,
    diameter: &ExactInt,
    policy: Policy,
    n_from: u64,
    n_to: u64,
) -> Result<Vec<ComputationResult>> {
    validate(diameter, n_from)?;
    if n_from > n_to {
        return Err(Error::domain(format!("empty range {n_from}..={n_to}")));
    }
    let mut sum = Summation::new(formula, diameter, policy)?;
    sum.advance_to(n_from)?;
    let mut out = Vec::with_capacity((n_to - n_from + 1) as usize);
    loop {
        out.push(ComputationResult {
            formula,
            diameter: diameter.clone(),
            n: sum.terms(),
            policy,
            circumference: sum.circumference()?,
        });
        if sum.terms() == n_to {
            break;
        }
        sum.advance()?;
    }
    Ok(out)
}

/// Incremental evaluation of a formula, one alternating term at a time.
#[derive(Debug, Clone)]
pub struct Summation {
    formula: Formula,
    diameter: ExactInt,
    policy: Policy,
    terms: u64,
    running: TermValue,
    /// F1 only: the current x_k of the divide-by-3 recurrence.
    chain: Option<TermValue>,
}

impl Summation {
    pub fn new(formula: Formula, diameter: &ExactInt, policy: Policy) -> Result<Self> {
        validate(diameter, 1)?;
        let running = match formula {
            Formula::F3 => policy.from_int(&(diameter * 3u8)),
            _ => policy.zero(),
        };
        Ok(Summation {
            formula,
            diameter: diameter.clone(),
            policy,
            terms: 0,
            running,
            chain: None,
        })
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    pub fn policy(&self) -> &Policy {
        &self.policy
    }

    /// The signed sum of the first `terms()` alternating terms, without
    /// any correction term.
    pub fn partial_sum(&self) -> &TermValue {
        &self.running
    }

    /// Adds the next alternating term.
    pub fn advance(&mut self) -> Result<()> {
        let k = self.terms + 1;
        let term = match self.formula {
            Formula::F1 => {
                let x = match self.chain.take() {
                    None => seed_term(&self.diameter, &self.policy)?,
                    Some(prev) => self.policy.divide(&prev, &BigInt::from(3u8))?,
                };
                let t = self.policy.divide(&x, &BigInt::from(2 * k - 1))?;
                self.chain = Some(x);
                t
            }
            _ => {
                let (num, den) = self.formula.term_ratio(&self.diameter, k);
                self.policy.quotient(&num, &den)?
            }
        };
        self.running = self.running.add_signed(&term, k % 2 == 1);
        self.terms = k;
        Ok(())
    }

    pub fn advance_to(&mut self, n: u64) -> Result<()> {
        while self.terms < n {
            self.advance()?;
        }
        Ok(())
    }

    /// The formula's value after `terms()` terms, correction included.
    pub fn value(&self) -> Result<TermValue> {
        match self.formula {
            Formula::F2(c) => {
                let corr = correction_value(c, self.terms, &self.diameter, &self.policy)?;
                Ok(self.running.add_signed(&corr, self.terms.is_multiple_of(2)))
            }
            _ => Ok(self.running.clone()),
        }
    }

    pub fn circumference(&self) -> Result<ExactInt> {
        self.policy.finish(&self.value()?)
    }
}
