//! Rounding policies and the values they produce.

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::{div_round, ExactInt, ExactRatio, RoundingMode};
use crate::scaled::ScaledValue;

/// Fractional digits used by the default exact backend.
pub const DEFAULT_FRAC_DIGITS: u32 = 40;

/// How exact terms are carried when rounding happens only at the end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    Scaled { frac_digits: u32 },
}

impl Default for Backend {
    fn default() -> Self {
        Backend::Scaled {
            frac_digits: DEFAULT_FRAC_DIGITS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Drop the fractional part after every operation.
    FloorEachOp,
    /// Round half-up after every operation.
    NearestEachOp,
    /// Carry fractions through and round the final sum once.
    ExactFinal {
        mode: RoundingMode,
        backend: Backend,
    },
}

impl Policy {
    pub fn final_floor() -> Self {
        Policy::ExactFinal {
            mode: RoundingMode::Floor,
            backend: Backend::default(),
        }
    }

    pub fn final_nearest() -> Self {
        Policy::ExactFinal {
            mode: RoundingMode::NearestHalfUp,
            backend: Backend::default(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Policy::ExactFinal { .. })
    }

    /// Short name used in renderings: `floor`, `nearest`, `final-floor`, `final-nearest`.
    pub fn name(&self) -> &'static str {
        match self {
            Policy::FloorEachOp => "floor",
            Policy::NearestEachOp => "nearest",
            Policy::ExactFinal {
                mode: RoundingMode::Floor,
                ..
            } => "final-floor",
            Policy::ExactFinal {
                mode: RoundingMode::NearestHalfUp,
                ..
            } => "final-nearest",
        }
    }

    pub fn zero(&self) -> TermValue {
        self.from_int(&BigInt::from(0u8))
    }

    pub fn from_int(&self, v: &ExactInt) -> TermValue {
        match self {
            Policy::FloorEachOp | Policy::NearestEachOp => TermValue::Int(v.clone()),
            Policy::ExactFinal {
                backend: Backend::Rational,
                ..
            } => TermValue::Ratio(ExactRatio::from_int(v.clone())),
            Policy::ExactFinal {
                backend: Backend::Scaled { frac_digits },
                ..
            } => TermValue::Scaled(ScaledValue::exact(v, *frac_digits)),
        }
    }

    /// A single division `numer / denom` carried out under this policy.
    pub fn quotient(&self, numer: &ExactInt, denom: &ExactInt) -> Result<TermValue> {
        Ok(match self {
            Policy::FloorEachOp => TermValue::Int(div_round(numer, denom, RoundingMode::Floor)?),
            Policy::NearestEachOp => {
                TermValue::Int(div_round(numer, denom, RoundingMode::NearestHalfUp)?)
            }
            Policy::ExactFinal {
                backend: Backend::Rational,
                ..
            } => {
                crate::exact::require_positive(denom)?;
                TermValue::Ratio(ExactRatio::new(numer.clone(), denom.clone())?)
            }
            Policy::ExactFinal {
                backend: Backend::Scaled { frac_digits },
                ..
            } => TermValue::Scaled(ScaledValue::from_quotient(numer, denom, *frac_digits)?),
        })
    }

    /// Divides an already-computed value by a positive integer.
    pub fn divide(&self, value: &TermValue, d: &ExactInt) -> Result<TermValue> {
        Ok(match (self, value) {
            (Policy::FloorEachOp, TermValue::Int(v)) => {
                TermValue::Int(div_round(v, d, RoundingMode::Floor)?)
            }
            (Policy::NearestEachOp, TermValue::Int(v)) => {
                TermValue::Int(div_round(v, d, RoundingMode::NearestHalfUp)?)
            }
            (Policy::ExactFinal { .. }, TermValue::Ratio(r)) => TermValue::Ratio(r.div_int(d)?),
            (Policy::ExactFinal { .. }, TermValue::Scaled(s)) => TermValue::Scaled(s.div_int(d)?),
            (p, v) => panic!("value {v} does not belong to policy {}", p.name()),
        })
    }

    /// Converts a finished sum to an integer. Integer policies are already
    /// rounded; exact policies round once here.
    pub fn finish(&self, value: &TermValue) -> Result<ExactInt> {
        match (self, value) {
            (_, TermValue::Int(v)) => Ok(v.clone()),
            (Policy::ExactFinal { mode, .. }, TermValue::Ratio(r)) => Ok(r.round(*mode)),
            (Policy::ExactFinal { mode, .. }, TermValue::Scaled(s)) => s.round(*mode),
            (p, v) => panic!("value {v} does not belong to policy {}", p.name()),
        }
    }

    pub fn mode(&self) -> RoundingMode {
        match self {
            Policy::FloorEachOp => RoundingMode::Floor,
            Policy::NearestEachOp => RoundingMode::NearestHalfUp,
            Policy::ExactFinal { mode, .. } => *mode,
        }
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A term or partial sum, in the representation its policy calls for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermValue {
    Int(ExactInt),
    Ratio(ExactRatio),
    Scaled(ScaledValue),
}

impl TermValue {
    pub fn add(&self, other: &TermValue) -> TermValue {
        match (self, other) {
            (TermValue::Int(a), TermValue::Int(b)) => TermValue::Int(a + b),
            (TermValue::Ratio(a), TermValue::Ratio(b)) => TermValue::Ratio(a + b),
            (TermValue::Scaled(a), TermValue::Scaled(b)) => {
                TermValue::Scaled(a.checked_add(b).expect("one policy uses one scale"))
            }
            _ => panic!("mixed term representations"),
        }
    }

    pub fn sub(&self, other: &TermValue) -> TermValue {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TermValue {
        match self {
            TermValue::Int(a) => TermValue::Int(-a),
            TermValue::Ratio(a) => TermValue::Ratio(-a),
            TermValue::Scaled(a) => TermValue::Scaled(a.neg()),
        }
    }

    /// Adds `other` when `positive`, subtracts it otherwise.
    pub fn add_signed(&self, other: &TermValue, positive: bool) -> TermValue {
        if positive {
            self.add(other)
        } else {
            self.sub(other)
        }
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        match self {
            TermValue::Int(a) => a.is_zero(),
            TermValue::Ratio(a) => a.is_zero(),
            TermValue::Scaled(a) => a.mantissa().is_zero() && a.error_ulps().is_zero(),
        }
    }

    /// Interval known to contain the value this term stands for.
    pub fn bounds(&self) -> (ExactRatio, ExactRatio) {
        match self {
            TermValue::Int(a) => {
                let r = ExactRatio::from_int(a.clone());
                (r.clone(), r)
            }
            TermValue::Ratio(a) => (a.clone(), a.clone()),
            TermValue::Scaled(a) => a.interval(),
        }
    }

    pub fn as_int(&self) -> Option<&ExactInt> {
        match self {
            TermValue::Int(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_ratio(&self) -> Option<&ExactRatio> {
        match self {
            TermValue::Ratio(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for TermValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermValue::Int(a) => write!(f, "{a}"),
            TermValue::Ratio(a) => write!(f, "{a}"),
            TermValue::Scaled(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        BigInt::from(v)
    }

    #[test]
    fn quotient_per_policy() {
        let (n, d) = (int(7), int(2));
        assert_eq!(
            Policy::FloorEachOp.quotient(&n, &d).unwrap(),
            TermValue::Int(int(3))
        );
        assert_eq!(
            Policy::NearestEachOp.quotient(&n, &d).unwrap(),
            TermValue::Int(int(4))
        );
        let rational = Policy::ExactFinal {
            mode: RoundingMode::Floor,
            backend: Backend::Rational,
        };
        assert_eq!(
            rational.quotient(&n, &d).unwrap(),
            TermValue::Ratio(ExactRatio::new(int(7), int(2)).unwrap())
        );
        let v = Policy::final_nearest().quotient(&n, &d).unwrap();
        assert_eq!(Policy::final_nearest().finish(&v).unwrap(), int(4));
        assert_eq!(Policy::final_floor().finish(&v).unwrap(), int(3));
    }

    #[test]
    fn names() {
        assert_eq!(Policy::final_floor().name(), "final-floor");
        assert_eq!(Policy::NearestEachOp.to_string(), "nearest");
    }
}
