//! Decimal fixed-point values with a tracked, guaranteed error bound.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{pow10, ExactInt, ExactRatio, RoundingMode};

/// `mantissa / 10^scale`, within `error_ulps / 10^scale` of the value it stands for.
///
/// The bound is kept as a whole number of units in the last place so that
/// long sums stay cheap; every operation rounds the bound upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledValue {
    mantissa: ExactInt,
    scale: u32,
    error_ulps: ExactInt,
}

impl ScaledValue {
    pub fn new(mantissa: ExactInt, scale: u32, error_ulps: ExactInt) -> Result<Self> {
        if error_ulps.is_negative() {
            return Err(Error::domain("negative error bound"));
        }
        Ok(ScaledValue {
            mantissa,
            scale,
            error_ulps,
        })
    }

    pub fn exact(value: &ExactInt, scale: u32) -> Self {
        ScaledValue {
            mantissa: value * pow10(scale),
            scale,
            error_ulps: BigInt::zero(),
        }
    }

    pub fn zero(scale: u32) -> Self {
        Self::exact(&BigInt::zero(), scale)
    }

    /// `floor(numer * 10^scale / denom)`, off by less than one ulp.
    pub fn from_quotient(numer: &ExactInt, denom: &ExactInt, scale: u32) -> Result<Self> {
        if !denom.is_positive() {
            return Err(Error::domain(format!(
                "divisor must be positive, got {denom}"
            )));
        }
        let (q, r) = (numer * pow10(scale)).div_mod_floor(denom);
        Ok(ScaledValue {
            mantissa: q,
            scale,
            error_ulps: BigInt::from(u8::from(!r.is_zero())),
        })
    }

    pub fn mantissa(&self) -> &ExactInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn error_ulps(&self) -> &ExactInt {
        &self.error_ulps
    }

    pub fn error_bound(&self) -> ExactRatio {
        ExactRatio::new(self.error_ulps.clone(), pow10(self.scale))
            .expect("power of ten is non-zero")
    }

    /// The represented value (not the value it approximates).
    pub fn to_ratio(&self) -> ExactRatio {
        ExactRatio::new(self.mantissa.clone(), pow10(self.scale)).expect("power of ten is non-zero")
    }

    /// Lower and upper ends of the interval guaranteed to hold the true value.
    pub fn interval(&self) -> (ExactRatio, ExactRatio) {
        let unit = pow10(self.scale);
        let lo =
            ExactRatio::new(&self.mantissa - &self.error_ulps, unit.clone()).expect("non-zero");
        let hi = ExactRatio::new(&self.mantissa + &self.error_ulps, unit).expect("non-zero");
        (lo, hi)
    }

    fn same_scale(&self, other: &ScaledValue) -> Result<()> {
        if self.scale == other.scale {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "scale mismatch: {} vs {}",
                self.scale, other.scale
            )))
        }
    }

    pub fn checked_add(&self, other: &ScaledValue) -> Result<ScaledValue> {
        self.same_scale(other)?;
        Ok(ScaledValue {
            mantissa: &self.mantissa + &other.mantissa,
            scale: self.scale,
            error_ulps: &self.error_ulps + &other.error_ulps,
        })
    }

    pub fn checked_sub(&self, other: &ScaledValue) -> Result<ScaledValue> {
        self.same_scale(other)?;
        Ok(ScaledValue {
            mantissa: &self.mantissa - &other.mantissa,
            scale: self.scale,
            error_ulps: &self.error_ulps + &other.error_ulps,
        })
    }

    pub fn neg(&self) -> ScaledValue {
        ScaledValue {
            mantissa: -&self.mantissa,
            scale: self.scale,
            error_ulps: self.error_ulps.clone(),
        }
    }

    /// Divides by a positive integer, truncating the mantissa.
    pub fn div_int(&self, d: &ExactInt) -> Result<ScaledValue> {
        if !d.is_positive() {
            return Err(Error::domain(format!("divisor must be positive, got {d}")));
        }
        let (q, r) = self.mantissa.div_mod_floor(d);
        let carried = Integer::div_ceil(&self.error_ulps, d);
        Ok(ScaledValue {
            mantissa: q,
            scale: self.scale,
            error_ulps: carried + BigInt::from(u8::from(!r.is_zero())),
        })
    }

    /// Rounds the approximated value, failing when the error interval
    /// contains a rounding boundary.
    pub fn round(&self, mode: RoundingMode) -> Result<ExactInt> {
        let (lo, hi) = self.interval();
        let (a, b) = (lo.round(mode), hi.round(mode));
        if a == b {
            Ok(a)
        } else {
            Err(Error::RoundingUndecidable {
                error_bound: self.error_bound().to_string(),
            })
        }
    }
}

impl fmt::Display for ScaledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (±{} ulp)",
            crate::exact::decimal_string(&self.to_ratio(), self.scale),
            self.error_ulps
        )
    }
}
