//! Exact integer and rational arithmetic.
//!
//! Everything here is total over the signed integers: floor division and
//! half-up rounding keep their mathematical meaning for negative operands.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Unbounded signed integer used for every quantity in the crate.
pub type ExactInt = BigInt;

/// The two integer rounding rules used by the historical computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoundingMode {
    /// Greatest integer not exceeding the value.
    Floor,
    /// `floor(x + 1/2)`; ties go towards +infinity.
    NearestHalfUp,
}

impl RoundingMode {
    pub fn name(self) -> &'static str {
        match self {
            RoundingMode::Floor => "floor",
            RoundingMode::NearestHalfUp => "nearest",
        }
    }
}

pub fn pow10(exp: u32) -> ExactInt {
    num_traits::pow(BigInt::from(10u8), exp as usize)
}

pub(crate) fn require_positive(d: &ExactInt) -> Result<()> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(Error::domain(format!("divisor must be positive, got {d}")))
    }
}

/// Floor division: the `q` with `q*d <= n < (q+1)*d`.
pub fn floor_div(n: &ExactInt, d: &ExactInt) -> Result<ExactInt> {
    require_positive(d)?;
    Ok(n.div_floor(d))
}

/// Half-up rounded quotient, `floor((2n + d) / 2d)`.
pub fn nearest_div(n: &ExactInt, d: &ExactInt) -> Result<ExactInt> {
    require_positive(d)?;
    let two_d: ExactInt = d << 1u8;
    Ok(((n << 1u8) + d).div_floor(&two_d))
}

pub fn div_round(n: &ExactInt, d: &ExactInt, mode: RoundingMode) -> Result<ExactInt> {
    match mode {
        RoundingMode::Floor => floor_div(n, d),
        RoundingMode::NearestHalfUp => nearest_div(n, d),
    }
}

/// Exact rational number kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    numer: ExactInt,
    denom: ExactInt,
}

impl ExactRatio {
    pub fn new(numer: ExactInt, denom: ExactInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::domain("ratio with zero denominator"));
        }
        Ok(Self::normalized(numer, denom))
    }

    fn normalized(mut numer: ExactInt, mut denom: ExactInt) -> Self {
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        let g = numer.gcd(&denom);
        if !g.is_one() && !g.is_zero() {
            numer /= &g;
            denom /= &g;
        }
        ExactRatio { numer, denom }
    }

    pub fn from_int(value: ExactInt) -> Self {
        ExactRatio {
            numer: value,
            denom: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(BigInt::zero())
    }

    /// `1/2`, the offset used by half-up rounding.
    pub fn half() -> Self {
        ExactRatio {
            numer: BigInt::one(),
            denom: BigInt::from(2u8),
        }
    }

    pub fn numer(&self) -> &ExactInt {
        &self.numer
    }

    pub fn denom(&self) -> &ExactInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    pub fn abs(&self) -> Self {
        ExactRatio {
            numer: self.numer.abs(),
            denom: self.denom.clone(),
        }
    }

    pub fn checked_div(&self, rhs: &ExactRatio) -> Result<ExactRatio> {
        if rhs.is_zero() {
            return Err(Error::domain("division by zero ratio"));
        }
        Ok(Self::normalized(
            &self.numer * &rhs.denom,
            &self.denom * &rhs.numer,
        ))
    }

    /// Divides by a positive integer.
    pub fn div_int(&self, d: &ExactInt) -> Result<ExactRatio> {
        require_positive(d)?;
        Ok(Self::normalized(self.numer.clone(), &self.denom * d))
    }

    pub fn floor(&self) -> ExactInt {
        self.numer.div_floor(&self.denom)
    }

    pub fn round(&self, mode: RoundingMode) -> ExactInt {
        match mode {
            RoundingMode::Floor => self.floor(),
            RoundingMode::NearestHalfUp => {
                (&(&self.numer << 1u8) + &self.denom).div_floor(&(&self.denom << 1u8))
            }
        }
    }
}

impl Default for ExactRatio {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<ExactInt> for ExactRatio {
    fn from(value: ExactInt) -> Self {
        Self::from_int(value)
    }
}

impl From<i64> for ExactRatio {
    fn from(value: i64) -> Self {
        Self::from_int(BigInt::from(value))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExactRatio {
    type Output = ExactRatio;
    fn add(self, rhs: &ExactRatio) -> ExactRatio {
        if self.denom == rhs.denom {
            return ExactRatio::normalized(&self.numer + &rhs.numer, self.denom.clone());
        }
        ExactRatio::normalized(
            &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            &self.denom * &rhs.denom,
        )
    }
}

impl Sub for &ExactRatio {
    type Output = ExactRatio;
    fn sub(self, rhs: &ExactRatio) -> ExactRatio {
        self + &(-rhs)
    }
}

impl Mul for &ExactRatio {
    type Output = ExactRatio;
    fn mul(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio::normalized(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl Neg for &ExactRatio {
    type Output = ExactRatio;
    fn neg(self) -> ExactRatio {
        ExactRatio {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExactRatio {
            type Output = ExactRatio;
            fn $m(self, rhs: ExactRatio) -> ExactRatio {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ExactRatio {
    type Output = ExactRatio;
    fn neg(self) -> ExactRatio {
        -&self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratio_combine(a: &ExactRatio, b: &ExactRatio, op: RatioOp) -> Result<ExactRatio> {
    Ok(match op {
        RatioOp::Add => a + b,
        RatioOp::Sub => a - b,
        RatioOp::Mul => a * b,
        RatioOp::Div => a.checked_div(b)?,
    })
}

pub fn ratio_round(r: &ExactRatio, mode: RoundingMode) -> ExactInt {
    r.round(mode)
}

/// Truncated decimal expansion with exactly `places` fractional digits.
///
/// Truncation is toward zero; a negative value gets a leading `-` unless
/// every rendered digit is zero.
pub fn decimal_string(r: &ExactRatio, places: u32) -> String {
    let magnitude = r.numer.abs();
    let (int_part, rem) = magnitude.div_rem(&r.denom);
    let frac = (rem * pow10(places)) / &r.denom;
    let mut out = String::new();
    if r.numer.sign() == Sign::Minus && !(int_part.is_zero() && frac.is_zero()) {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        let digits = frac.to_string();
        out.push('.');
        for _ in digits.len()..places as usize {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(s: &str) -> ExactInt {
        s.parse().unwrap()
    }

    fn ratio(n: i64, d: i64) -> ExactRatio {
        ExactRatio::new(n.into(), d.into()).unwrap()
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(
            floor_div(&int("115470053837925152"), &int("3")).unwrap(),
            int("38490017945975050")
        );
        assert_eq!(floor_div(&int("0"), &int("7")).unwrap(), int("0"));
        assert_eq!(floor_div(&int("-7"), &int("2")).unwrap(), int("-4"));
    }

    #[test]
    fn division_rejects_non_positive_divisor() {
        assert!(matches!(
            floor_div(&int("5"), &int("0")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            nearest_div(&int("5"), &int("-3")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn nearest_div_examples() {
        assert_eq!(nearest_div(&int("1"), &int("2")).unwrap(), int("1"));
        assert_eq!(nearest_div(&int("2"), &int("3")).unwrap(), int("1"));
        assert_eq!(
            nearest_div(&int("7698003589195011"), &int("3")).unwrap(),
            int("2566001196398337")
        );
        // ties go up for negatives as well: -1/2 -> 0
        assert_eq!(nearest_div(&int("-1"), &int("2")).unwrap(), int("0"));
    }

    #[test]
    fn ratio_normalization() {
        let r = ratio(4, 6);
        assert_eq!((r.numer().clone(), r.denom().clone()), (int("2"), int("3")));
        let r = ratio(3, -9);
        assert_eq!(
            (r.numer().clone(), r.denom().clone()),
            (int("-1"), int("3"))
        );
        assert!(ExactRatio::new(int("1"), int("0")).is_err());
    }

    #[test]
    fn ratio_combine_examples() {
        assert_eq!(
            ratio_combine(&ratio(1, 3), &ratio(1, 5), RatioOp::Add).unwrap(),
            ratio(8, 15)
        );
        assert_eq!(
            ratio_combine(&ratio(2, 3), &ratio(3, 4), RatioOp::Div).unwrap(),
            ratio(8, 9)
        );
        assert!(ratio_combine(&ratio(1, 3), &ExactRatio::zero(), RatioOp::Div).is_err());
    }

    #[test]
    fn ratio_round_examples() {
        assert_eq!(
            ratio_round(&ratio(7, 2), RoundingMode::NearestHalfUp),
            int("4")
        );
        assert_eq!(ratio_round(&ratio(-1, 2), RoundingMode::Floor), int("-1"));
        let big = &ExactRatio::from_int(int("314159265358979323")) + &ratio(27, 32);
        assert_eq!(
            ratio_round(&big, RoundingMode::NearestHalfUp),
            int("314159265358979324")
        );
        assert_eq!(
            ratio_round(&big, RoundingMode::Floor),
            int("314159265358979323")
        );
    }

    #[test]
    fn decimal_string_examples() {
        let d = int("900000000000");
        let r = ExactRatio::new(int("2827433388233"), d.clone()).unwrap();
        assert_eq!(decimal_string(&r, 15), "3.141592653592222");
        let r = ExactRatio::new(int("2827433388230"), d).unwrap();
        assert_eq!(decimal_string(&r, 15), "3.141592653588888");
        assert_eq!(decimal_string(&ratio(1, 1), 3), "1.000");
        assert_eq!(decimal_string(&ratio(1, 40), 1), "0.0");
        assert_eq!(decimal_string(&ratio(-7, 4), 2), "-1.75");
        assert_eq!(decimal_string(&ratio(5, 1), 0), "5");
        assert_eq!(decimal_string(&ratio(1, 3), 60).len(), 62);
    }
}
