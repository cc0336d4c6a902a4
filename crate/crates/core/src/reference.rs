//! Ground-truth circumferences computed from a stored 20-place value of π.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{decimal_string, pow10, ExactInt, ExactRatio, RoundingMode};

/// Reference value of π, truncated to 20 decimal places.
pub const PI_DIGITS: &str = "3.14159265358979323846";

pub const PI_PLACES: u32 = 20;

/// Largest diameter whose circumference the stored digits pin down.
pub fn max_diameter() -> ExactInt {
    pow10(18)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PiReference;

impl PiReference {
    pub fn digits(&self) -> &'static str {
        PI_DIGITS
    }

    /// `p / 10^places`, the reference truncated to `places` decimals.
    pub fn as_ratio(&self, places: u32) -> Result<ExactRatio> {
        if places > PI_PLACES {
            return Err(Error::domain(format!(
                "reference holds only {PI_PLACES} decimal places"
            )));
        }
        let digits: String = PI_DIGITS
            .chars()
            .filter(|c| *c != '.')
            .take(1 + places as usize)
            .collect();
        ExactRatio::new(digits.parse().expect("ascii digits"), pow10(places))
    }
}

/// `π·D` rounded under `mode`.
///
/// The stored digits understate π by less than `10^-20`, so the true value
/// lies in `[π₂₀·D, π₂₀·D + D·10^-20)`; both ends must round alike.
pub fn true_circumference(diameter: &ExactInt, mode: RoundingMode) -> Result<ExactInt> {
    if !diameter.is_positive() {
        return Err(Error::domain(format!(
            "diameter must be positive, got {diameter}"
        )));
    }
    if *diameter > max_diameter() {
        return Err(Error::InsufficientPrecision {
            diameter: diameter.clone(),
        });
    }
    let pi = PiReference.as_ratio(PI_PLACES)?;
    let low = &pi * &ExactRatio::from_int(diameter.clone());
    let slack = ExactRatio::new(diameter.clone(), pow10(PI_PLACES))?;
    let high = &low + &slack;
    let value = low.round(mode);
    if value != high.round(mode) {
        return Err(Error::InsufficientPrecision {
            diameter: diameter.clone(),
        });
    }
    Ok(value)
}

/// Decimal places to which `candidate / diameter` reproduces π.
///
/// Counts the leading fractional digits shared with the reference. A
/// terminating expansion whose last digit is the correctly rounded
/// reference digit also counts as agreeing through that digit, so
/// `3.14159265358979324` matches to 17 places. The integer part must be 3,
/// otherwise the count is 0. Capped at 20.
pub fn matching_decimal_places(candidate: &ExactInt, diameter: &ExactInt) -> Result<u32> {
    if !diameter.is_positive() {
        return Err(Error::domain(format!(
            "diameter must be positive, got {diameter}"
        )));
    }
    if candidate.is_negative() {
        return Err(Error::domain(
            "candidate circumference must be non-negative",
        ));
    }
    let value = ExactRatio::new(candidate.clone(), diameter.clone())?;
    let rendered = decimal_string(&value, PI_PLACES);
    let (int_part, frac) = rendered.split_once('.').expect("places > 0");
    let (ref_int, ref_frac) = PI_DIGITS.split_once('.').expect("constant has a point");
    if int_part != ref_int {
        return Ok(0);
    }
    let shared = frac
        .bytes()
        .zip(ref_frac.bytes())
        .take_while(|(a, b)| a == b)
        .count() as u32;

    let rounded_match = terminating_places(&value)
        .filter(|&places| places <= PI_PLACES)
        .filter(|&places| {
            let pi = PiReference.as_ratio(PI_PLACES).expect("within range");
            let scaled = &pi * &ExactRatio::from_int(pow10(places));
            let rounded = ExactRatio::new(scaled.round(RoundingMode::NearestHalfUp), pow10(places))
                .expect("non-zero");
            rounded == value
        })
        .unwrap_or(0);
    Ok(shared.max(rounded_match).min(PI_PLACES))
}

/// Number of decimals in the expansion of `r` when it terminates.
fn terminating_places(r: &ExactRatio) -> Option<u32> {
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2u8), BigInt::from(5u8));
    let (mut twos, mut fives) = (0u32, 0u32);
    while d.is_even() && !d.is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    d.is_one().then_some(twos.max(fives))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(s: &str) -> ExactInt {
        s.parse().unwrap()
    }

    #[test]
    fn reference_constant() {
        assert_eq!(PiReference.digits().len(), 22);
        assert_eq!(
            PiReference.as_ratio(20).unwrap(),
            ExactRatio::new(int("314159265358979323846"), pow10(20)).unwrap()
        );
        assert_eq!(
            PiReference.as_ratio(2).unwrap(),
            ExactRatio::new(int("314"), int("100")).unwrap()
        );
        assert!(PiReference.as_ratio(21).is_err());
    }

    #[test]
    fn circumference_of_madhava_circle() {
        let d = int("900000000000");
        assert_eq!(
            true_circumference(&d, RoundingMode::NearestHalfUp).unwrap(),
            int("2827433388231")
        );
        assert_eq!(
            true_circumference(&d, RoundingMode::Floor).unwrap(),
            int("2827433388230")
        );
    }

    #[test]
    fn circumference_of_parardha_circle() {
        assert_eq!(
            true_circumference(&pow10(17), RoundingMode::NearestHalfUp).unwrap(),
            int("314159265358979324")
        );
        assert!(matches!(
            true_circumference(&(pow10(18) + 1u8), RoundingMode::Floor),
            Err(Error::InsufficientPrecision { .. })
        ));
        assert!(true_circumference(&pow10(18), RoundingMode::Floor).is_ok());
    }

    #[test]
    fn matching_places() {
        let d = int("900000000000");
        assert_eq!(
            matching_decimal_places(&int("2827433388233"), &d).unwrap(),
            10
        );
        assert_eq!(matching_decimal_places(&int("3"), &int("1")).unwrap(), 0);
        assert_eq!(matching_decimal_places(&int("4"), &int("1")).unwrap(), 0);
        assert_eq!(
            matching_decimal_places(&int("314159265358979324"), &pow10(17)).unwrap(),
            17
        );
        assert_eq!(
            matching_decimal_places(&int("314159265358979323846"), &pow10(20)).unwrap(),
            20
        );
        assert!(matching_decimal_places(&int("-1"), &d).is_err());
    }

    #[test]
    fn terminating_expansions() {
        let r = |n: i64, d: i64| ExactRatio::new(n.into(), d.into()).unwrap();
        assert_eq!(terminating_places(&r(1, 8)), Some(3));
        assert_eq!(terminating_places(&r(3, 1)), Some(0));
        assert_eq!(terminating_places(&r(1, 3)), None);
    }
}
