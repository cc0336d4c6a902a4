//! Āryabhaṭa's digit-pair square root.
//!
//! The radicand is split into places counted from the units digit: odd
//! places (units, hundreds, ...) and even places (tens, thousands, ...).
//! After the greatest square is taken out of the leading group, each
//! even place is divided by twice the root found so far, and the square
//! of that quotient is taken out of the following odd place.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::scaled::ScaledValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaceKind {
    Odd,
    Even,
}

/// One line of the worksheet.
///
/// For the leading group and every even place a root digit is emitted;
/// `divisor_or_square` is then the square subtracted (leading group) or
/// twice the partial root (even place). For the remaining odd places it
/// is the square of the digit just emitted and `digit_emitted` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtStep {
    pub place_kind: PlaceKind,
    pub working_value: ExactInt,
    pub divisor_or_square: ExactInt,
    pub digit_emitted: Option<u8>,
    pub subtracted: ExactInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtTrace {
    pub input: ExactInt,
    pub steps: Vec<SqrtStep>,
    pub root: ExactInt,
    pub remainder: ExactInt,
}

impl SqrtTrace {
    /// Root digits in the order they were produced.
    pub fn digits(&self) -> String {
        self.steps
            .iter()
            .filter_map(|s| s.digit_emitted)
            .map(|d| char::from(b'0' + d))
            .collect()
    }
}

fn check_non_negative(n: &ExactInt) -> Result<()> {
    if n.is_negative() {
        Err(Error::domain(format!("square root of negative number {n}")))
    } else {
        Ok(())
    }
}

/// Leading group (one or two digits) followed by the remaining digit pairs.
fn digit_groups(n: &ExactInt) -> (u32, Vec<(u8, u8)>) {
    let digits: Vec<u8> = n.to_string().bytes().map(|b| b - b'0').collect();
    let lead_len = if digits.len().is_multiple_of(2) { 2 } else { 1 };
    let (lead, rest) = digits.split_at(lead_len);
    let lead_value = lead.iter().fold(0u32, |acc, &d| acc * 10 + u32::from(d));
    let pairs = rest.chunks(2).map(|p| (p[0], p[1])).collect();
    (lead_value, pairs)
}

pub fn isqrt_traced(n: &ExactInt) -> Result<SqrtTrace> {
    check_non_negative(n)?;
    let (lead, pairs) = digit_groups(n);
    let mut steps = Vec::with_capacity(1 + 2 * pairs.len());

    let first = (0..=9u32).rev().find(|d| d * d <= lead).unwrap_or(0);
    let square = BigInt::from(first * first);
    steps.push(SqrtStep {
        place_kind: PlaceKind::Odd,
        working_value: BigInt::from(lead),
        divisor_or_square: square.clone(),
        digit_emitted: Some(first as u8),
        subtracted: square.clone(),
    });
    let mut root = BigInt::from(first);
    let mut rem = BigInt::from(lead) - square;

    for (even_digit, odd_digit) in pairs {
        let working = &rem * 10u8 + even_digit;
        let twice_root: ExactInt = &root << 1u8;
        // The leading group is non-zero whenever pairs follow, so the
        // partial root is at least 1 here.
        let mut q = (&working / &twice_root).min(BigInt::from(9u8));
        let (after_odd, sub_even) = loop {
            let sub_even = &q * &twice_root;
            let after_even = &working - &sub_even;
            let odd_working = after_even * 10u8 + odd_digit;
            let candidate = &odd_working - &q * &q;
            if !candidate.is_negative() {
                break ((odd_working, candidate), sub_even);
            }
            q -= 1u8;
        };
        let digit = u8::try_from(&q).expect("quotient digit is 0..=9");
        steps.push(SqrtStep {
            place_kind: PlaceKind::Even,
            working_value: working,
            divisor_or_square: twice_root,
            digit_emitted: Some(digit),
            subtracted: sub_even,
        });
        let sq = &q * &q;
        steps.push(SqrtStep {
            place_kind: PlaceKind::Odd,
            working_value: after_odd.0,
            divisor_or_square: sq.clone(),
            digit_emitted: None,
            subtracted: sq,
        });
        rem = after_odd.1;
        root = root * 10u8 + q;
    }

    Ok(SqrtTrace {
        input: n.clone(),
        steps,
        root,
        remainder: rem,
    })
}

/// `(root, remainder)` with `root^2 + remainder = n` and `root` maximal.
pub fn isqrt(n: &ExactInt) -> Result<(ExactInt, ExactInt)> {
    let trace = isqrt_traced(n)?;
    Ok((trace.root, trace.remainder))
}

/// `floor(sqrt(n) + 1/2)`: the floor root bumped when the remainder exceeds the root.
pub fn isqrt_nearest(n: &ExactInt) -> Result<ExactInt> {
    let (root, rem) = isqrt(n)?;
    Ok(if rem > root { root + 1u8 } else { root })
}

/// `sqrt(n)` to `frac_digits` decimals, truncated, with a one-ulp bound.
pub fn sqrt_scaled(n: &ExactInt, frac_digits: u32) -> Result<ScaledValue> {
    check_non_negative(n)?;
    let shifted = n * crate::exact::pow10(2 * frac_digits);
    let (root, _) = isqrt(&shifted)?;
    ScaledValue::new(root, frac_digits, BigInt::from(1u8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn int(s: &str) -> ExactInt {
        s.parse().unwrap()
    }

    /// Bisection oracle, independent of the digit-pair path.
    fn bisect_isqrt(n: &ExactInt) -> ExactInt {
        let (mut lo, mut hi) = (BigInt::zero(), n + 1u8);
        while &hi - &lo > BigInt::from(1u8) {
            let mid: ExactInt = (&lo + &hi) >> 1u8;
            if &mid * &mid <= *n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn worked_example() {
        assert_eq!(
            isqrt(&int("987654321")).unwrap(),
            (int("31426"), int("60845"))
        );
    }

    #[test]
    fn worked_example_trace_matches_worksheet() {
        let t = isqrt_traced(&int("987654321")).unwrap();
        let rows: Vec<(i64, i64, Option<u8>, i64)> = t
            .steps
            .iter()
            .map(|s| {
                (
                    i64::try_from(&s.working_value).unwrap(),
                    i64::try_from(&s.divisor_or_square).unwrap(),
                    s.digit_emitted,
                    i64::try_from(&s.subtracted).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            rows,
            vec![
                (9, 9, Some(3), 9),
                (8, 6, Some(1), 6),
                (27, 1, None, 1),
                (266, 62, Some(4), 248),
                (185, 16, None, 16),
                (1694, 628, Some(2), 1256),
                (4383, 4, None, 4),
                (43792, 6284, Some(6), 37704),
                (60881, 36, None, 36),
            ]
        );
        assert_eq!(t.remainder, int("60845"));
        assert_eq!(t.digits(), "31426");
    }

    #[test]
    fn small_cases() {
        assert_eq!(isqrt(&int("0")).unwrap(), (int("0"), int("0")));
        let one = isqrt_traced(&int("1")).unwrap();
        assert_eq!(one.digits(), "1");
        assert_eq!(one.remainder, int("0"));
        let t = isqrt_traced(&int("99")).unwrap();
        assert_eq!(bisect_isqrt(&int("99")), int("9"));
        assert_eq!((t.digits().as_str(), t.remainder), ("9", int("18")));
        assert!(isqrt(&int("-4")).is_err());
    }

    #[test]
    fn overshoot_is_corrected() {
        // 1 99 99: the capped quotient 9 must drop to 4 at the first even place
        let n = int("19999");
        assert_eq!(isqrt(&n).unwrap().0, bisect_isqrt(&n));
        let n = int("9999800001"); // 99999^2
        assert_eq!(isqrt(&n).unwrap(), (int("99999"), int("0")));
    }

    #[test]
    fn seed_root_for_parardha_circle() {
        let n = int("12") * crate::exact::pow10(34);
        let (root, rem) = isqrt(&n).unwrap();
        assert_eq!(root, int("346410161513775458"));
        assert_eq!(&root * &root + &rem, n);
        assert_eq!(isqrt_nearest(&n).unwrap(), int("346410161513775459"));
    }

    #[test]
    fn scaled_roots() {
        let n = int("12") * crate::exact::pow10(34);
        assert_eq!(
            sqrt_scaled(&n, 0).unwrap().mantissa(),
            &int("346410161513775458")
        );
        let four = sqrt_scaled(&int("4"), 3).unwrap();
        assert_eq!((four.mantissa(), four.scale()), (&int("2000"), 3));
        assert_eq!(
            sqrt_scaled(&int("2"), 5).unwrap().mantissa(),
            &int("141421")
        );
        assert_eq!(bisect_isqrt(&int("20000000000")), int("141421"));
    }
}
