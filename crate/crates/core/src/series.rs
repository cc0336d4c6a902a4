//! The √(12·D²) series for the circumference, carried out as a ledger.
//!
//! Starting from x₁ = √(12·D²), each x_k is x_{k−1}/3 and each term is
//! t_k = x_k/(2k−1). Odd-numbered terms are summed into O, even-numbered
//! ones into E, and the circumference is O − E.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{ExactInt, ExactRatio};
use crate::policy::{Backend, Policy, TermValue};
use crate::sqrt::{isqrt, isqrt_nearest, sqrt_scaled};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerRow {
    pub k: u64,
    pub x: TermValue,
    /// `+1` for odd k, `-1` for even k.
    pub sign: i8,
    pub t: TermValue,
}

impl LedgerRow {
    pub fn divisor(&self) -> u64 {
        2 * self.k - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesLedger {
    pub diameter: ExactInt,
    pub policy: Policy,
    pub rows: Vec<LedgerRow>,
    pub odd_sum: TermValue,
    pub even_sum: TermValue,
}

impl SeriesLedger {
    /// `O − E` before any final rounding.
    pub fn difference(&self) -> TermValue {
        self.odd_sum.sub(&self.even_sum)
    }

    pub fn circumference(&self) -> Result<ExactInt> {
        self.policy.finish(&self.difference())
    }

    /// Signed running sums after each row, i.e. the value after k terms.
    pub fn partial_sums(&self) -> Vec<TermValue> {
        let mut acc = self.policy.zero();
        self.rows
            .iter()
            .map(|row| {
                acc = acc.add_signed(&row.t, row.sign > 0);
                acc.clone()
            })
            .collect()
    }
}

/// x₁ under the given policy.
pub fn seed_term(diameter: &ExactInt, policy: &Policy) -> Result<TermValue> {
    let radicand = diameter * diameter * 12u8;
    Ok(match policy {
        Policy::FloorEachOp => TermValue::Int(isqrt(&radicand)?.0),
        Policy::NearestEachOp => TermValue::Int(isqrt_nearest(&radicand)?),
        Policy::ExactFinal {
            backend: Backend::Rational,
            ..
        } => TermValue::Ratio(ExactRatio::from_int(isqrt(&radicand)?.0)),
        Policy::ExactFinal {
            backend: Backend::Scaled { frac_digits },
            ..
        } => TermValue::Scaled(sqrt_scaled(&radicand, *frac_digits)?),
    })
}

pub fn build_ledger(
    diameter: &ExactInt,
    policy: Policy,
    max_terms: Option<u64>,
) -> Result<SeriesLedger> {
    if !diameter.is_positive() {
        return Err(Error::domain(format!(
            "diameter must be positive, got {diameter}"
        )));
    }
    if policy.is_exact() && max_terms.is_none() {
        return Err(Error::domain(
            "exact-final policy needs an explicit term count",
        ));
    }
    if max_terms == Some(0) {
        return Err(Error::domain("term count must be at least 1"));
    }

    let three = BigInt::from(3u8);
    let mut rows = Vec::new();
    let mut odd_sum = policy.zero();
    let mut even_sum = policy.zero();
    let mut x = seed_term(diameter, &policy)?;
    let mut k = 1u64;
    loop {
        if k > 1 {
            x = policy.divide(&x, &three)?;
        }
        let t = policy.divide(&x, &BigInt::from(2 * k - 1))?;
        let odd = k % 2 == 1;
        if odd {
            odd_sum = odd_sum.add(&t);
        } else {
            even_sum = even_sum.add(&t);
        }
        let exhausted = !policy.is_exact() && x.is_zero();
        rows.push(LedgerRow {
            k,
            x: x.clone(),
            sign: if odd { 1 } else { -1 },
            t,
        });
        if exhausted || Some(k) == max_terms {
            break;
        }
        k += 1;
    }

    Ok(SeriesLedger {
        diameter: diameter.clone(),
        policy,
        rows,
        odd_sum,
        even_sum,
    })
}

pub fn varman_circumference(
    diameter: &ExactInt,
    policy: Policy,
    max_terms: Option<u64>,
) -> Result<ExactInt> {
    build_ledger(diameter, policy, max_terms)?.circumference()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pow10, RoundingMode};
    use num_traits::Zero;

    fn int(s: &str) -> ExactInt {
        s.parse().unwrap()
    }

    #[test]
    fn parardha_ledger_under_floor() {
        let ledger = build_ledger(&pow10(17), Policy::FloorEachOp, None).unwrap();
        assert_eq!(ledger.rows.len(), 38);
        let first = &ledger.rows[0];
        assert_eq!(first.x.as_int(), Some(&int("346410161513775458")));
        assert_eq!(first.t.as_int(), Some(&int("346410161513775458")));
        assert_eq!(ledger.rows[6].t.as_int(), Some(&int("36552723595417")));
        assert!(ledger.rows[37].x.is_zero());
        assert_eq!(ledger.odd_sum.as_int(), Some(&int("354623317218212158")));
        assert_eq!(ledger.even_sum.as_int(), Some(&int("40464051859232834")));
        assert_eq!(ledger.circumference().unwrap(), int("314159265358979324"));
    }

    #[test]
    fn unit_diameter_by_hand() {
        let ledger = build_ledger(&BigInt::from(1u8), Policy::FloorEachOp, None).unwrap();
        let xs: Vec<_> = ledger
            .rows
            .iter()
            .map(|r| r.x.as_int().unwrap().clone())
            .collect();
        let ts: Vec<_> = ledger
            .rows
            .iter()
            .map(|r| r.t.as_int().unwrap().clone())
            .collect();
        assert_eq!(xs, vec![int("3"), int("1"), int("0")]);
        assert_eq!(ts, vec![int("3"), int("0"), int("0")]);
        assert_eq!(ledger.circumference().unwrap(), int("3"));
    }

    #[test]
    fn nearest_each_op() {
        let ledger = build_ledger(&pow10(17), Policy::NearestEachOp, None).unwrap();
        assert_eq!(ledger.rows[0].x.as_int(), Some(&int("346410161513775459")));
        assert_eq!(ledger.odd_sum.as_int(), Some(&int("354623317218212169")));
        assert_eq!(ledger.even_sum.as_int(), Some(&int("40464051859232844")));
        assert_eq!(ledger.circumference().unwrap(), int("314159265358979325"));
    }

    #[test]
    fn exact_final_needs_term_count() {
        assert!(build_ledger(&pow10(17), Policy::final_nearest(), None).is_err());
        assert!(build_ledger(&BigInt::zero(), Policy::FloorEachOp, None).is_err());
        assert!(build_ledger(&pow10(3), Policy::FloorEachOp, Some(0)).is_err());
    }

    #[test]
    fn exact_final_roundings() {
        let d = pow10(17);
        let near = varman_circumference(&d, Policy::final_nearest(), Some(38)).unwrap();
        let floor = varman_circumference(&d, Policy::final_floor(), Some(38)).unwrap();
        assert_eq!(near, int("314159265358979324"));
        assert_eq!(floor, int("314159265358979323"));
    }

    #[test]
    fn max_terms_truncates_integer_ledgers() {
        let ledger = build_ledger(&pow10(17), Policy::FloorEachOp, Some(3)).unwrap();
        assert_eq!(ledger.rows.len(), 3);
        assert_eq!(
            ledger.circumference().unwrap(),
            int("346410161513775458") - int("38490017945975050") + int("7698003589195010")
        );
    }

    #[test]
    fn rational_backend_keeps_odd_denominator() {
        let policy = Policy::ExactFinal {
            mode: RoundingMode::Floor,
            backend: Backend::Rational,
        };
        let ledger = build_ledger(&pow10(17), policy, Some(38)).unwrap();
        let diff = ledger.difference();
        let r = diff.as_ratio().unwrap();
        assert!(r.denom().bit(0));
    }
}
