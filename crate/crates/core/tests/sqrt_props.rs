use keralapi::exact::pow10;
use keralapi::sqrt::isqrt_nearest;
use keralapi::{isqrt, isqrt_traced, sqrt_scaled, ExactInt, ExactRatio};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Newton iteration from above; independent of the digit-pair method.
fn newton_isqrt(n: &ExactInt) -> ExactInt {
    if *n < BigInt::from(2) {
        return n.clone();
    }
    let mut x: ExactInt = BigInt::from(1) << n.bits().div_ceil(2);
    loop {
        let y: ExactInt = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn random_digits(rng: &mut StdRng, len: usize) -> ExactInt {
    let mut s = String::with_capacity(len);
    s.push(char::from(b'1' + rng.gen_range(0..9u8)));
    for _ in 1..len {
        s.push(char::from(b'0' + rng.gen_range(0..10u8)));
    }
    s.parse().unwrap()
}

#[test]
fn agrees_with_search_oracle_up_to_a_million() {
    let mut oracle = 0u64;
    for n in 0u64..=1_000_000 {
        while (oracle + 1) * (oracle + 1) <= n {
            oracle += 1;
        }
        let (root, rem) = isqrt(&BigInt::from(n)).unwrap();
        assert_eq!(root, BigInt::from(oracle), "n = {n}");
        assert_eq!(rem, BigInt::from(n - oracle * oracle), "n = {n}");
    }
}

#[test]
fn agrees_with_newton_on_random_80_digit_inputs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let len = rng.gen_range(1..=80);
        let n = random_digits(&mut rng, len);
        let (root, rem) = isqrt(&n).unwrap();
        assert_eq!(root, newton_isqrt(&n), "n = {n}");
        assert_eq!(&root * &root + rem, n);
    }
}

#[test]
fn perfect_squares_and_neighbours() {
    for k in [1u64, 9, 10, 99, 100, 31426, 999_999_999] {
        let k = BigInt::from(k);
        let sq = &k * &k;
        assert_eq!(isqrt(&sq).unwrap(), (k.clone(), BigInt::from(0)));
        assert_eq!(isqrt(&(&sq - 1u8)).unwrap().0, &k - 1u8);
    }
}

fn big_decimal() -> impl Strategy<Value = ExactInt> {
    "[0-9]{1,80}".prop_map(|s| s.parse::<ExactInt>().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn root_contract(n in big_decimal()) {
        let (root, rem) = isqrt(&n).unwrap();
        prop_assert!(&root * &root <= n);
        let next = &root + 1u8;
        prop_assert!(n < &next * &next);
        prop_assert_eq!(&root * &root + &rem, n.clone());
        prop_assert!(rem <= &root * 2u8);
    }

    #[test]
    fn trace_digits_spell_the_root(n in big_decimal()) {
        let trace = isqrt_traced(&n).unwrap();
        let (digits, root) = (trace.digits(), trace.root.to_string());
        prop_assert_eq!(digits.trim_start_matches('0'), root.trim_start_matches('0'));
        prop_assert_eq!(trace.digits().len(), n.to_string().len().div_ceil(2));
    }

    #[test]
    fn nearest_root_follows_remainder_test(n in big_decimal()) {
        // floor(√n + ½) = floor((isqrt(4n) + 1) / 2)
        let oracle: ExactInt = (newton_isqrt(&(&n * 4u8)) + 1u8) >> 1;
        let (root, rem) = isqrt(&n).unwrap();
        let nearest = isqrt_nearest(&n).unwrap();
        prop_assert_eq!(nearest.clone(), oracle);
        prop_assert_eq!(nearest == &root + 1u8, rem > root);
    }

    #[test]
    fn scaled_root_brackets_the_true_root(n in big_decimal(), frac in 0u32..45) {
        let s = sqrt_scaled(&n, frac).unwrap();
        let (lo, hi) = s.interval();
        let target = ExactRatio::from_int(n);
        let lo = if lo.is_negative() { ExactRatio::zero() } else { lo };
        prop_assert!(&lo * &lo <= target);
        prop_assert!(target <= &hi * &hi);
        prop_assert!(s.error_bound() == ExactRatio::new(1.into(), pow10(frac)).unwrap());
    }

    #[test]
    fn negative_inputs_rejected(n in 1i64..) {
        prop_assert!(isqrt(&BigInt::from(-n)).is_err());
        prop_assert!(sqrt_scaled(&BigInt::from(-n), 5).is_err());
    }
}
