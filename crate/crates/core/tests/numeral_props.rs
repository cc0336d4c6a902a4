use keralapi::numerals::{
    decode_bhutasamkhya, decode_katapayadi, encode_katapayadi, source_digits, tokenize,
    BhutasamkhyaLexicon, KatapayadiTable, SyllableToken,
};
use keralapi::ExactInt;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Vargas as rows of five, then y–h; digits restart at 1 in each row.
fn oracle_digit(consonant: &str) -> Option<u8> {
    let rows: [&[&str]; 4] = [
        &["k", "kh", "g", "gh", "ṅ", "c", "ch", "j", "jh", "ñ"],
        &["ṭ", "ṭh", "ḍ", "ḍh", "ṇ", "t", "th", "d", "dh", "n"],
        &["p", "ph", "b", "bh", "m"],
        &["y", "r", "l", "v", "ś", "ṣ", "s", "h"],
    ];
    rows.iter()
        .find_map(|row| row.iter().position(|c| *c == consonant))
        .map(|i| ((i + 1) % 10) as u8)
}

const CONSONANTS: [&str; 33] = [
    "k", "kh", "g", "gh", "ṅ", "c", "ch", "j", "jh", "ñ", "ṭ", "ṭh", "ḍ", "ḍh", "ṇ", "t", "th",
    "d", "dh", "n", "p", "ph", "b", "bh", "m", "y", "r", "l", "v", "ś", "ṣ", "s", "h",
];
const VOWELS: [&str; 8] = ["a", "ā", "i", "ī", "u", "e", "o", "ai"];

fn syllable() -> impl Strategy<Value = (String, u8)> {
    (
        proptest::sample::select(CONSONANTS.to_vec()),
        proptest::option::of(proptest::sample::select(CONSONANTS.to_vec())),
        proptest::sample::select(VOWELS.to_vec()),
    )
        .prop_map(|(last, lead, v)| {
            let text = format!("{}{last}{v}", lead.unwrap_or(""));
            (text, oracle_digit(last).unwrap())
        })
        // "k"+"h" would read as the aspirate "kh"
        .prop_filter("ambiguous cluster", |(t, d)| {
            SyllableToken::parse(t)
                .ok()
                .and_then(|s| s.digit(&KatapayadiTable::classical()).ok().flatten())
                == Some(*d)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn katapayadi_round_trip(n in 0u128..100_000_000_000_000_000_000) {
        let n = BigInt::from(n);
        let tokens = encode_katapayadi(&n).unwrap();
        prop_assert_eq!(decode_katapayadi(&tokens).unwrap(), n.clone());
        // the written order is the decimal digits reversed
        let written: String = source_digits(&tokens, &KatapayadiTable::classical())
            .unwrap()
            .iter()
            .map(|d| char::from(b'0' + d))
            .collect();
        let reversed: String = n.to_string().chars().rev().collect();
        prop_assert_eq!(written, reversed);
        // rendered text re-tokenizes to the same value
        let text: Vec<String> = tokens.iter().map(|t| t.to_string()).collect();
        prop_assert_eq!(decode_katapayadi(&tokenize(&text.join(" ")).unwrap()).unwrap(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_syllables_decode_by_last_consonant(
        syllables in proptest::collection::vec(syllable(), 1..25),
    ) {
        let text: Vec<&str> = syllables.iter().map(|(t, _)| t.as_str()).collect();
        let tokens = tokenize(&text.join(" ")).unwrap();
        let expected: String = syllables.iter().rev().map(|(_, d)| char::from(b'0' + d)).collect();
        prop_assert_eq!(decode_katapayadi(&tokens).unwrap(), expected.parse::<ExactInt>().unwrap());
    }

    #[test]
    fn bhutasamkhya_digit_words_concatenate_reversed(
        picks in proptest::collection::vec(0usize..6, 1..12),
    ) {
        let words = ["netra", "veda", "vibudha", "bha", "nava", "tri"];
        let values = ["2", "4", "33", "27", "9", "3"];
        let lex = BhutasamkhyaLexicon::seed();
        let chosen: Vec<&str> = picks.iter().map(|&i| words[i]).collect();
        let expected: String = picks.iter().rev().map(|&i| values[i]).collect();
        prop_assert_eq!(
            decode_bhutasamkhya(&chosen, &lex).unwrap(),
            expected.parse::<ExactInt>().unwrap()
        );
    }
}

#[test]
fn table_matches_varga_layout() {
    let table = KatapayadiTable::classical();
    for c in CONSONANTS {
        assert_eq!(table.digit(c), oracle_digit(c), "{c}");
    }
}
