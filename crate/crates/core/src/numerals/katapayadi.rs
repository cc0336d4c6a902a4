//! Katapayādi letter numerals over romanized (IAST) syllables.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::exact::ExactInt;

/// Consonants in classical order with their digits.
#[rustfmt::skip]
const CLASSICAL: [(&str, u8); 33] = [
    ("k", 1), ("kh", 2), ("g", 3), ("gh", 4), ("ṅ", 5),
    ("c", 6), ("ch", 7), ("j", 8), ("jh", 9), ("ñ", 0),
    ("ṭ", 1), ("ṭh", 2), ("ḍ", 3), ("ḍh", 4), ("ṇ", 5),
    ("t", 6), ("th", 7), ("d", 8), ("dh", 9), ("n", 0),
    ("p", 1), ("ph", 2), ("b", 3), ("bh", 4), ("m", 5),
    ("y", 1), ("r", 2), ("l", 3), ("v", 4), ("ś", 5), ("ṣ", 6), ("s", 7), ("h", 8),
];

/// First-varga consonant used for each digit when encoding.
const CANONICAL: [&str; 10] = ["ñ", "k", "kh", "g", "gh", "ṅ", "c", "ch", "j", "jh"];

const VOWELS: [&str; 14] = [
    "ai", "au", "a", "ā", "i", "ī", "u", "ū", "ṛ", "ṝ", "ḷ", "ḹ", "e", "o",
];

/// Consonant-like letters that are recognised but carry no classical value.
const UNVALUED: [&str; 1] = ["ḷ"];

const FINALS: [char; 2] = ['ṃ', 'ḥ'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KatapayadiTable {
    entries: Vec<(String, u8)>,
    /// Whether a syllable made of a bare vowel stands for 0.
    pub vowel_is_zero: bool,
}

impl KatapayadiTable {
    pub fn classical() -> Self {
        KatapayadiTable {
            entries: CLASSICAL.iter().map(|(c, d)| (c.to_string(), *d)).collect(),
            vowel_is_zero: true,
        }
    }

    pub fn digit(&self, consonant: &str) -> Option<u8> {
        self.entries
            .iter()
            .find(|(c, _)| c == consonant)
            .map(|(_, d)| *d)
    }

    fn consonants(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(c, _)| c.as_str())
    }
}

impl Default for KatapayadiTable {
    fn default() -> Self {
        Self::classical()
    }
}

/// A romanized syllable: a consonant cluster, then at most one vowel
/// (optionally followed by anusvāra or visarga).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableToken {
    pub text: String,
    pub consonant_cluster: Vec<String>,
    pub vowel: Option<String>,
}

fn longest_prefix<'a>(s: &str, options: impl Iterator<Item = &'a str>) -> Option<&'a str> {
    options
        .filter(|o| s.starts_with(o))
        .max_by_key(|o| o.chars().count())
}

impl SyllableToken {
    pub fn parse(raw: &str) -> Result<Self> {
        Self::parse_with(raw, &KatapayadiTable::classical())
    }

    pub fn parse_with(raw: &str, table: &KatapayadiTable) -> Result<Self> {
        let text: String = raw.trim().nfc().collect::<String>().to_lowercase();
        if text.is_empty() {
            return Err(Error::decode(raw, "empty syllable"));
        }
        let mut rest = text.as_str();
        let mut cluster = Vec::new();
        loop {
            // ḷ is a vowel unless another vowel follows it.
            if let Some(u) = UNVALUED.iter().find(|u| rest.starts_with(**u)) {
                let after = &rest[u.len()..];
                if longest_prefix(after, VOWELS.iter().copied()).is_some() {
                    cluster.push(u.to_string());
                    rest = after;
                    continue;
                }
            }
            match longest_prefix(rest, table.consonants()) {
                Some(c) => {
                    cluster.push(c.to_string());
                    rest = &rest[c.len()..];
                }
                None => break,
            }
        }
        let vowel = longest_prefix(rest, VOWELS.iter().copied()).map(|v| {
            rest = &rest[v.len()..];
            v.to_string()
        });
        if vowel.is_some() {
            rest = rest.trim_start_matches(FINALS);
        }
        if !rest.is_empty() {
            return Err(Error::decode(
                raw,
                format!("unexpected `{rest}`; expected a single syllable"),
            ));
        }
        Ok(SyllableToken {
            text,
            consonant_cluster: cluster,
            vowel,
        })
    }

    /// The digit this syllable carries, `None` when it carries none.
    pub fn digit(&self, table: &KatapayadiTable) -> Result<Option<u8>> {
        if self.vowel.is_none() {
            return Ok(None);
        }
        match self.consonant_cluster.last() {
            None => Ok(table.vowel_is_zero.then_some(0)),
            Some(c) => table.digit(c).map(Some).ok_or_else(|| {
                Error::decode(&self.text, format!("consonant `{c}` is outside the table"))
            }),
        }
    }
}

impl FromStr for SyllableToken {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SyllableToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

pub fn tokenize(text: &str) -> Result<Vec<SyllableToken>> {
    text.split_whitespace().map(SyllableToken::parse).collect()
}

/// Digits in written order (units first).
pub fn source_digits(tokens: &[SyllableToken], table: &KatapayadiTable) -> Result<Vec<u8>> {
    let mut digits = Vec::with_capacity(tokens.len());
    for t in tokens {
        if let Some(d) = t.digit(table)? {
            digits.push(d);
        }
    }
    Ok(digits)
}

pub fn decode_katapayadi(tokens: &[SyllableToken]) -> Result<ExactInt> {
    decode_with(tokens, &KatapayadiTable::classical())
}

pub fn decode_with(tokens: &[SyllableToken], table: &KatapayadiTable) -> Result<ExactInt> {
    let digits = source_digits(tokens, table)?;
    if digits.is_empty() {
        let joined: Vec<_> = tokens.iter().map(|t| t.text.as_str()).collect();
        return Err(Error::decode(
            joined.join(" "),
            "no digit-bearing syllables",
        ));
    }
    let text: String = digits.iter().rev().map(|d| char::from(b'0' + d)).collect();
    Ok(text.parse().expect("ascii digits"))
}

pub fn encode_katapayadi(n: &ExactInt) -> Result<Vec<SyllableToken>> {
    if n.is_negative() {
        return Err(Error::domain(format!("cannot encode negative number {n}")));
    }
    n.to_string()
        .bytes()
        .rev()
        .map(|b| {
            let consonant = CANONICAL[usize::from(b - b'0')];
            Ok(SyllableToken {
                text: format!("{consonant}a"),
                consonant_cluster: vec![consonant.to_string()],
                vowel: Some("a".to_string()),
            })
        })
        .collect()
}
