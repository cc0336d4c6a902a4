//! Bhūtasaṃkhyā word numerals.

use std::collections::HashMap;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::exact::{pow10, ExactInt};

const SEED: &str = include_str!("bhutasamkhya.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexiconEntry {
    /// A digit group such as "33" for the gods.
    Digits(String),
    /// A power of ten.
    Magnitude(u32),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BhutasamkhyaLexicon {
    entries: HashMap<String, LexiconEntry>,
}

fn normalize(word: &str) -> String {
    word.trim().nfc().collect::<String>().to_lowercase()
}

impl BhutasamkhyaLexicon {
    /// The built-in lexicon.
    pub fn seed() -> Self {
        Self::parse(SEED).expect("bundled lexicon is well-formed")
    }

    /// Parses `word<TAB>digits` / `word<TAB>E<k>` lines. Blank lines and
    /// lines starting with `#` are skipped; later entries win.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lexicon = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, value) = line.split_once('\t').ok_or_else(|| Error::Lexicon {
                line: line_no,
                reason: "expected word<TAB>value".into(),
            })?;
            let value = value.trim();
            let entry = if let Some(exp) = value.strip_prefix('E') {
                let k = exp.parse::<u32>().map_err(|_| Error::Lexicon {
                    line: line_no,
                    reason: format!("bad magnitude `{value}`"),
                })?;
                LexiconEntry::Magnitude(k)
            } else if !value.is_empty() && value.bytes().all(|b| b.is_ascii_digit()) {
                LexiconEntry::Digits(value.to_string())
            } else {
                return Err(Error::Lexicon {
                    line: line_no,
                    reason: format!("bad digit string `{value}`"),
                });
            };
            let word = normalize(word);
            if word.is_empty() {
                return Err(Error::Lexicon {
                    line: line_no,
                    reason: "empty word".into(),
                });
            }
            lexicon.entries.insert(word, entry);
        }
        Ok(lexicon)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Lexicon {
            line: 0,
            reason: format!("{}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    /// Adds the entries of `other`, overriding duplicates.
    pub fn extend(&mut self, other: BhutasamkhyaLexicon) {
        self.entries.extend(other.entries);
    }

    pub fn lookup(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries.get(&normalize(word))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn lookup<'a>(lexicon: &'a BhutasamkhyaLexicon, word: &str) -> Result<&'a LexiconEntry> {
    lexicon
        .lookup(word)
        .ok_or_else(|| Error::decode(word, "word is not in the lexicon"))
}

/// Decodes a units-first word list, or a `[digit-word, magnitude-word]` pair.
pub fn decode_bhutasamkhya<S: AsRef<str>>(
    words: &[S],
    lexicon: &BhutasamkhyaLexicon,
) -> Result<ExactInt> {
    let entries = words
        .iter()
        .map(|w| lookup(lexicon, w.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    match entries.as_slice() {
        [] => Err(Error::decode("", "empty word list")),
        [LexiconEntry::Digits(d), LexiconEntry::Magnitude(k)] => {
            let base: ExactInt = d.parse().expect("digit strings are validated on load");
            Ok(base * pow10(*k))
        }
        [LexiconEntry::Magnitude(k)] => Ok(pow10(*k)),
        _ => {
            let mut digits = String::new();
            for (entry, word) in entries.iter().zip(words).rev() {
                match entry {
                    LexiconEntry::Digits(d) => digits.push_str(d),
                    LexiconEntry::Magnitude(_) => {
                        return Err(Error::decode(
                            word.as_ref(),
                            "magnitude word inside a digit sequence",
                        ))
                    }
                }
            }
            Ok(digits.parse().expect("ascii digits"))
        }
    }
}
