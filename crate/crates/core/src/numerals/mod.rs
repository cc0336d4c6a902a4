//! Traditional numeral notations. Both write the units digit first.

pub mod bhutasamkhya;
pub mod katapayadi;

pub use bhutasamkhya::{decode_bhutasamkhya, BhutasamkhyaLexicon, LexiconEntry};
pub use katapayadi::{
    decode_katapayadi, decode_with, encode_katapayadi, source_digits, tokenize, KatapayadiTable,
    SyllableToken,
};
