//! Braid words over classical (`z`) and virtual (`t`) generators.
//!
//! Text form: an optional `n=<strands>;` header followed by whitespace
//! separated letters such as `z1 t2 z1`. JSON form:
//! `{"n": 3, "letters": [{"kind": "classical", "i": 1}, ...]}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LetterKind {
    Classical,
    Virtual,
}

/// A generator letter acting on adjacent positions `(i, i+1)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    kind: LetterKind,
    index: u32,
}

impl Letter {
    pub fn new(kind: LetterKind, index: usize) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Letter { kind, index: index as u32 }
    }

    /// The classical generator ζ_i.
    pub fn classical(index: usize) -> Self {
        Letter::new(LetterKind::Classical, index)
    }

    /// The virtual generator τ_i.
    pub fn virt(index: usize) -> Self {
        Letter::new(LetterKind::Virtual, index)
    }

    pub fn kind(self) -> LetterKind {
        self.kind
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn is_classical(self) -> bool {
        self.kind == LetterKind::Classical
    }

    pub fn is_virtual(self) -> bool {
        self.kind == LetterKind::Virtual
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::Classical => write!(f, "z{}", self.index),
            LetterKind::Virtual => write!(f, "t{}", self.index),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let kind = match tok.as_bytes().first() {
            Some(b'z') => LetterKind::Classical,
            Some(b't') => LetterKind::Virtual,
            _ => return Err(Error::Syntax(format!("unknown token `{tok}`"))),
        };
        let index =
            parse_positive(&tok[1..]).ok_or_else(|| Error::Syntax(format!("bad generator index in `{tok}`")))?;
        Ok(Letter::new(kind, index))
    }
}

fn parse_positive(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<usize>().ok().filter(|&v| v > 0)
}

/// Serialization formats for [`BraidWord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// An `n`-strand free braid word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking every letter index against `strands`.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Syntax("strand count must be at least 1".into()));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(Error::IndexOutOfRange { index: bad.index(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord { strands, letters: Vec::new() }
    }

    /// Skips validation; callers guarantee the index bound.
    pub(crate) fn from_parts(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn classical_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_classical()).count()
    }

    /// Positions of classical letters, increasing.
    pub fn classical_positions(&self) -> Vec<usize> {
        (0..self.letters.len()).filter(|&p| self.letters[p].is_classical()).collect()
    }

    /// `self` followed by `other` (reading top to bottom).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_parts(self.strands, letters))
    }

    /// The subword made of the letters at `positions` (in the given order).
    pub fn select(&self, positions: &[usize]) -> BraidWord {
        BraidWord::from_parts(self.strands, positions.iter().map(|&p| self.letters[p]).collect())
    }

    /// The same letters with every index shifted by `offset`, on `strands + offset` strands.
    pub fn shifted(&self, offset: usize) -> BraidWord {
        let letters = self.letters.iter().map(|l| Letter::new(l.kind(), l.index() + offset)).collect();
        BraidWord::from_parts(self.strands + offset, letters)
    }

    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_string(),
            Format::Json => serde_json::to_string(&JsonWord::from(self)).expect("plain data"),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses the text grammar `header? letter*` where `header := "n=" INT ";"`.
///
/// Without a header the strand count is the largest index plus one.
pub fn parse_word(text: &str) -> Result<BraidWord> {
    let text = text.trim();
    let (header, body) = match text.strip_prefix("n=") {
        Some(rest) => {
            let semi = rest.find(';').ok_or_else(|| Error::Syntax("header `n=` must end with `;`".into()))?;
            let n = parse_positive(rest[..semi].trim())
                .ok_or_else(|| Error::Syntax(format!("bad strand count `{}`", &rest[..semi])))?;
            (Some(n), &rest[semi + 1..])
        }
        None => (None, text),
    };
    let letters = body.split_whitespace().map(str::parse::<Letter>).collect::<Result<Vec<_>>>()?;
    let strands = match header {
        Some(n) => n,
        None => letters.iter().map(|l| l.index()).max().unwrap_or(0) + 1,
    };
    BraidWord::new(strands, letters)
}

/// Parses either format; input whose first non-blank character is `{` is JSON.
pub fn parse_any(text: &str) -> Result<BraidWord> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_word(text)
    }
}

pub fn parse_json(text: &str) -> Result<BraidWord> {
    let raw: JsonWord = serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    let letters = raw
        .letters
        .into_iter()
        .map(|l| {
            if l.i == 0 {
                Err(Error::Syntax("generator index must be positive".into()))
            } else {
                Ok(Letter::new(l.kind, l.i))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(raw.n, letters)
}

#[derive(Serialize, Deserialize)]
struct JsonLetter {
    kind: LetterKind,
    i: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonWord {
    n: usize,
    letters: Vec<JsonLetter>,
}

impl From<&BraidWord> for JsonWord {
    fn from(w: &BraidWord) -> Self {
        JsonWord {
            n: w.strands,
            letters: w.letters.iter().map(|l| JsonLetter { kind: l.kind(), i: l.index() }).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_letter() {
        let w = parse_word("n=2; z1").unwrap();
        assert_eq!(w.strands(), 2);
        assert_eq!(w.letters(), &[Letter::classical(1)]);
        assert_eq!(w.serialize(Format::Text), "n=2; z1");
    }

    #[test]
    fn empty_word_with_header() {
        let w = parse_word("n=3;").unwrap();
        assert_eq!(w, BraidWord::empty(3));
        assert_eq!(w.serialize(Format::Text), "n=3;");
    }

    #[test]
    fn infers_strand_count() {
        let w = parse_word("t1 z4 t2").unwrap();
        assert_eq!(w.strands(), 5);
        assert_eq!(parse_word("").unwrap(), BraidWord::empty(1));
    }

    #[test]
    fn rejects_out_of_range_index() {
        assert_eq!(parse_word("n=3; z3"), Err(Error::IndexOutOfRange { index: 3, strands: 3 }));
    }

    #[test]
    fn rejects_bad_tokens() {
        for bad in ["n=3; z0", "n=3; x1", "n=3; z", "n=3; z-1", "n=0;", "n=3 z1", "n=3; z1a"] {
            assert!(matches!(parse_word(bad), Err(Error::Syntax(_))), "{bad}");
        }
    }

    #[test]
    fn json_form() {
        let w = parse_word("n=3; z1 t2").unwrap();
        let json = w.serialize(Format::Json);
        assert_eq!(json, r#"{"n":3,"letters":[{"kind":"classical","i":1},{"kind":"virtual","i":2}]}"#);
        assert_eq!(parse_any(&json).unwrap(), w);
        assert!(parse_json(r#"{"n":2,"letters":[{"kind":"virtual","i":2}]}"#).is_err());
    }
}
