use std::fmt;

use crate::error::{Error, Result};

/// Ordered input alphabet of single ASCII alphanumeric symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if !c.is_ascii_alphanumeric() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {c:?} is not an ASCII letter or digit"
                )));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// `{a}`.
    pub fn unary() -> Self {
        Alphabet { symbols: vec!['a'] }
    }

    /// `{a, b}`.
    pub fn binary() -> Self {
        Alphabet {
            symbols: vec!['a', 'b'],
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, c: char) -> Result<usize> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .ok_or(Error::UnknownSymbol(c))
    }

    /// Translates a word into symbol indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>> {
        word.chars().map(|c| self.index_of(c)).collect()
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::new([]).is_err());
        assert!(Alphabet::new(['a', 'a']).is_err());
        assert!(Alphabet::new(['a', '-']).is_err());
        let ab = Alphabet::new(['a', 'b']).unwrap();
        assert_eq!(ab.encode("ba").unwrap(), vec![1, 0]);
        assert_eq!(ab.encode("c"), Err(Error::UnknownSymbol('c')));
        assert_eq!(ab.to_string(), "a,b");
    }
}
