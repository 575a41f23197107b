use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered, non-empty set of distinct symbols.
///
/// The order given at construction is the order used for every canonical
/// enumeration: breadth-first searches, witness tie-breaking and state
/// renumbering all follow it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    index: HashMap<char, usize>,
}

impl Alphabet {
    /// Builds an alphabet from the characters of `symbols`, in order.
    ///
    /// Whitespace is rejected. Regex metacharacters are allowed here but
    /// must be backslash-escaped inside expressions.
    pub fn new(symbols: &str) -> Result<Self> {
        Self::from_symbols(symbols.chars())
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for c in symbols {
            if c.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!("whitespace symbol {c:?}")));
            }
            if c.is_control() {
                return Err(Error::InvalidAlphabet(format!("control symbol {c:?}")));
            }
            if index.insert(c, list.len()).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
            list.push(c);
        }
        if list.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        Ok(Alphabet { symbols: list, index })
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.index.contains_key(&c)
    }

    /// Position of `c` in the alphabet order.
    pub fn index_of(&self, c: char) -> Option<usize> {
        if self.symbols.len() <= 8 {
            return self.symbols.iter().position(|&x| x == c);
        }
        self.index.get(&c).copied()
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    /// Checks that every character of `w` is a symbol of this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.chars().iter().find(|c| !self.contains(**c)) {
            Some(&c) => Err(Error::SymbolNotInAlphabet(c)),
            None => Ok(()),
        }
    }

    /// Shortlex order: shorter words first, equal lengths compared
    /// position-wise by alphabet order. Foreign characters sort last.
    pub fn shortlex_cmp(&self, u: &Word, v: &Word) -> Ordering {
        let rank = |c: &char| self.index_of(*c).unwrap_or(usize::MAX);
        u.len()
            .cmp(&v.len())
            .then_with(|| u.chars().iter().map(rank).cmp(v.chars().iter().map(rank)))
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::epsilon()];
        let mut layer = vec![Word::epsilon()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for &c in &self.symbols {
                    next.push(w.pushed(c));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word. The empty word is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<char>);

impl Word {
    pub fn epsilon() -> Self {
        Word(Vec::new())
    }

    pub fn new(chars: Vec<char>) -> Self {
        Word(chars)
    }

    /// `c` repeated `n` times.
    pub fn power(c: char, n: usize) -> Self {
        Word(vec![c; n])
    }

    pub fn chars(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut chars = Vec::with_capacity(self.len() + other.len());
        chars.extend_from_slice(&self.0);
        chars.extend_from_slice(&other.0);
        Word(chars)
    }

    pub fn pushed(&self, c: char) -> Word {
        let mut chars = self.0.clone();
        chars.push(c);
        Word(chars)
    }

    pub fn count(&self, c: char) -> usize {
        self.0.iter().filter(|&&x| x == c).count()
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl From<Vec<char>> for Word {
    fn from(chars: Vec<char>) -> Self {
        Word(chars)
    }
}

impl FromIterator<char> for Word {
    fn from_iter<I: IntoIterator<Item = char>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}
