//! Finite 0/1 words.
//!
//! A `Word` is stored in reading order. Cylinder words `a_n…a_1` keep that
//! spelling: `symbols()[0]` is `a_n` and `at_index(1)` is `a_1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&b| b <= 1));
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut v = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => v.push(0),
                '1' => v.push(1),
                c if c.is_whitespace() => {}
                c => return Err(Error::Parse(format!("unexpected symbol {c:?} in word"))),
            }
        }
        Ok(Word(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    /// Symbol `a_i`, counting 1-based from the right end of the word.
    pub fn at_index(&self, i: usize) -> u8 {
        self.0[self.0.len() - i]
    }

    /// The low part `a_cut…a_1` (rightmost `cut` symbols), in reading order.
    pub fn low_part(&self, cut: usize) -> Word {
        Word(self.0[self.0.len() - cut..].to_vec())
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn ones_odd(&self) -> bool {
        self.ones() % 2 == 1
    }

    pub fn flipped_at_index(&self, i: usize) -> Word {
        let mut v = self.0.clone();
        let n = v.len();
        v[n - i] = 1 - v[n - i];
        Word(v)
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    pub fn repeat(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Index-order view `[a_1, a_2, …, a_n]`.
    pub fn to_index_order(&self) -> Vec<u8> {
        let mut v = self.0.clone();
        v.reverse();
        v
    }

    pub fn from_index_order(mut idx: Vec<u8>) -> Word {
        idx.reverse();
        Word(idx)
    }
}

pub fn ones_parity_even(w: &Word) -> bool {
    !w.ones_odd()
}

/// Parity-lexicographic comparison of equal-length slices.
pub(crate) fn plex_slices(a: &[u8], b: &[u8]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let mut ones = 0usize;
    for k in 0..a.len() {
        if a[k] != b[k] {
            let lt = a[k] < b[k];
            let even = ones % 2 == 0;
            return if lt == even { Ordering::Less } else { Ordering::Greater };
        }
        ones += a[k] as usize;
    }
    Ordering::Equal
}

/// Parity-lexicographic order on finite words. Words of different length are
/// not comparable.
pub fn plex_words(a: &Word, b: &Word) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::MixedLength(format!(
            "finite words of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(plex_slices(&a.0, &b.0))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        assert!(ones_parity_even(&Word::parse("").unwrap()));
        assert!(ones_parity_even(&Word::parse("101").unwrap()));
        assert!(!ones_parity_even(&Word::parse("10110").unwrap()));
    }

    #[test]
    fn plex_examples() {
        let w = |s: &str| Word::parse(s).unwrap();
        assert_eq!(plex_words(&w("0"), &w("1")).unwrap(), Ordering::Less);
        // prefix "1" is odd, so the order flips
        assert_eq!(plex_words(&w("10"), &w("11")).unwrap(), Ordering::Greater);
        assert!(plex_words(&w("10"), &w("101")).is_err());
    }

    #[test]
    fn index_access() {
        let w = Word::parse("100").unwrap(); // a_3 a_2 a_1
        assert_eq!(w.at_index(1), 0);
        assert_eq!(w.at_index(3), 1);
        assert_eq!(w.low_part(2).to_string(), "00");
    }
}
