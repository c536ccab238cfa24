//! Eventually periodic 0/1 sequences, one-sided infinite.
//!
//! Internally a sequence is stored in *index order*: `at(1)` is the symbol
//! closest to the finite end, regardless of direction. For a right-infinite
//! sequence `c_1 c_2 …` that is reading order; for a left-infinite tail
//! `… s_2 s_1` index order is the reverse of reading order.
//!
//! The canonical form has a primitive period and a head that cannot absorb
//! another symbol of the period, so equality of canonical forms is equality
//! of sequences.
//!
//! Text grammar (used by the CLI and all serializers):
//!
//! ```text
//! right-infinite:  HEAD "(" PERIOD ")*"      e.g.  "1001(101)*"
//! left-infinite:   "*(" PERIOD ")" HEAD      e.g.  "*(01)"  or  "*(001)11"
//! ```

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EPSeq {
    /// Symbols at indices `1..=head.len()`, index order.
    head: Vec<u8>,
    /// Symbols beyond the head, repeating; index order. Never empty.
    period: Vec<u8>,
    dir: Direction,
}

fn primitive_root(p: &[u8]) -> Vec<u8> {
    let n = p.len();
    for d in 1..=n {
        if n % d == 0 && (d..n).all(|i| p[i] == p[i - d]) {
            return p[..d].to_vec();
        }
    }
    unreachable!()
}

impl EPSeq {
    pub fn new(head_idx: Vec<u8>, period_idx: Vec<u8>, dir: Direction) -> Self {
        assert!(!period_idx.is_empty(), "period must be nonempty");
        let mut head = head_idx;
        let mut period = primitive_root(&period_idx);
        // absorb head symbols into the period while the boundary allows it
        while let Some(&last) = head.last() {
            if last == *period.last().unwrap() {
                head.pop();
                period.rotate_right(1);
            } else {
                break;
            }
        }
        EPSeq { head, period, dir }
    }

    pub fn periodic(period_idx: Vec<u8>, dir: Direction) -> Self {
        EPSeq::new(Vec::new(), period_idx, dir)
    }

    /// Right-infinite sequence from reading-order head and period words.
    pub fn right(head: &Word, period: &Word) -> Self {
        EPSeq::new(head.symbols().to_vec(), period.symbols().to_vec(), Direction::Right)
    }

    /// Left-infinite tail `…PPH` from reading-order period and head words.
    pub fn left(period: &Word, head: &Word) -> Self {
        EPSeq::new(head.to_index_order(), period.to_index_order(), Direction::Left)
    }

    pub fn dir(&self) -> Direction {
        self.dir
    }

    pub fn head_len(&self) -> usize {
        self.head.len()
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Symbol at 1-based index `i`.
    pub fn at(&self, i: usize) -> u8 {
        debug_assert!(i >= 1);
        if i <= self.head.len() {
            self.head[i - 1]
        } else {
            self.period[(i - 1 - self.head.len()) % self.period.len()]
        }
    }

    /// Number of ones among indices `1..=i`.
    pub fn ones_through(&self, i: usize) -> usize {
        let mut ones = 0usize;
        let h = self.head.len();
        let take = i.min(h);
        ones += self.head[..take].iter().filter(|&&b| b == 1).count();
        if i > h {
            let rest = i - h;
            let per_ones = self.period.iter().filter(|&&b| b == 1).count();
            ones += (rest / self.period.len()) * per_ones;
            ones += self.period[..rest % self.period.len()]
                .iter()
                .filter(|&&b| b == 1)
                .count();
        }
        ones
    }

    pub fn is_all_zero(&self) -> bool {
        self.head.iter().all(|&b| b == 0) && self.period.iter().all(|&b| b == 0)
    }

    /// Left-infinite and eventually zero: the tail of a point on the ray
    /// compactifying on the core.
    pub fn is_c_tail(&self) -> bool {
        self.dir == Direction::Left && self.period.iter().all(|&b| b == 0)
    }

    /// Drops the `k` symbols nearest the finite end.
    pub fn shift(&self, k: usize) -> EPSeq {
        let h = self.head.len();
        if k <= h {
            EPSeq::new(self.head[k..].to_vec(), self.period.clone(), self.dir)
        } else {
            let mut period = self.period.clone();
            let rot = (k - h) % period.len();
            period.rotate_left(rot);
            EPSeq::new(Vec::new(), period, self.dir)
        }
    }

    /// Prepends symbols at the finite end; `low[0]` becomes the new `at(1)`.
    pub fn with_low(&self, low: &[u8]) -> EPSeq {
        let mut head: Vec<u8> = low.to_vec();
        head.extend_from_slice(&self.head);
        EPSeq::new(head, self.period.clone(), self.dir)
    }

    /// The mirror sequence: same symbols indexed from the other end's view.
    /// Reversal of `h·P^∞` read right-infinite is the left-infinite `…P̂P̂ĥ`,
    /// which has the identical index-order storage.
    pub fn reversed(&self) -> EPSeq {
        EPSeq {
            head: self.head.clone(),
            period: self.period.clone(),
            dir: match self.dir {
                Direction::Left => Direction::Right,
                Direction::Right => Direction::Left,
            },
        }
    }

    /// Reading-order word of the `m` symbols nearest the finite end.
    /// For right-infinite sequences this is the prefix `c_1…c_m`; for
    /// left-infinite tails it is `s_m…s_1`.
    pub fn finite_word(&self, m: usize) -> Word {
        let mut v: Vec<u8> = (1..=m).map(|i| self.at(i)).collect();
        if self.dir == Direction::Left {
            v.reverse();
        }
        Word::new(v)
    }

    /// True iff the two sequences agree from some index on.
    pub fn same_tail(&self, other: &EPSeq) -> bool {
        if self.dir != other.dir {
            return false;
        }
        let k = self.head.len().max(other.head.len());
        let p = self.period.len().lcm(&other.period.len());
        (k + 1..=k + p).all(|i| self.at(i) == other.at(i))
    }

    /// The purely periodic sequence agreeing with `self` above its head,
    /// extended down to index 1 in phase. Canonical representative of the
    /// tail class.
    pub fn tail_class(&self) -> EPSeq {
        let p = self.period.len();
        let h = self.head.len();
        let mut period = self.period.clone();
        period.rotate_right(h % p);
        EPSeq::new(Vec::new(), period, self.dir)
    }

    pub fn parse(s: &str) -> Result<EPSeq> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("*(") {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
            let period = Word::parse(&rest[..close])?;
            let head = Word::parse(&rest[close + 1..])?;
            if period.is_empty() {
                return Err(Error::Parse("empty period".into()));
            }
            Ok(EPSeq::left(&period, &head))
        } else if let Some(body) = s.strip_suffix(")*") {
            let open = body
                .find('(')
                .ok_or_else(|| Error::Parse(format!("missing '(' in {s:?}")))?;
            let head = Word::parse(&body[..open])?;
            let period = Word::parse(&body[open + 1..])?;
            if period.is_empty() {
                return Err(Error::Parse("empty period".into()));
            }
            Ok(EPSeq::right(&head, &period))
        } else {
            Err(Error::Parse(format!(
                "{s:?} is neither \"HEAD(PERIOD)*\" nor \"*(PERIOD)HEAD\""
            )))
        }
    }
}

/// Parity-lexicographic order on right-infinite sequences. Total: a first
/// difference, if any, appears within the joint period.
pub fn plex_right(a: &EPSeq, b: &EPSeq) -> Ordering {
    assert_eq!(a.dir(), Direction::Right);
    assert_eq!(b.dir(), Direction::Right);
    let bound = a.head_len() + b.head_len() + a.period_len().lcm(&b.period_len()) + 1;
    let mut ones = 0usize;
    for i in 1..=bound {
        let (x, y) = (a.at(i), b.at(i));
        if x != y {
            let lt = x < y;
            let even = ones % 2 == 0;
            return if lt == even { Ordering::Less } else { Ordering::Greater };
        }
        ones += x as usize;
    }
    Ordering::Equal
}

/// Compare a finite word against the same-length prefix of a right-infinite
/// sequence.
pub fn plex_word_vs_prefix(w: &Word, s: &EPSeq) -> Ordering {
    debug_assert_eq!(s.dir(), Direction::Right);
    let mut ones = 0usize;
    for (k, &a) in w.symbols().iter().enumerate() {
        let b = s.at(k + 1);
        if a != b {
            let lt = a < b;
            let even = ones % 2 == 0;
            return if lt == even { Ordering::Less } else { Ordering::Greater };
        }
        ones += a as usize;
    }
    Ordering::Equal
}

impl fmt::Display for EPSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dir {
            Direction::Right => {
                let head = Word::new(self.head.clone());
                let period = Word::new(self.period.clone());
                write!(f, "{head}({period})*")
            }
            Direction::Left => {
                let head = Word::from_index_order(self.head.clone());
                let period = Word::from_index_order(self.period.clone());
                write!(f, "*({period}){head}")
            }
        }
    }
}

impl fmt::Debug for EPSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl serde::Serialize for EPSeq {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> EPSeq {
        EPSeq::parse(s).unwrap()
    }

    #[test]
    fn canonical_form() {
        // 1001(101)* reads 1001 101 101 … = 10 011 011 … = 10(011)*
        let a = l("1001(101)*");
        let b = l("10(011)*");
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "10(011)*");
        // period is primitive
        let c = l("(101101)*");
        assert_eq!(c.period_len(), 3);
    }

    #[test]
    fn left_indexing() {
        // *(001) is …001001; s_1 = 1, s_2 = 0, s_3 = 0, s_4 = 1
        let s = l("*(001)");
        assert_eq!(s.at(1), 1);
        assert_eq!(s.at(2), 0);
        assert_eq!(s.at(3), 0);
        assert_eq!(s.at(4), 1);
        // *(001)11 is …00100111
        let t = l("*(001)11");
        assert_eq!(t.at(1), 1);
        assert_eq!(t.at(2), 1);
        assert_eq!(t.at(3), 1);
        assert_eq!(t.at(4), 0);
        assert_eq!(t.at(5), 0);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(l("(101)*").shift(1), l("(011)*"));
        assert_eq!(l("1001(101)*").shift(4), l("(101)*"));
        let s = l("10(011)*");
        assert_eq!(s.shift(0), s);
    }

    #[test]
    fn plex_periodic_resolution() {
        // (101)* ≺ (100)*: first difference at index 3 after the odd prefix "10"
        assert_eq!(plex_right(&l("(101)*"), &l("(100)*")), Ordering::Less);
        assert_eq!(plex_right(&l("(101)*"), &l("(101)*")), Ordering::Equal);
    }

    #[test]
    fn tails() {
        assert!(l("*(01)").same_tail(&l("*(01)11")));
        assert!(!l("*(01)").same_tail(&l("*(10)")));
        let s = l("*(001)11");
        assert!(s.same_tail(&s.tail_class()));
        // shifting by a full period preserves the tail
        let t = l("*(001)");
        assert!(t.same_tail(&t.shift(3)));
        assert!(!t.same_tail(&t.shift(1)));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["*(01)", "*(001)11", "10(011)*", "(10010)*", "*(100101100)"] {
            let e = l(s);
            assert_eq!(EPSeq::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn finite_word_reading_order() {
        // left tail …001001: s_4 s_3 s_2 s_1 = 1001
        let s = l("*(001)");
        assert_eq!(s.finite_word(4).to_string(), "1001");
        let r = l("10(011)*");
        assert_eq!(r.finite_word(5).to_string(), "10011");
    }
}
