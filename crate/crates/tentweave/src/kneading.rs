//! Kneading sequences and admissibility.
//!
//! The kneading sequence ν = c_1c_2… is the itinerary of T(c). A finite word
//! is admissible when every suffix sits between the shifted kneading sequence
//! and the kneading sequence itself in the parity-lexicographic order; an
//! infinite sequence is admissible when every finite subword is. Left tails
//! that are eventually zero are the ray tails and are admissible exactly when
//! their finite nonzero part is.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::epseq::{plex_right, Direction, EPSeq};
use crate::error::{Error, Result};
use crate::numeric::{tent, SQRT2};
use crate::word::Word;

/// A kneading sequence: exact eventually periodic, or a prefix of declared
/// depth when the orbit did not close.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Kneading {
    Exact(EPSeq),
    Prefix(Word),
}

impl Kneading {
    pub fn parse(s: &str) -> Result<Kneading> {
        let s = s.trim();
        let k = if s.contains('(') {
            Kneading::Exact(EPSeq::parse(s)?)
        } else {
            Kneading::Prefix(Word::parse(s)?)
        };
        if k.known_len() < 2 || k.at(1)? != 1 || k.at(2)? != 0 {
            return Err(Error::Parse(format!(
                "kneading sequence must start with 10, got {s:?}"
            )));
        }
        Ok(k)
    }

    pub fn exact(&self) -> Result<&EPSeq> {
        match self {
            Kneading::Exact(e) => Ok(e),
            Kneading::Prefix(_) => Err(Error::NotFiniteOrbit),
        }
    }

    /// Depth to which symbols are known; `usize::MAX` for exact sequences.
    pub fn known_len(&self) -> usize {
        match self {
            Kneading::Exact(_) => usize::MAX,
            Kneading::Prefix(w) => w.len(),
        }
    }

    pub fn at(&self, i: usize) -> Result<u8> {
        match self {
            Kneading::Exact(e) => Ok(e.at(i)),
            Kneading::Prefix(w) => {
                if i <= w.len() {
                    Ok(w.symbols()[i - 1])
                } else {
                    Err(Error::InsufficientDepth { have: w.len(), need: i })
                }
            }
        }
    }

    /// κ = min{i−2 : i ≥ 3, c_i = 1}; `None` when no such i exists (ν = 10^∞).
    pub fn kappa(&self) -> Result<Option<usize>> {
        match self {
            Kneading::Exact(e) => {
                let bound = e.head_len() + e.period_len() + 2;
                for i in 3..=bound.max(3) {
                    if e.at(i) == 1 {
                        return Ok(Some(i - 2));
                    }
                }
                Ok(None)
            }
            Kneading::Prefix(w) => {
                for i in 3..=w.len() {
                    if w.symbols()[i - 1] == 1 {
                        return Ok(Some(i - 2));
                    }
                }
                Err(Error::InsufficientDepth { have: w.len(), need: w.len() + 1 })
            }
        }
    }
}

impl std::fmt::Display for Kneading {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kneading::Exact(e) => write!(f, "{e}"),
            Kneading::Prefix(w) => write!(f, "{w}"),
        }
    }
}

/// `true` iff `c_2…c_{2+n−i} ⪯ a_i…a_n ⪯ c_1…c_{1+n−i}` for every suffix.
pub fn is_admissible_word(w: &Word, nu: &Kneading) -> Result<bool> {
    let need = w.len() + 1;
    if nu.known_len() < need {
        return Err(Error::InsufficientDepth { have: nu.known_len(), need });
    }
    match nu {
        Kneading::Exact(e) => Ok(admissible_word_exact(w, e)),
        Kneading::Prefix(p) => {
            let syms = w.symbols();
            for i in 0..syms.len() {
                if !suffix_in_band_prefix(&syms[i..], p) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn suffix_in_band_prefix(suffix: &[u8], nu: &Word) -> bool {
    let m = suffix.len();
    let upper = &nu.symbols()[..m];
    let lower = &nu.symbols()[1..m + 1];
    crate::word::plex_slices(suffix, upper) != Ordering::Greater
        && crate::word::plex_slices(suffix, lower) != Ordering::Less
}

pub fn admissible_word_exact(w: &Word, nu: &EPSeq) -> bool {
    let syms = w.symbols();
    for i in 0..syms.len() {
        if !suffix_in_band(&syms[i..], nu) {
            return false;
        }
    }
    true
}

fn suffix_in_band(suffix: &[u8], nu: &EPSeq) -> bool {
    // suffix ⪯ ν-prefix and suffix ⪰ σν-prefix, at its own length
    let mut ones_u = 0usize; // ones of ν-prefix so far
    let mut ones_l = 0usize; // ones of σν-prefix so far
    let mut upper_open = true;
    let mut lower_open = true;
    for (k, &a) in suffix.iter().enumerate() {
        let cu = nu.at(k + 1);
        let cl = nu.at(k + 2);
        if upper_open && a != cu {
            let lt = a < cu;
            if lt != (ones_u % 2 == 0) {
                return false; // suffix ≻ ν-prefix
            }
            upper_open = false;
        }
        if lower_open && a != cl {
            let lt = a < cl;
            if lt == (ones_l % 2 == 0) {
                return false; // suffix ≺ σν-prefix
            }
            lower_open = false;
        }
        if !upper_open && !lower_open {
            return true;
        }
        ones_u += cu as usize;
        ones_l += cl as usize;
    }
    true
}

/// Incremental admissibility: given that `rest` (index order, `rest[0]=s_1`)
/// spells an admissible word, is `sym·rest` still admissible? Only the full
/// new word needs a band check.
pub(crate) fn prepend_admissible(sym: u8, rest_idx: &[u8], nu: &EPSeq) -> bool {
    // reading order: sym, rest[t-1], rest[t-2], …, rest[0]
    let t = rest_idx.len();
    let mut ones_u = 0usize;
    let mut ones_l = 0usize;
    let mut upper_open = true;
    let mut lower_open = true;
    for k in 0..=t {
        let a = if k == 0 { sym } else { rest_idx[t - k] };
        let cu = nu.at(k + 1);
        let cl = nu.at(k + 2);
        if upper_open && a != cu {
            if (a < cu) != (ones_u % 2 == 0) {
                return false;
            }
            upper_open = false;
        }
        if lower_open && a != cl {
            if (a < cl) == (ones_l % 2 == 0) {
                return false;
            }
            lower_open = false;
        }
        if !upper_open && !lower_open {
            return true;
        }
        ones_u += cu as usize;
        ones_l += cl as usize;
    }
    true
}

/// Scan bound beyond which subword checks of an eventually periodic sequence
/// repeat.
pub(crate) fn seq_scan_bound(s: &EPSeq, nu: &EPSeq) -> usize {
    s.head_len() + nu.head_len() + 2 * s.period_len().lcm(&nu.period_len()) + 2
}

/// Admissibility of an eventually periodic sequence: every finite subword is
/// admissible. Left tails of the ray (eventually zero) are admissible when
/// the word below the deepest 1 is.
pub fn is_admissible_seq(s: &EPSeq, nu: &Kneading) -> Result<bool> {
    let nu = nu.exact()?;
    Ok(admissible_seq_exact(s, nu))
}

pub fn admissible_seq_exact(s: &EPSeq, nu: &EPSeq) -> bool {
    if s.is_c_tail() {
        if s.is_all_zero() {
            return true;
        }
        let top = (1..=s.head_len()).rev().find(|&i| s.at(i) == 1).unwrap();
        return admissible_word_exact(&s.finite_word(top), nu);
    }
    let bound = seq_scan_bound(s, nu);
    // every subword sits in the band; enumerate by top index, extending down
    for t in 1..=bound {
        let mut ones_u = 0usize;
        let mut ones_l = 0usize;
        let mut upper_open = true;
        let mut lower_open = true;
        for k in 0..t.min(bound) {
            let a = s.at(t - k);
            let cu = nu.at(k + 1);
            let cl = nu.at(k + 2);
            if upper_open && a != cu {
                if (a < cu) != (ones_u % 2 == 0) {
                    return false;
                }
                upper_open = false;
            }
            if lower_open && a != cl {
                if (a < cl) == (ones_l % 2 == 0) {
                    return false;
                }
                lower_open = false;
            }
            if !upper_open && !lower_open {
                break;
            }
            ones_u += cu as usize;
            ones_l += cl as usize;
        }
    }
    true
}

/// A sequence qualifies as a kneading sequence when it starts with 10, is
/// shift-admissible with respect to itself, and (when periodic) is the
/// parity-lexicographically smaller closure of its critical orbit.
pub fn kneading_is_valid(nu: &EPSeq) -> bool {
    if nu.dir() != Direction::Right || nu.at(1) != 1 || nu.at(2) != 0 {
        return false;
    }
    if !admissible_seq_exact(nu, nu) {
        return false;
    }
    if nu.head_len() == 0 {
        // periodic: the alternative closure flips the last symbol of the period
        let p = nu.period_len();
        let mut alt = (1..=p).map(|i| nu.at(i)).collect::<Vec<_>>();
        alt[p - 1] = 1 - alt[p - 1];
        let alt = EPSeq::periodic(alt, Direction::Right);
        if plex_right(nu, &alt) == Ordering::Greater {
            return false;
        }
    }
    true
}

/// Critical-hit tolerance for deciding that an orbit point equals c.
pub const CRITICAL_HIT_TOL: f64 = 1e-12;

/// Iterates the critical orbit of `T_slope` and reads off symbols. If an
/// iterate lands on the critical point (within tolerance, confirmed by
/// re-iterating the closure), the ambiguity is resolved to the
/// parity-lexicographically smaller periodic closure, giving an exact
/// sequence. If the iterate reaches the fixed point 0, the sequence closes as
/// …0^∞. Otherwise the first `depth` symbols are returned as a prefix.
pub fn kneading_from_slope(slope: f64, depth: usize) -> Result<Kneading> {
    if !(slope > SQRT2 && slope <= 2.0) {
        return Err(Error::SlopeOutOfRange(slope));
    }
    assert!(depth >= 2, "depth must be at least 2");
    let c = 0.5f64;
    let mut symbols: Vec<u8> = Vec::with_capacity(depth);
    let mut x = c;
    for step in 1..=depth {
        x = tent(slope, x);
        if x == 0.0 {
            // absorbed at the fixed point: …(0)^∞ exactly
            symbols.push(0);
            return Ok(Kneading::Exact(EPSeq::new(symbols, vec![0], Direction::Right)));
        }
        if (x - c).abs() < CRITICAL_HIT_TOL && step >= 2 {
            // candidate periodic orbit of period `step`
            if !confirm_periodic(slope, step) {
                return Err(Error::UnresolvedCriticalHit { step });
            }
            let mut with0 = symbols.clone();
            with0.push(0);
            let mut with1 = symbols;
            with1.push(1);
            let a = EPSeq::periodic(with0, Direction::Right);
            let b = EPSeq::periodic(with1, Direction::Right);
            let nu = if plex_right(&a, &b) == Ordering::Less { a } else { b };
            return Ok(Kneading::Exact(nu));
        }
        symbols.push(if x < c { 0 } else { 1 });
    }
    Ok(Kneading::Prefix(Word::new(symbols)))
}

fn confirm_periodic(slope: f64, period: usize) -> bool {
    // re-iterate from c: the orbit must repeat with the claimed period
    let c = 0.5f64;
    let mut first = Vec::with_capacity(period);
    let mut x = c;
    for _ in 0..period {
        x = tent(slope, x);
        first.push(x);
    }
    let mut y = c; // treat the hit as exact and go around again
    for k in 0..period {
        y = tent(slope, y);
        if (y - first[k]).abs() > CRITICAL_HIT_TOL * 32.0 {
            return false;
        }
    }
    true
}

/// Slope whose kneading sequence matches `target` to the given depth, found
/// by bisection (the kneading sequence is plex-monotone in the slope).
pub fn slope_for_kneading(target: &EPSeq, depth: usize) -> f64 {
    let goal = target.finite_word(depth);
    let mut lo = SQRT2 + 1e-9;
    let mut hi = 2.0f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let got = match kneading_from_slope(mid, depth) {
            Ok(k) => (1..=depth)
                .map(|i| k.at(i).unwrap_or(0))
                .collect::<Vec<_>>(),
            Err(_) => vec![0; depth],
        };
        match crate::word::plex_slices(&got, goal.symbols()) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return mid,
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(s: &str) -> Kneading {
        Kneading::Exact(EPSeq::parse(s).unwrap())
    }

    #[test]
    fn admissible_words_golden() {
        let nu = exact("(101)*");
        // admissible iff no two consecutive zeros
        assert!(!is_admissible_word(&Word::parse("00").unwrap(), &nu).unwrap());
        assert!(is_admissible_word(&Word::parse("101101").unwrap(), &nu).unwrap());
        assert!(is_admissible_word(&Word::parse("10110").unwrap(), &nu).unwrap());
        assert!(!is_admissible_word(&Word::parse("100110").unwrap(), &nu).unwrap());
    }

    #[test]
    fn kneading_prefix_bounds_itself() {
        for s in ["(101)*", "10(011)*", "(10010)*", "1(0)*"] {
            let nu = EPSeq::parse(s).unwrap();
            for m in 1..=12 {
                assert!(
                    admissible_word_exact(&nu.finite_word(m), &nu),
                    "prefix of {s} at {m}"
                );
            }
        }
    }

    #[test]
    fn admissible_seqs() {
        let nu = exact("(101)*");
        assert!(is_admissible_seq(&EPSeq::parse("*(10)").unwrap(), &nu).unwrap());
        // …010100 has head "00"
        let bad = EPSeq::left(&Word::parse("01").unwrap(), &Word::parse("00").unwrap());
        assert!(!is_admissible_seq(&bad, &nu).unwrap());
        // 1^∞ tails are always admissible
        for s in ["(101)*", "(10010)*", "10(011)*"] {
            let nu = exact(s);
            assert!(is_admissible_seq(&EPSeq::parse("*(1)").unwrap(), &nu).unwrap());
        }
    }

    #[test]
    fn ray_tails() {
        let nu = exact("(101)*");
        let zero = EPSeq::parse("*(0)").unwrap();
        assert!(admissible_seq_exact(&zero, nu.exact().unwrap()));
        let ray = EPSeq::parse("*(0)101").unwrap();
        assert!(admissible_seq_exact(&ray, nu.exact().unwrap()));
        let bad_ray = EPSeq::parse("*(0)1001").unwrap();
        assert!(!admissible_seq_exact(&bad_ray, nu.exact().unwrap()));
    }

    #[test]
    fn from_slope() {
        // slope 2: the Knaster sequence, exactly
        assert_eq!(kneading_from_slope(2.0, 10).unwrap(), exact("1(0)*"));
        // golden slope: period-3 orbit, resolved to the smaller closure
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert_eq!(kneading_from_slope(phi, 30).unwrap(), exact("(101)*"));
        // generic slope: plain prefix
        let k = kneading_from_slope(1.8, 5).unwrap();
        assert_eq!(k, Kneading::Prefix(Word::parse("10011").unwrap()));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(Kneading::parse("10010(1)*").unwrap().kappa().unwrap(), Some(2));
        assert_eq!(exact("(101)*").kappa().unwrap(), Some(1));
        assert_eq!(exact("1(0)*").kappa().unwrap(), None);
        assert_eq!(Kneading::parse("10010").unwrap().kappa().unwrap(), Some(2));
    }

    #[test]
    fn validity() {
        assert!(kneading_is_valid(&EPSeq::parse("(101)*").unwrap()));
        assert!(kneading_is_valid(&EPSeq::parse("(10010)*").unwrap()));
        assert!(kneading_is_valid(&EPSeq::parse("1(0)*").unwrap()));
        // (100)* loses to its own alternative closure (101)*
        assert!(!kneading_is_valid(&EPSeq::parse("(100)*").unwrap()));
        // does not start with 10
        assert!(!kneading_is_valid(&EPSeq::parse("(110)*").unwrap()));
        // not shift-admissible: the shift by 2 exceeds the sequence
        assert!(!kneading_is_valid(&EPSeq::parse("(10100)*").unwrap()));
    }

    #[test]
    fn slope_search() {
        let target = EPSeq::parse("(10010)*").unwrap();
        let s = slope_for_kneading(&target, 40);
        let k = kneading_from_slope(s, 40).unwrap();
        for i in 1..=40 {
            assert_eq!(k.at(i).unwrap(), target.at(i));
        }
    }
}
