//! Basic arcs of the inverse limit.
//!
//! A left-infinite admissible tail ⃖s determines the basic arc A(⃖s). The
//! depths n at which `s_{n-1}…s_1` reproduces the start of the kneading
//! sequence control everything: the deepest odd-parity match is τ_L, the
//! deepest even-parity match is τ_R, and the arc projects to
//! `[T^{τ_L}(c), T^{τ_R}(c)]`. For eventually periodic data the match set is
//! decided exactly: matches recur beyond a joint-period window or stop.

use std::cmp::Ordering;

use num_integer::Integer;

use serde::Serialize;

use crate::epseq::{plex_right, Direction, EPSeq};
use crate::error::{Error, Result};
use crate::kneading::admissible_seq_exact;
use crate::numeric::TentParams;
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tau {
    Finite(usize),
    Infinite,
    /// Only for the all-zero tail, whose τ_L is not defined.
    Undefined,
}

impl Serialize for Tau {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Tau::Finite(n) => ser.serialize_u64(*n as u64),
            Tau::Infinite => ser.serialize_str("infinite"),
            Tau::Undefined => ser.serialize_str("undefined"),
        }
    }
}

/// Exact description of `{n : s_{n-1}…s_1 = c_1…c_{n-1}}` for eventually
/// periodic data.
#[derive(Clone, Debug)]
pub struct MatchSet {
    /// All matches with `n ≤ hi`, tagged with the parity of `#1(c_1…c_{n-1})`.
    pub finite: Vec<(usize, bool)>, // (n, parity_odd)
    /// Matches inside the recurrence window that repeat forever.
    pub recurring: Vec<(usize, bool)>,
    /// Window start: matches above `n0` are exactly the recurring ones mod π.
    pub n0: usize,
    pub pi: usize,
}

impl MatchSet {
    pub fn has_infinite(&self, parity_odd: bool) -> bool {
        self.recurring.iter().any(|&(_, p)| p == parity_odd)
    }

    pub fn deepest_finite(&self, parity_odd: bool, min_n: usize) -> Option<usize> {
        self.finite
            .iter()
            .filter(|&&(n, p)| p == parity_odd && n >= min_n && n <= self.n0 + self.pi)
            .map(|&(n, _)| n)
            .max()
    }
}

fn match_at(s: &EPSeq, nu: &EPSeq, n: usize) -> bool {
    (1..n).all(|i| s.at(i) == nu.at(n - i))
}

/// Computes the match set. Matches with `n > n0` recur with period π = twice
/// the joint period (doubling keeps prefix parities stable), so scanning one
/// window decides the infinite side exactly.
pub fn match_set(s: &EPSeq, nu: &EPSeq) -> MatchSet {
    debug_assert_eq!(s.dir(), Direction::Left);
    debug_assert_eq!(nu.dir(), Direction::Right);
    let pi = 2 * s.period_len().lcm(&nu.period_len());
    let n0 = s.head_len() + nu.head_len() + 2 * pi + 4;
    let hi = n0 + 2 * pi;
    let mut finite = Vec::new();
    for n in 1..=hi {
        if match_at(s, nu, n) {
            let odd = nu.ones_through(n - 1) % 2 == 1;
            finite.push((n, odd));
        }
    }
    let recurring = finite
        .iter()
        .copied()
        .filter(|&(n, _)| n > n0 && n <= n0 + pi && finite.iter().any(|&(m, _)| m == n + pi))
        .collect();
    MatchSet { finite, recurring, n0, pi }
}

/// τ_L: the deepest n > 1 with an odd-parity match.
pub fn tau_left(s: &EPSeq, nu: &EPSeq) -> Tau {
    if s.is_all_zero() {
        return Tau::Undefined;
    }
    let ms = match_set(s, nu);
    if ms.has_infinite(true) {
        Tau::Infinite
    } else {
        match ms.deepest_finite(true, 2) {
            Some(n) => Tau::Finite(n),
            None => Tau::Undefined,
        }
    }
}

/// τ_R: the deepest n ≥ 1 with an even-parity match. Always defined; the
/// empty match at n = 1 has even parity.
pub fn tau_right(s: &EPSeq, nu: &EPSeq) -> Tau {
    let ms = match_set(s, nu);
    if ms.has_infinite(false) {
        Tau::Infinite
    } else {
        Tau::Finite(ms.deepest_finite(false, 1).expect("n = 1 always matches"))
    }
}

/// One end of an arc projection on the interval.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProjEnd {
    /// The left end of the all-zero arc, at the fixed point 0.
    Zero,
    /// The critical orbit point `T^n(c)`.
    Orbit(usize),
}

impl Serialize for ProjEnd {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProjEnd::Zero => ser.serialize_str("zero"),
            ProjEnd::Orbit(n) => ser.serialize_u64(*n as u64),
        }
    }
}

/// Order of critical orbit points: `T^a(c) ≤ T^b(c)` iff the itinerary of
/// `T^a(c)` precedes that of `T^b(c)` parity-lexicographically.
pub fn orbit_point_cmp(nu: &EPSeq, a: usize, b: usize) -> Ordering {
    plex_right(&nu.shift(a - 1), &nu.shift(b - 1))
}

fn orbit_index_reduce(nu: &EPSeq, n: usize) -> usize {
    if n > nu.head_len() {
        nu.head_len() + 1 + (n - nu.head_len() - 1) % nu.period_len()
    } else {
        n
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BasicArc {
    pub itinerary: EPSeq,
    pub tau_l: Tau,
    pub tau_r: Tau,
    /// Projection `[T^l(c), T^r(c)]` as orbit indices (or the fixed point 0).
    pub proj_idx: (ProjEnd, ProjEnd),
    /// Numeric projection, present when a slope is bound.
    pub proj_num: Option<(f64, f64)>,
    pub degenerate: bool,
}

/// Fills in τ values and the projection of the basic arc.
pub fn projection(s: &EPSeq, nu: &EPSeq, slope: Option<f64>) -> Result<BasicArc> {
    let (tau_l, tau_r, left_end, right_end);
    if s.is_all_zero() {
        tau_l = Tau::Undefined;
        tau_r = Tau::Finite(1);
        left_end = ProjEnd::Zero;
        right_end = ProjEnd::Orbit(1);
    } else {
        let ms = match_set(s, nu);
        // left end: sup of T^n(c) over odd matches; right end: inf over even
        let pick = |parity_odd: bool, want_max: bool| -> Result<(Tau, ProjEnd)> {
            if ms.has_infinite(parity_odd) {
                let reps: Vec<usize> = ms
                    .recurring
                    .iter()
                    .filter(|&&(_, p)| p == parity_odd)
                    .map(|&(n, _)| orbit_index_reduce(nu, n))
                    .collect();
                let best = reps
                    .into_iter()
                    .reduce(|x, y| match orbit_point_cmp(nu, x, y) {
                        Ordering::Greater => if want_max { x } else { y },
                        Ordering::Less => if want_max { y } else { x },
                        Ordering::Equal => x,
                    })
                    .expect("infinite side has a recurring representative");
                Ok((Tau::Infinite, ProjEnd::Orbit(best)))
            } else {
                let min_n = if parity_odd { 2 } else { 1 };
                let n = ms
                    .deepest_finite(parity_odd, min_n)
                    .ok_or(Error::TauInfinite)?;
                Ok((Tau::Finite(n), ProjEnd::Orbit(n)))
            }
        };
        let (tl, le) = pick(true, true)?;
        let (tr, re) = pick(false, false)?;
        tau_l = tl;
        tau_r = tr;
        left_end = le;
        right_end = re;
    }
    let degenerate = match (left_end, right_end) {
        (ProjEnd::Orbit(a), ProjEnd::Orbit(b)) => orbit_point_cmp(nu, a, b) == Ordering::Equal,
        _ => false,
    };
    let proj_num = match slope {
        Some(sl) => {
            let params = TentParams::<f64>::new(sl, 256)?;
            let val = |e: ProjEnd| match e {
                ProjEnd::Zero => 0.0,
                ProjEnd::Orbit(n) => params.orbit(n),
            };
            Some((val(left_end), val(right_end)))
        }
        None => None,
    };
    Ok(BasicArc {
        itinerary: s.clone(),
        tau_l,
        tau_r,
        proj_idx: (left_end, right_end),
        proj_num,
        degenerate,
    })
}

/// The tail obtained by flipping the symbol at τ_R; its arc shares the right
/// endpoint with A(⃖s).
pub fn right_neighbour(s: &EPSeq, nu: &EPSeq) -> Result<EPSeq> {
    match tau_right(s, nu) {
        Tau::Finite(n) => Ok(flip_at(s, n)),
        _ => Err(Error::TauInfinite),
    }
}

/// The tail obtained by flipping the symbol at τ_L.
pub fn left_neighbour(s: &EPSeq, nu: &EPSeq) -> Result<EPSeq> {
    match tau_left(s, nu) {
        Tau::Finite(n) => Ok(flip_at(s, n)),
        _ => Err(Error::TauInfinite),
    }
}

pub(crate) fn flip_at(s: &EPSeq, n: usize) -> EPSeq {
    let mut head: Vec<u8> = (1..=n.max(s.head_len())).map(|i| s.at(i)).collect();
    head[n - 1] = 1 - head[n - 1];
    let period: Vec<u8> = (1..=s.period_len())
        .map(|j| s.at(n.max(s.head_len()) + j))
        .collect();
    EPSeq::new(head, period, s.dir())
}

/// A point of the inverse limit: backward tail plus forward itinerary. The
/// first symbol of `right` codes the coordinate π_0 itself.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PointItinerary {
    pub left: EPSeq,
    pub right: EPSeq,
}

impl PointItinerary {
    pub fn new(left: EPSeq, right: EPSeq) -> Self {
        assert_eq!(left.dir(), Direction::Left);
        assert_eq!(right.dir(), Direction::Right);
        PointItinerary { left, right }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once('.')
            .ok_or_else(|| Error::Parse(format!("point itinerary {s:?} needs a '.'")))?;
        Ok(PointItinerary::new(EPSeq::parse(l)?, EPSeq::parse(r)?))
    }

    /// Forward shift: σ^k moves k symbols from the forward itinerary into
    /// the backward tail.
    pub fn shift_forward(&self, k: usize) -> PointItinerary {
        let low: Vec<u8> = (1..=k).map(|j| self.right.at(k + 1 - j)).collect();
        PointItinerary {
            left: self.left.with_low(&low),
            right: self.right.shift(k),
        }
    }

    /// Backward shift: σ^{-k} moves k symbols from the backward tail into
    /// the forward itinerary.
    pub fn shift_backward(&self, k: usize) -> PointItinerary {
        let w = self.left.finite_word(k);
        PointItinerary {
            left: self.left.shift(k),
            right: self.right.with_low(w.symbols()),
        }
    }

    /// Admissibility of the full two-sided sequence.
    pub fn is_admissible(&self, nu: &EPSeq) -> bool {
        if !admissible_seq_exact(&self.left, nu) {
            return false;
        }
        // subwords crossing the dot: low part of the left tail then a prefix
        // of the forward itinerary
        let lb = crate::kneading::seq_scan_bound(&self.left, nu);
        let rb = self.right.head_len()
            + nu.head_len()
            + 2 * self.right.period_len().lcm(&nu.period_len())
            + 2;
        if self.left.is_c_tail() {
            let top = (1..=self.left.head_len()).rev().find(|&i| self.left.at(i) == 1);
            let low = match top {
                Some(t) => self.left.finite_word(t),
                None => Word::empty(),
            };
            let w = low.concat(&self.right.finite_word(rb));
            // a ray itinerary 0^∞ w is admissible when the part from the
            // deepest 1 on is; leading zeros do not count against it
            let first_one = w.symbols().iter().position(|&b| b == 1);
            return match first_one {
                None => true,
                Some(i) => crate::kneading::admissible_word_exact(
                    &Word::new(w.symbols()[i..].to_vec()),
                    nu,
                ),
            };
        }
        for t in 1..=lb {
            let w = self.left.finite_word(t).concat(&self.right.finite_word(rb));
            if !crate::kneading::admissible_word_exact(&w, nu) {
                return false;
            }
        }
        true
    }

    /// The flip position of the identified twin itinerary, if this point has
    /// two backward itineraries: the smallest k with a match at k whose
    /// forward continuation is the kneading sequence.
    pub fn twin_flip(&self, nu: &EPSeq) -> Option<usize> {
        let ms = match_set(&self.left, nu);
        for &(k, _) in &ms.finite {
            if self.right == nu.shift(k - 1) {
                return Some(k);
            }
        }
        None
    }

    /// The second backward itinerary, when it exists.
    pub fn twin_backward(&self, nu: &EPSeq) -> Option<EPSeq> {
        self.twin_flip(nu).map(|k| flip_at(&self.left, k))
    }
}

impl std::fmt::Display for PointItinerary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.{}", self.left, self.right)
    }
}

/// Whether the point is on the periodic critical bi-orbit (periodic kneading
/// sequences only).
fn on_critical_biorbit(p: &PointItinerary, nu: &EPSeq) -> bool {
    if nu.head_len() != 0 {
        return false;
    }
    let n = nu.period_len();
    let period_word = Word::new((1..=n).map(|i| nu.at(i)).collect());
    // …PPP.PPP… and its n shifts
    let base = PointItinerary::new(EPSeq::left(&period_word, &Word::empty()), nu.clone());
    (0..n).any(|i| {
        let q = base.shift_forward(i);
        q.left == p.left && q.right == p.right
    })
}

/// Symbolic endpoint test. A point with a unique backward itinerary is an
/// endpoint iff τ_L(⃖x) = ∞ and π_0(x) attains the left end of the arc (or
/// the mirror statement for τ_R). Backward passes through the critical point
/// are shifted away first; the all-zero point and the periodic critical
/// bi-orbit are endpoints.
pub fn is_endpoint(p: &PointItinerary, nu: &EPSeq) -> bool {
    if p.left.is_all_zero() && p.right.is_all_zero() {
        return true;
    }
    if nu.head_len() == 0 && on_critical_biorbit(p, nu) {
        return true;
    }
    // push any backward pass through the critical point into the forward
    // itinerary; endpointness is shift-invariant
    let mut q = p.clone();
    for _ in 0..4 {
        match q.twin_flip(nu) {
            Some(k) => q = q.shift_backward(k),
            None => break,
        }
    }
    if q.left.is_all_zero() {
        return false; // interior of the ray's first arc
    }
    let arc = match projection(&q.left, nu, None) {
        Ok(a) => a,
        Err(_) => return false,
    };
    match (arc.tau_l, arc.proj_idx.0) {
        (Tau::Infinite, ProjEnd::Orbit(n)) => {
            if q.right == nu.shift(n - 1) {
                return true;
            }
        }
        _ => {}
    }
    match (arc.tau_r, arc.proj_idx.1) {
        (Tau::Infinite, ProjEnd::Orbit(n)) => {
            if q.right == nu.shift(n - 1) {
                return true;
            }
        }
        _ => {}
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(s: &str) -> EPSeq {
        EPSeq::parse(s).unwrap()
    }

    fn tail(s: &str) -> EPSeq {
        EPSeq::parse(s).unwrap()
    }

    #[test]
    fn paper_example_tau() {
        // ν = 10010…, ⃖s = …001001: τ_L = 2, τ_R = 5
        let k = nu("(10010)*");
        let s = tail("*(001)");
        assert_eq!(tau_left(&s, &k), Tau::Finite(2));
        assert_eq!(tau_right(&s, &k), Tau::Finite(5));
        let arc = projection(&s, &k, None).unwrap();
        assert_eq!(arc.proj_idx, (ProjEnd::Orbit(2), ProjEnd::Orbit(5)));
        assert!(!arc.degenerate);
    }

    #[test]
    fn golden_phases() {
        let k = nu("(101)*");
        // …101101: the even matches recur every period
        assert_eq!(tau_right(&tail("*(101)"), &k), Tau::Infinite);
        assert_eq!(tau_left(&tail("*(101)"), &k), Tau::Finite(2));
        // …110110: s_1 = 0 kills even matches beyond n = 1
        assert_eq!(tau_right(&tail("*(110)"), &k), Tau::Finite(1));
        assert_eq!(tau_left(&tail("*(110)"), &k), Tau::Infinite);
        // …011011
        assert_eq!(tau_left(&tail("*(011)"), &k), Tau::Infinite);
        assert_eq!(tau_right(&tail("*(011)"), &k), Tau::Finite(1));
    }

    #[test]
    fn golden_projection_numeric() {
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let k = nu("(101)*");
        let arc = projection(&tail("*(110)"), &k, Some(phi)).unwrap();
        let (lo, hi) = arc.proj_num.unwrap();
        assert!((lo - 0.5).abs() < 1e-9, "left end {lo}");
        assert!((hi - 0.8090169943749475).abs() < 1e-9, "right end {hi}");
    }

    #[test]
    fn zero_arc() {
        let k = nu("1(0)*");
        let s = tail("*(0)");
        assert_eq!(tau_left(&s, &k), Tau::Undefined);
        let arc = projection(&s, &k, Some(2.0)).unwrap();
        assert_eq!(arc.proj_idx, (ProjEnd::Zero, ProjEnd::Orbit(1)));
        assert_eq!(arc.proj_num.unwrap(), (0.0, 1.0));
    }

    #[test]
    fn neighbours_paper_figure() {
        let k = nu("(10010)*");
        let s = tail("*(001)");
        // flip at τ_R = 5: …011001; flip at τ_L = 2: …001011
        let r = right_neighbour(&s, &k).unwrap();
        assert_eq!(r.finite_word(6).to_string(), "011001");
        let l = left_neighbour(&s, &k).unwrap();
        assert_eq!(l.finite_word(6).to_string(), "001011");
        // flipping twice returns the original
        assert_eq!(right_neighbour(&r, &k).unwrap(), s);
        assert_eq!(left_neighbour(&l, &k).unwrap(), s);
    }

    #[test]
    fn endpoints() {
        // Knaster: the all-zero point is an endpoint
        let k2 = nu("1(0)*");
        let zero = PointItinerary::parse("*(0).(0)*").unwrap();
        assert!(is_endpoint(&zero, &k2));
        // periodic kneading: the critical bi-orbit points are endpoints
        let k = nu("(101)*");
        let p = PointItinerary::parse("*(101).(101)*").unwrap();
        assert!(is_endpoint(&p, &k));
        // an interior point is not
        let k5 = nu("(10010)*");
        let q = PointItinerary::parse("*(001).(10010)*").unwrap();
        assert!(!is_endpoint(&q, &k5));
    }

    #[test]
    fn twin_itineraries() {
        let k = nu("(10010)*");
        // the right endpoint of the arc …001001 has a twin flipped at 5
        let p = PointItinerary::new(tail("*(001)"), k.shift(4));
        assert_eq!(p.twin_flip(&k), Some(5));
        let twin = p.twin_backward(&k).unwrap();
        assert_eq!(twin.finite_word(6).to_string(), "011001");
    }
}
