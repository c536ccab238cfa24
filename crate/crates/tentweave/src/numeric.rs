//! Numeric tent-map oracle.
//!
//! Everything here is generic over the scalar type through [`Real`]; the
//! crate root exports `f64` aliases. Backward intervals use outward rounding
//! so that containment claims never fail to floating-point error.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::word::Word;

/// Floating scalar with directed-rounding neighbours.
pub trait Real: Float {
    fn next_up_(self) -> Self;
    fn next_down_(self) -> Self;
    fn from_f64_(x: f64) -> Self;
}

macro_rules! impl_real {
    ($t:ty, $bits:ty) => {
        impl Real for $t {
            fn next_up_(self) -> Self {
                if self.is_nan() || self == <$t>::INFINITY {
                    return self;
                }
                let bits = self.to_bits();
                let next = if self == 0.0 {
                    1
                } else if self > 0.0 {
                    bits + 1
                } else {
                    bits - 1
                };
                <$t>::from_bits(next)
            }
            fn next_down_(self) -> Self {
                -(-self).next_up_()
            }
            fn from_f64_(x: f64) -> Self {
                x as $t
            }
        }
    };
}

impl_real!(f64, u64);
impl_real!(f32, u32);

pub fn tent<F: Real>(slope: F, t: F) -> F {
    (slope * t).min(slope * (F::one() - t))
}

pub const SQRT2: f64 = std::f64::consts::SQRT_2;

/// A tent map with its critical orbit cached.
#[derive(Clone, Debug)]
pub struct TentParams<F> {
    pub slope: F,
    orbit: Vec<F>, // orbit[i] = T^i(c), starting at orbit[0] = c
}

impl<F: Real> TentParams<F> {
    pub fn new(slope: F, orbit_depth: usize) -> Result<Self> {
        let s = slope.to_f64().unwrap_or(f64::NAN);
        if !(s > SQRT2 && s <= 2.0) {
            return Err(Error::SlopeOutOfRange(s));
        }
        let c = F::from_f64_(0.5);
        let mut orbit = Vec::with_capacity(orbit_depth + 1);
        orbit.push(c);
        let mut x = c;
        for _ in 0..orbit_depth {
            x = tent(slope, x);
            orbit.push(x);
        }
        Ok(TentParams { slope, orbit })
    }

    pub fn critical(&self) -> F {
        F::from_f64_(0.5)
    }

    /// `T^i(c)`, extending the cache as needed.
    pub fn orbit(&self, i: usize) -> F {
        if i < self.orbit.len() {
            self.orbit[i]
        } else {
            let mut x = *self.orbit.last().unwrap();
            for _ in self.orbit.len()..=i {
                x = tent(self.slope, x);
            }
            x
        }
    }

    pub fn orbit_depth(&self) -> usize {
        self.orbit.len() - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval<F> {
    pub lo: F,
    pub hi: F,
}

impl<F: Real> Interval<F> {
    pub fn contains(&self, other: &Interval<F>) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn hausdorff(&self, other: &Interval<F>) -> F {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }
}

fn clamp01<F: Real>(x: F) -> F {
    x.max(F::zero()).min(F::one())
}

/// Outward-rounded image of a closed interval under the tent map.
fn tent_image<F: Real>(p: &TentParams<F>, iv: Interval<F>) -> Interval<F> {
    let c = p.critical();
    let (a, b) = (iv.lo, iv.hi);
    let ta = tent(p.slope, a);
    let tb = tent(p.slope, b);
    let (lo, hi) = if b <= c {
        (ta, tb)
    } else if a >= c {
        (tb, ta)
    } else {
        (ta.min(tb), p.slope * c)
    };
    Interval {
        lo: clamp01(lo.next_down_()),
        hi: clamp01(hi.next_up_()),
    }
}

/// Values of `π_0` over all points whose backward itinerary begins with the
/// given word: `I(s_1…s_k) = T(branch(s_1) ∩ T(branch(s_2) ∩ … ))`.
///
/// The input is the reading-order word `s_k…s_1` (a truncated left tail), so
/// the deepest symbol comes first. Errors with [`Error::EmptyInterval`] when
/// no backward orbit realizes the word.
pub fn backward_interval<F: Real>(w: &Word, p: &TentParams<F>) -> Result<Interval<F>> {
    let c = p.critical();
    let mut iv = Interval { lo: F::zero(), hi: F::one() };
    for &sym in w.symbols() {
        let branch = if sym == 0 {
            Interval { lo: F::zero(), hi: c }
        } else {
            Interval { lo: c, hi: F::one() }
        };
        let lo = iv.lo.max(branch.lo);
        let hi = iv.hi.min(branch.hi);
        if lo > hi {
            return Err(Error::EmptyInterval);
        }
        iv = tent_image(p, Interval { lo, hi });
    }
    Ok(iv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_range() {
        assert!(TentParams::<f64>::new(1.2, 8).is_err());
        assert!(TentParams::<f64>::new(2.0, 8).is_ok());
    }

    #[test]
    fn backward_interval_base_cases() {
        let p = TentParams::<f64>::new(1.8, 64).unwrap();
        let all = backward_interval(&Word::empty(), &p).unwrap();
        assert_eq!((all.lo, all.hi), (0.0, 1.0));
        let one = backward_interval(&Word::parse("1").unwrap(), &p).unwrap();
        assert!(one.lo <= 1e-12 && (one.hi - 0.9).abs() < 1e-9);
    }

    #[test]
    fn nesting() {
        let p = TentParams::<f64>::new(1.8, 64).unwrap();
        // deepening the backward word shrinks the interval: I(a·w) ⊆ I(w)
        let outer = backward_interval(&Word::parse("011").unwrap(), &p).unwrap();
        let inner = backward_interval(&Word::parse("1011").unwrap(), &p).unwrap();
        assert!(outer.contains(&inner));
    }
}
