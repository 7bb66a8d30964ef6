//! Interval arithmetic over extended rationals.
//!
//! Intervals carry per-endpoint open/closed flags, so all four kinds
//! `[a,b]`, `(a,b]`, `[a,b)`, `(a,b)` are represented by one type. All
//! endpoint arithmetic is exact; there is no floating point anywhere.
//!
//! Values are immutable and operations are pure functions.

mod ext;
pub mod text;
mod union;

pub use ext::ExtRational;
pub use union::IntervalUnion;

use crate::poly::Rat;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntervalError {
    #[error("invalid interval: lower bound exceeds upper bound")]
    InvalidBounds,
    #[error("invalid interval: an infinite endpoint must be open")]
    ClosedInfinity,
    #[error("invalid interval: a degenerate interval must be closed on both sides")]
    OpenDegenerate,
    #[error("division by an interval containing zero; use recip, which returns a union")]
    DivisorContainsZero,
    #[error("reciprocal of zero")]
    RecipOfZero,
    #[error("interval parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
}

/// A real interval with exact rational or infinite endpoints.
///
/// Invariants enforced on construction: `lo <= hi`, a degenerate interval
/// (`lo == hi`) is finite and closed on both sides, and an infinite
/// endpoint is always open.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: ExtRational,
    hi: ExtRational,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(
        lo: ExtRational,
        hi: ExtRational,
        lo_closed: bool,
        hi_closed: bool,
    ) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::InvalidBounds);
        }
        if (!lo.is_finite() && lo_closed) || (!hi.is_finite() && hi_closed) {
            return Err(IntervalError::ClosedInfinity);
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(IntervalError::OpenDegenerate);
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    /// Closed interval `[a, b]` from rationals.
    pub fn closed(a: Rat, b: Rat) -> Result<Self, IntervalError> {
        Self::new(ExtRational::from(a), ExtRational::from(b), true, true)
    }

    /// Half-open interval `[a, b)`.
    pub fn half_open(a: Rat, b: Rat) -> Result<Self, IntervalError> {
        Self::new(ExtRational::from(a), ExtRational::from(b), true, false)
    }

    /// The degenerate interval `[q, q]`.
    pub fn point(q: Rat) -> Self {
        Interval {
            lo: ExtRational::from(q.clone()),
            hi: ExtRational::from(q),
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// The whole real line `(-inf, inf)`.
    pub fn full_line() -> Self {
        Interval {
            lo: ExtRational::NegInf,
            hi: ExtRational::PosInf,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn lo(&self) -> &ExtRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExtRational {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    /// True for `[q, q]`.
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// The single value of a degenerate interval.
    pub fn as_point(&self) -> Option<&Rat> {
        if self.is_degenerate() {
            self.lo.as_finite()
        } else {
            None
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Membership of a rational value, respecting open/closed flags.
    pub fn contains(&self, q: &Rat) -> bool {
        let above_lo = match &self.lo {
            ExtRational::NegInf => true,
            ExtRational::Finite(l) => q > l || (q == l && self.lo_closed),
            ExtRational::PosInf => false,
        };
        let below_hi = match &self.hi {
            ExtRational::PosInf => true,
            ExtRational::Finite(h) => q < h || (q == h && self.hi_closed),
            ExtRational::NegInf => false,
        };
        above_lo && below_hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rat::zero())
    }

    /// True when `other` is a subset of `self`.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        let lo_ok = match self.lo.cmp(&other.lo) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed || !other.lo_closed || !self.lo.is_finite(),
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp(&other.hi) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi_closed || !other.hi_closed || !self.hi.is_finite(),
            Ordering::Less => false,
        };
        lo_ok && hi_ok
    }

    /// Width `hi - lo`; `PosInf` when unbounded.
    pub fn width(&self) -> ExtRational {
        match (&self.lo, &self.hi) {
            (ExtRational::Finite(l), ExtRational::Finite(h)) => ExtRational::from(h - l),
            _ => ExtRational::PosInf,
        }
    }

    /// A finite value inside the interval: the midpoint when bounded,
    /// otherwise a unit step in from the finite side (0 for the full line).
    pub fn finite_representative(&self) -> Rat {
        match (&self.lo, &self.hi) {
            (ExtRational::Finite(l), ExtRational::Finite(h)) => (l + h) / Rat::from_integer(2.into()),
            (ExtRational::Finite(l), _) => l + Rat::one(),
            (_, ExtRational::Finite(h)) => h - Rat::one(),
            _ => Rat::zero(),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            lo_closed: self.hi_closed,
            hi_closed: self.lo_closed,
        }
    }

    /// `A + B`: endpoint sums, an endpoint is closed only when both
    /// contributing endpoints are closed.
    pub fn add(&self, other: &Interval) -> Interval {
        let lo = ext::add(&self.lo, &other.lo);
        let hi = ext::add(&self.hi, &other.hi);
        match (lo, hi) {
            (Some(lo), Some(hi)) => Interval {
                lo,
                hi,
                lo_closed: self.lo_closed && other.lo_closed,
                hi_closed: self.hi_closed && other.hi_closed,
            },
            _ => Interval::full_line(),
        }
    }

    /// `A - B = [lo1 - hi2, hi1 - lo2]` with the matching flag pairing.
    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    /// `A * B`: endpoints are the min and max of the four endpoint
    /// products. An output endpoint is closed exactly when some endpoint
    /// pair attaining it has both endpoints closed; if any endpoint
    /// product is an indeterminate `0 * inf` the result is the whole line.
    pub fn mul(&self, other: &Interval) -> Interval {
        let pairs = [
            (&self.lo, self.lo_closed, &other.lo, other.lo_closed),
            (&self.lo, self.lo_closed, &other.hi, other.hi_closed),
            (&self.hi, self.hi_closed, &other.lo, other.lo_closed),
            (&self.hi, self.hi_closed, &other.hi, other.hi_closed),
        ];
        let mut products: Vec<(ExtRational, bool)> = Vec::with_capacity(4);
        for (a, ac, b, bc) in pairs {
            match ext::mul(a, b) {
                Some(p) => products.push((p, ac && bc)),
                None => return Interval::full_line(),
            }
        }
        let lo = products.iter().map(|(p, _)| p).min().unwrap().clone();
        let hi = products.iter().map(|(p, _)| p).max().unwrap().clone();
        let lo_closed = products.iter().any(|(p, c)| *p == lo && *c);
        let hi_closed = products.iter().any(|(p, c)| *p == hi && *c);
        // An infinite endpoint stays open regardless of the attaining pair.
        Interval {
            lo_closed: lo_closed && lo.is_finite(),
            hi_closed: hi_closed && hi.is_finite(),
            lo,
            hi,
        }
    }

    /// `A / B` for a divisor whose interior excludes zero: `lo2 > 0`,
    /// `hi2 < 0`, or a zero endpoint that is open. A divisor with zero
    /// inside (or as a closed endpoint) is rejected; `recip` handles it
    /// by returning a union.
    pub fn div(&self, other: &Interval) -> Result<Interval, IntervalError> {
        let zero = Rat::zero();
        let lo_pos = matches!(&other.lo, ExtRational::Finite(l) if *l > zero);
        let hi_neg = matches!(&other.hi, ExtRational::Finite(h) if *h < zero);
        let lo_open_zero =
            matches!(&other.lo, ExtRational::Finite(l) if l.is_zero()) && !other.lo_closed;
        let hi_open_zero =
            matches!(&other.hi, ExtRational::Finite(h) if h.is_zero()) && !other.hi_closed;
        if !(lo_pos || hi_neg || lo_open_zero || hi_open_zero) {
            return Err(IntervalError::DivisorContainsZero);
        }
        Ok(self.mul(&other.recip_zero_free()))
    }

    /// Reciprocal of an interval not containing zero: `[1/hi, 1/lo]` with
    /// swapped flags. A zero endpoint must be open and maps to the
    /// appropriate infinity; an infinite endpoint maps to an open zero.
    fn recip_zero_free(&self) -> Interval {
        let negative = matches!(&self.hi, ExtRational::Finite(h) if !h.is_positive());
        let lo = ext::recip_endpoint(&self.hi, negative);
        let hi = ext::recip_endpoint(&self.lo, negative);
        Interval {
            lo_closed: self.hi_closed && lo.is_finite(),
            hi_closed: self.lo_closed && hi.is_finite(),
            lo,
            hi,
        }
    }

    /// `1 / A` for any non-zero interval. When zero lies strictly inside,
    /// the result splits into two unbounded parts.
    pub fn recip(&self) -> Result<IntervalUnion, IntervalError> {
        let zero = Rat::zero();
        if self.as_point().map_or(false, |q| q.is_zero()) {
            return Err(IntervalError::RecipOfZero);
        }
        let lo_is_zero = matches!(&self.lo, ExtRational::Finite(l) if l.is_zero());
        let hi_is_zero = matches!(&self.hi, ExtRational::Finite(h) if h.is_zero());
        if lo_is_zero {
            // 1/[0,b] = [1/b, +inf)
            let part = Interval {
                lo: ext::recip_endpoint(&self.hi, false),
                hi: ExtRational::PosInf,
                lo_closed: self.hi_closed,
                hi_closed: false,
            };
            return Ok(IntervalUnion::from_parts(vec![part]));
        }
        if hi_is_zero {
            // 1/[a,0] = (-inf, 1/a]
            let part = Interval {
                lo: ExtRational::NegInf,
                hi: ext::recip_endpoint(&self.lo, true),
                lo_closed: false,
                hi_closed: self.lo_closed,
            };
            return Ok(IntervalUnion::from_parts(vec![part]));
        }
        let lo_neg = match &self.lo {
            ExtRational::NegInf => true,
            ExtRational::Finite(l) => *l < zero,
            ExtRational::PosInf => false,
        };
        let hi_pos = match &self.hi {
            ExtRational::PosInf => true,
            ExtRational::Finite(h) => *h > zero,
            ExtRational::NegInf => false,
        };
        if lo_neg && hi_pos {
            // Split at zero: (-inf, 1/lo] and [1/hi, +inf).
            let left = Interval {
                lo: ExtRational::NegInf,
                hi: ext::recip_endpoint(&self.lo, true),
                lo_closed: false,
                hi_closed: self.lo_closed && self.lo.is_finite(),
            };
            let right = Interval {
                lo: ext::recip_endpoint(&self.hi, false),
                hi: ExtRational::PosInf,
                lo_closed: self.hi_closed && self.hi.is_finite(),
                hi_closed: false,
            };
            return Ok(IntervalUnion::from_parts(vec![left, right]));
        }
        Ok(IntervalUnion::from_parts(vec![self.recip_zero_free()]))
    }

    /// `A^n` as the image set `{x^n : x in A}`.
    ///
    /// For even `n` with `lo < 0 < hi` the result is `[0, max(|lo|, |hi|)^n]`
    /// with a closed left endpoint and the right flag taken from the
    /// endpoint of larger magnitude. Odd powers are monotone and map
    /// endpoints directly.
    pub fn pow(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::point(Rat::one());
        }
        if n % 2 == 1 {
            return Interval {
                lo: ext::pow(&self.lo, n),
                hi: ext::pow(&self.hi, n),
                lo_closed: self.lo_closed,
                hi_closed: self.hi_closed,
            };
        }
        let zero = Rat::zero();
        let lo_nonneg = match &self.lo {
            ExtRational::Finite(l) => *l >= zero,
            ExtRational::PosInf => true,
            ExtRational::NegInf => false,
        };
        let hi_nonpos = match &self.hi {
            ExtRational::Finite(h) => *h <= zero,
            ExtRational::NegInf => true,
            ExtRational::PosInf => false,
        };
        if lo_nonneg {
            Interval {
                lo: ext::pow(&self.lo, n),
                hi: ext::pow(&self.hi, n),
                lo_closed: self.lo_closed,
                hi_closed: self.hi_closed,
            }
        } else if hi_nonpos {
            Interval {
                lo: ext::pow(&self.hi, n),
                hi: ext::pow(&self.lo, n),
                lo_closed: self.hi_closed,
                hi_closed: self.lo_closed,
            }
        } else {
            // lo < 0 < hi: the image is [0, max(lo^n, hi^n)]. The upper
            // flag follows the endpoint of larger magnitude; ties go to
            // the upper endpoint.
            let (hi, hi_closed) = if ext::abs_gt(&self.lo, &self.hi) {
                (ext::pow(&self.lo, n), self.lo_closed)
            } else {
                (ext::pow(&self.hi, n), self.hi_closed)
            };
            Interval {
                lo: ExtRational::from(zero),
                hi_closed: hi_closed && hi.is_finite(),
                hi,
                lo_closed: true,
            }
        }
    }

    /// Smallest interval containing both operands.
    pub fn hull(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Less => (self.lo.clone(), self.lo_closed),
            Ordering::Greater => (other.lo.clone(), other.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed || other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Greater => (self.hi.clone(), self.hi_closed),
            Ordering::Less => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed || other.hi_closed),
        };
        Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    /// Splits the interval into a left and right part for branch-and-prune.
    /// Both parts include the split point, so their union covers `self`.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.split_point();
        let left = Interval {
            lo: self.lo.clone(),
            hi: ExtRational::from(m.clone()),
            lo_closed: self.lo_closed,
            hi_closed: true,
        };
        let right = Interval {
            lo: ExtRational::from(m),
            hi: self.hi.clone(),
            lo_closed: true,
            hi_closed: self.hi_closed,
        };
        (left, right)
    }

    fn split_point(&self) -> Rat {
        match (&self.lo, &self.hi) {
            (ExtRational::Finite(l), ExtRational::Finite(h)) => (l + h) / Rat::from_integer(2.into()),
            (ExtRational::Finite(l), _) => {
                let one = Rat::one();
                if l.is_negative() {
                    Rat::zero()
                } else {
                    l + (l.abs() + one) * Rat::from_integer(2.into())
                }
            }
            (_, ExtRational::Finite(h)) => {
                let one = Rat::one();
                if h.is_positive() {
                    Rat::zero()
                } else {
                    h - (h.abs() + one) * Rat::from_integer(2.into())
                }
            }
            _ => Rat::zero(),
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests;
