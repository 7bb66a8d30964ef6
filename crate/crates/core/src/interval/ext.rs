//! Extended rationals: exact rationals together with the two infinities.

use crate::poly::Rat;
use num::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An exact rational or one of the infinities, with the total order
/// `-inf < q < +inf`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl ExtRational {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtRational::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn neg(&self) -> ExtRational {
        match self {
            ExtRational::NegInf => ExtRational::PosInf,
            ExtRational::Finite(q) => ExtRational::Finite(-q),
            ExtRational::PosInf => ExtRational::NegInf,
        }
    }

    fn sign(&self) -> i8 {
        match self {
            ExtRational::NegInf => -1,
            ExtRational::PosInf => 1,
            ExtRational::Finite(q) => {
                if q.is_positive() {
                    1
                } else if q.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

impl From<Rat> for ExtRational {
    fn from(q: Rat) -> Self {
        ExtRational::Finite(q)
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtRational::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => write!(f, "-inf"),
            ExtRational::PosInf => write!(f, "inf"),
            ExtRational::Finite(q) => write!(f, "{}", q),
        }
    }
}

/// `a + b`; `None` for the indeterminate `inf - inf`.
pub(super) fn add(a: &ExtRational, b: &ExtRational) -> Option<ExtRational> {
    use ExtRational::*;
    match (a, b) {
        (Finite(x), Finite(y)) => Some(Finite(x + y)),
        (NegInf, PosInf) | (PosInf, NegInf) => None,
        (NegInf, _) | (_, NegInf) => Some(NegInf),
        (PosInf, _) | (_, PosInf) => Some(PosInf),
    }
}

/// `a * b`; `None` for the indeterminate `0 * inf`.
pub(super) fn mul(a: &ExtRational, b: &ExtRational) -> Option<ExtRational> {
    use ExtRational::*;
    match (a, b) {
        (Finite(x), Finite(y)) => Some(Finite(x * y)),
        _ => {
            let s = a.sign() * b.sign();
            if s == 0 {
                None
            } else if s > 0 {
                Some(PosInf)
            } else {
                Some(NegInf)
            }
        }
    }
}

/// Reciprocal of a single endpoint. A zero maps to the infinity matching
/// the sign of the interval it borders, an infinity maps to zero.
pub(super) fn recip_endpoint(a: &ExtRational, negative_side: bool) -> ExtRational {
    match a {
        ExtRational::NegInf | ExtRational::PosInf => ExtRational::Finite(Rat::zero()),
        ExtRational::Finite(q) if q.is_zero() => {
            if negative_side {
                ExtRational::NegInf
            } else {
                ExtRational::PosInf
            }
        }
        ExtRational::Finite(q) => ExtRational::Finite(q.recip()),
    }
}

pub(super) fn pow(a: &ExtRational, n: u32) -> ExtRational {
    match a {
        ExtRational::Finite(q) => {
            ExtRational::Finite(num::pow::pow(q.clone(), n as usize))
        }
        ExtRational::PosInf => ExtRational::PosInf,
        ExtRational::NegInf => {
            if n % 2 == 0 {
                ExtRational::PosInf
            } else {
                ExtRational::NegInf
            }
        }
    }
}

/// `|a| > |b|` over extended rationals.
pub(super) fn abs_gt(a: &ExtRational, b: &ExtRational) -> bool {
    use ExtRational::*;
    match (a, b) {
        (Finite(x), Finite(y)) => x.abs() > y.abs(),
        (Finite(_), _) => false,
        (_, Finite(_)) => true,
        _ => false,
    }
}
