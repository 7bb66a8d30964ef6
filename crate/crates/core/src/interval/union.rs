//! Finite unions of pairwise-disjoint intervals.

use super::{ExtRational, Interval};
use crate::poly::Rat;
use std::fmt;

/// An ordered union of disjoint, non-adjacent intervals.
///
/// Construction merges overlapping or touching parts, so the stored form
/// is canonical: parts are sorted by lower bound and no two parts can be
/// joined into one interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalUnion {
    parts: Vec<Interval>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion { parts: Vec::new() }
    }

    pub fn from_parts(mut parts: Vec<Interval>) -> Self {
        parts.sort_by(|a, b| {
            a.lo()
                .cmp(b.lo())
                .then_with(|| b.lo_closed().cmp(&a.lo_closed()))
                .then_with(|| a.hi().cmp(b.hi()))
        });
        let mut merged: Vec<Interval> = Vec::with_capacity(parts.len());
        for part in parts {
            match merged.last_mut() {
                Some(last) if touches(last, &part) => {
                    *last = last.hull(&part);
                }
                _ => merged.push(part),
            }
        }
        IntervalUnion { parts: merged }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, q: &Rat) -> bool {
        self.parts.iter().any(|p| p.contains(q))
    }
}

/// True when the two intervals overlap or touch with at least one closed
/// endpoint at the junction, i.e. their union is a single interval.
fn touches(a: &Interval, b: &Interval) -> bool {
    debug_assert!(a.lo() <= b.lo());
    match a.hi().cmp(b.lo()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => {
            (a.hi_closed() || b.lo_closed()) && matches!(a.hi(), ExtRational::Finite(_))
        }
        std::cmp::Ordering::Less => false,
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{}", part)?;
        }
        Ok(())
    }
}
