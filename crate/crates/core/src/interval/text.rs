//! Text form of intervals: `[a,b]`, `(a,b]`, `[a,b)`, `(a,b)` with
//! rationals written as `p/q` and infinities as `-inf` / `inf`.

use super::{ExtRational, Interval, IntervalError};
use crate::poly::Rat;
use num::BigInt;
use std::fmt;
use std::str::FromStr;

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed() { '[' } else { '(' },
            self.lo(),
            self.hi(),
            if self.hi_closed() { ']' } else { ')' },
        )
    }
}

impl FromStr for Interval {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_interval(s.trim()).map(|(iv, rest)| (iv, rest.trim()))
            .and_then(|(iv, rest)| {
                if rest.is_empty() {
                    Ok(iv)
                } else {
                    Err(IntervalError::Parse {
                        at: s.len() - rest.len(),
                        message: "trailing input after interval".into(),
                    })
                }
            })
    }
}

/// Parses one interval from the front of `s`, returning the remainder.
pub fn parse_interval(s: &str) -> Result<(Interval, &str), IntervalError> {
    let err = |at: usize, message: &str| IntervalError::Parse {
        at,
        message: message.into(),
    };
    let s0 = s;
    let mut chars = s.char_indices().peekable();
    let (_, open) = chars.next().ok_or_else(|| err(0, "empty interval"))?;
    let lo_closed = match open {
        '[' => true,
        '(' => false,
        _ => return Err(err(0, "expected '[' or '('")),
    };
    let rest = &s0[1..];
    let (lo, rest) = parse_endpoint(rest, s0.len() - rest.len())?;
    let rest = rest.trim_start();
    let rest = rest
        .strip_prefix(',')
        .ok_or_else(|| err(s0.len() - rest.len(), "expected ','"))?;
    let (hi, rest) = parse_endpoint(rest, s0.len() - rest.len())?;
    let rest = rest.trim_start();
    let mut tail = rest.chars();
    let close = tail
        .next()
        .ok_or_else(|| err(s0.len(), "expected ']' or ')'"))?;
    let hi_closed = match close {
        ']' => true,
        ')' => false,
        _ => return Err(err(s0.len() - rest.len(), "expected ']' or ')'")),
    };
    let iv = Interval::new(lo, hi, lo_closed, hi_closed)?;
    Ok((iv, tail.as_str()))
}

fn parse_endpoint(s: &str, offset: usize) -> Result<(ExtRational, &str), IntervalError> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix("-inf") {
        return Ok((ExtRational::NegInf, rest));
    }
    if let Some(rest) = s.strip_prefix("inf").or_else(|| s.strip_prefix("+inf")) {
        return Ok((ExtRational::PosInf, rest));
    }
    let (q, rest) = parse_rational(s).ok_or_else(|| IntervalError::Parse {
        at: offset,
        message: "expected rational or infinity".into(),
    })?;
    Ok((ExtRational::Finite(q), rest))
}

/// Parses a rational literal `p` or `p/q` (optionally signed) from the
/// front of `s`.
pub fn parse_rational(s: &str) -> Option<(Rat, &str)> {
    let s = s.trim_start();
    let (num, rest) = parse_integer(s)?;
    let rest_trimmed = rest.trim_start();
    if let Some(after_slash) = rest_trimmed.strip_prefix('/') {
        let (den, rest2) = parse_integer(after_slash.trim_start())?;
        if den == BigInt::from(0) {
            return None;
        }
        Some((Rat::new(num, den), rest2))
    } else {
        Some((Rat::from_integer(num), rest))
    }
}

fn parse_integer(s: &str) -> Option<(BigInt, &str)> {
    let mut end = 0;
    let bytes = s.as_bytes();
    if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
        end += 1;
    }
    let digits_start = end;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == digits_start {
        return None;
    }
    let value = BigInt::from_str(&s[..end]).ok()?;
    Some((value, &s[end..]))
}
