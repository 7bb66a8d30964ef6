//! Deterministic search for a rational point of the box where every null
//! condition vanishes and some non-null condition does not.
//!
//! Candidates are the box midpoint, the closed-corner points, optional
//! seeded pseudo-random starts, and coordinate-descent refinements that
//! move one coordinate at a time onto a rational root of the univariate
//! slices of the null conditions.

use super::ParamBox;
use crate::poly::{Polynomial, Rat};
use crate::unipoly::{rational_roots, UniPoly};
use num::{BigInt, Zero};

const MAX_STARTS: usize = 64;
const MAX_ROUNDS: usize = 4;
const MAX_CANDIDATES_PER_COORD: usize = 16;

pub(super) fn search_witness(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
    extra_starts: u64,
) -> Option<Vec<Rat>> {
    if bx.dim() == 0 {
        let point = Vec::new();
        return if point_ok(e, n, bx, &point) {
            Some(point)
        } else {
            None
        };
    }
    for start in starts(bx, extra_starts) {
        if point_ok(e, n, bx, &start) {
            return Some(start);
        }
        if let Some(found) = descend(e, n, bx, start) {
            return Some(found);
        }
    }
    None
}

fn point_ok(e: &[Polynomial], n: &[Polynomial], bx: &ParamBox, point: &[Rat]) -> bool {
    bx.contains_point(point)
        && e.iter().all(|p| p.eval(point).is_zero())
        && n.iter().any(|p| !p.eval(point).is_zero())
}

fn starts(bx: &ParamBox, extra: u64) -> Vec<Vec<Rat>> {
    let mids: Vec<Rat> = bx
        .intervals()
        .iter()
        .map(|iv| iv.finite_representative())
        .collect();
    let mut out = vec![mids.clone()];
    // Corner sweep over closed endpoints, midpoint elsewhere.
    let mut per_coord: Vec<Vec<Rat>> = Vec::new();
    for (i, iv) in bx.intervals().iter().enumerate() {
        let mut cands = vec![mids[i].clone()];
        if iv.lo_closed() {
            if let Some(l) = iv.lo().as_finite() {
                if !cands.contains(l) {
                    cands.push(l.clone());
                }
            }
        }
        if iv.hi_closed() {
            if let Some(h) = iv.hi().as_finite() {
                if !cands.contains(h) {
                    cands.push(h.clone());
                }
            }
        }
        per_coord.push(cands);
    }
    let mut stack: Vec<Vec<Rat>> = vec![Vec::new()];
    for cands in &per_coord {
        let mut next = Vec::new();
        for partial in &stack {
            for c in cands {
                if next.len() + out.len() >= MAX_STARTS {
                    break;
                }
                let mut p = partial.clone();
                p.push(c.clone());
                next.push(p);
            }
        }
        stack = next;
    }
    for p in stack {
        if p.len() == bx.dim() && !out.contains(&p) {
            out.push(p);
        }
    }
    // Seeded pseudo-random rational starts inside the box.
    let mut state = 0x9e3779b97f4a7c15u64 ^ extra;
    let mut next_u64 = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..extra.min(32) {
        let mut p = Vec::with_capacity(bx.dim());
        for iv in bx.intervals() {
            let num = (next_u64() % 255) as i64 + 1;
            let t = Rat::new(BigInt::from(num), BigInt::from(256));
            let q = match (iv.lo().as_finite(), iv.hi().as_finite()) {
                (Some(l), Some(h)) => l + (h - l) * t,
                _ => iv.finite_representative(),
            };
            p.push(q);
        }
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn descend(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
    mut point: Vec<Rat>,
) -> Option<Vec<Rat>> {
    if e.is_empty() {
        return None;
    }
    let vanished =
        |p: &[Rat]| -> usize { e.iter().filter(|q| q.eval(p).is_zero()).count() };
    for _ in 0..MAX_ROUNDS {
        let mut improved = false;
        for k in 0..bx.dim() {
            let score = vanished(&point);
            if score == e.len() {
                break;
            }
            let mut best: Option<(usize, Rat)> = None;
            for cand in coordinate_candidates(e, bx, &point, k) {
                let mut trial = point.clone();
                trial[k] = cand.clone();
                let s = vanished(&trial);
                if s > score && best.as_ref().map_or(true, |(bs, _)| s > *bs) {
                    best = Some((s, cand));
                }
            }
            if let Some((_, cand)) = best {
                point[k] = cand;
                improved = true;
            }
        }
        if vanished(&point) == e.len() {
            if n.iter().any(|p| !p.eval(&point).is_zero()) {
                return Some(point);
            }
            // Null conditions vanish but every non-null condition is
            // zero here; nudge unconstrained coordinates to free one.
            return rescue_nonnull(e, n, bx, point);
        }
        if !improved {
            return None;
        }
    }
    None
}

/// Rational in-box roots of the univariate slices of `e` along
/// coordinate `k`, other coordinates held at `point`.
fn coordinate_candidates(
    e: &[Polynomial],
    bx: &ParamBox,
    point: &[Rat],
    k: usize,
) -> Vec<Rat> {
    let iv = &bx.intervals()[k];
    let mut cands: Vec<Rat> = Vec::new();
    for p in e {
        let slice = univariate_slice(p, point, k);
        if slice.is_zero() || slice.degree() == Some(0) {
            continue;
        }
        for root in rational_roots(&slice) {
            if iv.contains(&root) && !cands.contains(&root) {
                cands.push(root);
                if cands.len() >= MAX_CANDIDATES_PER_COORD {
                    return cands;
                }
            }
        }
    }
    cands
}

fn univariate_slice(p: &Polynomial, point: &[Rat], k: usize) -> UniPoly {
    let mut partial = p.clone();
    for (i, q) in point.iter().enumerate() {
        if i != k {
            partial = partial.substitute(i, q);
        }
    }
    let degree = partial
        .terms()
        .map(|(m, _)| m.exponents()[k])
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![Rat::zero(); degree as usize + 1];
    for (m, c) in partial.terms() {
        coeffs[m.exponents()[k] as usize] += c;
    }
    UniPoly::new(coeffs)
}

/// The null conditions vanish at `point` but every non-null condition is
/// zero too. Move one coordinate that the null conditions do not pin
/// down (their slices vanish identically) to make some non-null
/// condition nonzero.
fn rescue_nonnull(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
    point: Vec<Rat>,
) -> Option<Vec<Rat>> {
    for k in 0..bx.dim() {
        let slice_free = e
            .iter()
            .all(|p| univariate_slice(p, &point, k).is_zero());
        if !slice_free {
            continue;
        }
        for g in n {
            let g_slice = univariate_slice(g, &point, k);
            if g_slice.is_zero() {
                continue;
            }
            // Any in-box value avoiding the slice roots works; try a few
            // deterministic offsets from the midpoint.
            let iv = &bx.intervals()[k];
            let mid = iv.finite_representative();
            let quarter = span_step(iv);
            for m in 0..8 {
                let cand = &mid + &quarter * Rat::from_integer(BigInt::from(m));
                if iv.contains(&cand) {
                    let mut trial = point.clone();
                    trial[k] = cand;
                    if point_ok(e, n, bx, &trial) {
                        return Some(trial);
                    }
                }
            }
        }
    }
    None
}

fn span_step(iv: &crate::interval::Interval) -> Rat {
    match (iv.lo().as_finite(), iv.hi().as_finite()) {
        (Some(l), Some(h)) => (h - l) / Rat::from_integer(BigInt::from(16)),
        _ => Rat::new(BigInt::from(1), BigInt::from(3)),
    }
}
