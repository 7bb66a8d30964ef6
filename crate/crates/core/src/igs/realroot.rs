//! The staged decision "does E vanish somewhere in the box with some
//! element of N nonzero?".
//!
//! Stages, cheapest certificate first:
//! 1. rational witness search (midpoint, closed corners, coordinate
//!    descent) — success certifies consistency;
//! 2. complex emptiness: the box-encoded system from `augment` has no
//!    solution over the algebraic closure — certifies inconsistency;
//! 3. interval branch-and-prune: subdivide the box, discard sub-boxes on
//!    which some null condition cannot vanish or every non-null
//!    condition is identically zero — full pruning certifies
//!    inconsistency;
//! 4. otherwise the verdict is unknown and callers keep the pair,
//!    flagged.
//!
//! A witness found in stage 1 would also prevent stages 2 and 3 from
//! certifying, and vice versa, so the stage order never changes a
//! verdict, only the cost of reaching it.

use super::witness::search_witness;
use super::{augment_partial, ConsistencyVerdict, ParamBox};
use crate::cgs::Certificate;
use crate::groebner::reduced_groebner_basis;
use crate::interval::Interval;
use crate::poly::{MonomialOrder, Polynomial, Rat};
use num::Zero;

/// Budget knobs for the staged decision.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Bisection depth for branch-and-prune.
    pub depth: u32,
    /// Upper bound on processed sub-boxes before giving up.
    pub node_cap: usize,
    /// Extra seeded starts for the witness search (0 disables them).
    pub extra_starts: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            depth: 24,
            node_cap: 20_000,
            extra_starts: 0,
        }
    }
}

pub fn real_root_in_box(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
    opts: &SearchOptions,
) -> ConsistencyVerdict {
    // Unsatisfiable shortcuts that need no search.
    if n.is_empty() {
        return ConsistencyVerdict::inconsistent(Certificate::ComplexEmpty);
    }
    if e.iter().any(|p| p.as_constant().map_or(false, |c| !c.is_zero())) {
        return ConsistencyVerdict::inconsistent(Certificate::ComplexEmpty);
    }
    if bx.dim() == 0 {
        // Constant conditions over an empty parameter list.
        let e_ok = e.iter().all(|p| p.is_zero());
        let n_ok = n.iter().any(|p| !p.is_zero());
        return if e_ok && n_ok {
            ConsistencyVerdict::consistent(Vec::new())
        } else {
            ConsistencyVerdict::inconsistent(Certificate::ComplexEmpty)
        };
    }

    if let Some(w) = search_witness(e, n, bx, opts.extra_starts) {
        return ConsistencyVerdict::consistent(w);
    }

    // Solutions over the algebraic closure of the box-encoded system; no
    // complex solution means no real one either. Pointless when E is
    // empty (the encoded system is then always solvable).
    if !e.is_empty() {
        let f = augment_partial(e, n, bx);
        if reduced_groebner_basis(&f, &MonomialOrder::Grevlex).is_trivial() {
            return ConsistencyVerdict::inconsistent(Certificate::ComplexEmpty);
        }
    }

    prune_search(e, n, bx, opts)
}

fn prune_search(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
    opts: &SearchOptions,
) -> ConsistencyVerdict {
    let mut stack: Vec<(Vec<Interval>, u32)> = vec![(bx.intervals().to_vec(), 0)];
    let mut processed = 0usize;
    while let Some((node, depth)) = stack.pop() {
        processed += 1;
        if processed > opts.node_cap {
            return ConsistencyVerdict::unknown();
        }
        if prune_node(e, n, &node) {
            continue;
        }
        if depth >= opts.depth {
            return ConsistencyVerdict::unknown();
        }
        let k = widest_coordinate(&node);
        let (left, right) = node[k].bisect();
        let mut ln = node.clone();
        ln[k] = left;
        let mut rn = node;
        rn[k] = right;
        stack.push((rn, depth + 1));
        stack.push((ln, depth + 1));
    }
    ConsistencyVerdict::inconsistent(Certificate::BoxPruned)
}

/// True when the sub-box certifiably contains no admissible point: some
/// null condition's range excludes zero, or every non-null condition is
/// identically zero on it.
fn prune_node(e: &[Polynomial], n: &[Polynomial], node: &[Interval]) -> bool {
    for p in e {
        if !p.eval_interval(node).contains_zero() {
            return true;
        }
    }
    n.iter().all(|g| {
        let range = g.eval_interval(node);
        range.is_degenerate() && range.contains_zero()
    })
}

fn widest_coordinate(node: &[Interval]) -> usize {
    let mut best = 0usize;
    let mut best_width = node[0].width();
    for (i, iv) in node.iter().enumerate().skip(1) {
        let w = iv.width();
        if w > best_width {
            best_width = w;
            best = i;
        }
    }
    best
}

/// Recovers the box coordinate from a solution of the half-open
/// encoding: with `a + (a - beta) t^2 - alpha = 0`, the coordinate is
/// `a = (alpha + beta t^2) / (1 + t^2)`, which always lies in
/// `[alpha, beta)`.
pub fn half_open_coordinate(alpha: &Rat, beta: &Rat, t: &Rat) -> Rat {
    let t2 = t * t;
    (alpha + beta * &t2) / (Rat::from_integer(1.into()) + t2)
}
