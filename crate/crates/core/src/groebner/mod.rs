//! Buchberger-based Groebner engine: multivariate division, S-polynomials,
//! reduced bases, elimination ideals and radical membership.

use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Rat};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("s-polynomial of a zero polynomial")]
    ZeroInput,
    #[error("elimination requires a block order with the eliminated variables greatest")]
    NotAnEliminationOrder,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A Groebner basis together with the order it was computed under.
///
/// When `reduced` is set the generators are monic and no monomial of any
/// generator is divisible by the leading monomial of another; this form
/// is unique for the ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    /// True when the basis generates the whole ring.
    pub fn is_trivial(&self) -> bool {
        self.generators.iter().any(|g| g.is_nonzero_constant())
    }
}

impl std::ops::Deref for GroebnerBasis {
    type Target = [Polynomial];

    fn deref(&self) -> &Self::Target {
        &self.generators
    }
}

/// Remainder of `f` on division by `basis`: no monomial of the result is
/// divisible by any leading monomial of `basis`, and `f - r` lies in the
/// ideal generated by `basis`. An empty basis returns `f` unchanged.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<(&Polynomial, Monomial, Rat)> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(m, c)| (g, m.clone(), c.clone())))
        .collect();
    let mut work = f.clone();
    let mut remainder = Polynomial::zero(f.ring());
    'outer: while let Some((lm, lc)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        for (g, gm, gc) in &leads {
            if let Some(q) = lm.div(gm) {
                let k = &lc / gc;
                work = work.sub(&g.mul_term(&q, &k));
                continue 'outer;
            }
        }
        // Leading monomial irreducible: move it to the remainder.
        remainder.add_term(lm.clone(), lc.clone());
        work.add_term(lm, -lc);
    }
    remainder
}

/// `lcm(LM f, LM g)/LT f * f - lcm/LT g * g`.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: &MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    let (fm, fc) = f.leading(order).ok_or(GroebnerError::ZeroInput)?;
    let (gm, gc) = g.leading(order).ok_or(GroebnerError::ZeroInput)?;
    let lcm = fm.lcm(gm);
    let fq = lcm.div(fm).expect("lcm divisible by its factor");
    let gq = lcm.div(gm).expect("lcm divisible by its factor");
    let left = f.mul_term(&fq, &fc.recip());
    let right = g.mul_term(&gq, &gc.recip());
    Ok(left.sub(&right))
}

/// The reduced Groebner basis of the ideal generated by `gens`.
///
/// Buchberger's algorithm with the normal pair-selection strategy
/// (smallest lcm degree first) and both classical pair-elimination
/// criteria. Intermediate polynomials are kept primitive to bound
/// coefficient growth; the final basis is inter-reduced, monic and sorted
/// by descending leading monomial.
pub fn reduced_groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.primitive(order));
        }
    }
    basis.sort_by(|a, b| {
        order
            .cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0)
            .then_with(|| a.n_terms().cmp(&b.n_terms()))
    });
    basis.dedup();

    // Pair queue keyed by (lcm degree, lcm, i, j) for the normal strategy.
    let mut pairs: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    fn push_pairs(
        pairs: &mut BTreeSet<(u32, Monomial, usize, usize)>,
        basis: &[Polynomial],
        order: &MonomialOrder,
        j: usize,
    ) {
        let (mj, _) = basis[j].leading(order).unwrap();
        for (i, gi) in basis.iter().enumerate().take(j) {
            let (mi, _) = gi.leading(order).unwrap();
            let lcm = mi.lcm(mj);
            pairs.insert((lcm.total_degree(), lcm, i, j));
        }
    }
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, order, j);
    }

    while let Some(entry) = pairs.iter().next().cloned() {
        pairs.remove(&entry);
        let (_, lcm, i, j) = entry;
        let (mi, _) = basis[i].leading(order).unwrap();
        let (mj, _) = basis[j].leading(order).unwrap();
        // First criterion: coprime leading monomials reduce to zero.
        if mi.coprime(mj) {
            continue;
        }
        // Chain criterion: another leading monomial divides the lcm and
        // both companion pairs are already dispatched.
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (mk, _) = basis[k].leading(order).unwrap();
            if !mk.divides(&lcm) {
                return false;
            }
            let pair_of = |a: usize, b: usize| {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                let l = basis[lo]
                    .leading(order)
                    .unwrap()
                    .0
                    .lcm(basis[hi].leading(order).unwrap().0);
                (l.total_degree(), l, lo, hi)
            };
            !pairs.contains(&pair_of(i, k)) && !pairs.contains(&pair_of(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order).expect("nonzero basis elements");
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            basis.push(r.primitive(order));
            push_pairs(&mut pairs, &basis, order, basis.len() - 1);
        }
    }

    GroebnerBasis {
        generators: inter_reduce(basis, order),
        order: order.clone(),
        reduced: true,
    }
}

/// Minimizes and tail-reduces a basis: drops generators whose leading
/// monomial is divisible by another's, reduces every generator against
/// the rest, makes everything monic and sorts by descending LM.
fn inter_reduce(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let (gm, _) = g.leading(order).unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading(order).unwrap().0.divides(gm))
        {
            minimal.push(g);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let reduced = normal_form(&minimal[i], &others, order);
            if reduced != minimal[i] {
                minimal[i] = if reduced.is_zero() {
                    reduced
                } else {
                    reduced.primitive(order)
                };
                changed = true;
            }
        }
        minimal.retain(|g| !g.is_zero());
    }
    let mut out: Vec<Polynomial> = minimal.iter().map(|g| g.monic(order)).collect();
    out.sort_by(|a, b| order.cmp(b.leading(order).unwrap().0, a.leading(order).unwrap().0));
    out
}

/// Generators of `gb` lying entirely in the subring of the trailing
/// variables `keep`. Requires `gb` to be reduced under a block order
/// whose eliminated (leading) group is exactly the other variables.
pub fn eliminate(gb: &GroebnerBasis, keep: &[String]) -> Result<Vec<Polynomial>, GroebnerError> {
    let ring = match gb.generators.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(Vec::new()),
    };
    let (_, _, split) = gb
        .order
        .block_parts()
        .ok_or(GroebnerError::NotAnEliminationOrder)?;
    let trailing: Vec<&String> = ring.vars().iter().skip(split).collect();
    if trailing.len() != keep.len() || trailing.iter().zip(keep).any(|(a, b)| *a != b) {
        return Err(GroebnerError::NotAnEliminationOrder);
    }
    Ok(gb
        .generators
        .iter()
        .filter(|g| g.support().iter().all(|&i| i >= split))
        .cloned()
        .collect())
}

/// Radical membership `g ∈ sqrt(<ideal>)`, decided by adjoining a fresh
/// variable `w` and testing whether the ideal together with `1 - w*g`
/// generates the whole ring.
pub fn radical_member(g: &Polynomial, ideal: &[Polynomial]) -> bool {
    if g.is_zero() {
        return true;
    }
    let ring = g.ring();
    let mut names: Vec<String> = ring.vars().to_vec();
    let mut w = String::from("w");
    while names.iter().any(|v| *v == w) {
        w.push('_');
    }
    names.push(w);
    let ext = crate::poly::Ring::new(names);
    let mut gens: Vec<Polynomial> = ideal
        .iter()
        .map(|p| p.embed(&ext).expect("same variables"))
        .collect();
    let w_var = Polynomial::var(&ext, ext.n_vars() - 1);
    let saturator =
        Polynomial::one(&ext).sub(&w_var.mul(&g.embed(&ext).expect("same variables")));
    gens.push(saturator);
    reduced_groebner_basis(&gens, &MonomialOrder::Grevlex).is_trivial()
}

/// Orders two polynomials by leading monomial, for deterministic listings.
pub fn cmp_by_leading(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Ordering {
    match (a.leading(order), b.leading(order)) {
        (Some((ma, _)), Some((mb, _))) => order.cmp(ma, mb),
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests;
