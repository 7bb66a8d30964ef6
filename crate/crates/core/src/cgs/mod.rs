//! Comprehensive Groebner systems for parametric ideals.
//!
//! A parametric system is split into finitely many branches
//! `(E, N, G)`: on the parameter points where every polynomial of `E`
//! vanishes and some polynomial of `N` does not, the specialization of
//! `G` is a Groebner basis of the specialized ideal. The driver follows
//! the minimal-Dickson-basis recursion; the consistency test is a
//! pluggable handle so the same driver serves both the plain parametric
//! case (radical membership over the algebraic closure) and the
//! box-restricted case.

use crate::groebner::{
    cmp_by_leading, normal_form, radical_member, reduced_groebner_basis, s_polynomial,
};
use crate::poly::{MonomialOrder, ParamPolynomial, Polynomial, Rat, Ring};
use num::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CgsError {
    #[error("minimal Dickson basis requires a block order")]
    NotABlockOrder,
    #[error("minimal Dickson basis precondition failed: {0}")]
    MdBasisPrecondition(String),
    #[error("parametric polynomials live in different rings")]
    MixedRings,
    #[error("branch recursion exceeded the safety depth")]
    DepthExceeded,
}

/// Why a candidate triple was ruled out, or how consistency was shown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// The conditions have no common solution over the algebraic closure.
    ComplexEmpty,
    /// Interval pruning emptied the parameter box.
    BoxPruned,
    /// An explicit rational parameter point satisfies the conditions.
    WitnessFound,
    /// The subdivision budget ran out before a decision.
    BudgetExhausted,
}

/// Outcome of a consistency query for a condition pair `(E, N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HandleVerdict {
    Consistent { witness: Option<Vec<Rat>> },
    Inconsistent { certificate: Certificate },
    Unknown,
}

impl HandleVerdict {
    pub fn is_inconsistent(&self) -> bool {
        matches!(self, HandleVerdict::Inconsistent { .. })
    }
}

/// A pluggable consistency test over the parameter ring.
pub trait ConsistencyHandle {
    fn check(&mut self, e: &[Polynomial], n: &[Polynomial]) -> HandleVerdict;
}

/// One branch of a comprehensive system: null conditions, non-null
/// conditions (both in the parameter ring) and a parametric basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub null_conditions: Vec<Polynomial>,
    pub nonnull_conditions: Vec<Polynomial>,
    pub basis: Vec<ParamPolynomial>,
}

/// A branch together with the consistency evidence that admitted it.
#[derive(Debug, Clone)]
pub struct BranchReport {
    pub branch: Branch,
    pub witness: Option<Vec<Rat>>,
    /// False when the handle answered `Unknown` and the branch was kept
    /// conservatively.
    pub certified: bool,
}

/// A candidate triple that was ruled out, with its certificate.
#[derive(Debug, Clone)]
pub struct RejectedTriple {
    pub null_conditions: Vec<Polynomial>,
    pub nonnull_conditions: Vec<Polynomial>,
    pub certificate: Certificate,
}

/// Branches plus bookkeeping for one comprehensive-system run.
#[derive(Debug, Clone)]
pub struct CgsResult {
    pub branches: Vec<BranchReport>,
    pub rejected: Vec<RejectedTriple>,
    pub x_ring: Ring,
    pub param_ring: Ring,
    pub x_order: MonomialOrder,
    pub a_order: MonomialOrder,
}

/// Plain consistency: `(E, N)` is consistent when some `g` in `N` lies
/// outside the radical of `<E>`, i.e. the region `V(E) \ V(N)` is
/// nonempty over the algebraic closure.
pub fn is_consistent(e: &[Polynomial], n: &[Polynomial]) -> bool {
    n.iter().any(|g| !radical_member(g, e))
}

/// The radical-membership handle used for plain comprehensive systems.
#[derive(Default)]
pub struct RadicalConsistency {
    cache: BTreeMap<String, HandleVerdict>,
}

impl RadicalConsistency {
    pub fn new() -> Self {
        Self::default()
    }
}

impl ConsistencyHandle for RadicalConsistency {
    fn check(&mut self, e: &[Polynomial], n: &[Polynomial]) -> HandleVerdict {
        let key = condition_key(e, n);
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let verdict = if is_consistent(e, n) {
            HandleVerdict::Consistent { witness: None }
        } else {
            HandleVerdict::Inconsistent {
                certificate: Certificate::ComplexEmpty,
            }
        };
        self.cache.insert(key, verdict.clone());
        verdict
    }
}

pub(crate) fn condition_key(e: &[Polynomial], n: &[Polynomial]) -> String {
    let mut es: Vec<String> = e.iter().map(|p| p.to_string()).collect();
    let mut ns: Vec<String> = n.iter().map(|p| p.to_string()).collect();
    es.sort();
    ns.sort();
    format!("E[{}] N[{}]", es.join(";"), ns.join(";"))
}

/// The set of pairwise products `{a*b}` of two condition sets, with each
/// product normalized to a primitive representative. Nonzero constants
/// collapse to 1.
pub fn star(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in a {
        for q in b {
            let prod = p.mul(q);
            let norm = normalize_condition(&prod, order);
            if !norm.is_zero() && !out.contains(&norm) {
                out.push(norm);
            }
        }
    }
    out.sort_by(|x, y| cmp_by_leading(y, x, order));
    out
}

/// Primitive integer form with positive leading coefficient; nonzero
/// constants become 1.
pub fn normalize_condition(p: &Polynomial, order: &MonomialOrder) -> Polynomial {
    if p.as_constant().map_or(false, |c| !c.is_zero()) {
        return Polynomial::one(p.ring());
    }
    p.primitive(order)
}

/// Minimal Dickson basis: a subset of `p` whose main-variable leading
/// monomials are pairwise indivisible and still divide every leading
/// monomial of `p`.
///
/// Requires `p` to be a Groebner basis of its own ideal with respect to
/// the block order and to contain no parameter-only polynomial.
pub fn md_basis(
    p: &[ParamPolynomial],
    order: &MonomialOrder,
) -> Result<Vec<ParamPolynomial>, CgsError> {
    let (x_order, _, split) = order.block_parts().ok_or(CgsError::NotABlockOrder)?;
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let x_ring = p[0].x_ring().clone();
    let p_ring = p[0].param_ring().clone();
    if x_ring.n_vars() != split {
        return Err(CgsError::MdBasisPrecondition(
            "block split does not match the main-variable count".into(),
        ));
    }
    let combined = combined_ring(&x_ring, &p_ring);
    let mut combined_polys = Vec::with_capacity(p.len());
    for q in p {
        if q.is_zero() {
            return Err(CgsError::MdBasisPrecondition("zero polynomial".into()));
        }
        if q.leading(x_order).map_or(false, |(m, _)| m.is_one()) {
            return Err(CgsError::MdBasisPrecondition(
                "input meets the parameter ring".into(),
            ));
        }
        combined_polys.push(q.to_combined(&combined));
    }
    // Groebner property of the input itself.
    for i in 0..combined_polys.len() {
        for j in (i + 1)..combined_polys.len() {
            let s = s_polynomial(&combined_polys[i], &combined_polys[j], order)
                .expect("nonzero inputs");
            if !normal_form(&s, &combined_polys, order).is_zero() {
                return Err(CgsError::MdBasisPrecondition(
                    "input is not a Groebner basis".into(),
                ));
            }
        }
    }
    Ok(md_basis_greedy(p.to_vec(), order))
}

/// Ascending-leading-monomial greedy selection. Deterministic: among
/// elements with equal main-variable leading monomials the smallest
/// under the full block order is kept.
fn md_basis_greedy(mut p: Vec<ParamPolynomial>, order: &MonomialOrder) -> Vec<ParamPolynomial> {
    let (x_order, _, _) = order.block_parts().expect("block order");
    if p.is_empty() {
        return p;
    }
    let combined = combined_ring(p[0].x_ring(), p[0].param_ring());
    p.sort_by(|a, b| {
        cmp_by_leading(&a.to_combined(&combined), &b.to_combined(&combined), order)
    });
    let mut kept: Vec<ParamPolynomial> = Vec::new();
    for q in p {
        let (qm, _) = q.leading(x_order).expect("nonzero input");
        if !kept
            .iter()
            .any(|k| k.leading(x_order).unwrap().0.divides(qm))
        {
            kept.push(q);
        }
    }
    kept
}

pub(crate) fn combined_ring(x_ring: &Ring, p_ring: &Ring) -> Ring {
    let mut names: Vec<String> = x_ring.vars().to_vec();
    names.extend(p_ring.vars().iter().cloned());
    Ring::new(names)
}

struct PgbRun<'a> {
    combined: Ring,
    x_ring: Ring,
    p_ring: Ring,
    block: MonomialOrder,
    x_order: MonomialOrder,
    a_order: MonomialOrder,
    handle: &'a mut dyn ConsistencyHandle,
    branches: Vec<BranchReport>,
    rejected: Vec<RejectedTriple>,
}

const MAX_BRANCH_DEPTH: usize = 512;

impl<'a> PgbRun<'a> {
    fn emit(&mut self, e: &[Polynomial], n: &[Polynomial], basis: Vec<ParamPolynomial>, verdict: &HandleVerdict) {
        match verdict {
            HandleVerdict::Inconsistent { certificate } => {
                self.rejected.push(RejectedTriple {
                    null_conditions: e.to_vec(),
                    nonnull_conditions: n.to_vec(),
                    certificate: *certificate,
                });
            }
            HandleVerdict::Consistent { witness } => self.branches.push(BranchReport {
                branch: Branch {
                    null_conditions: e.to_vec(),
                    nonnull_conditions: n.to_vec(),
                    basis,
                },
                witness: witness.clone(),
                certified: true,
            }),
            HandleVerdict::Unknown => self.branches.push(BranchReport {
                branch: Branch {
                    null_conditions: e.to_vec(),
                    nonnull_conditions: n.to_vec(),
                    basis,
                },
                witness: None,
                certified: false,
            }),
        }
    }

    fn one_basis(&self) -> Vec<ParamPolynomial> {
        vec![ParamPolynomial::from_combined(
            &Polynomial::one(&self.combined),
            self.x_ring.n_vars(),
            &self.x_ring,
            &self.p_ring,
        )]
    }

    fn recurse(
        &mut self,
        p: Vec<Polynomial>,
        e: Vec<Polynomial>,
        n: Vec<Polynomial>,
        depth: usize,
    ) -> Result<(), CgsError> {
        if depth > MAX_BRANCH_DEPTH {
            return Err(CgsError::DepthExceeded);
        }
        // Inconsistent condition pairs are dropped before any basis work;
        // every deeper triple has a smaller condition region, so nothing
        // admissible is lost.
        let entry = self.handle.check(&e, &n);
        if let HandleVerdict::Inconsistent { certificate } = &entry {
            self.rejected.push(RejectedTriple {
                null_conditions: e,
                nonnull_conditions: n,
                certificate: *certificate,
            });
            return Ok(());
        }

        // The null conditions join the generators: specializations under
        // consideration all satisfy E = 0.
        let mut gens = p.clone();
        for cond in &e {
            gens.push(cond.embed(&self.combined).expect("parameter subring"));
        }
        let g = reduced_groebner_basis(&gens, &self.block);
        if g.is_trivial() {
            self.emit(&e, &n, self.one_basis(), &entry);
            return Ok(());
        }

        let n_x = self.x_ring.n_vars();
        let mut g_r: Vec<Polynomial> = Vec::new();
        let mut g_main: Vec<Polynomial> = Vec::new();
        for gi in g.iter() {
            if gi.support().iter().all(|&i| i >= n_x) {
                g_r.push(
                    gi.embed(&self.p_ring)
                        .expect("parameter-only generator")
                        .primitive(&self.a_order),
                );
            } else {
                g_main.push(gi.clone());
            }
        }
        g_r.sort_by(|a, b| cmp_by_leading(b, a, &self.a_order));

        // Branch for specializations killing every main-variable generator.
        let n_gr = star(&n, &g_r, &self.a_order);
        if !n_gr.is_empty() {
            let v = self.handle.check(&e, &n_gr);
            self.emit(&e, &n_gr, self.one_basis(), &v);
        }

        let v_continue = self.handle.check(&g_r, &n);
        if v_continue.is_inconsistent() {
            if let HandleVerdict::Inconsistent { certificate } = v_continue {
                self.rejected.push(RejectedTriple {
                    null_conditions: g_r,
                    nonnull_conditions: n,
                    certificate,
                });
            }
            return Ok(());
        }

        let g_main_param: Vec<ParamPolynomial> = g_main
            .iter()
            .map(|q| ParamPolynomial::from_combined(q, n_x, &self.x_ring, &self.p_ring))
            .collect();
        let g_m = md_basis_greedy(g_main_param, &self.block);
        let leading_coeffs: Vec<Polynomial> = g_m
            .iter()
            .map(|q| {
                q.leading(&self.x_order)
                    .expect("nonzero basis element")
                    .1
                    .primitive(&self.a_order)
            })
            .collect();
        let h = lcm_all(&leading_coeffs, &self.a_order);

        let n_h = star(&n, std::slice::from_ref(&h), &self.a_order);
        let v_m = self.handle.check(&g_r, &n_h);
        // Bases are listed descending by leading monomial, like a
        // Groebner basis.
        let mut g_m_listed = g_m;
        g_m_listed.reverse();
        self.emit(&g_r, &n_h, g_m_listed, &v_m);

        // One recursive call per vanishing leading coefficient.
        let mut prefix = Polynomial::one(&self.p_ring);
        for h_i in &leading_coeffs {
            let mut e_child = g_r.clone();
            if !e_child.contains(h_i) {
                e_child.push(h_i.clone());
            }
            let n_child = star(&n, std::slice::from_ref(&prefix), &self.a_order);
            self.recurse(g_main.clone(), e_child, n_child, depth + 1)?;
            prefix = normalize_condition(&prefix.mul(h_i), &self.a_order);
        }
        Ok(())
    }
}

/// Least common multiple of a family of parameter polynomials, computed
/// pairwise through a divisor-structure gcd. The gcd recognizes monomial
/// content, equal primitive parts and exact divisibility; when none
/// apply it falls back to the monomial content, which keeps the result a
/// common multiple.
fn lcm_all(polys: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        let p = p.primitive(order);
        acc = Some(match acc {
            None => p,
            Some(q) => lcm_pair(&q, &p, order),
        });
    }
    match acc {
        Some(l) => l.primitive(order),
        None => Polynomial::one(
            polys
                .first()
                .map(|p| p.ring())
                .expect("nonempty leading-coefficient list"),
        ),
    }
}

fn lcm_pair(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Polynomial {
    if a == b {
        return a.clone();
    }
    let g = gcd_simple(a, b, order);
    let quotient = a.exact_div(&g, order).expect("gcd divides");
    quotient.mul(b)
}

fn gcd_simple(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let ring = a.ring().clone();
    let mono = |p: &Polynomial| -> Polynomial {
        let n = ring.n_vars();
        let mut mins = vec![u32::MAX; n];
        for (m, _) in p.terms() {
            for (i, &e) in m.exponents().iter().enumerate() {
                mins[i] = mins[i].min(e);
            }
        }
        let mins: Vec<u32> = mins.into_iter().map(|e| if e == u32::MAX { 0 } else { e }).collect();
        Polynomial::from_terms(&ring, [(crate::poly::Monomial::new(mins), Rat::from_integer(1.into()))])
    };
    let ma = mono(a);
    let mb = mono(b);
    let gm = {
        let ea = ma.terms().next().unwrap().0.clone();
        let eb = mb.terms().next().unwrap().0.clone();
        let exps: Vec<u32> = ea
            .exponents()
            .iter()
            .zip(eb.exponents())
            .map(|(x, y)| *x.min(y))
            .collect();
        Polynomial::from_terms(&ring, [(crate::poly::Monomial::new(exps), Rat::from_integer(1.into()))])
    };
    let pa = a.exact_div(&ma, order).expect("monomial content divides").primitive(order);
    let pb = b.exact_div(&mb, order).expect("monomial content divides").primitive(order);
    let core = if pa == pb {
        pa
    } else if pb.exact_div(&pa, order).is_some() {
        pa
    } else if pa.exact_div(&pb, order).is_some() {
        pb
    } else {
        Polynomial::one(&ring)
    };
    gm.mul(&core)
}

/// The branch recursion with explicit starting conditions. The block
/// order puts the main variables ahead of the parameters, so the
/// parameter-only part of each reduced basis is an elimination ideal.
pub fn pgb_main(
    p: &[ParamPolynomial],
    e: &[Polynomial],
    n: &[Polynomial],
    x_order: &MonomialOrder,
    a_order: &MonomialOrder,
    handle: &mut dyn ConsistencyHandle,
) -> Result<CgsResult, CgsError> {
    let (x_ring, p_ring) = rings_of(p)?;
    let combined = combined_ring(&x_ring, &p_ring);
    let block = MonomialOrder::block(x_order.clone(), a_order.clone(), x_ring.n_vars());
    let combined_polys: Vec<Polynomial> = p.iter().map(|q| q.to_combined(&combined)).collect();
    let mut run = PgbRun {
        combined,
        x_ring: x_ring.clone(),
        p_ring: p_ring.clone(),
        block,
        x_order: x_order.clone(),
        a_order: a_order.clone(),
        handle,
        branches: Vec::new(),
        rejected: Vec::new(),
    };
    run.recurse(combined_polys, e.to_vec(), n.to_vec(), 0)?;
    Ok(CgsResult {
        branches: run.branches,
        rejected: run.rejected,
        x_ring,
        param_ring: p_ring,
        x_order: x_order.clone(),
        a_order: a_order.clone(),
    })
}

/// A comprehensive Groebner system with the plain radical-membership
/// consistency test: starts from `E = {}`, `N = {1}`.
pub fn pgb(
    p: &[ParamPolynomial],
    x_order: &MonomialOrder,
    a_order: &MonomialOrder,
) -> Result<CgsResult, CgsError> {
    let (_, p_ring) = rings_of(p)?;
    let mut handle = RadicalConsistency::new();
    pgb_main(
        p,
        &[],
        &[Polynomial::one(&p_ring)],
        x_order,
        a_order,
        &mut handle,
    )
}

fn rings_of(p: &[ParamPolynomial]) -> Result<(Ring, Ring), CgsError> {
    let first = p.first().ok_or(CgsError::MixedRings)?;
    let x_ring = first.x_ring().clone();
    let p_ring = first.param_ring().clone();
    if p
        .iter()
        .any(|q| q.x_ring() != &x_ring || q.param_ring() != &p_ring)
    {
        return Err(CgsError::MixedRings);
    }
    Ok((x_ring, p_ring))
}

#[cfg(test)]
mod tests;
