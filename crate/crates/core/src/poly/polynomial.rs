//! Sparse polynomials with exact rational coefficients.

use super::{Monomial, MonomialOrder, PolyError, Rat};
use crate::interval::Interval;
use num::{BigInt, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// The ambient polynomial ring: an ordered list of variable names.
///
/// Variables are listed in decreasing significance for the ring's
/// orderings; see [`MonomialOrder`].
#[derive(Clone, Debug)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Self {
        Ring {
            vars: Arc::new(vars.into_iter().map(Into::into).collect()),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

/// A polynomial stored as a canonical map from monomials to nonzero
/// rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Ring, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.n_vars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(i, ring.n_vars()), Rat::one());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// True for a nonzero constant.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_nonzero_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Evaluates at a full point, one rational per ring variable.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.n_vars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term *= num::pow::pow(point[i].clone(), e as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes variable `i := q`, staying in the same ring.
    pub fn substitute(&self, i: usize, q: &Rat) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            let mut exps = m.exponents().to_vec();
            exps[i] = 0;
            let factor = num::pow::pow(q.clone(), e as usize);
            out.add_term(Monomial::new(exps), c * factor);
        }
        out
    }

    /// Encloses the range over a box, one interval per ring variable.
    /// Term-wise interval arithmetic; the result can overestimate but
    /// always contains every value of the polynomial on the box.
    pub fn eval_interval(&self, box_: &[Interval]) -> Interval {
        assert_eq!(box_.len(), self.ring.n_vars());
        let mut acc = Interval::point(Rat::zero());
        for (m, c) in &self.terms {
            let mut term = Interval::point(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&box_[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// The set of variable indices that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.n_vars();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    /// Reinterprets the polynomial in `target`, matching variables by
    /// name. Fails if a used variable is missing from the target ring.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.index_of(v))
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.n_vars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    match map[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(PolyError::UnknownVariable(self.ring.vars()[i].clone()))
                        }
                    }
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e > 0 {
                let mut exps = m.exponents().to_vec();
                exps[i] = e - 1;
                out.add_term(Monomial::new(exps), c * Rat::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// The positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero polynomial maps to 1.
    pub fn content(&self) -> Rat {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            Rat::one()
        } else {
            Rat::new(num_gcd, den_lcm)
        }
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient under `order`.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.scale(&self.content().recip());
        if out.leading(order).unwrap().1.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact polynomial quotient `self / divisor`, when the division
    /// leaves no remainder.
    pub fn exact_div(&self, divisor: &Polynomial, order: &MonomialOrder) -> Option<Polynomial> {
        debug_assert_eq!(self.ring, divisor.ring);
        let (dm, dc) = divisor.leading(order)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((lm, lc)) = rem.leading(order) {
            let q = lm.div(dm)?;
            let k = lc / dc;
            quot.add_term(q.clone(), k.clone());
            rem = rem.sub(&divisor.mul_term(&q, &k));
        }
        Some(quot)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;

    fn ring() -> Ring {
        Ring::new(vec!["x", "y"])
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn arithmetic_round_trip() {
        let f = p("x^2 - 2*x*y + 1");
        let g = p("x + y");
        assert_eq!(f.add(&g).sub(&g), f);
        assert_eq!(f.mul(&g), g.mul(&f));
    }

    #[test]
    fn exact_division() {
        let f = p("x^2 - y^2");
        let g = p("x - y");
        let q = f.exact_div(&g, &MonomialOrder::Lex).unwrap();
        assert_eq!(q, p("x + y"));
        assert!(p("x^2 + 1").exact_div(&g, &MonomialOrder::Lex).is_none());
    }

    #[test]
    fn primitive_clears_denominators() {
        let f = p("1/2*x + 1/3");
        let prim = f.primitive(&MonomialOrder::Lex);
        assert_eq!(prim, p("3*x + 2"));
    }

    #[test]
    fn substitute_and_eval_agree() {
        let f = p("x^2*y - 3*x + y");
        let two = Rat::from_integer(2.into());
        let five = Rat::from_integer(5.into());
        let g = f.substitute(0, &two);
        assert_eq!(g.eval(&[Rat::zero(), five.clone()]), f.eval(&[two, five]));
    }
}
