//! Polynomials whose coefficients are intervals.

use super::{Monomial, PolyError, Polynomial, Rat, Ring};
use crate::interval::Interval;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A formal sum of (interval, monomial) pairs with pairwise distinct
/// monomials. It denotes the family of exact polynomials obtained by
/// picking one value from each coefficient interval; a term whose
/// interval is the degenerate zero is dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalPolynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Interval>,
}

impl IntervalPolynomial {
    pub fn zero(ring: &Ring) -> Self {
        IntervalPolynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, Interval)>,
    ) -> Self {
        let mut out = Self::zero(ring);
        for (m, iv) in terms {
            out.add_term(m, iv);
        }
        out
    }

    /// Views an exact polynomial as one with degenerate coefficients.
    pub fn from_polynomial(p: &Polynomial) -> Self {
        IntervalPolynomial {
            ring: p.ring().clone(),
            terms: p
                .terms()
                .map(|(m, c)| (m.clone(), Interval::point(c.clone())))
                .collect(),
        }
    }

    /// Inserts a term; a later term with the same monomial replaces the
    /// earlier one. Degenerate-zero coefficients are dropped.
    pub fn add_term(&mut self, m: Monomial, iv: Interval) {
        if iv.as_point().map_or(false, |q| q.is_zero()) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, iv);
        }
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

    /// Terms in descending canonical monomial order, the same order in
    /// which `family_member` consumes its choices.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Interval)> {
        self.terms.iter().rev()
    }

    /// True when every coefficient is a degenerate interval.
    pub fn is_exact(&self) -> bool {
        self.terms.values().all(|iv| iv.is_degenerate())
    }

    /// The family member with the given coefficient choices, one per term
    /// in `terms()` order. Every choice must lie in its term's interval.
    pub fn family_member(&self, choices: &[Rat]) -> Result<Polynomial, PolyError> {
        if choices.len() != self.terms.len() {
            return Err(PolyError::ChoiceCountMismatch {
                expected: self.terms.len(),
                got: choices.len(),
            });
        }
        let mut out = Polynomial::zero(&self.ring);
        for ((m, iv), c) in self.terms().zip(choices) {
            if !iv.contains(c) {
                return Err(PolyError::ChoiceOutsideInterval(
                    c.to_string(),
                    iv.to_string(),
                ));
            }
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Exact value set at a point: each coefficient interval occurs once,
    /// so the interval sum is the precise set of attainable values.
    pub fn eval_at(&self, point: &[Rat]) -> Interval {
        assert_eq!(point.len(), self.ring.n_vars());
        let mut acc = Interval::point(Rat::zero());
        for (m, iv) in &self.terms {
            let mut factor = Rat::from_integer(1.into());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    factor *= num::pow::pow(point[i].clone(), e as usize);
                }
            }
            acc = acc.add(&iv.mul(&Interval::point(factor)));
        }
        acc
    }
}

impl fmt::Debug for IntervalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
