//! Polynomials in the main variables whose coefficients are polynomials
//! in a disjoint set of parameters.

use super::{Monomial, MonomialOrder, PolyError, Polynomial, Rat, Ring};
use std::collections::BTreeMap;
use std::fmt;

/// An element of `K[params][vars]`: a map from monomials in the main
/// variables to nonzero coefficient polynomials in the parameters.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamPolynomial {
    x_ring: Ring,
    p_ring: Ring,
    terms: BTreeMap<Monomial, Polynomial>,
}

impl ParamPolynomial {
    pub fn zero(x_ring: &Ring, p_ring: &Ring) -> Self {
        ParamPolynomial {
            x_ring: x_ring.clone(),
            p_ring: p_ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        x_ring: &Ring,
        p_ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, Polynomial)>,
    ) -> Self {
        let mut out = Self::zero(x_ring, p_ring);
        for (m, c) in terms {
            if !c.is_zero() {
                out.terms.insert(m, c);
            }
        }
        out
    }

    /// Splits a polynomial over the combined ring `[vars..., params...]`
    /// at `n_x` into a parametric polynomial.
    pub fn from_combined(poly: &Polynomial, n_x: usize, x_ring: &Ring, p_ring: &Ring) -> Self {
        debug_assert_eq!(x_ring.n_vars(), n_x);
        debug_assert_eq!(poly.ring().n_vars(), n_x + p_ring.n_vars());
        let mut terms: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in poly.terms() {
            let xm = m.slice(0..n_x);
            let pm = m.slice(n_x..m.len());
            terms
                .entry(xm)
                .or_insert_with(|| Polynomial::zero(p_ring))
                .add_term(pm, c.clone());
        }
        terms.retain(|_, c| !c.is_zero());
        ParamPolynomial {
            x_ring: x_ring.clone(),
            p_ring: p_ring.clone(),
            terms,
        }
    }

    /// Flattens back into the combined ring `[vars..., params...]`.
    pub fn to_combined(&self, combined: &Ring) -> Polynomial {
        let n_x = self.x_ring.n_vars();
        let n_p = self.p_ring.n_vars();
        debug_assert_eq!(combined.n_vars(), n_x + n_p);
        let mut out = Polynomial::zero(combined);
        for (xm, coef) in &self.terms {
            for (pm, c) in coef.terms() {
                let mut exps = Vec::with_capacity(n_x + n_p);
                exps.extend_from_slice(xm.exponents());
                exps.extend_from_slice(pm.exponents());
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
        out
    }

    pub fn x_ring(&self) -> &Ring {
        &self.x_ring
    }

    pub fn param_ring(&self) -> &Ring {
        &self.p_ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    /// Leading monomial in the main variables and its coefficient
    /// polynomial, under an order on the main variables.
    pub fn leading(
        &self,
        x_order: &MonomialOrder,
    ) -> Result<(&Monomial, &Polynomial), PolyError> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| x_order.cmp(a, b))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Specializes every parameter to a rational, dropping vanished terms.
    pub fn evaluate(&self, point: &[Rat]) -> Result<Polynomial, PolyError> {
        if point.len() != self.p_ring.n_vars() {
            let missing = self
                .p_ring
                .vars()
                .get(point.len())
                .cloned()
                .unwrap_or_else(|| "<extra value>".into());
            return Err(PolyError::MissingAssignment(missing));
        }
        let mut out = Polynomial::zero(&self.x_ring);
        for (m, coef) in &self.terms {
            out.add_term(m.clone(), coef.eval(point));
        }
        Ok(out)
    }

    /// A parameter-free image: succeeds when every coefficient is a
    /// rational multiple of the leading coefficient, and returns the
    /// monic representative. This is the normal form used to compare a
    /// branch basis against an exact polynomial.
    pub fn constant_ratio_form(&self, x_order: &MonomialOrder) -> Option<Polynomial> {
        let (_, lead) = self.leading(x_order).ok()?;
        let mut out = Polynomial::zero(&self.x_ring);
        for (m, coef) in &self.terms {
            let ratio = divide_constant_ratio(coef, lead)?;
            out.add_term(m.clone(), ratio);
        }
        Some(out)
    }
}

/// `a / b` when the quotient is a rational constant.
fn divide_constant_ratio(a: &Polynomial, b: &Polynomial) -> Option<Rat> {
    let (mb, cb) = b.terms().next()?;
    let ca = a
        .terms()
        .find(|(ma, _)| *ma == mb)
        .map(|(_, c)| c.clone())?;
    let ratio = ca / cb;
    if a == &b.scale(&ratio) {
        Some(ratio)
    } else {
        None
    }
}

impl fmt::Debug for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
