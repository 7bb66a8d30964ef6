//! Monomial orderings.
//!
//! A ring lists its variables in decreasing significance, so `Lex` and
//! `Grevlex` read the exponent vector with index 0 as the greatest
//! variable. `Block` compares a leading group of variables first and
//! breaks ties with the remaining ones; with the main variables in the
//! leading group this is the elimination order used for parametric
//! computations.

use super::{Monomial, PolyError};
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Pure lexicographic.
    Lex,
    /// Graded reverse lexicographic: total degree first, ties broken by
    /// the smallest exponent difference in the last variables.
    Grevlex,
    /// Block order: `first` on the leading `split` exponents, ties broken
    /// by `second` on the rest.
    Block {
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
        split: usize,
    },
}

impl MonomialOrder {
    pub fn block(first: MonomialOrder, second: MonomialOrder, split: usize) -> Self {
        MonomialOrder::Block {
            first: Box::new(first),
            second: Box::new(second),
            split,
        }
    }

    /// Total comparison of two monomials in the same ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.len() != b.len() {
            return Err(PolyError::VariableCountMismatch(a.len(), b.len()));
        }
        Ok(self.cmp_exps(a.exponents(), b.exponents()))
    }

    /// As `compare`, for callers that already know the ring matches.
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        self.cmp_exps(a.exponents(), b.exponents())
    }

    fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        // Rightmost differing exponent decides, reversed:
                        // the larger exponent there makes the smaller monomial.
                        for (x, y) in a.iter().zip(b).rev() {
                            match x.cmp(y) {
                                Ordering::Equal => continue,
                                other => return other.reverse(),
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
            MonomialOrder::Block {
                first,
                second,
                split,
            } => {
                let split = (*split).min(a.len());
                match first.cmp_exps(&a[..split], &b[..split]) {
                    Ordering::Equal => second.cmp_exps(&a[split..], &b[split..]),
                    other => other,
                }
            }
        }
    }

    /// The order applied to the leading block, if this is a block order.
    pub fn block_parts(&self) -> Option<(&MonomialOrder, &MonomialOrder, usize)> {
        match self {
            MonomialOrder::Block {
                first,
                second,
                split,
            } => Some((first, second, *split)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_first_exponent_dominates() {
        // vars x > y: x^2 y vs x y^3
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn grevlex_total_degree_first() {
        // x y^2 (degree 3) vs x^2 (degree 2)
        let a = m(&[1, 2]);
        let b = m(&[2, 0]);
        assert_eq!(
            MonomialOrder::Grevlex.compare(&a, &b).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_tie_break_matches_definition() {
        // Brute-force cross-check on all degree-2 monomials in 3 variables:
        // on a degree tie the monomial with the larger exponent in the
        // last differing variable is the smaller one.
        fn reference(a: &[u32], b: &[u32]) -> Ordering {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            if da != db {
                return da.cmp(&db);
            }
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        let mut degree_two = Vec::new();
        for i in 0..=2u32 {
            for j in 0..=(2 - i) {
                degree_two.push(vec![i, j, 2 - i - j]);
            }
        }
        for a in &degree_two {
            for b in &degree_two {
                assert_eq!(
                    MonomialOrder::Grevlex
                        .compare(&m(a), &m(b))
                        .unwrap(),
                    reference(a, b),
                    "grevlex mismatch on {:?} vs {:?}",
                    a,
                    b
                );
            }
        }
        // In particular xz < y^2 (vars x > y > z).
        assert_eq!(
            MonomialOrder::Grevlex
                .compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]))
                .unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn mismatched_lengths_error() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(MonomialOrder::Lex.compare(&a, &b).is_err());
    }

    #[test]
    fn block_compares_leading_group_first() {
        // vars [x, a]: x dominates regardless of a.
        let order = MonomialOrder::block(MonomialOrder::Lex, MonomialOrder::Lex, 1);
        let xa0 = m(&[1, 0]);
        let a5 = m(&[0, 5]);
        assert_eq!(order.compare(&xa0, &a5).unwrap(), Ordering::Greater);
    }
}
