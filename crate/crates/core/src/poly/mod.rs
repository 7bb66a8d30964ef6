//! Sparse multivariate polynomials over the rationals, parametric
//! polynomials with polynomial coefficients, and interval polynomials.

mod interval_poly;
mod monomial;
mod order;
mod parametric;
mod polynomial;
pub mod text;

pub use interval_poly::IntervalPolynomial;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parametric::ParamPolynomial;
pub use polynomial::{Polynomial, Ring};

use thiserror::Error;

/// Exact rational coefficients with arbitrary precision.
pub type Rat = num::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("monomials have mismatched variable counts ({0} vs {1})")]
    VariableCountMismatch(usize, usize),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("missing value for {0}")]
    MissingAssignment(String),
    #[error("coefficient choice {0} lies outside its interval {1}")]
    ChoiceOutsideInterval(String, String),
    #[error("expected {expected} coefficient choices, got {got}")]
    ChoiceCountMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
}
