//! Exact computer algebra for polynomial systems whose coefficients are
//! real intervals.
//!
//! The crate is organized bottom-up:
//!
//! * [`interval`] — interval arithmetic over extended rationals with
//!   open/closed endpoint tracking,
//! * [`poly`] — sparse multivariate polynomials over the rationals,
//!   parametric polynomials and interval polynomials with monomial orders,
//! * [`groebner`] — Buchberger engine: normal forms, reduced bases,
//!   elimination and radical membership,
//! * [`cgs`] — comprehensive Groebner systems for parametric ideals,
//! * [`igs`] — interval Groebner systems: the box-aware consistency test
//!   and the branch driver,
//! * [`apps`] — univariate interval root sets, interval divisibility and
//!   fuzzy system resolution.

pub mod apps;
pub mod cgs;
pub mod groebner;
pub mod igs;
pub mod interval;
pub mod poly;
pub mod unipoly;

pub use interval::{ExtRational, Interval, IntervalError, IntervalUnion};
pub use poly::{
    IntervalPolynomial, Monomial, MonomialOrder, ParamPolynomial, PolyError, Polynomial, Rat, Ring,
};
