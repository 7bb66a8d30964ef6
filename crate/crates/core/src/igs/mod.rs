//! Interval Groebner systems.
//!
//! An interval polynomial system is turned into a parametric system by
//! giving every interval coefficient its own parameter; the comprehensive
//! branch driver then runs with a consistency test that works inside the
//! parameter box: a condition pair `(E, N)` is kept only when `E` has a
//! real solution in the box at which some element of `N` is nonzero.

mod realroot;
mod witness;

pub use realroot::{real_root_in_box, SearchOptions};

use crate::cgs::{
    self, pgb_main, BranchReport, Certificate, CgsResult, ConsistencyHandle, HandleVerdict,
    RejectedTriple,
};
use crate::groebner::radical_member;
use crate::interval::{ExtRational, Interval};
use crate::poly::{
    IntervalPolynomial, Monomial, MonomialOrder, ParamPolynomial, PolyError, Polynomial, Rat, Ring,
};
use num::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IgsError {
    #[error("interval system must contain at least one polynomial")]
    EmptySystem,
    #[error("interval polynomials live in different rings")]
    MixedRings,
    #[error(
        "box coordinate {0} has an unsupported endpoint combination for the \
         polynomial encoding; use the direct box search"
    )]
    UnsupportedBoxShape(String),
    #[error(transparent)]
    Cgs(#[from] cgs::CgsError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finite set of interval polynomials over one variable list.
#[derive(Debug, Clone)]
pub struct IntervalSystem {
    ring: Ring,
    polys: Vec<IntervalPolynomial>,
}

impl IntervalSystem {
    pub fn new(polys: Vec<IntervalPolynomial>) -> Result<Self, IgsError> {
        let ring = polys
            .first()
            .map(|p| p.ring().clone())
            .ok_or(IgsError::EmptySystem)?;
        if polys.iter().any(|p| p.ring() != &ring) {
            return Err(IgsError::MixedRings);
        }
        Ok(IntervalSystem { ring, polys })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polys(&self) -> &[IntervalPolynomial] {
        &self.polys
    }
}

/// Where a parameter came from: which polynomial, which term (in the
/// descending term order of that polynomial).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub poly: usize,
    pub term: usize,
}

/// The Cartesian product of the interval coefficients, one coordinate per
/// parameter, with full provenance.
#[derive(Debug, Clone)]
pub struct ParamBox {
    ring: Ring,
    coords: Vec<Interval>,
    provenance: Vec<Provenance>,
}

impl ParamBox {
    pub fn empty() -> Self {
        ParamBox {
            ring: Ring::new(Vec::<String>::new()),
            coords: Vec::new(),
            provenance: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.coords
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn interval_of(&self, param: &str) -> Option<&Interval> {
        self.ring.index_of(param).map(|i| &self.coords[i])
    }

    /// Membership respecting every open/closed endpoint flag.
    pub fn contains_point(&self, point: &[Rat]) -> bool {
        point.len() == self.coords.len()
            && self.coords.iter().zip(point).all(|(iv, q)| iv.contains(q))
    }

    /// A box over arbitrary named coordinates, without provenance; used
    /// for variable-sign constraints and direct searches.
    pub fn from_named(coords: Vec<(String, Interval)>) -> Self {
        let (names, intervals): (Vec<String>, Vec<Interval>) = coords.into_iter().unzip();
        let n = intervals.len();
        ParamBox {
            ring: Ring::new(names),
            coords: intervals,
            provenance: vec![Provenance { poly: 0, term: 0 }; n],
        }
    }
}

/// Status of the box-aware consistency decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Consistent,
    Inconsistent,
    Unknown,
}

/// Outcome of a real-root-in-box question, with evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyVerdict {
    pub status: Status,
    pub witness: Option<Vec<Rat>>,
    pub certificate: Option<Certificate>,
}

impl ConsistencyVerdict {
    pub fn consistent(witness: Vec<Rat>) -> Self {
        ConsistencyVerdict {
            status: Status::Consistent,
            witness: Some(witness),
            certificate: Some(Certificate::WitnessFound),
        }
    }

    pub fn inconsistent(certificate: Certificate) -> Self {
        ConsistencyVerdict {
            status: Status::Inconsistent,
            witness: None,
            certificate: Some(certificate),
        }
    }

    pub fn unknown() -> Self {
        ConsistencyVerdict {
            status: Status::Unknown,
            witness: None,
            certificate: Some(Certificate::BudgetExhausted),
        }
    }
}

/// Result of the interval branch driver: surviving branches (each either
/// certified by a witness or conservatively kept as unknown), the pruned
/// triples with their certificates, and the parameter box.
#[derive(Debug, Clone)]
pub struct IgsResult {
    pub branches: Vec<BranchReport>,
    pub rejected: Vec<RejectedTriple>,
    pub param_box: ParamBox,
    pub x_ring: Ring,
    pub param_ring: Ring,
    pub x_order: MonomialOrder,
    pub a_order: MonomialOrder,
}

/// Replaces every non-degenerate interval coefficient by a fresh
/// parameter. Repeated occurrences of the same interval get distinct
/// parameters; degenerate intervals stay rational constants.
pub fn parameterize(sys: &IntervalSystem) -> (Vec<ParamPolynomial>, ParamBox) {
    parameterize_with_prefix(sys, "h")
}

pub fn parameterize_with_prefix(
    sys: &IntervalSystem,
    prefix: &str,
) -> (Vec<ParamPolynomial>, ParamBox) {
    let x_ring = sys.ring().clone();
    let mut prefix = prefix.to_string();
    // Parameter names must not collide with the main variables.
    loop {
        let total: usize = sys.polys.iter().map(|p| p.n_terms()).sum();
        let collision =
            (1..=total).any(|k| x_ring.index_of(&format!("{}{}", prefix, k)).is_some());
        if !collision {
            break;
        }
        prefix.push('_');
    }

    let mut names: Vec<String> = Vec::new();
    let mut coords: Vec<Interval> = Vec::new();
    let mut provenance: Vec<Provenance> = Vec::new();
    let mut term_params: Vec<Vec<Option<usize>>> = Vec::new();
    for (pi, poly) in sys.polys.iter().enumerate() {
        let mut row = Vec::new();
        for (ti, (_, iv)) in poly.terms().enumerate() {
            if iv.is_degenerate() {
                row.push(None);
            } else {
                let k = names.len();
                names.push(format!("{}{}", prefix, k + 1));
                coords.push(iv.clone());
                provenance.push(Provenance { poly: pi, term: ti });
                row.push(Some(k));
            }
        }
        term_params.push(row);
    }
    let p_ring = Ring::new(names);
    let mut out = Vec::with_capacity(sys.polys.len());
    for (pi, poly) in sys.polys.iter().enumerate() {
        let mut terms: Vec<(Monomial, Polynomial)> = Vec::new();
        for (ti, (m, iv)) in poly.terms().enumerate() {
            let coef = match term_params[pi][ti] {
                Some(k) => Polynomial::var(&p_ring, k),
                None => Polynomial::constant(&p_ring, iv.as_point().unwrap().clone()),
            };
            terms.push((m.clone(), coef));
        }
        out.push(ParamPolynomial::from_terms(&x_ring, &p_ring, terms));
    }
    let param_box = ParamBox {
        ring: p_ring,
        coords,
        provenance,
    };
    (out, param_box)
}

/// Encodes "E vanishes somewhere in the box where some element of N is
/// nonzero" as a polynomial system over an enlarged ring: each box
/// coordinate contributes auxiliary square variables, and one product
/// polynomial forces some `g` in `N` to be invertible.
///
/// Supported coordinate shapes: `[a,b)`, `[a,b]`, `[a,inf)`, `(-inf,b]`
/// and the full line. Anything else is rejected; the direct box search
/// handles those.
pub fn augment(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
) -> Result<Vec<Polynomial>, IgsError> {
    let (polys, skipped) = augment_inner(e, n, bx)?;
    if let Some(name) = skipped {
        return Err(IgsError::UnsupportedBoxShape(name));
    }
    Ok(polys)
}

/// As `augment`, but silently skips coordinates the encoding cannot
/// express. Still sound for emptiness tests: it only drops constraints.
pub(crate) fn augment_partial(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
) -> Vec<Polynomial> {
    let (polys, _) = augment_inner(e, n, bx).expect("embedding cannot fail for box parameters");
    polys
}

enum Shape {
    HalfOpen(Rat, Rat),
    Closed(Rat, Rat),
    LowerBounded(Rat),
    UpperBounded(Rat),
    Free,
    Unsupported,
}

fn shape_of(iv: &Interval) -> Shape {
    match (iv.lo(), iv.lo_closed(), iv.hi(), iv.hi_closed()) {
        (ExtRational::Finite(a), true, ExtRational::Finite(b), false) => {
            Shape::HalfOpen(a.clone(), b.clone())
        }
        (ExtRational::Finite(a), true, ExtRational::Finite(b), true) => {
            Shape::Closed(a.clone(), b.clone())
        }
        (ExtRational::Finite(a), true, ExtRational::PosInf, _) => Shape::LowerBounded(a.clone()),
        (ExtRational::NegInf, _, ExtRational::Finite(b), true) => Shape::UpperBounded(b.clone()),
        (ExtRational::NegInf, _, ExtRational::PosInf, _) => Shape::Free,
        _ => Shape::Unsupported,
    }
}

fn augment_inner(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
) -> Result<(Vec<Polynomial>, Option<String>), IgsError> {
    let shapes: Vec<Shape> = bx.intervals().iter().map(shape_of).collect();
    let mut skipped: Option<String> = None;
    let mut aux_count = 0usize;
    for (i, s) in shapes.iter().enumerate() {
        match s {
            Shape::HalfOpen(..) | Shape::LowerBounded(_) | Shape::UpperBounded(_) => {
                aux_count += 1
            }
            Shape::Closed(a, b) => aux_count += if a == b { 0 } else { 2 },
            Shape::Free => {}
            Shape::Unsupported => {
                skipped.get_or_insert_with(|| bx.ring().vars()[i].clone());
            }
        }
    }

    let mut names: Vec<String> = bx.ring().vars().to_vec();
    fn fresh(names: &mut Vec<String>, base: &str, k: usize) -> usize {
        let mut name = format!("{}{}", base, k + 1);
        while names.iter().any(|v| *v == name) {
            name.push('_');
        }
        names.push(name);
        names.len() - 1
    }
    let mut aux_vars: Vec<usize> = Vec::with_capacity(aux_count);
    for i in 0..aux_count {
        aux_vars.push(fresh(&mut names, "t", i));
    }
    let mut inverse_vars: Vec<usize> = Vec::with_capacity(n.len());
    for j in 0..n.len() {
        inverse_vars.push(fresh(&mut names, "u", j));
    }
    let ext = Ring::new(names);

    let mut out: Vec<Polynomial> = Vec::new();
    for p in e {
        out.push(p.embed(&ext)?);
    }
    let mut next_aux = 0usize;
    let take_aux = |next_aux: &mut usize| {
        let v = Polynomial::var(&ext, aux_vars[*next_aux]);
        *next_aux += 1;
        v
    };
    for (i, shape) in shapes.iter().enumerate() {
        let a_var = Polynomial::var(&ext, i);
        match shape {
            Shape::HalfOpen(alpha, beta) => {
                // a + (a - beta) * t^2 - alpha
                let t = take_aux(&mut next_aux);
                let t2 = t.mul(&t);
                let poly = a_var
                    .add(&a_var.sub(&Polynomial::constant(&ext, beta.clone())).mul(&t2))
                    .sub(&Polynomial::constant(&ext, alpha.clone()));
                out.push(poly);
            }
            Shape::Closed(alpha, beta) => {
                if alpha == beta {
                    out.push(a_var.sub(&Polynomial::constant(&ext, alpha.clone())));
                } else {
                    // a - alpha - s^2 and a - beta + t^2
                    let s = take_aux(&mut next_aux);
                    let t = take_aux(&mut next_aux);
                    out.push(
                        a_var
                            .sub(&Polynomial::constant(&ext, alpha.clone()))
                            .sub(&s.mul(&s)),
                    );
                    out.push(
                        a_var
                            .sub(&Polynomial::constant(&ext, beta.clone()))
                            .add(&t.mul(&t)),
                    );
                }
            }
            Shape::LowerBounded(alpha) => {
                let t = take_aux(&mut next_aux);
                out.push(
                    a_var
                        .sub(&Polynomial::constant(&ext, alpha.clone()))
                        .sub(&t.mul(&t)),
                );
            }
            Shape::UpperBounded(beta) => {
                let t = take_aux(&mut next_aux);
                out.push(
                    a_var
                        .sub(&Polynomial::constant(&ext, beta.clone()))
                        .add(&t.mul(&t)),
                );
            }
            Shape::Free | Shape::Unsupported => {}
        }
    }
    // prod_g (u_g * g - 1): forces some g in N to be nonzero.
    let mut product = Polynomial::one(&ext);
    for (j, g) in n.iter().enumerate() {
        let u = Polynomial::var(&ext, inverse_vars[j]);
        product = product.mul(&u.mul(&g.embed(&ext)?).sub(&Polynomial::one(&ext)));
    }
    out.push(product);
    Ok((out, skipped))
}

/// The box-aware consistency test: the pair must be non-redundant (its
/// region meets the box) and must pass the radical filter (some `g` in
/// `N` lies outside the radical of `<E>`).
pub fn interval_is_consistent(
    e: &[Polynomial],
    n: &[Polynomial],
    bx: &ParamBox,
    opts: &SearchOptions,
) -> bool {
    match real_root_in_box(e, n, bx, opts).status {
        Status::Inconsistent => false,
        Status::Consistent => true,
        Status::Unknown => n.iter().any(|g| !radical_member(g, e)),
    }
}

/// Consistency handle threading the box through the branch driver.
pub struct BoxConsistency {
    bx: ParamBox,
    opts: SearchOptions,
    cache: BTreeMap<String, HandleVerdict>,
}

impl BoxConsistency {
    pub fn new(bx: ParamBox, opts: SearchOptions) -> Self {
        BoxConsistency {
            bx,
            opts,
            cache: BTreeMap::new(),
        }
    }
}

impl ConsistencyHandle for BoxConsistency {
    fn check(&mut self, e: &[Polynomial], n: &[Polynomial]) -> HandleVerdict {
        let key = cgs::condition_key(e, n);
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let rr = real_root_in_box(e, n, &self.bx, &self.opts);
        let verdict = match rr.status {
            Status::Inconsistent => HandleVerdict::Inconsistent {
                certificate: rr.certificate.unwrap_or(Certificate::BoxPruned),
            },
            Status::Consistent => HandleVerdict::Consistent {
                witness: rr.witness,
            },
            Status::Unknown => {
                if n.iter().any(|g| !radical_member(g, e)) {
                    HandleVerdict::Unknown
                } else {
                    HandleVerdict::Inconsistent {
                        certificate: Certificate::ComplexEmpty,
                    }
                }
            }
        };
        self.cache.insert(key, verdict.clone());
        verdict
    }
}

/// Options for the interval branch driver.
#[derive(Debug, Clone)]
pub struct IgsOptions {
    pub search: SearchOptions,
    pub a_order: MonomialOrder,
    pub param_prefix: String,
}

impl Default for IgsOptions {
    fn default() -> Self {
        IgsOptions {
            search: SearchOptions::default(),
            a_order: MonomialOrder::Grevlex,
            param_prefix: "h".into(),
        }
    }
}

/// Computes an interval Groebner system: assigns parameters, builds the
/// block order with the main variables greatest, and runs the branch
/// driver with the box-aware consistency test. Redundant condition pairs
/// are pruned before the recursion descends into them.
pub fn igs(
    sys: &IntervalSystem,
    x_order: &MonomialOrder,
    opts: &IgsOptions,
) -> Result<IgsResult, IgsError> {
    let (polys, param_box) = parameterize_with_prefix(sys, &opts.param_prefix);
    let p_ring = param_box.ring().clone();
    let mut handle = BoxConsistency::new(param_box.clone(), opts.search.clone());
    let result: CgsResult = pgb_main(
        &polys,
        &[],
        &[Polynomial::one(&p_ring)],
        x_order,
        &opts.a_order,
        &mut handle,
    )?;
    Ok(IgsResult {
        branches: result.branches,
        rejected: result.rejected,
        param_box,
        x_ring: result.x_ring,
        param_ring: result.param_ring,
        x_order: result.x_order,
        a_order: result.a_order,
    })
}

/// True when every null condition vanishes and some non-null condition
/// does not, at a rational parameter point.
pub fn point_matches_branch(branch: &cgs::Branch, point: &[Rat]) -> bool {
    branch
        .null_conditions
        .iter()
        .all(|p| p.eval(point).is_zero())
        && branch
            .nonnull_conditions
            .iter()
            .any(|p| !p.eval(point).is_zero())
}
