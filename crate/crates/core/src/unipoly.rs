//! Dense univariate polynomials over the rationals: Euclidean division,
//! gcd, Sturm chains, real-root counting and isolation, and rational
//! root extraction.

use crate::interval::ExtRational;
use crate::poly::Rat;
use num::{BigInt, Integer, One, Signed, Zero};

/// Coefficients ascending by degree; no trailing zero is stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign at an extended point; the sign at an infinity comes from the
    /// leading coefficient and the parity of the degree.
    pub fn sign_at(&self, x: &ExtRational) -> i8 {
        match x {
            ExtRational::Finite(q) => sign(&self.eval(q)),
            ExtRational::PosInf => self.leading().map_or(0, |c| sign(c)),
            ExtRational::NegInf => match self.degree() {
                None => 0,
                Some(d) => {
                    let s = self.leading().map_or(0, |c| sign(c));
                    if d % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                }
            },
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> UniPoly {
        if k.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        UniPoly::new(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Euclidean remainder of `self` by `divisor`.
    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let k = r.leading().unwrap() / &lead;
            let shift = rd - d;
            let mut coeffs = r.coeffs.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                coeffs[j + shift] -= c * &k;
            }
            let next = UniPoly::new(coeffs);
            debug_assert!(next.degree().map_or(true, |nd| nd < rd));
            r = next;
        }
        r
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.recip();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free(&self) -> UniPoly {
        if self.degree().unwrap_or(0) < 2 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, divisor: &UniPoly) -> UniPoly {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let k = r.leading().unwrap() / &lead;
            let shift = rd - d;
            q[shift] = k.clone();
            let mut coeffs = r.coeffs.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                coeffs[j + shift] -= c * &k;
            }
            r = UniPoly::new(coeffs);
        }
        debug_assert!(r.is_zero(), "inexact division");
        UniPoly::new(q)
    }

    /// A bound `M` with every real root inside `(-M, M)`.
    pub fn root_bound(&self) -> Rat {
        let lead = match self.leading() {
            Some(l) => l.clone(),
            None => return Rat::one(),
        };
        let mut max = Rat::zero();
        for c in &self.coeffs {
            let v = (c / &lead).abs();
            if v > max {
                max = v;
            }
        }
        max + Rat::one()
    }

    /// Sturm chain of the square-free part.
    pub fn sturm_chain(&self) -> Vec<UniPoly> {
        let p = self.square_free();
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]).neg();
                if r.is_zero() {
                    break;
                }
                chain.push(r);
            }
        }
        chain
    }
}

fn sign(q: &Rat) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_variations(chain: &[UniPoly], x: &ExtRational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| p.sign_at(x))
        .filter(|s| *s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots_half_open(chain: &[UniPoly], lo: &ExtRational, hi: &ExtRational) -> usize {
    let vl = sign_variations(chain, lo);
    let vh = sign_variations(chain, hi);
    vl.saturating_sub(vh)
}

/// Number of distinct real roots inside an interval with endpoint flags.
pub fn count_roots(
    p: &UniPoly,
    lo: &ExtRational,
    lo_closed: bool,
    hi: &ExtRational,
    hi_closed: bool,
) -> usize {
    if p.is_zero() || lo > hi {
        return 0;
    }
    let chain = p.sturm_chain();
    let sf = &chain[0];
    let mut n = count_roots_half_open(&chain, lo, hi);
    // (lo, hi] counts hi when it is a root; adjust the two flag cases.
    if let ExtRational::Finite(h) = hi {
        if !hi_closed && sf.eval(h).is_zero() {
            n -= 1;
        }
    }
    if let ExtRational::Finite(l) = lo {
        if lo_closed && sf.eval(l).is_zero() {
            n += 1;
        }
    }
    n
}

/// An isolated real root: either exactly rational, or bracketed by an
/// interval with a strict sign change of the square-free polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    Exact(Rat),
    Bracket { lo: Rat, hi: Rat },
}

impl RootLoc {
    pub fn approx(&self) -> f64 {
        match self {
            RootLoc::Exact(q) => rat_to_f64(q),
            RootLoc::Bracket { lo, hi } => (rat_to_f64(lo) + rat_to_f64(hi)) / 2.0,
        }
    }

    pub fn bounds(&self) -> (Rat, Rat) {
        match self {
            RootLoc::Exact(q) => (q.clone(), q.clone()),
            RootLoc::Bracket { lo, hi } => (lo.clone(), hi.clone()),
        }
    }
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    let n = q.numer();
    let d = q.denom();
    let fn_ = bigint_to_f64(n);
    let fd = bigint_to_f64(d);
    fn_ / fd
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    n.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

/// Isolates all distinct real roots, sorted ascending. Brackets shrink
/// below `width`; roots hit exactly during bisection are reported exact.
pub fn isolate_roots(p: &UniPoly, width: &Rat) -> Vec<RootLoc> {
    if p.degree().is_none() {
        return Vec::new();
    }
    let chain = p.sturm_chain();
    let sf = chain[0].clone();
    if sf.degree() == Some(0) {
        return Vec::new();
    }
    let bound = sf.root_bound();
    let mut out = Vec::new();
    let lo = -&bound;
    // The bound is strict, so (lo, hi] captures every root.
    subdivide(&chain, &sf, &lo, &bound, width, &mut out);
    out
}

fn subdivide(
    chain: &[UniPoly],
    sf: &UniPoly,
    lo: &Rat,
    hi: &Rat,
    width: &Rat,
    out: &mut Vec<RootLoc>,
) {
    let n = count_roots_half_open(
        chain,
        &ExtRational::Finite(lo.clone()),
        &ExtRational::Finite(hi.clone()),
    );
    if n == 0 {
        return;
    }
    // An exact hit at the upper endpoint is emitted after the roots
    // strictly below it; the gap radius keeps the left part root-tight.
    if sf.eval(hi).is_zero() {
        if n > 1 {
            let eps = smallest_gap(sf, hi);
            let left_hi = hi - &eps;
            subdivide(chain, sf, lo, &left_hi, width, out);
        }
        out.push(RootLoc::Exact(hi.clone()));
        return;
    }
    if n == 1 && hi - lo < *width {
        out.push(RootLoc::Bracket {
            lo: lo.clone(),
            hi: hi.clone(),
        });
        return;
    }
    let mid = (lo + hi) / Rat::from_integer(2.into());
    subdivide(chain, sf, lo, &mid, width, out);
    subdivide(chain, sf, &mid, hi, width, out);
}

/// A radius below the distance from `x` to any other root of `sf`.
fn smallest_gap(sf: &UniPoly, x: &Rat) -> Rat {
    let chain = sf.sturm_chain();
    let mut eps = Rat::new(BigInt::one(), BigInt::from(2));
    loop {
        let lo = x - &eps;
        let hi = x + &eps;
        let n = count_roots_half_open(
            &chain,
            &ExtRational::Finite(lo),
            &ExtRational::Finite(hi),
        );
        if n <= 1 {
            return eps;
        }
        eps /= Rat::from_integer(4.into());
    }
}

/// Refines a bracket until `hi - lo < width`, keeping the sign change.
pub fn refine_bracket(sf: &UniPoly, loc: RootLoc, width: &Rat) -> RootLoc {
    match loc {
        RootLoc::Exact(q) => RootLoc::Exact(q),
        RootLoc::Bracket { mut lo, mut hi } => {
            let two = Rat::from_integer(2.into());
            let mut s_lo = sf.eval(&lo);
            while &hi - &lo >= *width {
                let mid = (&lo + &hi) / &two;
                let s_mid = sf.eval(&mid);
                if s_mid.is_zero() {
                    return RootLoc::Exact(mid);
                }
                if s_lo.is_positive() == s_mid.is_positive() {
                    lo = mid;
                    s_lo = s_mid;
                } else {
                    hi = mid;
                }
            }
            RootLoc::Bracket { lo, hi }
        }
    }
}

/// All rational roots, found by testing divisor candidates of the
/// primitive integer form. Complete whenever the leading and constant
/// coefficients factor within the candidate cap; roots found are always
/// genuine.
pub fn rational_roots(p: &UniPoly) -> Vec<Rat> {
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    let mut work = p.clone();
    // Factor out x^k first: zero is a root when the constant term vanishes.
    while work.coeffs.first().map_or(false, |c| c.is_zero()) {
        if !out.contains(&Rat::zero()) {
            out.push(Rat::zero());
        }
        work = UniPoly::new(work.coeffs[1..].to_vec());
    }
    if work.degree().unwrap_or(0) == 0 {
        out.sort();
        return out;
    }
    if work.degree() == Some(1) {
        let r = -&work.coeffs[0] / &work.coeffs[1];
        if !out.contains(&r) {
            out.push(r);
        }
        out.sort();
        return out;
    }
    // Clear denominators to a primitive integer polynomial.
    let mut den_lcm = BigInt::one();
    for c in &work.coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = work
        .coeffs
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let a0 = ints.first().unwrap().clone();
    let an = ints.last().unwrap().clone();
    let p_divs = small_divisors(&a0);
    let q_divs = small_divisors(&an);
    for pd in &p_divs {
        for qd in &q_divs {
            for s in [1i8, -1] {
                let cand = Rat::new(pd * BigInt::from(s), qd.clone());
                if work.eval(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

const DIVISOR_CAP: usize = 128;

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n && out.len() < DIVISOR_CAP {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn count_and_isolate_quadratic() {
        // x^2 - 2 has two real roots.
        let p = up(&[-2, 0, 1]);
        assert_eq!(
            count_roots(&p, &ExtRational::NegInf, false, &ExtRational::PosInf, false),
            2
        );
        let roots = isolate_roots(&p, &q(1, 1 << 20));
        assert_eq!(roots.len(), 2);
        let (lo, hi) = roots[1].bounds();
        assert!(&hi - &lo < q(1, 1 << 20));
        assert!(p.eval(&lo).is_negative() != p.eval(&hi).is_negative());
    }

    #[test]
    fn exact_roots_detected() {
        // (x - 1)(x - 2)(x + 3)
        let p = up(&[6, -7, 0, 1]);
        let roots = isolate_roots(&p, &q(1, 1024));
        assert_eq!(roots.len(), 3);
        let rr = rational_roots(&p);
        assert_eq!(rr, vec![q(-3, 1), q(1, 1), q(2, 1)]);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 5)
        let p = up(&[-5, 7, 6]);
        assert_eq!(rational_roots(&p), vec![q(-5, 3), q(1, 2)]);
        // Zero roots are factored out.
        let p = up(&[0, 0, -5, 7, 6]);
        assert_eq!(rational_roots(&p), vec![q(-5, 3), q(0, 1), q(1, 2)]);
    }

    #[test]
    fn count_respects_endpoint_flags() {
        // Roots at 1 and 2.
        let p = up(&[2, -3, 1]);
        let one = ExtRational::Finite(q(1, 1));
        let two = ExtRational::Finite(q(2, 1));
        assert_eq!(count_roots(&p, &one, true, &two, true), 2);
        assert_eq!(count_roots(&p, &one, false, &two, true), 1);
        assert_eq!(count_roots(&p, &one, true, &two, false), 1);
        assert_eq!(count_roots(&p, &one, false, &two, false), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x - 1)^2
        let p = up(&[1, -2, 1]);
        assert_eq!(
            count_roots(&p, &ExtRational::NegInf, false, &ExtRational::PosInf, false),
            1
        );
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((x-1)(x-2), (x-1)(x+4)) = x - 1
        let a = up(&[2, -3, 1]);
        let b = up(&[-4, 3, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
    }
}
