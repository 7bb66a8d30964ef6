use super::*;
use num::{BigInt, One, Zero};
use std::str::FromStr;

fn q(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn r(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn iv(s: &str) -> Interval {
    Interval::from_str(s).unwrap()
}

#[test]
fn construction_invariants() {
    assert_eq!(
        Interval::closed(r(3), r(1)).unwrap_err(),
        IntervalError::InvalidBounds
    );
    assert_eq!(
        Interval::new(ExtRational::from(r(1)), ExtRational::PosInf, true, true).unwrap_err(),
        IntervalError::ClosedInfinity
    );
    assert_eq!(
        Interval::half_open(r(2), r(2)).unwrap_err(),
        IntervalError::OpenDegenerate
    );
}

#[test]
fn add_sums_endpoints() {
    assert_eq!(iv("[1,2]").add(&iv("[1,3]")), iv("[2,5]"));
    // Open flags win on each side.
    assert_eq!(iv("[1,2)").add(&iv("(0,1]")), iv("(1,3)"));
}

#[test]
fn sub_of_interval_from_itself_contains_zero() {
    let x = iv("[0,1]");
    assert_eq!(x.sub(&x), iv("[-1,1]"));
    assert!(x.sub(&x).contains(&Rat::zero()));
}

#[test]
fn div_matches_worked_identities() {
    // [1,2] / ([1,2] + [1,3]) evaluated stepwise.
    let sum = iv("[1,2]").add(&iv("[1,3]"));
    assert_eq!(sum, iv("[2,5]"));
    assert_eq!(iv("[1,2]").div(&sum).unwrap(), iv("[1/5,1]"));
    // 1 / [3/2, 4]
    assert_eq!(iv("[1,1]").div(&iv("[3/2,4]")).unwrap(), iv("[1/4,2/3]"));
}

#[test]
fn div_rejects_zero_containing_divisor() {
    assert_eq!(
        iv("[1,1]").div(&iv("[0,2]")).unwrap_err(),
        IntervalError::DivisorContainsZero
    );
    assert_eq!(
        iv("[1,1]").div(&iv("[-1,1]")).unwrap_err(),
        IntervalError::DivisorContainsZero
    );
    // An open zero endpoint is allowed.
    assert_eq!(iv("[1,1]").div(&iv("(0,2]")).unwrap(), iv("[1/2,inf)"));
}

#[test]
fn recip_cases() {
    assert_eq!(
        iv("[1,2]").recip().unwrap().parts(),
        &[iv("[1/2,1]")]
    );
    // Zero lower endpoint: [1/b, +inf), left endpoint keeps b's flag.
    assert_eq!(iv("[0,2]").recip().unwrap().parts(), &[iv("[1/2,inf)")]);
    assert_eq!(iv("[0,2)").recip().unwrap().parts(), &[iv("(1/2,inf)")]);
    // Zero upper endpoint: (-inf, 1/a].
    assert_eq!(iv("[-2,0]").recip().unwrap().parts(), &[iv("(-inf,-1/2]")]);
    // Zero inside: two unbounded parts.
    assert_eq!(
        iv("[-2,3]").recip().unwrap().parts(),
        &[iv("(-inf,-1/2]"), iv("[1/3,inf)")]
    );
    assert_eq!(
        iv("[0,0]").recip().unwrap_err(),
        IntervalError::RecipOfZero
    );
}

#[test]
fn pow_cases() {
    // Straddling zero, even power: [0, b^2] with right flag from the
    // endpoint of larger magnitude.
    let x = Interval::new(ExtRational::from(r(-1)), ExtRational::from(r(2)), true, false).unwrap();
    let sq = x.pow(2);
    assert_eq!(sq, iv("[0,4)"));
    let y = Interval::new(ExtRational::from(r(-2)), ExtRational::from(r(1)), false, true).unwrap();
    let sq = y.pow(2);
    // |lo| > |hi|, so the upper flag comes from the (open) lower endpoint.
    assert_eq!(sq, iv("[0,4)"));
    assert_eq!(iv("[1,2]").pow(3), iv("[1,8]"));
    assert_eq!(iv("[-3,1]").pow(0), iv("[1,1]"));
    assert_eq!(iv("[-2,-1]").pow(3), iv("[-8,-1]"));
    assert_eq!(iv("[-2,-1]").pow(2), iv("[1,4]"));
}

#[test]
fn pow_agrees_with_sampled_image_hull() {
    // Oracle: the hull of x^n over rational samples of the interval must
    // land inside pow's result, and the endpoints must be attained in the
    // closed case.
    let x = iv("[-2,1]");
    let n = 2;
    let p = x.pow(n);
    let mut max_seen = r(-1);
    for k in 0..=10_000 {
        let t = q(k, 10_000); // t in [0,1]
        let sample = x.lo().as_finite().unwrap() * (Rat::one() - t.clone())
            + x.hi().as_finite().unwrap() * t;
        let v = num::pow::pow(sample, n as usize);
        assert!(p.contains(&v));
        if v > max_seen {
            max_seen = v;
        }
    }
    assert_eq!(max_seen, r(4));
    assert_eq!(p, iv("[0,4]"));
}

#[test]
fn contains_respects_flags() {
    assert!(!iv("[1,3)").contains(&r(3)));
    assert!(iv("[1,3)").contains(&r(1)));
    assert!(iv("(-inf,2]").contains(&r(-1_000_000_000)));
    assert!(!iv("(1,3)").contains(&r(1)));
}

#[test]
fn mul_flag_follows_attaining_pair() {
    // [1,2) * [3,4]: max product 8 attained only by the open endpoint 2.
    assert_eq!(iv("[1,2)").mul(&iv("[3,4]")), iv("[3,8)"));
    // [-1,2] * [-1,2]: min -2 attained by (closed -1, closed 2) pairs.
    assert_eq!(iv("[-1,2]").mul(&iv("[-1,2]")), iv("[-2,4]"));
    // Tie with one closed attaining pair stays closed:
    // [-2,2] * [-1,1] attains -2 as (-2)*1 and 2*(-1).
    assert_eq!(iv("[-2,2]").mul(&iv("[-1,1]")), iv("[-2,2]"));
}

#[test]
fn indeterminate_endpoint_products_widen_to_the_line() {
    let unbounded = iv("[2,inf)");
    assert_eq!(iv("[0,1]").mul(&unbounded), Interval::full_line());
}

#[test]
fn parse_display_round_trip() {
    for s in ["[1,2]", "(1,2]", "[1,2)", "(1,2)", "(-inf,-1/2]", "[1/3,inf)"] {
        assert_eq!(iv(s).to_string(), s);
    }
    assert!(Interval::from_str("[2,1]").is_err());
    assert!(Interval::from_str("[1,inf]").is_err());
}

#[test]
fn bisect_covers_parent() {
    let x = iv("[0,1)");
    let (l, r_half) = x.bisect();
    assert_eq!(l, iv("[0,1/2]"));
    assert_eq!(r_half, iv("[1/2,1)"));
}

mod properties {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_interval(rng: &mut ChaCha8Rng) -> Interval {
        let a = q(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=8));
        let b = q(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=8));
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let lo_closed = rng.gen_bool(0.5) || lo == hi;
        let hi_closed = rng.gen_bool(0.5) || lo == hi;
        Interval::new(
            ExtRational::from(lo),
            ExtRational::from(hi),
            lo_closed,
            hi_closed,
        )
        .unwrap()
    }

    fn sample_in(rng: &mut ChaCha8Rng, x: &Interval) -> Rat {
        // Interior-biased rational sample.
        let lo = x.lo().as_finite().unwrap();
        let hi = x.hi().as_finite().unwrap();
        if lo == hi {
            return lo.clone();
        }
        let t = q(rng.gen_range(1i64..=255), 256);
        lo + (hi - lo) * t
    }

    /// Every op's result contains all pointwise results.
    #[test]
    fn set_semantics_soundness() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..250 {
            let x = random_interval(&mut rng);
            let y = random_interval(&mut rng);
            let sum = x.add(&y);
            let diff = x.sub(&y);
            let prod = x.mul(&y);
            let quot = x.div(&y).ok();
            for _ in 0..4 {
                let a = sample_in(&mut rng, &x);
                let b = sample_in(&mut rng, &y);
                assert!(sum.contains(&(&a + &b)));
                assert!(diff.contains(&(&a - &b)));
                assert!(prod.contains(&(&a * &b)));
                if let Some(quot) = &quot {
                    if !b.is_zero() {
                        assert!(quot.contains(&(&a / &b)));
                    }
                }
            }
        }
    }

    /// Each finite endpoint of an op result is attained by an endpoint pair.
    #[test]
    fn endpoint_tightness() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let x = random_interval(&mut rng);
            let y = random_interval(&mut rng);
            let endpoints = |i: &Interval| {
                vec![
                    i.lo().as_finite().unwrap().clone(),
                    i.hi().as_finite().unwrap().clone(),
                ]
            };
            let check = |res: &Interval, vals: Vec<Rat>| {
                for e in [res.lo(), res.hi()] {
                    if let Some(e) = e.as_finite() {
                        assert!(vals.contains(e), "endpoint {} not attained", e);
                    }
                }
            };
            let xe = endpoints(&x);
            let ye = endpoints(&y);
            let mut sums = Vec::new();
            let mut prods = Vec::new();
            for a in &xe {
                for b in &ye {
                    sums.push(a + b);
                    prods.push(a * b);
                }
            }
            check(&x.add(&y), sums);
            check(&x.mul(&y), prods);
        }
    }

    #[test]
    fn subdistributivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let x = random_interval(&mut rng);
            let y = random_interval(&mut rng);
            let z = random_interval(&mut rng);
            let lhs = x.mul(&y.add(&z));
            let rhs = x.mul(&y).add(&x.mul(&z));
            assert!(
                rhs.contains_interval(&lhs),
                "x(y+z) = {} not inside xy+xz = {}",
                lhs,
                rhs
            );
        }
    }

    #[test]
    fn one_in_x_times_recip_and_zero_in_x_minus_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let one = Rat::one();
        let mut checked = 0;
        while checked < 200 {
            let x = random_interval(&mut rng);
            if x.is_degenerate() || x.contains_zero() {
                continue;
            }
            let recip = x.recip().unwrap();
            assert_eq!(recip.parts().len(), 1);
            assert!(x.mul(&recip.parts()[0]).contains(&one));
            assert!(x.add(&x.neg()).contains(&Rat::zero()));
            checked += 1;
        }
    }

    /// x^n lies inside the n-fold product, with equal endpoints when the
    /// interval is nonnegative.
    #[test]
    fn pow_inside_repeated_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let x = random_interval(&mut rng);
            for n in 1u32..=4 {
                let powed = x.pow(n);
                let mut repeated = x.clone();
                for _ in 1..n {
                    repeated = repeated.mul(&x);
                }
                assert!(
                    repeated.contains_interval(&powed),
                    "{}^{} = {} outside {}",
                    x,
                    n,
                    powed,
                    repeated
                );
                if x.lo().as_finite().map_or(false, |l| !l.is_negative()) {
                    assert_eq!(powed.lo(), repeated.lo());
                    assert_eq!(powed.hi(), repeated.hi());
                }
            }
        }
    }
}
