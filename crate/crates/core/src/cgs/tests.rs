use super::*;
use crate::groebner::{normal_form, reduced_groebner_basis};
use crate::poly::text::{parse_param_polynomial, parse_polynomial};

fn rings() -> (Ring, Ring) {
    (Ring::new(vec!["x", "y"]), Ring::new(vec!["a", "b", "c"]))
}

fn pp(x: &Ring, a: &Ring, s: &str) -> ParamPolynomial {
    parse_param_polynomial(s, x, a).unwrap()
}

fn ap(a: &Ring, s: &str) -> Polynomial {
    parse_polynomial(s, a).unwrap()
}

#[test]
fn is_consistent_examples() {
    let (_, a_ring) = rings();
    assert!(is_consistent(&[], &[ap(&a_ring, "1")]));
    assert!(!is_consistent(&[ap(&a_ring, "a")], &[ap(&a_ring, "a")]));
    assert!(is_consistent(
        &[ap(&a_ring, "a*b")],
        &[ap(&a_ring, "a")]
    ));
}

#[test]
fn md_basis_keeps_minimal_cover() {
    let (x_ring, a_ring) = rings();
    let order = MonomialOrder::block(MonomialOrder::Lex, MonomialOrder::Grevlex, 2);
    // Leading monomials x^2, x*y, x^2*y: the last is covered by both.
    let p = vec![
        pp(&x_ring, &a_ring, "x^2"),
        pp(&x_ring, &a_ring, "x*y"),
        pp(&x_ring, &a_ring, "x^2*y"),
    ];
    let m = md_basis(&p, &order).unwrap();
    assert_eq!(m, vec![p[1].clone(), p[0].clone()]);

    let singleton = vec![pp(&x_ring, &a_ring, "a*x - 1")];
    assert_eq!(md_basis(&singleton, &order).unwrap(), singleton);

    let incomparable = vec![pp(&x_ring, &a_ring, "x^2 - y"), pp(&x_ring, &a_ring, "y^2")];
    assert_eq!(md_basis(&incomparable, &order).unwrap().len(), 2);
}

#[test]
fn md_basis_rejects_bad_inputs() {
    let (x_ring, a_ring) = rings();
    let order = MonomialOrder::block(MonomialOrder::Lex, MonomialOrder::Grevlex, 2);
    // Parameter-only element.
    let p = vec![pp(&x_ring, &a_ring, "a - 1")];
    assert!(matches!(
        md_basis(&p, &order),
        Err(CgsError::MdBasisPrecondition(_))
    ));
    // Not a Groebner basis: the S-pair of x*y - 1 and y^2 - 1 survives.
    let p = vec![
        pp(&x_ring, &a_ring, "x*y - 1"),
        pp(&x_ring, &a_ring, "y^2 - 1"),
    ];
    assert!(matches!(
        md_basis(&p, &order),
        Err(CgsError::MdBasisPrecondition(_))
    ));
    // Non-block order.
    assert!(matches!(
        md_basis(&[pp(&x_ring, &a_ring, "x")], &MonomialOrder::Lex),
        Err(CgsError::NotABlockOrder)
    ));
}

#[test]
fn single_parametric_equation_splits_in_two() {
    let (x_ring, a_ring) = rings();
    let p = vec![pp(&x_ring, &a_ring, "a*x - 1")];
    let result = pgb(&p, &MonomialOrder::Lex, &MonomialOrder::Grevlex).unwrap();
    assert_eq!(result.branches.len(), 2);
    let b0 = &result.branches[0].branch;
    assert!(b0.null_conditions.is_empty());
    assert_eq!(b0.nonnull_conditions, vec![ap(&a_ring, "a")]);
    assert_eq!(b0.basis, vec![pp(&x_ring, &a_ring, "a*x - 1")]);
    let b1 = &result.branches[1].branch;
    assert_eq!(b1.null_conditions, vec![ap(&a_ring, "a")]);
    assert_eq!(b1.nonnull_conditions, vec![ap(&a_ring, "1")]);
    assert_eq!(b1.basis, vec![pp(&x_ring, &a_ring, "1")]);
}

#[test]
fn non_parametric_system_is_a_single_branch() {
    let x_ring = Ring::new(vec!["x"]);
    let a_ring = Ring::new(Vec::<String>::new());
    let p = vec![pp(&x_ring, &a_ring, "x^2 + 1")];
    let result = pgb(&p, &MonomialOrder::Lex, &MonomialOrder::Grevlex).unwrap();
    assert_eq!(result.branches.len(), 1);
    let b = &result.branches[0].branch;
    assert!(b.null_conditions.is_empty());
    assert_eq!(b.nonnull_conditions, vec![Polynomial::one(&a_ring)]);
    assert_eq!(b.basis, vec![pp(&x_ring, &a_ring, "x^2 + 1")]);
}

/// The four-branch table of the parametric system
/// {ax - b, by - a, cx^2 - y, cy^2 - x} under graded reverse lex y < x.
#[test]
fn four_equation_parametric_table() {
    let (x_ring, a_ring) = rings();
    let system = vec![
        pp(&x_ring, &a_ring, "a*x - b"),
        pp(&x_ring, &a_ring, "b*y - a"),
        pp(&x_ring, &a_ring, "c*x^2 - y"),
        pp(&x_ring, &a_ring, "c*y^2 - x"),
    ];
    let result = pgb(&system, &MonomialOrder::Grevlex, &MonomialOrder::Grevlex).unwrap();
    assert_eq!(result.branches.len(), 4);

    let cond_set = |a_ring: &Ring, items: &[&str]| -> Vec<Polynomial> {
        items.iter().map(|s| ap(a_ring, s)).collect()
    };
    let big_n = cond_set(
        &a_ring,
        &[
            "a^6 - b^6",
            "a^3*c - b^3",
            "b^3*c - a^3",
            "a*c^2 - a",
            "b*c^2 - b",
        ],
    );

    let b0 = &result.branches[0].branch;
    assert!(b0.null_conditions.is_empty());
    assert_eq!(b0.nonnull_conditions, big_n);
    assert_eq!(b0.basis, vec![pp(&x_ring, &a_ring, "1")]);

    let b1 = &result.branches[1].branch;
    assert_eq!(b1.null_conditions, big_n);
    assert_eq!(b1.nonnull_conditions, vec![ap(&a_ring, "b")]);
    assert_eq!(
        b1.basis,
        vec![
            pp(&x_ring, &a_ring, "b*x - a*c*y"),
            pp(&x_ring, &a_ring, "b*y - a"),
        ]
    );

    let b2 = &result.branches[2].branch;
    assert_eq!(b2.null_conditions, cond_set(&a_ring, &["a", "b"]));
    assert_eq!(b2.nonnull_conditions, vec![ap(&a_ring, "c")]);
    assert_eq!(
        b2.basis,
        vec![
            pp(&x_ring, &a_ring, "c*x^2 - y"),
            pp(&x_ring, &a_ring, "c*y^2 - x"),
        ]
    );

    let b3 = &result.branches[3].branch;
    assert_eq!(b3.null_conditions, cond_set(&a_ring, &["a", "b", "c"]));
    assert_eq!(b3.nonnull_conditions, vec![ap(&a_ring, "1")]);
    assert_eq!(
        b3.basis,
        vec![pp(&x_ring, &a_ring, "x"), pp(&x_ring, &a_ring, "y")]
    );
}

/// The specialization a=b=c=1 of the second branch is a Groebner basis of
/// the specialized ideal.
#[test]
fn specialization_of_second_branch() {
    let (x_ring, a_ring) = rings();
    let system = vec![
        pp(&x_ring, &a_ring, "a*x - b"),
        pp(&x_ring, &a_ring, "b*y - a"),
        pp(&x_ring, &a_ring, "c*x^2 - y"),
        pp(&x_ring, &a_ring, "c*y^2 - x"),
    ];
    let result = pgb(&system, &MonomialOrder::Grevlex, &MonomialOrder::Grevlex).unwrap();
    let branch = &result.branches[1].branch;
    let ones = vec![Rat::from_integer(1.into()); 3];
    let specialized: Vec<Polynomial> = branch
        .basis
        .iter()
        .map(|g| g.evaluate(&ones).unwrap())
        .collect();
    let expected = [
        parse_polynomial("x - y", &x_ring).unwrap(),
        parse_polynomial("y - 1", &x_ring).unwrap(),
    ];
    assert_eq!(specialized, expected);

    // Groebner property of the specialized image against the specialized
    // system: same leading-monomial set as the reduced basis, and both
    // generate the same ideal.
    let sigma_system: Vec<Polynomial> = system
        .iter()
        .map(|g| g.evaluate(&ones).unwrap())
        .collect();
    let order = MonomialOrder::Grevlex;
    let direct = reduced_groebner_basis(&sigma_system, &order);
    let mut direct_lms: Vec<_> = direct
        .iter()
        .map(|g| g.leading(&order).unwrap().0.clone())
        .collect();
    let mut sigma_lms: Vec<_> = specialized
        .iter()
        .map(|g| g.leading(&order).unwrap().0.clone())
        .collect();
    direct_lms.sort();
    sigma_lms.sort();
    assert_eq!(direct_lms, sigma_lms);
    for g in &specialized {
        assert!(normal_form(g, &direct, &order).is_zero());
    }
    for g in direct.iter() {
        assert!(normal_form(g, &specialized, &order).is_zero());
    }
}

#[test]
fn star_takes_pairwise_products() {
    let (_, a_ring) = rings();
    let order = MonomialOrder::Grevlex;
    let lhs = vec![ap(&a_ring, "a"), ap(&a_ring, "b")];
    let rhs = vec![ap(&a_ring, "c")];
    let prod = star(&lhs, &rhs, &order);
    assert_eq!(prod, vec![ap(&a_ring, "a*c"), ap(&a_ring, "b*c")]);
    assert!(star(&lhs, &[], &order).is_empty());
    // Constants collapse to 1 and duplicates merge.
    let with_const = star(&[ap(&a_ring, "2")], &[ap(&a_ring, "3")], &order);
    assert_eq!(with_const, vec![ap(&a_ring, "1")]);
}
