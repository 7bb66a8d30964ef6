use super::*;
use crate::poly::text::parse_polynomial;
use crate::poly::Ring;

fn ring_xyz() -> Ring {
    Ring::new(vec!["x", "y", "z"])
}

fn p(ring: &Ring, s: &str) -> Polynomial {
    parse_polynomial(s, ring).unwrap()
}

#[test]
fn normal_form_single_step() {
    let ring = ring_xyz();
    let f = p(&ring, "x^2*y");
    let g = p(&ring, "x^2 - 1");
    assert_eq!(normal_form(&f, &[g], &MonomialOrder::Lex), p(&ring, "y"));
}

#[test]
fn normal_form_of_generator_is_zero() {
    let ring = ring_xyz();
    let gens = vec![p(&ring, "x^2 - y*z"), p(&ring, "y^3 - z"), p(&ring, "x*y - z^2")];
    let gb = reduced_groebner_basis(&gens, &MonomialOrder::Lex);
    for g in gb.iter() {
        assert!(normal_form(g, &gb, &MonomialOrder::Lex).is_zero());
    }
    for g in &gens {
        assert!(normal_form(g, &gb, &MonomialOrder::Lex).is_zero());
    }
}

#[test]
fn normal_form_empty_basis_is_identity() {
    let ring = ring_xyz();
    let f = p(&ring, "x^2*y + 3");
    assert_eq!(normal_form(&f, &[], &MonomialOrder::Lex), f);
}

#[test]
fn s_polynomial_by_hand() {
    // S(xy - 1, y^2 - 1) with x > y: y*(xy-1) - x*(y^2-1) = x - y.
    let ring = Ring::new(vec!["x", "y"]);
    let f = p(&ring, "x*y - 1");
    let g = p(&ring, "y^2 - 1");
    let s = s_polynomial(&f, &g, &MonomialOrder::Lex).unwrap();
    assert_eq!(s, p(&ring, "x - y"));
}

#[test]
fn s_polynomial_of_identical_inputs_vanishes() {
    let ring = Ring::new(vec!["x", "y"]);
    let f = p(&ring, "x*y - 1");
    assert!(s_polynomial(&f, &f, &MonomialOrder::Lex).unwrap().is_zero());
}

#[test]
fn coprime_leading_monomials_reduce_to_zero() {
    let ring = Ring::new(vec!["x", "y"]);
    let f = p(&ring, "x - 1");
    let g = p(&ring, "y - 1");
    let s = s_polynomial(&f, &g, &MonomialOrder::Lex).unwrap();
    assert!(normal_form(&s, &[f, g], &MonomialOrder::Lex).is_zero());
}

#[test]
fn trivial_ideal_reduces_to_one() {
    let ring = Ring::new(vec!["x"]);
    let gb = reduced_groebner_basis(&[p(&ring, "x"), p(&ring, "x + 1")], &MonomialOrder::Lex);
    assert_eq!(gb.generators, vec![p(&ring, "1")]);
    assert!(gb.is_trivial());
}

#[test]
fn two_generator_closure_by_hand() {
    // {x^2 - y, y}: the S-pair gives x^2, so the reduced basis is {y, x^2}.
    let ring = Ring::new(vec!["x", "y"]);
    let gb = reduced_groebner_basis(&[p(&ring, "x^2 - y"), p(&ring, "y")], &MonomialOrder::Lex);
    assert_eq!(gb.generators, vec![p(&ring, "x^2"), p(&ring, "y")]);
}

/// Three cubics whose lex basis is triangular with a degree-15 eliminant.
#[test]
fn lex_basis_of_three_cubics_is_triangular() {
    let ring = ring_xyz();
    let gens = vec![
        p(&ring, "x^2 - x*y*z + 1"),
        p(&ring, "y^3 + z^2 - 1"),
        p(&ring, "x*y^2 + z^2"),
    ];
    let gb = reduced_groebner_basis(&gens, &MonomialOrder::Lex);
    assert_eq!(gb.generators.len(), 3);

    let g1 = p(
        &ring,
        "z^15 - 3*z^14 + 5*z^12 - 3*z^10 - z^9 - z^8 + 4*z^6 - 6*z^4 + 4*z^2 - 1",
    );
    // Sorted descending by lex LM: x-element, y-element, z-element.
    let by_lead: Vec<&Polynomial> = gb.generators.iter().collect();
    let x_elt = by_lead[0];
    let y_elt = by_lead[1];
    let z_elt = by_lead[2];
    assert_eq!(z_elt, &g1.monic(&MonomialOrder::Lex));
    // Shape: x - g2(z) and y - g3(z).
    let lead_x = x_elt.leading(&MonomialOrder::Lex).unwrap().0.clone();
    let lead_y = y_elt.leading(&MonomialOrder::Lex).unwrap().0.clone();
    assert_eq!(lead_x.exponents(), &[1, 0, 0]);
    assert_eq!(lead_y.exponents(), &[0, 1, 0]);
    for (m, _) in x_elt.terms() {
        assert!(m == &lead_x || (m.exponents()[0] == 0 && m.exponents()[1] == 0));
    }
    for (m, _) in y_elt.terms() {
        assert!(m == &lead_y || (m.exponents()[0] == 0 && m.exponents()[1] == 0));
    }
    // Membership of an input generator.
    assert!(normal_form(&gens[0], &gb, &MonomialOrder::Lex).is_zero());
}

#[test]
fn eliminate_examples() {
    // Block order x > (a, b); reduced basis of {x - a, x - b} contains a - b.
    let ring = Ring::new(vec!["x", "a", "b"]);
    let order = MonomialOrder::block(MonomialOrder::Lex, MonomialOrder::Grevlex, 1);
    let gb = reduced_groebner_basis(&[p(&ring, "x - a"), p(&ring, "x - b")], &order);
    let elim = eliminate(&gb, &["a".into(), "b".into()]).unwrap();
    assert_eq!(elim, vec![p(&ring, "a - b")]);

    let gb2 = reduced_groebner_basis(&[p(&ring, "a*x - 1"), p(&ring, "a")], &order);
    let elim2 = eliminate(&gb2, &["a".into(), "b".into()]).unwrap();
    assert_eq!(elim2, vec![p(&ring, "1")]);

    let gb3 = reduced_groebner_basis(&[p(&ring, "x - a")], &order);
    assert!(eliminate(&gb3, &["a".into(), "b".into()]).unwrap().is_empty());

    // A non-block order is rejected.
    let gb4 = reduced_groebner_basis(&[p(&ring, "x - a")], &MonomialOrder::Lex);
    assert_eq!(
        eliminate(&gb4, &["a".into(), "b".into()]).unwrap_err(),
        GroebnerError::NotAnEliminationOrder
    );
}

#[test]
fn radical_membership_examples() {
    let ring = Ring::new(vec!["x", "y"]);
    assert!(radical_member(&p(&ring, "x"), &[p(&ring, "x^2")]));
    assert!(!radical_member(&p(&ring, "x"), &[p(&ring, "y")]));

    let abc = Ring::new(vec!["a", "b", "c"]);
    let e = vec![p(&abc, "a - b"), p(&abc, "c - b")];
    let g = p(&abc, "a - c");
    assert!(radical_member(&g, &e));
    // The membership is witnessed by an exact combination: a - c is even
    // in the ideal itself.
    let gb = reduced_groebner_basis(&e, &MonomialOrder::Grevlex);
    assert!(normal_form(&g, &gb, &MonomialOrder::Grevlex).is_zero());
}

#[test]
fn shuffle_invariance_small() {
    let ring = ring_xyz();
    let gens = vec![
        p(&ring, "x^2 - x*y*z + 1"),
        p(&ring, "y^3 + z^2 - 1"),
        p(&ring, "x*y^2 + z^2"),
    ];
    let gb = reduced_groebner_basis(&gens, &MonomialOrder::Grevlex);
    let mut shuffled = gens.clone();
    shuffled.reverse();
    let gb2 = reduced_groebner_basis(&shuffled, &MonomialOrder::Grevlex);
    assert_eq!(gb.generators, gb2.generators);
}
