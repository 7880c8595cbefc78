//! Identity catalog, factor extraction and the quartic example.

mod common;

use common::*;
use elimkit::exactalg::{upoly_exact_div, Ring, UniPoly};
use elimkit::harness::{check_degree_of, gen_specialization, Mode, Specialization, SpecializationSpec};
use elimkit::identities::{
    coeff_slots, disc_res_sign_exponent, discdisc_constant, evaluate, extract_d, extract_f, extract_t, extract_u,
    quartic_polynomial, quartic_showcase, ternary_form, u00, Evaluation, IdentityId,
};
use elimkit::macaulay::res_xs;
use elimkit::multipoly::{mp_delta, parse_poly, Monomial, MultiPoly, X1, X2, X3, X4};
use elimkit::sylvester::disc_in;
use elimkit::ElimError;
use num_bigint::BigInt;
use num_integer::Integer;

fn int_forms(id: IdentityId, degs: &[u32], seed: u64) -> Vec<Poly> {
    match gen_specialization(&id.poly_degrees(degs), &SpecializationSpec::new(Mode::Integer, seed)).unwrap() {
        Specialization::Integer(v) => v,
        Specialization::Poly(_) => unreachable!(),
    }
}

fn x_forms(id: IdentityId, degs: &[u32], seed: u64) -> Vec<MultiPoly<UniPoly>> {
    match gen_specialization(&id.poly_degrees(degs), &SpecializationSpec::new(Mode::UniPolyInX, seed)).unwrap() {
        Specialization::Poly(v) => v,
        Specialization::Integer(_) => unreachable!(),
    }
}

fn qty<R: Ring>(ev: &Evaluation<R>, name: &str) -> R {
    ev.quantity(name).unwrap_or_else(|| panic!("no quantity {name}")).clone()
}

fn pow_term(var: usize, d: u32) -> Poly {
    MultiPoly::term(bi(1), Monomial::var(var, d))
}

fn primitive(p: &UniPoly) -> UniPoly {
    let c = p.content();
    let q = upoly_exact_div(p, &UniPoly::constant(c)).unwrap();
    if q.leading() < bi(0) {
        q.negate()
    } else {
        q
    }
}

// ---------------------------------------------------------------- slots

#[test]
fn coefficient_slots_cover_every_monomial_once() {
    for d in 1..6 {
        let slots = coeff_slots(d);
        assert_eq!(slots.len() as u32, (d + 1) * (d + 2) / 2);
        let coeffs: Vec<BigInt> = (1..=slots.len() as i64).map(bi).collect();
        let f = ternary_form(&coeffs, d);
        assert!(f.is_homogeneous(d));
        assert_eq!(f.num_terms(), slots.len());
        assert_eq!(u00(&f, d), bi(1), "slot (0,0) is the X3^d coefficient");
    }
}

// ---------------------------------------------------------------- I1

#[test]
fn res_res_pure_powers_give_sign() {
    for degs in [[1, 1, 1, 1], [2, 1, 1, 1], [1, 2, 1, 1], [1, 1, 1, 2], [2, 2, 1, 1], [1, 1, 3, 1]] {
        let ps = [pow_term(X1, degs[0]), pow_term(X3, degs[1]), pow_term(X2, degs[2]), pow_term(X3, degs[3])];
        let ev = evaluate(IdentityId::I1, &degs, &ps).unwrap();
        let want = if degs.iter().product::<u32>() % 2 == 0 { bi(1) } else { bi(-1) };
        assert!(ev.all_equal(), "{degs:?}");
        assert_eq!(qty(&ev, "iterated"), want, "{degs:?}");
    }
}

#[test]
fn res_res_random_integer_specializations() {
    for seed in 0..5 {
        let ps = int_forms(IdentityId::I1, &[2, 1, 1, 1], seed);
        assert!(evaluate(IdentityId::I1, &[2, 1, 1, 1], &ps).unwrap().all_equal());
    }
}

// ---------------------------------------------------------------- T

#[test]
fn t_is_one_for_conics() {
    for seed in 0..5 {
        let ps = int_forms(IdentityId::I5, &[2, 3], seed);
        assert_eq!(extract_t(&ps[0], &ps[1], 2, 3).unwrap(), bi(1));
    }
}

#[test]
fn t_bidegree_for_cubic_and_line() {
    assert!(check_degree_of(IdentityId::I5, &[3, 1], 0, "T", 8, 11).unwrap());
    assert!(check_degree_of(IdentityId::I5, &[3, 1], 1, "T", 6, 11).unwrap());
}

#[test]
fn t_with_vanishing_leading_coefficient_is_degenerate() {
    let ps = int_forms(IdentityId::I5, &[3, 1], 4);
    let p1 = ps[0].minus(&MultiPoly::term(u00(&ps[0], 3), Monomial::var(X3, 3)));
    assert!(matches!(extract_t(&p1, &ps[1], 3, 1), Err(ElimError::DegenerateInput(_))));
}

// ---------------------------------------------------------------- D

#[test]
fn d_squares_back_in_integer_mode() {
    for seed in 0..5 {
        let ps = int_forms(IdentityId::I8, &[2, 2], seed);
        let d = extract_d(&ps[0], &ps[1], 2, 2).unwrap();
        let r = res_xs(
            &[ps[0].clone(), mp_delta(&ps[0], X3, X4), ps[1].clone(), mp_delta(&ps[1], X3, X4)],
            &[2, 1, 2, 1],
        )
        .unwrap();
        assert_eq!(&d * &d, r);
    }
}

#[test]
fn d_degree_under_first_form_scaling() {
    assert!(check_degree_of(IdentityId::I8, &[2, 2], 0, "D", 3, 5).unwrap());
}

#[test]
fn d_of_equal_forms_is_zero() {
    let ps = x_forms(IdentityId::I8, &[2, 2], 9);
    assert!(extract_d(&ps[0], &ps[0], 2, 2).unwrap().is_zero());
}

// ---------------------------------------------------------------- F

#[test]
fn flex_resultant_of_cubic_divisible_by_64_u_squared() {
    for seed in 0..5 {
        let p = &int_forms(IdentityId::I10, &[3], seed)[0];
        let u = u00(p, 3);
        let r = res_xs(&[p.clone(), p.partial(X3), p.partial(X3).partial(X3)], &[3, 2, 1]).unwrap();
        assert!(r.is_multiple_of(&(bi(64) * &u * &u)), "seed {seed}");
        assert_eq!(extract_f(p, 3).unwrap() * bi(64) * &u * &u, r);
    }
}

#[test]
fn f_vanishes_on_a_triple_root() {
    let mut r = rng(2);
    let cube = p("(z - X1)^3");
    for _ in 0..3 {
        let l = random_form(&mut r, 3, 1, 5).plus(&pow_term(X3, 1).scale(&bi(7)));
        assert!(extract_f(&cube.times(&l), 4).unwrap().is_zero());
    }
}

// ---------------------------------------------------------------- U

#[test]
fn u_with_vanishing_leading_coefficient_is_degenerate() {
    let f = &x_forms(IdentityId::I12, &[4], 1)[0];
    let g = f.minus(&MultiPoly::term(u00(f, 4), Monomial::var(X3, 4)));
    assert!(matches!(extract_u(&g, 4), Err(ElimError::DegenerateInput(_))));
}

// ---------------------------------------------------------------- quartic

const QUARTIC_FACTORS: [(&[i64], u32); 3] = [
    (&[-1, 1], 2),
    (&[-173, 125], 2),
    (&[230501936, -212731008, -245928792, 147495688, 47832147], 3),
];

#[test]
fn quartic_report() {
    let rep = quartic_showcase().unwrap();
    assert!(rep.reassembles);
    assert!(rep.classes_confirmed);
    assert_eq!(rep.inner_degree, 12);
    assert_eq!(rep.multiplicities(), vec![1, 2, 2, 3]);
    assert_eq!(rep.factors[0].poly, UniPoly::constant("5540271966595842048".parse().unwrap()));
    assert_eq!(rep.iterated.degree(), Some(10 + 2 + 2 + 12));
}

#[test]
fn quartic_matches_integer_evaluation() {
    // x fixed to an integer first, then both discriminants over Z
    let rep = quartic_showcase().unwrap();
    for x in -3i64..=3 {
        let f = parse_poly("z^4 - y^3*z + 2*z^3 - y*z^2 - y^2 - x*z + 1")
            .unwrap()
            .eval_var(4, &bi(x));
        let inner = disc_in(&f, X3, 4).unwrap();
        let outer = disc_in(&inner, X2, 12).unwrap().constant_term();
        assert_eq!(outer, rep.iterated.eval(&bi(x)), "x = {x}");
    }
}

#[test]
fn quartic_flex_factor_contains_the_quartic() {
    let f = quartic_polynomial();
    let ff = extract_f(&f, 4).unwrap();
    assert!(ff.degree().unwrap() <= 24);
    let quartic = UniPoly::from_i64s(QUARTIC_FACTORS[2].0);
    assert!(upoly_exact_div(&ff, &quartic).is_ok());
}

#[test]
fn quartic_pleat_factor_is_two_lines() {
    let f = quartic_polynomial();
    let uu = extract_u(&f, 4).unwrap();
    let want = UniPoly::from_i64s(QUARTIC_FACTORS[0].0).times(&UniPoly::from_i64s(QUARTIC_FACTORS[1].0));
    assert_eq!(primitive(&uu), want);
}

// ---------------------------------------------------------------- sign and constant corrections

#[test]
fn disc_res_sign_is_always_even() {
    for d1 in 1..8 {
        for d2 in 1..8 {
            assert_eq!(disc_res_sign_exponent(d1, d2), 0, "({d1},{d2})");
        }
    }
}

/// The sign (-1)^((d2+1)(d1 d2+d1-1)) alone predicts -1 at (2,2); on the
/// binomial pair X3^2 + 3 X1^2, X1 X3 - X2^2 every piece is explicit and
/// the iterated discriminant comes out with sign +1.
#[test]
fn disc_res_sign_on_binomial_pair() {
    let p1 = p("z^2 + 3*X1^2");
    let p2 = p("X1*z - y^2");
    let ev = evaluate(IdentityId::I6, &[2, 2], &[p1, p2]).unwrap();
    assert!(ev.all_equal());
    assert_eq!(qty(&ev, "iterated"), bi(6912));
    assert_eq!(qty(&ev, "Res(P1,P2,SRes1)"), bi(1));
    assert_eq!(qty(&ev, "Disc(P1,P2)"), bi(6912));
    let naive = (3 * (2 * 2 + 2 - 1)) % 2;
    assert_eq!(naive, 1);
}

#[test]
fn disc_res_naive_sign_fails_at_random_points() {
    for degs in [[2, 2], [2, 4], [4, 2]] {
        let ps = int_forms(IdentityId::I6, &degs, 3);
        let ev = evaluate(IdentityId::I6, &degs, &ps).unwrap();
        let lhs = qty(&ev, "iterated");
        let prod = qty(&ev, "Res(P1,P2,SRes1)") * qty(&ev, "Disc(P1,P2)");
        assert!(!lhs.is_zero());
        assert_eq!(lhs, prod, "{degs:?}");
        let naive = (degs[1] + 1) * (degs[0] * degs[1] + degs[0] - 1) % 2;
        assert_eq!(naive, 1, "{degs:?}: naive sign is -1 here");
    }
}

#[test]
fn discdisc_needs_power_of_two() {
    assert_eq!(discdisc_constant(4), 24);
    for seed in 0..3 {
        let f = &int_forms(IdentityId::I13, &[4], seed)[0];
        let ev = evaluate(IdentityId::I13, &[4], std::slice::from_ref(f)).unwrap();
        assert!(ev.all_equal());
        let bare = u00(f, 4) * qty(&ev, "Disc(P)") * qty(&ev, "F").pow(3) * qty(&ev, "U").pow(2);
        assert!(!bare.is_zero());
        assert_eq!(qty(&ev, "iterated"), bare * bi(2).pow(24), "seed {seed}");
    }
}

#[test]
fn pleat_quotient_is_odd_for_some_specialization() {
    // R(P) / U^18 odd rules out a factor 2^8 in front of U(P)^2
    let odd = (0..10u64).any(|seed| {
        let f = &int_forms(IdentityId::I12, &[4], seed)[0];
        let ev = evaluate(IdentityId::I12, &[4], std::slice::from_ref(f)).unwrap();
        let q = qty(&ev, "R(P)") / u00(f, 4).pow(18);
        q.is_odd()
    });
    assert!(odd);
}

// ---------------------------------------------------------------- x-mode bounds

#[test]
fn iterated_disc_x_degree_reaches_bound() {
    let f = &x_forms(IdentityId::I13, &[4], 2)[0];
    let ev = evaluate(IdentityId::I13, &[4], std::slice::from_ref(f)).unwrap();
    assert!(ev.all_equal());
    assert_eq!(qty(&ev, "iterated").degree(), Some(4 * 3 * 11));
    assert_eq!(qty(&ev, "F").degree(), Some(24));
    assert_eq!(qty(&ev, "U").degree(), Some(12));
}
