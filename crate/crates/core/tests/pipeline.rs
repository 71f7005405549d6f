use num_bigint::BigInt;

use twk_core::groebner::Dimension;
use twk_core::oracle::{verify_su2, verify_su3};
use twk_core::su2::{irrep, Su2Status};
use twk_core::su3::{build_differentials, MatrixExport, RegularSequence, Route};
use twk_core::symfunc::h;
use twk_core::{k_groups_su2, k_groups_su3, parse_functor, RingElem, RingTag, Su3Options};

fn su2(text: &str) -> RingElem {
    RingElem::parse(RingTag::SU2, text).unwrap()
}

fn su3(text: &str) -> RingElem {
    RingElem::parse(RingTag::SU3, text).unwrap()
}

#[test]
fn su2_classical_family() {
    for k in 1..=10 {
        let f = parse_functor(&format!("ext_top^{k}")).unwrap();
        let r = k_groups_su2(&f).unwrap();
        assert_eq!(r.g2, irrep(k - 1));
        let k1 = r.k1.as_ref().unwrap();
        assert_eq!(k1.g2_saturated, irrep(k - 1));
        assert_eq!(k1.inverted_integer, BigInt::from(1));
        assert!(r.all_passed());
    }
}

#[test]
fn su2_full_exterior_factorizations() {
    let expected = [
        (3, "(rho+2)*(rho+1)"),
        (4, "rho*(rho+2)^2"),
        (5, "(rho+2)^2*(rho^2+rho-1)"),
        (6, "(rho+2)^3*(rho^2-1)"),
    ];
    for (k, g2) in expected {
        let r = k_groups_su2(&parse_functor(&format!("ext_full^{k}")).unwrap()).unwrap();
        assert_eq!(r.g2, su2(g2), "k = {k}");
    }
    let r = k_groups_su2(&parse_functor("ext_full^6").unwrap()).unwrap();
    let k1 = r.k1.unwrap();
    assert_eq!(k1.g2_saturated, su2("rho^2 - 1"));
    assert_eq!(k1.inverted_integer, BigInt::from(729));
}

#[test]
fn su2_symmetric_character_fails_hypothesis() {
    let r = k_groups_su2(&parse_functor("poly:t + t^-1").unwrap()).unwrap();
    assert_eq!(r.status, Su2Status::HypothesisFailed);
}

#[test]
fn su3_classical_closed_forms() {
    for m in 1..=6 {
        let f = parse_functor(&format!("ext_top^{m}")).unwrap();
        let r = k_groups_su3(&f, &Su3Options::default()).unwrap();
        assert_eq!(r.koszul.psi_plus, -&h(m - 2));
        assert_eq!(r.koszul.psi_minus, h(m - 1));
    }
    let r = k_groups_su3(&parse_functor("ext_top^3").unwrap(), &Su3Options::default()).unwrap();
    assert_eq!(r.chi1, su3("s1"));
    assert_eq!(r.chi2, su3("s1^2 - s2"));
    assert_eq!(r.k0_dimension, Dimension::Finite(1));
}

#[test]
fn su3_complex_route_on_fw() {
    let f = parse_functor("fw(2)").unwrap();
    let opts = Su3Options {
        route: Route::Both,
        seed: 5,
    };
    let r = k_groups_su3(&f, &opts).unwrap();
    assert!(r.all_passed(), "{:?}", r.checks);
    assert!(r.cross_check.unwrap().agree);
    assert_eq!(r.regular_sequence, RegularSequence::Certified);
}

#[test]
fn reports_round_trip_through_json() {
    let f = parse_functor("ext_full^5").unwrap();
    let r = k_groups_su2(&f).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(
        serde_json::from_str::<twk_core::Su2Report>(&json).unwrap(),
        r
    );

    let f = parse_functor("ext_full^2").unwrap();
    let opts = Su3Options {
        route: Route::Both,
        seed: 0,
    };
    let r = k_groups_su3(&f, &opts).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(
        serde_json::from_str::<twk_core::Su3Report>(&json).unwrap(),
        r
    );
}

#[test]
fn oracle_agrees_with_symbolic_reports() {
    for spec in ["ext_full^4", "fw(3)", "poly:2*t^2 + t + 1"] {
        let f = parse_functor(spec).unwrap();
        let r = k_groups_su2(&f).unwrap();
        assert!(
            verify_su2(&f, &r, 50, 2).unwrap().iter().all(|c| c.passed),
            "{spec}"
        );
        let r = k_groups_su3(&f, &Su3Options::default()).unwrap();
        assert!(
            verify_su3(&f, &r, 50, 2).unwrap().iter().all(|c| c.passed),
            "{spec}"
        );
    }
}

#[test]
fn matrix_export_is_integral_and_exact() {
    let f = parse_functor("ext_full^3").unwrap();
    let cx = build_differentials(&f).unwrap();
    let ex = MatrixExport::new(&f, &cx);
    assert_eq!(ex.denominator_exponent, 1);
    assert!(cx.a.entries().iter().flatten().all(|p| p.is_integral()));
    assert!(cx.b.entries().iter().flatten().all(|p| p.is_integral()));
    let back: MatrixExport = serde_json::from_str(&serde_json::to_string(&ex).unwrap()).unwrap();
    let (a, b) = back.matrices().unwrap();
    assert!(b.mul(&a).unwrap().is_zero());
}
