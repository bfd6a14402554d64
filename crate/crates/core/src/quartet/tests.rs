use std::collections::HashMap;
use std::sync::OnceLock;

use super::*;
use crate::geom::concyclic_det;
use crate::{Poly, Scalar};

fn scene() -> &'static SymbolicScene {
    static SCENE: OnceLock<SymbolicScene> = OnceLock::new();
    SCENE.get_or_init(|| build_scene().expect("generic scene builds"))
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn sample() -> [Rational; 4] {
    [r(1, 3), r(1, 4), r(2, 3), r(1, 5)]
}

fn same(p: &Point<RatFunc>, q: &Point<RatFunc>) -> bool {
    p.x.field_eq(&q.x) && p.y.field_eq(&q.y)
}

#[test]
fn normalization() {
    let s = scene();
    assert!(same(&s.a, &Point::new(RatFunc::from_i64(0), RatFunc::from_i64(0))));
    assert!(same(&s.d, &Point::new(RatFunc::from_i64(1), RatFunc::from_i64(0))));
}

#[test]
fn starred_points_match_closed_forms() {
    let formulas = Formulas::load();
    assert!(same(&scene().b_star, &formulas.bstar));
    assert!(same(&scene().c_star, &formulas.cstar));
}

#[test]
fn one_line_proof() {
    assert!(replay_one_line_proof(scene()));

    let numeric = QuadrilateralScene::from_params(r(1, 3), r(1, 4), r(2, 3), r(1, 5)).unwrap();
    let lhs = geom::de_sq(&numeric.b_star, &numeric.a);
    assert_eq!(lhs, geom::de_sq(&numeric.c_star, &numeric.a));
    assert_eq!(lhs, r(1225, 24336));

    let mut broken = scene().clone();
    broken.c_star = broken.c_star.clone() + Point::new(RatFunc::from_i64(1), RatFunc::from_i64(0));
    assert!(!replay_one_line_proof(&broken));
}

#[test]
fn quartet_holds_symbolically() {
    let checks = verify_quartet(scene());
    assert_eq!(checks.len(), 8);
    assert!(checks.iter().all(|c| c.passed), "{checks:?}");
}

#[test]
fn quartet_detects_a_reflected_starred_point() {
    // Reflect through A = origin: P -> -P.
    type Setter = fn(&mut SymbolicScene);
    let variants: [Setter; 4] = [
        |s| s.a_star = -s.a_star.clone(),
        |s| s.b_star = -s.b_star.clone(),
        |s| s.c_star = -s.c_star.clone(),
        |s| s.d_star = -s.d_star.clone(),
    ];
    for setter in variants {
        let mut broken = scene().clone();
        setter(&mut broken);
        let specialized = broken.eval_at(&sample()).unwrap();
        assert!(verify_quartet(&specialized).iter().any(|c| !c.passed));
    }
}

#[test]
fn quartet_holds_at_a_rational_tuple() {
    let numeric = QuadrilateralScene::from_params(r(-3, 7), r(5, 2), r(1, 9), r(-4, 11)).unwrap();
    assert!(verify_quartet(&numeric).iter().all(|c| c.passed));
    assert!(mirror_check(&numeric));
    assert!(leversha_radius_check(&numeric));
}

#[test]
fn radius() {
    assert!(leversha_radius_check(scene()));

    let [m, n, big_m, big_n] = sample();
    let exact = oracle::closed_form_radius(&m, &n, &big_m, &big_n).unwrap();
    let float = oracle::float_circumradius(1.0 / 3.0, 0.25, 2.0 / 3.0, 0.2).unwrap();
    assert!((exact.abs().to_f64() - float).abs() < 1e-9);

    // Solve MN(n+m) - mn(M+N) + M + N - m - n = 0 for N, which is linear in N.
    let one = Rational::from(1);
    let big_n = (&(&(&(&m * &n) * &big_m) - &big_m) + &(&m + &n))
        .checked_div(&(&(&big_m * &(&n + &m)) - &(&(&m * &n) - &one)))
        .unwrap();
    assert_eq!(big_n, r(-1, 47));
    let at: HashMap<String, Rational> = [("m", m), ("n", n), ("M", big_m), ("N", big_n)]
        .map(|(k, v)| (k.to_string(), v))
        .into();
    assert_eq!(Formulas::load().radius.eval(&at), Err(Error::PoleAtPoint));
}

#[test]
fn mirror_lagniappe() {
    let s = scene();
    let pairs = mirror_pairs(s);
    assert!(pairs.iter().all(|c| c.passed), "{pairs:?}");
    let reflected = geom::reflect_over_line(&s.b_star, &s.a, &s.d).unwrap();
    assert!(same(&reflected, &s.c_star));

    let numeric = s.eval_at(&sample()).unwrap();
    assert_eq!(numeric.b_star.y, -numeric.c_star.y.clone());
    assert_eq!(numeric.b_star.x, numeric.c_star.x);
}

#[test]
fn spotcheck_passes() {
    assert!(numeric_spotcheck(scene(), 100, 7));
    assert!(numeric_spotcheck(scene(), 1, 0));
}

#[test]
fn spotcheck_catches_injected_bugs() {
    let mut sign_bug = scene().clone();
    sign_bug.c_star.y = -sign_bug.c_star.y.clone();
    assert!(!numeric_spotcheck(&sign_bug, 100, 7));

    let mut translated = scene().clone();
    translated.d_star = translated.d_star.clone() + Point::new(RatFunc::from_i64(1), RatFunc::from_i64(0));
    assert!(!numeric_spotcheck(&translated, 100, 7));
}

#[test]
fn symbolic_and_numeric_verdicts_agree() {
    let symbolic: Vec<bool> = verify_quartet(scene()).iter().map(|c| c.passed).collect();
    let trials = spotcheck_trials(scene(), 100, 3);
    for (i, verdict) in symbolic.iter().enumerate() {
        assert_eq!(*verdict, trials.iter().all(|t| t.quartet[i]));
    }
}

#[test]
fn swapping_parameter_pairs_swaps_b_and_c() {
    let s = scene();
    let [m, n, big_m, big_n] = s.params.clone();
    let swapped = QuadrilateralScene::from_params(big_m, big_n, m, n).unwrap();
    assert!(same(&swapped.b, &s.c) && same(&swapped.c, &s.b));
    assert!(same(&swapped.b_star, &s.c_star) && same(&swapped.c_star, &s.b_star));
}

#[test]
fn generic_quadrilateral_is_not_cyclic() {
    let s = scene();
    let det = concyclic_det(&s.a, &s.b, &s.c, &s.d);
    assert!(!det.is_zero());
    assert_ne!(det.eval_at(&sample()).unwrap(), Rational::from(0));
}

/// Both factors of the radius denominator vanish exactly on the cyclic
/// locus: each divides the numerator of the concyclicity determinant.
#[test]
fn radius_denominator_factors_are_the_cyclic_locus() {
    let table = VarTable::leversha();
    let s = scene();
    let det = concyclic_det(&s.a, &s.b, &s.c, &s.d);
    let parse = |src: &str| -> Poly { crate::script::eval_scalar(src, &table).unwrap().numer().clone() };
    let f1 = parse("(M*N - 1)*(m*n - 1) + (M + N)*(n + m)");
    let f2 = parse("M*N*(n + m) - m*n*(M + N) + M + N - m - n");
    assert!(det.numer().div_exact(&f1).is_ok());
    assert!(det.numer().div_exact(&f2).is_ok());
}

#[test]
fn certificate_format() {
    let report = verify_all(scene());
    assert!(report.passed());
    let text = report.certificate();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "LEVERSHA-CERTIFICATE v1");
    assert!(lines[1..lines.len() - 4].iter().all(|l| l.ends_with(": PASS")));
    assert!(lines[lines.len() - 4].starts_with("RADIUS_SQ = ("));
    assert!(lines[lines.len() - 3].starts_with("BSTAR = (("));
    assert!(lines[lines.len() - 2].starts_with("CSTAR = (("));
    assert!(lines[lines.len() - 1].starts_with("ELAPSED_MS = "));
}
