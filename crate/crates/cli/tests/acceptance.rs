//! Acceptance suite: one PASS/FAIL line per criterion.

#[path = "../../core/tests/common/corpus.rs"]
mod corpus;
#[path = "../../core/tests/common/suites.rs"]
mod suites;

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use leversha_core::geom::{self, Point};
use leversha_core::quartet::fixtures::Formulas;
use leversha_core::quartet::{self, oracle, SymbolicScene};
use leversha_core::{RatFunc, Rational, Scalar};

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            passed,
            detail: detail.into(),
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn one_line_proof() -> (Verdict, SymbolicScene) {
    let ((scene, replayed), elapsed) = timed(|| {
        let scene = quartet::build_scene().expect("symbolic scene");
        let replayed = quartet::replay_one_line_proof(&scene);
        (scene, replayed)
    });
    let secs = elapsed.as_secs_f64();
    let detail = format!("replayed symbolically in {secs:.2} s (limit 10 s)");
    (Verdict::new(replayed && secs < 10.0, detail), scene)
}

fn full_quartet(scene: &SymbolicScene) -> Verdict {
    let (checks, elapsed) = timed(|| quartet::verify_quartet(scene));
    let held = checks.iter().filter(|c| c.passed).count();
    let secs = elapsed.as_secs_f64();
    Verdict::new(
        held == 8 && secs < 60.0,
        format!("{held}/8 equalities in {secs:.2} s (limit 60 s)"),
    )
}

fn golden_formulas(scene: &SymbolicScene, formulas: &Formulas) -> Verdict {
    let checks = quartet::golden_formula_checks(scene, formulas);
    let held = checks.iter().filter(|c| c.passed).count();
    Verdict::new(
        held == checks.len() && held == 2,
        format!("{held}/2 closed forms match"),
    )
}

fn radius(scene: &SymbolicScene) -> Verdict {
    let symbolic = quartet::leversha_radius_check(scene);
    let (m, n, big_m, big_n) = (q(1, 3), q(1, 4), q(2, 3), q(1, 5));
    let exact = oracle::closed_form_radius(&m, &n, &big_m, &big_n)
        .expect("no pole at the sample")
        .abs()
        .to_f64();
    let float = oracle::float_circumradius(1.0 / 3.0, 0.25, 2.0 / 3.0, 0.2);
    let error = float.map_or(f64::INFINITY, |f| (f - exact).abs());
    Verdict::new(
        symbolic && error < 1e-9,
        format!(
            "symbolic {}, float |R| error {error:.2e} (tolerance 1e-9)",
            if symbolic { "equal" } else { "differs" }
        ),
    )
}

fn mirror(scene: &SymbolicScene) -> Verdict {
    let x = scene.b_star.x == scene.c_star.x;
    let y = scene.b_star.y == -scene.c_star.y.clone();
    let reflected = geom::reflect_over_line(&scene.b_star, &scene.a, &scene.d).is_ok_and(|p| p == scene.c_star);
    let others = quartet::mirror_check(scene);
    Verdict::new(
        x && y && reflected && others,
        format!("x equal {x}, y opposite {y}, reflection in AD {reflected}, all six pairs {others}"),
    )
}

fn independent_oracle(scene: &SymbolicScene) -> Verdict {
    let clean = quartet::numeric_spotcheck(scene, 100, 7);
    let mut sign_bug = scene.clone();
    sign_bug.c_star.y = -sign_bug.c_star.y.clone();
    let sign_caught = !quartet::numeric_spotcheck(&sign_bug, 100, 7);
    let mut translated = scene.clone();
    translated.d_star = translated.d_star.clone() + Point::new(RatFunc::from_i64(1), RatFunc::from_i64(0));
    let translation_caught = !quartet::numeric_spotcheck(&translated, 100, 7);
    Verdict::new(
        clean && sign_caught && translation_caught,
        format!(
            "100 trials {}, sign flip in C* {}, translated D* {}",
            if clean { "PASS" } else { "FAIL" },
            if sign_caught { "detected" } else { "missed" },
            if translation_caught { "detected" } else { "missed" },
        ),
    )
}

fn property_suites() -> Verdict {
    let runs: [(&str, suites::SuiteResult); 5] = [
        ("involution", suites::isogonal_involution(100, 101)),
        ("equidistance", suites::circumcenter_equidistance(100, 102)),
        ("reflection isometry", suites::reflection_isometry(100, 103)),
        ("field/ring axioms", suites::field_axioms(100, 104)),
        ("gcd divides both", suites::gcd_divides_both(100, 105)),
    ];
    let failures: Vec<String> = runs
        .iter()
        .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")))
        .collect();
    let detail = if failures.is_empty() {
        "5 suites x 100 seeded cases".to_string()
    } else {
        failures.join("; ")
    };
    Verdict::new(failures.is_empty(), detail)
}

fn dsl() -> Verdict {
    let script = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/scripts/one_line_proof.rg");
    let output = Command::new(env!("CARGO_BIN_EXE_rene"))
        .arg("run")
        .arg(&script)
        .output()
        .expect("run rene");
    let stdout = String::from_utf8_lossy(&output.stdout);
    let script_ok = output.status.code() == Some(0) && stdout == "ASSERT line 7: PASS\n";
    let (accepted, rejected) = corpus::counts();
    let mismatches = corpus::mismatches();
    let corpus_ok = accepted >= 20 && rejected >= 20 && mismatches.is_empty();
    let mut detail = format!(
        "script exit {:?} with {:?}; corpus {accepted}+ / {rejected}- with {} mismatches",
        output.status.code(),
        stdout.trim_end(),
        mismatches.len()
    );
    if let Some(first) = mismatches.first() {
        detail.push_str(&format!(" (first: {first})"));
    }
    Verdict::new(script_ok && corpus_ok, detail)
}

fn te_contract() -> Verdict {
    match suites::te_angle_contract(50, 2024, 1e-9) {
        Ok(()) => Verdict::new(true, "50 cases within 1e-9"),
        Err(e) => Verdict::new(false, e),
    }
}

fn main() -> ExitCode {
    let (proof, scene) = one_line_proof();
    let formulas = Formulas::load();
    let results = [
        ("one-line proof replay", proof),
        ("full quartet", full_quartet(&scene)),
        ("golden formulas", golden_formulas(&scene, &formulas)),
        ("radius", radius(&scene)),
        ("mirror", mirror(&scene)),
        ("independent oracle", independent_oracle(&scene)),
        ("property suites", property_suites()),
        ("DSL", dsl()),
        ("te angle contract", te_contract()),
    ];
    println!();
    let mut all = true;
    for (i, (name, verdict)) in results.iter().enumerate() {
        all &= verdict.passed;
        let status = if verdict.passed { "PASS" } else { "FAIL" };
        println!("criterion {} {name}: {status} ({})", i + 1, verdict.detail);
    }
    println!();
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
