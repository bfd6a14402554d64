//! The isogonal-conjugate quartet of a quadrilateral.
//!
//! The quadrilateral is normalized to `A = (0,0)`, `D = (1,0)`, with `B`
//! and `C` the apexes of [`te`](crate::geom::te) triangles on the base `AD`
//! with half-angle tangents `(m, n)` and `(M, N)`. Each starred point is
//! the isogonal conjugate of a vertex in the triangle of the other three:
//! `A*` in `BCD`, `B*` in `ADC`, `C*` in `ABD`, `D*` in `ABC`. The claim
//! is that each vertex is the circumcenter of the other three starred
//! points.

pub mod fixtures;
pub mod oracle;

use std::fmt::{self, Display, Write};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{self, Point, Triangle};
use crate::ratfunc::random_point;
use crate::scalar::FromRational;
use crate::{RatFunc, Rational, VarTable};

use self::fixtures::Formulas;
use self::oracle::NumericQuartet;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadrilateralScene<F> {
    /// `m, n, M, N`.
    pub params: [F; 4],
    pub a: Point<F>,
    pub b: Point<F>,
    pub c: Point<F>,
    pub d: Point<F>,
    pub a_star: Point<F>,
    pub b_star: Point<F>,
    pub c_star: Point<F>,
    pub d_star: Point<F>,
}

pub type SymbolicScene = QuadrilateralScene<RatFunc>;

/// The fully symbolic scene over ℚ(m, n, M, N).
pub fn build_scene() -> Result<SymbolicScene> {
    let table = VarTable::leversha();
    let [m, n, big_m, big_n] = std::array::from_fn(|i| RatFunc::var_at(&table, i));
    QuadrilateralScene::from_params(m, n, big_m, big_n)
}

impl<F: FromRational> QuadrilateralScene<F> {
    pub fn from_params(m: F, n: F, big_m: F, big_n: F) -> Result<Self> {
        let t1 = geom::te(&m, &n)?;
        let t2 = geom::te(&big_m, &big_n)?;
        let a = Point::origin();
        let d = Point::new(F::one(), F::zero());
        let b = t1.vertex(3).expect("apex").clone();
        let c = t2.vertex(3).expect("apex").clone();
        let conj = |t: Result<Triangle<F>>, p: &Point<F>| -> Result<Point<F>> {
            geom::isogonal_conjugate(&t?, p).map_err(|e| match e {
                Error::ConjugateAtInfinity => Error::DegenerateConstruction("isogonal conjugate at infinity"),
                e => e,
            })
        };
        let b_star = conj(Ok(t2.clone()), &b)?;
        let c_star = conj(Ok(t1.clone()), &c)?;
        let a_star = conj(Triangle::new(b.clone(), c.clone(), d.clone()), &a)?;
        let d_star = conj(Triangle::new(a.clone(), b.clone(), c.clone()), &d)?;
        Ok(QuadrilateralScene {
            params: [m, n, big_m, big_n],
            a,
            b,
            c,
            d,
            a_star,
            b_star,
            c_star,
            d_star,
        })
    }

    /// The four vertices followed by the four starred points.
    pub fn points(&self) -> [&Point<F>; 8] {
        [
            &self.a,
            &self.b,
            &self.c,
            &self.d,
            &self.a_star,
            &self.b_star,
            &self.c_star,
            &self.d_star,
        ]
    }
}

impl SymbolicScene {
    /// Specializes every point of the scene at `m, n, M, N = point`.
    pub fn eval_at(&self, point: &[Rational; 4]) -> Result<QuadrilateralScene<Rational>> {
        let ev = |p: &Point<RatFunc>| p.try_map(|c| c.eval_at(point));
        Ok(QuadrilateralScene {
            params: point.clone(),
            a: ev(&self.a)?,
            b: ev(&self.b)?,
            c: ev(&self.c)?,
            d: ev(&self.d)?,
            a_star: ev(&self.a_star)?,
            b_star: ev(&self.b_star)?,
            c_star: ev(&self.c_star)?,
            d_star: ev(&self.d_star)?,
        })
    }
}

/// One labelled verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, passed: bool) -> Self {
        Check {
            label: label.into(),
            passed,
        }
    }
}

impl Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, if self.passed { "PASS" } else { "FAIL" })
    }
}

fn points_equal<F: PartialEq>(p: &Point<F>, q: &Point<F>) -> bool {
    p.x == q.x && p.y == q.y
}

/// `deSq(B*, A) = deSq(C*, A)`.
pub fn replay_one_line_proof<F: FromRational>(scene: &QuadrilateralScene<F>) -> bool {
    geom::de_sq(&scene.b_star, &scene.a) == geom::de_sq(&scene.c_star, &scene.a)
}

/// The eight distance equalities: each vertex is equidistant from the
/// three starred points other than its own.
pub fn verify_quartet<F: FromRational + Send + Sync>(scene: &QuadrilateralScene<F>) -> Vec<Check> {
    let s = scene;
    let claims = [
        ("A", &s.a, [("B*", &s.b_star), ("C*", &s.c_star), ("D*", &s.d_star)]),
        ("B", &s.b, [("A*", &s.a_star), ("C*", &s.c_star), ("D*", &s.d_star)]),
        ("C", &s.c, [("A*", &s.a_star), ("B*", &s.b_star), ("D*", &s.d_star)]),
        ("D", &s.d, [("A*", &s.a_star), ("B*", &s.b_star), ("C*", &s.c_star)]),
    ];
    let per_center: Vec<Vec<Check>> = std::thread::scope(|scope| {
        let handles: Vec<_> = claims
            .iter()
            .map(|(name, center, others)| {
                scope.spawn(move || {
                    let dist: Vec<F> = others.iter().map(|(_, p)| geom::de_sq(center, p)).collect();
                    (0..2)
                        .map(|i| {
                            let label = format!("{name} equidistant from {} and {}", others[i].0, others[i + 1].0);
                            Check::new(label, dist[i] == dist[i + 1])
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread")).collect()
    });
    per_center.into_iter().flatten().collect()
}

fn formula_in<F: FromRational>(f: &RatFunc, scene: &QuadrilateralScene<F>) -> Option<F> {
    f.eval_into(&scene.params).ok()
}

fn point_formula_in<F: FromRational>(p: &Point<RatFunc>, scene: &QuadrilateralScene<F>) -> Option<Point<F>> {
    Some(Point::new(formula_in(&p.x, scene)?, formula_in(&p.y, scene)?))
}

/// `circumradius²(B*, C*, D*)` against the square of the closed form.
pub fn leversha_radius_check<F: FromRational>(scene: &QuadrilateralScene<F>) -> bool {
    leversha_radius_check_with(scene, &Formulas::load())
}

fn leversha_radius_check_with<F: FromRational>(scene: &QuadrilateralScene<F>, formulas: &Formulas) -> bool {
    let Ok(r2) = geom::circumradius_sq(&scene.b_star, &scene.c_star, &scene.d_star) else {
        return false;
    };
    formula_in(&formulas.radius, scene).is_some_and(|r| r.square() == r2)
}

/// The computed B* and C* against their closed forms.
pub fn golden_formula_checks<F: FromRational>(scene: &QuadrilateralScene<F>, formulas: &Formulas) -> Vec<Check> {
    let matches = |computed: &Point<F>, golden: &Point<RatFunc>| {
        point_formula_in(golden, scene).is_some_and(|g| points_equal(computed, &g))
    };
    vec![
        Check::new("B* matches closed form", matches(&scene.b_star, &formulas.bstar)),
        Check::new("C* matches closed form", matches(&scene.c_star, &formulas.cstar)),
    ]
}

/// Mirror relations between starred points.
///
/// B* and C* are compared coordinate-wise across the x-axis (the line AD)
/// and through [`geom::reflect_over_line`]; the remaining five pairs, each
/// mirrored in the line through the two vertices whose conjugates are not
/// in the pair, use the reflection.
pub fn mirror_pairs<F: FromRational>(scene: &QuadrilateralScene<F>) -> Vec<Check> {
    let s = scene;
    let reflects = |p: &Point<F>, q: &Point<F>, l1: &Point<F>, l2: &Point<F>| {
        geom::reflect_over_line(p, l1, l2).is_ok_and(|r| points_equal(&r, q))
    };
    let mut checks = vec![
        Check::new("B*.x = C*.x", s.b_star.x == s.c_star.x),
        Check::new("B*.y = -C*.y", s.b_star.y == -s.c_star.y.clone()),
        Check::new("B* mirrors C* across AD", reflects(&s.b_star, &s.c_star, &s.a, &s.d)),
    ];
    let others = [
        ("A* mirrors D* across BC", &s.a_star, &s.d_star, &s.b, &s.c),
        ("A* mirrors B* across CD", &s.a_star, &s.b_star, &s.c, &s.d),
        ("C* mirrors D* across AB", &s.c_star, &s.d_star, &s.a, &s.b),
        ("A* mirrors C* across BD", &s.a_star, &s.c_star, &s.b, &s.d),
        ("B* mirrors D* across AC", &s.b_star, &s.d_star, &s.a, &s.c),
    ];
    for (label, p, q, l1, l2) in others {
        checks.push(Check::new(label, reflects(p, q, l1, l2)));
    }
    checks
}

pub fn mirror_check<F: FromRational>(scene: &QuadrilateralScene<F>) -> bool {
    mirror_pairs(scene).iter().all(|c| c.passed)
}

/// The full certificate for a scene.
#[derive(Clone, Debug)]
pub struct VerificationReport<F> {
    pub proof_equalities: Vec<Check>,
    pub radius_sq: Option<F>,
    pub bstar_formula: Point<F>,
    pub cstar_formula: Point<F>,
    pub mirror_pairs: Vec<Check>,
    /// Further checks appended by callers, e.g. a numeric spot check.
    pub extra: Vec<Check>,
    pub elapsed: Duration,
}

impl<F> VerificationReport<F> {
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.proof_equalities
            .iter()
            .chain(&self.mirror_pairs)
            .chain(&self.extra)
    }

    pub fn passed(&self) -> bool {
        self.checks().all(|c| c.passed)
    }
}

impl<F: Display> VerificationReport<F> {
    /// The line-oriented certificate text.
    pub fn certificate(&self) -> String {
        let mut out = String::from("LEVERSHA-CERTIFICATE v1\n");
        for check in self.checks() {
            let _ = writeln!(out, "{check}");
        }
        match &self.radius_sq {
            Some(r) => {
                let _ = writeln!(out, "RADIUS_SQ = {r}");
            }
            None => out.push_str("RADIUS_SQ = undefined\n"),
        }
        let _ = writeln!(out, "BSTAR = {}", self.bstar_formula);
        let _ = writeln!(out, "CSTAR = {}", self.cstar_formula);
        let _ = writeln!(out, "ELAPSED_MS = {}", self.elapsed.as_millis());
        out
    }
}

/// Runs every symbolic check on `scene`.
pub fn verify_all<F: FromRational + Send + Sync>(scene: &QuadrilateralScene<F>) -> VerificationReport<F> {
    let start = Instant::now();
    let formulas = Formulas::load();
    let mut proof = vec![Check::new(
        "one-line proof deSq(B*, A) = deSq(C*, A)",
        replay_one_line_proof(scene),
    )];
    proof.extend(verify_quartet(scene));
    proof.push(Check::new(
        "circumradius of B*C*D* matches closed form",
        leversha_radius_check_with(scene, &formulas),
    ));
    proof.extend(golden_formula_checks(scene, &formulas));
    let mirrors = mirror_pairs(scene);
    let radius_sq = geom::circumradius_sq(&scene.b_star, &scene.c_star, &scene.d_star).ok();
    VerificationReport {
        proof_equalities: proof,
        radius_sq,
        bstar_formula: scene.b_star.clone(),
        cstar_formula: scene.c_star.clone(),
        mirror_pairs: mirrors,
        extra: Vec::new(),
        elapsed: start.elapsed(),
    }
}

/// Numerators of the spot-check tuples lie in `[-SPOT_BOUND, SPOT_BOUND]`,
/// denominators in `[1, SPOT_BOUND]`.
pub const SPOT_BOUND: u64 = 12;

/// Outcome of one numeric trial.
#[derive(Clone, Debug, PartialEq)]
pub struct Trial {
    pub tuple: [Rational; 4],
    pub quartet: [bool; 8],
    pub radius: bool,
    pub mirrors: [bool; 6],
    pub formulas: bool,
    /// The symbolic scene specialized at the tuple equals the rebuild.
    pub agrees: bool,
}

impl Trial {
    pub fn passed(&self) -> bool {
        self.quartet.iter().all(|&b| b)
            && self.radius
            && self.mirrors.iter().all(|&b| b)
            && self.formulas
            && self.agrees
    }
}

/// Rebuilds the configuration at `tuple` from first principles and checks
/// every claim by exact arithmetic; `None` if the tuple is degenerate.
pub fn numeric_trial(scene: &SymbolicScene, tuple: &[Rational; 4]) -> Option<Trial> {
    let [m, n, big_m, big_n] = tuple;
    let rebuilt = NumericQuartet::rebuild(m, n, big_m, big_n).ok()?;
    let radius = oracle::closed_form_radius(m, n, big_m, big_n).ok()?;
    let golden_b = oracle::closed_form_bstar(m, n, big_m, big_n).ok()?;
    let center = oracle::circumcenter(&rebuilt.b_star, &rebuilt.c_star, &rebuilt.d_star).ok()?;
    let mirrors = rebuilt.mirror_relations().ok()?;
    let specialized = scene.eval_at(tuple).ok()?;

    let as_pair = |p: &Point<Rational>| (p.x.clone(), p.y.clone());
    let symbolic: Vec<_> = specialized.points().iter().map(|p| as_pair(p)).collect();
    let numeric = [
        &rebuilt.a,
        &rebuilt.b,
        &rebuilt.c,
        &rebuilt.d,
        &rebuilt.a_star,
        &rebuilt.b_star,
        &rebuilt.c_star,
        &rebuilt.d_star,
    ];
    let agrees = symbolic.iter().zip(numeric).all(|(s, n)| s == n);
    let golden_c = (golden_b.0.clone(), -&golden_b.1);
    Some(Trial {
        tuple: tuple.clone(),
        quartet: rebuilt.quartet_equalities(),
        radius: oracle::dist_sq(&center, &rebuilt.b_star) == &radius * &radius,
        mirrors,
        formulas: golden_b == rebuilt.b_star && golden_c == rebuilt.c_star,
        agrees,
    })
}

/// Runs `trials` seeded [`numeric_trial`]s, redrawing degenerate tuples.
pub fn numeric_spotcheck(scene: &SymbolicScene, trials: usize, seed: u64) -> bool {
    spotcheck_trials(scene, trials, seed).iter().all(Trial::passed)
}

pub fn spotcheck_trials(scene: &SymbolicScene, trials: usize, seed: u64) -> Vec<Trial> {
    assert!(trials >= 1, "at least one trial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    let mut draws = 0usize;
    while out.len() < trials {
        draws += 1;
        assert!(draws < 1000 * trials, "no admissible tuples found");
        let tuple: [Rational; 4] = random_point(&mut rng, 4, SPOT_BOUND).try_into().expect("four values");
        if let Some(trial) = numeric_trial(scene, &tuple) {
            out.push(trial);
        }
    }
    out
}

#[cfg(test)]
mod tests;
