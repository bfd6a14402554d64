//! Seeded property suites shared by the integration and acceptance tests.
//! Each suite runs `cases` independent cases and returns the first
//! counterexample it finds.

#![allow(dead_code)]

use leversha_core::geom::{self, Point, Triangle};
use leversha_core::{Monomial, Poly, RatFunc, Rational, VarTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SuiteResult = Result<(), String>;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn small_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn rational_point(rng: &mut ChaCha8Rng) -> Point<Rational> {
    Point::new(small_rational(rng, 20), small_rational(rng, 20))
}

fn rational_triangle(rng: &mut ChaCha8Rng) -> Triangle<Rational> {
    loop {
        let (a, b, c) = (rational_point(rng), rational_point(rng), rational_point(rng));
        if let Ok(t) = Triangle::new(a, b, c) {
            return t;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, table: &VarTable, terms: usize, max_exp: u32) -> Poly {
    let arity = table.arity();
    Poly::from_terms(
        Some(table.clone()),
        (0..terms).map(|_| {
            let exps: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..=max_exp)).collect();
            (Monomial::from_exponents(&exps), small_rational(rng, 9))
        }),
    )
}

fn nonzero_poly(rng: &mut ChaCha8Rng, table: &VarTable, terms: usize, max_exp: u32) -> Poly {
    loop {
        let p = random_poly(rng, table, terms, max_exp);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_ratfunc(rng: &mut ChaCha8Rng, table: &VarTable) -> RatFunc {
    let num = random_poly(rng, table, 3, 2);
    let den = nonzero_poly(rng, table, 2, 2);
    RatFunc::new(num, den).unwrap()
}

/// The isogonal conjugate is an involution away from the sidelines and
/// the circumcircle.
pub fn isogonal_involution(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < cases {
        let t = rational_triangle(&mut rng);
        let p = rational_point(&mut rng);
        let Ok(star) = geom::isogonal_conjugate(&t, &p) else {
            continue;
        };
        let Ok(back) = geom::isogonal_conjugate(&t, &star) else {
            continue;
        };
        if back != p {
            return Err(format!("triangle {t}, P = {p}: conjugate twice gives {back}"));
        }
        done += 1;
    }
    Ok(())
}

/// The circumcenter is equidistant from the three points.
pub fn circumcenter_equidistance(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let t = rational_triangle(&mut rng);
        let [a, b, c] = t.vertices();
        let o = geom::circumcenter(a, b, c).map_err(|e| e.to_string())?;
        let (da, db, dc) = (geom::de_sq(&o, a), geom::de_sq(&o, b), geom::de_sq(&o, c));
        if da != db || db != dc {
            return Err(format!("triangle {t}: circumcenter {o} not equidistant"));
        }
    }
    Ok(())
}

/// Reflection in a line preserves distances and is its own inverse.
pub fn reflection_isometry(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < cases {
        let (l1, l2) = (rational_point(&mut rng), rational_point(&mut rng));
        if l1 == l2 {
            continue;
        }
        let (p, r) = (rational_point(&mut rng), rational_point(&mut rng));
        let rp = geom::reflect_over_line(&p, &l1, &l2).map_err(|e| e.to_string())?;
        let rr = geom::reflect_over_line(&r, &l1, &l2).map_err(|e| e.to_string())?;
        if geom::de_sq(&rp, &rr) != geom::de_sq(&p, &r) {
            return Err(format!("line {l1} {l2}: reflection of {p}, {r} changes distance"));
        }
        if geom::reflect_over_line(&rp, &l1, &l2).map_err(|e| e.to_string())? != p {
            return Err(format!("line {l1} {l2}: reflecting {p} twice does not return it"));
        }
        done += 1;
    }
    Ok(())
}

/// Field axioms for rational functions and ring axioms for polynomials.
pub fn field_axioms(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = VarTable::new(["m", "n"]).unwrap();
    for _ in 0..cases {
        let (a, b, c) = (
            random_ratfunc(&mut rng, &table),
            random_ratfunc(&mut rng, &table),
            random_ratfunc(&mut rng, &table),
        );
        let checks = [
            ("addition commutes", &a + &b == &b + &a),
            ("addition associates", &(&a + &b) + &c == &a + &(&b + &c)),
            ("multiplication commutes", &a * &b == &b * &a),
            ("multiplication associates", &(&a * &b) * &c == &a * &(&b * &c)),
            ("distributivity", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("additive inverse", (&a + &(-a.clone())).is_zero()),
            (
                "multiplicative inverse",
                a.is_zero() || (&a * &a.recip().unwrap()).as_constant() == Some(q(1, 1)),
            ),
        ];
        if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
            return Err(format!("{name} fails for a = {a}, b = {b}, c = {c}"));
        }
        let (p, r, s) = (a.numer().clone(), b.numer().clone(), c.denom().clone());
        if &(&p + &r) * &s != &(&p * &s) + &(&r * &s) || &p * &r != &r * &p {
            return Err(format!("polynomial ring axioms fail for {p}, {r}, {s}"));
        }
    }
    Ok(())
}

/// The gcd divides both operands, is divisible by every planted common
/// factor, and leaves coprime cofactors.
pub fn gcd_divides_both(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = VarTable::leversha();
    for _ in 0..cases {
        let common = nonzero_poly(&mut rng, &table, 2, 2);
        let a = &common * &nonzero_poly(&mut rng, &table, 3, 2);
        let b = &common * &nonzero_poly(&mut rng, &table, 3, 2);
        let g = a.gcd(&b).map_err(|e| e.to_string())?;
        let (ca, cb) = match (a.div_exact(&g), b.div_exact(&g)) {
            (Ok(ca), Ok(cb)) => (ca, cb),
            _ => return Err(format!("gcd {g} does not divide {a} and {b}")),
        };
        if g.div_exact(&common).is_err() {
            return Err(format!("gcd {g} of {a} and {b} misses the common factor {common}"));
        }
        let cofactor_gcd = ca.gcd(&cb).map_err(|e| e.to_string())?;
        if !cofactor_gcd.is_constant() {
            return Err(format!("cofactors of {a} and {b} share {cofactor_gcd}"));
        }
    }
    Ok(())
}

/// The apex of `te(u, v)` sees the base at origin with half-angle tangent
/// `u` and at `(1, 0)` with half-angle tangent `v`.
pub fn te_angle_contract(cases: usize, seed: u64, tolerance: f64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let u = q(rng.gen_range(1..1000), 1000);
        let v = q(rng.gen_range(1..1000), 1000);
        let t = geom::te(&u, &v).map_err(|e| e.to_string())?;
        let apex = t.vertex(3).unwrap();
        let (x, y) = (apex.x.to_f64(), apex.y.to_f64());
        let at_origin = (y.atan2(x) / 2.0).tan();
        let at_unit = (y.atan2(1.0 - x) / 2.0).tan();
        if (at_origin - u.to_f64()).abs() >= tolerance || (at_unit - v.to_f64()).abs() >= tolerance {
            return Err(format!("te({u}, {v}) apex {apex} breaks the angle contract"));
        }
        let float = geom::te(&u.to_f64(), &v.to_f64()).map_err(|e| e.to_string())?;
        let fa = float.vertex(3).unwrap();
        if (fa.x - x).abs() >= tolerance || (fa.y - y).abs() >= tolerance {
            return Err(format!("te({u}, {v}) float apex {fa} disagrees with exact {apex}"));
        }
    }
    Ok(())
}
