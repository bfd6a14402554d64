//! First-principles numeric reconstruction of the quartet.
//!
//! Nothing here calls into [`crate::geom`]: apexes come from intersecting
//! the half-angle rays, reflections from the implicit line equation,
//! circumcenters from eliminating the equidistance equations, and each
//! isogonal conjugate is the circumcenter of the reflections of the point
//! in the three sidelines.

use crate::error::{Error, Result};
use crate::Rational;

pub type Pt = (Rational, Rational);

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn sub(a: &Pt, b: &Pt) -> Pt {
    (&a.0 - &b.0, &a.1 - &b.1)
}

pub fn dist_sq(a: &Pt, b: &Pt) -> Rational {
    let (dx, dy) = sub(a, b);
    &(&dx * &dx) + &(&dy * &dy)
}

/// Solves `[a b; c d] (x, y) = (e, f)` by elimination.
fn solve2(rows: [[Rational; 3]; 2]) -> Result<(Rational, Rational)> {
    let [mut r0, mut r1] = rows;
    if r0[0] == q(0) {
        std::mem::swap(&mut r0, &mut r1);
    }
    if r0[0] == q(0) {
        return Err(Error::DegenerateConstruction("singular system"));
    }
    let factor = r1[0].checked_div(&r0[0])?;
    let r1: Vec<Rational> = (0..3).map(|k| &r1[k] - &(&factor * &r0[k])).collect();
    if r1[1] == q(0) {
        return Err(Error::DegenerateConstruction("singular system"));
    }
    let y = r1[2].checked_div(&r1[1])?;
    let x = (&r0[2] - &(&r0[1] * &y)).checked_div(&r0[0])?;
    Ok((x, y))
}

/// Apex of the triangle on `(0,0)`, `(1,0)` with half-angle tangents `u`, `v`:
/// the origin ray at angle 2·atan(u) meets the ray from `(1,0)` at angle
/// π − 2·atan(v). Directions follow from tan 2θ = 2t / (1 − t²).
pub fn apex(u: &Rational, v: &Rational) -> Result<Pt> {
    let one = q(1);
    let dir_a = (&one - &(u * u), &q(2) * u);
    let dir_b = (&(v * v) - &one, &q(2) * v);
    // s·dir_a − t·dir_b = (1, 0)
    let (s, _t) = solve2([
        [dir_a.0.clone(), -&dir_b.0, one.clone()],
        [dir_a.1.clone(), -&dir_b.1, q(0)],
    ])?;
    Ok((&s * &dir_a.0, &s * &dir_a.1))
}

/// Mirror image of `p` in the line `a x + b y + c = 0` through `l1`, `l2`.
pub fn reflect(p: &Pt, l1: &Pt, l2: &Pt) -> Result<Pt> {
    let a = &l2.1 - &l1.1;
    let b = &l1.0 - &l2.0;
    let c = -(&(&a * &l1.0) + &(&b * &l1.1));
    let norm = &(&a * &a) + &(&b * &b);
    if norm == q(0) {
        return Err(Error::DegenerateConstruction("mirror line through a single point"));
    }
    let k = (&q(2) * &(&(&(&a * &p.0) + &(&b * &p.1)) + &c)).checked_div(&norm)?;
    Ok((&p.0 - &(&k * &a), &p.1 - &(&k * &b)))
}

/// The point equidistant from all three, from
/// `|o − p1|² = |o − p2|²` and `|o − p1|² = |o − p3|²`.
pub fn circumcenter(p1: &Pt, p2: &Pt, p3: &Pt) -> Result<Pt> {
    let row = |p: &Pt| -> [Rational; 3] {
        let rhs = &(&(&p.0 * &p.0) + &(&p.1 * &p.1)) - &(&(&p1.0 * &p1.0) + &(&p1.1 * &p1.1));
        [&q(2) * &(&p.0 - &p1.0), &q(2) * &(&p.1 - &p1.1), rhs]
    };
    solve2([row(p2), row(p3)])
}

/// Circumcenter of the reflections of `p` in the sidelines of `(a, b, c)`.
pub fn isogonal_conjugate(a: &Pt, b: &Pt, c: &Pt, p: &Pt) -> Result<Pt> {
    let ra = reflect(p, b, c)?;
    let rb = reflect(p, a, c)?;
    let rc = reflect(p, a, b)?;
    circumcenter(&ra, &rb, &rc).map_err(|_| Error::ConjugateAtInfinity)
}

/// The eight points of the configuration, rebuilt numerically.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericQuartet {
    pub a: Pt,
    pub b: Pt,
    pub c: Pt,
    pub d: Pt,
    pub a_star: Pt,
    pub b_star: Pt,
    pub c_star: Pt,
    pub d_star: Pt,
}

impl NumericQuartet {
    pub fn rebuild(m: &Rational, n: &Rational, big_m: &Rational, big_n: &Rational) -> Result<Self> {
        let a = (q(0), q(0));
        let d = (q(1), q(0));
        let b = apex(m, n)?;
        let c = apex(big_m, big_n)?;
        let area = |p: &Pt, r: &Pt, s: &Pt| {
            let (u, v) = (sub(r, p), sub(s, p));
            &(&u.0 * &v.1) - &(&u.1 * &v.0)
        };
        for (p, r, s) in [(&a, &d, &b), (&a, &d, &c), (&b, &c, &d), (&a, &b, &c)] {
            if area(p, r, s) == q(0) {
                return Err(Error::DegenerateConstruction("collinear reference triangle"));
            }
        }
        Ok(NumericQuartet {
            b_star: isogonal_conjugate(&a, &d, &c, &b)?,
            c_star: isogonal_conjugate(&a, &b, &d, &c)?,
            a_star: isogonal_conjugate(&b, &c, &d, &a)?,
            d_star: isogonal_conjugate(&a, &b, &c, &d)?,
            a,
            b,
            c,
            d,
        })
    }

    /// The eight distance equalities of the quartet, in the order
    /// A, B, C, D (two per center).
    pub fn quartet_equalities(&self) -> [bool; 8] {
        let eq = |o: &Pt, p: &Pt, r: &Pt| dist_sq(o, p) == dist_sq(o, r);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (sa, sb, sc, sd) = (&self.a_star, &self.b_star, &self.c_star, &self.d_star);
        [
            eq(a, sb, sc),
            eq(a, sc, sd),
            eq(b, sa, sc),
            eq(b, sc, sd),
            eq(c, sa, sb),
            eq(c, sb, sd),
            eq(d, sa, sb),
            eq(d, sb, sc),
        ]
    }

    /// Each starred pair against its mirror line, in the order
    /// B*C*/AD, A*D*/BC, A*B*/CD, C*D*/AB, A*C*/BD, B*D*/AC.
    pub fn mirror_relations(&self) -> Result<[bool; 6]> {
        let m = |p: &Pt, r: &Pt, l1: &Pt, l2: &Pt| -> Result<bool> { Ok(reflect(p, l1, l2)? == *r) };
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (sa, sb, sc, sd) = (&self.a_star, &self.b_star, &self.c_star, &self.d_star);
        Ok([
            m(sb, sc, a, d)?,
            m(sa, sd, b, c)?,
            m(sa, sb, c, d)?,
            m(sc, sd, a, b)?,
            m(sa, sc, b, d)?,
            m(sb, sd, a, c)?,
        ])
    }
}

/// The closed-form circumradius of B*C*D*, written directly in rationals.
pub fn closed_form_radius(m: &Rational, n: &Rational, big_m: &Rational, big_n: &Rational) -> Result<Rational> {
    let one = q(1);
    let num = &(&(&(big_n - n) * &(&(big_n * n) + &one)) * &(&(m * m) + &one)) * &(&(big_m * big_m) + &one);
    let f1 = &(&(&(big_m * big_n) - &one) * &(&(m * n) - &one)) + &(&(big_m + big_n) * &(n + m));
    let f2 = &(&(&(&(&(big_m * big_n) * &(n + m)) - &(&(m * n) * &(big_m + big_n))) + big_m) + big_n) - &(m + n);
    let den = &f1 * &f2;
    if den == q(0) {
        return Err(Error::PoleAtPoint);
    }
    num.checked_div(&den)
}

/// The closed-form coordinates of B* (C* is its mirror image), written
/// directly in rationals.
pub fn closed_form_bstar(m: &Rational, n: &Rational, big_m: &Rational, big_n: &Rational) -> Result<Pt> {
    let one = q(1);
    let mm = big_m * m;
    let d1 = &(&(&(&(big_m * big_n) * &(&(m * n) - &one)) + &(&(big_m + big_n) * &(m + n))) - &(m * n)) + &one;
    let d2 = &(&(&(&(&(big_m * big_n) * &(m + n)) - &(&(m * n) * &(big_m + big_n))) + big_m) + big_n) - &(m + n);
    let den = &d1 * &d2;
    if den == q(0) {
        return Err(Error::PoleAtPoint);
    }
    let common = &(&(big_n * n) + &one) * &(big_n - n);
    let x = &(&(&(&(&mm + big_m) - m) + &one) * &(&(&(&mm - big_m) + m) + &one)) * &common;
    let y = &(&(&q(2) * &common) * &(&mm + &one)) * &(big_m - m);
    Ok((x.checked_div(&den)?, y.checked_div(&den)?))
}

/// Double-precision circumradius of B*C*D*, with the apexes placed by
/// trigonometry (law of sines) rather than by the rational closed form.
pub fn float_circumradius(m: f64, n: f64, big_m: f64, big_n: f64) -> Option<f64> {
    type F = (f64, f64);
    let apex = |u: f64, v: f64| -> F {
        let (alpha, beta) = (2.0 * u.atan(), 2.0 * v.atan());
        let side = beta.sin() / (alpha + beta).sin();
        (side * alpha.cos(), side * alpha.sin())
    };
    let reflect = |p: F, l1: F, l2: F| -> F {
        let (dx, dy) = (l2.0 - l1.0, l2.1 - l1.1);
        let t = ((p.0 - l1.0) * dx + (p.1 - l1.1) * dy) / (dx * dx + dy * dy);
        let foot = (l1.0 + t * dx, l1.1 + t * dy);
        (2.0 * foot.0 - p.0, 2.0 * foot.1 - p.1)
    };
    let center = |p1: F, p2: F, p3: F| -> Option<F> {
        let (ax, ay) = (p2.0 - p1.0, p2.1 - p1.1);
        let (bx, by) = (p3.0 - p1.0, p3.1 - p1.1);
        let det = 2.0 * (ax * by - ay * bx);
        if det.abs() < 1e-300 {
            return None;
        }
        let (a2, b2) = (ax * ax + ay * ay, bx * bx + by * by);
        Some((p1.0 + (by * a2 - ay * b2) / det, p1.1 + (ax * b2 - bx * a2) / det))
    };
    let conj = |a: F, b: F, c: F, p: F| center(reflect(p, b, c), reflect(p, a, c), reflect(p, a, b));
    let (a, d) = ((0.0, 0.0), (1.0, 0.0));
    let (b, c) = (apex(m, n), apex(big_m, big_n));
    let bs = conj(a, d, c, b)?;
    let cs = conj(a, b, d, c)?;
    let ds = conj(a, b, c, d)?;
    let o = center(bs, cs, ds)?;
    Some(((o.0 - bs.0).powi(2) + (o.1 - bs.1).powi(2)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn apex_of_the_half_half_triangle() {
        assert_eq!(apex(&r(1, 2), &r(1, 2)).unwrap(), (r(1, 2), r(2, 3)));
    }

    #[test]
    fn reflection_across_the_diagonal() {
        assert_eq!(
            reflect(&(r(0, 1), r(1, 1)), &(r(0, 1), r(0, 1)), &(r(1, 1), r(1, 1))).unwrap(),
            (r(1, 1), r(0, 1))
        );
    }

    #[test]
    fn incenter_fixed_under_reflection_route() {
        let (a, b, c) = ((r(0, 1), r(0, 1)), (r(3, 1), r(0, 1)), (r(0, 1), r(4, 1)));
        assert_eq!(
            isogonal_conjugate(&a, &b, &c, &(r(1, 1), r(1, 1))).unwrap(),
            (r(1, 1), r(1, 1))
        );
    }

    #[test]
    fn sample_tuple_satisfies_everything() {
        let (m, n, big_m, big_n) = (r(1, 3), r(1, 4), r(2, 3), r(1, 5));
        let quartet = NumericQuartet::rebuild(&m, &n, &big_m, &big_n).unwrap();
        assert!(quartet.quartet_equalities().iter().all(|&b| b));
        assert!(quartet.mirror_relations().unwrap().iter().all(|&b| b));
        let radius = closed_form_radius(&m, &n, &big_m, &big_n).unwrap();
        let rsq = dist_sq(&quartet.a, &quartet.b_star);
        assert_eq!(&radius * &radius, rsq);
        assert_eq!(closed_form_bstar(&m, &n, &big_m, &big_n).unwrap(), quartet.b_star);
        let float = float_circumradius(1.0 / 3.0, 0.25, 2.0 / 3.0, 0.2).unwrap();
        assert!((float - radius.abs().to_f64()).abs() < 1e-9);
    }
}
