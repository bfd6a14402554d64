//! Analytic plane geometry over any [`Scalar`].
//!
//! The same constructions serve the symbolic proof (coordinates in a
//! rational-function field), exact numeric checks and floating-point
//! plotting. Degeneracy guards test for *identically* zero quantities.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Point<F> {
    pub x: F,
    pub y: F,
}

impl<F: Scalar> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(F::zero(), F::zero())
    }

    pub fn scale(&self, k: &F) -> Self {
        Point::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn dot(&self, other: &Self) -> F {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// Applies `f` to both coordinates.
    pub fn try_map<G, E>(
        &self,
        mut f: impl FnMut(&F) -> std::result::Result<G, E>,
    ) -> std::result::Result<Point<G>, E> {
        Ok(Point {
            x: f(&self.x)?,
            y: f(&self.y)?,
        })
    }
}

impl<F: Scalar> Add for Point<F> {
    type Output = Point<F>;
    fn add(self, rhs: Point<F>) -> Point<F> {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<F: Scalar> Sub for Point<F> {
    type Output = Point<F>;
    fn sub(self, rhs: Point<F>) -> Point<F> {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<F: Scalar> Sub for &Point<F> {
    type Output = Point<F>;
    fn sub(self, rhs: &Point<F>) -> Point<F> {
        Point::new(self.x.clone() - rhs.x.clone(), self.y.clone() - rhs.y.clone())
    }
}

impl<F: Scalar> Neg for Point<F> {
    type Output = Point<F>;
    fn neg(self) -> Point<F> {
        Point::new(-self.x, -self.y)
    }
}

impl<F: fmt::Display> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Three points not collinear as elements of the coordinate field.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<F> {
    vertices: [Point<F>; 3],
}

impl<F: Scalar> Triangle<F> {
    pub fn new(v1: Point<F>, v2: Point<F>, v3: Point<F>) -> Result<Self> {
        if collinear_det(&v1, &v2, &v3).is_zero() {
            return Err(Error::DegenerateConstruction("triangle vertices are collinear"));
        }
        Ok(Triangle { vertices: [v1, v2, v3] })
    }

    pub fn vertices(&self) -> &[Point<F>; 3] {
        &self.vertices
    }

    /// Vertex by 1-based index.
    pub fn vertex(&self, index: usize) -> Option<&Point<F>> {
        index.checked_sub(1).and_then(|i| self.vertices.get(i))
    }

    /// Squared side lengths opposite each vertex: (a², b², c²).
    pub fn side_lengths_sq(&self) -> [F; 3] {
        let [v1, v2, v3] = &self.vertices;
        [de_sq(v2, v3), de_sq(v1, v3), de_sq(v1, v2)]
    }
}

impl<F: fmt::Display> fmt::Display for Triangle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.vertices;
        write!(f, "[{a}, {b}, {c}]")
    }
}

/// Homogeneous barycentric coordinates relative to some triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct Barycentrics<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

/// The triangle with base `(0,0)`–`(1,0)` whose half-angle tangents at the
/// two base vertices are `u` and `v`; the apex is the third vertex.
///
/// The apex is where the ray from the origin with direction `(1-u², 2u)`
/// meets the ray from `(1,0)` with direction `(v²-1, 2v)`, i.e. angles
/// `2·atan(u)` and `π - 2·atan(v)`.
pub fn te<F: Scalar>(u: &F, v: &F) -> Result<Triangle<F>> {
    let one = F::one();
    let denom = (u.clone() + v.clone()) * (one.clone() - u.clone() * v.clone());
    if denom.is_zero() {
        return Err(Error::DegenerateConstruction("half-angle rays do not meet"));
    }
    let two = F::from_i64(2);
    let x = (v.clone() * (one.clone() - u.square())).try_div(&denom)?;
    let y = (two * u.clone() * v.clone()).try_div(&denom)?;
    Triangle::new(Point::origin(), Point::new(one, F::zero()), Point::new(x, y))
}

pub fn de_sq<F: Scalar>(p: &Point<F>, q: &Point<F>) -> F {
    let d = p - q;
    d.dot(&d)
}

/// Orientation determinant of
/// `| x1 y1 1 ; x2 y2 1 ; x3 y3 1 |`, twice the signed area.
pub fn collinear_det<F: Scalar>(p1: &Point<F>, p2: &Point<F>, p3: &Point<F>) -> F {
    let a = p2 - p1;
    let b = p3 - p1;
    a.x * b.y - a.y * b.x
}

/// Determinant with rows `[x, y, x²+y², 1]`; zero iff the points are
/// concyclic or collinear.
pub fn concyclic_det<F: Scalar>(p1: &Point<F>, p2: &Point<F>, p3: &Point<F>, p4: &Point<F>) -> F {
    let lift = |p: &Point<F>| p.dot(p);
    let w4 = lift(p4);
    let row = |p: &Point<F>| {
        let d = p - p4;
        (d.x, d.y, lift(p) - w4.clone())
    };
    let (a1, b1, c1) = row(p1);
    let (a2, b2, c2) = row(p2);
    let (a3, b3, c3) = row(p3);
    a1.clone() * (b2.clone() * c3.clone() - c2.clone() * b3.clone()) - b1.clone() * (a2.clone() * c3 - c2 * a3.clone())
        + c1 * (a2 * b3 - b2 * a3)
}

pub fn barycentrics<F: Scalar>(t: &Triangle<F>, p: &Point<F>) -> Barycentrics<F> {
    let [v1, v2, v3] = t.vertices();
    Barycentrics {
        x: collinear_det(p, v2, v3),
        y: collinear_det(v1, p, v3),
        z: collinear_det(v1, v2, p),
    }
}

/// The Cartesian point with homogeneous barycentrics `b` over `t`.
pub fn from_barycentrics<F: Scalar>(t: &Triangle<F>, b: &Barycentrics<F>) -> Result<Point<F>> {
    let sum = b.x.clone() + b.y.clone() + b.z.clone();
    if sum.is_zero() {
        return Err(Error::DegenerateConstruction("barycentric weights sum to zero"));
    }
    let [v1, v2, v3] = t.vertices();
    let weighted = v1.scale(&b.x) + v2.scale(&b.y) + v3.scale(&b.z);
    Ok(Point::new(weighted.x.try_div(&sum)?, weighted.y.try_div(&sum)?))
}

/// Isogonal conjugate of `p` with respect to `t`: the point with
/// barycentrics `(a²yz : b²xz : c²xy)` where `(x : y : z)` are those of `p`.
pub fn isogonal_conjugate<F: Scalar>(t: &Triangle<F>, p: &Point<F>) -> Result<Point<F>> {
    let Barycentrics { x, y, z } = barycentrics(t, p);
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::ConjugateAtInfinity);
    }
    let [a2, b2, c2] = t.side_lengths_sq();
    let conj = Barycentrics {
        x: a2 * y.clone() * z.clone(),
        y: b2 * x.clone() * z,
        z: c2 * x * y,
    };
    from_barycentrics(t, &conj).map_err(|_| Error::ConjugateAtInfinity)
}

/// Intersection of the perpendicular bisectors of `p1p2` and `p1p3`.
pub fn circumcenter<F: Scalar>(p1: &Point<F>, p2: &Point<F>, p3: &Point<F>) -> Result<Point<F>> {
    // 2(p2-p1)·o = |p2|²-|p1|², 2(p3-p1)·o = |p3|²-|p1|².
    let d2 = p2 - p1;
    let d3 = p3 - p1;
    let det = F::from_i64(2) * (d2.x.clone() * d3.y.clone() - d2.y.clone() * d3.x.clone());
    if det.is_zero() {
        return Err(Error::DegenerateConstruction("circumcenter of collinear points"));
    }
    let w1 = p1.dot(p1);
    let r2 = p2.dot(p2) - w1.clone();
    let r3 = p3.dot(p3) - w1;
    let x = (r2.clone() * d3.y - r3.clone() * d2.y).try_div(&det)?;
    let y = (d2.x * r3 - d3.x * r2).try_div(&det)?;
    Ok(Point::new(x, y))
}

pub fn circumradius_sq<F: Scalar>(p1: &Point<F>, p2: &Point<F>, p3: &Point<F>) -> Result<F> {
    Ok(de_sq(&circumcenter(p1, p2, p3)?, p1))
}

/// Mirror image of `p` in the line through `l1` and `l2`.
pub fn reflect_over_line<F: Scalar>(p: &Point<F>, l1: &Point<F>, l2: &Point<F>) -> Result<Point<F>> {
    let d = l2 - l1;
    let len_sq = d.dot(&d);
    if len_sq.is_zero() {
        return Err(Error::DegenerateConstruction("mirror line through a single point"));
    }
    let t = (p - l1).dot(&d).try_div(&len_sq)?;
    let foot = l1.clone() + d.scale(&t);
    Ok(foot.scale(&F::from_i64(2)) - p.clone())
}
