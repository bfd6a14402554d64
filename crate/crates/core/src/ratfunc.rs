//! Rational functions: reduced quotients of polynomials.
//!
//! A [`RationalFunction`] is kept in lowest terms after every operation,
//! with its denominator primitive and carrying a positive leading
//! coefficient. Equality is still decided by cross-multiplication so it
//! never depends on that canonical form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarTable};
use crate::rational::Rational;
use crate::scalar::{Coefficient, FromRational, Scalar};

#[derive(Clone)]
pub struct RationalFunction<C> {
    num: Polynomial<C>,
    den: Polynomial<C>,
}

impl<C: Coefficient> RationalFunction<C> {
    /// `num / den` in lowest terms.
    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // Surface a table mismatch before any arithmetic.
        num.checked_add(&den)?;
        let g = num.gcd(&den)?;
        if g.is_constant() {
            Ok(Self::normalize_sign(num, den))
        } else {
            Ok(Self::normalize_sign(num.div_exact(&g)?, den.div_exact(&g)?))
        }
    }

    pub fn from_poly(p: Polynomial<C>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn var(table: &VarTable, name: &str) -> Result<Self> {
        Ok(Self::from_poly(Polynomial::var(table, name)?))
    }

    pub fn var_at(table: &VarTable, index: usize) -> Self {
        Self::from_poly(Polynomial::var_at(table, index))
    }

    pub fn numer(&self) -> &Polynomial<C> {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial<C> {
        &self.den
    }

    pub fn table(&self) -> Option<&VarTable> {
        self.num.table().or(self.den.table())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<C> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        n.try_div(&d).ok()
    }

    /// Assumes `num/den` already coprime; fixes the unit so that the
    /// denominator is primitive with a positive leading coefficient.
    fn normalize_sign(num: Polynomial<C>, den: Polynomial<C>) -> Self {
        if num.is_zero() {
            let mut den1 = Polynomial::one();
            if let Some(t) = den.table().or(num.table()) {
                den1 = den1.with_table(t).expect("constant takes any table");
            }
            return RationalFunction {
                num: den1.scale(&C::zero()),
                den: den1,
            };
        }
        let (content, den) = den.content_and_primitive();
        let num = num.scale(&C::one().try_div(&content).expect("content is nonzero"));
        RationalFunction { num, den }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.add_signed(rhs, false)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.add_signed(rhs, true)
    }

    fn add_signed(&self, rhs: &Self, subtract: bool) -> Result<Self> {
        let rnum = if subtract { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return Ok(RationalFunction {
                num: rnum,
                den: rhs.den.clone(),
            }
            .retabled(self));
        }
        if rhs.is_zero() {
            return Ok(self.clone().retabled(rhs));
        }
        if self.den == rhs.den {
            let num = self.num.checked_add(&rnum)?;
            return Self::new(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den)?;
        if g.is_constant() {
            let num = self
                .num
                .checked_mul(&rhs.den)?
                .checked_add(&rnum.checked_mul(&self.den)?)?;
            let den = self.den.checked_mul(&rhs.den)?;
            return Ok(Self::normalize_sign(num, den));
        }
        let left = self.den.div_exact(&g)?;
        let right = rhs.den.div_exact(&g)?;
        let num = self.num.checked_mul(&right)?.checked_add(&rnum.checked_mul(&left)?)?;
        let h = num.gcd(&g)?;
        let (num, g) = if h.is_constant() {
            (num, g)
        } else {
            (num.div_exact(&h)?, g.div_exact(&h)?)
        };
        let den = left.checked_mul(&right)?.checked_mul(&g)?;
        Ok(Self::normalize_sign(num, den))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            self.num.checked_add(&rhs.num)?;
            return Ok(Self::zero().retabled(self).retabled(rhs));
        }
        let g1 = self.num.gcd(&rhs.den)?;
        let g2 = rhs.num.gcd(&self.den)?;
        let (a, d) = cancel(&self.num, &rhs.den, &g1)?;
        let (c, b) = cancel(&rhs.num, &self.den, &g2)?;
        Ok(Self::normalize_sign(a.checked_mul(&c)?, b.checked_mul(&d)?))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(&rhs.recip()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(Self::normalize_sign(base.num.pow(e), base.den.pow(e)))
    }

    /// Exact field equality by cross-multiplication.
    pub fn field_eq(&self, other: &Self) -> bool {
        match (self.num.checked_mul(&other.den), other.num.checked_mul(&self.den)) {
            (Ok(l), Ok(r)) => l.checked_sub(&r).is_ok_and(|d| d.is_zero()),
            _ => false,
        }
    }

    pub fn eval(&self, subst: &HashMap<String, C>) -> Result<C> {
        let den = self.den.eval(subst)?;
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval(subst)?.try_div(&den)
    }

    /// Evaluates with `point[i]` substituted for variable `i`.
    pub fn eval_at(&self, point: &[C]) -> Result<C> {
        let den = self.den.eval_at(point);
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval_at(point).try_div(&den)
    }

    /// `(num)/(den)`, or just the numerator when the denominator is 1.
    pub fn canonical_string(&self) -> String {
        if self.den.is_one_poly() {
            self.num.canonical_string()
        } else {
            format!("({})/({})", self.num.canonical_string(), self.den.canonical_string())
        }
    }

    fn retabled(mut self, other: &Self) -> Self {
        if self.table().is_none() {
            if let Some(t) = other.table() {
                self.num = self.num.with_table(t).expect("constant takes any table");
                self.den = self.den.with_table(t).expect("constant takes any table");
            }
        }
        self
    }
}

fn cancel<C: Coefficient>(
    a: &Polynomial<C>,
    b: &Polynomial<C>,
    g: &Polynomial<C>,
) -> Result<(Polynomial<C>, Polynomial<C>)> {
    if g.is_constant() {
        Ok((a.clone(), b.clone()))
    } else {
        Ok((a.div_exact(g)?, b.div_exact(g)?))
    }
}

impl<C: Coefficient> Polynomial<C> {
    fn is_one_poly(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl FromRational for RationalFunction<Rational> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl Polynomial<Rational> {
    /// Evaluates in any field containing the rationals.
    pub fn eval_into<F: FromRational>(&self, point: &[F]) -> F {
        let mut total = F::zero();
        for (m, c) in self.terms() {
            let mut term = F::from_rational(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term * point[i].clone();
                }
            }
            total = total + term;
        }
        total
    }
}

impl RationalFunction<Rational> {
    /// Evaluates in any field containing the rationals, e.g. composes when
    /// `F` is itself a rational-function field.
    pub fn eval_into<F: FromRational>(&self, point: &[F]) -> Result<F> {
        let den = self.den.eval_into(point);
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval_into(point).try_div(&den)
    }

    /// Randomized identity test: compares both sides at `trials` random
    /// rational points drawn from a generator seeded with `seed`.
    ///
    /// Numerators are uniform in `[-bound, bound]` and denominators in
    /// `[1, bound]`; a point where either side has a pole is redrawn.
    pub fn prob_equal(&self, other: &Self, trials: usize, seed: u64, bound: u64) -> bool {
        assert!(trials >= 1, "at least one trial");
        let arity = [self.table(), other.table()]
            .into_iter()
            .flatten()
            .map(VarTable::arity)
            .max()
            .unwrap_or(0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut done = 0;
        let mut draws = 0usize;
        while done < trials {
            draws += 1;
            assert!(draws < 1000 * trials + 1000, "could not avoid poles");
            let point = random_point(&mut rng, arity, bound);
            let (Ok(l), Ok(r)) = (self.eval_at(&point), other.eval_at(&point)) else {
                continue;
            };
            if l != r {
                return false;
            }
            done += 1;
        }
        true
    }
}

/// A random rational point with numerators in `[-bound, bound]` and
/// denominators in `[1, bound]`.
pub fn random_point<R: Rng>(rng: &mut R, arity: usize, bound: u64) -> Vec<Rational> {
    let bound = bound.max(1) as i64;
    (0..arity)
        .map(|_| {
            let n = rng.gen_range(-bound..=bound);
            let d = rng.gen_range(1..=bound);
            Rational::new(n, d).expect("positive denominator")
        })
        .collect()
}

impl<C: Coefficient> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.field_eq(other)
    }
}

impl<C: Coefficient> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl<C: Coefficient> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

macro_rules! rf_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, C: Coefficient> $tr<&'a RationalFunction<C>> for &'a RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: &'a RationalFunction<C>) -> RationalFunction<C> {
                self.$checked(rhs)
                    .expect("rational functions over different tables")
            }
        }
        impl<C: Coefficient> $tr for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $method(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

rf_binop!(Add, add, checked_add);
rf_binop!(Sub, sub, checked_sub);
rf_binop!(Mul, mul, checked_mul);

impl<C: Coefficient> Neg for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<C: Coefficient> Neg for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<C: Coefficient> Zero for RationalFunction<C> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Coefficient> One for RationalFunction<C> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<C: Coefficient> Scalar for RationalFunction<C> {
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn from_i64(value: i64) -> Self {
        Self::constant(C::from_i64(value))
    }
}
