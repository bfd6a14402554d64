//! The scalar abstraction shared by the geometry layer.
//!
//! Every construction in [`crate::geom`] is written once against [`Scalar`]
//! and runs unchanged over symbolic rational functions, exact rationals and
//! `f64`/`f32`. "Zero" always means *identically* zero for the carrier: a
//! rational function is zero only when its numerator is the zero polynomial.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Field division, failing with [`Error::DivisionByZero`] on a zero divisor.
    fn try_div(&self, rhs: &Self) -> Result<Self>;

    fn from_i64(value: i64) -> Self;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn try_div(&self, rhs: &Self) -> Result<Self> {
                if *rhs == 0.0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(self / rhs)
                }
            }

            fn from_i64(value: i64) -> Self {
                value as $t
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);

/// A scalar usable as a polynomial coefficient: an exact field with a
/// canonical choice of unit for normalizing polynomials up to scale.
pub trait Coefficient: Scalar + std::fmt::Display {
    fn is_negative(&self) -> bool;

    /// A nonzero factor `u` such that `u * c` for `c` in `coeffs` is the
    /// preferred representative of the family up to a unit. `coeffs` is
    /// nonempty and its last element is the leading coefficient.
    fn normalizer(coeffs: &[&Self]) -> Self;
}

/// Scalars that contain the rationals, so rational polynomials can be
/// evaluated in them.
pub trait FromRational: Scalar {
    fn from_rational(q: &crate::Rational) -> Self;
}

impl FromRational for f64 {
    fn from_rational(q: &crate::Rational) -> Self {
        q.to_f64()
    }
}
