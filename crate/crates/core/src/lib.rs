//! Exact analytic geometry over rational-function fields.
//!
//! The crate is layered bottom-up:
//!
//! * [`rational`]: arbitrary-precision rationals, the coefficient field.
//! * [`poly`]: sparse multivariate polynomials with exact GCD.
//! * [`ratfunc`]: reduced rational functions and randomized identity tests.
//! * [`geom`]: plane constructions generic over any [`Scalar`], so the
//!   same code runs on symbols, exact rationals and floats.
//! * [`quartet`]: the isogonal-conjugate quartet of a quadrilateral, its
//!   certificate and an independent numeric oracle.
//! * [`script`]: a small construction language for writing such proofs.

pub mod error;
pub mod geom;
pub mod poly;
pub mod quartet;
pub mod ratfunc;
pub mod rational;
pub mod scalar;
pub mod script;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, VarTable};
pub use rational::Rational;
pub use scalar::{Coefficient, FromRational, Scalar};

pub type Poly = Polynomial<Rational>;
pub type RatFunc = ratfunc::RationalFunction<Rational>;

pub type SymbolicPoint = geom::Point<RatFunc>;
pub type ExactPoint = geom::Point<Rational>;
pub type FloatPoint = geom::Point<f64>;
pub type SymbolicTriangle = geom::Triangle<RatFunc>;
