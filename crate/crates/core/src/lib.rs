//! Exact arithmetic in number fields `Q[x]/(f)` together with the machinery
//! needed to check the S-unit, Selmer and local splitting hypotheses of the
//! asymptotic Fermat criteria for `x^p + y^p = 2^r z^p` and `x^p + y^p = z^2`,
//! and the Frey-curve valuation bookkeeping behind them.
//!
//! Polynomial algebra is generic over a [`poly::Scalar`] coefficient ring;
//! everything that makes a decision is instantiated at exact rationals.

pub mod arith;
pub mod config;
pub mod criteria;
pub mod error;
pub mod extension;
pub mod factor_z;
pub mod field;
pub mod fp;
pub mod frey;
pub mod ideal;
pub mod linalg;
pub mod interval;
pub mod parse;
pub mod poly;
pub mod quadratic;
pub mod selmer;
pub mod sturm;
pub mod sunit;
pub mod units;
pub mod class;
pub mod valform;

pub use error::{Error, Result};
pub use field::{FieldElement, NumberField};
pub use ideal::{PrimeIdeal, SplittingType};
pub use valform::ValuationForm;

/// Exact rational scalar used for every decision in the crate.
pub type Rational = num_rational::BigRational;
/// Rational polynomials.
pub type QPoly = poly::Poly<Rational>;
/// Integer polynomials.
pub type ZPoly = poly::Poly<num_bigint::BigInt>;
