//! Coefficient fields.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// A coefficient field for the polynomial types.
///
/// `BigRational` is the field every geometric computation in this crate uses.
/// `f64` is accepted for quick numeric experiments; zero tests on floats are
/// exact comparisons, so elimination results over `f64` are only indicative.
pub trait Scalar:
    Num + Clone + PartialEq + Debug + Display + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Best-effort conversion used for diagnostics only.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        *self as f64
    }
}
