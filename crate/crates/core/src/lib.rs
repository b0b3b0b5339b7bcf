//! Exact computations for ruled surfaces Σ_{a,b} ⊂ ℙ³ built from curves of
//! type (a, b) on ℙ¹×ℙ¹, together with the numerical invariants and bounds
//! that go with them.

pub mod bounds;
mod combin;
pub mod exactalg;
pub mod invariants;
pub mod report;
pub mod scrollgen;
pub mod selftest;
pub mod verify;

pub use combin::binomial;
pub use exactalg::{AlgError, BinaryForm, MultiPoly, Scalar, UniPoly};

pub type Rational = num_rational::BigRational;
pub type Poly = MultiPoly<Rational>;
pub type Form = BinaryForm<Rational>;
