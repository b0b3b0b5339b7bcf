//! Exact polynomial algebra over ℚ: sparse multivariate polynomials, binary
//! forms, resultants and discriminants, plus the text and JSON formats.

mod bareiss;
mod bivariate;
mod form;
mod multipoly;
mod quotient;
mod resultant;
mod scalar;
mod text;
mod univariate;

pub use bareiss::{determinant, field_determinant, sylvester, ExactDomain};
pub use bivariate::{resultant_in_y, to_ypoly, x_derivative, y_derivative};
pub use form::{BinaryForm, RootCount};
pub use multipoly::{unify_vars, Exponents, MultiPoly};
pub use quotient::{common_affine_root, common_projective_root, common_root_with, YPoly};
pub use resultant::{
    discriminant, discriminant_value, distinct_root_count, is_squarefree, resultant,
    squarefree_part,
};
pub use scalar::Scalar;
pub use text::{format_poly, parse_poly, PolyJson, TermJson};
pub use univariate::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("exponent overflow")]
    Capacity,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("exponent vector has {found} entries, context has {expected}")]
    Arity { expected: usize, found: usize },
    #[error("zero form")]
    ZeroForm,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {found} too small, need at least {needed}")]
    DegreeTooSmall { needed: usize, found: usize },
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a polynomial in at most one variable")]
    NotUnivariate,
    #[error("forms are over different variable pairs")]
    VarPairMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("parse error at {line}:{column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
}
