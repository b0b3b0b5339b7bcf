//! Resultants, discriminants and squarefree tests.
//!
//! Sign convention: `Res(p, q)` is the determinant of the Sylvester matrix
//! built from the coefficient lists with the `v0^n` coefficient first. For
//! forms with field coefficients this is the usual univariate resultant of
//! `p(x, 1)` and `q(x, 1)` (taken with formal degrees), and
//! `Res(q, p) = (-1)^(deg p * deg q) Res(p, q)`.

use super::bareiss::{determinant, sylvester};
use super::form::{BinaryForm, RootCount};
use super::multipoly::MultiPoly;
use super::{AlgError, Scalar};

fn check_pair<C: Scalar>(p: &BinaryForm<C>, q: &BinaryForm<C>) -> Result<(), AlgError> {
    if p.vars() != q.vars() {
        return Err(AlgError::VarPairMismatch);
    }
    Ok(())
}

/// Homogeneous resultant of two binary forms over the same variable pair.
///
/// The result is a polynomial in the coefficient variables; it vanishes iff
/// the forms share a projective root over the algebraic closure.
pub fn resultant<C: Scalar>(p: &BinaryForm<C>, q: &BinaryForm<C>) -> Result<MultiPoly<C>, AlgError> {
    check_pair(p, q)?;
    if p.degree() == 0 || q.degree() == 0 {
        return Err(AlgError::DegreeTooSmall {
            needed: 1,
            found: p.degree().min(q.degree()),
        });
    }
    determinant(sylvester(p.coeffs(), q.coeffs()))
}

/// `(-1)^(n(n-1)/2) * n^(n-2)`: the factor relating `Res(f_v0, f_v1)` to the
/// discriminant of a degree-`n` binary form.
fn gradient_resultant_factor<C: Scalar>(n: usize) -> C {
    let mut c = C::one();
    let nn = C::from_i64(n as i64);
    for _ in 2..n {
        c = c * nn.clone();
    }
    if (n * (n - 1) / 2) % 2 == 1 {
        c = -c;
    }
    c
}

/// Discriminant of a binary form of degree `n >= 2`, normalized so that
/// `A v0^2 + B v0 v1 + C v1^2` has discriminant `B^2 - 4AC`.
///
/// Computed as `Res(df/dv0, df/dv1)` divided by `(-1)^(n(n-1)/2) n^(n-2)`.
pub fn discriminant<C: Scalar>(p: &BinaryForm<C>) -> Result<MultiPoly<C>, AlgError> {
    let n = p.degree();
    if n < 2 {
        return Err(AlgError::DegreeTooSmall { needed: 2, found: n });
    }
    let (d0, d1) = p.gradient_coeffs();
    let res = determinant(sylvester(&d0, &d1))?;
    let factor: C = gradient_resultant_factor(n);
    Ok(res.scale(&(C::one() / factor)))
}

/// Discriminant of a form with field coefficients, as a field element.
pub fn discriminant_value<C: Scalar>(p: &BinaryForm<C>) -> Result<C, AlgError> {
    discriminant(p)?
        .constant_value()
        .ok_or(AlgError::NotUnivariate)
}

/// `p / gcd(p, p')` for a univariate polynomial, made monic.
pub fn squarefree_part<C: Scalar>(p: &MultiPoly<C>) -> Result<MultiPoly<C>, AlgError> {
    let var = univariate_var(p)?;
    let u = p.to_univariate(&var)?;
    MultiPoly::from_univariate(&u.squarefree_part()?, &var).with_context(p.vars())
}

pub fn is_squarefree<C: Scalar>(p: &MultiPoly<C>) -> Result<bool, AlgError> {
    let var = univariate_var(p)?;
    p.to_univariate(&var)?.is_squarefree()
}

fn univariate_var<C: Scalar>(p: &MultiPoly<C>) -> Result<String, AlgError> {
    if p.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let used = p.used_vars();
    match used.len() {
        0 => Ok(p.vars().first().cloned().unwrap_or_else(|| "x".to_string())),
        1 => Ok(used[0].clone()),
        _ => Err(AlgError::NotUnivariate),
    }
}

/// Distinct projective roots of a form with field coefficients, with the
/// total count (the degree).
pub fn distinct_root_count<C: Scalar>(p: &BinaryForm<C>) -> Result<RootCount, AlgError> {
    p.root_count()
}
