//! Polynomials in two variables viewed as polynomials in `y` over `Q[x]`.

use super::bareiss::{field_determinant, sylvester_with};
use super::multipoly::MultiPoly;
use super::quotient::YPoly;
use super::univariate::UniPoly;
use super::{AlgError, Scalar};

/// Coefficients of `p` in ascending powers of `y`, each a polynomial in `x`.
/// `p` may not involve other variables. Trailing zero coefficients are
/// dropped, so the zero polynomial gives an empty vector.
pub fn to_ypoly<C: Scalar>(p: &MultiPoly<C>, x: &str, y: &str) -> Result<YPoly<C>, AlgError> {
    let rows = if p.var_index(y).is_some() {
        p.coefficients_in(y)?
    } else {
        vec![p.clone()]
    };
    let mut out = rows
        .iter()
        .map(|c| c.to_univariate(x))
        .collect::<Result<Vec<_>, _>>()?;
    while out.last().is_some_and(UniPoly::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// `Res_y(f, g)` with the actual `y`-degrees of `f` and `g`, a polynomial in
/// `x`. Both must be nonzero.
pub fn resultant_in_y<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>) -> Result<UniPoly<C>, AlgError> {
    if f.is_empty() || g.is_empty() {
        return Err(AlgError::ZeroPolynomial);
    }
    let xdeg = |p: &YPoly<C>| p.iter().filter_map(UniPoly::degree).max().unwrap_or(0);
    let bound = (g.len() - 1) * xdeg(f) + (f.len() - 1) * xdeg(g);
    // the determinant of a fixed-shape matrix commutes with evaluation
    let points = (0..=bound)
        .map(|i| {
            let x = C::from_i64(i as i64);
            let fl: Vec<C> = f.iter().rev().map(|c| c.eval(&x)).collect();
            let gl: Vec<C> = g.iter().rev().map(|c| c.eval(&x)).collect();
            Ok((x, field_determinant(sylvester_with(&fl, &gl, C::zero()))?))
        })
        .collect::<Result<Vec<_>, AlgError>>()?;
    UniPoly::interpolate(&points)
}

/// Formal derivative in `y`.
pub fn y_derivative<C: Scalar>(f: &YPoly<C>) -> YPoly<C> {
    let mut out: YPoly<C> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&C::from_i64(k as i64)))
        .collect();
    while out.last().is_some_and(UniPoly::is_zero) {
        out.pop();
    }
    out
}

/// Formal derivative in `x`, coefficientwise.
pub fn x_derivative<C: Scalar>(f: &YPoly<C>) -> YPoly<C> {
    let mut out: YPoly<C> = f.iter().map(UniPoly::derivative).collect();
    while out.last().is_some_and(UniPoly::is_zero) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::bareiss::{determinant, sylvester};
    use crate::{Poly, Rational};

    /// `resultant_in_y` by fraction-free elimination over `Q[x]`.
    fn resultant_in_y_bareiss<C: Scalar>(f: &YPoly<C>, g: &YPoly<C>) -> Result<UniPoly<C>, AlgError> {
        if f.is_empty() || g.is_empty() {
            return Err(AlgError::ZeroPolynomial);
        }
        let fl: Vec<UniPoly<C>> = f.iter().rev().cloned().collect();
        let gl: Vec<UniPoly<C>> = g.iter().rev().cloned().collect();
        determinant(sylvester(&fl, &gl))
    }

    #[test]
    fn interpolation_matches_bareiss() {
        use crate::exactalg::parse_poly;
        for text in [
            "x^3*y^2 - 2*x*y^2 + 3*y^2 + x^4*y - x + 7",
            "y^4 + x^4 + x^2*y^2 - 3*x*y + 1",
            "2*x^2*y^3 - x^3 + 5*y - 4",
        ] {
            let f = to_ypoly(&parse_poly(text, Some(&["x", "y"])).unwrap(), "x", "y").unwrap();
            for g in [y_derivative(&f), x_derivative(&f)] {
                assert_eq!(resultant_in_y(&f, &g).unwrap(), resultant_in_y_bareiss(&f, &g).unwrap(), "{text}");
            }
        }
    }

    #[test]
    fn resultant_eliminates_y() {
        // f = y^2 - x, g = y - 1: Res_y = 1 - x
        let (x, y) = (Poly::var("x"), Poly::var("y"));
        let f = to_ypoly(&(&y.pow(2) - &x), "x", "y").unwrap();
        let g = to_ypoly(&(&y - &Poly::one()), "x", "y").unwrap();
        let r = resultant_in_y(&f, &g).unwrap();
        assert_eq!(r, UniPoly::<Rational>::from_i64(&[1, -1]));
        assert_eq!(y_derivative(&f).len(), 2);
        assert_eq!(x_derivative(&f)[0], UniPoly::from_i64(&[-1]));
    }

    #[test]
    fn absent_variables_are_fine() {
        let p = &Poly::var("x").pow(2) + &Poly::one();
        let f = to_ypoly(&p, "x", "y").unwrap();
        assert_eq!(f.len(), 1);
        assert!(to_ypoly(&Poly::zero(), "x", "y").unwrap().is_empty());
        assert_eq!(to_ypoly(&Poly::var("z"), "x", "y"), Err(AlgError::NotUnivariate));
    }
}
