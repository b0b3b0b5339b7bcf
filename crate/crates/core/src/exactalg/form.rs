use serde::{Deserialize, Serialize};

use super::multipoly::MultiPoly;
use super::univariate::UniPoly;
use super::{AlgError, Scalar};

/// A binary form of degree `n` in the pair `(v0, v1)`.
///
/// `coeffs[i]` multiplies `v0^(n-i) * v1^i`, so `coeffs[0]` is the leading
/// coefficient of `f(x, 1)` and vanishes exactly when `(1:0)` is a root.
/// Coefficients may themselves be polynomials in variables outside the pair.
/// Not all coefficients vanish.
#[derive(Clone, Debug)]
pub struct BinaryForm<C> {
    vars: [String; 2],
    coeffs: Vec<MultiPoly<C>>,
}

/// Number of projective roots over the algebraic closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCount {
    pub distinct: usize,
    pub with_multiplicity: usize,
}

impl<C: Scalar> BinaryForm<C> {
    pub fn new(v0: &str, v1: &str, coeffs: Vec<MultiPoly<C>>) -> Result<Self, AlgError> {
        if v0 == v1 {
            return Err(AlgError::DuplicateVariable(v0.to_string()));
        }
        if coeffs.is_empty() || coeffs.iter().all(MultiPoly::is_zero) {
            return Err(AlgError::ZeroForm);
        }
        for c in &coeffs {
            let used = c.used_vars();
            if let Some(v) = used.iter().find(|v| *v == v0 || *v == v1) {
                return Err(AlgError::NotHomogeneous(format!(
                    "coefficient depends on form variable {v}"
                )));
            }
        }
        Ok(BinaryForm {
            vars: [v0.to_string(), v1.to_string()],
            coeffs,
        })
    }

    pub fn from_scalars(v0: &str, v1: &str, coeffs: Vec<C>) -> Result<Self, AlgError> {
        Self::new(v0, v1, coeffs.into_iter().map(MultiPoly::constant).collect())
    }

    pub fn from_i64(v0: &str, v1: &str, coeffs: &[i64]) -> Result<Self, AlgError> {
        Self::from_scalars(v0, v1, coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }

    /// Read a polynomial as a form in `(v0, v1)`; it must be nonzero and
    /// homogeneous in that pair.
    pub fn from_poly(p: &MultiPoly<C>, v0: &str, v1: &str) -> Result<Self, AlgError> {
        if p.is_zero() {
            return Err(AlgError::ZeroForm);
        }
        let n = p.homogeneous_degree_in(&[v0, v1]).ok_or_else(|| {
            AlgError::NotHomogeneous(format!("polynomial is not homogeneous in ({v0}, {v1})"))
        })? as usize;
        let rest: Vec<String> = p
            .vars()
            .iter()
            .filter(|v| *v != v0 && *v != v1)
            .cloned()
            .collect();
        let i0 = p.var_index(v0);
        let i1 = p.var_index(v1);
        let mut buckets: Vec<Vec<(Vec<u32>, C)>> = vec![Vec::new(); n + 1];
        for (e, c) in p.terms() {
            let k1 = i1.map_or(0, |i| e[i]) as usize;
            let reduced: Vec<u32> = e
                .iter()
                .enumerate()
                .filter(|(j, _)| Some(*j) != i0 && Some(*j) != i1)
                .map(|(_, &x)| x)
                .collect();
            buckets[k1].push((reduced, c.clone()));
        }
        let coeffs = buckets
            .into_iter()
            .map(|b| MultiPoly::from_terms(&rest, b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(v0, v1, coeffs)
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars[0], &self.vars[1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    /// Coefficients as field elements when none involves other variables.
    pub fn scalar_coeffs(&self) -> Option<Vec<C>> {
        self.coeffs.iter().map(MultiPoly::constant_value).collect()
    }

    pub fn to_poly(&self) -> MultiPoly<C> {
        let n = self.degree();
        let v0 = MultiPoly::var(&self.vars[0]);
        let v1 = MultiPoly::var(&self.vars[1]);
        let mut out = MultiPoly::zero_in(&[&self.vars[0], &self.vars[1]]).expect("distinct");
        for (i, c) in self.coeffs.iter().enumerate() {
            let t = &(&v0.pow((n - i) as u64) * &v1.pow(i as u64)) * c;
            out = &out + &t;
        }
        out
    }

    /// Coefficient lists of `d/dv0` and `d/dv1`, both of formal degree `n-1`.
    /// Either may be identically zero.
    pub(crate) fn gradient_coeffs(&self) -> (Vec<MultiPoly<C>>, Vec<MultiPoly<C>>) {
        let n = self.degree();
        let d0 = (0..n)
            .map(|i| self.coeffs[i].scale(&C::from_i64((n - i) as i64)))
            .collect();
        let d1 = (1..=n)
            .map(|i| self.coeffs[i].scale(&C::from_i64(i as i64)))
            .collect();
        (d0, d1)
    }

    /// `f(x, 1)` for a form with field coefficients.
    pub fn dehomogenize(&self) -> Result<UniPoly<C>, AlgError> {
        let c = self.scalar_coeffs().ok_or(AlgError::NotUnivariate)?;
        Ok(UniPoly::from_coeffs(c.into_iter().rev().collect()))
    }

    /// Multiplicity of the root `(1:0)`, i.e. the power of `v1` dividing `f`.
    pub fn root_at_infinity_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn root_count(&self) -> Result<RootCount, AlgError> {
        let affine = self.dehomogenize()?;
        let at_inf = self.root_at_infinity_multiplicity();
        let sqf = affine.squarefree_part()?;
        Ok(RootCount {
            distinct: sqf.degree().unwrap_or(0) + usize::from(at_inf > 0),
            with_multiplicity: self.degree(),
        })
    }

    /// Squarefree over the algebraic closure: every projective root simple.
    pub fn is_squarefree(&self) -> Result<bool, AlgError> {
        let rc = self.root_count()?;
        Ok(rc.distinct == rc.with_multiplicity)
    }

    /// Degree of the greatest common divisor of two forms with field
    /// coefficients, computed by Euclid on `f(x, 1)` plus the `v1`-adic part.
    pub fn gcd_degree(&self, other: &Self) -> Result<usize, AlgError> {
        let a = self.dehomogenize()?;
        let b = other.dehomogenize()?;
        let g = a.gcd(&b);
        let inf = self
            .root_at_infinity_multiplicity()
            .min(other.root_at_infinity_multiplicity());
        Ok(g.degree().unwrap_or(0) + inf)
    }
}

impl<C: Scalar> PartialEq for BinaryForm<C> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.coeffs == other.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Form, Poly};

    #[test]
    fn round_trip_through_poly() {
        let (u0, u1, s0) = (Poly::var("u0"), Poly::var("u1"), Poly::var("s0"));
        let p = &(&s0 * &u0.pow(2)) - &(&u0 * &u1);
        let f = Form::from_poly(&p, "u0", "u1").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.coeffs()[0], s0);
        assert_eq!(f.to_poly(), p);
    }

    #[test]
    fn rejects_inhomogeneous_and_zero() {
        let p = &Poly::var("u0").pow(2) + &Poly::var("u1");
        assert!(matches!(
            Form::from_poly(&p, "u0", "u1"),
            Err(AlgError::NotHomogeneous(_))
        ));
        assert_eq!(Form::from_poly(&Poly::zero(), "u0", "u1"), Err(AlgError::ZeroForm));
        assert_eq!(Form::from_i64("u0", "u1", &[0, 0]), Err(AlgError::ZeroForm));
    }

    #[test]
    fn root_counts() {
        // u0^2 u1
        let f = Form::from_i64("u0", "u1", &[0, 1, 0, 0]).unwrap();
        assert_eq!(
            f.root_count().unwrap(),
            RootCount { distinct: 2, with_multiplicity: 3 }
        );
        // u0^4
        let g = Form::from_i64("u0", "u1", &[1, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            g.root_count().unwrap(),
            RootCount { distinct: 1, with_multiplicity: 4 }
        );
        // u1^2: double root at infinity
        let h = Form::from_i64("u0", "u1", &[0, 0, 1]).unwrap();
        assert_eq!(h.root_count().unwrap().distinct, 1);
        assert!(!h.is_squarefree().unwrap());
    }
}
