//! Dense univariate polynomials over a field.

use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgError, Scalar};

/// Dense univariate polynomial; `coeffs[k]` multiplies `x^k`.
///
/// Canonical: empty for zero, otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> UniPoly<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero constant (degree 0).
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&(C::one() / lc.clone())),
            None => Self::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * C::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), AlgError> {
        let dl = d.leading_coeff().ok_or(AlgError::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![C::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() / dl.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, AlgError> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn div_exact(&self, d: &Self) -> Result<Self, AlgError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgError::InexactDivision)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s*self ≡ g (mod m)`.
    pub fn half_ext_gcd(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m).unwrap_or_else(|_| self.clone()));
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            // keep remainders monic; the cofactor scales with them
            let inv = r.leading_coeff().map(|lc| C::one() / lc.clone()).unwrap_or_else(C::one);
            r0 = r1;
            r1 = r.scale(&inv);
            s0 = s1;
            s1 = s.scale(&inv);
        }
        match r0.leading_coeff().cloned() {
            Some(lc) => {
                let inv = C::one() / lc;
                (r0.scale(&inv), s0.scale(&inv))
            }
            None => (Self::zero(), Self::zero()),
        }
    }

    /// The polynomial of degree below `points.len()` through the given
    /// points, by Newton divided differences. Abscissae must be distinct.
    pub fn interpolate(points: &[(C, C)]) -> Result<Self, AlgError> {
        let n = points.len();
        let mut dd: Vec<C> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let den = points[i].0.clone() - points[i - level].0.clone();
                if den.is_zero() {
                    return Err(AlgError::DivisionByZero);
                }
                dd[i] = (dd[i].clone() - dd[i - 1].clone()) / den;
            }
        }
        let mut out = Self::zero();
        for i in (0..n).rev() {
            let shift = Self::from_coeffs(vec![-points[i].0.clone(), C::one()]);
            out = &(&out * &shift) + &Self::constant(dd[i].clone());
        }
        Ok(out)
    }

    /// `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_exact(&g)?.monic())
    }

    pub fn is_squarefree(&self) -> Result<bool, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Composition `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }
}

impl<C: Scalar> Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Scalar> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Scalar> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<C: Scalar> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type U = UniPoly<Rational>;

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let p = U::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), U::from_i64(&[-2, 1, 1]));
        assert!(!p.is_squarefree().unwrap());
        let q = U::from_i64(&[1, 0, 1]);
        assert_eq!(q.squarefree_part().unwrap(), q);
        assert!(q.is_squarefree().unwrap());
        assert_eq!(U::zero().squarefree_part(), Err(AlgError::ZeroPolynomial));
    }

    #[test]
    fn division_and_gcd() {
        let a = U::from_i64(&[-1, 0, 1]); // t^2 - 1
        let b = U::from_i64(&[1, 1]); // t + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, U::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&U::from_i64(&[-1, 1])), U::from_i64(&[-1, 1]));
        assert_eq!(a.gcd(&U::from_i64(&[2, 1])), U::one());
    }

    #[test]
    fn modular_inverse() {
        let m = U::from_i64(&[1, 0, 1]); // t^2 + 1
        let a = U::from_i64(&[1, 1]);
        let (g, s) = a.half_ext_gcd(&m);
        assert_eq!(g, U::one());
        assert_eq!((&s * &a).rem(&m).unwrap(), U::one());
    }
}
