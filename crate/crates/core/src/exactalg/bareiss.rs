//! Fraction-free determinants and Sylvester matrices.

use super::multipoly::MultiPoly;
use super::univariate::UniPoly;
use super::{AlgError, Scalar};

/// An integral domain with exact division, as needed by Bareiss elimination.
pub trait ExactDomain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Result<Self, AlgError>;
}

impl<C: Scalar> ExactDomain for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent overflow")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Result<Self, AlgError> {
        MultiPoly::div_exact(self, other)
    }
}

impl<C: Scalar> ExactDomain for UniPoly<C> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Result<Self, AlgError> {
        UniPoly::div_exact(self, other)
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn determinant<R: ExactDomain>(mut m: Vec<Vec<R>>) -> Result<R, AlgError> {
    let n = m.len();
    if n == 0 {
        return Ok(R::one());
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgError::NotSquare);
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Sylvester matrix of two coefficient lists given from the highest power
/// down (`p[0]` leads). Formal degrees are `p.len()-1` and `q.len()-1`.
pub fn sylvester<R: ExactDomain>(p: &[R], q: &[R]) -> Vec<Vec<R>> {
    sylvester_with(p, q, R::zero())
}

pub(crate) fn sylvester_with<T: Clone>(p: &[T], q: &[T], zero: T) -> Vec<Vec<T>> {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![zero; size]; size];
    for i in 0..n {
        for (j, c) in p.iter().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in q.iter().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    mat
}

/// Determinant over a field by Gaussian elimination.
pub fn field_determinant<C: Scalar>(mut m: Vec<Vec<C>>) -> Result<C, AlgError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgError::NotSquare);
    }
    let mut det = C::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(C::zero());
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone() / pivot.clone();
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][k + 1..].iter_mut().zip(&top[k][k + 1..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
        det = det * pivot;
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    /// Leibniz expansion, used as an independent oracle.
    fn leibniz(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = q(0);
        fn rec(k: usize, perm: &mut Vec<usize>, m: &[Vec<Rational>], total: &mut Rational) {
            let n = perm.len();
            if k == n {
                let mut inv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let mut prod = Rational::from_i64(if inv % 2 == 0 { 1 } else { -1 });
                for i in 0..n {
                    prod *= m[i][perm[i]].clone();
                }
                *total += prod;
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(k + 1, perm, m, total);
                perm.swap(k, i);
            }
        }
        rec(0, &mut perm, m, &mut total);
        total
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let rows = [
            [0, 2, -1, 3],
            [1, 0, 4, -2],
            [3, 5, 0, 1],
            [-2, 1, 1, 0],
        ];
        let m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        let as_poly: Vec<Vec<Poly>> = m
            .iter()
            .map(|r| r.iter().map(|v| Poly::constant(v.clone())).collect())
            .collect();
        let det = determinant(as_poly).unwrap();
        assert_eq!(det.constant_value().unwrap(), leibniz(&m));
        assert_eq!(field_determinant(m.clone()).unwrap(), leibniz(&m));
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let m: Vec<Vec<Poly>> = vec![
            vec![Poly::constant(q(1)), Poly::constant(q(2))],
            vec![Poly::constant(q(2)), Poly::constant(q(4))],
        ];
        assert!(determinant(m).unwrap().is_zero());
    }

    #[test]
    fn symbolic_two_by_two() {
        let a = Poly::var("a");
        let b = Poly::var("b");
        let m = vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]];
        assert_eq!(determinant(m).unwrap(), &a.pow(2) - &b.pow(2));
    }
}
