//! Common-root tests over the roots of a univariate modulus.
//!
//! Elements of `Q[x]/(m)` with `m` squarefree behave like tuples of values at
//! the roots of `m`. Euclid's algorithm in `(Q[x]/(m))[y]` needs to invert
//! leading coefficients; when a coefficient is a zero divisor the modulus is
//! split as `m = g * (m/g)` with `g = gcd(m, c)` and each factor is handled
//! separately. On every branch all pivots used are units, so the computed gcd
//! specializes correctly at each root of that branch.

use super::univariate::UniPoly;
use super::Scalar;

/// A polynomial in `y` whose coefficients (ascending powers of `y`) are
/// polynomials in `x`.
pub type YPoly<C> = Vec<UniPoly<C>>;

enum Step<C, T> {
    Done(T),
    Split(UniPoly<C>),
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Step::Done(v) => v,
            Step::Split(g) => return Step::Split(g),
        }
    };
}

struct Ring<'a, C> {
    m: &'a UniPoly<C>,
}

impl<C: Scalar> Ring<'_, C> {
    fn reduce(&self, a: &UniPoly<C>) -> UniPoly<C> {
        a.rem(self.m).expect("nonzero modulus")
    }

    fn mul(&self, a: &UniPoly<C>, b: &UniPoly<C>) -> UniPoly<C> {
        self.reduce(&(a * b))
    }

    /// Inverse of a reduced element, or the splitting factor if it is a zero
    /// divisor.
    fn inverse(&self, a: &UniPoly<C>) -> Step<C, UniPoly<C>> {
        let (g, s) = a.half_ext_gcd(self.m);
        if g.degree() == Some(0) {
            Step::Done(self.reduce(&s))
        } else {
            Step::Split(g)
        }
    }

    /// Strip leading coefficients that are zero; split on zero divisors.
    fn normalize(&self, mut p: YPoly<C>) -> Step<C, YPoly<C>> {
        while let Some(lc) = p.last() {
            if lc.is_zero() {
                p.pop();
                continue;
            }
            let g = lc.gcd(self.m);
            if g.degree() == Some(0) {
                break;
            }
            return Step::Split(g);
        }
        Step::Done(p)
    }

    fn rem(&self, a: YPoly<C>, b: &YPoly<C>) -> Step<C, YPoly<C>> {
        let inv = tri!(self.inverse(b.last().expect("normalized nonzero")));
        let db = b.len() - 1;
        let mut a = tri!(self.normalize(a));
        while a.len() > db {
            let shift = a.len() - 1 - db;
            let c = self.mul(a.last().expect("nonempty"), &inv);
            for (j, bc) in b.iter().enumerate() {
                let t = self.mul(&c, bc);
                a[shift + j] = self.reduce(&(&a[shift + j] - &t));
            }
            a.pop();
            a = tri!(self.normalize(a));
        }
        Step::Done(a)
    }

    fn gcd(&self, a: YPoly<C>, b: YPoly<C>) -> Step<C, YPoly<C>> {
        let mut a = tri!(self.normalize(a));
        let mut b = tri!(self.normalize(b));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = tri!(self.rem(a, &b));
            a = b;
            b = r;
        }
        Step::Done(a)
    }

    fn attempt(&self, polys: &[YPoly<C>]) -> Step<C, bool> {
        let mut acc: Option<YPoly<C>> = None;
        for p in polys {
            let p: YPoly<C> = p.iter().map(|c| self.reduce(c)).collect();
            acc = Some(match acc {
                None => tri!(self.normalize(p)),
                Some(a) => tri!(self.gcd(a, p)),
            });
        }
        match acc {
            // the zero polynomial vanishes for every y
            Some(g) => Step::Done(g.len() != 1),
            None => Step::Done(true),
        }
    }
}

/// Is there a root `α` of `modulus` and some `y` with `p(α, y) = 0` for
/// every `p` in `polys`? `modulus` must be nonzero.
pub fn common_affine_root<C: Scalar>(modulus: &UniPoly<C>, polys: &[YPoly<C>]) -> bool {
    assert!(!modulus.is_zero(), "modulus must be nonzero");
    let m = modulus.squarefree_part().expect("nonzero").monic();
    if m.degree() == Some(0) {
        return false;
    }
    match (Ring { m: &m }).attempt(polys) {
        Step::Done(found) => found,
        Step::Split(g) => {
            let g = g.monic();
            let other = m.div_exact(&g).expect("factor of modulus");
            common_affine_root(&g, polys) || common_affine_root(&other, polys)
        }
    }
}

/// Is there a root of `modulus` at which all `values` vanish?
pub fn common_root_with<C: Scalar>(modulus: &UniPoly<C>, values: &[UniPoly<C>]) -> bool {
    let g = values.iter().fold(modulus.clone(), |g, v| g.gcd(v));
    g.degree().is_some_and(|d| d >= 1) || (g.is_zero() && !modulus.is_zero())
}

/// Projective version: each form is a binary form in `(y0, y1)` given by its
/// coefficients in the `BinaryForm` order (`forms[k][i]` multiplies
/// `y0^(n-i) y1^i`), with coefficients in `Q[x]`. Decides whether some root
/// of `modulus` admits a common projective root of all forms.
pub fn common_projective_root<C: Scalar>(modulus: &UniPoly<C>, forms: &[Vec<UniPoly<C>>]) -> bool {
    // (1:0) is a root of every form iff all leading coefficients vanish
    let leads: Vec<UniPoly<C>> = forms.iter().map(|f| f[0].clone()).collect();
    if common_root_with(modulus, &leads) {
        return true;
    }
    let affine: Vec<YPoly<C>> = forms
        .iter()
        .map(|f| f.iter().rev().cloned().collect())
        .collect();
    common_affine_root(modulus, &affine)
}
