use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::univariate::UniPoly;
use super::{AlgError, Scalar};

/// Exponent vector, one entry per context variable.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over a field `C`, with named variables.
///
/// The variable list is the polynomial's *context*. Binary operations unify
/// contexts by name: the result carries the left operand's variables followed
/// by any new variables of the right operand, in order of appearance. Terms
/// are kept in a `BTreeMap` keyed by exponent vector, so iteration order (and
/// therefore printing and serialization) is deterministic. Zero coefficients
/// are never stored.
#[derive(Clone, Debug)]
pub struct MultiPoly<C> {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, C>,
}

fn check_distinct(vars: &[String]) -> Result<(), AlgError> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(AlgError::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

/// Merge two variable lists by name, keeping first-appearance order.
pub fn unify_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

impl<C: Scalar> MultiPoly<C> {
    /// The zero polynomial in the empty context.
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], C::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Zero polynomial over an explicit context.
    pub fn zero_in<S: AsRef<str>>(vars: &[S]) -> Result<Self, AlgError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        check_distinct(&vars)?;
        Ok(MultiPoly {
            vars,
            terms: BTreeMap::new(),
        })
    }

    /// Build from explicit terms. Repeated exponent vectors are summed.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self, AlgError>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Exponents, C)>,
    {
        let mut p = Self::zero_in(vars)?;
        let n = p.vars.len();
        for (exp, c) in terms {
            if exp.len() != n {
                return Err(AlgError::Arity {
                    expected: n,
                    found: exp.len(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// `c * prod(var_i ^ exp_i)` over the given context.
    pub fn monomial<S: AsRef<str>>(vars: &[S], exp: Exponents, c: C) -> Result<Self, AlgError> {
        Self::from_terms(vars, [(exp, c)])
    }

    fn add_term(&mut self, exp: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, C> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Re-express in the context `vars`. Every used variable must be present.
    pub fn with_context<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self, AlgError> {
        let target: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        check_distinct(&target)?;
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match target.iter().position(|t| t == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] > 0) {
                        return Err(AlgError::UnknownVariable(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in exp.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = k;
                }
            }
            terms.insert(e, c.clone());
        }
        Ok(MultiPoly {
            vars: target,
            terms,
        })
    }

    /// Drop variables that do not occur.
    pub fn compact(&self) -> Self {
        let used = self.used_vars();
        self.with_context(&used).expect("used variables are in context")
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = unify_vars(&self.vars, &other.vars);
        (
            self.with_context(&vars).expect("superset context"),
            other.with_context(&vars).expect("superset context"),
        )
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Result<Option<u32>, AlgError> {
        let i = self
            .var_index(var)
            .ok_or_else(|| AlgError::UnknownVariable(var.to_string()))?;
        Ok(self.terms.keys().map(|e| e[i]).max())
    }

    /// Common degree of all terms in the given subset of variables, if the
    /// polynomial is nonzero and homogeneous in that subset. Variables absent
    /// from the context count with exponent zero.
    pub fn homogeneous_degree_in(&self, vars: &[&str]) -> Option<u32> {
        let idx: Vec<usize> = vars.iter().filter_map(|v| self.var_index(v)).collect();
        let mut degs = self.terms.keys().map(|e| idx.iter().map(|&i| e[i]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        let all: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        self.is_zero() || self.homogeneous_degree_in(&all).is_some()
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unified(other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn checked_sub(&self, other: &Self) -> Self {
        self.checked_add(&other.neg_ref())
    }

    /// Product, failing if an exponent overflows `u32`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgError> {
        let (a, b) = self.unified(other);
        let mut out = MultiPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea
                    .iter()
                    .zip(eb)
                    .map(|(x, y)| x.checked_add(*y).ok_or(AlgError::Capacity))
                    .collect::<Result<Vec<_>, _>>()?;
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring.
    pub fn checked_pow(&self, mut k: u64) -> Result<Self, AlgError> {
        let mut result = Self::one().with_context(&self.vars)?;
        if k == 0 {
            return Ok(result);
        }
        if let Some(max) = self.terms.keys().flat_map(|e| e.iter()).max() {
            if u64::from(*max).checked_mul(k).is_none_or(|v| v > u64::from(u32::MAX)) {
                return Err(AlgError::Capacity);
            }
        }
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, k: u64) -> Self {
        self.checked_pow(k).expect("exponent overflow")
    }

    fn neg_ref(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to a context variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Self, AlgError> {
        let i = self
            .var_index(var)
            .ok_or_else(|| AlgError::UnknownVariable(var.to_string()))?;
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.clone() * C::from_i64(i64::from(e[i])));
        }
        Ok(out)
    }

    /// Replace variables by polynomials. Unassigned variables stay as they are;
    /// the result lives in the union of the remaining and substituted contexts.
    pub fn substitute(&self, assignment: &[(&str, MultiPoly<C>)]) -> Result<Self, AlgError> {
        // images[i] = what variable i maps to
        let mut images: Vec<MultiPoly<C>> = self.vars.iter().map(|v| Self::var(v)).collect();
        for (name, image) in assignment {
            if let Some(i) = self.var_index(name) {
                images[i] = image.clone();
            }
        }
        let mut ctx: Vec<String> = Vec::new();
        for (i, img) in images.iter().enumerate() {
            let occurs = self.terms.keys().any(|e| e[i] > 0);
            if occurs {
                ctx = unify_vars(&ctx, img.vars());
            }
        }
        let images: Vec<MultiPoly<C>> = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                if self.terms.keys().any(|e| e[i] > 0) {
                    img.with_context(&ctx)
                } else {
                    Ok(Self::zero_in(&ctx).expect("distinct"))
                }
            })
            .collect::<Result<_, _>>()?;

        // power cache per variable
        let mut powers: Vec<Vec<MultiPoly<C>>> = images
            .iter()
            .map(|_| vec![Self::one().with_context(&ctx).expect("empty context")])
            .collect();
        let mut out = Self::zero_in(&ctx)?;
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone()).with_context(&ctx)?;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("nonempty").checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.checked_mul(&powers[i][k as usize])?;
            }
            out = out.checked_add(&term);
        }
        Ok(out)
    }

    /// Substitute rational constants for some variables.
    pub fn evaluate(&self, values: &[(&str, C)]) -> Result<Self, AlgError> {
        let assignment: Vec<(&str, MultiPoly<C>)> = values
            .iter()
            .map(|(v, c)| (*v, Self::constant(c.clone())))
            .collect();
        self.substitute(&assignment)
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    /// The coefficients keep the full context (with `var` exponent zero).
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<Self>, AlgError> {
        let i = self
            .var_index(var)
            .ok_or_else(|| AlgError::UnknownVariable(var.to_string()))?;
        let deg = self.terms.keys().map(|e| e[i]).max().unwrap_or(0) as usize;
        let mut out: Vec<Self> = (0..=deg)
            .map(|_| MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            })
            .collect();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i] as usize;
            e2[i] = 0;
            out[k].add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Leading term in lexicographic order of the context.
    pub fn leading_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, AlgError> {
        if divisor.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if let Some(c) = divisor.constant_value() {
            let inv = C::one() / c;
            return Ok(self.scale(&inv));
        }
        let (mut rem, d) = self.unified(divisor);
        let (d_exp, d_coef) = {
            let (e, c) = d.leading_term().expect("nonzero");
            (e.clone(), c.clone())
        };
        let mut quot = MultiPoly {
            vars: rem.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((r_exp, r_coef)) = rem.leading_term() {
            if r_exp.iter().zip(&d_exp).any(|(r, q)| r < q) {
                return Err(AlgError::InexactDivision);
            }
            let e: Exponents = r_exp.iter().zip(&d_exp).map(|(r, q)| r - q).collect();
            let c = r_coef.clone() / d_coef.clone();
            let t = MultiPoly {
                vars: rem.vars.clone(),
                terms: std::iter::once((e.clone(), c.clone())).collect(),
            };
            quot.add_term(e, c);
            rem = rem.checked_sub(&t.checked_mul(&d)?);
        }
        Ok(quot)
    }

    /// View as a dense univariate polynomial in `var`; all other variables
    /// must be absent.
    pub fn to_univariate(&self, var: &str) -> Result<UniPoly<C>, AlgError> {
        let i = self.var_index(var);
        let mut coeffs: Vec<C> = Vec::new();
        for (e, c) in &self.terms {
            let k = match i {
                Some(i) => {
                    if e.iter().enumerate().any(|(j, &x)| j != i && x > 0) {
                        return Err(AlgError::NotUnivariate);
                    }
                    e[i] as usize
                }
                None => {
                    if e.iter().any(|&x| x > 0) {
                        return Err(AlgError::NotUnivariate);
                    }
                    0
                }
            };
            if coeffs.len() <= k {
                coeffs.resize(k + 1, C::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    pub fn from_univariate(u: &UniPoly<C>, var: &str) -> Self {
        let mut p = MultiPoly {
            vars: vec![var.to_string()],
            terms: BTreeMap::new(),
        };
        for (k, c) in u.coeffs().iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p
    }
}

impl<C: Scalar> PartialEq for MultiPoly<C> {
    /// Equality after unifying contexts by name.
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.unified(other);
        a.terms == b.terms
    }
}

impl<'a, C: Scalar> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.checked_add(rhs)
    }
}

impl<'a, C: Scalar> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.checked_sub(rhs)
    }
}

impl<'a, C: Scalar> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    /// Panics on exponent overflow; use [`MultiPoly::checked_mul`] to recover.
    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl<C: Scalar> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self.checked_add(&rhs)
    }
}

impl<C: Scalar> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self.checked_sub(&rhs)
    }
}

impl<C: Scalar> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self.checked_mul(&rhs).expect("exponent overflow")
    }
}

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.neg_ref()
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.neg_ref()
    }
}
