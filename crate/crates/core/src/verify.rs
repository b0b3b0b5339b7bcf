//! Direct measurements on a constructed scroll: degree, multiplicities along
//! the double lines, pinch counts, secancy of rulings with the double locus
//! and the general-position predicates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exactalg::{common_projective_root, format_poly, resultant, AlgError, RootCount, UniPoly};
use crate::report::{Check, Status};
use crate::scrollgen::{
    is_smooth_curve, pinch_divisor_r1, pinch_divisor_r2, BiForm, PinchDivisor, ScrollError,
    ScrollModel, S_VARS, U_VARS, X_VARS,
};
use crate::{Form, Poly, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("every sampled line was degenerate after {attempts} attempts (seed {seed})")]
    DegenerateLines { seed: u64, attempts: u32 },
    #[error("no usable rational fibre after {attempts} rejected candidates (seed {seed})")]
    NoRationalFibres { seed: u64, attempts: u32 },
    #[error("pinch divisor on {0} vanishes identically")]
    DegeneratePinch(&'static str),
    #[error(transparent)]
    Scroll(#[from] ScrollError),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Minimum number of rulings in the secancy check.
    pub secancy_rulings: usize,
    pub retry_budget: u32,
    pub coefficient_range: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            secancy_rulings: 10,
            retry_budget: 20,
            coefficient_range: 10,
        }
    }
}

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Value of `p` (in the `X` variables) at a point whose coordinates are
/// polynomials in `t`, reduced modulo `modulus` when given.
fn eval_at(p: &Poly, coords: &[UniPoly<Rational>; 4], modulus: Option<&UniPoly<Rational>>) -> UniPoly<Rational> {
    let p = p.with_context(&X_VARS).expect("polynomial in X0..X3");
    let reduce = |u: UniPoly<Rational>| match modulus {
        Some(m) => u.rem(m).expect("nonzero modulus"),
        None => u,
    };
    let mut powers: Vec<Vec<UniPoly<Rational>>> = coords.iter().map(|_| vec![UniPoly::one()]).collect();
    let mut acc = UniPoly::zero();
    for (e, c) in p.terms() {
        let mut term = UniPoly::constant(c.clone());
        for (i, &k) in e.iter().enumerate() {
            let k = k as usize;
            while powers[i].len() <= k {
                let next = reduce(&powers[i][powers[i].len() - 1] * &coords[i]);
                powers[i].push(next);
            }
            term = reduce(&term * &powers[i][k]);
        }
        acc = &acc + &term;
    }
    acc
}

/// All nonzero partial derivatives of the next order, each tagged with the
/// smallest variable index still allowed (so every multi-index appears once).
fn next_partials(level: &[(usize, Poly)], vars: &[&str]) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    for (start, p) in level {
        for (i, v) in vars.iter().enumerate().skip(*start) {
            let d = p.partial_derivative(v).expect("context");
            if !d.is_zero() {
                out.push((i, d));
            }
        }
    }
    out
}

/// Multiplicities of `p` at the points `coords(t)` for `t` running over the
/// roots of the squarefree `modulus`. Returns `(multiplicity, number of
/// roots)` pairs in increasing order; `cap` is reported for points where
/// every partial of order below `cap` vanishes.
pub fn multiplicity_distribution(
    p: &Poly,
    coords: &[UniPoly<Rational>; 4],
    modulus: &UniPoly<Rational>,
    cap: u32,
) -> Vec<(u32, usize)> {
    let p = p.with_context(&X_VARS).expect("polynomial in X0..X3");
    let mut rem = modulus.monic();
    let mut out = Vec::new();
    let mut level = vec![(0usize, p)];
    for k in 0..=cap {
        let deg = rem.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        if k == cap {
            out.push((cap, deg));
            break;
        }
        let g = level
            .iter()
            .fold(rem.clone(), |g, (_, d)| g.gcd(&eval_at(d, coords, Some(&rem))));
        let exact = deg - g.degree().unwrap_or(0);
        if exact > 0 {
            out.push((k, exact));
        }
        rem = g;
        level = next_partials(&level, &X_VARS);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoordLine {
    /// `X2 = X3 = 0`
    R1,
    /// `X0 = X1 = 0`
    R2,
}

impl CoordLine {
    fn transversal(self) -> [&'static str; 2] {
        match self {
            CoordLine::R1 => ["X2", "X3"],
            CoordLine::R2 => ["X0", "X1"],
        }
    }
}

/// Largest `m ≤ cap` such that every partial derivative of `p` of order
/// below `m` vanishes identically on the line.
///
/// Derivatives along the line preserve vanishing on it, so only the two
/// transversal directions are differentiated.
pub fn multiplicity_along_line(p: &Poly, line: CoordLine, cap: u32) -> u32 {
    let t = line.transversal();
    let on_line = |d: &Poly| {
        d.evaluate(&[(t[0], q(0)), (t[1], q(0))])
            .expect("context")
            .is_zero()
    };
    let p = p.with_context(&X_VARS).expect("polynomial in X0..X3");
    let mut level = vec![(0usize, p)];
    for k in 0..cap {
        if level.iter().any(|(_, d)| !on_line(d)) {
            return k;
        }
        level = next_partials(&level, &t);
    }
    cap
}

/// Degree of `p` read off its restriction to a random rational line
/// `A + tB`. Lines with `p(B) = 0` lose the top coefficient and are redrawn.
pub fn measure_degree(p: &Poly, seed: u64, retry_budget: u32, range: u32) -> Result<u32, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = i64::from(range.max(1));
    let top = p.total_degree().unwrap_or(0);
    for _ in 0..retry_budget {
        let coords: [UniPoly<Rational>; 4] = std::array::from_fn(|_| {
            let a = rng.random_range(-n..=n);
            let b = rng.random_range(-n..=n);
            UniPoly::from_i64(&[a, b])
        });
        let r = eval_at(p, &coords, None);
        let d = r.degree().unwrap_or(0) as u32;
        if !r.is_zero() && d == top {
            return Ok(d);
        }
    }
    Err(VerifyError::DegenerateLines {
        seed,
        attempts: retry_budget,
    })
}

pub fn implicit_degree(m: &ScrollModel, cfg: &VerifyConfig) -> Result<u32, VerifyError> {
    measure_degree(&m.p, cfg.seed, cfg.retry_budget, cfg.coefficient_range)
}

/// Projective roots of a pinch divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PinchCount {
    Counted(RootCount),
    Unramified,
    Degenerate,
}

impl PinchCount {
    pub fn of(d: &PinchDivisor) -> Self {
        match d {
            PinchDivisor::Unramified => PinchCount::Unramified,
            PinchDivisor::Degenerate => PinchCount::Degenerate,
            PinchDivisor::Form(f) => PinchCount::Counted(f.root_count().expect("rational form")),
        }
    }

    pub fn counts(&self) -> Option<RootCount> {
        match self {
            PinchCount::Counted(r) => Some(*r),
            PinchCount::Unramified => Some(RootCount {
                distinct: 0,
                with_multiplicity: 0,
            }),
            PinchCount::Degenerate => None,
        }
    }
}

pub fn pinch_counts(m: &ScrollModel) -> (PinchCount, PinchCount) {
    (PinchCount::of(&m.pinch_r1), PinchCount::of(&m.pinch_r2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultCount {
    pub multiplicity: u32,
    pub count: usize,
}

/// The rulings over one rational point `s*` of `R1`: the points
/// `u = (t : 1)` with `m(t) = F(s*; t, 1) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreSample {
    pub s: [String; 2],
    /// `m(t)` in the variable `t`.
    pub fibre: String,
    pub rulings: usize,
    /// Multiplicity of the surface where these rulings meet `R1`.
    pub r1_multiplicity: u32,
    /// Multiplicities where the rulings meet `R2`, grouped over the roots.
    pub r2_multiplicities: Vec<MultCount>,
    /// `(r1 - 1) + (r2 - 1)` per ruling, grouped.
    pub totals: Vec<MultCount>,
    /// The surface equation vanishes on each of these rulings.
    pub restriction_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecancyReport {
    pub expected_total: u32,
    pub rulings_checked: usize,
    pub rejected_fibres: u32,
    pub samples: Vec<FibreSample>,
    pub all_match: bool,
}

fn fibre_polynomial(f: &BiForm, s: &[Rational; 2]) -> UniPoly<Rational> {
    let form = f.u_form();
    let vals = [(S_VARS[0], s[0].clone()), (S_VARS[1], s[1].clone())];
    let cs: Vec<Rational> = form
        .coeffs()
        .iter()
        .map(|c| {
            c.evaluate(&vals)
                .expect("context")
                .constant_value()
                .expect("s assigned")
        })
        .collect();
    // coeffs[j] multiplies u0^(b-j) u1^j; u0 = t, u1 = 1
    UniPoly::from_coeffs(cs.into_iter().rev().collect())
}

fn restriction_vanishes(p: &Poly, s: &[Rational; 2], m: &UniPoly<Rational>) -> bool {
    // P(λ s*, μ (t, 1)), grouped by powers of λ and μ, each coefficient in t
    let images = [
        ("X0", Poly::var("lambda").scale(&s[0])),
        ("X1", Poly::var("lambda").scale(&s[1])),
        ("X2", &Poly::var("mu") * &Poly::var("t")),
        ("X3", Poly::var("mu")),
    ];
    let r = p
        .substitute(&images)
        .and_then(|r| r.with_context(&["lambda", "mu", "t"]))
        .expect("linear substitution");
    let mut groups: std::collections::BTreeMap<(u32, u32), Vec<Rational>> = Default::default();
    for (e, c) in r.terms() {
        let slot = groups.entry((e[0], e[1])).or_default();
        let k = e[2] as usize;
        if slot.len() <= k {
            slot.resize(k + 1, q(0));
        }
        slot[k] = c.clone();
    }
    groups
        .into_values()
        .all(|cs| UniPoly::from_coeffs(cs).rem(m).expect("nonzero").is_zero())
}

fn analyse_fibre(model: &ScrollModel, s: [Rational; 2], m: UniPoly<Rational>) -> FibreSample {
    let cap = model.degree();
    let b = model.b() as usize;
    let t_poly = UniPoly::from_i64(&[0, 1]);
    // R1 endpoint (s0* : s1* : 0 : 0) is rational: one point, modulus t
    let r1_coords = [
        UniPoly::constant(s[0].clone()),
        UniPoly::constant(s[1].clone()),
        UniPoly::zero(),
        UniPoly::zero(),
    ];
    let r1 = multiplicity_distribution(&model.p, &r1_coords, &t_poly, cap)[0].0;
    // R2 endpoints (0 : 0 : t : 1) over the roots of m
    let r2_coords = [UniPoly::zero(), UniPoly::zero(), t_poly.clone(), UniPoly::one()];
    let r2 = multiplicity_distribution(&model.p, &r2_coords, &m, cap);
    let totals = r2
        .iter()
        .map(|&(k, count)| MultCount {
            multiplicity: (r1 + k).saturating_sub(2),
            count,
        })
        .collect();
    let fibre_text = {
        let p = Poly::from_univariate(&m, "t");
        format_poly(&p)
    };
    FibreSample {
        s: [s[0].to_string(), s[1].to_string()],
        fibre: fibre_text,
        rulings: b,
        r1_multiplicity: r1,
        r2_multiplicities: r2
            .into_iter()
            .map(|(multiplicity, count)| MultCount { multiplicity, count })
            .collect(),
        totals,
        restriction_vanishes: restriction_vanishes(&model.p, &s, &m),
    }
}

/// Secancy of rulings with the double locus `R1 ∪ R2`.
///
/// Rational points of the curve need not exist, so whole fibres over random
/// rational `s* ∈ R1` are used: the `b` rulings over `s*` correspond to the
/// roots of `m(t) = F(s*; t, 1)`, which is required to have degree `b` and no
/// repeated roots. Each ruling meets the other sheets through its endpoint on
/// `R_i` with multiplicity `mult_i - 1`; the total should be `a + b - 2`.
pub fn secancy_check(model: &ScrollModel, cfg: &VerifyConfig) -> Result<SecancyReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(2);
    let n = i64::from(cfg.coefficient_range.max(1));
    let b = model.b() as usize;
    let mut chosen: Vec<([Rational; 2], UniPoly<Rational>)> = Vec::new();
    let mut rejected = 0u32;
    while chosen.len() * b < cfg.secancy_rulings.max(1) {
        if rejected >= cfg.retry_budget {
            return Err(VerifyError::NoRationalFibres {
                seed: cfg.seed,
                attempts: rejected,
            });
        }
        let (p0, p1) = (rng.random_range(-n..=n), rng.random_range(-n..=n));
        let s = normalize_point(p0, p1);
        let ok = s.as_ref().is_some_and(|s| {
            if chosen.iter().any(|(c, _)| c == s) {
                return false;
            }
            let m = fibre_polynomial(&model.curve, s);
            m.degree() == Some(b) && m.is_squarefree().unwrap_or(false)
        });
        match (ok, s) {
            (true, Some(s)) => {
                let m = fibre_polynomial(&model.curve, &s).monic();
                chosen.push((s, m));
            }
            _ => rejected += 1,
        }
    }
    let samples: Vec<FibreSample> = chosen
        .into_par_iter()
        .map(|(s, m)| analyse_fibre(model, s, m))
        .collect();
    let expected = model.degree() - 2;
    let all_match = samples.iter().all(|f| {
        f.restriction_vanishes
            && f.totals.iter().all(|t| t.multiplicity == expected)
            && f.totals.iter().map(|t| t.count).sum::<usize>() == f.rulings
    });
    Ok(SecancyReport {
        expected_total: expected,
        rulings_checked: samples.iter().map(|f| f.rulings).sum(),
        rejected_fibres: rejected,
        samples,
        all_match,
    })
}

/// Primitive integer representative with a positive leading entry.
fn normalize_point(p0: i64, p1: i64) -> Option<[Rational; 2]> {
    use num_integer::Integer;
    if p0 == 0 && p1 == 0 {
        return None;
    }
    let g = p0.gcd(&p1);
    let (mut a, mut b) = (p0 / g, p1 / g);
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
    }
    Some([q(a), q(b)])
}

/// Both discriminants squarefree; a projection of degree 1 counts as simply
/// ramified. A discriminant vanishing identically does not.
pub fn check_simple_ramification(f: &BiForm) -> bool {
    [pinch_divisor_r1(f), pinch_divisor_r2(f)].iter().all(|d| match d {
        PinchDivisor::Unramified => true,
        PinchDivisor::Degenerate => false,
        PinchDivisor::Form(form) => form.is_squarefree().expect("rational form"),
    })
}

fn divisors(f: &BiForm) -> Result<Option<(Form, Form)>, VerifyError> {
    let d1 = pinch_divisor_r1(f);
    let d2 = pinch_divisor_r2(f);
    match (&d1, &d2) {
        (PinchDivisor::Degenerate, _) => Err(VerifyError::DegeneratePinch("R1")),
        (_, PinchDivisor::Degenerate) => Err(VerifyError::DegeneratePinch("R2")),
        (PinchDivisor::Form(a), PinchDivisor::Form(b)) => Ok(Some((a.clone(), b.clone()))),
        _ => Ok(None),
    }
}

/// No point of the curve lies over a branch point of both projections.
///
/// Decided over the roots of `D1(x, 1)` (plus `s = (1:0)` when `D1` vanishes
/// there): at each such `s`, do `F(s; u)` and `D2(u)` share a projective root?
pub fn check_pinch_rulings_disjoint(f: &BiForm) -> Result<bool, VerifyError> {
    let Some((d1, d2)) = divisors(f)? else {
        return Ok(true);
    };
    let d2_coeffs: Vec<UniPoly<Rational>> = d2
        .scalar_coeffs()
        .expect("rational form")
        .into_iter()
        .map(UniPoly::constant)
        .collect();
    let form = f.u_form();
    // chart s1 = 1, x = s0
    let f_coeffs: Vec<UniPoly<Rational>> = form
        .coeffs()
        .iter()
        .map(|c| {
            c.evaluate(&[("s1", q(1))])
                .and_then(|p| p.to_univariate("s0"))
                .expect("polynomial in s")
        })
        .collect();
    let affine = d1.dehomogenize()?;
    if affine.degree().unwrap_or(0) > 0 {
        let m = affine.squarefree_part()?;
        if common_projective_root(&m, &[f_coeffs, d2_coeffs]) {
            return Ok(false);
        }
    }
    if d1.root_at_infinity_multiplicity() > 0 {
        // s = (1:0)
        let at_inf: Vec<Rational> = form
            .coeffs()
            .iter()
            .map(|c| {
                c.evaluate(&[("s0", q(1)), ("s1", q(0))])
                    .expect("context")
                    .constant_value()
                    .expect("s assigned")
            })
            .collect();
        if at_inf.iter().all(|c| *c == q(0)) {
            return Ok(false);
        }
        let fiber = Form::from_scalars(U_VARS[0], U_VARS[1], at_inf)?;
        if fiber.gcd_degree(&d2)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same predicate through `gcd(Res_s(F, D1), D2)`. Much slower for large
/// bidegrees; kept as an independent cross-check.
pub fn check_pinch_rulings_disjoint_by_resultant(f: &BiForm) -> Result<bool, VerifyError> {
    let Some((d1, d2)) = divisors(f)? else {
        return Ok(true);
    };
    let r = resultant(&f.s_form(), &d1)?;
    if r.is_zero() {
        return Ok(false);
    }
    let r = Form::from_poly(&r, U_VARS[0], U_VARS[1])?;
    Ok(r.gcd_degree(&d2)? == 0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub input_hash: String,
    pub a: u32,
    pub b: u32,
    pub genus: i64,
    pub smooth: bool,
    pub measured_degree: Option<u32>,
    pub mult_r1: u32,
    pub mult_r2: u32,
    pub expected_mult_r1: u32,
    pub expected_mult_r2: u32,
    pub pinch_count_r1: PinchCount,
    pub pinch_count_r2: PinchCount,
    pub secancy: Option<SecancyReport>,
    pub simple_ramification: bool,
    pub pinch_rulings_disjoint: Option<bool>,
    pub checks: Vec<Check>,
}

/// SHA-256 of the canonical text of `F`.
pub fn input_hash(f: &BiForm) -> String {
    hex::encode(Sha256::digest(format_poly(f.poly()).as_bytes()))
}

pub fn verify(model: &ScrollModel, cfg: &VerifyConfig) -> VerificationReport {
    let (a, b) = (model.a(), model.b());
    let d = a + b;
    let mut checks = Vec::new();

    let smooth = is_smooth_curve(&model.curve);
    checks.push(Check::expect("curve smooth", smooth, "F and its four partials have no common zero"));

    let measured = implicit_degree(model, cfg);
    checks.push(match &measured {
        Ok(m) => Check::expect("degree", *m == d, format!("measured {m}, expected a+b = {d}")),
        Err(e) => Check::new("degree", Status::Fail, e.to_string()),
    });

    let mult_r1 = multiplicity_along_line(&model.p, CoordLine::R1, d);
    let mult_r2 = multiplicity_along_line(&model.p, CoordLine::R2, d);
    let [e1, e2] = [&model.double_lines[0], &model.double_lines[1]].map(|l| l.expected_multiplicity);
    for (name, got, want) in [("multiplicity R1", mult_r1, e1), ("multiplicity R2", mult_r2, e2)] {
        checks.push(Check::soft(name, got == want, format!("measured {got}, expected {want}")));
    }

    let (p1, p2) = pinch_counts(model);
    for (name, pc, side, other) in [("pinch degree R1", p1, b, a), ("pinch degree R2", p2, a, b)] {
        let want = if side >= 2 { other * (2 * side - 2) } else { 0 };
        checks.push(match pc.counts() {
            Some(rc) => Check::expect(
                name,
                rc.with_multiplicity == want as usize,
                format!("{} roots ({} distinct), expected {want}", rc.with_multiplicity, rc.distinct),
            ),
            None => Check::new(name, Status::Fail, "discriminant vanishes identically"),
        });
        if side >= 2 {
            let g = model.genus;
            let rh = 2 * g - 2 + 2 * i64::from(side);
            checks.push(Check::expect(
                format!("{name} = ramification total"),
                i64::from(want) == rh,
                format!("{want} vs 2g-2+2*{side} = {rh}"),
            ));
        }
    }

    let secancy = secancy_check(model, cfg);
    checks.push(match &secancy {
        Ok(r) => Check::expect(
            "secancy (extended validity)",
            r.all_match,
            format!("{} rulings, each expected to meet R1 ∪ R2 with total {}", r.rulings_checked, r.expected_total),
        ),
        Err(e) => Check::new("secancy (extended validity)", Status::Fail, e.to_string()),
    });

    let simple = check_simple_ramification(&model.curve);
    checks.push(Check::soft("simple ramification", simple, "both pinch divisors squarefree"));
    let disjoint = check_pinch_rulings_disjoint(&model.curve);
    checks.push(match &disjoint {
        Ok(v) => Check::soft("pinch rulings disjoint", *v, "no ruling joins two branch points"),
        Err(e) => Check::new("pinch rulings disjoint", Status::Fail, e.to_string()),
    });
    checks.push(Check::new(
        "rulings through pinch points not tangent to the double curve",
        Status::NotChecked,
        "needs the double curve lifted to the normalization",
    ));

    VerificationReport {
        seed: cfg.seed,
        input_hash: input_hash(&model.curve),
        a,
        b,
        genus: model.genus,
        smooth,
        measured_degree: measured.ok(),
        mult_r1,
        mult_r2,
        expected_mult_r1: e1,
        expected_mult_r2: e2,
        pinch_count_r1: p1,
        pinch_count_r2: p2,
        secancy: secancy.ok(),
        simple_ramification: simple,
        pinch_rulings_disjoint: disjoint.ok(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;
    use crate::scrollgen::{construct, implicitize, GenConfig};

    fn bf(text: &str) -> BiForm {
        BiForm::new(&parse_poly(text, None).unwrap()).unwrap()
    }

    fn explicit() -> ScrollModel {
        implicitize(&bf("s0^2 * u0^2 + s1^2 * u0^2 + s0^2 * u1^2 + 2 * s1^2 * u1^2"))
    }

    /// Multiplicity along a coordinate line read directly off the exponents.
    fn exponent_oracle(p: &Poly, i: usize, j: usize) -> u32 {
        let p = p.with_context(&X_VARS).unwrap();
        p.terms().keys().map(|e| e[i] + e[j]).min().unwrap_or(0)
    }

    #[test]
    fn degree_examples() {
        let cfg = VerifyConfig::default();
        assert_eq!(implicit_degree(&explicit(), &cfg), Ok(4));
        let m = construct(3, 2, 3, &GenConfig::default()).unwrap();
        assert_eq!(implicit_degree(&m, &cfg), Ok(5));
        assert_eq!(measure_degree(&Poly::var("X0"), 5, 20, 10), Ok(1));
        assert!(matches!(
            measure_degree(&Poly::var("X0"), 5, 0, 10),
            Err(VerifyError::DegenerateLines { .. })
        ));
    }

    #[test]
    fn multiplicity_examples() {
        let m = explicit();
        assert_eq!(multiplicity_along_line(&m.p, CoordLine::R1, 4), 2);
        assert_eq!(multiplicity_along_line(&m.p, CoordLine::R2, 4), 2);
        let m = construct(3, 2, 3, &GenConfig::default()).unwrap();
        // a = 3 sheets of s-points meet along R2, b = 2 along R1
        assert_eq!(multiplicity_along_line(&m.p, CoordLine::R1, 5), 2);
        assert_eq!(multiplicity_along_line(&m.p, CoordLine::R2, 5), 3);
        let plane_pair = parse_poly("X0 * X1", None).unwrap();
        assert_eq!(multiplicity_along_line(&plane_pair, CoordLine::R1, 2), 0);
        // cap
        assert_eq!(multiplicity_along_line(&m.p, CoordLine::R2, 1), 1);
    }

    #[test]
    fn multiplicity_matches_exponent_oracle() {
        for text in [
            "X0^3 * X2 + X1 * X2^2 * X3",
            "X2^2 * X3^2 + X0 * X2^3",
            "X0^2 * X1^2 + X2 * X0^3",
            "X2^4",
        ] {
            let p = parse_poly(text, None).unwrap();
            assert_eq!(multiplicity_along_line(&p, CoordLine::R1, 9), exponent_oracle(&p, 2, 3), "{text}");
            assert_eq!(multiplicity_along_line(&p, CoordLine::R2, 9), exponent_oracle(&p, 0, 1), "{text}");
        }
    }

    #[test]
    fn pinch_examples() {
        let (r1, r2) = pinch_counts(&explicit());
        let four = RootCount { distinct: 4, with_multiplicity: 4 };
        assert_eq!(r1, PinchCount::Counted(four));
        assert_eq!(r2.counts().unwrap().with_multiplicity, 4);
        let degenerate = implicitize(&bf("s0^2 * u0^2"));
        assert_eq!(pinch_counts(&degenerate).0, PinchCount::Degenerate);
    }

    #[test]
    fn secancy_examples() {
        let cfg = VerifyConfig::default();
        let r = secancy_check(&explicit(), &cfg).unwrap();
        assert!(r.all_match);
        assert_eq!(r.expected_total, 2);
        assert!(r.rulings_checked >= 10);
        for f in &r.samples {
            assert_eq!(f.r1_multiplicity, 2);
            assert_eq!(f.r2_multiplicities, vec![MultCount { multiplicity: 2, count: 2 }]);
        }
        let m = construct(3, 2, 3, &GenConfig::default()).unwrap();
        let r = secancy_check(&m, &cfg).unwrap();
        assert!(r.all_match);
        assert_eq!(r.expected_total, 3);
        let quadric = implicitize(&bf("s0 * u0 + s1 * u1"));
        let r = secancy_check(&quadric, &cfg).unwrap();
        assert!(r.all_match);
        assert_eq!(r.expected_total, 0);
        let degenerate = implicitize(&bf("s0^2 * u0^2"));
        assert!(matches!(
            secancy_check(&degenerate, &cfg),
            Err(VerifyError::NoRationalFibres { .. })
        ));
    }

    #[test]
    fn secancy_sees_algebraic_rulings() {
        // m(t) has irrational roots for the explicit curve; splitting must
        // still account for all rulings
        let cfg = VerifyConfig { secancy_rulings: 4, ..Default::default() };
        let r = secancy_check(&explicit(), &cfg).unwrap();
        for f in &r.samples {
            assert_eq!(f.totals.iter().map(|t| t.count).sum::<usize>(), 2);
            assert!(f.restriction_vanishes);
        }
    }

    #[test]
    fn ramification_examples() {
        assert!(check_simple_ramification(&explicit().curve));
        let sq = bf("s0^2 * u0^2 - 2 * s0 * s1 * u0 * u1 + s1^2 * u1^2");
        assert!(!check_simple_ramification(&sq));
        let g = construct(2, 2, 1, &GenConfig::default()).unwrap();
        assert!(check_simple_ramification(&g.curve));
    }

    #[test]
    fn disjointness_examples() {
        let g = construct(2, 2, 1, &GenConfig::default()).unwrap();
        assert_eq!(check_pinch_rulings_disjoint(&g.curve), Ok(true));
        let f21 = construct(2, 1, 1, &GenConfig::default()).unwrap();
        assert_eq!(check_pinch_rulings_disjoint(&f21.curve), Ok(true));
        let degenerate = bf("s0^2 * u0^2");
        assert_eq!(
            check_pinch_rulings_disjoint(&degenerate),
            Err(VerifyError::DegeneratePinch("R1"))
        );
    }

    #[test]
    fn symmetric_curve_outcome() {
        // recorded outcome for F(s, u) = F(u, s)
        let sym = bf("s0^2 * u0^2 + s1^2 * u1^2 + s0 * s1 * u0 * u1");
        let fast = check_pinch_rulings_disjoint(&sym).unwrap();
        let slow = check_pinch_rulings_disjoint_by_resultant(&sym).unwrap();
        assert_eq!(fast, slow);
        // the curve has a node at ((0:1), (1:0)); the node lies over a branch
        // point of both projections
        assert!(!is_smooth_curve(&sym));
        assert!(!fast);
    }

    #[test]
    fn disjointness_routes_agree() {
        let cfg = GenConfig::default();
        for (a, b) in [(2, 2), (3, 2), (2, 3)] {
            for seed in 1..=4 {
                let m = construct(a, b, seed, &cfg).unwrap();
                assert_eq!(
                    check_pinch_rulings_disjoint(&m.curve).unwrap(),
                    check_pinch_rulings_disjoint_by_resultant(&m.curve).unwrap(),
                    "({a}, {b}) seed {seed}"
                );
            }
        }
        // over s = (1:0) the fibre is u1^2, a pinch of R1 at u = (1:0); over
        // u = (1:0) the fibre is s0^2 s1, so u = (1:0) is a pinch of R2 too
        let shared = bf("s0^3 * u1^2 + s0^2 * s1 * u0^2 + s1^3 * u0 * u1 + s1^3 * u1^2");
        assert_eq!(check_pinch_rulings_disjoint(&shared), Ok(false));
        assert_eq!(check_pinch_rulings_disjoint_by_resultant(&shared), Ok(false));
    }

    #[test]
    fn report_for_explicit_curve() {
        let r = verify(&explicit(), &VerifyConfig::default());
        assert_eq!(r.measured_degree, Some(4));
        assert_eq!((r.mult_r1, r.mult_r2), (2, 2));
        assert!(r.simple_ramification && r.smooth);
        assert_eq!(r.input_hash.len(), 64);
        assert!(!crate::report::any_failed(&r.checks), "{:?}", r.checks);
        assert!(r.checks.iter().any(|c| c.status == Status::NotChecked));
        let again = verify(&explicit(), &VerifyConfig::default());
        assert_eq!(r, again);
    }

    #[test]
    fn report_for_degenerate_curve_fails() {
        let r = verify(&implicitize(&bf("s0^2 * u0^2")), &VerifyConfig::default());
        assert!(crate::report::any_failed(&r.checks));
    }
}
