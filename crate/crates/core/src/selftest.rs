//! The acceptance suite as a library routine, so the command-line front end
//! and the test harness run exactly the same checks.
//!
//! Report content is deterministic for a fixed configuration; wall-clock
//! timings are kept in a separate section.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    arithmetic_genus, cor_bound_threshold, eta3, linear_system_dim, rho_double_lower, rho_double_recursion,
    threefold_genus_bound,
};
use crate::combin::binomial;
use crate::exactalg::{discriminant, parse_poly, resultant};
use crate::invariants::{bonnesen, max_genus_with_triple_points};
use crate::report::{Check, Status};
use crate::scrollgen::{construct, curve_genus, implicitize, BiForm, GenConfig};
use crate::verify::{
    implicit_degree, multiplicity_along_line, pinch_counts, secancy_check, CoordLine, VerifyConfig,
};
use crate::{Form, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Seeds per bidegree in the construction sweep.
    pub sweep_seeds: u32,
    /// Largest `a` and `b` in the construction sweep.
    pub max_bidegree: u32,
    /// Random cases per algebraic property family.
    pub property_cases: u32,
    pub retry_budget: u32,
    pub coefficient_range: u32,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 1,
            sweep_seeds: 20,
            max_bidegree: 4,
            property_cases: 1000,
            retry_budget: 20,
            coefficient_range: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionTiming {
    pub id: u32,
    pub elapsed_ms: f64,
    pub limit_ms: Option<u64>,
    pub within_limit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub config: SelftestConfig,
    pub criteria: Vec<CriterionResult>,
    pub timing: Vec<CriterionTiming>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.status == Status::Pass)
    }

    /// The report with the timing section removed.
    pub fn content(&self) -> (SelftestConfig, Vec<CriterionResult>) {
        (self.config, self.criteria.clone())
    }
}

pub const CRITERIA: [(u32, &str, Option<u64>); 7] = [
    (1, "bonnesen table", Some(1)),
    (2, "explicit quartic scroll", Some(1_000)),
    (3, "randomized construction sweep", Some(60_000)),
    (4, "bounds reproduction", None),
    (5, "identity suites", None),
    (6, "exact algebra properties", Some(30_000)),
    (7, "determinism", None),
];

fn finish(id: u32, checks: Vec<Check>) -> CriterionResult {
    let (_, name, _) = CRITERIA[id as usize - 1];
    let status = if checks.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    CriterionResult {
        id,
        name: name.to_string(),
        status,
        checks,
    }
}

/// Run one of criteria 1 to 6.
pub fn run_criterion(id: u32, cfg: &SelftestConfig) -> (CriterionResult, Duration) {
    let start = Instant::now();
    let checks = match id {
        1 => bonnesen_table(),
        2 => explicit_quartic(cfg),
        3 => construction_sweep(cfg),
        4 => bounds_reproduction(),
        5 => identity_suites(),
        6 => algebra_properties(cfg),
        _ => panic!("criterion {id} is not a standalone check"),
    };
    let elapsed = start.elapsed();
    (finish(id, checks), elapsed)
}

fn timing(id: u32, elapsed: Duration) -> CriterionTiming {
    let limit = CRITERIA[id as usize - 1].2;
    CriterionTiming {
        id,
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
        limit_ms: limit,
        within_limit: limit.is_none_or(|l| elapsed <= Duration::from_millis(l)),
    }
}

/// Criteria 1 to 6, then criterion 7: a second pass over the same content
/// must serialize identically.
pub fn run_selftest(cfg: &SelftestConfig) -> SelftestReport {
    let mut criteria = Vec::new();
    let mut timings = Vec::new();
    for id in 1..=6 {
        let (r, t) = run_criterion(id, cfg);
        criteria.push(r);
        timings.push(timing(id, t));
    }
    let start = Instant::now();
    let again: Vec<CriterionResult> = (1..=6).map(|id| run_criterion(id, cfg).0).collect();
    let first = serde_json::to_string(&criteria).expect("serializable");
    let second = serde_json::to_string(&again).expect("serializable");
    criteria.push(finish(
        7,
        vec![Check::expect(
            "repeat run identical",
            first == second,
            format!("{} bytes of report content compared", first.len()),
        )],
    ));
    timings.push(timing(7, start.elapsed()));
    SelftestReport {
        config: *cfg,
        criteria,
        timing: timings,
    }
}

fn eq_check<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, got: T, want: T) -> Check {
    let ok = got == want;
    Check::expect(name, ok, format!("got {got:?}, expected {want:?}"))
}

fn bonnesen_table() -> Vec<Check> {
    let mut out = Vec::new();
    for ((d, g), want) in [
        ((5, 1), (5, 1, 0, 10, Some(6))),
        ((6, 2), (8, 5, 0, 16, Some(17))),
        ((7, 2), (13, 10, 4, 18, None)),
    ] {
        let name = format!("invariants at (d, g) = ({d}, {g})");
        out.push(match bonnesen(d, g) {
            Ok(s) => {
                let got = (s.delta, s.gamma, s.t, s.p, want.4.map(|_| s.gamma_tilde));
                eq_check(name, got, want)
            }
            Err(e) => Check::new(name, Status::Fail, e.to_string()),
        });
    }
    out
}

const EXPLICIT_F: &str = "s0^2*u0^2 + s1^2*u0^2 + s0^2*u1^2 + 2*s1^2*u1^2";

fn explicit_quartic(cfg: &SelftestConfig) -> Vec<Check> {
    let f = BiForm::new(&parse_poly(EXPLICIT_F, None).expect("valid text")).expect("bidegree (2,2)");
    let model = implicitize(&f);
    let vcfg = VerifyConfig {
        seed: cfg.seed,
        secancy_rulings: 10,
        retry_budget: cfg.retry_budget,
        coefficient_range: cfg.coefficient_range,
    };
    let mut out = vec![eq_check("implicit degree", implicit_degree(&model, &vcfg).ok(), Some(4))];
    out.push(eq_check(
        "multiplicities along R1, R2",
        (
            multiplicity_along_line(&model.p, CoordLine::R1, 4),
            multiplicity_along_line(&model.p, CoordLine::R2, 4),
        ),
        (2, 2),
    ));
    let (p1, p2) = pinch_counts(&model);
    let counts = (
        p1.counts().map(|c| (c.distinct, c.with_multiplicity)),
        p2.counts().map(|c| (c.distinct, c.with_multiplicity)),
    );
    out.push(eq_check("pinch counts per line", counts, (Some((4, 4)), Some((4, 4)))));
    let p = bonnesen(4, 1).map(|s| s.p).ok();
    out.push(eq_check("pinch total against the formula at (4, 1)", p, Some(8)));
    out.push(match secancy_check(&model, &vcfg) {
        Ok(r) => Check::expect(
            "secancy total 2 on 10 rulings",
            r.all_match && r.expected_total == 2 && r.rulings_checked >= 10,
            format!("{} rulings, total {}", r.rulings_checked, r.expected_total),
        ),
        Err(e) => Check::new("secancy total 2 on 10 rulings", Status::Fail, e.to_string()),
    });
    out.push(eq_check(
        "simple ramification",
        crate::verify::check_simple_ramification(&f),
        true,
    ));
    out
}

/// One failure description per `(a, b, seed)` that misbehaves.
fn sweep_case(a: u32, b: u32, seed: u64, cfg: &SelftestConfig) -> Vec<String> {
    let gcfg = GenConfig {
        coefficient_range: cfg.coefficient_range,
        retry_budget: cfg.retry_budget,
    };
    let tag = format!("({a},{b}) seed {seed}");
    let model = match construct(a, b, seed, &gcfg) {
        Ok(m) => m,
        Err(e) => return vec![format!("{tag}: {e}")],
    };
    let vcfg = VerifyConfig {
        seed,
        secancy_rulings: 1,
        retry_budget: cfg.retry_budget,
        coefficient_range: cfg.coefficient_range,
    };
    let mut bad = Vec::new();
    let d = a + b;
    match implicit_degree(&model, &vcfg) {
        Ok(m) if m == d && model.p.total_degree() == Some(d) => {}
        Ok(m) => bad.push(format!("{tag}: degree {m}")),
        Err(e) => bad.push(format!("{tag}: {e}")),
    }
    let want = [a * (2 * b - 2), b * (2 * a - 2)];
    let got = [model.pinch_r1.degree(), model.pinch_r2.degree()];
    for i in 0..2 {
        if got[i] != Some(want[i] as usize) {
            bad.push(format!("{tag}: pinch divisor {} degree {:?}, expected {}", i + 1, got[i], want[i]));
        }
    }
    let g = curve_genus(a.into(), b.into()).expect("valid bidegree");
    if g != i64::from(a * b) - i64::from(a + b) + 1
        || i64::from(want[0]) != 2 * g - 2 + 2 * i64::from(b)
        || i64::from(want[1]) != 2 * g - 2 + 2 * i64::from(a)
    {
        bad.push(format!("{tag}: ramification identity fails with g = {g}"));
    }
    match secancy_check(&model, &vcfg) {
        Ok(r) if r.all_match && r.expected_total == d - 2 => {}
        Ok(r) => bad.push(format!("{tag}: secancy mismatch over {} rulings", r.rulings_checked)),
        Err(e) => bad.push(format!("{tag}: {e}")),
    }
    bad
}

fn construction_sweep(cfg: &SelftestConfig) -> Vec<Check> {
    let cases: Vec<(u32, u32, u64)> = (2..=cfg.max_bidegree)
        .flat_map(|a| (2..=cfg.max_bidegree).map(move |b| (a, b)))
        .flat_map(|(a, b)| (1..=u64::from(cfg.sweep_seeds)).map(move |s| (a, b, s)))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(a, b, s)| sweep_case(a, b, cfg.seed.wrapping_add(s - 1), cfg))
        .collect::<Vec<_>>()
        .concat();
    vec![Check::expect(
        "degree, pinch degrees, ramification and secancy",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} constructions", cases.len())
        } else {
            failures.join("; ")
        },
    )]
}

fn bounds_reproduction() -> Vec<Check> {
    let val = |r: Result<crate::bounds::BoundReport, _>| r.ok().map(|r| r.value.to_string());
    let s = |v: i64| Some(v.to_string());
    let mut out = vec![
        eq_check("eta3(4)", val(eta3(4)), s(0)),
        eq_check("eta3(5)", val(eta3(5)), s(3)),
    ];
    match cor_bound_threshold(6) {
        Ok(r) => {
            let stated = r.related("stated_max_genus").map(ToString::to_string);
            let strict = r.related("strict_max_genus").map(ToString::to_string);
            out.push(eq_check("threshold(6): stated and strict genus", (stated, strict), (s(5), s(4))));
        }
        Err(e) => out.push(Check::new("threshold(6)", Status::Fail, e.to_string())),
    }
    out.push(eq_check("threshold(8) = (8-4)^2", val(cor_bound_threshold(8)), s(16)));
    out.push(eq_check("threshold(9) = (9-3)(2*9-9)/2", val(cor_bound_threshold(9)), s(27)));
    out.push(eq_check("rho_double_lower(5)", val(rho_double_lower(5)), s(1)));
    let bad: Vec<i64> = (8..=20)
        .filter(|&d| threefold_genus_bound(d).map(|r| r.value) != Ok(binomial(d - 1, 3)))
        .collect();
    out.push(Check::expect(
        "threefold bound = C(d-1,3) for 8 <= d <= 20",
        bad.is_empty(),
        format!("counterexamples: {bad:?}"),
    ));
    out
}

fn identity_suites() -> Vec<Check> {
    let mut pairs = Vec::new();
    for d in 5..=30i64 {
        for g in 0..=max_genus_with_triple_points(d) {
            pairs.push((d, g));
        }
    }
    let sets: Vec<_> = pairs.iter().map(|&(d, g)| bonnesen(d, g).expect("d >= 5")).collect();
    let gt_bad: Vec<_> = sets
        .iter()
        .filter(|s| s.gamma_tilde != 2 * (s.gamma + s.g) + s.d - 3)
        .map(|s| (s.d, s.g))
        .collect();
    let mut equiv_bad = Vec::new();
    for d in 5..=30i64 {
        for g in 0..=2 * max_genus_with_triple_points(d) + 2 {
            let s = bonnesen(d, g).expect("d >= 5");
            if (s.t >= 0) != (6 * g <= (d - 2) * (d - 3)) {
                equiv_bad.push((d, g));
            }
        }
    }
    let exceptions: Vec<(i64, i64)> = sets
        .iter()
        .filter(|s| s.g >= 1 && s.gamma <= 3 * s.g)
        .map(|s| (s.g, s.d))
        .collect();
    let rho_bad: Vec<i64> = (5..=50).filter(|&d| rho_double_recursion(d) != binomial(d - 1, 4)).collect();
    let n_bad: Vec<i64> = (3..=50)
        .filter(|&d| {
            linear_system_dim(d) - linear_system_dim(d - 2) - linear_system_dim(2) - 1
                != arithmetic_genus(d, 2) + 4 * d - 10
        })
        .collect();
    vec![
        Check::expect(
            "gamma_tilde = 2(gamma+g)+d-3 over the sweep",
            gt_bad.is_empty(),
            format!("{} pairs, counterexamples {gt_bad:?}", sets.len()),
        ),
        Check::expect(
            "t >= 0 iff 6g <= (d-2)(d-3)",
            equiv_bad.is_empty(),
            format!("counterexamples {equiv_bad:?}"),
        ),
        Check::expect(
            "unique (g, d) with g >= 1 and gamma <= 3g is (2, 6)",
            exceptions == [(2, 6)],
            format!("found {exceptions:?}"),
        ),
        Check::expect(
            "rho recursion = C(d-1,4) for 5 <= d <= 50",
            rho_bad.is_empty(),
            format!("counterexamples {rho_bad:?}"),
        ),
        Check::expect(
            "N_d - N_(d-2) - N_2 - 1 = g_(d,2) + 4d - 10 for 3 <= d <= 50",
            n_bad.is_empty(),
            format!("counterexamples {n_bad:?}"),
        ),
    ]
}

fn rat(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(-5..=5).into(), rng.random_range(1..=3).into())
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    const VARS: [&str; 3] = ["x", "y", "z"];
    let terms: Vec<(Vec<u32>, Rational)> = (0..rng.random_range(0..=4))
        .map(|_| ((0..3).map(|_| rng.random_range(0..=2)).collect(), rat(rng)))
        .collect();
    Poly::from_terms(&VARS, terms).expect("three distinct variables")
}

fn random_form(rng: &mut ChaCha8Rng, deg: usize) -> Form {
    loop {
        let c: Vec<Rational> = (0..=deg).map(|_| rat(rng)).collect();
        if let Ok(f) = Form::from_scalars("v0", "v1", c) {
            return f;
        }
    }
}

fn form_mul(f: &Form, g: &Form) -> Form {
    Form::from_poly(&(&f.to_poly() * &g.to_poly()), "v0", "v1").expect("product of nonzero forms")
}

fn ring_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b, c) = (random_poly(rng), random_poly(rng), random_poly(rng));
    let one = Poly::one();
    let zero = Poly::zero();
    let laws = [
        ("a+b = b+a", &a + &b == &b + &a),
        ("ab = ba", &a * &b == &b * &a),
        ("(a+b)+c = a+(b+c)", &(&a + &b) + &c == &a + &(&b + &c)),
        ("(ab)c = a(bc)", &(&a * &b) * &c == &a * &(&b * &c)),
        ("a(b+c) = ab+ac", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
        ("a+(-a) = 0", &a + &(-&a) == zero),
        ("a*1 = a", &a * &one == a),
    ];
    if let Some((law, _)) = laws.iter().find(|(_, ok)| !ok) {
        return Err(format!("{law} fails for a = {a}, b = {b}, c = {c}"));
    }
    let r = random_poly(rng);
    let sub = |p: &Poly| p.substitute(&[("x", r.clone())]).expect("substitution");
    if sub(&(&a * &b)) != &sub(&a) * &sub(&b) || sub(&(&a + &b)) != &sub(&a) + &sub(&b) {
        return Err(format!("substitution x -> {r} is not a homomorphism on a = {a}, b = {b}"));
    }
    Ok(())
}

fn resultant_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (df, dg) = (rng.random_range(1..=3), rng.random_range(1..=3));
    let mut f = random_form(rng, df);
    let mut g = random_form(rng, dg);
    if rng.random_bool(0.5) {
        let l = random_form(rng, 1);
        f = form_mul(&f, &l);
        g = form_mul(&g, &l);
    }
    let res = resultant(&f, &g).map_err(|e| e.to_string())?;
    let common = f.gcd_degree(&g).map_err(|e| e.to_string())? > 0;
    if res.is_zero() != common {
        return Err(format!("Res = {res} but common factor = {common} for {} and {}", f.to_poly(), g.to_poly()));
    }
    Ok(())
}

fn discriminant_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = if rng.random_bool(0.5) {
        let l = random_form(rng, 1);
        let dh = rng.random_range(0..=2);
        let h = random_form(rng, dh);
        form_mul(&form_mul(&l, &l), &h)
    } else {
        let d = rng.random_range(2..=4);
        random_form(rng, d)
    };
    let disc = discriminant(&f).map_err(|e| e.to_string())?;
    let sqf = f.is_squarefree().map_err(|e| e.to_string())?;
    if disc.is_zero() == sqf {
        return Err(format!("disc = {disc} but squarefree = {sqf} for {}", f.to_poly()));
    }
    Ok(())
}

type PropertyCase = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn property_family(name: &str, cfg: &SelftestConfig, stream: u64, case: PropertyCase) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let failure = (0..cfg.property_cases).find_map(|_| case(&mut rng).err());
    Check::expect(
        format!("{name} ({} cases)", cfg.property_cases),
        failure.is_none(),
        failure.unwrap_or_else(|| "no counterexample".to_string()),
    )
}

fn algebra_properties(cfg: &SelftestConfig) -> Vec<Check> {
    let families: [(&str, u64, PropertyCase); 3] = [
        ("ring axioms and substitution", 10, ring_case),
        ("resultant vanishes iff common factor", 11, resultant_case),
        ("discriminant vanishes iff repeated root", 12, discriminant_case),
    ];
    families
        .par_iter()
        .map(|(name, stream, case)| property_family(name, cfg, *stream, *case))
        .collect()
}
