//! Scrolls Σ_{a,b} ⊂ ℙ³ swept by the lines joining `(s0:s1:0:0)` and
//! `(0:0:u0:u1)` over the points of a curve `F(s; u) = 0` of type `(a, b)`
//! on ℙ¹×ℙ¹.
//!
//! Coordinates are fixed: `R1 = {X2 = X3 = 0}` carries the `s`-points and
//! `R2 = {X0 = X1 = 0}` the `u`-points, so the surface is `F(X0,X1; X2,X3) = 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactalg::{
    common_affine_root, discriminant, resultant_in_y, to_ypoly, x_derivative, y_derivative,
    AlgError, PolyJson, UniPoly, YPoly,
};
use crate::{Form, Poly, Rational, Scalar};

pub const S_VARS: [&str; 2] = ["s0", "s1"];
pub const U_VARS: [&str; 2] = ["u0", "u1"];
pub const BI_VARS: [&str; 4] = ["s0", "s1", "u0", "u1"];
pub const X_VARS: [&str; 4] = ["X0", "X1", "X2", "X3"];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScrollError {
    #[error("bidegree ({a}, {b}) must have both entries at least 1")]
    InvalidBidegree { a: i64, b: i64 },
    #[error("not bihomogeneous: {0}")]
    NotBihomogeneous(String),
    #[error("no smooth curve within {attempts} attempts (seed {seed})")]
    BudgetExhausted { seed: u64, attempts: u32 },
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point has a zero coordinate pair")]
    InvalidPoint,
    #[error("inconsistent model: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// A nonzero form of bidegree `(a, b)` in `(s0, s1; u0, u1)`, `a, b ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiForm {
    f: Poly,
    a: u32,
    b: u32,
}

impl BiForm {
    pub fn new(f: &Poly) -> Result<Self, ScrollError> {
        if f.is_zero() {
            return Err(AlgError::ZeroForm.into());
        }
        let f = f.with_context(&BI_VARS)?;
        let a = f
            .homogeneous_degree_in(&S_VARS)
            .ok_or_else(|| ScrollError::NotBihomogeneous("mixed degrees in (s0, s1)".into()))?;
        let b = f
            .homogeneous_degree_in(&U_VARS)
            .ok_or_else(|| ScrollError::NotBihomogeneous("mixed degrees in (u0, u1)".into()))?;
        if a == 0 || b == 0 {
            return Err(ScrollError::InvalidBidegree { a: a.into(), b: b.into() });
        }
        Ok(BiForm { f, a, b })
    }

    /// `coeffs[i][j]` multiplies `s0^(a-i) s1^i u0^(b-j) u1^j`.
    pub fn from_coeffs(coeffs: &[Vec<Rational>]) -> Result<Self, ScrollError> {
        let a = coeffs.len().saturating_sub(1) as u32;
        let b = coeffs.first().map_or(0, |r| r.len().saturating_sub(1)) as u32;
        if coeffs.iter().any(|r| r.len() != b as usize + 1) {
            return Err(ScrollError::NotBihomogeneous("ragged coefficient table".into()));
        }
        let terms = coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(j, c)| {
                let (i, j) = (i as u32, j as u32);
                (vec![a - i, i, b - j, j], c.clone())
            })
        });
        Self::new(&Poly::from_terms(&BI_VARS, terms)?)
    }

    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn genus(&self) -> i64 {
        curve_genus(self.a.into(), self.b.into()).expect("validated bidegree")
    }

    /// `F` as a form in `(u0, u1)` with coefficients in `s`.
    pub fn u_form(&self) -> Form {
        Form::from_poly(&self.f, U_VARS[0], U_VARS[1]).expect("bihomogeneous")
    }

    /// `F` as a form in `(s0, s1)` with coefficients in `u`.
    pub fn s_form(&self) -> Form {
        Form::from_poly(&self.f, S_VARS[0], S_VARS[1]).expect("bihomogeneous")
    }

    pub fn eval(&self, s: &[Rational; 2], u: &[Rational; 2]) -> Rational {
        let vals: Vec<(&str, Rational)> = BI_VARS
            .iter()
            .copied()
            .zip([s[0].clone(), s[1].clone(), u[0].clone(), u[1].clone()])
            .collect();
        self.f
            .evaluate(&vals)
            .expect("context")
            .constant_value()
            .expect("all variables assigned")
    }
}

/// `ab - a - b + 1`, the genus of a smooth curve of type `(a, b)`.
pub fn curve_genus(a: i64, b: i64) -> Result<i64, ScrollError> {
    if a < 1 || b < 1 {
        return Err(ScrollError::InvalidBidegree { a, b });
    }
    Ok((a - 1) * (b - 1))
}

fn chart(f: &Poly, ones: [&str; 2]) -> Poly {
    f.evaluate(&[(ones[0], Rational::from_i64(1)), (ones[1], Rational::from_i64(1))])
        .expect("context")
}

/// Does the affine curve `f(x, y) = 0` have a singular point with `x` a root
/// of `restrict_to` (or anywhere, when `None`)? `extra` polynomials must vanish
/// there as well.
fn chart_singular(f: &Poly, x: &str, y: &str, restrict_to: Option<UniPoly<Rational>>, extra: &[YPoly<Rational>]) -> bool {
    let fy = to_ypoly(f, x, y).expect("bivariate chart");
    let dy = y_derivative(&fy);
    let dx = x_derivative(&fy);
    let modulus = match restrict_to {
        Some(m) => m,
        None => {
            if dy.is_empty() {
                // f in Q[x]: singular iff it has a repeated root
                return fy[0].degree().unwrap_or(0) > 0
                    && !fy[0].is_squarefree().expect("nonzero");
            }
            let r1 = resultant_in_y(&fy, &dy).expect("nonzero");
            if r1.is_zero() {
                // a squared factor of positive y-degree
                return true;
            }
            let m = if dx.is_empty() {
                r1
            } else {
                let r2 = resultant_in_y(&fy, &dx).expect("nonzero");
                if r2.is_zero() { r1 } else { r1.gcd(&r2) }
            };
            if m.degree() == Some(0) {
                return false;
            }
            m
        }
    };
    let mut system = vec![fy, dx, dy];
    system.extend_from_slice(extra);
    common_affine_root(&modulus, &system)
}

/// True iff `F`, `∂F/∂s_i` and `∂F/∂u_j` have no common zero on ℙ¹×ℙ¹.
///
/// The chart `s0 = u0 = 1` is eliminated in full; the complementary points
/// `s0 = 0` or `u0 = 0` are handled by restricting neighbouring charts to
/// the boundary.
pub fn is_smooth_curve(f: &BiForm) -> bool {
    let p = f.poly();
    let x_is_zero = UniPoly::from_i64(&[0, 1]);
    let y_is_zero: YPoly<Rational> = vec![UniPoly::zero(), UniPoly::one()];
    // s0 = 1, u0 = 1
    if chart_singular(&chart(p, ["s0", "u0"]), "s1", "u1", None, &[]) {
        return false;
    }
    // s0 = 0, u0 ≠ 0
    if chart_singular(&chart(p, ["s1", "u0"]), "s0", "u1", Some(x_is_zero.clone()), &[]) {
        return false;
    }
    // u0 = 0, s0 ≠ 0
    if chart_singular(&chart(p, ["s0", "u1"]), "u0", "s1", Some(x_is_zero.clone()), &[]) {
        return false;
    }
    // s0 = u0 = 0
    !chart_singular(&chart(p, ["s1", "u1"]), "s0", "u0", Some(x_is_zero), &[y_is_zero])
}

/// Branch data of one projection `E → R_i`.
#[derive(Clone, Debug, PartialEq)]
pub enum PinchDivisor {
    /// The projection has degree 1; there are no branch points.
    Unramified,
    /// The discriminant form; its roots are the pinch points on the line.
    Form(Form),
    /// The discriminant vanishes identically (non-reduced fibres everywhere).
    Degenerate,
}

impl PinchDivisor {
    fn of(f: &Form, target: [&str; 2]) -> Self {
        if f.degree() < 2 {
            return PinchDivisor::Unramified;
        }
        let d = discriminant(f).expect("degree at least 2");
        if d.is_zero() {
            return PinchDivisor::Degenerate;
        }
        PinchDivisor::Form(Form::from_poly(&d, target[0], target[1]).expect("homogeneous discriminant"))
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            PinchDivisor::Unramified => Some(0),
            PinchDivisor::Form(f) => Some(f.degree()),
            PinchDivisor::Degenerate => None,
        }
    }

    pub fn form(&self) -> Option<&Form> {
        match self {
            PinchDivisor::Form(f) => Some(f),
            _ => None,
        }
    }
}

/// Pinch divisor on `R1`: discriminant of `F` over `(u0, u1)`, a form in `s`.
pub fn pinch_divisor_r1(f: &BiForm) -> PinchDivisor {
    PinchDivisor::of(&f.u_form(), S_VARS)
}

/// Pinch divisor on `R2`: discriminant of `F` over `(s0, s1)`, a form in `u`.
pub fn pinch_divisor_r2(f: &BiForm) -> PinchDivisor {
    PinchDivisor::of(&f.s_form(), U_VARS)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleLine {
    pub name: String,
    /// Coordinates vanishing on the line.
    pub equations: Vec<String>,
    /// Multiplicity of a general `F`: the number of rulings through a
    /// general point of the line.
    pub expected_multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScrollModel {
    pub curve: BiForm,
    pub p: Poly,
    pub genus: i64,
    pub double_lines: [DoubleLine; 2],
    pub pinch_r1: PinchDivisor,
    pub pinch_r2: PinchDivisor,
    pub smooth: bool,
    pub seed: Option<u64>,
    pub warnings: Vec<String>,
}

impl ScrollModel {
    pub fn a(&self) -> u32 {
        self.curve.a()
    }

    pub fn b(&self) -> u32 {
        self.curve.b()
    }

    pub fn degree(&self) -> u32 {
        self.curve.a() + self.curve.b()
    }
}

/// Substitute `s -> (X0, X1)`, `u -> (X2, X3)` and attach the divisor data.
pub fn implicitize(f: &BiForm) -> ScrollModel {
    implicitize_known(f, is_smooth_curve(f))
}

fn implicitize_known(f: &BiForm, smooth: bool) -> ScrollModel {
    let images: Vec<(&str, Poly)> = BI_VARS
        .iter()
        .zip(X_VARS)
        .map(|(v, x)| (*v, Poly::var(x)))
        .collect();
    let p = f
        .poly()
        .substitute(&images)
        .and_then(|p| p.with_context(&X_VARS))
        .expect("linear substitution");
    let mut warnings = Vec::new();
    if !smooth {
        warnings.push("curve is singular; divisor data describes a degenerate scroll".to_string());
    }
    let pinch_r1 = pinch_divisor_r1(f);
    let pinch_r2 = pinch_divisor_r2(f);
    for (name, d) in [("R1", &pinch_r1), ("R2", &pinch_r2)] {
        if *d == PinchDivisor::Degenerate {
            warnings.push(format!("pinch divisor on {name} vanishes identically"));
        }
    }
    // R1 = {X2 = X3 = 0} meets each ruling over s in one point and carries
    // the b points of E over it.
    let double_lines = [
        DoubleLine {
            name: "R1".into(),
            equations: vec!["X2".into(), "X3".into()],
            expected_multiplicity: f.b(),
        },
        DoubleLine {
            name: "R2".into(),
            equations: vec!["X0".into(), "X1".into()],
            expected_multiplicity: f.a(),
        },
    ];
    ScrollModel {
        curve: f.clone(),
        p,
        genus: f.genus(),
        double_lines,
        pinch_r1,
        pinch_r2,
        smooth,
        seed: None,
        warnings,
    }
}

/// The ruling `L_x` through a rational point `x = (s; u)` of the curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Ruling {
    pub s: [Rational; 2],
    pub u: [Rational; 2],
}

impl Ruling {
    /// `(λ s0 : λ s1 : μ u0 : μ u1)` as polynomials in `lambda`, `mu`.
    pub fn parametrization(&self) -> [Poly; 4] {
        let l = Poly::var("lambda");
        let m = Poly::var("mu");
        [
            l.scale(&self.s[0]),
            l.scale(&self.s[1]),
            m.scale(&self.u[0]),
            m.scale(&self.u[1]),
        ]
    }

    /// `P` pulled back to the line, a form in `(lambda, mu)`.
    pub fn restrict(&self, p: &Poly) -> Poly {
        let par = self.parametrization();
        let images: Vec<(&str, Poly)> = X_VARS.iter().copied().zip(par).collect();
        p.substitute(&images).expect("linear substitution")
    }

    /// Where the ruling meets `R1` (`μ = 0`) and `R2` (`λ = 0`).
    pub fn endpoints(&self) -> ([Rational; 4], [Rational; 4]) {
        let z = Rational::from_i64(0);
        (
            [self.s[0].clone(), self.s[1].clone(), z.clone(), z.clone()],
            [z.clone(), z, self.u[0].clone(), self.u[1].clone()],
        )
    }
}

pub fn ruling_at(f: &BiForm, s: [Rational; 2], u: [Rational; 2]) -> Result<Ruling, ScrollError> {
    let zero = |v: &[Rational; 2]| v.iter().all(|c| c == &Rational::from_i64(0));
    if zero(&s) || zero(&u) {
        return Err(ScrollError::InvalidPoint);
    }
    if f.eval(&s, &u) != Rational::from_i64(0) {
        return Err(ScrollError::NotOnCurve);
    }
    Ok(Ruling { s, u })
}

/// Coefficient range and retry budget for random construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub coefficient_range: u32,
    pub retry_budget: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            coefficient_range: 10,
            retry_budget: 20,
        }
    }
}

/// Uniform integer coefficients in `[-N, N]` from a ChaCha8 stream seeded
/// with `seed`, redrawn until the curve is smooth.
pub fn random_biform(a: u32, b: u32, seed: u64, cfg: &GenConfig) -> Result<BiForm, ScrollError> {
    if a == 0 || b == 0 {
        return Err(ScrollError::InvalidBidegree { a: a.into(), b: b.into() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = i64::from(cfg.coefficient_range);
    for _ in 0..cfg.retry_budget {
        let coeffs: Vec<Vec<Rational>> = (0..=a)
            .map(|_| {
                (0..=b)
                    .map(|_| Rational::from_i64(rng.random_range(-n..=n)))
                    .collect()
            })
            .collect();
        let f = match BiForm::from_coeffs(&coeffs) {
            Ok(f) => f,
            Err(ScrollError::Alg(AlgError::ZeroForm)) => continue,
            Err(e) => return Err(e),
        };
        if is_smooth_curve(&f) {
            return Ok(f);
        }
    }
    Err(ScrollError::BudgetExhausted {
        seed,
        attempts: cfg.retry_budget,
    })
}

/// `random_biform` followed by `implicitize`, with the seed recorded.
pub fn construct(a: u32, b: u32, seed: u64, cfg: &GenConfig) -> Result<ScrollModel, ScrollError> {
    let f = random_biform(a, b, seed, cfg)?;
    let mut m = implicitize_known(&f, true);
    m.seed = Some(seed);
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    SmoothInPr,
    NodalInP4,
    HypersurfaceInP3,
    Invalid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertParams {
    pub d: i64,
    pub g: i64,
    pub k: i64,
    pub r: i64,
    pub regime: Regime,
}

/// Parameters of the component of scrolls of degree `d` and genus `g`.
pub fn hilbert_params(d: i64, g: i64) -> HilbertParams {
    let k = (g - 1).min(1);
    let r = d - 2 * g + 1;
    let regime = if d < 1 || g < 0 {
        Regime::Invalid
    } else if d >= 2 * g + 3 + k {
        Regime::SmoothInPr
    } else if g >= 2 && d == 2 * g + 3 {
        Regime::NodalInP4
    } else if g >= 2 && d == 2 * g + 2 {
        Regime::HypersurfaceInP3
    } else {
        Regime::Invalid
    };
    HilbertParams { d, g, k, r, regime }
}

/// JSON form of a [`BiForm`]: the polynomial plus `{a, b, genus, seed}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiFormJson {
    pub a: u32,
    pub b: u32,
    pub genus: i64,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub poly: PolyJson,
}

impl BiFormJson {
    pub fn new(f: &BiForm, seed: Option<u64>) -> Self {
        BiFormJson {
            a: f.a(),
            b: f.b(),
            genus: f.genus(),
            seed,
            poly: PolyJson::from(f.poly()),
        }
    }

    pub fn to_biform(&self) -> Result<BiForm, ScrollError> {
        let f = BiForm::new(&Poly::try_from(&self.poly)?)?;
        if (f.a(), f.b(), f.genus()) != (self.a, self.b, self.genus) {
            return Err(ScrollError::Inconsistent(format!(
                "header says ({}, {}) genus {}, polynomial has bidegree ({}, {})",
                self.a,
                self.b,
                self.genus,
                f.a(),
                f.b()
            )));
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PinchJson {
    /// `form`, `unramified` or `degenerate`.
    pub status: String,
    pub degree: Option<usize>,
    pub vars: Option<[String; 2]>,
    pub form: Option<PolyJson>,
}

impl From<&PinchDivisor> for PinchJson {
    fn from(d: &PinchDivisor) -> Self {
        match d {
            PinchDivisor::Unramified => PinchJson {
                status: "unramified".into(),
                degree: Some(0),
                vars: None,
                form: None,
            },
            PinchDivisor::Degenerate => PinchJson {
                status: "degenerate".into(),
                degree: None,
                vars: None,
                form: None,
            },
            PinchDivisor::Form(f) => {
                let (v0, v1) = f.vars();
                PinchJson {
                    status: "form".into(),
                    degree: Some(f.degree()),
                    vars: Some([v0.to_string(), v1.to_string()]),
                    form: Some(PolyJson::from(&f.to_poly())),
                }
            }
        }
    }
}

/// JSON form of a [`ScrollModel`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScrollModelJson {
    pub a: u32,
    pub b: u32,
    pub genus: i64,
    pub seed: Option<u64>,
    pub degree: u32,
    pub smooth: bool,
    pub warnings: Vec<String>,
    #[serde(rename = "F")]
    pub f: PolyJson,
    #[serde(rename = "P")]
    pub p: PolyJson,
    pub double_lines: Vec<DoubleLine>,
    pub pinch_divisor_r1: PinchJson,
    pub pinch_divisor_r2: PinchJson,
}

impl From<&ScrollModel> for ScrollModelJson {
    fn from(m: &ScrollModel) -> Self {
        ScrollModelJson {
            a: m.a(),
            b: m.b(),
            genus: m.genus,
            seed: m.seed,
            degree: m.degree(),
            smooth: m.smooth,
            warnings: m.warnings.clone(),
            f: PolyJson::from(m.curve.poly()),
            p: PolyJson::from(&m.p),
            double_lines: m.double_lines.to_vec(),
            pinch_divisor_r1: PinchJson::from(&m.pinch_r1),
            pinch_divisor_r2: PinchJson::from(&m.pinch_r2),
        }
    }
}

impl ScrollModelJson {
    /// Rebuild the model from `F` and check the stored data against it.
    pub fn to_model(&self) -> Result<ScrollModel, ScrollError> {
        let f = BiForm::new(&Poly::try_from(&self.f)?)?;
        let mut m = implicitize(&f);
        m.seed = self.seed;
        let rebuilt = ScrollModelJson::from(&m);
        if rebuilt != *self {
            return Err(ScrollError::Inconsistent(
                "stored scroll data does not match its curve".into(),
            ));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    pub(crate) fn explicit_f() -> BiForm {
        let p = parse_poly("s0^2 * u0^2 + s1^2 * u0^2 + s0^2 * u1^2 + 2 * s1^2 * u1^2", None).unwrap();
        BiForm::new(&p).unwrap()
    }

    fn bf(text: &str) -> BiForm {
        BiForm::new(&parse_poly(text, None).unwrap()).unwrap()
    }

    #[test]
    fn genus_values() {
        assert_eq!(curve_genus(2, 2), Ok(1));
        assert_eq!(curve_genus(3, 2), Ok(2));
        for b in 1..6 {
            assert_eq!(curve_genus(1, b), Ok(0));
        }
        assert!(curve_genus(0, 2).is_err());
        assert!(curve_genus(2, -1).is_err());
    }

    #[test]
    fn biform_validation() {
        let f = explicit_f();
        assert_eq!((f.a(), f.b(), f.genus()), (2, 2, 1));
        assert!(matches!(
            BiForm::new(&parse_poly("s0 * u0 + s1", None).unwrap()),
            Err(ScrollError::NotBihomogeneous(_))
        ));
        assert!(matches!(
            BiForm::new(&parse_poly("s0 * u0 * z", None).unwrap()),
            Err(ScrollError::Alg(AlgError::UnknownVariable(_)))
        ));
        assert!(matches!(
            BiForm::new(&parse_poly("s0^2", None).unwrap()),
            Err(ScrollError::InvalidBidegree { .. })
        ));
        assert_eq!(BiForm::new(&Poly::zero()), Err(ScrollError::Alg(AlgError::ZeroForm)));
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth_curve(&explicit_f()));
        assert!(!is_smooth_curve(&bf("s0^2 * u0^2")));
        assert!(is_smooth_curve(&bf("s0 * u0 + s1 * u1")));
        // reducible: (s0 u0 + s1 u1)(s0 u1 - s1 u0) has two nodes
        assert!(!is_smooth_curve(&bf("s0^2 * u0 * u1 - s0 * s1 * u0^2 + s0 * s1 * u1^2 - s1^2 * u0 * u1")));
        // the only singular point is the node ((0:1), (0:1)), outside the
        // main chart
        let corner = bf("s0^2 * u0^2 + s0^2 * u1^2 - s1^2 * u0^2");
        assert!(!is_smooth_curve(&corner));
        assert!(!chart_singular(&chart(corner.poly(), ["s0", "u0"]), "s1", "u1", None, &[]));
    }

    #[test]
    fn implicitization_of_explicit_curve() {
        let m = implicitize(&explicit_f());
        let expected = parse_poly("X0^2 * X2^2 + X1^2 * X2^2 + X0^2 * X3^2 + 2 * X1^2 * X3^2", None).unwrap();
        assert_eq!(m.p, expected);
        assert_eq!(m.p.total_degree(), Some(4));
        assert!(m.smooth && m.warnings.is_empty());
        let d1 = m.pinch_r1.form().unwrap();
        assert_eq!(d1.degree(), 4);
        assert_eq!(d1.root_count().unwrap().distinct, 4);
        assert_eq!(m.pinch_r2.degree(), Some(4));
    }

    #[test]
    fn ruling_examples() {
        let f = bf("s0 * u0 - s1 * u1");
        let one = Rational::from_i64(1);
        let r = ruling_at(&f, [one.clone(), one.clone()], [one.clone(), one.clone()]).unwrap();
        let m = implicitize(&f);
        assert_eq!(m.p, parse_poly("X0 * X2 - X1 * X3", None).unwrap());
        assert!(r.restrict(&m.p).is_zero());
        let (e1, e2) = r.endpoints();
        assert_eq!(e1[2], Rational::from_i64(0));
        assert_eq!(e2[0], Rational::from_i64(0));
        let two = Rational::from_i64(2);
        assert_eq!(
            ruling_at(&f, [one.clone(), two], [one.clone(), one.clone()]),
            Err(ScrollError::NotOnCurve)
        );
        let z = Rational::from_i64(0);
        assert_eq!(ruling_at(&f, [z.clone(), z], [one.clone(), one]), Err(ScrollError::InvalidPoint));
    }

    #[test]
    fn random_construction_is_deterministic() {
        let cfg = GenConfig::default();
        let a = random_biform(2, 2, 1, &cfg).unwrap();
        let b = random_biform(2, 2, 1, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(is_smooth_curve(&a));
        let f = random_biform(3, 2, 5, &cfg).unwrap();
        assert_eq!(f.genus(), 2);
        let zero = GenConfig { coefficient_range: 0, retry_budget: 3 };
        assert_eq!(
            random_biform(1, 1, 9, &zero),
            Err(ScrollError::BudgetExhausted { seed: 9, attempts: 3 })
        );
    }

    #[test]
    fn degree_and_pinch_degrees() {
        let cfg = GenConfig::default();
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                let m = construct(a, b, 11, &cfg).unwrap();
                assert_eq!(m.p.total_degree(), Some(a + b));
                assert!(m.p.is_homogeneous());
                let g = m.genus;
                if b >= 2 {
                    assert_eq!(m.pinch_r1.degree(), Some((a * (2 * b - 2)) as usize));
                    assert_eq!(i64::from(a * (2 * b - 2)), 2 * g - 2 + 2 * i64::from(b));
                } else {
                    assert_eq!(m.pinch_r1, PinchDivisor::Unramified);
                }
                if a >= 2 {
                    assert_eq!(m.pinch_r2.degree(), Some((b * (2 * a - 2)) as usize));
                }
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_params(5, 1);
        assert_eq!((h.k, h.r, h.regime), (0, 4, Regime::SmoothInPr));
        let h = hilbert_params(6, 2);
        assert_eq!((h.k, h.r, h.regime), (1, 3, Regime::HypersurfaceInP3));
        let h = hilbert_params(7, 2);
        assert_eq!((h.r, h.regime), (4, Regime::NodalInP4));
        assert_eq!(hilbert_params(8, 2).regime, Regime::SmoothInPr);
        assert_eq!(hilbert_params(4, 1).regime, Regime::Invalid);
    }

    #[test]
    fn json_round_trips() {
        let m = construct(2, 3, 4, &GenConfig::default()).unwrap();
        let j = ScrollModelJson::from(&m);
        let text = serde_json::to_string(&j).unwrap();
        let back: ScrollModelJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_model().unwrap(), m);
        let mut tampered = back.clone();
        tampered.genus = 7;
        assert!(matches!(tampered.to_model(), Err(ScrollError::Inconsistent(_))));

        let bj = BiFormJson::new(&m.curve, m.seed);
        let text = serde_json::to_string(&bj).unwrap();
        assert!(text.contains("\"vars\"") && text.contains("\"genus\":2"));
        let back: BiFormJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_biform().unwrap(), m.curve);
    }
}
