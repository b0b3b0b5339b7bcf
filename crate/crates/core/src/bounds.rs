//! Genus floors, dimension counts and degree bounds, all in exact integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combin::{bigint_str, binomial};
use crate::invariants::bonnesen;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("genus {g} outside the window [{lo}, {hi}]: no such family of nodal sections")]
    OutsideWindow { g: i64, lo: BigInt, hi: BigInt },
    #[error("recursion and closed form disagree at d = {0}")]
    RecursionMismatch(i64),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, BoundError> {
    Err(BoundError::InvalidInput(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    LowerBound,
    UpperBound,
    Exact,
    Threshold,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    #[serde(with = "bigint_str")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(with = "bigint_str")]
    pub value: BigInt,
    pub kind: BoundKind,
    pub assumptions: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub related: Vec<NamedValue>,
}

impl BoundReport {
    fn new(value: impl Into<BigInt>, kind: BoundKind) -> Self {
        BoundReport {
            value: value.into(),
            kind,
            assumptions: Vec::new(),
            notes: Vec::new(),
            related: Vec::new(),
        }
    }

    fn assume(mut self, s: &str) -> Self {
        self.assumptions.push(s.to_string());
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    fn with(mut self, name: &str, value: impl Into<BigInt>) -> Self {
        self.related.push(NamedValue {
            name: name.to_string(),
            value: value.into(),
        });
        self
    }

    pub fn related(&self, name: &str) -> Option<&BigInt> {
        self.related.iter().find(|v| v.name == name).map(|v| &v.value)
    }
}

const VERY_GENERAL_SURFACE: &str = "very general surface of degree d in P3";

/// Least geometric genus of a curve on a very general surface of degree `d`
/// in ℙ³.
pub fn eta3(d: i64) -> Result<BoundReport, BoundError> {
    if d < 1 {
        return invalid(format!("degree {d} < 1"));
    }
    let v = if d <= 4 { BigInt::zero() } else { binomial(d - 1, 2) - 3 };
    Ok(BoundReport::new(v, BoundKind::Exact).assume(VERY_GENERAL_SURFACE))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EtaValue {
    Exact {
        #[serde(with = "bigint_str")]
        value: BigInt,
    },
    AtLeast {
        #[serde(with = "bigint_str")]
        value: BigInt,
    },
    Unknown,
}

/// What is known about η(n, d) on a very general hypersurface of degree `d`
/// in ℙⁿ. Only `n = 3` has exact values beyond `d ≤ 2n - 3`.
pub fn eta_lookup(n: i64, d: i64) -> EtaValue {
    if d < 1 || n < 3 {
        return EtaValue::Unknown;
    }
    if n == 3 {
        return EtaValue::Exact {
            value: eta3(d).expect("d >= 1").value,
        };
    }
    if d <= 2 * n - 3 {
        return EtaValue::Exact { value: BigInt::zero() };
    }
    if (n, d) == (4, 6) {
        return EtaValue::AtLeast { value: BigInt::from(2) };
    }
    EtaValue::AtLeast { value: BigInt::one() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleComponent {
    pub m: i64,
    pub g: i64,
}

/// Lower bound on the genus of a curve degenerating to `Σ mᵢ Cᵢ`.
pub fn albanese_bound(components: &[CycleComponent]) -> Result<BoundReport, BoundError> {
    if components.is_empty() {
        return invalid("empty cycle");
    }
    let mut sum = BigInt::zero();
    for c in components {
        if c.m < 1 || c.g < 0 {
            return invalid(format!("component (m={}, g={})", c.m, c.g));
        }
        if c.g >= 1 {
            sum += BigInt::from(c.m) * (c.g - 1) + 1;
        }
    }
    Ok(BoundReport::new(sum, BoundKind::LowerBound)
        .assume("the curve specializes flatly to the given cycle"))
}

pub fn limit_genus_sum(rhos: &[i64]) -> Result<BoundReport, BoundError> {
    if rhos.is_empty() {
        return invalid("empty list of genera");
    }
    if let Some(r) = rhos.iter().find(|r| **r < 0) {
        return invalid(format!("negative genus {r}"));
    }
    let sum: BigInt = rhos.iter().map(|r| BigInt::from(*r)).sum();
    Ok(BoundReport::new(sum, BoundKind::LowerBound)
        .assume("the surface degenerates to a union whose components have geometric genera rho_i"))
}

/// Genus floor for a curve meeting each ruling of a scroll over a genus `g`
/// base in `nu` points.
pub fn multisecant_genus(nu: i64, g: i64) -> Result<BoundReport, BoundError> {
    if nu < 1 || g < 0 {
        return invalid(format!("nu = {nu}, g = {g}"));
    }
    Ok(BoundReport::new(BigInt::from(nu) * (g - 1) + 1, BoundKind::LowerBound)
        .assume("curve on a scroll over a curve of genus g, meeting the ruling in nu points"))
}

/// `max{g, g - 1 - κ}` bounds the dimension of an equigeneric family of
/// genus `g` curves with `κ = K_S·Γ`.
pub fn severi_dim_bound(g: i64, kappa: i64) -> Result<BoundReport, BoundError> {
    if g < 0 {
        return invalid(format!("g = {g}"));
    }
    let v = BigInt::from(g).max(BigInt::from(g) - 1 - kappa);
    Ok(BoundReport::new(v, BoundKind::UpperBound)
        .assume("family of reduced curves of constant geometric genus g on a smooth surface"))
}

/// `N_d = C(d+3, 3) - 1`, the dimension of degree-`d` surfaces in ℙ³.
pub fn linear_system_dim(d: i64) -> BigInt {
    binomial(d + 3, 3) - 1
}

/// `g_{d,n} = dn(d+n-4)/2 + 1`, the arithmetic genus of a complete
/// intersection of type `(d, n)` in ℙ³.
pub fn arithmetic_genus(d: i64, n: i64) -> BigInt {
    BigInt::from(d) * n * (d + n - 4) / 2 + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCount {
    #[serde(with = "bigint_str")]
    pub nu_nodes: BigInt,
    #[serde(with = "bigint_str")]
    pub dim: BigInt,
    pub assumptions: Vec<String>,
}

/// Node count and family dimension for genus `g` sections of a general
/// surface of degree `d` by planes (`n = 1`) or quadrics (`n = 2`).
pub fn node_count_and_dim(d: i64, n: i64, g: i64) -> Result<NodeCount, BoundError> {
    if d < 3 {
        return invalid(format!("degree {d} < 3"));
    }
    let span = match n {
        1 => 3,
        2 => 9,
        _ => return invalid(format!("n = {n}; only 1 and 2 are supported")),
    };
    let ga = arithmetic_genus(d, n);
    let lo = &ga - span;
    let gb = BigInt::from(g);
    if gb < lo || gb > ga {
        return Err(BoundError::OutsideWindow { g, lo, hi: ga });
    }
    let nu = &ga - &gb;
    Ok(NodeCount {
        dim: BigInt::from(span) - &nu,
        nu_nodes: nu,
        assumptions: vec!["general surface of degree d >= 3, general member has exactly nu nodes".into()],
    })
}

const ORDINARY: &str = "requires scroll (d,g) with ordinary singularities";

/// Largest `n` with `n < (γ-1)/(g-1)`, `γ` the double-curve genus of a
/// scroll of degree `d` and genus `g`.
pub fn degree_bound(d: i64, g: i64) -> Result<BoundReport, BoundError> {
    if d < 6 {
        return invalid(format!("degree {d} < 6"));
    }
    if g < 2 {
        return invalid(format!("g = {g} < 2: the bound degenerates"));
    }
    let gamma = bonnesen(d, g).map_err(|e| BoundError::InvalidInput(e.to_string()))?.gamma;
    let num = BigInt::from(gamma - 1);
    let den = BigInt::from(g - 1);
    let (q, r) = num.div_mod_floor(&den);
    let n = if r.is_zero() { q - 1 } else { q };
    Ok(BoundReport::new(n, BoundKind::UpperBound)
        .assume(ORDINARY)
        .with("gamma", gamma))
}

/// Genus cutoff `γ` below which boundedness is affirmed in degree `d`.
/// Related values: the genus the argument uses, the closed form, and the
/// largest admissible genus as stated and under the strict inequality.
pub fn cor_bound_threshold(d: i64) -> Result<BoundReport, BoundError> {
    if d < 6 {
        return invalid(format!("degree {d} < 6"));
    }
    let g = if d == 6 {
        2
    } else if d % 2 == 0 {
        (d - 4) / 2
    } else {
        (d - 3) / 2
    };
    let gamma = bonnesen(d, g).expect("d >= 6").gamma;
    let closed = if d == 6 {
        BigInt::from(5)
    } else if d % 2 == 0 {
        BigInt::from(d - 4).pow(2)
    } else {
        BigInt::from(d - 3) * (2 * d - 9) / 2
    };
    let strict = BigInt::from(gamma - 1);
    let stated = if d == 6 { BigInt::from(5) } else { strict.clone() };
    let mut rep = BoundReport::new(gamma, BoundKind::Threshold)
        .assume(&format!("{ORDINARY} for (d, g) = ({d}, {g})"))
        .with("scroll_genus", g)
        .with("closed_form", closed)
        .with("stated_max_genus", stated)
        .with("strict_max_genus", strict);
    if d == 6 {
        rep = rep.note("stated: g <= 5; strict inequality g < gamma = 5 gives g <= 4");
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub d: i64,
    pub scroll_genus: String,
    pub cutoff: String,
    pub closed_form: String,
    pub stated_max_genus: String,
    pub strict_max_genus: String,
}

pub fn threshold_table(d_min: i64, d_max: i64) -> Result<Vec<ThresholdRow>, BoundError> {
    (d_min.max(6)..=d_max)
        .map(|d| {
            let r = cor_bound_threshold(d)?;
            let get = |k: &str| r.related(k).map(|v| v.to_string()).unwrap_or_default();
            Ok(ThresholdRow {
                d,
                scroll_genus: get("scroll_genus"),
                cutoff: r.value.to_string(),
                closed_form: get("closed_form"),
                stated_max_genus: get("stated_max_genus"),
                strict_max_genus: get("strict_max_genus"),
            })
        })
        .collect()
}

/// Geometric genus `C(d-1, 3)` of a smooth surface of degree `d` in ℙ³.
pub fn rho_surface(d: i64) -> Result<BoundReport, BoundError> {
    if d < 4 {
        return invalid(format!("degree {d} < 4"));
    }
    let v = binomial(d - 1, 3);
    debug_assert_eq!(v, linear_system_dim(d - 4) + 1);
    Ok(BoundReport::new(v, BoundKind::Exact).assume("smooth surface of degree d in P3"))
}

/// `ρ_k = ρ(E_{k-1}) + ρ_{k-1}` from `ρ_5 = 1`.
pub fn rho_double_recursion(d: i64) -> BigInt {
    let mut rho = BigInt::one();
    for k in 6..=d {
        rho += binomial(k - 2, 3);
    }
    rho
}

/// Lower bound for the geometric genus of the double surface in degree `d`.
pub fn rho_double_lower(d: i64) -> Result<BoundReport, BoundError> {
    if d < 5 {
        return invalid(format!("degree {d} < 5"));
    }
    let rec = rho_double_recursion(d);
    let closed = binomial(d - 1, 4);
    if rec != closed {
        return Err(BoundError::RecursionMismatch(d));
    }
    Ok(BoundReport::new(closed, BoundKind::LowerBound)
        .assume("double surface of a general projection of the degree-d threefold scroll")
        .note("inequality reconstructed from the recursion rho_d >= rho(E_(d-1)) + rho_(d-1) with rho_5 >= 1")
        .with("recursion", rec))
}

/// `min{C(d-1,4), C(d-1,3)}` bounds the geometric genus of surfaces in a
/// very general threefold of degree `3d` in ℙ⁴.
pub fn threefold_genus_bound(d: i64) -> Result<BoundReport, BoundError> {
    if d < 5 {
        return invalid(format!("degree {d} < 5"));
    }
    let a = binomial(d - 1, 4);
    let b = binomial(d - 1, 3);
    Ok(BoundReport::new(a.clone().min(b.clone()), BoundKind::LowerBound)
        .assume("surface in a very general hypersurface of degree 3d in P4")
        .with("rho_double", a)
        .with("rho_surface", b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn eta3_values() {
        assert_eq!(eta3(4).unwrap().value, b(0));
        assert_eq!(eta3(5).unwrap().value, b(3));
        assert_eq!(eta3(10).unwrap().value, b(33));
        assert!(eta3(0).is_err());
        for d in 5..60 {
            assert!(eta3(d + 1).unwrap().value >= eta3(d).unwrap().value);
        }
    }

    #[test]
    fn eta_lookup_cases() {
        assert_eq!(eta_lookup(3, 5), EtaValue::Exact { value: b(3) });
        assert_eq!(eta_lookup(4, 5), EtaValue::Exact { value: b(0) });
        assert_eq!(eta_lookup(4, 6), EtaValue::AtLeast { value: b(2) });
        assert_eq!(eta_lookup(5, 8), EtaValue::AtLeast { value: b(1) });
        assert_eq!(eta_lookup(2, 8), EtaValue::Unknown);
    }

    #[test]
    fn albanese_examples() {
        let c = |m, g| CycleComponent { m, g };
        assert_eq!(albanese_bound(&[c(1, 0); 4]).unwrap().value, b(0));
        assert_eq!(albanese_bound(&[c(1, 5)]).unwrap().value, b(5));
        assert_eq!(albanese_bound(&[c(1, 2), c(2, 3)]).unwrap().value, b(7));
        assert!(albanese_bound(&[]).is_err());
        assert!(albanese_bound(&[c(0, 1)]).is_err());
        let base = albanese_bound(&[c(1, 2)]).unwrap().value;
        assert!(albanese_bound(&[c(1, 2), c(3, 1)]).unwrap().value >= base);
    }

    #[test]
    fn small_bounds() {
        assert_eq!(limit_genus_sum(&[1, 1]).unwrap().value, b(2));
        assert_eq!(limit_genus_sum(&[4, 1, 0]).unwrap().value, b(5));
        assert!(limit_genus_sum(&[]).is_err());
        assert_eq!(multisecant_genus(1, 7).unwrap().value, b(7));
        assert_eq!(multisecant_genus(5, 1).unwrap().value, b(1));
        assert_eq!(multisecant_genus(3, 2).unwrap().value, b(4));
        let d = 6;
        assert_eq!(severi_dim_bound(4, -4 * d).unwrap().value, b(4 - 1 + 4 * d));
        assert_eq!(severi_dim_bound(4, -1).unwrap().value, b(4));
        assert_eq!(severi_dim_bound(3, 5).unwrap().value, b(3));
    }

    #[test]
    fn dimensions_and_genera() {
        assert_eq!(linear_system_dim(1), b(3));
        assert_eq!(linear_system_dim(2), b(9));
        for d in 1..30 {
            assert_eq!(arithmetic_genus(d, 1), binomial(d - 1, 2));
        }
        for d in 3..=50 {
            let lhs = linear_system_dim(d) - linear_system_dim(d - 2) - linear_system_dim(2) - 1;
            assert_eq!(lhs, arithmetic_genus(d, 2) + 4 * d - 10);
        }
        assert_eq!(linear_system_dim(3) - linear_system_dim(1) - linear_system_dim(2) - 1, b(6));
    }

    #[test]
    fn node_counts() {
        let g = arithmetic_genus(7, 1);
        let r = node_count_and_dim(7, 1, g.try_into().unwrap()).unwrap();
        assert_eq!((r.nu_nodes, r.dim), (b(0), b(3)));
        let r = node_count_and_dim(5, 1, 3).unwrap();
        assert_eq!((r.nu_nodes, r.dim), (b(3), b(0)));
        let r = node_count_and_dim(5, 2, 16).unwrap();
        assert_eq!((r.nu_nodes, r.dim), (b(0), b(9)));
        assert!(matches!(node_count_and_dim(5, 1, 2), Err(BoundError::OutsideWindow { .. })));
        assert!(node_count_and_dim(5, 3, 2).is_err());
    }

    #[test]
    fn degree_bound_strict() {
        let r = degree_bound(6, 2).unwrap();
        assert_eq!(r.value, b(3));
        assert_eq!(r.related("gamma"), Some(&b(5)));
        assert!(!r.assumptions.is_empty());
        assert!(degree_bound(6, 1).is_err());
        // γ(7,3) = 12, (12-1)/2 = 5.5, so n = 5.
        assert_eq!(degree_bound(7, 3).unwrap().value, b(5));
    }

    #[test]
    fn thresholds() {
        let r = cor_bound_threshold(6).unwrap();
        assert_eq!(r.value, b(5));
        assert_eq!(r.related("stated_max_genus"), Some(&b(5)));
        assert_eq!(r.related("strict_max_genus"), Some(&b(4)));
        assert!(!r.notes.is_empty());
        assert_eq!(cor_bound_threshold(8).unwrap().value, b(16));
        assert_eq!(cor_bound_threshold(9).unwrap().value, b(27));
        for d in 7..=100 {
            let r = cor_bound_threshold(d).unwrap();
            assert_eq!(Some(&r.value), r.related("closed_form"), "d = {d}");
        }
        let rows = threshold_table(6, 9).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[2].cutoff, "16");
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho_surface(4).unwrap().value, b(1));
        assert_eq!(rho_double_lower(5).unwrap().value, b(1));
        for d in 5..=50 {
            assert_eq!(rho_double_recursion(d), binomial(d - 1, 4));
        }
        assert_eq!(threefold_genus_bound(10).unwrap().value, b(84));
        assert_eq!(binomial(7, 4), binomial(7, 3));
        for d in 8..=20 {
            assert_eq!(threefold_genus_bound(d).unwrap().value, binomial(d - 1, 3));
        }
        assert_eq!(threefold_genus_bound(7).unwrap().value, binomial(6, 4));
    }

    #[test]
    fn report_json() {
        let r = cor_bound_threshold(6).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"value\":\"5\""));
        let back: BoundReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
