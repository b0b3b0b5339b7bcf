use std::io::Read;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use scrollkit::bounds::{self, BoundError, CycleComponent, ThresholdRow};
use scrollkit::exactalg::parse_poly;
use scrollkit::invariants::{self, InvariantError, InvariantRow};
use scrollkit::report::{Check, Status};
use scrollkit::scrollgen::{
    construct, implicitize, BiForm, BiFormJson, GenConfig, ScrollError, ScrollModel, ScrollModelJson, BI_VARS,
};
use scrollkit::selftest::{run_selftest, CriterionTiming, SelftestConfig};
use scrollkit::verify::{verify, VerifyConfig};

use crate::{BoundOp, CliError, Command, Format, GlobalOpts};

#[derive(Serialize, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    pub output_format: Format,
    pub retry_budget: u32,
    pub coefficient_range: u32,
}

#[derive(Serialize, Debug, Default)]
pub struct Timing {
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionTiming>,
}

pub enum Table {
    Invariants(Vec<InvariantRow>),
    Thresholds(Vec<ThresholdRow>),
}

/// Everything a run produces. Serialized with `timing` last so that
/// reports from equal configurations agree up to that field.
#[derive(Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub result: Value,
    pub checks: Vec<Check>,
    pub timing: Timing,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl RunReport {
    pub fn any_failed(&self) -> bool {
        scrollkit::report::any_failed(&self.checks)
    }
}

pub fn resolve_format(global: &GlobalOpts, command: &Command) -> Format {
    global.format.unwrap_or(if produces_table(command) { Format::Csv } else { Format::Json })
}

fn produces_table(command: &Command) -> bool {
    matches!(
        command,
        Command::Sweep { .. } | Command::Bounds { op: BoundOp::Threshold { table: true, .. } }
    )
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn scroll_err(e: ScrollError) -> CliError {
    match e {
        ScrollError::BudgetExhausted { .. } => CliError::Failure(format!("{e}; rerun with this seed to reproduce")),
        e => CliError::Usage(e.to_string()),
    }
}

fn inv_err(e: InvariantError) -> CliError {
    CliError::Usage(e.to_string())
}

fn bound_err(e: BoundError) -> CliError {
    match e {
        BoundError::RecursionMismatch(_) => CliError::Failure(e.to_string()),
        e => CliError::Usage(e.to_string()),
    }
}

pub fn run(global: &GlobalOpts, command: &Command) -> Result<RunReport, CliError> {
    let format = resolve_format(global, command);
    if format == Format::Csv && !produces_table(command) {
        return Err(CliError::Usage(
            "csv output is available for `sweep` and `bounds threshold --table` only".into(),
        ));
    }
    let start = Instant::now();
    let mut report = RunReport {
        tool: "scrollkit",
        version: env!("CARGO_PKG_VERSION"),
        config: RunConfig {
            command: command.clone(),
            seed: global.seed,
            output_format: format,
            retry_budget: global.retry_budget,
            coefficient_range: global.coefficient_range,
        },
        result: Value::Null,
        checks: Vec::new(),
        timing: Timing::default(),
        table: None,
    };
    match command {
        Command::Construct { a, b } => {
            let cfg = GenConfig {
                coefficient_range: global.coefficient_range,
                retry_budget: global.retry_budget,
            };
            let m = construct(*a, *b, global.seed, &cfg).map_err(scroll_err)?;
            report.checks.push(Check::expect("curve smooth", m.smooth, "redrawn until smooth"));
            report.result = to_value(&ScrollModelJson::from(&m));
        }
        Command::Verify { input, poly, rulings } => {
            let (text, source) = read_input(input.as_deref(), poly.as_deref())?;
            let model = load_model(&text).map_err(|e| CliError::Usage(format!("{source}: {e}")))?;
            let cfg = VerifyConfig {
                seed: global.seed,
                secancy_rulings: *rulings,
                retry_budget: global.retry_budget,
                coefficient_range: global.coefficient_range,
            };
            let r = verify(&model, &cfg);
            report.checks = r.checks.clone();
            report.result = to_value(&r);
        }
        Command::Invariants { d, g } => {
            let r = invariants::consistency_report(*d, *g).map_err(inv_err)?;
            report.checks = r.checks.clone();
            report.result = to_value(&r.invariants);
        }
        Command::Bounds { op } => {
            let (value, table) = run_bound(op)?;
            report.result = value;
            report.table = table;
        }
        Command::Sweep { d_min, d_max } => {
            if d_min > d_max {
                return Err(CliError::Usage(format!("empty degree range {d_min}..{d_max}")));
            }
            let rows = invariants::sweep(*d_min, *d_max).map_err(inv_err)?;
            let rows: Vec<InvariantRow> = rows.iter().map(InvariantRow::from).collect();
            report.result = to_value(&rows);
            report.table = Some(Table::Invariants(rows));
        }
        Command::Selftest {
            sweep_seeds,
            max_bidegree,
            property_cases,
        } => {
            let cfg = SelftestConfig {
                seed: global.seed,
                sweep_seeds: *sweep_seeds,
                max_bidegree: *max_bidegree,
                property_cases: *property_cases,
                retry_budget: global.retry_budget,
                coefficient_range: global.coefficient_range,
            };
            let r = run_selftest(&cfg);
            report.checks = r
                .criteria
                .iter()
                .map(|c| {
                    let failing: Vec<String> = c
                        .checks
                        .iter()
                        .filter(|k| k.status != Status::Pass)
                        .map(|k| format!("{}: {}", k.name, k.detail))
                        .collect();
                    Check::new(format!("criterion {}: {}", c.id, c.name), c.status, failing.join("; "))
                })
                .collect();
            report.result = json!({ "criteria": r.criteria });
            report.timing.criteria = r.timing;
        }
    }
    report.timing.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn read_input(path: Option<&str>, poly: Option<&str>) -> Result<(String, String), CliError> {
    match (path, poly) {
        (_, Some(p)) => Ok((p.to_string(), "--poly".into())),
        (Some("-"), None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            Ok((s, "stdin".into()))
        }
        (Some(p), None) => std::fs::read_to_string(p)
            .map(|s| (s, p.to_string()))
            .map_err(|e| CliError::Usage(format!("{p}: {e}"))),
        (None, None) => Err(CliError::Usage("verify needs an input file or --poly".into())),
    }
}

/// A `construct` report or its `result`, a bidegree JSON, or polynomial text.
fn load_model(text: &str) -> Result<ScrollModel, String> {
    if !text.trim_start().starts_with('{') {
        let p = parse_poly(text, Some(&BI_VARS)).map_err(|e| e.to_string())?;
        let f = BiForm::new(&p).map_err(|e| e.to_string())?;
        return Ok(implicitize(&f));
    }
    let mut v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    if v.get("tool").is_some() {
        v = v.get("result").cloned().ok_or("report has no result")?;
    }
    if v.get("P").is_some() {
        let j: ScrollModelJson = serde_json::from_value(v).map_err(|e| format!("scroll model: {e}"))?;
        j.to_model().map_err(|e| e.to_string())
    } else {
        let j: BiFormJson = serde_json::from_value(v).map_err(|e| format!("curve: {e}"))?;
        Ok(implicitize(&j.to_biform().map_err(|e| e.to_string())?))
    }
}

fn run_bound(op: &BoundOp) -> Result<(Value, Option<Table>), CliError> {
    let rep = |r: Result<bounds::BoundReport, BoundError>| r.map(|r| to_value(&r)).map_err(bound_err);
    let value = match op {
        BoundOp::Eta3 { d } => rep(bounds::eta3(*d))?,
        BoundOp::Eta { n, d } => to_value(&bounds::eta_lookup(*n, *d)),
        BoundOp::Albanese { components } => {
            let cs: Vec<CycleComponent> = components.iter().map(|&(m, g)| CycleComponent { m, g }).collect();
            rep(bounds::albanese_bound(&cs))?
        }
        BoundOp::LimitSum { rhos } => rep(bounds::limit_genus_sum(rhos))?,
        BoundOp::Multisecant { nu, g } => rep(bounds::multisecant_genus(*nu, *g))?,
        BoundOp::Severi { g, kappa } => rep(bounds::severi_dim_bound(*g, *kappa))?,
        BoundOp::LinearSystem { d } => {
            if *d < 0 {
                return Err(CliError::Usage(format!("degree {d} < 0")));
            }
            json!({ "value": bounds::linear_system_dim(*d).to_string(), "kind": "exact" })
        }
        BoundOp::ArithmeticGenus { d, n } => {
            if *d < 1 || *n < 1 {
                return Err(CliError::Usage(format!("need d, n >= 1, got ({d}, {n})")));
            }
            json!({ "value": bounds::arithmetic_genus(*d, *n).to_string(), "kind": "exact" })
        }
        BoundOp::Nodes { d, n, g } => to_value(&bounds::node_count_and_dim(*d, *n, *g).map_err(bound_err)?),
        BoundOp::DegreeBound { d, g } => rep(bounds::degree_bound(*d, *g))?,
        BoundOp::Threshold {
            d,
            table,
            d_min,
            d_max,
        } => {
            if *table {
                if d_min > d_max {
                    return Err(CliError::Usage(format!("empty degree range {d_min}..{d_max}")));
                }
                let rows = bounds::threshold_table(*d_min, *d_max).map_err(bound_err)?;
                return Ok((to_value(&rows), Some(Table::Thresholds(rows))));
            }
            rep(bounds::cor_bound_threshold(d.expect("required without --table")))?
        }
        BoundOp::RhoSurface { d } => rep(bounds::rho_surface(*d))?,
        BoundOp::RhoDouble { d } => rep(bounds::rho_double_lower(*d))?,
        BoundOp::Threefold { d } => rep(bounds::threefold_genus_bound(*d))?,
    };
    Ok((value, None))
}
