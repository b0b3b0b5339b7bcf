use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use scrollkit::report::Status;

use crate::commands::{resolve_format, RunReport, Table};
use crate::{Command, Format, GlobalOpts};

pub fn emit(report: &RunReport, global: &GlobalOpts, command: &Command) -> Result<(), String> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let text = match resolve_format(global, command) {
        Format::Json => serde_json::to_string_pretty(report).map_err(|e| e.to_string())? + "\n",
        Format::Csv => match &report.table {
            Some(Table::Invariants(rows)) => csv_text(rows)?,
            Some(Table::Thresholds(rows)) => csv_text(rows)?,
            None => return Err("no table to write as csv".into()),
        },
        Format::Text => text_report(report),
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn csv_text<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn text_report(r: &RunReport) -> String {
    let mut lines = Vec::new();
    let mut result = r.result.clone();
    if let Some(map) = result.as_object_mut() {
        map.remove("checks");
    }
    flatten("", &result, &mut lines);
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = format!("{} {}\n", r.tool, r.version);
    for (k, v) in &lines {
        s += &format!("{k:width$}  {v}\n");
    }
    if !r.checks.is_empty() {
        s += "checks:\n";
        for c in &r.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Flag => "FLAG",
                Status::NotChecked => "SKIP",
            };
            s += &format!("  {tag} {}: {}\n", c.name, c.detail);
        }
    }
    s += &format!("elapsed {:.3} ms\n", r.timing.elapsed_ms);
    s
}
