//! Report documents for both output formats.

use std::fmt::Write as _;

use cohomlie::{CohomologyDimensions, ValidationReport};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::document::{format_vector, SCHEMA_VERSION};

/// Result of one run. `results` is an object whose keys are sorted, so the
/// machine form is byte-stable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub input_digest: String,
    pub exit_status: i32,
    pub results: Value,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl ReportDocument {
    pub fn new(command: &str, input: &[u8], exit_status: i32, results: Value) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input_digest: digest(input),
            exit_status,
            results,
        }
    }

    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (exit {})", self.command, self.exit_status);
        let _ = writeln!(out, "input {}", self.input_digest);
        render(&mut out, &self.results, 0);
        out
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(out, x, depth + 1);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(x));
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    let _ = writeln!(out, "{pad}- {}", inline(x));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(out, x, depth + 1);
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", inline(v));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array())
            || items.iter().all(|x| matches!(x, Value::Array(a) if a.iter().all(|y| !y.is_object() && !y.is_array()))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

/// Checks with their witnesses; defects are rational strings.
pub fn validation_json(report: &ValidationReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let witnesses: Vec<Value> = c
                .witnesses
                .iter()
                .map(|w| json!({ "indices": w.indices, "defect": format_vector(&w.defect) }))
                .collect();
            json!({ "name": c.name, "passed": c.passed, "witnesses": witnesses })
        })
        .collect();
    json!({ "passed": report.passed(), "checks": checks })
}

pub fn dimensions_json(d: &CohomologyDimensions) -> Value {
    json!({
        "degree": d.degree,
        "cochains": d.dim_cochains,
        "cocycles": d.dim_cocycles,
        "coboundaries": d.dim_coboundaries,
        "cohomology": d.dim_cohomology,
    })
}
