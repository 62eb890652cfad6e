//! One result of one command, and its text rendering.
//!
//! Text mode prints `render_text(record)` for every record; JSON mode prints
//! the record itself as a single line. Because text is a pure function of
//! the record, parsing a JSON line and rendering it gives the same bytes as
//! text mode.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl OutputRecord {
    pub fn ok(command: &str, parameters: BTreeMap<String, Value>, result: Value) -> Self {
        Self { command: command.to_string(), parameters, result, status: Status::Ok, message: None }
    }

    pub fn error(command: &str, parameters: BTreeMap<String, Value>, message: String) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            result: Value::Null,
            status: Status::Error,
            message: Some(message),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}

fn list(v: &Value) -> String {
    match v.as_array() {
        Some(items) => items.iter().map(text).collect::<Vec<_>>().join(" "),
        None => text(v),
    }
}

fn pattern(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        Value::Object(map) => map
            .iter()
            .map(|(tag, arg)| format!("{tag}({})", text(arg)))
            .collect::<Vec<_>>()
            .join(","),
        other => other.to_string(),
    }
}

fn render_classification(r: &Value) -> String {
    let w = &r["witnesses"];
    let mut out = format!(
        "k={} l={} n={} verdict={} case={} multiplicities=[{}] t=[{}] pattern={}",
        text(&r["instance"]["k"]),
        text(&r["instance"]["l"]),
        text(&r["n"]),
        text(&r["verdict"]),
        text(&r["proof_case"]),
        list(&w["profile"]["multiplicities"]),
        list(&w["t_values"]),
        pattern(&w["pattern"]["pattern"]),
    );
    if let Some(obs) = w["obstruction"].as_object() {
        let _ = write!(
            out,
            " obstruction={} v2={} exponent={}",
            text(&obs["target"]),
            text(&obs["v2"]),
            text(&obs["exponent"])
        );
    }
    out
}

fn render_verify(r: &Value) -> String {
    let mut out = String::new();
    for check in r["checks"].as_array().into_iter().flatten() {
        let cases = text(&check["cases"]);
        let name = text(&check["name"]);
        match &check["counterexample"] {
            Value::Null => {
                let _ = writeln!(out, "PASS {name} ({cases} cases)");
            }
            ce => {
                let _ = writeln!(out, "FAIL {name} ({cases} cases): first counterexample: {}", text(ce));
            }
        }
    }
    out.push_str(if r["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" });
    out
}

/// The text-mode rendering of an `ok` record (no trailing newline). Error
/// records render as their message.
pub fn render_text(record: &OutputRecord) -> String {
    if record.status == Status::Error {
        return format!("error: {}", record.message.as_deref().unwrap_or("unknown error"));
    }
    let r = &record.result;
    match record.command.as_str() {
        "bernoulli" => text(&r["value"]),
        "poly" => r["coefficients"]
            .as_array()
            .into_iter()
            .flatten()
            .enumerate()
            .map(|(d, c)| format!("{d}: {}", text(c)))
            .collect::<Vec<_>>()
            .join("\n"),
        "profile" => format!(
            "multiplicities: {}\ndistinct_roots: {}\nzero_multiplicity: {}",
            list(&r["multiplicities"]),
            text(&r["distinct_count"]),
            text(&r["zero_multiplicity"])
        ),
        "classify" => render_classification(r),
        "search" => format!("{} {} {}", text(&r["x"]), text(&r["y"]), text(&r["n"])),
        "verify" => render_verify(r),
        _ => r.to_string(),
    }
}
