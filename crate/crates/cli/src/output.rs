use std::str::FromStr;

use degentropy_core::{DegreeSequence, LabeledGraph};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected text, json or csv)")),
        }
    }
}

/// Whether the command's own checks passed. Drives exit status 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailure,
}

/// The JSON schema shared by every command. `params` and each result are
/// plain JSON values whose object keys serialize in sorted order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub params: Value,
    pub results: Vec<Value>,
    pub version: String,
}

pub struct Output {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub results: Vec<Value>,
    pub text: String,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub outcome: Outcome,
}

impl Output {
    pub fn envelope(&self) -> Envelope {
        Envelope {
            command: self.command.to_string(),
            params: Value::Object(self.params.clone()),
            results: self.results.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => serde_json::to_string_pretty(&self.envelope())
                .map(|s| s + "\n")
                .map_err(|e| e.to_string()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header)
                    .map_err(|e| e.to_string())?;
                for row in &self.csv_rows {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

/// Fixed-point rendering; exact decimal ties round to even. Negative zero
/// prints without a sign.
pub fn decimal(x: f64, digits: usize) -> String {
    let s = format!("{x:.digits$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// Shortest round-trip form, scientific below `1e-3`.
pub fn number(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-3 {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn edges_json(g: &LabeledGraph) -> Value {
    Value::Array(g.edges().into_iter().map(|(u, v)| json!([u, v])).collect())
}

pub fn edges_inline(g: &LabeledGraph) -> String {
    g.edges()
        .into_iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn degrees_json(d: &DegreeSequence) -> Value {
    json!(d.degrees())
}
