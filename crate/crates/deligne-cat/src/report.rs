//! Report construction and rendering for the batch interface.
//!
//! Every report is a JSON object carrying `"schema": 1`; numeric results are
//! tagged with a provenance marker distinguishing closed-form threshold
//! values, classifier-derived numbers, and oracle measurements.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Where a reported number comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Closed-form critical-rank threshold.
    #[serde(rename = "paper-threshold")]
    PaperThreshold,
    /// Computed from the classifier's combinatorial formulas.
    #[serde(rename = "derived")]
    Derived,
    /// Measured by the matrix oracle.
    #[serde(rename = "oracle")]
    Oracle,
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "pretty" => Ok(Format::Pretty),
            other => Err(Error::InvalidParameter(format!(
                "unknown format {other:?} (expected json, csv or pretty)"
            ))),
        }
    }
}

/// Per-rank row of a second-fundamental-theorem comparison run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SftRow {
    /// Tensor degree; for mixed powers the total k+l.
    pub r: usize,
    /// Split (k, l) for mixed tensor powers, absent otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<(usize, usize)>,
    /// Dimension of the diagram algebra at this rank.
    pub algebra_dim: u128,
    /// Rank of the comparison map φ (oracle).
    pub phi_rank: u128,
    /// dim ker φ (oracle).
    pub kernel_dim: u128,
    /// Classifier prediction: is φ injective at this rank?
    pub predicted_iso: bool,
    /// Classifier kernel dimension at the critical rank, if r = r_c.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_kernel_at_threshold: Option<u128>,
    /// True iff the oracle agrees with every prediction in this row.
    pub agree: bool,
}

/// Wraps a report body with the schema version and command name.
pub fn report(command: &str, body: serde_json::Value) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("schema".into(), 1u32.into());
    obj.insert("command".into(), command.into());
    if let serde_json::Value::Object(map) = body {
        for (k, v) in map {
            obj.insert(k, v);
        }
    }
    serde_json::Value::Object(obj)
}

/// Renders a report in the requested format. JSON output is canonical
/// (sorted keys, fixed indentation), so identical reports are byte-identical.
pub fn render(value: &serde_json::Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serialization");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(value),
        Format::Pretty => {
            let mut out = String::new();
            render_pretty(value, 0, &mut out);
            out
        }
    }
}

fn csv_cell(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(_) | serde_json::Value::Object(_) => {
            // embed compound values as quoted JSON
            let text = v.to_string().replace('"', "\"\"");
            format!("\"{text}\"")
        }
        other => other.to_string(),
    }
}

fn render_csv(value: &serde_json::Value) -> String {
    // A report with a "rows" array becomes one CSV record per row; anything
    // else becomes a two-column key,value listing.
    let mut out = String::new();
    if let Some(rows) = value.get("rows").and_then(|r| r.as_array()) {
        if let Some(serde_json::Value::Object(first)) = rows.first() {
            let headers: Vec<&String> = first.keys().collect();
            out.push_str(
                &headers
                    .iter()
                    .map(|h| h.as_str())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = headers
                    .iter()
                    .map(|h| row.get(h.as_str()).map(csv_cell).unwrap_or_default())
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        return out;
    }
    out.push_str("key,value\n");
    if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            out.push_str(&format!("{k},{}\n", csv_cell(v)));
        }
    }
    out
}

fn render_pretty(value: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                match v {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_)
                        if !is_flat(v) =>
                    {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_pretty(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", flat(v))),
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", flat(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_pretty(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", flat(other))),
    }
}

fn is_flat(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        serde_json::Value::Object(_) => false,
        _ => true,
    }
}

fn flat(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_carries_schema() {
        let r = report("params", json!({"m": 3, "n": 0, "r": 4}));
        assert_eq!(r["schema"], 1);
        assert_eq!(r["command"], "params");
        assert_eq!(r["r"], 4);
    }

    #[test]
    fn csv_rows() {
        let r = report(
            "sft",
            json!({"rows": [
                {"r": 1, "agree": true},
                {"r": 2, "agree": false},
            ]}),
        );
        let csv = render(&r, Format::Csv);
        assert_eq!(csv, "agree,r\ntrue,1\nfalse,2\n");
    }

    #[test]
    fn json_rendering_is_deterministic() {
        let r = report("nu", json!({"nu": [4, 4]}));
        assert_eq!(render(&r, Format::Json), render(&r, Format::Json));
        assert!(render(&r, Format::Json).ends_with('\n'));
        let pretty = render(&r, Format::Pretty);
        assert!(pretty.contains("nu: [4,4]"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
