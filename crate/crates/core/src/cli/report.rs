//! Command reports: canonical JSON and aligned text.

use serde_json::{json, Map, Value};

/// Outcome of one command. JSON objects keep their keys sorted, so the
/// serialized form depends only on the content.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results: Value::Null,
            warnings: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
            "exit_code": self.exit_code,
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.command));
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "results", &self.results);
        if !self.warnings.is_empty() {
            out.push_str("warnings\n");
            for w in &self.warnings {
                out.push_str(&format!("  - {w}\n"));
            }
        }
        out.push_str(&format!("exit code {}\n", self.exit_code));
        out
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|v| !v.is_object()) => {
            format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn section(out: &mut String, title: &str, value: &Value) {
    out.push_str(&format!("{title}\n"));
    match value {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (key, v) in map {
                match table_rows(v) {
                    Some(rows) => {
                        out.push_str(&format!("  {key}\n"));
                        table(out, rows);
                    }
                    None => out.push_str(&format!("  {key:<width$}  {}\n", scalar(v))),
                }
            }
        }
        other => out.push_str(&format!("  {}\n", scalar(other))),
    }
}

fn table_rows(value: &Value) -> Option<&Vec<Value>> {
    match value {
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_object) => Some(rows),
        _ => None,
    }
}

fn table(out: &mut String, rows: &[Value]) {
    let empty = Map::new();
    let columns: Vec<&String> = rows[0].as_object().unwrap_or(&empty).keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| scalar(r.get(c.as_str()).unwrap_or(&Value::Null))).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<String>| -> String {
        let padded: Vec<String> = items.iter().zip(&widths).map(|(s, &w)| format!("{s:<w$}")).collect();
        format!("    {}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(columns.iter().map(|c| c.to_string()).collect()));
    for row in cells {
        out.push_str(&line(row));
    }
}
