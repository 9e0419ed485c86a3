use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
}

/// The outcome of one command: a keyed table plus an optional text artifact.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// A generated file (presentation or algebra) under the given key.
    pub artifact: Option<(&'static str, String)>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Report {
        Report {
            command,
            inputs: Map::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
            artifact: None,
            status: Status::Ok,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn row(&mut self, values: Vec<Value>) {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(values);
    }

    pub fn fail_unless(&mut self, ok: bool) {
        if !ok {
            self.status = Status::Failed;
        }
    }

    /// `{"command", "inputs", "results", "status"}` with results keyed by the first column.
    pub fn to_json(&self) -> Value {
        let mut results = Map::new();
        for row in &self.rows {
            let key = match &row[0] {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let fields: Map<String, Value> =
                self.columns[1..].iter().map(|c| c.to_string()).zip(row[1..].iter().cloned()).collect();
            results.insert(key, Value::Object(fields));
        }
        if let Some((key, text)) = &self.artifact {
            results.insert(key.to_string(), Value::String(text.clone()));
        }
        let mut out = Map::new();
        out.insert("command".into(), self.command.into());
        out.insert("inputs".into(), Value::Object(self.inputs.clone()));
        out.insert("results".into(), Value::Object(results));
        out.insert("status".into(), serde_json::to_value(self.status).expect("status serializes"));
        Value::Object(out)
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| csv_cell(&plain(v))).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if !self.rows.is_empty() {
            let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(plain).collect()).collect();
            let widths: Vec<usize> = (0..self.columns.len())
                .map(|c| cells.iter().map(|r| r[c].len()).chain([self.columns[c].len()]).max().unwrap_or(0))
                .collect();
            let line = |items: Vec<&str>| {
                let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(self.columns.clone()));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
            }
        }
        if let Some((_, text)) = &self.artifact {
            out.push_str(text);
        }
        if self.status == Status::Failed {
            out.push_str("FAILED\n");
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
