//! Flat key/value records rendered as JSON or CSV.
//!
//! Floats are always written with 17 significant digits so they round-trip
//! exactly, and both formats use the same formatter.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
    Floats(Vec<f64>),
    Violations(Vec<(f64, Vec<f64>)>),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputRecord {
    fields: Vec<(&'static str, Value)>,
}

impl OutputRecord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, value: Value) -> Self {
        self.fields.push((key, value));
        self
    }

    pub fn int(self, key: &'static str, v: impl Into<i64>) -> Self {
        self.with(key, Value::Int(v.into()))
    }

    pub fn float(self, key: &'static str, v: f64) -> Self {
        self.with(key, Value::Float(v))
    }

    pub fn text(self, key: &'static str, v: impl Into<String>) -> Self {
        self.with(key, Value::Text(v.into()))
    }

    pub fn fields(&self) -> &[(&'static str, Value)] {
        &self.fields
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.fields.iter().map(|(k, _)| *k)
    }
}

/// Output of one subcommand: a single record or a series of rows.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(OutputRecord),
    Rows(Vec<OutputRecord>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// 17 significant digits in scientific notation.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".to_string()
    } else if v > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

fn json_float(v: f64) -> String {
    if v.is_finite() {
        format_float(v)
    } else {
        "null".to_string()
    }
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Float(f) => json_float(*f),
        Value::Bool(b) => b.to_string(),
        Value::Text(s) => serde_json::Value::String(s.clone()).to_string(),
        Value::Floats(xs) => {
            let parts: Vec<String> = xs.iter().map(|x| json_float(*x)).collect();
            format!("[{}]", parts.join(","))
        }
        Value::Violations(vs) => {
            let parts: Vec<String> = vs
                .iter()
                .map(|(ratio, angles)| {
                    format!(
                        "{{\"ratio\":{},\"angles\":{}}}",
                        json_float(*ratio),
                        json_value(&Value::Floats(angles.clone()))
                    )
                })
                .collect();
            format!("[{}]", parts.join(","))
        }
    }
}

fn csv_value(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Float(f) => format_float(*f),
        Value::Bool(b) => b.to_string(),
        Value::Text(s) => {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
        Value::Floats(xs) => xs
            .iter()
            .map(|x| format_float(*x))
            .collect::<Vec<_>>()
            .join(";"),
        Value::Violations(vs) => vs
            .iter()
            .map(|(ratio, angles)| {
                format!(
                    "{}@{}",
                    format_float(*ratio),
                    csv_value(&Value::Floats(angles.clone()))
                )
            })
            .collect::<Vec<_>>()
            .join("|"),
    }
}

fn json_record(r: &OutputRecord) -> String {
    let parts: Vec<String> = r
        .fields
        .iter()
        .map(|(k, v)| {
            format!(
                "{}:{}",
                serde_json::Value::String((*k).to_string()),
                json_value(v)
            )
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn csv_row(r: &OutputRecord) -> String {
    r.fields
        .iter()
        .map(|(_, v)| csv_value(v))
        .collect::<Vec<_>>()
        .join(",")
}

impl Output {
    /// Renders the output, newline-terminated.
    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match (self, format) {
            (Output::Record(r), Format::Json) => {
                let _ = writeln!(out, "{}", json_record(r));
            }
            (Output::Rows(rows), Format::Json) => {
                let parts: Vec<String> = rows.iter().map(json_record).collect();
                let _ = writeln!(out, "{{\"rows\":[{}]}}", parts.join(","));
            }
            (Output::Record(r), Format::Csv) => {
                let _ = writeln!(out, "{}", r.keys().collect::<Vec<_>>().join(","));
                let _ = writeln!(out, "{}", csv_row(r));
            }
            (Output::Rows(rows), Format::Csv) => {
                if let Some(first) = rows.first() {
                    let _ = writeln!(out, "{}", first.keys().collect::<Vec<_>>().join(","));
                }
                for r in rows {
                    let _ = writeln!(out, "{}", csv_row(r));
                }
            }
        }
        out
    }
}
