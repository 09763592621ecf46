//! Output records shared by the simple commands.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::harness::text_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// How a field reads in the text rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `name = exact expression`
    Exact,
    /// `name ≈ decimal`
    Approx,
    /// `name: value`
    Info,
}

#[derive(Debug, Clone)]
struct Field {
    key: String,
    kind: Kind,
    /// Human form, possibly with `√`.
    text: String,
    /// ASCII form for CSV and JSON.
    ascii: String,
}

/// One result as ordered key/value fields.
#[derive(Debug, Clone, Default)]
pub struct Record {
    fields: Vec<Field>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    fn push(&mut self, key: &str, kind: Kind, text: String, ascii: String) -> &mut Self {
        self.fields.push(Field {
            key: key.to_string(),
            kind,
            text,
            ascii,
        });
        self
    }

    pub fn exact(&mut self, key: &str, text: impl ToString, ascii: impl ToString) -> &mut Self {
        self.push(key, Kind::Exact, text.to_string(), ascii.to_string())
    }

    pub fn approx(&mut self, key: &str, value: impl ToString) -> &mut Self {
        let v = value.to_string();
        self.push(key, Kind::Approx, v.clone(), v)
    }

    pub fn info(&mut self, key: &str, value: impl ToString) -> &mut Self {
        let v = value.to_string();
        self.push(key, Kind::Info, v.clone(), v)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Table => Ok(self
                .fields
                .iter()
                .map(|f| {
                    let sep = match f.kind {
                        Kind::Exact => " = ",
                        Kind::Approx => " ≈ ",
                        Kind::Info => ": ",
                    };
                    format!("{}{sep}{}\n", f.key, f.text)
                })
                .collect()),
            Format::Csv => {
                let keys: Vec<Vec<String>> =
                    vec![self.fields.iter().map(|f| f.ascii.clone()).collect()];
                rows_csv(
                    &self
                        .fields
                        .iter()
                        .map(|f| f.key.as_str())
                        .collect::<Vec<_>>(),
                    &keys,
                )
            }
            Format::Json => {
                let map: Map<String, Value> = self
                    .fields
                    .iter()
                    .map(|f| (f.key.clone(), Value::String(f.ascii.clone())))
                    .collect();
                json(&Value::Object(map))
            }
        }
    }
}

pub fn json(v: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Unsupported(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn rows_csv(headers: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Unsupported(e.to_string());
    w.write_record(headers).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Unsupported(e.to_string()))
}

/// A table of rows in any of the three formats.
pub fn rows(headers: &[&str], rows: &[Vec<String>], format: Format) -> Result<String> {
    match format {
        Format::Table => Ok(text_table(headers, rows)),
        Format::Csv => rows_csv(headers, rows),
        Format::Json => {
            let arr = rows
                .iter()
                .map(|r| {
                    Value::Object(
                        headers
                            .iter()
                            .zip(r)
                            .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                            .collect(),
                    )
                })
                .collect();
            json(&Value::Array(arr))
        }
    }
}
