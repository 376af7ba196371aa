use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use ribbon_census::bounds::LogValue;
use serde_json::{json, Value};

/// Real numbers are printed with 15 significant digits; integral values
/// print without a fraction and non-finite ones as `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let r: f64 = if x == 0.0 {
        0.0
    } else {
        format!("{x:.14e}").parse().expect("formatted float")
    };
    if r.fract() == 0.0 && r.abs() < 1e15 {
        Value::from(r as i64)
    } else {
        Value::from(r)
    }
}

/// Exact integers in full under the digit cap, otherwise the ln with an
/// overflow marker.
pub fn exact_or_overflow(v: &LogValue) -> Value {
    match &v.exact {
        Some(x) => Value::String(x.to_string()),
        None => json!({ "ln": num(v.ln), "overflow": true }),
    }
}

/// Flat view of a report for CSV.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub struct Report {
    pub json: Value,
    pub table: Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn render(report: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&report.json)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.table.header)?;
            for row in &report.table.rows {
                w.write_record(row.iter().map(cell))?;
            }
            Ok(w.into_inner().context("flushing csv")?)
        }
    }
}

pub fn emit(bytes: &[u8], path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}
