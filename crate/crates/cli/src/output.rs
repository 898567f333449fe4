//! Columnar output shared by every subcommand.
//!
//! Floats are written with 12 significant digits and a `.` decimal point
//! regardless of locale. JSON values are parsed back from those same
//! strings so both formats carry identical numbers.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_number(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => format_number(*v)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    /// Many rows; CSV unless JSON is requested.
    Table(Table),
    /// A single row; `name = value` lines unless a format is requested.
    Record(Table),
}

impl Output {
    pub fn write(&self, format: Option<Format>, out: &mut dyn Write) -> Result<(), CliError> {
        match (self, format) {
            (Output::Record(t), None) => write_text(t, out),
            (Output::Table(t) | Output::Record(t), Some(Format::Json)) => write_json(t, out),
            (Output::Table(t), _) | (Output::Record(t), Some(Format::Csv)) => write_csv(t, out),
        }
    }
}

pub fn write_csv(table: &Table, out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.headers)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::render))?;
    }
    w.flush()?;
    Ok(())
}

fn write_json(table: &Table, out: &mut dyn Write) -> Result<(), CliError> {
    let records: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let map: Map<String, Value> = table
                .headers
                .iter()
                .zip(row)
                .map(|(h, c)| (h.to_string(), c.to_json()))
                .collect();
            Value::Object(map)
        })
        .collect();
    serde_json::to_writer_pretty(&mut *out, &records)?;
    writeln!(out)?;
    Ok(())
}

fn write_text(table: &Table, out: &mut dyn Write) -> Result<(), CliError> {
    for row in &table.rows {
        for (h, c) in table.headers.iter().zip(row) {
            writeln!(out, "{h} = {}", c.render())?;
        }
    }
    Ok(())
}

const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` with 12 significant digits, trailing zeros removed.
///
/// Exponents in `[-5, 6)` use positional notation and everything else uses
/// `<mantissa>e<exp>` (e.g. `6e8`, `1.602176634e-19`).
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if negative { "-" } else { "" };

    if (-5..6).contains(&exp) {
        let body = if exp < 0 {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        } else {
            let int_len = exp as usize + 1;
            if digits.len() > int_len {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            } else {
                format!("{}{}", digits, "0".repeat(int_len - digits.len()))
            }
        };
        format!("{sign}{body}")
    } else {
        let body = if digits.len() > 1 {
            format!("{}.{}", &digits[..1], &digits[1..])
        } else {
            digits.to_string()
        };
        format!("{sign}{body}e{exp}")
    }
}
