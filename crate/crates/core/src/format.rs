//! Matrix file formats shared by the library, the CLI and the C API.
//!
//! * grid: one row per line, base-10 integers separated by single spaces, no header.
//! * JSON: `{"order": n, "rows": [[...], ...]}`.

use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::exactmat::{serde_int, ExactInt, RationalMatrix, SquareMatrix};
use crate::error::{Error, Result};

pub fn parse_grid(text: &str) -> Result<SquareMatrix> {
    let mut rows: Vec<Vec<ExactInt>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                ExactInt::from_str(tok)
                    .map_err(|_| Error::parse(line_no, format!("not an integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::parse(
                    line_no,
                    format!("ragged row: expected {} elements, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(1, "empty matrix"));
    }
    if rows.len() != rows[0].len() {
        return Err(Error::parse(
            rows.len(),
            format!("matrix is {}x{}, not square", rows.len(), rows[0].len()),
        ));
    }
    SquareMatrix::from_rows(&rows)
}

pub fn to_grid(m: &SquareMatrix) -> String {
    m.to_string()
}

pub fn to_json_value(m: &SquareMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .map(|r| Value::Array(r.iter().map(serde_int::to_json).collect()))
        .collect();
    json!({ "order": m.order(), "rows": rows })
}

pub fn to_json(m: &SquareMatrix) -> String {
    serde_json::to_string(&to_json_value(m)).expect("matrix JSON is always serializable")
}

pub fn parse_json(text: &str) -> Result<SquareMatrix> {
    let v: Value = serde_json::from_str(text)?;
    from_json_value(&v)
}

pub fn from_json_value(v: &Value) -> Result<SquareMatrix> {
    let rows = v
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(1, "missing \"rows\" array"))?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.as_array()
                .ok_or_else(|| Error::parse(i + 1, "row is not an array"))?
                .iter()
                .map(|e| {
                    serde_int::from_json(e)
                        .ok_or_else(|| Error::parse(i + 1, format!("not an integer: {e}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = SquareMatrix::from_rows(&parsed).map_err(|e| Error::parse(1, e.to_string()))?;
    if let Some(order) = v.get("order") {
        if order.as_u64() != Some(m.order() as u64) {
            return Err(Error::parse(1, format!("declared order {order} does not match rows")));
        }
    }
    Ok(m)
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_matrix(text: &str) -> Result<SquareMatrix> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_grid(text)
    }
}

pub fn read_matrix(path: &Path) -> Result<SquareMatrix> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

pub fn rational_to_json_value(m: &RationalMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .map(|r| Value::Array(r.iter().map(|q| Value::from(q.to_string())).collect()))
        .collect();
    json!({ "order": m.order(), "rows": rows })
}
