//! JSON form of matrices: an array of rows, each entry a string such as
//! `"3"`, `"-1/2"` or `"0.25"`. Plain JSON integers are also accepted on
//! input. Output always uses the `p/q` form, so values round-trip exactly.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::matrix::ExactMatrix;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("expected a rational string, found {other}"))),
    }
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn matrix_to_json(m: &ExactMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row_slice(i))).collect())
}

/// Parses the array-of-arrays form. `[]` is the `0 x 0` matrix.
pub fn matrix_from_json(v: &Value) -> Result<ExactMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be a JSON array of rows".into()))?;
    let mut data = Vec::new();
    let mut cols = None;
    for row in rows {
        let row = row.as_array().ok_or_else(|| Error::Parse("matrix row must be a JSON array".into()))?;
        match cols {
            None => cols = Some(row.len()),
            Some(c) if c != row.len() => return Err(Error::Parse("matrix rows have different lengths".into())),
            Some(_) => {}
        }
        for x in row {
            data.push(rational_from_json(x)?);
        }
    }
    ExactMatrix::new(rows.len(), cols.unwrap_or(0), data)
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows()))?;
        for i in 0..self.rows() {
            let row: Vec<String> = self.row_slice(i).iter().map(format_rational).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        matrix_from_json(&v).map_err(de::Error::custom)
    }
}
