//! Text formats for matrices, polynomials and certificates.
//!
//! * Matrix JSON: an array of rows; entries are JSON integers or `"p/q"`
//!   strings.
//! * Matrix text: one row per line, entries separated by whitespace. Blank
//!   lines and lines starting with `#` are skipped.
//! * Polynomial: a JSON coefficient list from low to high degree, e.g.
//!   `[-1, 0, 1]` for `z² - 1`.
//! * Certificate JSON: `{torsion, d, k, J, preperiod, period, mu}` in that
//!   order; `J`, `preperiod` and `period` are `null` for non-torsion.
//!
//! Everything is exact. Floats are rejected on input and never produced.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::error::ParseError;
use crate::matrix::RatMatrix;
use crate::poly::RatPoly;
use crate::rational::{self, Rational, TokenError};
use crate::torsion::TorsionCertificate;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixFormat {
    #[default]
    Json,
    Text,
}

/// JSON number for an integer literal of any size.
pub fn json_integer<T: ToString>(n: T) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

/// Integers become JSON numbers, other rationals `"p/q"` strings.
pub fn rational_to_json(r: &Rational) -> Value {
    if r.is_integer() {
        json_integer(r.numer())
    } else {
        Value::String(rational::format_rational(r))
    }
}

fn json_token(v: &Value) -> Option<String> {
    match v {
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn cell(token: &str, row: usize, col: usize) -> Result<Rational, ParseError> {
    rational::parse_token(token).map_err(|e| match e {
        TokenError::ZeroDenominator => ParseError::ZeroDenominator { row, col },
        TokenError::Malformed => ParseError::MalformedToken {
            row,
            col,
            token: token.to_string(),
        },
    })
}

fn square(rows: Vec<Vec<Rational>>) -> Result<RatMatrix, ParseError> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 {
        return Err(ParseError::EmptyMatrix);
    }
    if cols != rows.len() {
        return Err(ParseError::NonSquare {
            rows: rows.len(),
            cols,
        });
    }
    Ok(RatMatrix::from_rows(rows).expect("checked square"))
}

pub fn parse_matrix(input: &[u8], format: MatrixFormat) -> Result<RatMatrix, ParseError> {
    let text = std::str::from_utf8(input).map_err(|_| ParseError::InvalidUtf8)?;
    match format {
        MatrixFormat::Json => {
            let value: Value =
                serde_json::from_str(text).map_err(|e| ParseError::InvalidJson(e.to_string()))?;
            matrix_from_json(&value)
        }
        MatrixFormat::Text => parse_matrix_text(text),
    }
}

pub fn matrix_from_json(value: &Value) -> Result<RatMatrix, ParseError> {
    let rows = value
        .as_array()
        .ok_or(ParseError::Expected("an array of rows"))?;
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or(ParseError::RowNotArray(i + 1))?;
        if let Some(first) = out.first() {
            if row.len() != first.len() {
                return Err(ParseError::RaggedRow(i + 1));
            }
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let token = json_token(v).ok_or_else(|| ParseError::MalformedToken {
                    row: i + 1,
                    col: j + 1,
                    token: v.to_string(),
                })?;
                cell(&token, i + 1, j + 1)
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    square(out)
}

fn parse_matrix_text(text: &str) -> Result<RatMatrix, ParseError> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    for (i, line) in lines.enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if let Some(first) = out.first() {
            if tokens.len() != first.len() {
                return Err(ParseError::RaggedRow(i + 1));
            }
        }
        let parsed = tokens
            .iter()
            .enumerate()
            .map(|(j, t)| cell(t, i + 1, j + 1))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    square(out)
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(rational_to_json).collect()))
            .collect(),
    )
}

pub fn emit_matrix(m: &RatMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Json => matrix_to_json(m).to_string(),
        MatrixFormat::Text => m.to_string(),
    }
}

pub fn poly_to_json(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(value: &Value) -> Result<RatPoly, ParseError> {
    let items = value
        .as_array()
        .ok_or(ParseError::Expected("a coefficient list"))?;
    let coeffs = items
        .iter()
        .enumerate()
        .map(|(index, v)| {
            json_token(v)
                .and_then(|t| rational::parse_token(&t).ok())
                .ok_or_else(|| ParseError::MalformedCoefficient {
                    index,
                    token: v.to_string(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatPoly::new(coeffs))
}

pub fn parse_poly(text: &str) -> Result<RatPoly, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::InvalidJson(e.to_string()))?;
    poly_from_json(&value)
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    torsion: bool,
    d: usize,
    k: usize,
    #[serde(rename = "J")]
    indices: Option<Vec<u64>>,
    preperiod: Option<usize>,
    period: Option<Number>,
    mu: Value,
}

pub fn certificate_to_json(c: &TorsionCertificate) -> Value {
    let doc = CertificateDoc {
        torsion: c.torsion,
        d: c.d,
        k: c.k,
        indices: c.cyclotomic.as_ref().map(|j| j.iter().copied().collect()),
        preperiod: c.preperiod,
        period: c
            .period
            .as_ref()
            .map(|p| Number::from_str(&p.to_string()).expect("integer")),
        mu: poly_to_json(&c.mu),
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn certificate_from_json(text: &str) -> Result<TorsionCertificate, ParseError> {
    let doc: CertificateDoc =
        serde_json::from_str(text).map_err(|e| ParseError::InvalidCertificate(e.to_string()))?;
    let period = doc
        .period
        .map(|n| {
            BigUint::from_str(&n.to_string())
                .map_err(|_| ParseError::InvalidCertificate(format!("period `{n}`")))
        })
        .transpose()?;
    let indices = doc
        .indices
        .map(|v| v.into_iter().collect::<BTreeSet<u64>>());
    Ok(TorsionCertificate {
        torsion: doc.torsion,
        d: doc.d,
        k: doc.k,
        cyclotomic: indices,
        preperiod: doc.preperiod,
        period,
        mu: poly_from_json(&doc.mu)?,
    })
}
