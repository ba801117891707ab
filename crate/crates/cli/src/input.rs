//! Matrix documents and polynomial arguments.
//!
//! A document is either a JSON object `{"name": ..., "matrix": [[...], ...]}`
//! or a bare matrix: one row per line, entries separated by whitespace.
//! In bare mode blank lines and lines starting with `#` are skipped, except
//! `# name: <label>`, which sets the name.

use std::io::Read;
use std::path::Path;

use concordance::seifert::{validate, ValidityFailure};
use concordance::{IntPolynomial, SeifertMatrix};
use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("line {line}: `{token}` is not an integer")]
    BadInteger { line: usize, token: String },
    #[error("invalid Seifert matrix: {0}")]
    Invalid(ValidityFailure),
    #[error("bad polynomial: {0}")]
    Delta(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub name: String,
    pub matrix: SeifertMatrix,
}

#[derive(Deserialize)]
struct JsonDocument {
    name: Option<String>,
    matrix: Vec<Vec<serde_json::Number>>,
}

/// Reads a whole file, or standard input for `None` or `-`. Also returns a
/// default document name.
pub fn read_source(path: Option<&Path>) -> Result<(String, String), InputError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).map_err(|source| InputError::Io {
                path: p.display().to_string(),
                source,
            })?;
            let name = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".into());
            Ok((text, name))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| InputError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok((text, "stdin".into()))
        }
    }
}

pub fn parse_document(text: &str, default_name: &str) -> Result<MatrixDocument, InputError> {
    let (name, rows) = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        parse_bare(text)?
    };
    let report = validate(&rows);
    if let Some(f) = report.failure {
        return Err(InputError::Invalid(f));
    }
    let matrix = SeifertMatrix::new(rows).expect("validated above");
    Ok(MatrixDocument {
        name: name.unwrap_or_else(|| default_name.to_string()),
        matrix,
    })
}

fn parse_json(text: &str) -> Result<(Option<String>, Vec<Vec<BigInt>>), InputError> {
    let doc: JsonDocument =
        serde_json::from_str(text).map_err(|e| InputError::Malformed(e.to_string()))?;
    let rows = doc
        .matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|x| {
                    let s = x.to_string();
                    s.parse::<BigInt>().map_err(|_| InputError::BadInteger {
                        line: i + 1,
                        token: s,
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Ok((doc.name, rows))
}

fn parse_bare(text: &str) -> Result<(Option<String>, Vec<Vec<BigInt>>), InputError> {
    let mut name = None;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(label) = comment.trim().strip_prefix("name:") {
                name = Some(label.trim().to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>().map_err(|_| InputError::BadInteger {
                    line: i + 1,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok((name, rows))
}

/// Bare-mode rendering; parses back to the same document.
pub fn format_document(doc: &MatrixDocument) -> String {
    let mut out = format!("# name: {}\n", doc.name);
    for row in doc.matrix.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Ascending coefficients separated by commas and/or whitespace.
pub fn parse_delta(s: &str) -> Result<IntPolynomial, InputError> {
    let coeffs = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| InputError::Delta(format!("`{t}` is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(InputError::Delta("no coefficients".into()));
    }
    Ok(IntPolynomial::new(coeffs))
}
