//! JSON ingestion and serialization of complex matrices and weights.
//!
//! Matrix schema: `{"n": 2, "entries": [[[re, im], ...], ...]}` with one
//! `[re, im]` pair per entry; lossless for doubles via shortest-roundtrip
//! formatting. Weight schema: a plain array of positive samples.

use num_complex::Complex64;
use serde::Deserialize;
use subdiag::ComplexMatrix;

#[derive(Debug)]
pub enum MatIoError {
    /// The text is not valid JSON of the expected shape.
    Parse(String),
    /// The JSON is well formed but the data is rejected.
    Validation(String),
}

impl std::fmt::Display for MatIoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatIoError::Parse(m) => write!(f, "parse error: {m}"),
            MatIoError::Validation(m) => write!(f, "validation error: {m}"),
        }
    }
}

impl std::error::Error for MatIoError {}

#[derive(Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

/// Parses the matrix schema, validating squareness and finiteness.
pub fn parse_matrix_json(text: &str) -> Result<ComplexMatrix, MatIoError> {
    let raw: MatrixJson =
        serde_json::from_str(text).map_err(|e| MatIoError::Parse(e.to_string()))?;
    if raw.entries.len() != raw.n {
        return Err(MatIoError::Validation(format!(
            "expected {} rows, found {}",
            raw.n,
            raw.entries.len()
        )));
    }
    for (i, row) in raw.entries.iter().enumerate() {
        if row.len() != raw.n {
            return Err(MatIoError::Validation(format!(
                "row {i} has {} entries, expected {}",
                row.len(),
                raw.n
            )));
        }
        for (j, [re, im]) in row.iter().enumerate() {
            if !re.is_finite() || !im.is_finite() {
                return Err(MatIoError::Validation(format!(
                    "non-finite entry at ({i}, {j})"
                )));
            }
        }
    }
    let rows: Vec<Vec<Complex64>> = raw
        .entries
        .iter()
        .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows).map_err(|e| MatIoError::Validation(e.to_string()))
}

/// Serializes a matrix to the schema accepted by [`parse_matrix_json`].
#[cfg_attr(not(test), allow(dead_code))]
pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let entries: Vec<Vec<[f64; 2]>> = (0..n)
        .map(|i| (0..n).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect();
    serde_json::to_string(&serde_json::json!({ "n": n, "entries": entries }))
        .expect("matrix serializes")
}

/// Parses a weight file: a JSON array of strictly positive finite samples.
pub fn parse_weight_json(text: &str) -> Result<Vec<f64>, MatIoError> {
    let samples: Vec<f64> =
        serde_json::from_str(text).map_err(|e| MatIoError::Parse(e.to_string()))?;
    if samples.is_empty() {
        return Err(MatIoError::Validation("weight array is empty".into()));
    }
    for (i, &w) in samples.iter().enumerate() {
        if !w.is_finite() || w <= 0.0 {
            return Err(MatIoError::Validation(format!(
                "weight sample {i} must be positive and finite, found {w}"
            )));
        }
    }
    Ok(samples)
}
