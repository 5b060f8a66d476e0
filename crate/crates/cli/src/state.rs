//! State-specification parsing: `bloch:x,y,z`, `polar:a,c,xi`, and
//! `matrix:@file.json`.

use qstar_core::{ComplexMatrix, DensityMatrix};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// JSON layout of a complex matrix: separate real and imaginary layers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<ComplexMatrix, CliError> {
        let m = ComplexMatrix::from_parts(&self.re, &self.im).map_err(CliError::from)?;
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(CliError::Usage(format!(
                "matrix JSON declares dim {} but carries a {}x{} grid",
                self.dim,
                m.rows(),
                m.cols()
            )));
        }
        Ok(m)
    }

    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        let grid = |f: fn(&qstar_core::Complex64) -> f64| {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| f(&m.get(i, j))).collect())
                .collect()
        };
        Self {
            dim: m.rows(),
            re: grid(|v| v.re),
            im: grid(|v| v.im),
        }
    }
}

fn parse_numbers(payload: &str, expected: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = payload.split(',').collect();
    if parts.len() != expected {
        return Err(CliError::Usage(format!(
            "{what} takes {expected} comma-separated numbers, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse `{p}` as a number")))
        })
        .collect()
}

/// Parse a state specification into a validated density matrix.
pub fn parse_state(spec: &str) -> Result<DensityMatrix, CliError> {
    if let Some(payload) = spec.strip_prefix("bloch:") {
        let v = parse_numbers(payload, 3, "bloch")?;
        return DensityMatrix::from_bloch(v[0], v[1], v[2]).map_err(CliError::from);
    }
    if let Some(payload) = spec.strip_prefix("polar:") {
        let v = parse_numbers(payload, 3, "polar")?;
        return DensityMatrix::from_polar(v[0], v[1], v[2]).map_err(CliError::from);
    }
    if let Some(path) = spec.strip_prefix("matrix:@") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
        let json: MatrixJson = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid matrix JSON in `{path}`: {e}")))?;
        return DensityMatrix::from_matrix(json.to_matrix()?).map_err(CliError::from);
    }
    Err(CliError::Usage(format!(
        "unrecognized state `{spec}`; expected bloch:x,y,z | polar:a,c,xi | matrix:@file.json"
    )))
}
