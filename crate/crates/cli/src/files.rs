//! Matrix file input.
//!
//! Two formats are accepted. JSON: an object with `rows`, `cols`, and `data`,
//! where `data` is a row-major list of `[re, im]` pairs. CSV: lines of
//! comma-separated real numbers, one matrix row per line (CSV is real-only).
//! The format is inferred from the file extension unless overridden.

use std::fs;
use std::path::Path;

use ncross::{Complex64, Matrix};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::document::InputDigest;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FileFormat {
    Json,
    Csv,
}

#[derive(Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<[f64; 2]>,
}

pub struct LoadedMatrix {
    pub matrix: Matrix,
    pub digest: InputDigest,
}

pub fn load_matrix(path: &Path, format: Option<FileFormat>) -> Result<LoadedMatrix, CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let format = match format {
        Some(f) => f,
        None => infer_format(path)?,
    };
    let matrix = match format {
        FileFormat::Json => parse_json(&bytes, path)?,
        FileFormat::Csv => parse_csv(&bytes, path)?,
    };
    let digest = InputDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    };
    Ok(LoadedMatrix { matrix, digest })
}

fn infer_format(path: &Path) -> Result<FileFormat, CliError> {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .as_deref()
    {
        Some("json") => Ok(FileFormat::Json),
        Some("csv") => Ok(FileFormat::Csv),
        _ => Err(CliError::Parse(format!(
            "cannot infer format of {}; pass --format json or --format csv",
            path.display()
        ))),
    }
}

// Shape and finiteness violations inside a single file are input problems,
// so they surface as parse errors rather than dimension errors.
fn wrap(path: &Path, result: ncross::Result<Matrix>) -> Result<Matrix, CliError> {
    result.map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn parse_json(bytes: &[u8], path: &Path) -> Result<Matrix, CliError> {
    let parsed: MatrixJson = serde_json::from_slice(bytes)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let data = parsed
        .data
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    wrap(path, Matrix::new(parsed.rows, parsed.cols, data))
}

fn parse_csv(bytes: &[u8], path: &Path) -> Result<Matrix, CliError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::Parse(format!("{} is not valid UTF-8", path.display())))?;
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for field in trimmed.split(',') {
            let value: f64 = field.trim().parse().map_err(|_| {
                CliError::Parse(format!(
                    "{} line {}: {:?} is not a number",
                    path.display(),
                    lineno + 1,
                    field.trim()
                ))
            })?;
            row.push(Complex64::new(value, 0.0));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse(format!(
            "{} contains no data rows",
            path.display()
        )));
    }
    wrap(path, Matrix::from_rows(&rows))
}
