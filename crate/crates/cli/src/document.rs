//! Result documents and their serialization.
//!
//! Every floating-point value is written with 17 significant digits, which
//! round-trips IEEE 754 doubles exactly; identical inputs and flags therefore
//! produce byte-identical documents.

use std::io::{self, Write};

use ncross::{Combination, Complex64};
use serde::Serialize;

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes `value` as a single JSON line.
pub fn to_json_line<T: Serialize>(value: &T) -> io::Result<Vec<u8>> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(buf)
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct ResultDocument<T: Serialize> {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metric: Option<InputDigest>,
    pub result: T,
}

#[derive(Serialize)]
pub struct ComponentOut {
    /// 1-based axis indices of the coordinate subspace, strictly increasing.
    pub label: Vec<usize>,
    /// Component as `[re, im]`.
    pub value: [f64; 2],
    pub magnitude: f64,
}

impl ComponentOut {
    pub fn new(label: &Combination, value: Complex64) -> Self {
        Self {
            label: label.indices().to_vec(),
            value: [value.re, value.im],
            magnitude: value.norm(),
        }
    }
}

#[derive(Serialize)]
pub struct MetricVolumeOut {
    pub signed_squared: f64,
    pub magnitude: f64,
    pub sign: i32,
}

#[derive(Serialize)]
pub struct CrossResult {
    pub n: usize,
    pub m: usize,
    pub components: Vec<ComponentOut>,
    pub norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metric_volume: Option<MetricVolumeOut>,
}

#[derive(Serialize)]
pub struct VolumeResult {
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metric_volume: Option<MetricVolumeOut>,
}

#[derive(Serialize)]
pub struct CompoundResult {
    pub k: usize,
    pub source_rows: usize,
    pub source_cols: usize,
    pub row_labels: Vec<Vec<usize>>,
    pub col_labels: Vec<Vec<usize>>,
    /// Row-major minors as `[re, im]` pairs.
    pub entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
pub struct GramResult {
    pub n: usize,
    pub m: usize,
    /// Row-major Gram matrix as `[re, im]` pairs.
    pub entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
pub struct HodgeComponent {
    /// 1-based coordinate axis receiving this component.
    pub axis: usize,
    pub value: [f64; 2],
    pub magnitude: f64,
}

#[derive(Serialize)]
pub struct HodgeResult {
    pub n: usize,
    pub components: Vec<HodgeComponent>,
}

#[derive(Serialize)]
pub struct VerifyResult {
    pub theorem: u8,
    pub trials: u64,
    pub seed: u64,
    pub max_dim: u64,
    pub tolerance: f64,
    pub complex: bool,
    pub passed: bool,
    pub failures: u64,
    /// Worst normalized gap `|lhs - rhs| / (1 + |lhs|)` over all trials.
    pub worst_gap: f64,
    /// Seed of the trial that produced the worst gap.
    pub worst_seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_seed: Option<u64>,
}
