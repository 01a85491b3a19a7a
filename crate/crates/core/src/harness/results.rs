//! Line-delimited JSON results.
//!
//! The first line is the header `{"format":"wlprove-results","version":1}`.
//! Every further line is one [`RunRecord`] with its fields in declaration
//! order. `elapsed` and `pps` are the only fields that depend on timing.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_NAME: &str = "wlprove-results";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub format: String,
    pub version: u32,
}

impl Default for Header {
    fn default() -> Self {
        Header { format: FORMAT_NAME.into(), version: FORMAT_VERSION }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    pub strategy: String,
    /// `proof`, `saturated`, `budget-exhausted` or `error`.
    pub result: String,
    pub loops: u64,
    pub generated: u64,
    pub processed: u64,
    pub elapsed: f64,
    pub pps: f64,
    pub matched_total: u64,
    pub matched_given: u64,
    pub matched_in_proof: u64,
    pub proof_length: u64,
    pub watchlists: usize,
    pub progress: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunRecord {
    pub fn solved(&self) -> bool {
        self.result == "proof"
    }

    /// Share of proof clauses that matched a watchlist.
    pub fn guidance_ratio(&self) -> Option<f64> {
        (self.solved() && self.proof_length > 0).then(|| self.matched_in_proof as f64 / self.proof_length as f64)
    }

    /// Copy with the timing fields zeroed.
    pub fn without_timing(&self) -> RunRecord {
        RunRecord { elapsed: 0.0, pps: 0.0, ..self.clone() }
    }

    pub fn error(problem: &str, strategy: &str, message: String) -> RunRecord {
        RunRecord {
            problem: problem.into(),
            strategy: strategy.into(),
            result: "error".into(),
            loops: 0,
            generated: 0,
            processed: 0,
            elapsed: 0.0,
            pps: 0.0,
            matched_total: 0,
            matched_given: 0,
            matched_in_proof: 0,
            proof_length: 0,
            watchlists: 0,
            progress: vec![],
            error: Some(message),
        }
    }
}

#[derive(Debug, Error)]
pub enum ResultsError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("not a results file (format `{0}`)")]
    Format(String),
    #[error("unsupported results version {0}")]
    Version(u32),
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn write_header(w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "{}", serde_json::to_string(&Header::default()).expect("header serializes"))
}

pub fn write_record(w: &mut impl Write, r: &RunRecord) -> std::io::Result<()> {
    writeln!(w, "{}", serde_json::to_string(r).expect("records serialize"))
}

pub fn read_results(r: impl BufRead) -> Result<Vec<RunRecord>, ResultsError> {
    let mut lines = r.lines().enumerate().filter(|(_, l)| l.as_ref().map_or(true, |l| !l.trim().is_empty()));
    let (_, first) = lines.next().ok_or(ResultsError::MissingHeader)?;
    let header: Header = serde_json::from_str(&first?).map_err(|source| ResultsError::Json { line: 1, source })?;
    if header.format != FORMAT_NAME {
        return Err(ResultsError::Format(header.format));
    }
    if header.version != FORMAT_VERSION {
        return Err(ResultsError::Version(header.version));
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        out.push(serde_json::from_str(&line?).map_err(|source| ResultsError::Json { line: i + 1, source })?);
    }
    Ok(out)
}
