use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Decay and threshold parameters for inherited relevance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelevanceParams {
    pub delta: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl Default for RelevanceParams {
    fn default() -> Self {
        RelevanceParams { delta: 0.1, alpha: 0.03, beta: 0.009 }
    }
}

/// How watchlists are organised and which relevance drives
/// `PreferWatchlistRelevant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelevanceMode {
    /// All watchlist files merged into a single watchlist.
    #[default]
    Static,
    /// One watchlist per file, priority from relevance₀.
    Dyn,
    /// One watchlist per file, priority from the thresholded inherited relevance.
    DynDec,
}

impl fmt::Display for RelevanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelevanceMode::Static => "static",
            RelevanceMode::Dyn => "dyn",
            RelevanceMode::DynDec => "dyndec",
        })
    }
}

impl FromStr for RelevanceMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "static" => Ok(RelevanceMode::Static),
            "dyn" => Ok(RelevanceMode::Dyn),
            "dyndec" => Ok(RelevanceMode::DynDec),
            _ => Err(format!("unknown relevance mode `{s}`")),
        }
    }
}

/// Own relevance plus the decayed mean of the parents' inherited relevance.
pub fn relevance1(own_relevance0: f64, parent_relevance1: &[f64], delta: f64) -> f64 {
    if parent_relevance1.is_empty() {
        return own_relevance0;
    }
    let mean = parent_relevance1.iter().sum::<f64>() / parent_relevance1.len() as f64;
    own_relevance0 + delta * mean
}

/// Reset to zero when both the relevance and the relevance per symbol are
/// below their thresholds.
pub fn relevance2(length: usize, relevance1: f64, alpha: f64, beta: f64) -> f64 {
    debug_assert!(length >= 1);
    if relevance1 < alpha && relevance1 / (length as f64) < beta {
        0.0
    } else {
        relevance1
    }
}

/// Completion ratio as printed in reports.
pub fn format_ratio(r: f64) -> String {
    format!("{r:.3}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inherited_relevance() {
        assert!((relevance1(0.0, &[0.5, 0.3], 0.1) - 0.04).abs() < 1e-15);
        assert_eq!(relevance1(0.25, &[], 0.1), 0.25);
        assert_eq!(relevance1(0.5, &[0.0, 0.0], 0.1), 0.5);
    }

    #[test]
    fn thresholded_relevance() {
        let p = RelevanceParams::default();
        assert_eq!(relevance2(3, 0.02, p.alpha, p.beta), 0.0);
        assert_eq!(relevance2(2, 0.02, p.alpha, p.beta), 0.02);
        assert_eq!(relevance2(1000, 0.05, p.alpha, p.beta), 0.05);
    }

    #[test]
    fn ratio_rounding() {
        assert_eq!(format_ratio(42.0 / 96.0), "0.438");
        assert_eq!(format_ratio(0.0), "0.000");
        assert_eq!(format_ratio(1.0), "1.000");
    }

    #[test]
    fn default_params() {
        let p = RelevanceParams::default();
        assert_eq!((p.delta, p.alpha, p.beta), (0.1, 0.03, 0.009));
    }
}
