use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::cover::greedy_cover;
use super::results::RunRecord;
use super::run::solved_sets;
use crate::watchlist::format_ratio;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct StrategySummary {
    pub attempted: usize,
    pub solved: usize,
    pub errors: usize,
    /// Mean processed clauses per second over runs with nonzero elapsed time.
    pub mean_pps: f64,
    /// Mean given-clause loops over solved runs.
    pub mean_loops_solved: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GuidanceRatio {
    pub problem: String,
    pub strategy: String,
    pub guided: u64,
    pub proof_length: u64,
}

impl GuidanceRatio {
    pub fn ratio(&self) -> f64 {
        self.guided as f64 / self.proof_length as f64
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub strategies: BTreeMap<String, StrategySummary>,
    pub union: usize,
    pub cover: Vec<(String, usize)>,
    pub guidance: Vec<GuidanceRatio>,
}

pub fn report(records: &[RunRecord], cover_k: usize) -> Report {
    let mut strategies: BTreeMap<String, StrategySummary> = BTreeMap::new();
    let mut pps: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    let mut loops: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    let mut guidance = Vec::new();
    for r in records {
        let s = strategies.entry(r.strategy.clone()).or_default();
        s.attempted += 1;
        if r.result == "error" {
            s.errors += 1;
        }
        if r.elapsed > 0.0 {
            pps.entry(&r.strategy).or_default().push(r.pps);
        }
        if r.solved() {
            s.solved += 1;
            loops.entry(&r.strategy).or_default().push(r.loops as f64);
            if r.proof_length > 0 {
                guidance.push(GuidanceRatio {
                    problem: r.problem.clone(),
                    strategy: r.strategy.clone(),
                    guided: r.matched_in_proof,
                    proof_length: r.proof_length,
                });
            }
        }
    }
    let mean = |v: Option<&Vec<f64>>| v.filter(|v| !v.is_empty()).map_or(0.0, |v| v.iter().sum::<f64>() / v.len() as f64);
    for (name, s) in strategies.iter_mut() {
        s.mean_pps = mean(pps.get(name.as_str()));
        s.mean_loops_solved = mean(loops.get(name.as_str()));
    }
    let solved = solved_sets(records);
    let union: BTreeSet<&String> = solved.values().flatten().collect();
    let cover = if union.is_empty() { Vec::new() } else { greedy_cover(&solved, cover_k) };
    Report { strategies, union: union.len(), cover, guidance }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.strategies.keys().map(String::len).max().unwrap_or(8).max(8);
        writeln!(f, "{:width$}  {:>6}  {:>8}  {:>6}  {:>10}  {:>10}", "strategy", "solved", "attempts", "errors", "mean-pps", "mean-loops")?;
        for (name, s) in &self.strategies {
            writeln!(
                f,
                "{name:width$}  {:>6}  {:>8}  {:>6}  {:>10.1}  {:>10.1}",
                s.solved, s.attempted, s.errors, s.mean_pps, s.mean_loops_solved
            )?;
        }
        writeln!(f, "union: {}", self.union)?;
        if !self.cover.is_empty() {
            writeln!(f, "greedy cover:")?;
            let mut total = 0;
            for (name, added) in &self.cover {
                total += added;
                writeln!(f, "  {name:width$}  +{added:<5} {total}")?;
            }
        }
        let guided: Vec<&GuidanceRatio> = self.guidance.iter().filter(|g| g.guided > 0).collect();
        if !guided.is_empty() {
            writeln!(f, "guided proofs:")?;
            for g in guided {
                writeln!(f, "  {} {} {} {}/{}", g.problem, g.strategy, format_ratio(g.ratio()), g.guided, g.proof_length)?;
            }
        }
        Ok(())
    }
}
