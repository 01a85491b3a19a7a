use std::cmp::Ordering;

use super::strategy::{Cef, PriorityFunction, WeightFunction};
use crate::fol::Clause;
use crate::watchlist::RelevanceMode;

/// Offset added to the priority of non-matching clauses under `--uwl`; larger
/// than any priority a priority function produces.
pub const UWL_OFFSET: i64 = 1 << 20;

/// Queue key; smaller is better.
#[derive(Clone, Copy, Debug)]
pub struct Evaluation {
    pub priority: i64,
    pub weight: f64,
    pub birth: u64,
}

impl PartialEq for Evaluation {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Evaluation {}

impl PartialOrd for Evaluation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Evaluation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.priority
            .cmp(&other.priority)
            .then_with(|| self.weight.total_cmp(&other.weight))
            .then_with(|| self.birth.cmp(&other.birth))
    }
}

/// What the priority functions know about a clause, fixed at generation.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct WatchInfo {
    pub matched: bool,
    pub relevance0: f64,
    pub relevance2: f64,
}

/// Round half away from zero.
pub fn quantize(x: f64) -> i64 {
    x.round() as i64
}

pub fn clause_weight(c: &Clause, fweight: f64, vweight: f64, pos_mult: f64) -> f64 {
    c.literals
        .iter()
        .map(|l| {
            let w = fweight * l.atom.function_symbol_count() as f64 + vweight * l.atom.variable_count() as f64;
            if l.positive {
                w * pos_mult
            } else {
                w
            }
        })
        .sum()
}

pub fn priority(pf: PriorityFunction, info: &WatchInfo, mode: RelevanceMode) -> i64 {
    let relevance = match mode {
        RelevanceMode::DynDec => info.relevance2,
        RelevanceMode::Static | RelevanceMode::Dyn => info.relevance0,
    };
    match pf {
        PriorityFunction::ConstPrio => 0,
        PriorityFunction::PreferWatchlist => i64::from(!info.matched),
        PriorityFunction::DeferWatchlist => i64::from(info.matched),
        PriorityFunction::PreferWatchlistRelevant => quantize(1000.0 * (1.0 - relevance)),
        PriorityFunction::DeferWatchlistRelevant => quantize(1000.0 * relevance),
    }
}

pub fn evaluate(c: &Clause, cef: &Cef, info: &WatchInfo, mode: RelevanceMode, uwl: bool) -> Evaluation {
    let mut prio = priority(cef.priority, info, mode);
    if uwl && !info.matched {
        prio += UWL_OFFSET;
    }
    let weight = match cef.weight {
        WeightFunction::Clauseweight { fweight, vweight, pos_mult } => clause_weight(c, fweight, vweight, pos_mult),
        WeightFunction::Fifo => c.birth as f64,
    };
    Evaluation { priority: prio, weight, birth: c.birth }
}
