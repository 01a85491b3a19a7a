use std::collections::{BTreeSet, HashMap};

use crate::fol::{print_derivation_step, Clause, ClauseId, Inference};
use crate::subsumption::WatchlistId;

#[derive(Clone, Debug)]
pub struct ProofStep {
    pub clause: Clause,
    /// Watchlists the clause matched when it was generated.
    pub matched: Vec<WatchlistId>,
}

impl ProofStep {
    pub fn is_guided(&self) -> bool {
        !self.matched.is_empty()
    }
}

/// Refutation found by a run: the ancestors of the empty clause in
/// generation order, the empty clause last.
#[derive(Clone, Debug)]
pub struct ProofRecord {
    pub problem: String,
    pub steps: Vec<ProofStep>,
    /// Source names of the watchlists loaded for the run, by id.
    pub watchlists: Vec<String>,
}

impl ProofRecord {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn clauses(&self) -> impl Iterator<Item = &Clause> {
        self.steps.iter().map(|s| &s.clause)
    }

    /// Steps whose clause matched some watchlist.
    pub fn guided_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.is_guided()).count()
    }

    pub fn guidance_ratio(&self) -> f64 {
        if self.steps.is_empty() {
            0.0
        } else {
            self.guided_steps() as f64 / self.steps.len() as f64
        }
    }

    pub fn matched_names(&self, step: &ProofStep) -> Vec<String> {
        step.matched.iter().map(|w| self.watchlists[w.0 as usize].clone()).collect()
    }

    /// Distinct source names of the watchlists matched by proof clauses.
    pub fn matched_proof_names(&self) -> BTreeSet<String> {
        self.steps.iter().flat_map(|s| self.matched_names(s)).collect()
    }

    /// Printed name of each step.
    pub fn step_name(id: ClauseId) -> String {
        id.to_string()
    }

    /// The derivation as TPTP CNF, one step per line.
    pub fn to_tptp(&self) -> String {
        let original: HashMap<ClauseId, String> = self
            .steps
            .iter()
            .filter_map(|s| s.clause.name.as_ref().map(|n| (s.clause.id, n.to_string())))
            .collect();
        let mut out = String::new();
        for s in &self.steps {
            let mut c = s.clause.clone();
            c.name = Some(Self::step_name(c.id).into());
            let line = print_derivation_step(&c, |p| Self::step_name(*p));
            if c.inference == Inference::Input {
                if let Some(orig) = original.get(&c.id) {
                    let line = line.strip_suffix(").").unwrap_or(&line);
                    let orig = orig.replace('\\', "\\\\").replace('\'', "\\'");
                    out.push_str(&format!("{line}, file('problem', '{orig}')).\n"));
                    continue;
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}
