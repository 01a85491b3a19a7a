use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::time::Instant;

use thiserror::Error;

use super::eval::{evaluate, Evaluation, WatchInfo};
use super::infer::{self, Child};
use super::proof::{ProofRecord, ProofStep};
use super::strategy::Strategy;
use super::StrategyError;
use crate::fol::{Clause, ClauseId, Inference, Origin, Problem, Symbol};
use crate::subsumption::{clause_features, subsumes, ClauseFeatureVector, FeatureIndex, WatchlistId};
use crate::watchlist::{relevance1, relevance2, WatchlistGuidance};

/// Resource limits of one run. `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub max_given: Option<u64>,
    pub max_seconds: Option<f64>,
    /// Cap on generated clauses, a deterministic memory bound.
    pub max_generated: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_given: Some(10_000), max_seconds: None, max_generated: None }
    }
}

impl Budget {
    pub fn given(n: u64) -> Budget {
        Budget { max_given: Some(n), max_seconds: None, max_generated: None }
    }

    pub fn validate(&self) -> Result<(), SaturationError> {
        if self.max_given == Some(0) {
            return Err(SaturationError::Budget("max-given must be positive".into()));
        }
        if let Some(s) = self.max_seconds {
            if !(s > 0.0) {
                return Err(SaturationError::Budget(format!("max-seconds must be positive, got {s}")));
            }
        }
        if self.max_generated == Some(0) {
            return Err(SaturationError::Budget("max-generated must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SaturationError {
    #[error("problem {0} has no clauses")]
    EmptyProblem(String),
    #[error("invalid budget: {0}")]
    Budget(String),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Proof(ProofRecord),
    Saturated,
    BudgetExhausted,
}

impl Outcome {
    pub fn is_proof(&self) -> bool {
        matches!(self, Outcome::Proof(_))
    }

    pub fn proof(&self) -> Option<&ProofRecord> {
        match self {
            Outcome::Proof(p) => Some(p),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Proof(_) => "proof",
            Outcome::Saturated => "saturated",
            Outcome::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunStats {
    /// Given-clause selections, including ones discarded as redundant.
    pub loops: u64,
    /// Clauses created, input clauses included.
    pub generated: u64,
    /// Clauses moved into the processed set.
    pub processed: u64,
    pub elapsed: f64,
    /// Generated clauses that matched some watchlist clause.
    pub matched_generated: u64,
    /// Given clauses that had matched some watchlist clause.
    pub matched_given: u64,
    /// Proof clauses that had matched some watchlist clause.
    pub matched_in_proof: u64,
    pub proof_length: u64,
    pub progress: Vec<f64>,
}

impl RunStats {
    /// Processed clauses per second.
    pub fn pps(&self) -> f64 {
        if self.elapsed > 0.0 {
            self.processed as f64 / self.elapsed
        } else {
            0.0
        }
    }
}

/// Relevance bookkeeping for one generated clause.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceEntry {
    pub clause: ClauseId,
    pub parents: Vec<ClauseId>,
    pub length: usize,
    pub relevance0: f64,
    pub relevance1: f64,
    pub relevance2: f64,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub outcome: Outcome,
    pub stats: RunStats,
    /// Given clauses in selection order.
    pub given: Vec<ClauseId>,
    /// Per-clause relevance values, kept when the guidance records its log.
    pub trace: Vec<TraceEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Unprocessed,
    Processed,
    /// Discarded at selection or removed from the processed set.
    Dead,
}

#[derive(Debug)]
struct Entry {
    clause: Clause,
    state: State,
    matched: Vec<WatchlistId>,
    info: WatchInfo,
    features: Option<ClauseFeatureVector>,
}

/// Given-clause saturation over one problem. [`saturate`] drives it to the
/// end; [`Prover::step`] runs one loop at a time.
pub struct Prover<'g> {
    problem: String,
    strategy: Strategy,
    guidance: &'g mut WatchlistGuidance,
    budget: Budget,
    // indexed by clause id; None once a clause can no longer matter
    arena: Vec<Option<Entry>>,
    queues: Vec<BinaryHeap<Reverse<(Evaluation, ClauseId)>>>,
    schedule: Vec<usize>,
    cursor: usize,
    unprocessed: usize,
    unprocessed_matching: usize,
    processed_index: FeatureIndex,
    processed_count: usize,
    literal_index: HashMap<(Symbol, bool), Vec<(ClauseId, usize)>>,
    processed_order: Vec<ClauseId>,
    stats: RunStats,
    given: Vec<ClauseId>,
    given_matched: Vec<bool>,
    trace: Vec<TraceEntry>,
    started: Instant,
    outcome: Option<Outcome>,
}

impl<'g> Prover<'g> {
    pub fn new(
        problem: &Problem,
        strategy: &Strategy,
        guidance: &'g mut WatchlistGuidance,
        budget: Budget,
    ) -> Result<Prover<'g>, SaturationError> {
        strategy.validate()?;
        budget.validate()?;
        if problem.clauses.is_empty() {
            return Err(SaturationError::EmptyProblem(problem.name.clone()));
        }
        let mut schedule = Vec::new();
        for (i, c) in strategy.cefs.iter().enumerate() {
            schedule.extend(std::iter::repeat(i).take(c.frequency as usize));
        }
        let mut p = Prover {
            problem: problem.name.clone(),
            strategy: strategy.clone(),
            guidance,
            budget,
            arena: Vec::new(),
            queues: strategy.cefs.iter().map(|_| BinaryHeap::new()).collect(),
            schedule,
            cursor: 0,
            unprocessed: 0,
            unprocessed_matching: 0,
            processed_index: FeatureIndex::new(),
            processed_count: 0,
            literal_index: HashMap::new(),
            processed_order: Vec::new(),
            stats: RunStats::default(),
            given: Vec::new(),
            given_matched: Vec::new(),
            trace: Vec::new(),
            started: Instant::now(),
            outcome: None,
        };
        for c in &problem.clauses {
            let mut c = c.clone();
            c.parents.clear();
            c.inference = Inference::Input;
            if c.origin == Origin::Derived {
                c.origin = Origin::Axiom;
            }
            if p.admit(c) {
                break;
            }
        }
        Ok(p)
    }

    fn entry(&self, id: ClauseId) -> &Entry {
        self.arena[id.0 as usize].as_ref().expect("live clause")
    }

    /// Register a new clause. Returns true when it is the empty clause.
    fn admit(&mut self, mut c: Clause) -> bool {
        let id = ClauseId(self.arena.len() as u32);
        c.id = id;
        c.birth = self.stats.generated;
        self.stats.generated += 1;
        let event = self.guidance.record_generated(&c);
        let parent_r1: Vec<f64> = c.parents.iter().map(|p| self.entry(*p).clause.relevance1).collect();
        let params = self.strategy.relevance;
        c.relevance1 = relevance1(event.relevance0, &parent_r1, params.delta);
        let r2 = if c.is_empty() { c.relevance1 } else { relevance2(c.length(), c.relevance1, params.alpha, params.beta) };
        if event.is_match() {
            self.stats.matched_generated += 1;
        }
        if self.guidance.config().record_log {
            self.trace.push(TraceEntry {
                clause: id,
                parents: c.parents.clone(),
                length: c.length(),
                relevance0: event.relevance0,
                relevance1: c.relevance1,
                relevance2: r2,
            });
        }
        let info = WatchInfo { matched: event.is_match(), relevance0: event.relevance0, relevance2: r2 };
        let empty = c.is_empty();
        if !empty && c.is_tautology() {
            self.arena.push(None);
            return false;
        }
        let mut e = Entry { clause: c, state: State::Unprocessed, matched: event.watchlists(), info, features: None };
        if empty {
            e.state = State::Dead;
            self.arena.push(Some(e));
            self.finish_with_proof(id);
            return true;
        }
        let flags = self.strategy.flags;
        for (q, cef) in self.queues.iter_mut().zip(&self.strategy.cefs) {
            q.push(Reverse((evaluate(&e.clause, cef, &e.info, self.strategy.mode, flags.uwl), id)));
        }
        if e.info.matched {
            self.unprocessed_matching += 1;
        }
        self.arena.push(Some(e));
        self.unprocessed += 1;
        false
    }

    fn finish_with_proof(&mut self, empty: ClauseId) {
        let mut keep = BTreeSet::new();
        let mut todo = vec![empty];
        while let Some(id) = todo.pop() {
            if keep.insert(id) {
                todo.extend(self.entry(id).clause.parents.iter().copied());
            }
        }
        let steps: Vec<ProofStep> = keep
            .iter()
            .map(|id| {
                let e = self.entry(*id);
                ProofStep { clause: e.clause.clone(), matched: e.matched.clone() }
            })
            .collect();
        let watchlists = self.guidance.watchlists().iter().map(|w| w.source.clone()).collect();
        let record = ProofRecord { problem: self.problem.clone(), steps, watchlists };
        self.stats.matched_in_proof = record.guided_steps() as u64;
        self.stats.proof_length = record.len() as u64;
        self.outcome = Some(Outcome::Proof(record));
    }

    fn budget_exhausted(&self) -> bool {
        let b = &self.budget;
        b.max_given.is_some_and(|m| self.stats.loops >= m)
            || b.max_generated.is_some_and(|m| self.stats.generated >= m)
            || b.max_seconds.is_some_and(|m| self.started.elapsed().as_secs_f64() >= m)
    }

    fn select_given(&mut self) -> Option<ClauseId> {
        if self.unprocessed == 0 {
            return None;
        }
        let q = self.schedule[self.cursor];
        self.cursor = (self.cursor + 1) % self.schedule.len();
        while let Some(Reverse((_, id))) = self.queues[q].pop() {
            if self.arena[id.0 as usize].as_ref().is_some_and(|e| e.state == State::Unprocessed) {
                return Some(id);
            }
        }
        unreachable!("every queue holds every unprocessed clause")
    }

    /// Some processed clause subsumes `c`.
    fn forward_subsumed(&self, c: &Clause, fv: &ClauseFeatureVector) -> bool {
        let mut cands = Vec::new();
        self.processed_index.dominated(fv, &mut cands);
        cands.into_iter().any(|i| subsumes(&self.entry(ClauseId(i as u32)).clause, c, false))
    }

    /// Remove processed clauses subsumed by `g`; returns their ids ascending.
    fn backward_simplify(&mut self, g: &Clause, fv: &ClauseFeatureVector) -> Vec<ClauseId> {
        let mut cands = Vec::new();
        self.processed_index.dominating(fv, &mut cands);
        cands.sort_unstable();
        let mut removed = Vec::new();
        for i in cands {
            let id = ClauseId(i as u32);
            if subsumes(g, &self.entry(id).clause, false) {
                removed.push(id);
            }
        }
        for &id in &removed {
            let e = self.arena[id.0 as usize].as_mut().unwrap();
            e.state = State::Dead;
            let fv = e.features.take().unwrap();
            self.processed_index.remove(&fv, id.0 as usize);
            self.processed_count -= 1;
        }
        removed
    }

    fn insert_processed(&mut self, id: ClauseId, fv: ClauseFeatureVector) {
        self.processed_index.insert(&fv, id.0 as usize);
        let e = self.arena[id.0 as usize].as_mut().unwrap();
        e.state = State::Processed;
        e.features = Some(fv);
        for (i, l) in e.clause.literals.iter().enumerate() {
            self.literal_index.entry((l.predicate(), l.positive)).or_default().push((id, i));
        }
        self.processed_order.push(id);
        self.processed_count += 1;
    }

    fn is_processed(&self, id: ClauseId) -> bool {
        self.arena[id.0 as usize].as_ref().is_some_and(|e| e.state == State::Processed)
    }

    fn generate(&mut self, gid: ClauseId) -> Vec<Child> {
        let g = &self.entry(gid).clause;
        let mut out = Vec::new();
        for (i, l) in g.literals.iter().enumerate() {
            if let Some(partners) = self.literal_index.get(&(l.predicate(), !l.positive)) {
                for &(d, j) in partners {
                    if d != gid && self.is_processed(d) {
                        infer::resolve_pair(g, i, &self.entry(d).clause, j, &mut out);
                    }
                }
            }
        }
        infer::self_resolvents(g, &mut out);
        infer::factors(g, &mut out);
        if self.strategy.flags.paramod {
            for &d in &self.processed_order {
                if d != gid && self.is_processed(d) {
                    let dc = &self.entry(d).clause;
                    infer::paramodulants(g, dc, &mut out);
                    infer::paramodulants(dc, g, &mut out);
                }
            }
            infer::paramodulants(g, g, &mut out);
            infer::equality_resolvents(g, &mut out);
        }
        // compact lazily deleted entries once in a while
        if self.processed_order.len() > 2 * self.processed_count + 64 {
            let arena = &self.arena;
            let live = |id: &ClauseId| arena[id.0 as usize].as_ref().is_some_and(|e| e.state == State::Processed);
            self.processed_order.retain(live);
            for v in self.literal_index.values_mut() {
                v.retain(|(id, _)| live(id));
            }
        }
        out
    }

    /// Run one given-clause loop. Returns the outcome once the run is over.
    pub fn step(&mut self) -> Option<&Outcome> {
        if self.outcome.is_some() {
            return self.outcome.as_ref();
        }
        if self.unprocessed == 0 {
            self.outcome = Some(Outcome::Saturated);
            return self.outcome.as_ref();
        }
        if self.budget_exhausted() {
            self.outcome = Some(Outcome::BudgetExhausted);
            return self.outcome.as_ref();
        }
        let gid = self.select_given().expect("unprocessed clauses remain");
        self.stats.loops += 1;
        self.unprocessed -= 1;
        let matched = self.entry(gid).info.matched;
        if matched {
            self.unprocessed_matching -= 1;
        }
        self.given.push(gid);
        self.given_matched.push(matched);
        let fv = clause_features(&self.entry(gid).clause, false);
        let g = self.entry(gid).clause.clone();
        if self.forward_subsumed(&g, &fv) {
            self.arena[gid.0 as usize] = None;
            return None;
        }
        if self.entry(gid).info.matched {
            self.stats.matched_given += 1;
        }
        self.backward_simplify(&g, &fv);
        self.insert_processed(gid, fv);
        self.stats.processed += 1;
        for child in self.generate(gid) {
            let mut c = Clause::new(child.literals);
            c.parents = child.parents;
            c.inference = child.inference;
            c.origin = Origin::Derived;
            c.dedup_literals();
            c.renumber_vars();
            if self.admit(c) {
                return self.outcome.as_ref();
            }
        }
        None
    }

    /// Processed clauses in id order.
    pub fn processed(&self) -> impl Iterator<Item = &Clause> {
        self.arena
            .iter()
            .filter_map(|e| e.as_ref())
            .filter(|e| e.state == State::Processed)
            .map(|e| &e.clause)
    }

    /// Unprocessed clauses that matched some watchlist clause.
    pub fn unprocessed_matching(&self) -> usize {
        self.unprocessed_matching
    }

    /// Given clauses so far, in selection order.
    pub fn given(&self) -> &[ClauseId] {
        &self.given
    }

    /// For each given clause, whether it had matched a watchlist clause.
    pub fn given_matched(&self) -> &[bool] {
        &self.given_matched
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    pub fn finish(mut self) -> RunResult {
        while self.step().is_none() {}
        self.stats.elapsed = self.started.elapsed().as_secs_f64();
        self.stats.progress = self.guidance.progress_vector();
        RunResult { outcome: self.outcome.take().unwrap(), stats: self.stats, given: self.given, trace: self.trace }
    }
}

/// Run the given-clause loop on `problem` until a proof is found, the
/// unprocessed set runs empty or the budget is spent.
pub fn saturate(
    problem: &Problem,
    strategy: &Strategy,
    guidance: &mut WatchlistGuidance,
    budget: &Budget,
) -> Result<RunResult, SaturationError> {
    Ok(Prover::new(problem, strategy, guidance, *budget)?.finish())
}
