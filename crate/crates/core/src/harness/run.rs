use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc};

use super::results::{write_header, write_record, RunRecord};
use crate::fol::{ClauseId, Problem};
use crate::saturation::{check_proof, saturate, Budget, Outcome, ProofRecord, RunResult, Strategy};
use crate::selection::{build_watchlists, Method, ProofCorpusEntry, SelectParams, WatchlistSet};
use crate::watchlist::WatchlistGuidance;

/// Where the watchlists of a run come from.
#[derive(Clone, Debug, Default)]
pub enum WatchlistSource {
    #[default]
    None,
    /// The same sets for every problem.
    Fixed(Arc<Vec<WatchlistSet>>),
    /// Sets keyed by problem name; problems without an entry run unguided.
    PerProblem(Arc<HashMap<String, Vec<WatchlistSet>>>),
    /// Built for each problem from the proofs of the other problems.
    Select { method: Method, params: SelectParams, corpus: Arc<Vec<ProofCorpusEntry>> },
}

impl WatchlistSource {
    pub fn sets_for(&self, problem: &Problem) -> Vec<WatchlistSet> {
        match self {
            WatchlistSource::None => Vec::new(),
            WatchlistSource::Fixed(s) => s.as_ref().clone(),
            WatchlistSource::PerProblem(m) => m.get(&problem.name).cloned().unwrap_or_default(),
            WatchlistSource::Select { method, params, corpus } => build_watchlists(*method, problem, corpus, *params),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Name reported in the results.
    pub name: String,
    pub strategy: Strategy,
    pub watchlists: WatchlistSource,
}

impl RunConfig {
    pub fn unguided(name: impl Into<String>, strategy: Strategy) -> RunConfig {
        RunConfig { name: name.into(), strategy, watchlists: WatchlistSource::None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorpusOptions {
    pub budget: Budget,
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
    /// Keep relevance traces and match logs.
    pub record_log: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { budget: Budget::default(), jobs: 1, record_log: false }
    }
}

/// One (problem, configuration) run.
#[derive(Debug)]
pub struct RunOutput {
    pub record: RunRecord,
    pub proof: Option<ProofRecord>,
    pub given: Vec<ClauseId>,
    /// Present when `record_log` was set.
    pub result: Option<RunResult>,
    /// Match log of the guidance, when `record_log` was set.
    pub guidance: Option<WatchlistGuidance>,
}

fn record_of(problem: &Problem, config: &RunConfig, res: &RunResult, watchlists: usize) -> RunRecord {
    let s = &res.stats;
    RunRecord {
        problem: problem.name.clone(),
        strategy: config.name.clone(),
        result: res.outcome.label().into(),
        loops: s.loops,
        generated: s.generated,
        processed: s.processed,
        elapsed: s.elapsed,
        pps: s.pps(),
        matched_total: s.matched_generated,
        matched_given: s.matched_given,
        matched_in_proof: s.matched_in_proof,
        proof_length: s.proof_length,
        watchlists,
        progress: s.progress.clone(),
        error: None,
    }
}

/// Run a single problem under one configuration. Proofs that fail the
/// independent checker are reported as errors.
pub fn run_one(problem: &Problem, config: &RunConfig, opts: &CorpusOptions) -> RunOutput {
    let mut gc = config.strategy.guidance_config();
    gc.record_log = opts.record_log;
    let sets = config.watchlists.sets_for(problem);
    let mut guidance = WatchlistGuidance::from_sets(sets, gc);
    let res = match saturate(problem, &config.strategy, &mut guidance, &opts.budget) {
        Ok(r) => r,
        Err(e) => {
            return RunOutput {
                record: RunRecord::error(&problem.name, &config.name, e.to_string()),
                proof: None,
                given: vec![],
                result: None,
                guidance: None,
            }
        }
    };
    let mut record = record_of(problem, config, &res, guidance.watchlists().len());
    let mut proof = None;
    if let Outcome::Proof(p) = &res.outcome {
        match check_proof(p, problem) {
            Ok(()) => proof = Some(p.clone()),
            Err(e) => {
                record.result = "error".into();
                record.error = Some(format!("proof rejected by checker: {e}"));
            }
        }
    }
    let given = res.given.clone();
    let (result, guidance) = if opts.record_log { (Some(res), Some(guidance)) } else { (None, None) };
    RunOutput { record, proof, given, result, guidance }
}

/// Run every configuration on every problem, problem-major. Records are
/// written to `out` (after a header line) in that order as soon as all
/// earlier ones are done.
pub fn run_corpus(
    problems: &[Problem],
    configs: &[RunConfig],
    opts: &CorpusOptions,
    mut out: Option<&mut dyn Write>,
) -> std::io::Result<Vec<RunOutput>> {
    if let Some(w) = out.as_mut() {
        write_header(w)?;
    }
    let jobs: Vec<(usize, usize)> = (0..problems.len()).flat_map(|p| (0..configs.len()).map(move |c| (p, c))).collect();
    let mut results: Vec<Option<RunOutput>> = (0..jobs.len()).map(|_| None).collect();
    let mut emit = |i: usize, r: RunOutput, results: &mut Vec<Option<RunOutput>>, next: &mut usize| -> std::io::Result<()> {
        results[i] = Some(r);
        while *next < results.len() {
            match &results[*next] {
                Some(r) => {
                    if let Some(w) = out.as_mut() {
                        write_record(w, &r.record)?;
                        w.flush()?;
                    }
                    *next += 1;
                }
                None => break,
            }
        }
        Ok(())
    };
    let mut next = 0;
    if opts.jobs <= 1 {
        for (i, &(p, c)) in jobs.iter().enumerate() {
            log::info!("{} / {}", problems[p].name, configs[c].name);
            let r = run_one(&problems[p], &configs[c], opts);
            emit(i, r, &mut results, &mut next)?;
        }
    } else {
        let counter = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel::<(usize, RunOutput)>();
        std::thread::scope(|scope| -> std::io::Result<()> {
            for _ in 0..opts.jobs.min(jobs.len().max(1)) {
                let tx = tx.clone();
                let (counter, jobs) = (&counter, &jobs);
                scope.spawn(move || loop {
                    let i = counter.fetch_add(1, Ordering::SeqCst);
                    let Some(&(p, c)) = jobs.get(i) else { break };
                    if tx.send((i, run_one(&problems[p], &configs[c], opts))).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            for (i, r) in rx {
                emit(i, r, &mut results, &mut next)?;
            }
            Ok(())
        })?;
    }
    Ok(results.into_iter().map(|r| r.expect("every job finished")).collect())
}

/// Problems solved by each configuration.
pub fn solved_sets(records: &[RunRecord]) -> BTreeMap<String, std::collections::BTreeSet<String>> {
    let mut out: BTreeMap<String, std::collections::BTreeSet<String>> = BTreeMap::new();
    for r in records {
        let e = out.entry(r.strategy.clone()).or_default();
        if r.solved() {
            e.insert(r.problem.clone());
        }
    }
    out
}
