use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use super::corpus::conjecture_clauses;
use super::features::extract_features;
use super::knn::{knn_suggest, knn_suggest_round2, KnnModel, ProofCorpusEntry};
use crate::fol::{normal_form_text, print_clause, Clause, ClauseId, Problem};
use crate::saturation::ProofRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Proofs of the target's family.
    Art,
    /// Most frequent proof clauses.
    Freq,
    /// Clauses of the nearest proofs, as one watchlist.
    KnnSt,
    /// The nearest proofs, one watchlist each.
    KnnDyn,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "art" => Method::Art,
            "freq" => Method::Freq,
            "knn-st" => Method::KnnSt,
            "knn-dyn" => Method::KnnDyn,
            _ => return Err(format!("unknown selection method `{s}`")),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Art => "art",
            Method::Freq => "freq",
            Method::KnnSt => "knn-st",
            Method::KnnDyn => "knn-dyn",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelectParams {
    pub k: usize,
    /// Cap on the size of a merged watchlist.
    pub max_clauses: usize,
    /// Use recorded guidance provenance when ranking proofs.
    pub round2: bool,
}

impl Default for SelectParams {
    fn default() -> Self {
        SelectParams { k: 16, max_clauses: 1000, round2: false }
    }
}

/// A named watchlist ready to be written or loaded.
pub type WatchlistSet = (String, Vec<Clause>);

/// Name prefix before a trailing `_<digits>` segment.
pub fn family(name: &str) -> &str {
    match name.rsplit_once('_') {
        Some((head, tail)) if !head.is_empty() && !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()) => head,
        _ => name,
    }
}

fn dedup_by_normal_form(clauses: impl IntoIterator<Item = Clause>) -> Vec<(String, Clause)> {
    let mut seen = BTreeSet::new();
    clauses
        .into_iter()
        .filter_map(|c| {
            let t = normal_form_text(&c);
            seen.insert(t.clone()).then_some((t, c))
        })
        .collect()
}

/// Watchlists for `target` from proofs of other problems. The target's own
/// entry is never used.
pub fn build_watchlists(method: Method, target: &Problem, corpus: &[ProofCorpusEntry], params: SelectParams) -> Vec<WatchlistSet> {
    let others: Vec<ProofCorpusEntry> = corpus.iter().filter(|e| e.name != target.name).cloned().collect();
    match method {
        Method::Art => {
            let fam = family(&target.name);
            let members: Vec<&ProofCorpusEntry> = others.iter().filter(|e| family(&e.name) == fam).collect();
            if members.is_empty() {
                log::warn!("no solved problems in family {fam}");
                return Vec::new();
            }
            vec![("art".into(), members.iter().flat_map(|e| e.proof.iter().cloned()).collect())]
        }
        Method::Freq => {
            let mut df: HashMap<String, (usize, Clause)> = HashMap::new();
            for e in &others {
                for (t, c) in dedup_by_normal_form(e.proof.iter().cloned()) {
                    df.entry(t).or_insert((0, c)).0 += 1;
                }
            }
            let mut ranked: Vec<(String, usize, Clause)> = df.into_iter().map(|(t, (n, c))| (t, n, c)).collect();
            ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
            let clauses: Vec<Clause> = ranked.into_iter().take(params.max_clauses).map(|(_, _, c)| c).collect();
            if clauses.is_empty() {
                return Vec::new();
            }
            vec![("freq".into(), clauses)]
        }
        Method::KnnSt => {
            let model = KnnModel::new(others);
            let query = extract_features(&conjecture_clauses(target));
            let mut score: BTreeMap<String, (f64, Clause)> = BTreeMap::new();
            for (e, sim) in model.ranked(&query).into_iter().take(params.k) {
                for (t, c) in dedup_by_normal_form(e.proof.iter().cloned()) {
                    score.entry(t).or_insert((0.0, c)).0 += sim;
                }
            }
            let mut ranked: Vec<(String, f64, Clause)> = score.into_iter().map(|(t, (s, c))| (t, s, c)).collect();
            ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
            let clauses: Vec<Clause> = ranked.into_iter().take(params.max_clauses).map(|(_, _, c)| c).collect();
            if clauses.is_empty() {
                return Vec::new();
            }
            vec![("knn-st".into(), clauses)]
        }
        Method::KnnDyn => {
            let model = KnnModel::new(others);
            let query = extract_features(&conjecture_clauses(target));
            let names = if params.round2 {
                knn_suggest_round2(&model, &query, params.k, &target.name)
            } else {
                knn_suggest(&model, &query, params.k)
            };
            names
                .into_iter()
                .filter_map(|n| model.entry(&n).map(|e| (n.clone(), e.proof.clone())))
                .collect()
        }
    }
}

/// Record, for each solved problem, which proofs guided its final proof.
pub fn mine_round2(corpus: &mut [ProofCorpusEntry], records: &[ProofRecord]) {
    let by_problem: HashMap<&str, &ProofRecord> = records.iter().map(|r| (r.problem.as_str(), r)).collect();
    for e in corpus.iter_mut() {
        if let Some(r) = by_problem.get(e.name.as_str()) {
            e.matched_proof_names = r.matched_proof_names().into_iter().collect();
        }
    }
}

/// TPTP text of a watchlist; clauses are renamed `w<i>` so names are unique.
pub fn watchlist_text(clauses: &[Clause]) -> String {
    let mut out = String::new();
    for (i, c) in clauses.iter().enumerate() {
        let mut c = c.clone();
        c.id = ClauseId(i as u32);
        c.name = Some(Arc::from(format!("w{i}").as_str()));
        out.push_str(&print_clause(&c));
        out.push('\n');
    }
    out
}

/// Write each set to `<dir>/<name>.p`; returns the paths in order.
pub fn write_watchlists(dir: &Path, sets: &[WatchlistSet]) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::with_capacity(sets.len());
    for (name, clauses) in sets {
        let path = dir.join(format!("{name}.p"));
        std::fs::write(&path, watchlist_text(clauses))?;
        out.push(path);
    }
    Ok(out)
}

/// A proof record as a watchlist: all proof clauses, the empty clause included.
pub fn extract_watchlist(proof: &ProofRecord) -> Vec<Clause> {
    proof.clauses().cloned().collect()
}
