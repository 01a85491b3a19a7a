use std::collections::{BTreeSet, HashMap};

use super::features::FeatureBag;
use crate::fol::Clause;

/// A solved problem: its conjecture features and its proof.
#[derive(Clone, Debug, Default)]
pub struct ProofCorpusEntry {
    pub name: String,
    pub features: FeatureBag,
    /// Alpha-normalized proof clauses, the empty clause last.
    pub proof: Vec<Clause>,
    /// Sources of the watchlists that guided clauses of this proof.
    pub matched_proof_names: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct KnnModel {
    pub entries: Vec<ProofCorpusEntry>,
    pub idf: HashMap<String, f64>,
}

impl KnnModel {
    pub fn new(entries: Vec<ProofCorpusEntry>) -> KnnModel {
        let n = entries.len() as f64;
        let mut df: HashMap<String, usize> = HashMap::new();
        for e in &entries {
            for (f, _) in e.features.iter() {
                *df.entry(f.to_string()).or_insert(0) += 1;
            }
        }
        let idf = df.into_iter().map(|(f, d)| (f, (n / d as f64).ln())).collect();
        KnnModel { entries, idf }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, name: &str) -> Option<&ProofCorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn similarity(&self, query: &FeatureBag, entry: &FeatureBag) -> f64 {
        // iterate the smaller bag; sum in key order for reproducible rounding
        let (small, large) = if query.len() <= entry.len() { (query, entry) } else { (entry, query) };
        small
            .iter()
            .filter_map(|(f, a)| {
                let b = large.count(f);
                (b > 0).then(|| self.idf.get(f).copied().unwrap_or(0.0) * a.min(b) as f64)
            })
            .sum()
    }

    /// All entries by descending similarity to `query`, ties by name.
    pub fn ranked(&self, query: &FeatureBag) -> Vec<(&ProofCorpusEntry, f64)> {
        let mut out: Vec<_> = self.entries.iter().map(|e| (e, self.similarity(query, &e.features))).collect();
        out.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.name.cmp(&b.0.name)));
        out
    }
}

/// Names of the `k` entries most similar to `query`.
pub fn knn_suggest(model: &KnnModel, query: &FeatureBag, k: usize) -> Vec<String> {
    model.ranked(query).into_iter().take(k).map(|(e, _)| e.name.clone()).collect()
}

/// Round-two suggestions: walk the neighbours in order and collect the proofs
/// that guided each of them; a neighbour without recorded guidance stands for
/// itself. Leftover slots are filled with the neighbours themselves.
pub fn knn_suggest_round2(model: &KnnModel, query: &FeatureBag, k: usize, exclude: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut seen = BTreeSet::new();
    let ranked = model.ranked(query);
    for (e, _) in &ranked {
        let names: Vec<&String> = if e.matched_proof_names.is_empty() {
            vec![&e.name]
        } else {
            e.matched_proof_names.iter().collect()
        };
        for n in names {
            if out.len() < k && n != exclude && seen.insert(n.clone()) {
                out.push(n.clone());
            }
        }
        if out.len() >= k {
            break;
        }
    }
    for (e, _) in &ranked {
        if out.len() < k && e.name != exclude && seen.insert(e.name.clone()) {
            out.push(e.name.clone());
        }
    }
    out
}
