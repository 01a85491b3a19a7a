//! On-disk corpus: one directory per problem holding `problem.p`, and for
//! solved problems `proof.p` plus `provenance.json` (proof clause name to the
//! watchlists it matched).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::features::extract_features;
use super::knn::ProofCorpusEntry;
use crate::fol::{alpha_normalize, parse_clauses, parse_cnf, Clause, ParseError, Problem};
use crate::saturation::ProofRecord;

pub const PROBLEM_FILE: &str = "problem.p";
pub const PROOF_FILE: &str = "proof.p";
pub const PROVENANCE_FILE: &str = "provenance.json";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },
}

fn read(path: &Path) -> Result<String, CorpusError> {
    fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CorpusError> {
    fs::write(path, text).map_err(|source| CorpusError::Io { path: path.into(), source })
}

/// Problem directories of a corpus, sorted by name.
pub fn problem_dirs(dir: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    let rd = fs::read_dir(dir).map_err(|source| CorpusError::Io { path: dir.into(), source })?;
    let mut out: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.join(PROBLEM_FILE).is_file())
        .collect();
    out.sort();
    Ok(out)
}

fn dir_name(dir: &Path) -> String {
    dir.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// The problem of a problem directory, named after the directory.
pub fn load_problem(dir: &Path) -> Result<Problem, CorpusError> {
    let path = dir.join(PROBLEM_FILE);
    parse_cnf(&dir_name(dir), &read(&path)?).map_err(|source| CorpusError::Parse { path, source })
}

pub fn load_problems(dir: &Path) -> Result<Vec<Problem>, CorpusError> {
    problem_dirs(dir)?.iter().map(|d| load_problem(d)).collect()
}

/// Clauses the conjecture features are taken from: the negated conjecture,
/// or the whole problem when it has none.
pub fn conjecture_clauses(p: &Problem) -> Vec<Clause> {
    if p.has_conjecture() {
        p.conjecture().cloned().collect()
    } else {
        p.clauses.clone()
    }
}

pub fn entry_from_proof(problem: &Problem, proof: &[Clause], matched: Vec<String>) -> ProofCorpusEntry {
    ProofCorpusEntry {
        name: problem.name.clone(),
        features: extract_features(&conjecture_clauses(problem)),
        proof: proof.iter().map(alpha_normalize).collect(),
        matched_proof_names: matched,
    }
}

/// Corpus entry of a problem directory, `None` when it holds no proof.
pub fn load_entry(dir: &Path) -> Result<Option<ProofCorpusEntry>, CorpusError> {
    let proof_path = dir.join(PROOF_FILE);
    if !proof_path.is_file() {
        return Ok(None);
    }
    let problem = load_problem(dir)?;
    let proof = parse_clauses(&read(&proof_path)?).map_err(|source| CorpusError::Parse { path: proof_path, source })?;
    let prov_path = dir.join(PROVENANCE_FILE);
    let matched = if prov_path.is_file() {
        let prov: BTreeMap<String, Vec<String>> = serde_json::from_str(&read(&prov_path)?)
            .map_err(|source| CorpusError::Json { path: prov_path, source })?;
        let set: std::collections::BTreeSet<String> = prov.into_values().flatten().collect();
        set.into_iter().collect()
    } else {
        Vec::new()
    };
    Ok(Some(entry_from_proof(&problem, &proof, matched)))
}

/// Entries of every solved problem of the corpus, sorted by name.
pub fn load_corpus(dir: &Path) -> Result<Vec<ProofCorpusEntry>, CorpusError> {
    let mut out = Vec::new();
    for d in problem_dirs(dir)? {
        if let Some(e) = load_entry(&d)? {
            out.push(e);
        }
    }
    Ok(out)
}

/// Proof clause name to the names of the watchlists it matched.
pub fn provenance(proof: &ProofRecord) -> BTreeMap<String, Vec<String>> {
    proof
        .steps
        .iter()
        .filter(|s| s.is_guided())
        .map(|s| (ProofRecord::step_name(s.clause.id), proof.matched_names(s)))
        .collect()
}

/// Store `proof.p` and `provenance.json` in a problem directory.
pub fn write_proof(dir: &Path, proof: &ProofRecord) -> Result<(), CorpusError> {
    write(&dir.join(PROOF_FILE), &proof.to_tptp())?;
    let json = serde_json::to_string_pretty(&provenance(proof)).expect("string maps serialize");
    write(&dir.join(PROVENANCE_FILE), &(json + "\n"))
}
