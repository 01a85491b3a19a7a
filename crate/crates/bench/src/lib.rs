//! Shared fixtures for the benchmarks.

use std::path::PathBuf;

use wlprove::fol::{Clause, Problem};
use wlprove::fuzz::{random_clause_seeded, Signature};
use wlprove::selection::load_problem;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// A problem of the bundled corpus by directory name.
pub fn corpus_problem(name: &str) -> Problem {
    load_problem(&corpus_dir().join(name)).expect("bundled problem loads")
}

/// `n` random clauses over the small fuzz signature, reproducible per seed.
pub fn random_clauses(seed: u64, n: usize, max_literals: usize, depth: usize) -> Vec<Clause> {
    let sig = Signature::small();
    (0..n as u64).map(|i| random_clause_seeded(seed.wrapping_mul(1_000_003).wrapping_add(i), &sig, max_literals, depth)).collect()
}
