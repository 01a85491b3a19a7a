//! Choosing watchlists for a problem from the proofs of other problems.

mod build;
mod corpus;
mod features;
mod knn;

pub use build::{
    build_watchlists, extract_watchlist, family, mine_round2, watchlist_text, write_watchlists, Method, SelectParams,
    WatchlistSet,
};
pub use corpus::{
    conjecture_clauses, entry_from_proof, load_corpus, load_entry, load_problem, load_problems, problem_dirs,
    provenance, write_proof, CorpusError, PROBLEM_FILE, PROOF_FILE, PROVENANCE_FILE,
};
pub use features::{extract_features, extract_features_with, FeatureBag, FeatureConfig, WalkLength, VAR_TOKEN};
pub use knn::{knn_suggest, knn_suggest_round2, KnnModel, ProofCorpusEntry};

#[cfg(test)]
mod tests;
