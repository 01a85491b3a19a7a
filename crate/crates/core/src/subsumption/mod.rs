//! Clause subsumption and the feature-vector index over watchlist clauses.

mod features;
mod index;
mod matching;
mod watch;

pub use features::{clause_features, ClauseFeatureVector, DIMENSIONS, SYMBOL_BUCKETS};
pub use index::FeatureIndex;
pub use matching::subsumes;
pub use watch::{IndexError, WatchEntry, WatchlistId, WatchlistIndex};

#[cfg(test)]
mod tests;
