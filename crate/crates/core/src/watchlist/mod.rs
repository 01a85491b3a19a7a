//! Watchlist guidance: progress counters over previously found proofs and the
//! relevance scores derived from them.

mod guidance;
mod relevance;

pub use guidance::{
    load_watchlists, watchlist_files, GuidanceConfig, LoadError, MatchEvent, Watchlist, WatchlistClause,
    WatchlistGuidance,
};
pub use relevance::{format_ratio, relevance1, relevance2, RelevanceMode, RelevanceParams};

#[cfg(test)]
mod tests;
