use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::features::{clause_features, ClauseFeatureVector};
use super::index::FeatureIndex;
use super::subsumes;
use crate::fol::{Clause, ClauseId};

/// Position of a watchlist in load order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WatchlistId(pub u32);

impl fmt::Display for WatchlistId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("clause {clause} already indexed for watchlist {watchlist}")]
    Duplicate { watchlist: WatchlistId, clause: ClauseId },
}

#[derive(Clone, Debug)]
pub struct WatchEntry {
    pub watchlist: WatchlistId,
    pub clause_id: ClauseId,
    pub clause: Clause,
    pub alive: bool,
    features: ClauseFeatureVector,
}

/// Watchlist clauses of all loaded watchlists, indexed for retrieval of the
/// entries a new clause subsumes.
#[derive(Debug)]
pub struct WatchlistIndex {
    entries: Vec<WatchEntry>,
    keys: HashMap<(WatchlistId, ClauseId), usize>,
    fvi: FeatureIndex,
    ska: bool,
    brute_force: bool,
}

impl WatchlistIndex {
    /// `ska` selects skolem-merged features; queries with `ska` set need them.
    pub fn new(ska: bool) -> WatchlistIndex {
        WatchlistIndex { entries: Vec::new(), keys: HashMap::new(), fvi: FeatureIndex::new(), ska, brute_force: false }
    }

    /// Scan every alive entry instead of consulting the trie.
    pub fn brute_force(ska: bool) -> WatchlistIndex {
        WatchlistIndex { brute_force: true, ..WatchlistIndex::new(ska) }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn alive_count(&self) -> usize {
        self.entries.iter().filter(|e| e.alive).count()
    }

    pub fn entry(&self, i: usize) -> &WatchEntry {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[WatchEntry] {
        &self.entries
    }

    pub fn insert(&mut self, watchlist: WatchlistId, clause: Clause) -> Result<usize, IndexError> {
        let key = (watchlist, clause.id);
        if self.keys.contains_key(&key) {
            return Err(IndexError::Duplicate { watchlist, clause: clause.id });
        }
        let i = self.entries.len();
        let features = clause_features(&clause, self.ska);
        self.fvi.insert(&features, i);
        self.entries.push(WatchEntry { watchlist, clause_id: clause.id, clause, alive: true, features });
        self.keys.insert(key, i);
        Ok(i)
    }

    /// Mark an entry dead; it is no longer returned by retrieval.
    pub fn kill(&mut self, i: usize) {
        let e = &mut self.entries[i];
        if e.alive {
            e.alive = false;
            self.fvi.remove(&e.features, i);
        }
    }

    pub fn kill_clause(&mut self, watchlist: WatchlistId, clause: ClauseId) -> bool {
        match self.keys.get(&(watchlist, clause)) {
            Some(&i) => {
                self.kill(i);
                true
            }
            None => false,
        }
    }

    /// Alive entries that `c` may subsume, a superset of the true matches.
    pub fn candidates(&self, c: &Clause, ska: bool) -> Vec<usize> {
        if self.brute_force || (ska && !self.ska) {
            return (0..self.entries.len()).filter(|&i| self.entries[i].alive).collect();
        }
        let mut out = Vec::new();
        self.fvi.dominating(&clause_features(c, self.ska), &mut out);
        out.sort_unstable();
        out
    }

    /// Entries (ascending) subsumed by `c`.
    pub fn subsumed_entries(&self, c: &Clause, ska: bool) -> Vec<usize> {
        self.candidates(c, ska)
            .into_iter()
            .filter(|&i| subsumes(c, &self.entries[i].clause, ska))
            .collect()
    }

    /// The alive `(watchlist, clause)` pairs subsumed by `c`.
    pub fn find_subsumed(&self, c: &Clause, ska: bool) -> Vec<(WatchlistId, ClauseId)> {
        let mut out: Vec<_> = self
            .subsumed_entries(c, ska)
            .into_iter()
            .map(|i| (self.entries[i].watchlist, self.entries[i].clause_id))
            .collect();
        out.sort();
        out
    }
}
