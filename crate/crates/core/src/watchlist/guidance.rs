use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::relevance::{RelevanceMode, RelevanceParams};
use crate::fol::{parse_clauses, Clause, ClauseId, ParseError};
use crate::subsumption::{WatchlistId, WatchlistIndex};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GuidanceConfig {
    pub mode: RelevanceMode,
    pub no_remove: bool,
    pub ska: bool,
    pub params: RelevanceParams,
    /// Keep every generated clause with its match event for offline replay.
    pub record_log: bool,
}

#[derive(Clone, Debug)]
pub struct WatchlistClause {
    pub id: ClauseId,
    pub clause: Clause,
    pub encountered: bool,
}

#[derive(Clone, Debug)]
pub struct Watchlist {
    pub id: WatchlistId,
    /// Name of the proof the watchlist came from (file stem).
    pub source: String,
    pub clauses: Vec<WatchlistClause>,
    pub progress: usize,
}

impl Watchlist {
    pub fn size(&self) -> usize {
        self.clauses.len()
    }

    pub fn completion(&self) -> f64 {
        self.progress as f64 / self.size() as f64
    }

    pub fn is_complete(&self) -> bool {
        self.progress == self.size()
    }
}

/// Result of checking one generated clause against the watchlists.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchEvent {
    pub clause: ClauseId,
    pub matched: Vec<(WatchlistId, ClauseId)>,
    pub relevance0: f64,
}

impl MatchEvent {
    pub fn is_match(&self) -> bool {
        !self.matched.is_empty()
    }

    /// Distinct watchlists hit, ascending.
    pub fn watchlists(&self) -> Vec<WatchlistId> {
        let set: BTreeSet<WatchlistId> = self.matched.iter().map(|m| m.0).collect();
        set.into_iter().collect()
    }
}

/// Progress tracking over a set of watchlists for one proof search.
#[derive(Debug)]
pub struct WatchlistGuidance {
    watchlists: Vec<Watchlist>,
    index: WatchlistIndex,
    // index entry -> (watchlist position, clause slot)
    slots: Vec<(usize, usize)>,
    config: GuidanceConfig,
    log: Vec<(Clause, MatchEvent)>,
    events: usize,
    match_events: usize,
}

impl WatchlistGuidance {
    /// Guidance with no watchlists; every clause gets relevance 0.
    pub fn empty(config: GuidanceConfig) -> WatchlistGuidance {
        WatchlistGuidance::from_sets(Vec::new(), config)
    }

    /// Build from named clause sets. Empty sets are dropped; in static mode
    /// all sets are merged into one watchlist named `static`.
    pub fn from_sets(sets: Vec<(String, Vec<Clause>)>, config: GuidanceConfig) -> WatchlistGuidance {
        let sets = if config.mode == RelevanceMode::Static && !sets.is_empty() {
            vec![("static".to_string(), sets.into_iter().flat_map(|(_, cs)| cs).collect())]
        } else {
            sets
        };
        let mut g = WatchlistGuidance {
            watchlists: Vec::new(),
            index: WatchlistIndex::new(config.ska),
            slots: Vec::new(),
            config,
            log: Vec::new(),
            events: 0,
            match_events: 0,
        };
        for (source, clauses) in sets {
            if clauses.is_empty() {
                log::warn!("dropping empty watchlist {source}");
                continue;
            }
            let pos = g.watchlists.len();
            let wid = WatchlistId(pos as u32);
            let mut wl = Watchlist { id: wid, source, clauses: Vec::with_capacity(clauses.len()), progress: 0 };
            for (slot, mut c) in clauses.into_iter().enumerate() {
                // ids are renumbered so merged files cannot collide
                c.id = ClauseId(slot as u32);
                let e = g.index.insert(wid, c.clone()).expect("fresh ids are unique");
                debug_assert_eq!(e, g.slots.len());
                g.slots.push((pos, slot));
                wl.clauses.push(WatchlistClause { id: c.id, clause: c, encountered: false });
            }
            g.watchlists.push(wl);
        }
        g
    }

    pub fn config(&self) -> &GuidanceConfig {
        &self.config
    }

    pub fn watchlists(&self) -> &[Watchlist] {
        &self.watchlists
    }

    pub fn watchlist(&self, id: WatchlistId) -> &Watchlist {
        &self.watchlists[id.0 as usize]
    }

    pub fn is_empty(&self) -> bool {
        self.watchlists.is_empty()
    }

    pub fn total_clauses(&self) -> usize {
        self.watchlists.iter().map(Watchlist::size).sum()
    }

    /// Check a freshly generated clause against all alive watchlist clauses and
    /// advance the progress counters.
    pub fn record_generated(&mut self, c: &Clause) -> MatchEvent {
        self.events += 1;
        let mut matched = Vec::new();
        if !self.watchlists.is_empty() {
            for e in self.index.subsumed_entries(c, self.config.ska) {
                let (w, slot) = self.slots[e];
                let wl = &mut self.watchlists[w];
                let entry = &mut wl.clauses[slot];
                if !entry.encountered {
                    entry.encountered = true;
                    wl.progress += 1;
                }
                matched.push((wl.id, entry.id));
                if !self.config.no_remove {
                    self.index.kill(e);
                }
            }
            matched.sort();
        }
        let hit: BTreeSet<WatchlistId> = matched.iter().map(|m| m.0).collect();
        let event = MatchEvent { clause: c.id, relevance0: self.relevance0(&hit), matched };
        if event.is_match() {
            self.match_events += 1;
        }
        if self.config.record_log {
            self.log.push((c.clone(), event.clone()));
        }
        event
    }

    /// Highest completion ratio among `matched`; 0 for none.
    pub fn relevance0(&self, matched: &BTreeSet<WatchlistId>) -> f64 {
        matched.iter().map(|w| self.watchlist(*w).completion()).fold(0.0, f64::max)
    }

    /// Completion ratio of each watchlist in load order.
    pub fn progress_vector(&self) -> Vec<f64> {
        self.watchlists.iter().map(Watchlist::completion).collect()
    }

    pub fn any_complete(&self) -> bool {
        self.watchlists.iter().any(Watchlist::is_complete)
    }

    pub fn events(&self) -> usize {
        self.events
    }

    pub fn match_events(&self) -> usize {
        self.match_events
    }

    /// Generated clauses and their events, if `record_log` was set.
    pub fn log(&self) -> &[(Clause, MatchEvent)] {
        &self.log
    }
}

/// Load one watchlist per file; the file stem names the watchlist.
pub fn load_watchlists<P: AsRef<Path>>(paths: &[P], config: GuidanceConfig) -> Result<WatchlistGuidance, LoadError> {
    let mut sets = Vec::with_capacity(paths.len());
    for p in paths {
        let path = p.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.into(), source })?;
        let clauses = parse_clauses(&text).map_err(|source| LoadError::Parse { path: path.into(), source })?;
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        sets.push((stem, clauses));
    }
    Ok(WatchlistGuidance::from_sets(sets, config))
}

/// All `*.p` files of a directory, sorted by name.
pub fn watchlist_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "p"))
        .collect();
    out.sort();
    Ok(out)
}
