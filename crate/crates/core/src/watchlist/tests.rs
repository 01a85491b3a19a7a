use std::collections::BTreeSet;

use super::*;
use crate::fol::{parse_clauses, Clause};
use crate::subsumption::WatchlistId;

fn cls(text: &str) -> Vec<Clause> {
    parse_clauses(text).unwrap()
}

fn cl(t: &str) -> Clause {
    cls(&format!("cnf(x, axiom, {t}).")).remove(0)
}

fn dyn_config() -> GuidanceConfig {
    GuidanceConfig { mode: RelevanceMode::Dyn, ..Default::default() }
}

fn write_lists(dir: &std::path::Path) -> Vec<std::path::PathBuf> {
    let a = dir.join("w1.p");
    let b = dir.join("w2.p");
    std::fs::write(&a, "cnf(a1, plain, p(a)). cnf(a2, plain, p(b)). cnf(a3, plain, $false).").unwrap();
    std::fs::write(&b, "cnf(b1, plain, q(a)). cnf(b2, plain, q(b)). cnf(b3, plain, r(a)). cnf(b4, plain, $false).").unwrap();
    vec![a, b]
}

#[test]
fn load_dynamic_and_static() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_lists(dir.path());
    let g = load_watchlists(&files, dyn_config()).unwrap();
    assert_eq!(g.watchlists().iter().map(Watchlist::size).collect::<Vec<_>>(), vec![3, 4]);
    assert_eq!(g.progress_vector(), vec![0.0, 0.0]);
    assert_eq!(g.watchlists()[0].source, "w1");

    let s = load_watchlists(&files, GuidanceConfig::default()).unwrap();
    assert_eq!(s.watchlists().len(), 1);
    assert_eq!(s.watchlists()[0].size(), 7);
}

#[test]
fn no_files_means_zero_relevance() {
    let mut g = load_watchlists::<&str>(&[], dyn_config()).unwrap();
    assert!(g.progress_vector().is_empty());
    let e = g.record_generated(&cl("p(X)"));
    assert_eq!(e.relevance0, 0.0);
    assert!(!e.is_match());
}

#[test]
fn empty_file_dropped() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("empty.p");
    std::fs::write(&f, "% nothing here\n").unwrap();
    let g = load_watchlists(&[f], dyn_config()).unwrap();
    assert!(g.is_empty());
}

#[test]
fn parse_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.p");
    std::fs::write(&f, "cnf(a, axiom, p(").unwrap();
    let e = load_watchlists(&[f], dyn_config()).unwrap_err();
    assert!(e.to_string().contains("bad.p"), "{e}");
}

fn two_lists(no_remove: bool) -> WatchlistGuidance {
    // W1 has 4 clauses, W2 has 10
    let w1 = cls("cnf(a, plain, s(a)). cnf(b, plain, t(a)). cnf(c, plain, u(a)). cnf(d, plain, v(a)).");
    let mut w2_text = String::from("cnf(x0, plain, s(b)). cnf(x1, plain, t(b)).");
    for i in 2..10 {
        w2_text.push_str(&format!("cnf(x{i}, plain, w{i}(b)). "));
    }
    let w2 = cls(&w2_text);
    WatchlistGuidance::from_sets(
        vec![("w1".into(), w1), ("w2".into(), w2)],
        GuidanceConfig { no_remove, ..dyn_config() },
    )
}

#[test]
fn relevance0_after_counter_update() {
    let mut g = two_lists(false);
    // bring both watchlists to progress 1
    g.record_generated(&cl("s(X)"));
    assert_eq!(g.progress_vector(), vec![0.25, 0.1]);
    // one clause each in W1 and W2
    let e = g.record_generated(&cl("t(X)"));
    assert_eq!(e.matched.len(), 2);
    assert_eq!(g.watchlists()[0].progress, 2);
    assert_eq!(g.watchlists()[1].progress, 2);
    assert_eq!(e.relevance0, 0.5);
}

#[test]
fn non_matching_clause() {
    let mut g = two_lists(false);
    let before = g.progress_vector();
    let e = g.record_generated(&cl("zz(a)"));
    assert_eq!(e.relevance0, 0.0);
    assert!(e.matched.is_empty());
    assert_eq!(g.progress_vector(), before);
}

#[test]
fn no_remove_counts_distinct_clauses() {
    let mut g = two_lists(true);
    let e1 = g.record_generated(&cl("s(a)"));
    let e2 = g.record_generated(&cl("s(X)"));
    assert_eq!(g.watchlists()[0].progress, 1);
    // still matched, so still preferred
    assert!(e1.is_match() && e2.is_match());
    assert_eq!(e2.relevance0, 0.25);

    let mut h = two_lists(false);
    h.record_generated(&cl("s(a)"));
    let e = h.record_generated(&cl("s(X)"));
    // s(a) is gone, only W2's s(b) is left
    assert_eq!(e.matched, vec![(WatchlistId(1), crate::fol::ClauseId(0))]);
}

#[test]
fn relevance0_formula() {
    let mut g = two_lists(false);
    for t in ["s(X)", "t(X)", "u(X)"] {
        g.record_generated(&cl(t));
    }
    let w1 = BTreeSet::from([WatchlistId(0)]);
    let both = BTreeSet::from([WatchlistId(0), WatchlistId(1)]);
    assert_eq!(g.relevance0(&w1), 0.75);
    assert_eq!(g.relevance0(&both), 0.75);
    assert_eq!(g.relevance0(&BTreeSet::new()), 0.0);
}

#[test]
fn completion_needs_the_empty_clause() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_lists(dir.path());
    let mut g = load_watchlists(&files, dyn_config()).unwrap();
    for t in ["p(X)", "q(X)", "r(X)"] {
        g.record_generated(&cl(t));
    }
    assert!(!g.any_complete());
    g.record_generated(&cl("$false"));
    assert!(g.any_complete());
    assert_eq!(g.progress_vector(), vec![1.0, 1.0]);
}

#[test]
fn counters_bounded_and_monotone() {
    use rand::SeedableRng;
    let sig = crate::fuzz::Signature::small();
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let lists: Vec<(String, Vec<Clause>)> = (0..4)
        .map(|i| (format!("w{i}"), (0..15).map(|_| crate::fuzz::random_clause(&mut rng, &sig, 2, 2)).collect()))
        .collect();
    for no_remove in [false, true] {
        let mut g = WatchlistGuidance::from_sets(lists.clone(), GuidanceConfig { no_remove, ..dyn_config() });
        let mut last = vec![0usize; 4];
        for _ in 0..300 {
            let c = crate::fuzz::random_clause(&mut rng, &sig, 2, 2);
            let e = g.record_generated(&c);
            assert_eq!(e.is_match(), e.relevance0 > 0.0);
            assert!((0.0..=1.0).contains(&e.relevance0));
            for (w, l) in g.watchlists().iter().zip(last.iter_mut()) {
                assert!(w.progress >= *l && w.progress <= w.size());
                assert_eq!(w.progress, w.clauses.iter().filter(|c| c.encountered).count());
                *l = w.progress;
            }
        }
    }
}
