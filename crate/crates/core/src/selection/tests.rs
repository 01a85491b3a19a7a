use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::fol::{normal_form_text, parse_clauses, parse_cnf, Clause, Problem};
use crate::fuzz::{clause_strategy, rename_and_shuffle, Signature};
use crate::saturation::{saturate, Budget, ProofRecord, ProofStep};
use crate::subsumption::WatchlistId;
use crate::watchlist::{GuidanceConfig, WatchlistGuidance};

fn cl(text: &str) -> Clause {
    parse_clauses(&format!("cnf(x, axiom, {text}).")).unwrap().remove(0)
}

fn bag(pairs: &[(&str, u32)]) -> FeatureBag {
    let mut b = FeatureBag::new();
    for &(f, n) in pairs {
        for _ in 0..n {
            b.add(f);
        }
    }
    b
}

fn entry(name: &str, features: FeatureBag, proof: &[&str]) -> ProofCorpusEntry {
    ProofCorpusEntry { name: name.into(), features, proof: proof.iter().map(|t| cl(t)).collect(), matched_proof_names: vec![] }
}

fn target(name: &str, conjecture: &str) -> Problem {
    parse_cnf(name, &format!("cnf(a, axiom, p(a)). cnf(c, negated_conjecture, {conjecture}).")).unwrap()
}

#[test]
fn feature_example() {
    let b = extract_features(&[cl("p(f(X))")]);
    let expect = bag(&[
        ("s:p", 1),
        ("s:f", 1),
        ("w:p>f", 1),
        ("w:f>VAR", 1),
        ("t:VAR", 1),
        ("t:f(VAR)", 1),
        ("t:p(f(VAR))", 1),
    ]);
    assert_eq!(b, expect);
}

#[test]
fn skolems_unified_in_subterms() {
    let b = extract_features(&[cl("p(sk3(a))")]);
    let subterms: BTreeSet<&str> = b.iter().filter(|(f, _)| f.starts_with("t:")).map(|(f, _)| f).collect();
    assert_eq!(subterms, BTreeSet::from(["t:a", "t:SK1(a)", "t:p(SK1(a))"]));
    assert_eq!(extract_features(&[cl("p(sk3(a))")]).0.keys().filter(|k| k.starts_with("t:")).count(), 3);
    let other = extract_features(&[cl("p(sk9(a))")]);
    assert_eq!(other.count("t:p(SK1(a))"), 1);
}

#[test]
fn triple_walks() {
    let b = extract_features_with(&[cl("p(f(X))")], FeatureConfig { walks: WalkLength::Triples });
    assert_eq!(b.count("w:p>f>VAR"), 1);
    assert_eq!(b.count("w:p>f"), 1);
}

proptest! {
    #[test]
    fn features_ignore_renaming(c in clause_strategy(Signature::small(), 4, 3), seed in any::<u64>()) {
        let v = rename_and_shuffle(&c, seed);
        prop_assert_eq!(extract_features(&[c]), extract_features(&[v]));
    }
}

fn toy_model() -> KnnModel {
    KnnModel::new(vec![
        entry("a", bag(&[("x", 1), ("y", 1)]), &["p(a)"]),
        entry("b", bag(&[("y", 2), ("z", 1)]), &["q(a)"]),
        entry("c", bag(&[("z", 1)]), &["r(a)"]),
    ])
}

#[test]
fn hand_computed_similarity() {
    let m = toy_model();
    let q = bag(&[("x", 1), ("y", 2), ("z", 1)]);
    let (l3, l15) = (3f64.ln(), 1.5f64.ln());
    let sims: Vec<f64> = m.ranked(&q).iter().map(|(_, s)| *s).collect();
    assert!((sims[0] - (l3 + l15)).abs() < 1e-12);
    assert!((sims[1] - 3.0 * l15).abs() < 1e-12);
    assert!((sims[2] - l15).abs() < 1e-12);
    assert_eq!(knn_suggest(&m, &q, 3), vec!["a", "b", "c"]);
    assert_eq!(knn_suggest(&m, &q, 2), vec!["a", "b"]);
    assert!(m.idf.values().all(|v| *v >= 0.0));
}

#[test]
fn disjoint_query_ties_by_name() {
    let m = toy_model();
    assert_eq!(knn_suggest(&m, &bag(&[("nothing", 1)]), 5), vec!["a", "b", "c"]);
    assert!(knn_suggest(&KnnModel::new(vec![]), &bag(&[("x", 1)]), 3).is_empty());
}

#[test]
fn self_similarity_is_maximal() {
    let sig = Signature::small();
    let entries: Vec<ProofCorpusEntry> = (0..20)
        .map(|i| {
            let cs: Vec<Clause> = (0..3).map(|j| crate::fuzz::random_clause_seeded(i * 10 + j, &sig, 3, 3)).collect();
            ProofCorpusEntry { name: format!("e{i:02}"), features: extract_features(&cs), ..Default::default() }
        })
        .collect();
    let m = KnnModel::new(entries.clone());
    for e in &entries {
        let own = m.similarity(&e.features, &e.features);
        for o in &entries {
            assert!(own >= m.similarity(&e.features, &o.features) - 1e-12);
        }
    }
}

#[test]
fn suggestions_ignore_corpus_order() {
    let sig = Signature::small();
    let mut entries: Vec<ProofCorpusEntry> = (0..15)
        .map(|i| {
            let cs = vec![crate::fuzz::random_clause_seeded(i, &sig, 3, 2)];
            ProofCorpusEntry { name: format!("e{i:02}"), features: extract_features(&cs), ..Default::default() }
        })
        .collect();
    let q = extract_features(&[crate::fuzz::random_clause_seeded(999, &sig, 3, 2)]);
    let base = knn_suggest(&KnnModel::new(entries.clone()), &q, 6);
    assert!(base.len() <= 6);
    for seed in 0..10u64 {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        entries.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        assert_eq!(knn_suggest(&KnnModel::new(entries.clone()), &q, 6), base);
    }
}

#[test]
fn family_names() {
    assert_eq!(family("lat_12"), "lat");
    assert_eq!(family("rel_alg_3"), "rel_alg");
    assert_eq!(family("plain"), "plain");
    assert_eq!(family("x_y"), "x_y");
}

#[test]
fn art_collects_family_proofs() {
    let corpus = vec![
        entry("fam_1", bag(&[]), &["p(a)", "q(a)", "$false"]),
        entry("fam_2", bag(&[]), &["p(b)", "q(b)", "r(b)", "$false"]),
        entry("fam_3", bag(&[]), &["s(c)"]),
        entry("other_1", bag(&[]), &["t(a)"]),
    ];
    let sets = build_watchlists(Method::Art, &target("fam_3", "~p(a)"), &corpus, SelectParams::default());
    assert_eq!(sets.len(), 1);
    assert_eq!(sets[0].1.len(), 7);
    assert!(!sets[0].1.iter().any(|c| c.to_string() == "s(c)"));
    assert!(build_watchlists(Method::Art, &target("lonely_1", "~p(a)"), &corpus, SelectParams::default()).is_empty());
}

#[test]
fn freq_takes_most_frequent() {
    let corpus = vec![
        entry("a", bag(&[]), &["p(X)", "q(a)"]),
        entry("b", bag(&[]), &["p(Y)", "q(a)", "r(a)"]),
        entry("c", bag(&[]), &["p(Z)"]),
    ];
    let params = SelectParams { max_clauses: 2, ..Default::default() };
    let sets = build_watchlists(Method::Freq, &target("t", "~p(a)"), &corpus, params);
    let texts: Vec<String> = sets[0].1.iter().map(normal_form_text).collect();
    assert_eq!(texts, vec!["p(X0)", "q(a)"]);
    let mut rev = corpus.clone();
    rev.reverse();
    for e in &mut rev {
        e.proof.reverse();
    }
    let again = build_watchlists(Method::Freq, &target("t", "~p(a)"), &rev, params);
    assert_eq!(again[0].1.iter().map(normal_form_text).collect::<Vec<_>>(), texts);
}

fn similar_corpus(n: usize) -> Vec<ProofCorpusEntry> {
    (0..n)
        .map(|i| {
            let conj = cl(&format!("~p(f{}(a))", i % 5));
            ProofCorpusEntry {
                name: format!("e_{i}"),
                features: extract_features(&[conj]),
                proof: vec![cl(&format!("q{i}(a)")), cl("$false")],
                matched_proof_names: vec![],
            }
        })
        .collect()
}

#[test]
fn knn_dyn_one_file_per_proof() {
    let corpus = similar_corpus(40);
    for k in [16, 32] {
        let sets = build_watchlists(Method::KnnDyn, &target("e_3", "~p(f3(a))"), &corpus, SelectParams { k, ..Default::default() });
        assert_eq!(sets.len(), k);
        assert!(sets.iter().all(|(n, _)| n != "e_3"));
        // same-conjecture neighbours first
        assert!(sets[..7].iter().all(|(n, _)| n[2..].parse::<usize>().unwrap() % 5 == 3), "{:?}", sets.iter().map(|s| &s.0).collect::<Vec<_>>());
    }
}

#[test]
fn knn_st_dedups_and_caps() {
    let mut corpus = similar_corpus(10);
    for e in &mut corpus {
        e.proof.push(cl("shared(X)"));
    }
    let params = SelectParams { k: 4, max_clauses: 3, round2: false };
    let sets = build_watchlists(Method::KnnSt, &target("t", "~p(f1(a))"), &corpus, params);
    assert_eq!(sets.len(), 1);
    let texts: Vec<String> = sets[0].1.iter().map(normal_form_text).collect();
    assert_eq!(texts.len(), 3);
    assert_eq!(texts.iter().collect::<BTreeSet<_>>().len(), 3);
    assert!(texts.contains(&"$false".to_string()) && texts.contains(&"shared(X0)".to_string()));
}

fn record(problem: &str, matched: &[&[u32]], names: &[&str]) -> ProofRecord {
    ProofRecord {
        problem: problem.into(),
        steps: matched
            .iter()
            .map(|m| ProofStep { clause: cl("p(a)"), matched: m.iter().map(|w| WatchlistId(*w)).collect() })
            .collect(),
        watchlists: names.iter().map(|s| s.to_string()).collect(),
    }
}

#[test]
fn round2_collapses_names() {
    let mut corpus = vec![entry("x", bag(&[]), &["p(a)"]), entry("y", bag(&[]), &["p(a)"])];
    let r1 = record("x", &[&[0], &[0], &[1, 0], &[]], &["w1", "w3"]);
    let r2 = record("y", &[&[], &[]], &["w1"]);
    mine_round2(&mut corpus, &[r1, r2]);
    assert_eq!(corpus[0].matched_proof_names, vec!["w1", "w3"]);
    assert!(corpus[1].matched_proof_names.is_empty());
}

#[test]
fn round2_prefers_guiding_proofs() {
    let fx = extract_features(&[cl("~p(f(a))")]);
    let gx = extract_features(&[cl("~q(g(b))")]);
    let mut corpus = vec![
        ProofCorpusEntry { name: "solved".into(), features: fx.clone(), proof: vec![cl("$false")], matched_proof_names: vec![] },
        ProofCorpusEntry { name: "helper".into(), features: gx, proof: vec![cl("$false")], matched_proof_names: vec![] },
    ];
    mine_round2(&mut corpus, &[record("solved", &[&[0]], &["helper"])]);
    let m = KnnModel::new(corpus.clone());
    assert_eq!(knn_suggest(&m, &fx, 1), vec!["solved"]);
    assert_eq!(knn_suggest_round2(&m, &fx, 1, "target"), vec!["helper"]);
    let t = parse_cnf("target", "cnf(c, negated_conjecture, ~p(f(a))).").unwrap();
    let sets = build_watchlists(Method::KnnDyn, &t, &corpus, SelectParams { k: 2, round2: true, ..Default::default() });
    assert_eq!(sets.iter().map(|s| s.0.as_str()).collect::<Vec<_>>(), vec!["helper", "solved"]);
}

#[test]
fn watchlist_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let sets = vec![
        ("one".to_string(), vec![cl("p(X) | ~q(X, a)"), cl("$false")]),
        ("two".to_string(), vec![cl("'odd name'(b)"), cl("X = f(Y)")]),
    ];
    let paths = write_watchlists(dir.path(), &sets).unwrap();
    assert_eq!(paths.len(), 2);
    for (path, (_, clauses)) in paths.iter().zip(&sets) {
        let back = parse_clauses(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(back.len(), clauses.len());
        for (a, b) in back.iter().zip(clauses) {
            assert_eq!(a.literals, b.literals);
        }
    }
}

#[test]
fn corpus_round_trip_with_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let pdir = dir.path().join("grp_1");
    std::fs::create_dir_all(&pdir).unwrap();
    let text = "cnf(a, axiom, p(X)). cnf(b, axiom, ~p(a) | q(a)). cnf(c, negated_conjecture, ~q(a)).";
    std::fs::write(pdir.join(PROBLEM_FILE), text).unwrap();
    std::fs::create_dir_all(dir.path().join("grp_2")).unwrap();
    std::fs::write(dir.path().join("grp_2").join(PROBLEM_FILE), text).unwrap();

    let p = load_problem(&pdir).unwrap();
    assert_eq!(p.name, "grp_1");
    let wl = vec![("helper".to_string(), vec![cl("q(a)")])];
    let mut g = WatchlistGuidance::from_sets(wl, GuidanceConfig { mode: crate::watchlist::RelevanceMode::Dyn, ..Default::default() });
    let s = crate::saturation::resolve_strategy("fifo").unwrap();
    let res = saturate(&p, &s, &mut g, &Budget::given(100)).unwrap();
    let proof = res.outcome.proof().unwrap();
    write_proof(&pdir, proof).unwrap();

    let corpus = load_corpus(dir.path()).unwrap();
    assert_eq!(corpus.len(), 1);
    assert_eq!(corpus[0].name, "grp_1");
    assert_eq!(corpus[0].proof.len(), proof.len());
    assert_eq!(corpus[0].matched_proof_names, vec!["helper"]);
    assert_eq!(corpus[0].features, extract_features(&conjecture_clauses(&p)));
    assert_eq!(load_problems(dir.path()).unwrap().len(), 2);

    let extracted = extract_watchlist(proof);
    assert_eq!(extracted.len(), proof.len());
    let g2 = WatchlistGuidance::from_sets(vec![("own".into(), extracted)], GuidanceConfig::default());
    assert_eq!(g2.watchlists()[0].size(), proof.len());
    assert_eq!(g2.progress_vector(), vec![0.0]);
}
