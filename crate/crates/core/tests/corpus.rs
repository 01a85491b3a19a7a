use std::path::PathBuf;

use wlprove::fol::{alpha_equivalent, parse_clauses, parse_cnf, print_clause, Problem};
use wlprove::harness::{read_results, run_corpus, CorpusOptions, RunConfig};
use wlprove::saturation::{builtin, check_proof, saturate, Budget, Outcome};
use wlprove::selection::load_problems;
use wlprove::watchlist::{GuidanceConfig, WatchlistGuidance};

fn bundled() -> Vec<Problem> {
    load_problems(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")).unwrap()
}

#[test]
fn bundled_corpus_shape() {
    let problems = bundled();
    assert_eq!(problems.len(), 60);
    for fam in ["grp", "lat", "rel"] {
        assert_eq!(problems.iter().filter(|p| p.name.starts_with(fam)).count(), 20);
    }
    assert!(problems.iter().all(|p| p.has_conjecture()));
}

#[test]
fn corpus_clauses_round_trip() {
    let mut n = 0;
    for p in bundled() {
        for c in &p.clauses {
            let back = parse_clauses(&print_clause(c)).unwrap();
            assert_eq!(back.len(), 1);
            assert!(alpha_equivalent(c, &back[0]), "{}", print_clause(c));
            n += 1;
        }
    }
    assert!(n > 500);
}

#[test]
fn thirty_problems_two_strategies() {
    let problems: Vec<Problem> = bundled().into_iter().take(30).collect();
    let configs = [RunConfig::unguided("fifo", builtin("fifo").unwrap()), RunConfig::unguided("weight", builtin("weight").unwrap())];
    let opts = CorpusOptions { budget: Budget { max_given: Some(200), max_generated: Some(5_000), max_seconds: None }, ..Default::default() };
    let mut buf = Vec::new();
    let out = run_corpus(&problems, &configs, &opts, Some(&mut buf)).unwrap();
    assert_eq!(out.len(), 60);
    let rows = read_results(&buf[..]).unwrap();
    assert_eq!(rows.len(), 60);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r.problem, problems[i / 2].name);
        assert_eq!(r.strategy, configs[i % 2].name);
        assert_ne!(r.result, "error");
    }
}

fn chain(n: usize) -> String {
    let mut t = "a".to_string();
    for _ in 0..n {
        t = format!("f({t})");
    }
    format!("cnf(base, axiom, p(a)). cnf(step, axiom, ~p(X) | p(f(X))). cnf(goal, negated_conjecture, ~p({t})).")
}

fn transitive(n: usize) -> String {
    let mut s: String = (0..n).map(|i| format!("cnf(e{i}, axiom, r(c{i},c{})). ", i + 1)).collect();
    s.push_str(&format!("cnf(trans, axiom, ~r(X,Y) | ~r(Y,Z) | r(X,Z)). cnf(goal, negated_conjecture, ~r(c0,c{n}))."));
    s
}

fn all_signs(k: usize) -> String {
    (0..1usize << k)
        .map(|m| {
            let lits: Vec<String> = (0..k).map(|i| format!("{}q{i}", if m >> i & 1 == 1 { "~" } else { "" })).collect();
            format!("cnf(s{m}, axiom, {}). ", lits.join(" | "))
        })
        .collect()
}

fn pigeons(holes: usize) -> String {
    let mut s = String::new();
    for p in 0..=holes {
        let lits: Vec<String> = (0..holes).map(|h| format!("in(p{p},h{h})")).collect();
        s.push_str(&format!("cnf(some{p}, axiom, {}). ", lits.join(" | ")));
    }
    for h in 0..holes {
        for a in 0..=holes {
            for b in a + 1..=holes {
                s.push_str(&format!("cnf(excl_{h}_{a}_{b}, axiom, ~in(p{a},h{h}) | ~in(p{b},h{h})). "));
            }
        }
    }
    s
}

fn nested(n: usize) -> String {
    let mut t = "a".to_string();
    for _ in 0..n {
        t = format!("f({t})");
    }
    format!("cnf(pair, axiom, p(X,f(X))). cnf(goal, negated_conjecture, ~p({t},f({t}))).")
}

/// Known-unsatisfiable problems without equality, small enough for FIFO.
fn desk_suite() -> Vec<Problem> {
    let mut texts: Vec<(String, String)> = Vec::new();
    for n in 1..=8 {
        texts.push((format!("chain_{n}"), chain(n)));
    }
    for n in 2..=6 {
        texts.push((format!("trans_{n}"), transitive(n)));
    }
    for k in 1..=3 {
        texts.push((format!("signs_{k}"), all_signs(k)));
    }
    for h in 1..=2 {
        texts.push((format!("php_{h}"), pigeons(h)));
    }
    for n in 1..=4 {
        texts.push((format!("nested_{n}"), nested(n)));
    }
    let extra = [
        "cnf(a, axiom, p(X) | p(Y)). cnf(b, axiom, ~p(X) | ~p(Y)).",
        "cnf(a, axiom, q(X) | r(X)). cnf(b, axiom, ~q(a)). cnf(c, negated_conjecture, ~r(a)).",
        "cnf(a, axiom, le(X,X)). cnf(b, negated_conjecture, ~le(meet(a,b),meet(a,b))).",
        "cnf(a, axiom, s(X,Y) | ~s(Y,X)). cnf(b, axiom, s(a,b)). cnf(c, negated_conjecture, ~s(b,a)).",
        "cnf(a, axiom, p(e,X,X)). cnf(b, axiom, p(i(X),X,e)). cnf(c, axiom, ~p(X,Y,Z) | q(Z)). cnf(d, negated_conjecture, ~q(e)).",
        "cnf(a, axiom, m(X) | ~h(X)). cnf(b, axiom, h(socrates)). cnf(c, axiom, ~m(X) | d(X)). cnf(g, negated_conjecture, ~d(socrates)).",
        "cnf(a, axiom, p(X,Y) | q(Y)). cnf(b, axiom, ~p(a,b)). cnf(c, negated_conjecture, ~q(b)).",
        "cnf(a, axiom, r(X,g(X))). cnf(b, axiom, ~r(a,Y) | s(Y)). cnf(c, negated_conjecture, ~s(g(a))).",
    ];
    for (i, t) in extra.iter().enumerate() {
        texts.push((format!("misc_{i}"), t.to_string()));
    }
    texts.iter().map(|(n, t)| parse_cnf(n, t).unwrap()).collect()
}

#[test]
fn fifo_refutes_desk_suite() {
    let suite = desk_suite();
    assert_eq!(suite.len(), 30);
    let fifo = builtin("fifo").unwrap();
    let budget = Budget { max_given: Some(10_000), max_generated: Some(500_000), max_seconds: None };
    for p in &suite {
        let mut g = WatchlistGuidance::empty(GuidanceConfig::default());
        let res = saturate(p, &fifo, &mut g, &budget).unwrap();
        match &res.outcome {
            Outcome::Proof(proof) => check_proof(proof, p).unwrap(),
            other => panic!("{}: {}", p.name, other.label()),
        }
    }
}
