use std::collections::HashSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::fol::{parse_clauses, Clause, ClauseId, Literal, Symbol, Term};
use crate::fuzz::{random_clause, rename_and_shuffle, Signature};

fn cl(t: &str) -> Clause {
    parse_clauses(&format!("cnf(x, axiom, {t}).")).unwrap().remove(0)
}

/// Replace each skolem by one pseudo-symbol per arity.
fn merge_skolems(t: &Term) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(f, args) => {
            let head = if f.is_skolem() { Symbol::intern(&format!("$ska{}", args.len())) } else { *f };
            Term::App(head, args.iter().map(merge_skolems).collect())
        }
    }
}

fn subterms(t: &Term, out: &mut Vec<Term>) {
    out.push(t.clone());
    for a in t.args() {
        subterms(a, out);
    }
}

/// Reference decision: enumerate every assignment of the pattern's variables
/// to subterms of the target, then every injective literal placement.
pub(crate) fn brute_subsumes(c: &Clause, d: &Clause, ska: bool) -> bool {
    let prep = |lits: &[Literal]| -> Vec<Literal> {
        lits.iter()
            .map(|l| {
                let args = l.atom.args().iter().map(|a| if ska { merge_skolems(a) } else { a.clone() }).collect();
                Literal { positive: l.positive, atom: Term::app(l.predicate(), args) }
            })
            .collect()
    };
    let c_lits = prep(&c.literals);
    let d_lits = prep(&d.literals);
    if c_lits.len() > d_lits.len() {
        return false;
    }
    let mut pool = Vec::new();
    for l in &d_lits {
        for a in l.atom.args() {
            subterms(a, &mut pool);
        }
    }
    let uniq: HashSet<Term> = pool.into_iter().collect();
    let mut pool: Vec<Term> = uniq.into_iter().collect();
    pool.sort_by_key(|t| t.to_string());
    let mut vars: Vec<u32> = Vec::new();
    for l in &c_lits {
        l.atom.for_each_var(&mut |v| {
            if !vars.contains(&v.0) {
                vars.push(v.0)
            }
        });
    }
    if !vars.is_empty() && pool.is_empty() {
        return false;
    }
    let mut choice = vec![0usize; vars.len()];
    loop {
        let inst: Vec<Literal> = c_lits
            .iter()
            .map(|l| Literal {
                positive: l.positive,
                atom: l.atom.map_vars(&mut |v| pool[choice[vars.iter().position(|&w| w == v.0).unwrap()]].clone()),
            })
            .collect();
        if injective_embed(&inst, &d_lits, &mut vec![false; d_lits.len()]) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return false;
            }
            choice[k] += 1;
            if choice[k] < pool.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn injective_embed(c: &[Literal], d: &[Literal], used: &mut Vec<bool>) -> bool {
    let Some((first, rest)) = c.split_first() else { return true };
    for j in 0..d.len() {
        if !used[j] && d[j] == *first {
            used[j] = true;
            if injective_embed(rest, d, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}

fn oracle_pairs(seed: u64, n: usize) -> Vec<(Clause, Clause)> {
    let sig = Signature::tiny();
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c = random_clause(&mut rng, &sig, 3, 2);
            // bias towards instances so positives are common
            let d = if rng.gen_bool(0.5) {
                let extra = random_clause(&mut rng, &sig, 2, 2);
                let mut lits = instantiate(&c, &mut rng, &sig).literals;
                lits.extend(extra.literals.into_iter().map(|l| Literal { atom: l.atom.shift_vars(10), ..l }));
                lits.truncate(3);
                let mut d = Clause::new(lits);
                d.renumber_vars();
                d
            } else {
                random_clause(&mut rng, &sig, 3, 2)
            };
            (c, d)
        })
        .collect()
}

fn instantiate(c: &Clause, rng: &mut StdRng, sig: &Signature) -> Clause {
    let subst: Vec<Term> = (0..c.num_vars()).map(|_| crate::fuzz::random_term(rng, sig, 1)).collect();
    let lits = c.literals.iter().map(|l| Literal { positive: l.positive, atom: l.atom.map_vars(&mut |v| subst[v.0 as usize].clone()) }).collect();
    let mut d = Clause::new(lits);
    d.renumber_vars();
    d
}

#[test]
fn matcher_agrees_with_enumeration() {
    let mut positives = 0;
    for (c, d) in oracle_pairs(7, 1500) {
        for ska in [false, true] {
            let want = brute_subsumes(&c, &d, ska);
            assert_eq!(subsumes(&c, &d, ska), want, "{c} vs {d} (ska={ska})");
            positives += want as usize;
        }
    }
    assert!(positives > 300, "oracle sample too one-sided: {positives}");
}

#[test]
fn ska_is_weaker() {
    for (c, d) in oracle_pairs(11, 1000) {
        if subsumes(&c, &d, false) {
            assert!(subsumes(&c, &d, true));
        }
    }
}

#[test]
fn transitivity_on_sample() {
    let sig = Signature::tiny();
    let mut rng = StdRng::seed_from_u64(3);
    let mut checked = 0;
    for _ in 0..3000 {
        let a = random_clause(&mut rng, &sig, 2, 2);
        let b = instantiate(&a, &mut rng, &sig);
        let c = instantiate(&b, &mut rng, &sig);
        let mut c_lits = c.literals.clone();
        c_lits.extend(random_clause(&mut rng, &sig, 1, 2).literals.into_iter().map(|l| Literal { atom: l.atom.shift_vars(20), ..l }));
        let mut c = Clause::new(c_lits);
        c.renumber_vars();
        if subsumes(&a, &b, false) && subsumes(&b, &c, false) {
            assert!(subsumes(&a, &c, false), "{a} / {b} / {c}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

fn index_of(clauses: &[Clause], ska: bool) -> WatchlistIndex {
    let mut ix = WatchlistIndex::new(ska);
    for (i, c) in clauses.iter().enumerate() {
        let mut c = c.clone();
        c.id = ClauseId(i as u32);
        ix.insert(WatchlistId((i % 3) as u32), c).unwrap();
    }
    ix
}

#[test]
fn index_has_no_false_negatives() {
    let sig = Signature::tiny();
    let mut rng = StdRng::seed_from_u64(5);
    let stored: Vec<Clause> = (0..1000).map(|_| random_clause(&mut rng, &sig, 3, 2)).collect();
    for ska in [false, true] {
        let ix = index_of(&stored, ska);
        for _ in 0..200 {
            let q = random_clause(&mut rng, &sig, 2, 2);
            let cands: HashSet<usize> = ix.candidates(&q, ska).into_iter().collect();
            for (i, d) in stored.iter().enumerate() {
                if subsumes(&q, d, ska) {
                    assert!(cands.contains(&i), "missed {q} -> {d}");
                }
            }
        }
    }
}

#[test]
fn find_subsumed_matches_scan() {
    let sig = Signature::tiny();
    let mut rng = StdRng::seed_from_u64(9);
    let stored: Vec<Clause> = (0..200).map(|_| random_clause(&mut rng, &sig, 3, 2)).collect();
    let ix = index_of(&stored, false);
    let brute = {
        let mut b = WatchlistIndex::brute_force(false);
        for (i, c) in stored.iter().enumerate() {
            let mut c = c.clone();
            c.id = ClauseId(i as u32);
            b.insert(WatchlistId((i % 3) as u32), c).unwrap();
        }
        b
    };
    for _ in 0..50 {
        let q = random_clause(&mut rng, &sig, 2, 2);
        let mut scan: Vec<_> = stored
            .iter()
            .enumerate()
            .filter(|(_, d)| brute_subsumes(&q, d, false))
            .map(|(i, _)| (WatchlistId((i % 3) as u32), ClauseId(i as u32)))
            .collect();
        scan.sort();
        assert_eq!(ix.find_subsumed(&q, false), scan);
        assert_eq!(brute.find_subsumed(&q, false), scan);
    }
}

#[test]
fn matches_across_watchlists() {
    let mut ix = WatchlistIndex::new(false);
    let w1 = WatchlistId(0);
    let w2 = WatchlistId(1);
    let mut pa = cl("p(a)");
    pa.id = ClauseId(0);
    let mut pb = cl("p(b)");
    pb.id = ClauseId(0);
    let mut qa = cl("q(a)");
    qa.id = ClauseId(1);
    ix.insert(w1, pa).unwrap();
    ix.insert(w2, pb).unwrap();
    ix.insert(w2, qa).unwrap();
    assert_eq!(ix.find_subsumed(&cl("p(X)"), false), vec![(w1, ClauseId(0)), (w2, ClauseId(0))]);
    assert_eq!(ix.find_subsumed(&cl("q(X)"), false), vec![(w2, ClauseId(1))]);
}

#[test]
fn insert_query_kill() {
    let mut ix = WatchlistIndex::new(false);
    let mut d = cl("p(a) | q(b)");
    d.id = ClauseId(4);
    let e = ix.insert(WatchlistId(0), d.clone()).unwrap();
    assert!(ix.candidates(&cl("p(X)"), false).contains(&e));
    assert_eq!(
        ix.insert(WatchlistId(0), d.clone()),
        Err(IndexError::Duplicate { watchlist: WatchlistId(0), clause: ClauseId(4) })
    );
    assert!(ix.insert(WatchlistId(1), d).is_ok());
    ix.kill(e);
    assert!(!ix.candidates(&cl("p(X)"), false).contains(&e));
    assert_eq!(ix.find_subsumed(&cl("p(X)"), false), vec![(WatchlistId(1), ClauseId(4))]);
}

#[test]
fn ska_query_on_plain_index_is_complete() {
    let mut ix = WatchlistIndex::new(false);
    let mut d = cl("r(sk2(a))");
    d.id = ClauseId(0);
    ix.insert(WatchlistId(0), d).unwrap();
    assert_eq!(ix.find_subsumed(&cl("r(sk1(X))"), true).len(), 1);
    assert!(ix.find_subsumed(&cl("r(sk1(X))"), false).is_empty());
}

proptest! {
    #[test]
    fn reflexive_on_alpha_variants(seed in any::<u64>(), shuffle in any::<u64>()) {
        let c = crate::fuzz::random_clause_seeded(seed, &Signature::small(), 3, 2);
        let d = rename_and_shuffle(&c, shuffle);
        prop_assert!(subsumes(&c, &d, false));
        prop_assert!(subsumes(&d, &c, false));
    }

    #[test]
    fn features_respect_subsumption(seed in any::<u64>()) {
        let sig = Signature::tiny();
        let mut rng = StdRng::seed_from_u64(seed);
        let c = random_clause(&mut rng, &sig, 3, 2);
        let d = random_clause(&mut rng, &sig, 3, 2);
        for ska in [false, true] {
            if subsumes(&c, &d, ska) {
                prop_assert!(clause_features(&c, ska).dominated_by(&clause_features(&d, ska)));
            }
        }
    }
}
