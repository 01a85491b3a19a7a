use proptest::prelude::*;

use super::*;
use crate::fuzz::{clause_strategy, rename_and_shuffle, Signature};

fn clause(text: &str) -> Clause {
    parse_clauses(&format!("cnf(x, axiom, {text}).")).unwrap().remove(0)
}

/// Independent node count: walk the printed form and count symbol tokens.
fn brute_length(c: &Clause) -> usize {
    fn count(t: &Term) -> usize {
        let mut n = 1;
        for a in t.args() {
            n += count(a);
        }
        n
    }
    c.literals.iter().map(|l| count(&l.atom)).sum()
}

#[test]
fn length_counts_every_symbol() {
    assert_eq!(clause("p(f(X), a) | ~q(X)").length(), 6);
    assert_eq!(clause("$false").length(), 0);
    assert_eq!(clause("f(X) = a").length(), 4);
}

#[test]
fn empty_clause_prints_false() {
    let mut c = clause("$false");
    c.name = None;
    c.id = ClauseId(7);
    c.origin = Origin::Derived;
    assert_eq!(print_clause(&c), "cnf(c7, plain, $false).");
}

#[test]
fn canonical_order_is_deterministic() {
    let a = alpha_normalize(&clause("~q(a) | p(X)"));
    assert_eq!(a.to_string(), "p(X0) | ~q(a)");
    let b = alpha_normalize(&clause("p(Y) | ~q(a)"));
    assert_eq!(a.to_string(), b.to_string());
}

#[test]
fn normalize_renames_in_first_occurrence_order() {
    assert_eq!(alpha_normalize(&clause("p(Y,Y)")).to_string(), "p(X0,X0)");
    assert_eq!(normal_form_text(&clause("q(B) | p(A)")), normal_form_text(&clause("p(C) | q(D)")));
    assert_ne!(normal_form_text(&clause("p(X)")), normal_form_text(&clause("pp(X,X)")));
}

#[test]
fn tie_groups_are_canonical() {
    // literals with identical variable-blind shapes
    let a = clause("p(X,Y) | p(Y,Z) | q(X)");
    let b = clause("p(Y,Z) | q(X) | p(X,Y)");
    assert_eq!(normal_form_text(&a), normal_form_text(&b));
}

#[test]
fn print_quotes_odd_names() {
    let c = clause("'Big'(a)");
    let printed = print_clause(&c);
    let back = parse_clauses(&printed).unwrap().remove(0);
    assert!(alpha_equivalent(&c, &back));
}

#[test]
fn derivation_step_annotation_parses() {
    let mut c = clause("q(a)");
    c.name = None;
    c.id = ClauseId(9);
    c.origin = Origin::Derived;
    c.parents = vec![ClauseId(1), ClauseId(4)];
    c.inference = Inference::Resolution { left: 0, right: 1 };
    let s = print_derivation_step(&c, |p| p.to_string());
    assert_eq!(s, "cnf(c9, plain, q(a), inference(resolution, [], [c1, c4])).");
    assert_eq!(parse_clauses(&s).unwrap().len(), 1);
}

#[test]
fn tautologies() {
    assert!(clause("p(a) | ~p(a)").is_tautology());
    assert!(clause("X = X | q").is_tautology());
    assert!(!clause("p(a) | ~p(b)").is_tautology());
    assert!(!clause("X != X").is_tautology());
}

proptest! {
    #[test]
    fn length_matches_brute_count(c in clause_strategy(Signature::small(), 3, 2)) {
        prop_assert_eq!(c.length(), brute_length(&c));
    }

    #[test]
    fn print_parse_round_trip(c in clause_strategy(Signature::small(), 4, 3)) {
        let back = parse_clauses(&print_clause(&c)).unwrap().remove(0);
        prop_assert!(alpha_equivalent(&c, &back));
    }

    #[test]
    fn normalize_is_idempotent(c in clause_strategy(Signature::small(), 4, 3)) {
        let once = alpha_normalize(&c);
        let twice = alpha_normalize(&once);
        prop_assert_eq!(once.to_string(), twice.to_string());
    }

    #[test]
    fn normalize_ignores_renaming_and_order(c in clause_strategy(Signature::small(), 4, 3), seed in any::<u64>()) {
        let d = rename_and_shuffle(&c, seed);
        prop_assert_eq!(normal_form_text(&c), normal_form_text(&d));
    }
}
