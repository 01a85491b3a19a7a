//! Random clauses and problems over small signatures, for property tests and
//! fuzzed prover runs.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::fol::{Clause, ClauseId, Literal, Origin, Problem, Symbol, Term, Var};

#[derive(Clone, Debug)]
pub struct Signature {
    pub predicates: Vec<(Symbol, usize)>,
    pub functions: Vec<(Symbol, usize)>,
    pub max_vars: u32,
}

impl Signature {
    pub fn new(predicates: &[(&str, usize)], functions: &[(&str, usize)], max_vars: u32) -> Signature {
        let intern = |v: &[(&str, usize)]| v.iter().map(|&(n, a)| (Symbol::intern(n), a)).collect();
        Signature { predicates: intern(predicates), functions: intern(functions), max_vars }
    }

    /// Five symbols, two of them skolems of equal arity.
    pub fn tiny() -> Signature {
        Signature::new(&[("p", 1), ("q", 2)], &[("a", 0), ("sk1", 1), ("sk2", 1)], 3)
    }

    pub fn small() -> Signature {
        Signature::new(
            &[("p", 1), ("q", 2), ("r", 0)],
            &[("a", 0), ("b", 0), ("f", 1), ("g", 2), ("sk1", 1), ("sk2", 1)],
            4,
        )
    }
}

pub fn random_term(rng: &mut impl Rng, sig: &Signature, depth: usize) -> Term {
    let leaves: Vec<_> = sig.functions.iter().filter(|f| f.1 == 0).collect();
    let inner: Vec<_> = sig.functions.iter().filter(|f| f.1 > 0).collect();
    if depth <= 1 || inner.is_empty() || rng.gen_bool(0.4) {
        if sig.max_vars > 0 && (leaves.is_empty() || rng.gen_bool(0.5)) {
            return Term::var(rng.gen_range(0..sig.max_vars));
        }
        let (s, _) = leaves[rng.gen_range(0..leaves.len())];
        return Term::constant(*s);
    }
    let (s, arity) = *inner[rng.gen_range(0..inner.len())];
    Term::app(s, (0..arity).map(|_| random_term(rng, sig, depth - 1)).collect())
}

/// A literal whose atom has depth at most `depth + 1`.
pub fn random_literal(rng: &mut impl Rng, sig: &Signature, depth: usize) -> Literal {
    let (p, arity) = sig.predicates[rng.gen_range(0..sig.predicates.len())];
    let args = (0..arity).map(|_| random_term(rng, sig, depth)).collect();
    Literal::new(rng.gen_bool(0.5), Term::app(p, args))
}

/// Between 1 and `max_literals` literals; variables renumbered densely.
pub fn random_clause(rng: &mut impl Rng, sig: &Signature, max_literals: usize, depth: usize) -> Clause {
    let n = rng.gen_range(1..=max_literals.max(1));
    let mut c = Clause::new((0..n).map(|_| random_literal(rng, sig, depth)).collect());
    c.renumber_vars();
    c
}

pub fn random_clause_seeded(seed: u64, sig: &Signature, max_literals: usize, depth: usize) -> Clause {
    random_clause(&mut StdRng::seed_from_u64(seed), sig, max_literals, depth)
}

/// Random problem with named input clauses; the last one is marked as the
/// negated conjecture.
pub fn random_problem(rng: &mut impl Rng, sig: &Signature, clauses: usize, max_literals: usize, depth: usize) -> Problem {
    let mut out = Vec::with_capacity(clauses);
    for i in 0..clauses {
        let mut c = random_clause(rng, sig, max_literals, depth);
        c.id = ClauseId(i as u32);
        c.birth = i as u64;
        c.name = Some(Arc::from(format!("ax{i}").as_str()));
        c.origin = if i + 1 == clauses { Origin::NegatedConjecture } else { Origin::Axiom };
        out.push(c);
    }
    Problem { name: "random".into(), clauses: out }
}

/// Alpha-variant of `c` with permuted variables and shuffled literals.
pub fn rename_and_shuffle(c: &Clause, seed: u64) -> Clause {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = c.num_vars();
    let mut perm: Vec<u32> = (0..n).collect();
    perm.shuffle(&mut rng);
    let offset = rng.gen_range(0..5);
    let mut lits: Vec<Literal> = c
        .literals
        .iter()
        .map(|l| Literal {
            positive: l.positive,
            atom: l.atom.map_vars(&mut |v| Term::Var(Var(perm[v.0 as usize] + offset))),
        })
        .collect();
    lits.shuffle(&mut rng);
    Clause { literals: lits, ..c.clone() }
}

#[cfg(test)]
pub(crate) fn clause_strategy(
    sig: Signature,
    max_literals: usize,
    depth: usize,
) -> impl proptest::strategy::Strategy<Value = Clause> {
    use proptest::prelude::*;
    any::<u64>().prop_map(move |seed| random_clause_seeded(seed, &sig, max_literals, depth))
}
