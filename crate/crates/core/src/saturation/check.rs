//! Independent re-verification of proof records.
//!
//! Every derived step is recomputed from its parents with a separate
//! unifier and compared with the recorded clause up to variable renaming.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use super::proof::ProofRecord;
use crate::fol::{alpha_equivalent, Clause, ClauseId, Inference, Literal, Problem, Symbol, Term, Var};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("proof has no steps")]
    Empty,
    #[error("last step {0} is not the empty clause")]
    NoRefutation(ClauseId),
    #[error("step {step}: empty clause before the last step")]
    EarlyEmpty { step: ClauseId },
    #[error("step {step}: parent {parent} does not occur earlier")]
    Dangling { step: ClauseId, parent: ClauseId },
    #[error("step {0}: duplicate id")]
    Duplicate(ClauseId),
    #[error("step {step}: input clause not found in the problem")]
    UnknownInput { step: ClauseId },
    #[error("step {step}: {rule} needs {expected} parent(s)")]
    Arity { step: ClauseId, rule: &'static str, expected: usize },
    #[error("step {step}: literal index out of range")]
    BadIndex { step: ClauseId },
    #[error("step {step}: premises of {rule} do not unify")]
    NoUnifier { step: ClauseId, rule: &'static str },
    #[error("step {step}: recorded clause `{recorded}` differs from recomputed `{recomputed}`")]
    Mismatch { step: ClauseId, recorded: String, recomputed: String },
}

type Bindings = HashMap<u32, Term>;

fn resolve(t: &Term, b: &Bindings) -> Term {
    match t {
        Term::Var(v) => match b.get(&v.0) {
            Some(u) => resolve(u, b),
            None => t.clone(),
        },
        Term::App(f, args) => Term::App(*f, args.iter().map(|a| resolve(a, b)).collect()),
    }
}

fn occurs(v: u32, t: &Term) -> bool {
    match t {
        Term::Var(w) => w.0 == v,
        Term::App(_, args) => args.iter().any(|a| occurs(v, a)),
    }
}

/// Robinson unification on fully resolved terms.
fn mgu(pairs: Vec<(Term, Term)>) -> Option<Bindings> {
    let mut b = Bindings::new();
    let mut stack = pairs;
    while let Some((s, t)) = stack.pop() {
        let s = resolve(&s, &b);
        let t = resolve(&t, &b);
        match (s, t) {
            (Term::Var(x), Term::Var(y)) if x == y => {}
            (Term::Var(x), t) | (t, Term::Var(x)) => {
                if occurs(x.0, &t) {
                    return None;
                }
                b.insert(x.0, t);
            }
            (Term::App(f, fa), Term::App(g, ga)) => {
                if f != g || fa.len() != ga.len() {
                    return None;
                }
                stack.extend(fa.iter().cloned().zip(ga.iter().cloned()));
            }
        }
    }
    Some(b)
}

fn rename(c: &Clause, tag: u32) -> Vec<Literal> {
    // disjoint variable ranges per premise
    c.literals
        .iter()
        .map(|l| Literal {
            positive: l.positive,
            atom: l.atom.map_vars(&mut |v| Term::Var(Var(v.0 * 4 + tag))),
        })
        .collect()
}

fn inst(lits: &[Literal], b: &Bindings) -> Vec<Literal> {
    lits.iter().map(|l| Literal { positive: l.positive, atom: resolve(&l.atom, b) }).collect()
}

fn without(lits: &[Literal], skip: usize) -> Vec<Literal> {
    lits.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, l)| l.clone()).collect()
}

fn subterm<'a>(t: &'a Term, path: &[usize]) -> Option<&'a Term> {
    match path.split_first() {
        None => Some(t),
        Some((&i, rest)) => match t {
            Term::App(_, args) => subterm(args.get(i)?, rest),
            Term::Var(_) => None,
        },
    }
}

fn replace(t: &Term, path: &[usize], with: &Term) -> Term {
    match path.split_first() {
        None => with.clone(),
        Some((&i, rest)) => match t {
            Term::App(f, args) => {
                let mut args = args.to_vec();
                args[i] = replace(&args[i], rest, with);
                Term::App(*f, args.into_boxed_slice())
            }
            Term::Var(_) => unreachable!(),
        },
    }
}

/// Recompute the conclusion of `inference` from `parents`.
pub fn recompute(step: ClauseId, inference: &Inference, parents: &[&Clause]) -> Result<Vec<Literal>, CheckError> {
    let rule = inference.label();
    let need = |n: usize| {
        if parents.len() == n {
            Ok(())
        } else {
            Err(CheckError::Arity { step, rule, expected: n })
        }
    };
    let bad = CheckError::BadIndex { step };
    let no_mgu = CheckError::NoUnifier { step, rule };
    match inference {
        Inference::Input => unreachable!("inputs are checked against the problem"),
        Inference::Resolution { left, right } => {
            need(2)?;
            let a = rename(parents[0], 1);
            let b = rename(parents[1], 2);
            let (la, lb) = (a.get(*left).ok_or(bad.clone())?, b.get(*right).ok_or(bad)?);
            if la.positive == lb.positive {
                return Err(no_mgu);
            }
            let s = mgu(vec![(la.atom.clone(), lb.atom.clone())]).ok_or(no_mgu)?;
            let mut out = inst(&without(&a, *left), &s);
            out.extend(inst(&without(&b, *right), &s));
            Ok(out)
        }
        Inference::Factoring { first, second } => {
            need(1)?;
            let a = rename(parents[0], 1);
            let (l1, l2) = (a.get(*first).ok_or(bad.clone())?, a.get(*second).ok_or(bad)?);
            if first == second || l1.positive != l2.positive {
                return Err(no_mgu);
            }
            let s = mgu(vec![(l1.atom.clone(), l2.atom.clone())]).ok_or(no_mgu)?;
            Ok(inst(&without(&a, *second), &s))
        }
        Inference::EqualityResolution { literal } => {
            need(1)?;
            let a = rename(parents[0], 1);
            let l = a.get(*literal).ok_or(bad)?;
            if l.positive || l.atom.head() != Some(Symbol::equality()) || l.atom.args().len() != 2 {
                return Err(no_mgu);
            }
            let s = mgu(vec![(l.atom.args()[0].clone(), l.atom.args()[1].clone())]).ok_or(no_mgu)?;
            Ok(inst(&without(&a, *literal), &s))
        }
        Inference::Paramodulation { from, left_to_right, into, path } => {
            need(2)?;
            let a = rename(parents[0], 1);
            let b = rename(parents[1], 2);
            let eq = a.get(*from).ok_or(bad.clone())?;
            if !eq.positive || eq.atom.head() != Some(Symbol::equality()) || eq.atom.args().len() != 2 {
                return Err(no_mgu);
            }
            let (l, r) = if *left_to_right {
                (&eq.atom.args()[0], &eq.atom.args()[1])
            } else {
                (&eq.atom.args()[1], &eq.atom.args()[0])
            };
            let target = b.get(*into).ok_or(bad.clone())?;
            let sub = subterm(&target.atom, path).ok_or(bad)?;
            if path.is_empty() || sub.is_var() {
                return Err(no_mgu);
            }
            let s = mgu(vec![(l.clone(), sub.clone())]).ok_or(no_mgu)?;
            let mut out = inst(&without(&a, *from), &s);
            for (k, lit) in b.iter().enumerate() {
                if k == *into {
                    out.push(Literal { positive: lit.positive, atom: resolve(&replace(&lit.atom, path, r), &s) });
                } else {
                    out.push(Literal { positive: lit.positive, atom: resolve(&lit.atom, &s) });
                }
            }
            Ok(out)
        }
    }
}

fn same_clause(recorded: &Clause, mut recomputed: Vec<Literal>) -> bool {
    let mut seen = HashSet::new();
    recomputed.retain(|l| seen.insert(l.clone()));
    alpha_equivalent(recorded, &Clause::new(recomputed))
}

/// Verify every step of `proof` and that its inputs come from `problem`.
pub fn check_proof(proof: &ProofRecord, problem: &Problem) -> Result<(), CheckError> {
    let last = proof.steps.last().ok_or(CheckError::Empty)?;
    if !last.clause.is_empty() {
        return Err(CheckError::NoRefutation(last.clause.id));
    }
    let mut known: HashMap<ClauseId, &Clause> = HashMap::new();
    for (n, s) in proof.steps.iter().enumerate() {
        let c = &s.clause;
        if c.is_empty() && n + 1 != proof.steps.len() {
            return Err(CheckError::EarlyEmpty { step: c.id });
        }
        if known.contains_key(&c.id) {
            return Err(CheckError::Duplicate(c.id));
        }
        if c.inference == Inference::Input {
            let found = problem.clauses.iter().any(|p| {
                p.literals.len() == c.literals.len() && alpha_equivalent(p, c) && (c.name.is_none() || p.name == c.name)
            });
            if !found || !c.parents.is_empty() {
                return Err(CheckError::UnknownInput { step: c.id });
            }
        } else {
            let mut parents = Vec::with_capacity(c.parents.len());
            for p in &c.parents {
                parents.push(*known.get(p).ok_or(CheckError::Dangling { step: c.id, parent: *p })?);
            }
            let lits = recompute(c.id, &c.inference, &parents)?;
            if !same_clause(c, lits.clone()) {
                return Err(CheckError::Mismatch {
                    step: c.id,
                    recorded: c.to_string(),
                    recomputed: Clause::new(lits).to_string(),
                });
            }
        }
        known.insert(c.id, c);
    }
    Ok(())
}
