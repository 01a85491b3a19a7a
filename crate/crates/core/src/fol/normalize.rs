//! Canonical forms of clauses up to variable renaming and literal order.
//!
//! Literals are sorted by polarity (positive first), then predicate name, then
//! the atom printed with every variable blanked out. Literals that tie on that
//! key are permuted exhaustively and the permutation giving the smallest
//! renamed literal sequence wins, so alpha-variants always agree. Clauses
//! whose tie groups allow more than [`MAX_TIE_PERMUTATIONS`] orders fall back
//! to the first order found, which is still deterministic but no longer
//! guaranteed canonical.

use std::fmt::Write;

use super::clause::renumber;
use super::{Clause, Literal, Term};

pub const MAX_TIE_PERMUTATIONS: usize = 5040;

fn blind(t: &Term, out: &mut String) {
    match t {
        Term::Var(_) => out.push('_'),
        Term::App(s, args) => {
            write!(out, "{s}").unwrap();
            if !args.is_empty() {
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    blind(a, out);
                }
                out.push(')');
            }
        }
    }
}

type SortKey = (bool, String, String);

fn sort_key(l: &Literal) -> SortKey {
    let mut b = String::new();
    blind(&l.atom, &mut b);
    (!l.positive, l.predicate().name().to_string(), b)
}

fn render(lits: &[Literal]) -> Vec<String> {
    lits.iter().map(|l| l.to_string()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Literals in canonical order with canonically numbered variables.
pub fn canonical_literals(literals: &[Literal]) -> Vec<Literal> {
    let mut keyed: Vec<(SortKey, Literal)> =
        literals.iter().map(|l| (sort_key(l), l.clone())).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));

    // Runs of equal keys.
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=keyed.len() {
        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
            if i - start > 1 {
                groups.push((start, i));
            }
            start = i;
        }
    }
    let lits: Vec<Literal> = keyed.into_iter().map(|(_, l)| l).collect();
    if groups.is_empty() {
        return renumber(&lits);
    }

    let mut combos: usize = 1;
    for &(s, e) in &groups {
        combos = combos.saturating_mul((1..=e - s).product());
    }
    if combos > MAX_TIE_PERMUTATIONS {
        return renumber(&lits);
    }

    let perms: Vec<Vec<Vec<usize>>> = groups.iter().map(|&(s, e)| permutations(e - s)).collect();
    let mut choice = vec![0usize; groups.len()];
    let mut best: Option<(Vec<String>, Vec<Literal>)> = None;
    loop {
        let mut order = lits.clone();
        for (g, &(s, _)) in groups.iter().enumerate() {
            for (k, &p) in perms[g][choice[g]].iter().enumerate() {
                order[s + k] = lits[s + p].clone();
            }
        }
        let renamed = renumber(&order);
        let shown = render(&renamed);
        if best.as_ref().is_none_or(|(b, _)| shown < *b) {
            best = Some((shown, renamed));
        }
        // odometer over the per-group permutation choices
        let mut g = 0;
        loop {
            if g == groups.len() {
                return best.unwrap().1;
            }
            choice[g] += 1;
            if choice[g] < perms[g].len() {
                break;
            }
            choice[g] = 0;
            g += 1;
        }
    }
}

/// Copy of `c` with literals and variables in canonical form.
pub fn alpha_normalize(c: &Clause) -> Clause {
    Clause { literals: canonical_literals(&c.literals), ..c.clone() }
}

/// Printed canonical form; equal for exactly the clauses that are
/// alpha-variants of each other (up to literal order).
pub fn normal_form_text(c: &Clause) -> String {
    let lits = canonical_literals(&c.literals);
    if lits.is_empty() {
        return "$false".into();
    }
    render(&lits).join(" | ")
}

pub fn alpha_equivalent(a: &Clause, b: &Clause) -> bool {
    a.len() == b.len() && normal_form_text(a) == normal_form_text(b)
}
