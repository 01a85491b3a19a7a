//! Unordered resolution, factoring, paramodulation and equality resolution.
//!
//! Children are returned with raw variables; the caller deduplicates
//! literals and renumbers. The second premise of a binary inference has its
//! variables shifted past those of the first.

use crate::fol::{unify, Clause, ClauseId, Inference, Literal, Substitution, Symbol};

#[derive(Clone, Debug, PartialEq)]
pub struct Child {
    pub literals: Vec<Literal>,
    pub parents: Vec<ClauseId>,
    pub inference: Inference,
}

fn apply_lit(s: &Substitution, l: &Literal, shift: u32) -> Literal {
    Literal { positive: l.positive, atom: s.apply(&l.atom.shift_vars(shift)) }
}

/// All resolvents on literal `i` of `a` against the literals of `b`.
pub fn resolve_on(a: &Clause, i: usize, b: &Clause, out: &mut Vec<Child>) {
    let la = &a.literals[i];
    for (j, lb) in b.literals.iter().enumerate() {
        if la.positive != lb.positive && la.predicate() == lb.predicate() {
            resolve_pair(a, i, b, j, out);
        }
    }
}

/// The resolvent on `a[i]` and `b[j]`, if their atoms unify.
pub fn resolve_pair(a: &Clause, i: usize, b: &Clause, j: usize, out: &mut Vec<Child>) {
    let off = a.num_vars();
    let mut s = Substitution::new(off + b.num_vars());
    if !unify(&a.literals[i].atom, &b.literals[j].atom.shift_vars(off), &mut s) {
        return;
    }
    let mut lits = Vec::with_capacity(a.len() + b.len() - 2);
    lits.extend(a.literals.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, l)| apply_lit(&s, l, 0)));
    lits.extend(b.literals.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, l)| apply_lit(&s, l, off)));
    out.push(Child { literals: lits, parents: vec![a.id, b.id], inference: Inference::Resolution { left: i, right: j } });
}

/// Resolvents of `g` with a renamed copy of itself.
pub fn self_resolvents(g: &Clause, out: &mut Vec<Child>) {
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (a, b) = (&g.literals[i], &g.literals[j]);
            if a.positive != b.positive && a.predicate() == b.predicate() {
                resolve_pair(g, i, g, j, out);
            }
        }
    }
}

pub fn factors(g: &Clause, out: &mut Vec<Child>) {
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (a, b) = (&g.literals[i], &g.literals[j]);
            if a.positive != b.positive || a.predicate() != b.predicate() {
                continue;
            }
            let mut s = Substitution::new(g.num_vars());
            if unify(&a.atom, &b.atom, &mut s) {
                let lits = g
                    .literals
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, l)| apply_lit(&s, l, 0))
                    .collect();
                out.push(Child { literals: lits, parents: vec![g.id], inference: Inference::Factoring { first: i, second: j } });
            }
        }
    }
}

pub fn equality_resolvents(g: &Clause, out: &mut Vec<Child>) {
    for (i, l) in g.literals.iter().enumerate() {
        if l.positive || !l.is_equality() {
            continue;
        }
        let mut s = Substitution::new(g.num_vars());
        if unify(&l.atom.args()[0], &l.atom.args()[1], &mut s) {
            let lits = g
                .literals
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, l)| apply_lit(&s, l, 0))
                .collect();
            out.push(Child { literals: lits, parents: vec![g.id], inference: Inference::EqualityResolution { literal: i } });
        }
    }
}

/// Paramodulants from the positive equations of `from` into every
/// non-variable proper subterm of the atoms of `into`.
pub fn paramodulants(from: &Clause, into: &Clause, out: &mut Vec<Child>) {
    let eq = Symbol::equality();
    let off = from.num_vars();
    let nvars = off + into.num_vars();
    let into_positions: Vec<(usize, Vec<Vec<usize>>)> = into
        .literals
        .iter()
        .enumerate()
        .map(|(k, l)| (k, l.atom.app_positions().into_iter().filter(|p| !p.is_empty()).collect()))
        .collect();
    for (e, el) in from.literals.iter().enumerate() {
        if !el.positive || el.atom.head() != Some(eq) || el.atom.args().len() != 2 {
            continue;
        }
        for left_to_right in [true, false] {
            let (lhs, rhs) = if left_to_right {
                (&el.atom.args()[0], &el.atom.args()[1])
            } else {
                (&el.atom.args()[1], &el.atom.args()[0])
            };
            for (k, paths) in &into_positions {
                let atom = into.literals[*k].atom.shift_vars(off);
                for path in paths {
                    let sub = atom.at(path).expect("position exists");
                    let mut s = Substitution::new(nvars);
                    if !unify(lhs, sub, &mut s) {
                        continue;
                    }
                    let rewritten = s.apply(&atom.replace_at(path, rhs));
                    let mut lits = Vec::with_capacity(from.len() + into.len() - 1);
                    lits.extend(
                        from.literals.iter().enumerate().filter(|(m, _)| *m != e).map(|(_, l)| apply_lit(&s, l, 0)),
                    );
                    for (m, l) in into.literals.iter().enumerate() {
                        if m == *k {
                            lits.push(Literal { positive: l.positive, atom: rewritten.clone() });
                        } else {
                            lits.push(apply_lit(&s, l, off));
                        }
                    }
                    out.push(Child {
                        literals: lits,
                        parents: vec![from.id, into.id],
                        inference: Inference::Paramodulation { from: e, left_to_right, into: *k, path: path.clone() },
                    });
                }
            }
        }
    }
}

/// All inferences between `g` and the clauses of `p` (which should not
/// contain `g`), plus those of `g` with itself.
pub fn generate<'a>(g: &Clause, p: impl IntoIterator<Item = &'a Clause>, paramod: bool) -> Vec<Child> {
    let mut out = Vec::new();
    let p: Vec<&Clause> = p.into_iter().collect();
    for d in &p {
        for i in 0..g.len() {
            resolve_on(g, i, d, &mut out);
        }
    }
    self_resolvents(g, &mut out);
    factors(g, &mut out);
    if paramod {
        for d in &p {
            paramodulants(g, d, &mut out);
            paramodulants(d, g, &mut out);
        }
        paramodulants(g, g, &mut out);
        equality_resolvents(g, &mut out);
    }
    out
}
