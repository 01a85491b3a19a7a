use crate::fol::{Clause, Literal, Symbol, Term};

fn same_symbol(f: Symbol, g: Symbol, arity: usize, other_arity: usize, ska: bool) -> bool {
    if arity != other_arity {
        return false;
    }
    f == g || (ska && f.is_skolem() && g.is_skolem())
}

/// Syntactic equality, with equal-arity skolems identified under `ska`.
pub(crate) fn term_eq(a: &Term, b: &Term, ska: bool) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => x == y,
        (Term::App(f, fa), Term::App(g, ga)) => {
            same_symbol(*f, *g, fa.len(), ga.len(), ska)
                && fa.iter().zip(ga.iter()).all(|(x, y)| term_eq(x, y, ska))
        }
        _ => false,
    }
}

/// One-sided matching state: bindings for the pattern clause's variables into
/// subterms of the target clause.
pub(crate) struct Matcher<'d> {
    binds: Vec<Option<&'d Term>>,
    trail: Vec<u32>,
    ska: bool,
}

impl<'d> Matcher<'d> {
    pub(crate) fn new(num_vars: u32, ska: bool) -> Self {
        Matcher { binds: vec![None; num_vars as usize], trail: Vec::new(), ska }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.binds[v as usize] = None;
        }
    }

    fn match_term(&mut self, pat: &Term, target: &'d Term) -> bool {
        match pat {
            Term::Var(v) => match self.binds[v.0 as usize] {
                Some(bound) => term_eq(bound, target, self.ska),
                None => {
                    self.binds[v.0 as usize] = Some(target);
                    self.trail.push(v.0);
                    true
                }
            },
            Term::App(f, fa) => match target {
                Term::App(g, ga) => {
                    same_symbol(*f, *g, fa.len(), ga.len(), self.ska)
                        && fa.iter().zip(ga.iter()).all(|(p, t)| self.match_term(p, t))
                }
                Term::Var(_) => false,
            },
        }
    }

    /// Match literal `pat` onto `target`; on failure bindings are restored.
    pub(crate) fn match_literal(&mut self, pat: &Literal, target: &'d Literal) -> bool {
        if pat.positive != target.positive {
            return false;
        }
        let (Term::App(p, pa), Term::App(q, qa)) = (&pat.atom, &target.atom) else {
            return false;
        };
        // predicates are never abstracted
        if p != q || pa.len() != qa.len() {
            return false;
        }
        let mark = self.trail.len();
        if pa.iter().zip(qa.iter()).all(|(x, y)| self.match_term(x, y)) {
            true
        } else {
            self.undo_to(mark);
            false
        }
    }

    fn embed(&mut self, order: &[usize], pat: &Clause, target: &'d Clause, used: &mut [bool], cands: &[Vec<usize>]) -> bool {
        let Some((&i, rest)) = order.split_first() else {
            return true;
        };
        for &j in &cands[i] {
            if used[j] {
                continue;
            }
            let mark = self.trail.len();
            if self.match_literal(&pat.literals[i], &target.literals[j]) {
                used[j] = true;
                if self.embed(rest, pat, target, used, cands) {
                    return true;
                }
                used[j] = false;
                self.undo_to(mark);
            }
        }
        false
    }
}

/// Multiset subsumption: some instance of `c` maps injectively into `d`,
/// literal by literal with equal polarity. With `ska` set, skolem function
/// symbols of equal arity are interchangeable (predicates never are).
pub fn subsumes(c: &Clause, d: &Clause, ska: bool) -> bool {
    if c.len() > d.len() {
        return false;
    }
    // candidate target literals per pattern literal, checked in isolation
    let mut cands: Vec<Vec<usize>> = Vec::with_capacity(c.len());
    for l in &c.literals {
        let mut m = Matcher::new(l.atom.max_var().map_or(0, |v| v + 1), ska);
        let js: Vec<usize> = (0..d.len()).filter(|&j| {
            let ok = m.match_literal(l, &d.literals[j]);
            m.undo_to(0);
            ok
        }).collect();
        if js.is_empty() {
            return false;
        }
        cands.push(js);
    }
    // most constrained literals first
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by_key(|&i| (cands[i].len(), usize::MAX - c.literals[i].length()));
    let mut used = vec![false; d.len()];
    Matcher::new(c.num_vars(), ska).embed(&order, c, d, &mut used, &cands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::parse_clauses;

    fn cl(t: &str) -> Clause {
        parse_clauses(&format!("cnf(x, axiom, {t}).")).unwrap().remove(0)
    }

    #[test]
    fn instance_into_larger_clause() {
        assert!(subsumes(&cl("p(X)"), &cl("p(a) | q(b)"), false));
        assert!(!subsumes(&cl("p(a) | q(b)"), &cl("p(X)"), false));
    }

    #[test]
    fn multiset_not_set() {
        assert!(!subsumes(&cl("p(X) | p(Y)"), &cl("p(a)"), false));
        assert!(subsumes(&cl("p(X) | p(Y)"), &cl("p(a) | p(b)"), false));
    }

    #[test]
    fn consistent_bindings() {
        assert!(!subsumes(&cl("q(X,X)"), &cl("q(a,b)"), false));
        assert!(subsumes(&cl("q(X,X)"), &cl("q(b,b)"), false));
        assert!(!subsumes(&cl("p(X) | ~r(X)"), &cl("p(a) | ~r(b)"), false));
    }

    #[test]
    fn polarity_matters() {
        assert!(!subsumes(&cl("~p(X)"), &cl("p(a)"), false));
    }

    #[test]
    fn target_variables_are_rigid() {
        assert!(subsumes(&cl("p(X)"), &cl("p(Y)"), false));
        assert!(!subsumes(&cl("p(a)"), &cl("p(Y)"), false));
        assert!(!subsumes(&cl("q(X,X)"), &cl("q(Y,Z)"), false));
    }

    #[test]
    fn skolem_abstraction() {
        let c = cl("r(sk1(X))");
        let d = cl("r(sk2(a))");
        assert!(subsumes(&c, &d, true));
        assert!(!subsumes(&c, &d, false));
        // arity must agree
        assert!(!subsumes(&cl("r(sk1(X))"), &cl("r(sk3(a,b))"), true));
        // only skolem-named functions are merged
        assert!(!subsumes(&cl("r(f(X))"), &cl("r(g(a))"), true));
    }

    #[test]
    fn empty_clause_subsumes_everything() {
        assert!(subsumes(&cl("$false"), &cl("p(a)"), false));
        assert!(subsumes(&cl("$false"), &cl("$false"), false));
        assert!(!subsumes(&cl("p(a)"), &cl("$false"), false));
    }
}
