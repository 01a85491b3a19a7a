use super::{Term, Var};

/// Triangular substitution over a dense variable range.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    bindings: Vec<Option<Term>>,
    trail: Vec<u32>,
}

impl Substitution {
    pub fn new(num_vars: u32) -> Substitution {
        Substitution { bindings: vec![None; num_vars as usize], trail: Vec::new() }
    }

    pub fn get(&self, v: Var) -> Option<&Term> {
        self.bindings.get(v.0 as usize).and_then(Option::as_ref)
    }

    fn bind(&mut self, v: Var, t: Term) {
        let i = v.0 as usize;
        if i >= self.bindings.len() {
            self.bindings.resize(i + 1, None);
        }
        self.bindings[i] = Some(t);
        self.trail.push(v.0);
    }

    /// Marker for [`undo_to`](Self::undo_to).
    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.bindings[v as usize] = None;
        }
    }

    /// Follow variable bindings at the top of `t`.
    fn walk<'a>(&'a self, mut t: &'a Term) -> &'a Term {
        while let Term::Var(v) = t {
            match self.get(*v) {
                Some(b) => t = b,
                None => break,
            }
        }
        t
    }

    fn occurs(&self, v: Var, t: &Term) -> bool {
        match self.walk(t) {
            Term::Var(w) => *w == v,
            Term::App(_, args) => args.iter().any(|a| self.occurs(v, a)),
        }
    }

    pub fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => match self.get(*v) {
                Some(b) => self.apply(b),
                None => t.clone(),
            },
            Term::App(f, args) => Term::App(*f, args.iter().map(|a| self.apply(a)).collect()),
        }
    }
}

/// Extend `subst` to a most general unifier of `a` and `b`. On failure the
/// substitution is left as it was on entry.
pub fn unify(a: &Term, b: &Term, subst: &mut Substitution) -> bool {
    let mark = subst.mark();
    if unify_rec(a, b, subst) {
        true
    } else {
        subst.undo_to(mark);
        false
    }
}

fn unify_rec(a: &Term, b: &Term, s: &mut Substitution) -> bool {
    let a = s.walk(a).clone();
    let b = s.walk(b).clone();
    match (&a, &b) {
        (Term::Var(x), Term::Var(y)) if x == y => true,
        (Term::Var(x), t) | (t, Term::Var(x)) => {
            if s.occurs(*x, t) {
                return false;
            }
            s.bind(*x, t.clone());
            true
        }
        (Term::App(f, fa), Term::App(g, ga)) => {
            f == g && fa.len() == ga.len() && fa.iter().zip(ga.iter()).all(|(x, y)| unify_rec(x, y, s))
        }
    }
}
