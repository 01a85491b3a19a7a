use std::fmt;

use super::Symbol;

/// Clause-local variable. Variables of one clause are numbered densely from 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(pub u32);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(Var),
    App(Symbol, Box<[Term]>),
}

impl Term {
    pub fn var(n: u32) -> Term {
        Term::Var(Var(n))
    }

    pub fn constant(sym: Symbol) -> Term {
        Term::App(sym, Box::new([]))
    }

    pub fn app(sym: Symbol, args: Vec<Term>) -> Term {
        Term::App(sym, args.into_boxed_slice())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn head(&self) -> Option<Symbol> {
        match self {
            Term::App(f, _) => Some(*f),
            Term::Var(_) => None,
        }
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::App(_, args) => args,
            Term::Var(_) => &[],
        }
    }

    /// Number of symbol occurrences (function symbols and variables).
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn function_symbol_count(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::function_symbol_count).sum::<usize>(),
        }
    }

    pub fn variable_count(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => args.iter().map(Term::variable_count).sum(),
        }
    }

    /// Depth of the term tree; constants and variables have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn max_var(&self) -> Option<u32> {
        match self {
            Term::Var(v) => Some(v.0),
            Term::App(_, args) => args.iter().filter_map(Term::max_var).max(),
        }
    }

    pub fn occurs(&self, v: Var) -> bool {
        match self {
            Term::Var(w) => *w == v,
            Term::App(_, args) => args.iter().any(|a| a.occurs(v)),
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// Visit variables left to right.
    pub fn for_each_var(&self, f: &mut impl FnMut(Var)) {
        match self {
            Term::Var(v) => f(*v),
            Term::App(_, args) => args.iter().for_each(|a| a.for_each_var(f)),
        }
    }

    /// Visit every (symbol, arity) occurrence in preorder.
    pub fn for_each_symbol(&self, f: &mut impl FnMut(Symbol, usize)) {
        if let Term::App(s, args) = self {
            f(*s, args.len());
            args.iter().for_each(|a| a.for_each_symbol(f));
        }
    }

    pub fn map_vars(&self, f: &mut impl FnMut(Var) -> Term) -> Term {
        match self {
            Term::Var(v) => f(*v),
            Term::App(s, args) => Term::App(*s, args.iter().map(|a| a.map_vars(f)).collect()),
        }
    }

    pub fn shift_vars(&self, offset: u32) -> Term {
        if offset == 0 {
            return self.clone();
        }
        self.map_vars(&mut |v| Term::Var(Var(v.0 + offset)))
    }

    /// Subterm at a path of argument indices.
    pub fn at(&self, path: &[usize]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.args().get(i)?.at(rest),
        }
    }

    /// Copy with the subterm at `path` replaced.
    pub fn replace_at(&self, path: &[usize], with: &Term) -> Term {
        match (path.split_first(), self) {
            (None, _) => with.clone(),
            (Some((&i, rest)), Term::App(s, args)) => {
                let mut args = args.to_vec();
                args[i] = args[i].replace_at(rest, with);
                Term::App(*s, args.into_boxed_slice())
            }
            (Some(_), Term::Var(_)) => panic!("path descends into a variable"),
        }
    }

    /// Paths of all non-variable subterms in preorder, the root included.
    pub fn app_positions(&self) -> Vec<Vec<usize>> {
        fn walk(t: &Term, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if let Term::App(_, args) = t {
                out.push(path.clone());
                for (i, a) in args.iter().enumerate() {
                    path.push(i);
                    walk(a, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "X{}", v.0),
            Term::App(s, args) => {
                write!(f, "{s}")?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// A signed atom. Equations are atoms headed by the binary `=` predicate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Literal {
    pub positive: bool,
    pub atom: Term,
}

impl Literal {
    pub fn new(positive: bool, atom: Term) -> Literal {
        debug_assert!(!atom.is_var(), "atom must not be a variable");
        Literal { positive, atom }
    }

    pub fn predicate(&self) -> Symbol {
        self.atom.head().expect("atom is an application")
    }

    pub fn is_equality(&self) -> bool {
        self.atom.head() == Some(Symbol::equality()) && self.atom.args().len() == 2
    }

    /// Symbol occurrences: the predicate plus the nodes below it.
    pub fn length(&self) -> usize {
        self.atom.size()
    }

    pub fn negated(&self) -> Literal {
        Literal { positive: !self.positive, atom: self.atom.clone() }
    }

    pub fn is_complement_of(&self, other: &Literal) -> bool {
        self.positive != other.positive && self.atom == other.atom
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_equality() {
            let args = self.atom.args();
            let op = if self.positive { "=" } else { "!=" };
            write!(f, "{} {op} {}", args[0], args[1])
        } else if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "~{}", self.atom)
        }
    }
}
