use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{Literal, Term, Var};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ClauseId(pub u32);

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Origin {
    #[default]
    Axiom,
    NegatedConjecture,
    Derived,
}

/// How a clause was obtained. Literal indices refer to the parents'
/// literal vectors, in the order the parents are listed on the clause.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum Inference {
    #[default]
    Input,
    /// Binary resolution between `left` of the first parent and `right` of the second.
    Resolution { left: usize, right: usize },
    /// Unify two literals of the single parent.
    Factoring { first: usize, second: usize },
    /// Rewrite, in the second parent, the subterm at `path` below the atom of
    /// literal `into` with one side of the equation `from` of the first parent.
    Paramodulation { from: usize, left_to_right: bool, into: usize, path: Vec<usize> },
    /// Drop a unifiable negative equation.
    EqualityResolution { literal: usize },
}

impl Inference {
    pub fn label(&self) -> &'static str {
        match self {
            Inference::Input => "input",
            Inference::Resolution { .. } => "resolution",
            Inference::Factoring { .. } => "factoring",
            Inference::Paramodulation { .. } => "paramodulation",
            Inference::EqualityResolution { .. } => "equality_resolution",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Clause {
    pub id: ClauseId,
    /// Name from the input file, if any.
    pub name: Option<Arc<str>>,
    pub literals: Vec<Literal>,
    pub origin: Origin,
    pub parents: Vec<ClauseId>,
    pub inference: Inference,
    /// Position in generation order; parents always have smaller serials.
    pub birth: u64,
    /// Inherited watchlist relevance, cached when the clause is generated.
    pub relevance1: f64,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Clause {
        Clause { literals, ..Default::default() }
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    /// Symbol occurrences across all literals (predicates, functions, variables).
    pub fn length(&self) -> usize {
        self.literals.iter().map(Literal::length).sum()
    }

    pub fn num_vars(&self) -> u32 {
        self.literals.iter().filter_map(|l| l.atom.max_var()).max().map_or(0, |m| m + 1)
    }

    pub fn is_ground(&self) -> bool {
        self.literals.iter().all(|l| l.atom.is_ground())
    }

    pub fn display_name(&self) -> String {
        match &self.name {
            Some(n) => n.to_string(),
            None => self.id.to_string(),
        }
    }

    /// Rename variables to 0, 1, … in first-occurrence order, keeping literal order.
    pub fn renumber_vars(&mut self) {
        self.literals = renumber(&self.literals);
    }

    /// Syntactic tautology: complementary literals or a positive `t = t`.
    pub fn is_tautology(&self) -> bool {
        self.literals.iter().enumerate().any(|(i, l)| {
            if l.positive && l.is_equality() && l.atom.args()[0] == l.atom.args()[1] {
                return true;
            }
            self.literals[i + 1..].iter().any(|m| l.is_complement_of(m))
        })
    }

    /// Merge syntactically identical literals.
    pub fn dedup_literals(&mut self) {
        let mut out: Vec<Literal> = Vec::with_capacity(self.literals.len());
        for l in self.literals.drain(..) {
            if !out.contains(&l) {
                out.push(l);
            }
        }
        self.literals = out;
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return f.write_str("$false");
        }
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub(crate) fn renumber(literals: &[Literal]) -> Vec<Literal> {
    let mut map: HashMap<Var, u32> = HashMap::new();
    literals
        .iter()
        .map(|l| Literal {
            positive: l.positive,
            atom: l.atom.map_vars(&mut |v| {
                let next = map.len() as u32;
                Term::Var(Var(*map.entry(v).or_insert(next)))
            }),
        })
        .collect()
}

/// An input problem: axioms plus negated conjecture clauses.
#[derive(Clone, Debug)]
pub struct Problem {
    pub name: String,
    pub clauses: Vec<Clause>,
}

impl Problem {
    /// Clauses that came from the negated conjecture.
    pub fn conjecture(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.origin == Origin::NegatedConjecture)
    }

    pub fn has_conjecture(&self) -> bool {
        self.conjecture().next().is_some()
    }
}
