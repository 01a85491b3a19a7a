//! First-order terms, literals and clauses, with a TPTP CNF reader and printer.

mod clause;
mod normalize;
mod parse;
mod print;
mod subst;
mod symbol;
mod term;

pub use clause::{Clause, ClauseId, Inference, Origin, Problem};
pub use normalize::{alpha_equivalent, alpha_normalize, canonical_literals, normal_form_text};
pub use parse::{parse_clauses, parse_cnf, ParseError};
pub use print::{print_clause, print_derivation_step};
pub use subst::{unify, Substitution};
pub use symbol::{set_skolem_prefixes, Symbol, DEFAULT_SKOLEM_PREFIXES};
pub use term::{Literal, Term, Var};

#[cfg(test)]
mod tests;
