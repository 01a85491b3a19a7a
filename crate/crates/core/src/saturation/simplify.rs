//! Unindexed redundancy checks over a plain clause list. The prover runs the
//! same tests through a feature-vector index.

use crate::fol::{Clause, ClauseId};
use crate::subsumption::subsumes;

/// Whether `c` survives: not a tautology and not subsumed by a clause of `p`.
pub fn forward_simplify<'a>(c: &Clause, p: impl IntoIterator<Item = &'a Clause>) -> bool {
    !c.is_tautology() && !p.into_iter().any(|d| subsumes(d, c, false))
}

/// Ids of the clauses of `p` that `g` subsumes, in the order of `p`.
pub fn backward_simplify<'a>(g: &Clause, p: impl IntoIterator<Item = &'a Clause>) -> Vec<ClauseId> {
    p.into_iter().filter(|d| subsumes(g, d, false)).map(|d| d.id).collect()
}
