//! Subsumption-compatible clause features.
//!
//! Every feature is monotone under instantiation and injective literal
//! embedding, so `C` subsuming `D` implies `f(C) <= f(D)` componentwise.

use crate::fol::{Clause, Symbol, Term};

/// Per-polarity symbol-count buckets.
pub const SYMBOL_BUCKETS: usize = 8;
const FIXED: usize = 4;
pub const DIMENSIONS: usize = FIXED + 2 * SYMBOL_BUCKETS;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClauseFeatureVector(pub [u32; DIMENSIONS]);

impl ClauseFeatureVector {
    /// `self <= other` in every component.
    pub fn dominated_by(&self, other: &ClauseFeatureVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn symbol_count(&self) -> u32 {
        self.0[0]
    }
    pub fn positive_literals(&self) -> u32 {
        self.0[1]
    }
    pub fn negative_literals(&self) -> u32 {
        self.0[2]
    }
    pub fn depth(&self) -> u32 {
        self.0[3]
    }
}

fn bucket(sym: Symbol, arity: usize, is_predicate: bool, ska: bool) -> usize {
    let key = if ska && !is_predicate && sym.is_skolem() {
        // all skolems of one arity share a pseudo-symbol
        0x9e37_79b9u64.wrapping_mul(arity as u64 + 1) >> 7
    } else {
        sym.index() as u64
    };
    (key.wrapping_mul(0x2545_f491_4f6c_dd1d) >> 40) as usize % SYMBOL_BUCKETS
}

fn count_symbols(t: &Term, out: &mut [u32], predicate: bool, ska: bool) {
    if let Term::App(f, args) = t {
        out[bucket(*f, args.len(), predicate, ska)] += 1;
        for a in args.iter() {
            count_symbols(a, out, false, ska);
        }
    }
}

pub fn clause_features(c: &Clause, ska: bool) -> ClauseFeatureVector {
    let mut v = [0u32; DIMENSIONS];
    for l in &c.literals {
        v[0] += l.length() as u32;
        if l.positive {
            v[1] += 1;
        } else {
            v[2] += 1;
        }
        v[3] = v[3].max(l.atom.depth() as u32);
        let base = if l.positive { FIXED } else { FIXED + SYMBOL_BUCKETS };
        count_symbols(&l.atom, &mut v[base..base + SYMBOL_BUCKETS], true, ska);
    }
    ClauseFeatureVector(v)
}
