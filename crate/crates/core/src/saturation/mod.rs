//! The given-clause loop, its inference rules and the clause selection
//! strategies that drive it.

mod check;
mod eval;
mod infer;
mod proof;
mod simplify;
mod prover;
mod strategy;

pub use check::{check_proof, recompute, CheckError};
pub use eval::{clause_weight, evaluate, priority, quantize, Evaluation, WatchInfo, UWL_OFFSET};
pub use infer::{equality_resolvents, factors, generate, paramodulants, resolve_on, resolve_pair, self_resolvents, Child};
pub use proof::{ProofRecord, ProofStep};
pub use simplify::{backward_simplify, forward_simplify};
pub use prover::{saturate, Budget, Outcome, Prover, RunResult, RunStats, SaturationError, TraceEntry};
pub use strategy::{
    builtin, parse_strategy, resolve_strategy, Cef, PriorityFunction, Strategy, StrategyError, StrategyFlags,
    StrategyMode, WeightFunction, BUILTIN_NAMES,
};
