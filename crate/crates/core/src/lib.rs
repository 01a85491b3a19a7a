//! A saturation prover for clausal first-order logic whose clause selection
//! can be steered by watchlists built from earlier proofs.

pub mod fol;
pub mod fuzz;
pub mod harness;
pub mod saturation;
pub mod selection;
pub mod subsumption;
pub mod watchlist;
