//! Executable reductions between DFA intersection non-emptiness, CNF
//! satisfiability, similarity and simulation equivalence.
//!
//! The crate provides DFAs and their product ([`automata`]), labelled
//! transition systems ([`lts`]), similarity and bisimilarity algorithms
//! ([`sim`]), the split-language gadget for CNF formulas ([`sat`]), the
//! end-to-end decision pipelines ([`pipeline`]) and a scaling benchmark
//! ([`bench`]).

pub mod automata;
pub mod bench;
pub mod error;
pub mod format;
pub mod lts;
pub mod pipeline;
pub mod random;
pub mod report;
pub mod sat;
pub mod sim;

pub use automata::{Dfa, Word};
pub use error::{Error, Result};
pub use lts::{Lts, Transition};
