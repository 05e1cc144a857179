//! Inference operations over finite propositional vocabularies.
//!
//! Everything in this crate works on the semantic side: a theory is the set
//! of worlds satisfying it, encoded as a bitmask, and an inference operation
//! is a total map from theories to stronger theories. On that representation
//! the classical postulates (Cut, Cautious Monotonicity, Loop, Distributivity,
//! Deductivity, Rational Monotonicity) become finite sweeps, preferential
//! models become labelled digraphs, and the operation-to-model constructions
//! can be validated by exhaustive round trips.
//!
//! The crate is `no_std` + `alloc`; IO, serialization and the command line
//! front end live in the companion `infop-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod backend;
pub mod bitrel;
pub mod classify;
pub mod extend;
pub mod formula;
pub mod laws;
pub mod model;
pub mod orders;
pub mod poole;
pub mod postulates;
pub mod repr;
pub mod sample;
pub mod table;
pub mod worlds;

pub use backend::{Backend, BackendKind, Capabilities, TheoryId};
pub use formula::{Formula, ParseError};
pub use postulates::{Counterexample, Postulate, Verdict};
pub use table::OperationTable;
pub use worlds::{Vocabulary, World, WorldSet};
