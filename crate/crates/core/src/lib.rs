//! Boolean finite automata (BFAs) and alternating finite automata (AFAs).
//!
//! A BFA over states `q1..qn` moves a Boolean function over the states by
//! substituting each variable with its transition function; a word is accepted
//! when the resulting function is true at the vector of final states. This
//! crate provides the models, conversions to and from nondeterministic and
//! deterministic automata, the regular operations with exact state counts, a
//! DFA-level oracle, and lower-bound estimates based on the reverse language.

mod bits;

pub mod boolfn;
pub mod complexity;
pub mod convert;
pub mod error;
pub mod format;
pub mod machines;
pub mod ops;
pub mod oracle;
pub mod witnesses;

pub use error::{Error, Result};
