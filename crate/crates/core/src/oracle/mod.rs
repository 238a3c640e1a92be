//! DFA-level reference implementations. Every BFA/AFA construction in
//! [`crate::ops`] is checked against these.

mod constructions;
mod minimize;

pub use constructions::{
    complement_dfa, concat_dfa, left_quotient_dfa, product_dfa, reverse_to_dfa, right_quotient_dfa,
    star_dfa,
};
pub use minimize::{equivalent, minimize, CanonicalDfa};
