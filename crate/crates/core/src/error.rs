use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable q{index} is out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("automata are over different alphabets")]
    AlphabetMismatch,

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("state count {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("automaton is not reverse-deterministic: {0}")]
    NotReverseDeterministic(String),

    #[error("expected an alternating automaton (initial function q1)")]
    NotAlternating,

    #[error(
        "{finals} final and {non_finals} non-final states do not fit into two halves of {half} states"
    )]
    HalfFinalInfeasible {
        finals: usize,
        non_finals: usize,
        half: usize,
    },

    #[error("exploration cap of {0} states exceeded")]
    CapExceeded(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("bound check failed: {0}")]
    BoundCheck(String),
}
