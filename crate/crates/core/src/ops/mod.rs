//! Regular operations on BFAs and AFAs, one constructor per operation.
//!
//! Every constructor checks that its output has exactly the state count of the
//! operation's upper bound ([`result_size`]) and fails with
//! [`Error::BoundCheck`] otherwise.

mod boolean;
mod concat;
mod quotient;
mod star;

use std::fmt;
use std::str::FromStr;

use crate::boolfn::{BooleanFunction, Connective, MAX_ARITY};
use crate::error::{Error, Result};
use crate::machines::Bfa;

pub use boolean::{
    boolean_op_afa, boolean_op_bfa, complement_afa, complement_afa_via_reverse, complement_bfa,
};
pub use concat::{concat_afa, concat_bfa, square_afa, square_bfa};
pub use quotient::{
    left_quotient_afa, left_quotient_bfa, left_quotient_bfa_with_cap, right_quotient_afa,
    right_quotient_bfa, DEFAULT_EXPLORATION_CAP,
};
pub use star::{reverse_bfa, star_bfa};

/// Binary Boolean operations on languages. Difference is `K ∖ L` (first operand minus second).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [
        BoolOp::Union,
        BoolOp::Intersection,
        BoolOp::Difference,
        BoolOp::SymmetricDifference,
    ];

    pub fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Union => x || y,
            BoolOp::Intersection => x && y,
            BoolOp::Difference => x && !y,
            BoolOp::SymmetricDifference => x != y,
        }
    }

    pub(crate) fn combine(self, f: &BooleanFunction, g: &BooleanFunction) -> BooleanFunction {
        match self {
            BoolOp::Union => f.combine(Connective::Or, g),
            BoolOp::Intersection => f.combine(Connective::And, g),
            BoolOp::Difference => f.combine(Connective::And, &g.negate()),
            BoolOp::SymmetricDifference => f.combine(Connective::Xor, g),
        }
        .expect("operands share an arity")
    }
}

/// The rows of the operation table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationKind {
    Complement,
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
    Star,
    Reversal,
    RightQuotient,
    LeftQuotient,
    Concatenation,
    Square,
}

impl OperationKind {
    pub const ALL: [OperationKind; 11] = [
        OperationKind::Complement,
        OperationKind::Union,
        OperationKind::Intersection,
        OperationKind::Difference,
        OperationKind::SymmetricDifference,
        OperationKind::Star,
        OperationKind::Reversal,
        OperationKind::RightQuotient,
        OperationKind::LeftQuotient,
        OperationKind::Concatenation,
        OperationKind::Square,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperationKind::Complement => "complement",
            OperationKind::Union => "union",
            OperationKind::Intersection => "intersection",
            OperationKind::Difference => "difference",
            OperationKind::SymmetricDifference => "symmetric_difference",
            OperationKind::Star => "star",
            OperationKind::Reversal => "reversal",
            OperationKind::RightQuotient => "right_quotient",
            OperationKind::LeftQuotient => "left_quotient",
            OperationKind::Concatenation => "concatenation",
            OperationKind::Square => "square",
        }
    }

    pub fn is_binary(self) -> bool {
        !matches!(
            self,
            OperationKind::Complement
                | OperationKind::Star
                | OperationKind::Reversal
                | OperationKind::Square
        )
    }

    pub fn bool_op(self) -> Option<BoolOp> {
        match self {
            OperationKind::Union => Some(BoolOp::Union),
            OperationKind::Intersection => Some(BoolOp::Intersection),
            OperationKind::Difference => Some(BoolOp::Difference),
            OperationKind::SymmetricDifference => Some(BoolOp::SymmetricDifference),
            _ => None,
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperationKind {
    type Err = Error;

    /// Accepts the canonical names, with `-` or `_`, plus short aliases.
    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.replace('-', "_");
        let kind = match normalized.as_str() {
            "concat" => OperationKind::Concatenation,
            "symdiff" | "xor" => OperationKind::SymmetricDifference,
            "reverse" => OperationKind::Reversal,
            "complementation" => OperationKind::Complement,
            other => *OperationKind::ALL
                .iter()
                .find(|k| k.name() == other)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown operation {s:?}")))?,
        };
        Ok(kind)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Bfa,
    Afa,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Bfa => "BFA",
            Model::Afa => "AFA",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bfa" => Ok(Model::Bfa),
            "afa" => Ok(Model::Afa),
            _ => Err(Error::InvalidParameter(format!("unknown model {s:?}"))),
        }
    }
}

/// Upper bound on the size of the result, which every constructor meets
/// exactly. `m` is the size of the first operand, `n` of the second (or of the
/// only operand for unary operations).
pub fn result_size(kind: OperationKind, model: Model, m: usize, n: usize) -> usize {
    let afa = (model == Model::Afa) as usize;
    match kind {
        OperationKind::Complement => n,
        OperationKind::Union | OperationKind::Intersection | OperationKind::Difference => {
            m + n + afa
        }
        OperationKind::SymmetricDifference => m + n,
        OperationKind::Star | OperationKind::Reversal => 1 << n,
        OperationKind::RightQuotient => (1 << m) + afa,
        OperationKind::LeftQuotient => m + afa,
        OperationKind::Concatenation => (1 << m) + n + afa,
        OperationKind::Square => (1 << n) + n + afa,
    }
}

pub(crate) fn check_size(
    kind: OperationKind,
    model: Model,
    m: usize,
    n: usize,
    result: Bfa,
) -> Result<Bfa> {
    let expected = result_size(kind, model, m, n);
    if result.states() != expected {
        return Err(Error::BoundCheck(format!(
            "{kind} on {model}s of sizes ({m}, {n}) produced {} states, expected {expected}",
            result.states()
        )));
    }
    if model == Model::Afa && !result.is_alternating() {
        return Err(Error::BoundCheck(format!("{kind} did not produce an AFA")));
    }
    Ok(result)
}

/// Fails when the BFA result would exceed [`MAX_ARITY`] states. Operands have
/// at most that many states, so the size formula cannot overflow.
pub(crate) fn ensure_fits(kind: OperationKind, m: usize, n: usize) -> Result<()> {
    let size = result_size(kind, Model::Bfa, m, n);
    if size <= MAX_ARITY {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{kind} of operands with ({m}, {n}) states needs {size} states, more than {MAX_ARITY}"
        )))
    }
}

pub(crate) fn require_afa(a: &Bfa) -> Result<()> {
    if a.is_alternating() {
        Ok(())
    } else {
        Err(Error::NotAlternating)
    }
}

/// Dispatches to the constructor for `kind` and `model`. Binary operations
/// need `second`; unary ones ignore it.
pub fn apply(kind: OperationKind, model: Model, first: &Bfa, second: Option<&Bfa>) -> Result<Bfa> {
    let second =
        || second.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs two operands")));
    match (kind, model) {
        (OperationKind::Complement, Model::Bfa) => Ok(complement_bfa(first)),
        (OperationKind::Complement, Model::Afa) => complement_afa(first),
        (k, Model::Bfa) if k.bool_op().is_some() => {
            boolean_op_bfa(k.bool_op().unwrap(), first, second()?)
        }
        (k, Model::Afa) if k.bool_op().is_some() => {
            boolean_op_afa(k.bool_op().unwrap(), first, second()?)
        }
        (OperationKind::Concatenation, Model::Bfa) => concat_bfa(first, second()?),
        (OperationKind::Concatenation, Model::Afa) => concat_afa(first, second()?),
        (OperationKind::Square, Model::Bfa) => square_bfa(first),
        (OperationKind::Square, Model::Afa) => square_afa(first),
        (OperationKind::Star, model) => {
            if model == Model::Afa {
                require_afa(first)?;
            }
            star_bfa(first)
        }
        (OperationKind::Reversal, model) => {
            if model == Model::Afa {
                require_afa(first)?;
            }
            reverse_bfa(first)
        }
        (OperationKind::RightQuotient, Model::Bfa) => right_quotient_bfa(first, second()?),
        (OperationKind::RightQuotient, Model::Afa) => right_quotient_afa(first, second()?),
        (OperationKind::LeftQuotient, Model::Bfa) => left_quotient_bfa(first, second()?),
        (OperationKind::LeftQuotient, Model::Afa) => left_quotient_afa(first, second()?),
        _ => unreachable!("every operation kind is covered"),
    }
}
