use super::{check_size, ensure_fits, require_afa, BoolOp, Model, OperationKind};
use crate::convert::{dfa_to_afa_of_reverse_sized, reverse_dfa_of_bfa};
use crate::error::{Error, Result};
use crate::machines::{Bfa, Dfa};

/// Negates the initial function. Substitution commutes with negation, so the
/// language is complemented.
pub fn complement_bfa(a: &Bfa) -> Bfa {
    a.with_initial(a.initial().negate()).expect("same arity")
}

/// Complement of an AFA by dualization: each transition `h` becomes
/// `u ↦ ¬h(¬u)` and the final states are complemented. The projection `q1`
/// is self-dual, so the result is again an AFA of the same size.
pub fn complement_afa(a: &Bfa) -> Result<Bfa> {
    require_afa(a)?;
    let transitions = (0..a.states())
        .map(|q| {
            (0..a.alphabet().len())
                .map(|s| a.transition(q, s).dual())
                .collect()
        })
        .collect();
    let finals = a.finals().iter().map(|f| !f).collect();
    let out = Bfa::new(
        a.alphabet().clone(),
        transitions,
        a.initial().clone(),
        finals,
    )?;
    check_size(OperationKind::Complement, Model::Afa, 0, a.states(), out)
}

/// Complement of an AFA through the reverse language: the `2^n`-state DFA of
/// the reverse has half of its states final, so does its complement, and the
/// DFA-to-AFA-of-reverse conversion brings it back to `n` states.
pub fn complement_afa_via_reverse(a: &Bfa) -> Result<Bfa> {
    require_afa(a)?;
    let reversed = reverse_dfa_of_bfa(a).complement();
    let out = dfa_to_afa_of_reverse_sized(&reversed, a.states())?;
    check_size(OperationKind::Complement, Model::Afa, 0, a.states(), out)
}

fn kind_of(op: BoolOp) -> OperationKind {
    match op {
        BoolOp::Union => OperationKind::Union,
        BoolOp::Intersection => OperationKind::Intersection,
        BoolOp::Difference => OperationKind::Difference,
        BoolOp::SymmetricDifference => OperationKind::SymmetricDifference,
    }
}

/// Places `a` on states `0..m` and `b` on `m..m+n` and combines the two initial
/// functions with `op`.
pub fn boolean_op_bfa(op: BoolOp, a: &Bfa, b: &Bfa) -> Result<Bfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let (m, n) = (a.states(), b.states());
    ensure_fits(kind_of(op), m, n)?;
    let total = m + n;
    let sigma = a.alphabet().len();
    let mut transitions = Vec::with_capacity(total);
    for q in 0..m {
        transitions.push(
            (0..sigma)
                .map(|s| a.transition(q, s).shift(total, 0))
                .collect(),
        );
    }
    for q in 0..n {
        transitions.push(
            (0..sigma)
                .map(|s| b.transition(q, s).shift(total, m))
                .collect(),
        );
    }
    let initial = op.combine(&a.initial().shift(total, 0), &b.initial().shift(total, m));
    let finals = a.finals().iter().chain(b.finals()).copied().collect();
    let out = Bfa::new(a.alphabet().clone(), transitions, initial, finals)?;
    check_size(kind_of(op), Model::Bfa, m, n, out)
}

/// Boolean operations on AFAs. Union, intersection and difference add one
/// state to the BFA construction; symmetric difference goes through the
/// reverse DFAs and needs no extra state.
pub fn boolean_op_afa(op: BoolOp, a: &Bfa, b: &Bfa) -> Result<Bfa> {
    require_afa(a)?;
    require_afa(b)?;
    a.alphabet().ensure_same(b.alphabet())?;
    let (m, n) = (a.states(), b.states());
    let out = match op {
        BoolOp::SymmetricDifference => {
            let product = full_product(op, &reverse_dfa_of_bfa(a), &reverse_dfa_of_bfa(b));
            dfa_to_afa_of_reverse_sized(&product, m + n).map_err(|e| match e {
                Error::HalfFinalInfeasible { .. } => Error::BoundCheck(format!(
                    "symmetric difference lost the half-final property: {e}"
                )),
                other => other,
            })?
        }
        _ => crate::convert::bfa_to_afa(&boolean_op_bfa(op, a, b)?)?,
    };
    check_size(kind_of(op), Model::Afa, m, n, out)
}

/// Product over all state pairs, reachable or not, so the size is exactly `|a|·|b|`.
fn full_product(op: BoolOp, a: &Dfa, b: &Dfa) -> Dfa {
    let kb = b.states();
    let id = |p: usize, q: usize| p * kb + q;
    let mut transitions = Vec::with_capacity(a.states() * kb);
    let mut finals = Vec::with_capacity(a.states() * kb);
    for p in 0..a.states() {
        for q in 0..kb {
            transitions.push(
                (0..a.alphabet().len())
                    .map(|s| id(a.next(p, s), b.next(q, s)))
                    .collect(),
            );
            finals.push(op.apply(a.is_final(p), b.is_final(q)));
        }
    }
    Dfa::new(
        a.alphabet().clone(),
        transitions,
        id(a.initial(), b.initial()),
        finals,
    )
    .expect("product is well-formed")
}
