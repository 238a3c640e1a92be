use super::{check_size, ensure_fits, require_afa, Model, OperationKind};
use crate::boolfn::BooleanFunction;
use crate::convert::{bfa_to_afa, bfa_to_mnfa};
use crate::error::Result;
use crate::machines::Bfa;

/// `L(a)L(b)` with `2^m + n` states.
///
/// `a` is first turned into its `2^m`-state MNFA `M`, whose states become the
/// first `2^m` states of the result in disjunctive form. The unique final state
/// `f` of `M` additionally starts `b`: its transition on `x` is
/// `f·_M x ∨ g_b·_b x`. The states of `b` follow with their own transitions.
/// The initial function is that of `M`; the final states are those of `b`,
/// plus `f` when `b` accepts the empty word.
pub fn concat_bfa(a: &Bfa, b: &Bfa) -> Result<Bfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let (m, n) = (a.states(), b.states());
    ensure_fits(OperationKind::Concatenation, m, n)?;
    let front = bfa_to_mnfa(a);
    let k = front.states();
    let total = k + n;
    let sigma = a.alphabet().len();
    let f = a.finality_index();

    let mut transitions = Vec::with_capacity(total);
    for q in 0..k {
        let row = (0..sigma)
            .map(|s| {
                let own =
                    BooleanFunction::disjunction_of(total, front.successors(q, s).iter().copied());
                if q == f {
                    let start_b = b
                        .step(b.initial(), s)
                        .expect("arity matches")
                        .shift(total, k);
                    &own | &start_b
                } else {
                    own
                }
            })
            .collect();
        transitions.push(row);
    }
    for q in 0..n {
        transitions.push(
            (0..sigma)
                .map(|s| b.transition(q, s).shift(total, k))
                .collect(),
        );
    }
    let initial = BooleanFunction::disjunction_of(total, front.initials().iter().copied());
    let b_accepts_empty = b.initial().value_at(b.finality_index());
    let mut finals = vec![false; k];
    finals[f] = b_accepts_empty;
    finals.extend_from_slice(b.finals());

    let out = Bfa::new(a.alphabet().clone(), transitions, initial, finals)?;
    check_size(OperationKind::Concatenation, Model::Bfa, m, n, out)
}

pub fn concat_afa(a: &Bfa, b: &Bfa) -> Result<Bfa> {
    require_afa(a)?;
    require_afa(b)?;
    let out = bfa_to_afa(&concat_bfa(a, b)?)?;
    check_size(
        OperationKind::Concatenation,
        Model::Afa,
        a.states(),
        b.states(),
        out,
    )
}

/// `L(a)L(a)` by concatenating `a` with a copy of itself.
pub fn square_bfa(a: &Bfa) -> Result<Bfa> {
    let out = concat_bfa(a, a)?;
    check_size(OperationKind::Square, Model::Bfa, 0, a.states(), out)
}

pub fn square_afa(a: &Bfa) -> Result<Bfa> {
    require_afa(a)?;
    let out = bfa_to_afa(&square_bfa(a)?)?;
    check_size(OperationKind::Square, Model::Afa, 0, a.states(), out)
}
