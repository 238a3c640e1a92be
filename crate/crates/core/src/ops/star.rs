use std::collections::BTreeSet;

use super::{check_size, ensure_fits, Model, OperationKind};
use crate::convert::{determinize, dfa_to_afa_of_reverse_sized, reverse_dfa_of_bfa};
use crate::error::{Error, Result};
use crate::machines::{Bfa, Dfa, Mnfa};

/// `L(a)*` as an AFA with `2^n` states.
///
/// With `D` the `2^n`-state DFA of the reverse language, the subset DFA of
/// `L(D)*` has at most `2^(2^n)` states of which at most half are final and
/// at most half non-final. Since the star of the reverse is the reverse of the
/// star, converting that DFA back gives a `2^n`-state AFA for `L(a)*`.
pub fn star_bfa(a: &Bfa) -> Result<Bfa> {
    let n = a.states();
    ensure_fits(OperationKind::Star, 0, n)?;
    let reversed = reverse_dfa_of_bfa(a);
    let starred = determinize(&star_mnfa(&reversed));
    let out = dfa_to_afa_of_reverse_sized(&starred, 1 << n).map_err(|e| match e {
        Error::HalfFinalInfeasible { .. } => {
            Error::BoundCheck(format!("star DFA does not fit the half-final shape: {e}"))
        }
        other => other,
    })?;
    check_size(OperationKind::Star, Model::Bfa, 0, n, out)
}

/// NFA for `L(d)*`: every edge into a final state also leads back to the
/// initial state. When the initial state is not final, a fresh accepting start
/// state `k` that moves like it is added.
///
/// Every reachable subset that meets the final states then contains the
/// initial state, so at most half of the `2^k` subsets are final and at most
/// half are not.
fn star_mnfa(d: &Dfa) -> Mnfa {
    let k = d.states();
    let sigma = d.alphabet().len();
    let targets = |q: usize, s: usize| {
        let t = d.next(q, s);
        if d.is_final(t) {
            vec![t, d.initial()]
        } else {
            vec![t]
        }
    };
    let mut transitions: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|q| (0..sigma).map(|s| targets(q, s)).collect())
        .collect();
    let mut finals: BTreeSet<usize> = (0..k).filter(|&q| d.is_final(q)).collect();
    let start = if d.is_final(d.initial()) {
        d.initial()
    } else {
        transitions.push((0..sigma).map(|s| targets(d.initial(), s)).collect());
        finals.insert(k);
        k
    };
    Mnfa::new(d.alphabet().clone(), transitions, [start].into(), finals).expect("well-formed")
}

/// Reversal: the `2^n`-state DFA of the reverse language, read as an AFA.
pub fn reverse_bfa(a: &Bfa) -> Result<Bfa> {
    ensure_fits(OperationKind::Reversal, 0, a.states())?;
    let out = Bfa::from_dfa(&reverse_dfa_of_bfa(a))?;
    check_size(OperationKind::Reversal, Model::Bfa, 0, a.states(), out)
}
