use std::collections::{HashSet, VecDeque};

use super::{check_size, ensure_fits, require_afa, Model, OperationKind};
use crate::boolfn::BooleanFunction;
use crate::convert::{bfa_to_afa, bfa_to_mnfa, determinize};
use crate::error::{Error, Result};
use crate::machines::{Bfa, Mnfa};

/// Default bound on the (function, DFA state) pairs explored by the left quotient.
pub const DEFAULT_EXPLORATION_CAP: usize = 1 << 16;

/// `K L^{-1} = {w | ∃u ∈ L: wu ∈ K}` with `2^m` states.
///
/// Takes the MNFA `M` of `k` and makes a state final when some word of `L`
/// leads from it to the final state of `M`, found by backward search in the
/// product of `M` with a DFA for `L`.
pub fn right_quotient_bfa(k: &Bfa, l: &Bfa) -> Result<Bfa> {
    k.alphabet().ensure_same(l.alphabet())?;
    ensure_fits(OperationKind::RightQuotient, k.states(), l.states())?;
    let front = bfa_to_mnfa(k);
    let dl = determinize(&bfa_to_mnfa(l));
    let (nm, nl) = (front.states(), dl.states());
    let sigma = k.alphabet().len();
    let id = |q: usize, d: usize| q * nl + d;

    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); nm * nl];
    for q in 0..nm {
        for d in 0..nl {
            for s in 0..sigma {
                let d2 = dl.next(d, s);
                for &q2 in front.successors(q, s) {
                    preds[id(q2, d2)].push(id(q, d));
                }
            }
        }
    }
    let mut good = vec![false; nm * nl];
    let mut queue = VecDeque::new();
    for &q in front.finals() {
        for d in (0..nl).filter(|&d| dl.is_final(d)) {
            good[id(q, d)] = true;
            queue.push_back(id(q, d));
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &preds[x] {
            if !good[y] {
                good[y] = true;
                queue.push_back(y);
            }
        }
    }
    let finals = (0..nm).filter(|&q| good[id(q, dl.initial())]).collect();
    let quotient = Mnfa::new(
        front.alphabet().clone(),
        (0..nm)
            .map(|q| {
                (0..sigma)
                    .map(|s| front.successors(q, s).to_vec())
                    .collect()
            })
            .collect(),
        front.initials().clone(),
        finals,
    )?;
    let out = Bfa::from_mnfa(&quotient)?;
    check_size(
        OperationKind::RightQuotient,
        Model::Bfa,
        k.states(),
        l.states(),
        out,
    )
}

pub fn right_quotient_afa(k: &Bfa, l: &Bfa) -> Result<Bfa> {
    require_afa(k)?;
    let out = bfa_to_afa(&right_quotient_bfa(k, l)?)?;
    check_size(
        OperationKind::RightQuotient,
        Model::Afa,
        k.states(),
        l.states(),
        out,
    )
}

/// `L^{-1} K = {w | ∃u ∈ L: uw ∈ K}` with `m` states, exploring at most
/// [`DEFAULT_EXPLORATION_CAP`] pairs.
pub fn left_quotient_bfa(k: &Bfa, l: &Bfa) -> Result<Bfa> {
    left_quotient_bfa_with_cap(k, l, DEFAULT_EXPLORATION_CAP)
}

/// Keeps the states and transitions of `k` and replaces its initial function
/// by the disjunction of every function `g_s·u` with `u ∈ L`. Since
/// substitution distributes over disjunction, `(∨G)·w` accepts exactly when
/// some `g·w` does.
pub fn left_quotient_bfa_with_cap(k: &Bfa, l: &Bfa, cap: usize) -> Result<Bfa> {
    k.alphabet().ensure_same(l.alphabet())?;
    let dl = determinize(&bfa_to_mnfa(l));
    let sigma = k.alphabet().len();
    let start = (k.initial().clone(), dl.initial());
    let mut seen: HashSet<(BooleanFunction, usize)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut initial = BooleanFunction::constant(k.states(), false);
    while let Some((g, d)) = queue.pop_front() {
        if dl.is_final(d) {
            initial = &initial | &g;
        }
        for s in 0..sigma {
            let next = (k.step(&g, s)?, dl.next(d, s));
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let out = k.with_initial(initial)?;
    check_size(
        OperationKind::LeftQuotient,
        Model::Bfa,
        k.states(),
        l.states(),
        out,
    )
}

pub fn left_quotient_afa(k: &Bfa, l: &Bfa) -> Result<Bfa> {
    require_afa(k)?;
    let out = bfa_to_afa(&left_quotient_bfa(k, l)?)?;
    check_size(
        OperationKind::LeftQuotient,
        Model::Afa,
        k.states(),
        l.states(),
        out,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_expr;
    use crate::machines::Alphabet;

    fn unary(init: &str, trans: &str, fin: bool) -> Bfa {
        Bfa::new(
            Alphabet::unary(),
            vec![vec![parse_expr(trans, 1).unwrap()]],
            parse_expr(init, 1).unwrap(),
            vec![fin],
        )
        .unwrap()
    }

    #[test]
    fn quotient_of_odd_by_single_letter() {
        let odd = unary("q1", "!q1", false);
        // {a}: q1 moves to q2, the only final state, which then dies.
        let single = Bfa::new(
            Alphabet::unary(),
            vec![
                vec![parse_expr("q2", 2).unwrap()],
                vec![parse_expr("0", 2).unwrap()],
            ],
            parse_expr("q1", 2).unwrap(),
            vec![false, true],
        )
        .unwrap();
        assert!(single.accepts("a").unwrap());
        assert!(!single.accepts("").unwrap() && !single.accepts("aa").unwrap());

        let right = right_quotient_bfa(&odd, &single).unwrap();
        assert_eq!(right.states(), 2);
        let left = left_quotient_bfa(&odd, &single).unwrap();
        assert_eq!(left.states(), 1);
        for len in 0..6 {
            let w = "a".repeat(len);
            assert_eq!(right.accepts(&w).unwrap(), len % 2 == 0);
            assert_eq!(left.accepts(&w).unwrap(), len % 2 == 0);
        }
    }

    #[test]
    fn exploration_cap() {
        let odd = unary("q1", "!q1", false);
        let all = unary("1", "1", true);
        assert_eq!(
            left_quotient_bfa_with_cap(&odd, &all, 1),
            Err(Error::CapExceeded(1))
        );
        assert!(left_quotient_bfa_with_cap(&odd, &all, 16).is_ok());
    }
}
