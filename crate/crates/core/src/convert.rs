//! Conversions between the models.
//!
//! The central pair is [`bfa_to_mnfa`] / [`mnfa_to_bfa`]: an `n`-state BFA is
//! the same thing as a `2^n`-state MNFA whose reverse is a DFA, with MNFA state
//! `k` standing for the assignment whose bits are the binary digits of `k`
//! (`q1` least significant, see [`StateEncoding`]). Composing with reversal
//! gives the DFA-of-the-reverse round trips [`dfa_to_bfa_of_reverse`] and
//! [`dfa_to_afa_of_reverse`].

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::bits::StateSet;
use crate::boolfn::{Assignment, BooleanFunction, MAX_ARITY};
use crate::error::{Error, Result};
use crate::machines::{Bfa, Dfa, Mnfa};

/// Bijection between `0..2^arity` and `{0,1}^arity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateEncoding {
    arity: usize,
}

impl StateEncoding {
    pub fn new(arity: usize) -> Self {
        StateEncoding { arity }
    }

    pub fn states(&self) -> usize {
        1 << self.arity
    }

    pub fn decode(&self, state: usize) -> Assignment {
        Assignment::from_index(self.arity, state)
    }

    pub fn encode(&self, u: &Assignment) -> Result<usize> {
        if u.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: u.arity(),
            });
        }
        Ok(u.index())
    }
}

/// `⌈log2 k⌉`, with `ceil_log2(1) = 0`.
pub fn ceil_log2(k: usize) -> usize {
    assert!(k > 0);
    k.next_power_of_two().trailing_zeros() as usize
}

/// The `2^n`-state MNFA of a BFA: states are assignments, the initial states
/// are the satisfying assignments of the initial function, the unique final
/// state is the finality vector, and `u∘a` is the preimage of `u` under
/// `u' ↦ (q1·a(u'), …, qn·a(u'))`.
#[allow(clippy::needless_range_loop)]
pub fn bfa_to_mnfa(a: &Bfa) -> Mnfa {
    let size = 1usize << a.states();
    let sigma = a.alphabet().len();
    let mut transitions = vec![vec![Vec::new(); sigma]; size];
    for s in 0..sigma {
        for u_prime in 0..size {
            let u = a.successor_point(u_prime, s);
            transitions[u][s].push(u_prime);
        }
    }
    let initials: BTreeSet<usize> = a.initial().ones().collect();
    let finals: BTreeSet<usize> = [a.finality_index()].into();
    Mnfa::new(a.alphabet().clone(), transitions, initials, finals).expect("well-formed")
}

/// The reverse of [`bfa_to_mnfa`] as a DFA, built directly: a `2^n`-state DFA
/// for the reverse language with initial state the finality vector,
/// `δ(u, a) = (q1·a(u), …, qn·a(u))`, and final states the satisfying
/// assignments of the initial function.
pub fn reverse_dfa_of_bfa(a: &Bfa) -> Dfa {
    let size = 1usize << a.states();
    let sigma = a.alphabet().len();
    let transitions = (0..size)
        .map(|u| (0..sigma).map(|s| a.successor_point(u, s)).collect())
        .collect();
    let finals = (0..size).map(|u| a.initial().value_at(u)).collect();
    Dfa::new(
        a.alphabet().clone(),
        transitions,
        a.finality_index(),
        finals,
    )
    .expect("well-formed")
}

/// Inverse of [`bfa_to_mnfa`]: requires `2^n` states and a deterministic reverse.
pub fn mnfa_to_bfa(m: &Mnfa) -> Result<Bfa> {
    let k = m.states();
    if !k.is_power_of_two() || k < 2 {
        return Err(Error::NotPowerOfTwo(k));
    }
    let n = k.trailing_zeros() as usize;
    let finals: Vec<usize> = m.finals().iter().copied().collect();
    let &[final_state] = finals.as_slice() else {
        return Err(Error::NotReverseDeterministic(format!(
            "{} final states",
            finals.len()
        )));
    };
    let sigma = m.alphabet().len();
    // predecessor[a][u] = the unique u' with u ∈ u'∘a
    let mut predecessor = vec![vec![None; k]; sigma];
    for u_prime in 0..k {
        for (s, preds) in predecessor.iter_mut().enumerate() {
            for &u in m.successors(u_prime, s) {
                if preds[u].replace(u_prime).is_some() {
                    return Err(Error::NotReverseDeterministic(format!(
                        "state {u} has several predecessors on {:?}",
                        m.alphabet().symbol(s)
                    )));
                }
            }
        }
    }
    let mut transitions = vec![Vec::with_capacity(sigma); n];
    for (s, preds) in predecessor.iter().enumerate() {
        let preds: Vec<usize> = preds
            .iter()
            .enumerate()
            .map(|(u, p)| {
                p.ok_or_else(|| {
                    Error::NotReverseDeterministic(format!(
                        "state {u} has no predecessor on {:?}",
                        m.alphabet().symbol(s)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        for (j, row) in transitions.iter_mut().enumerate() {
            row.push(BooleanFunction::from_fn(n, |u| preds[u] >> j & 1 == 1));
        }
    }
    let initial = BooleanFunction::from_fn(n, |u| m.initials().contains(&u));
    let finals = (0..n).map(|j| final_state >> j & 1 == 1).collect();
    Bfa::new(m.alphabet().clone(), transitions, initial, finals)
}

/// Reachable subset construction.
///
/// States are numbered in BFS discovery order with symbols in alphabet order;
/// the empty subset, when reachable, becomes a dead state numbered last.
pub fn determinize(m: &Mnfa) -> Dfa {
    let k = m.states();
    let sigma = m.alphabet().len();
    let start = StateSet::from_iter(k, m.initials().iter().copied());
    let final_set = StateSet::from_iter(k, m.finals().iter().copied());
    const DEAD: usize = usize::MAX;

    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut sets: Vec<StateSet> = Vec::new();
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    let mut needs_dead = false;

    if start.is_empty() {
        needs_dead = true;
    } else {
        index.insert(start.clone(), 0);
        sets.push(start.clone());
        queue.push_back(0);
    }
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(sigma);
        for s in 0..sigma {
            let mut next = StateSet::new(k);
            for q in sets[i].iter() {
                for &t in m.successors(q, s) {
                    next.insert(t);
                }
            }
            if next.is_empty() {
                needs_dead = true;
                row.push(DEAD);
                continue;
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = sets.len();
                    index.insert(next.clone(), id);
                    sets.push(next);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
    }
    let mut finals: Vec<bool> = sets.iter().map(|s| s.intersects(&final_set)).collect();
    let dead = sets.len();
    if needs_dead {
        for row in &mut transitions {
            for t in row.iter_mut() {
                if *t == DEAD {
                    *t = dead;
                }
            }
        }
        transitions.push(vec![dead; sigma]);
        finals.push(false);
    }
    let initial = if start.is_empty() { dead } else { 0 };
    Dfa::new(m.alphabet().clone(), transitions, initial, finals).expect("well-formed")
}

/// Adds a fresh initial state (numbered `k`) standing for the whole initial set.
pub fn mnfa_to_nfa(m: &Mnfa) -> Mnfa {
    let k = m.states();
    let sigma = m.alphabet().len();
    let mut transitions: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|q| (0..sigma).map(|s| m.successors(q, s).to_vec()).collect())
        .collect();
    transitions.push(
        (0..sigma)
            .map(|s| m.step_set(m.initials(), s).into_iter().collect())
            .collect(),
    );
    let mut finals = m.finals().clone();
    if m.initials().iter().any(|q| m.finals().contains(q)) {
        finals.insert(k);
    }
    Mnfa::new(m.alphabet().clone(), transitions, [k].into(), finals).expect("well-formed")
}

/// An `n`-state BFA for the reverse of `L(d)`, with `n = ⌈log2 k⌉` (at least 1).
///
/// `d` is padded to `2^n` states with unreachable non-final self-looping
/// states appended at the top of the index range. In the result,
/// component `j` of the transition on `a` at assignment `u` is bit `j` of
/// `δ(u, a)`; the initial function is the characteristic function of the
/// final states, and the finality vector encodes the initial state.
pub fn dfa_to_bfa_of_reverse(d: &Dfa) -> Bfa {
    let n = ceil_log2(d.states()).max(1);
    let padded = d.pad((1 << n) - d.states(), false);
    mnfa_to_bfa(&padded.to_mnfa().reverse())
        .expect("reverse of a padded DFA is reverse-deterministic")
}

/// An AFA for the reverse of `L(d)` with `⌈log2 k⌉` states (at least 1).
pub fn dfa_to_afa_of_reverse(d: &Dfa) -> Result<Bfa> {
    dfa_to_afa_of_reverse_sized(d, ceil_log2(d.states()).max(1))
}

/// An `n`-state AFA for the reverse of `L(d)`.
///
/// After padding to `2^n` states exactly half must be final, so `d` may have at
/// most `2^(n-1)` final and at most `2^(n-1)` non-final states. Final states are
/// placed on odd indices and non-final states on even ones, which makes the
/// initial function the projection `q1`.
pub fn dfa_to_afa_of_reverse_sized(d: &Dfa, n: usize) -> Result<Bfa> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "an AFA needs at least one state".into(),
        ));
    }
    let half = 1usize << (n - 1);
    let finals = d.final_count();
    let non_finals = d.states() - finals;
    if finals > half || non_finals > half {
        return Err(Error::HalfFinalInfeasible {
            finals,
            non_finals,
            half,
        });
    }
    let size = 1usize << n;
    let mut slot = vec![0; d.states()];
    let (mut next_odd, mut next_even) = (1, 0);
    for (q, s) in slot.iter_mut().enumerate() {
        if d.is_final(q) {
            *s = next_odd;
            next_odd += 2;
        } else {
            *s = next_even;
            next_even += 2;
        }
    }
    let sigma = d.alphabet().len();
    let mut transitions: Vec<Vec<usize>> = (0..size).map(|u| vec![u; sigma]).collect();
    for q in 0..d.states() {
        transitions[slot[q]] = (0..sigma).map(|s| slot[d.next(q, s)]).collect();
    }
    let final_flags = (0..size).map(|u| u & 1 == 1).collect();
    let spread = Dfa::new(
        d.alphabet().clone(),
        transitions,
        slot[d.initial()],
        final_flags,
    )?;
    let out = dfa_to_bfa_of_reverse(&spread);
    debug_assert!(out.is_alternating());
    Ok(out)
}

/// An equivalent AFA with one more state: the fresh state `q1` moves like the
/// old initial function and is final iff the empty word is accepted.
pub fn bfa_to_afa(a: &Bfa) -> Result<Bfa> {
    let n = a.states();
    if n >= MAX_ARITY {
        return Err(Error::InvalidAutomaton(format!(
            "an AFA for a {n}-state BFA would exceed {MAX_ARITY} states"
        )));
    }
    let sigma = a.alphabet().len();
    let mut transitions = Vec::with_capacity(n + 1);
    transitions.push(
        (0..sigma)
            .map(|s| {
                a.step(a.initial(), s)
                    .expect("initial arity matches")
                    .shift(n + 1, 1)
            })
            .collect(),
    );
    for q in 0..n {
        transitions.push(
            (0..sigma)
                .map(|s| a.transition(q, s).shift(n + 1, 1))
                .collect(),
        );
    }
    let mut finals = vec![a.initial().value_at(a.finality_index())];
    finals.extend_from_slice(a.finals());
    Bfa::new(
        a.alphabet().clone(),
        transitions,
        BooleanFunction::variable(n + 1, 0),
        finals,
    )
}

/// The DFA whose states are the distinct functions `g_s·w`, in BFS order.
///
/// This follows the BFA semantics directly and is language-equivalent to
/// `determinize(bfa_to_mnfa(a))`.
pub fn bfa_to_dfa(a: &Bfa) -> Dfa {
    let sigma = a.alphabet().len();
    let f = a.finality_index();
    let mut index: HashMap<BooleanFunction, usize> = HashMap::new();
    let mut functions = vec![a.initial().clone()];
    index.insert(a.initial().clone(), 0);
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < functions.len() {
        let mut row = Vec::with_capacity(sigma);
        for s in 0..sigma {
            let g = a.step(&functions[i], s).expect("arity matches");
            let id = match index.get(&g) {
                Some(&id) => id,
                None => {
                    let id = functions.len();
                    index.insert(g.clone(), id);
                    functions.push(g);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
        i += 1;
    }
    let finals = functions.iter().map(|g| g.value_at(f)).collect();
    Dfa::new(a.alphabet().clone(), transitions, 0, finals).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_expr;
    use crate::machines::Alphabet;

    fn not_loop() -> Bfa {
        Bfa::new(
            Alphabet::unary(),
            vec![vec![parse_expr("!q1", 1).unwrap()]],
            parse_expr("q1", 1).unwrap(),
            vec![true],
        )
        .unwrap()
    }

    #[test]
    fn one_state_negation_loop() {
        let m = bfa_to_mnfa(&not_loop());
        assert_eq!(m.initials(), &BTreeSet::from([1]));
        assert_eq!(m.finals(), &BTreeSet::from([1]));
        assert_eq!(m.successors(0, 0), &[1]);
        assert_eq!(m.successors(1, 0), &[0]);
        assert!(m.is_reverse_deterministic());
        let back = mnfa_to_bfa(&m).unwrap();
        assert_eq!(back.states(), 1);
        for len in 0..6 {
            let w = "a".repeat(len);
            assert_eq!(m.accepts(&w).unwrap(), len % 2 == 0);
            assert_eq!(back.accepts(&w).unwrap(), len % 2 == 0);
        }
    }

    #[test]
    fn mnfa_to_bfa_preconditions() {
        let three = Mnfa::new(
            Alphabet::unary(),
            vec![vec![vec![]]; 3],
            [0].into(),
            [0].into(),
        )
        .unwrap();
        assert_eq!(mnfa_to_bfa(&three), Err(Error::NotPowerOfTwo(3)));
        let two_finals = Mnfa::new(
            Alphabet::unary(),
            vec![vec![vec![1]], vec![vec![0]]],
            [0].into(),
            [0, 1].into(),
        )
        .unwrap();
        assert!(matches!(
            mnfa_to_bfa(&two_finals),
            Err(Error::NotReverseDeterministic(_))
        ));
        let merge = Mnfa::new(
            Alphabet::unary(),
            vec![vec![vec![0]], vec![vec![0]]],
            [0].into(),
            [0].into(),
        )
        .unwrap();
        assert!(matches!(
            mnfa_to_bfa(&merge),
            Err(Error::NotReverseDeterministic(_))
        ));
    }

    #[test]
    fn determinize_adds_dead_state_last() {
        let m = Mnfa::new(
            Alphabet::binary(),
            vec![vec![vec![1], vec![]], vec![vec![1], vec![1]]],
            [0].into(),
            [1].into(),
        )
        .unwrap();
        let d = determinize(&m);
        assert_eq!(d.states(), 3);
        assert_eq!(d.next(0, 1), 2);
        assert_eq!(d.next(2, 0), 2);
        assert!(!d.is_final(2));

        let empty = Mnfa::new(
            Alphabet::unary(),
            vec![vec![vec![0]]],
            [].into(),
            [0].into(),
        )
        .unwrap();
        let d = determinize(&empty);
        assert_eq!(d.states(), 1);
        assert!(!d.accepts("aaa").unwrap());
    }

    #[test]
    fn dfa_as_mnfa_determinizes_to_itself() {
        let d = Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 0], vec![2, 1], vec![0, 2]],
            0,
            vec![false, true, false],
        )
        .unwrap();
        assert_eq!(determinize(&d.to_mnfa()), d);
    }

    #[test]
    fn nfa_conversion_adds_one_state() {
        let m = bfa_to_mnfa(&not_loop());
        let n = mnfa_to_nfa(&m);
        assert_eq!(n.states(), 3);
        assert_eq!(n.initials().len(), 1);
        for len in 0..6 {
            let w = "a".repeat(len);
            assert_eq!(n.accepts(&w).unwrap(), m.accepts(&w).unwrap());
        }
    }

    #[test]
    fn odd_length_dfa_round_trip() {
        let d = Dfa::new(
            Alphabet::unary(),
            vec![vec![1], vec![0]],
            0,
            vec![false, true],
        )
        .unwrap();
        let a = dfa_to_bfa_of_reverse(&d);
        assert_eq!(a.states(), 1);
        for len in 0..6 {
            assert_eq!(a.accepts(&"a".repeat(len)).unwrap(), len % 2 == 1);
        }
        // Direct characterisation: q1·a(u) = bit 0 of δ(u, a).
        assert_eq!(a.transition(0, 0), &parse_expr("!q1", 1).unwrap());
        assert_eq!(reverse_dfa_of_bfa(&a), d);
    }

    #[test]
    fn padding_goes_to_the_top() {
        let d = Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 0], vec![2, 1], vec![0, 2]],
            0,
            vec![false, true, false],
        )
        .unwrap();
        let a = dfa_to_bfa_of_reverse(&d);
        assert_eq!(a.states(), 2);
        assert_eq!(reverse_dfa_of_bfa(&a), d.pad(1, false));
    }

    #[test]
    fn afa_of_reverse_rejects_too_many_finals() {
        let d = Dfa::new(
            Alphabet::unary(),
            vec![vec![1], vec![2], vec![3], vec![0]],
            0,
            vec![true, true, true, false],
        )
        .unwrap();
        assert_eq!(
            dfa_to_afa_of_reverse(&d),
            Err(Error::HalfFinalInfeasible {
                finals: 3,
                non_finals: 1,
                half: 2
            })
        );
        assert!(dfa_to_afa_of_reverse_sized(&d, 3).unwrap().is_alternating());
    }

    #[test]
    fn bfa_to_afa_keeps_empty_word() {
        let a = not_loop()
            .with_initial(parse_expr("!q1", 1).unwrap())
            .unwrap();
        let afa = bfa_to_afa(&a).unwrap();
        assert_eq!(afa.states(), 2);
        assert!(afa.is_alternating());
        assert!(!afa.is_final(0));
        for len in 0..6 {
            let w = "a".repeat(len);
            assert_eq!(afa.accepts(&w).unwrap(), a.accepts(&w).unwrap());
        }
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(10), 4);
        assert_eq!(ceil_log2(56), 6);
        assert_eq!(ceil_log2(64), 6);
    }
}
