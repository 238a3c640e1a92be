//! Lower-bound estimates from the minimal DFA of the reverse language, and the
//! bounds report that compares them with the sizes the constructions produce.

mod report;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rand::Rng;
use rayon::prelude::*;

use crate::boolfn::{BooleanFunction, MAX_ARITY};
use crate::convert::{bfa_to_dfa, ceil_log2, reverse_dfa_of_bfa};
use crate::error::{Error, Result};
use crate::machines::{Alphabet, Bfa, Dfa, Mnfa};
use crate::oracle::{minimize, reverse_to_dfa};

pub use report::{bounds_report, BoundsConfig, BoundsReport, BoundsRow};

/// Size and final-state count of the minimal DFA of a reverse language, with
/// the BFA and AFA lower bounds they imply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReverseBounds {
    pub states: usize,
    pub finals: usize,
    pub bsc: usize,
    pub asc: usize,
}

impl ReverseBounds {
    /// Bounds from any DFA of the reverse language; it is minimized first.
    pub fn of_reverse(reverse: &Dfa) -> ReverseBounds {
        let min = minimize(reverse);
        let (states, finals) = (min.states(), min.count_finals());
        ReverseBounds {
            states,
            finals,
            bsc: bsc_from_counts(states),
            asc: asc_from_counts(states, finals),
        }
    }

    /// Bounds for `L(a)`, read off the `2^n`-state reverse DFA of `a`.
    pub fn of_bfa(a: &Bfa) -> ReverseBounds {
        ReverseBounds::of_reverse(&reverse_dfa_of_bfa(a))
    }

    /// Either language is empty or everything, so no bound is meaningful.
    pub fn is_degenerate(&self) -> bool {
        self.states == 1
    }
}

/// `⌈log2 s⌉` for a reverse minimal DFA with `s` states.
pub fn bsc_from_counts(states: usize) -> usize {
    ceil_log2(states)
}

/// The least `n ≥ 1` with at most `2^(n-1)` final and at most `2^(n-1)`
/// non-final states.
pub fn asc_from_counts(states: usize, finals: usize) -> usize {
    let widest = finals.max(states - finals).max(1);
    ceil_log2(widest) + 1
}

/// Lower bound on the BFA size of `L(d)`.
pub fn bsc_lower(d: &Dfa) -> usize {
    ReverseBounds::of_reverse(&reverse_to_dfa(d)).bsc
}

/// Lower bound on the AFA size of `L(d)`.
pub fn asc_lower(d: &Dfa) -> usize {
    ReverseBounds::of_reverse(&reverse_to_dfa(d)).asc
}

pub fn bsc_lower_bfa(a: &Bfa) -> usize {
    ReverseBounds::of_bfa(a).bsc
}

pub fn asc_lower_bfa(a: &Bfa) -> usize {
    ReverseBounds::of_bfa(a).asc
}

fn reachable_sets(m: &Mnfa) -> HashSet<BTreeSet<usize>> {
    let start = m.initials().clone();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(set) = queue.pop_front() {
        for s in 0..m.alphabet().len() {
            let next = m.step_set(&set, s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Whether every singleton `{q}` is reached from the initial set by some word
/// and is exactly the set of states from which some word is accepted.
pub fn check_singletons(m: &Mnfa) -> bool {
    let forward = reachable_sets(m);
    let backward = reachable_sets(&m.reverse());
    (0..m.states()).all(|q| {
        let single = BTreeSet::from([q]);
        forward.contains(&single) && backward.contains(&single)
    })
}

/// Minimal DFA sizes over every binary BFA with a fixed number of states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveSummary {
    pub states: usize,
    pub automata: u64,
    /// Number of automata per minimal DFA size.
    pub histogram: BTreeMap<usize, u64>,
}

impl ExhaustiveSummary {
    pub fn ceiling(&self) -> usize {
        1 << (1 << self.states)
    }

    pub fn max_size(&self) -> usize {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }

    pub fn at_ceiling(&self) -> u64 {
        self.histogram.get(&self.ceiling()).copied().unwrap_or(0)
    }
}

/// Enumerates all `n`-state BFAs over `{a, b}`. Feasible for `n ≤ 2`.
pub fn exhaustive(n: usize) -> Result<ExhaustiveSummary> {
    if !(1..=2).contains(&n) {
        return Err(Error::InvalidParameter(
            "exhaustive enumeration supports n = 1 or 2".into(),
        ));
    }
    let table_bits = 1usize << n;
    let functions = 1u64 << table_bits;
    let tables = 1 + 2 * n as u32;
    let total = functions.pow(tables) << n;
    let histogram = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut hist: BTreeMap<usize, u64>, code| {
            let a = decode_bfa(n, code);
            *hist.entry(minimize(&bfa_to_dfa(&a)).states()).or_default() += 1;
            hist
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_default() += v;
            }
            x
        });
    Ok(ExhaustiveSummary {
        states: n,
        automata: total,
        histogram,
    })
}

fn decode_bfa(n: usize, mut code: u64) -> Bfa {
    let table_bits = 1usize << n;
    let mask = (1u64 << table_bits) - 1;
    let finals = (0..n).map(|i| code >> i & 1 == 1).collect();
    code >>= n;
    let mut next_fn = || {
        let t = code & mask;
        code >>= table_bits;
        BooleanFunction::from_fn(n, |k| t >> k & 1 == 1)
    };
    let initial = next_fn();
    let transitions = (0..n).map(|_| vec![next_fn(), next_fn()]).collect();
    Bfa::new(Alphabet::binary(), transitions, initial, finals).expect("well-formed")
}

/// A uniformly random `n`-state BFA; with `alternating` the initial function
/// is `q1`.
pub fn random_bfa(rng: &mut impl Rng, n: usize, alphabet: &Alphabet, alternating: bool) -> Bfa {
    assert!((1..=MAX_ARITY).contains(&n), "state count out of range");
    let mut random_fn = || BooleanFunction::from_fn(n, |_| rng.gen());
    let mut transitions = Vec::with_capacity(n);
    for _ in 0..n {
        transitions.push((0..alphabet.len()).map(|_| random_fn()).collect());
    }
    let initial = if alternating {
        BooleanFunction::variable(n, 0)
    } else {
        random_fn()
    };
    let finals = (0..n).map(|_| rng.gen()).collect();
    Bfa::new(alphabet.clone(), transitions, initial, finals).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnesses::fig1_mnfa;

    #[test]
    fn bound_arithmetic() {
        assert_eq!(bsc_from_counts(10), 4);
        assert_eq!(bsc_from_counts(56), 6);
        assert_eq!(bsc_from_counts(1), 0);
        assert_eq!(asc_from_counts(12, 9), 5);
        assert_eq!(asc_from_counts(1, 0), 1);
        assert_eq!(asc_from_counts(4, 2), 2);
        assert_eq!(asc_from_counts(4, 1), 3);
    }

    #[test]
    fn singletons_of_fig1() {
        assert!(check_singletons(&fig1_mnfa(2).unwrap()));
        assert!(check_singletons(&fig1_mnfa(3).unwrap()));
    }

    #[test]
    fn singletons_fail_without_b() {
        let m = Mnfa::new(
            Alphabet::binary(),
            vec![vec![vec![1], vec![]], vec![vec![0], vec![]]],
            [0, 1].into(),
            [1].into(),
        )
        .unwrap();
        assert!(!check_singletons(&m));
    }

    #[test]
    fn decode_covers_every_field() {
        let a = decode_bfa(1, 0b1011011);
        assert_eq!(a.finals(), &[true]);
        assert_eq!(a.initial().to_bit_string(), "10");
        assert_eq!(a.transition(0, 0).to_bit_string(), "11");
        assert_eq!(a.transition(0, 1).to_bit_string(), "01");
    }

    #[test]
    fn one_state_bfas_reach_four() {
        let s = exhaustive(1).unwrap();
        assert_eq!(s.automata, 128);
        assert_eq!(s.max_size(), 4);
        assert!(s.at_ceiling() > 0);
    }
}
