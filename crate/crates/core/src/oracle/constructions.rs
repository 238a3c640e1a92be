use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::bits::StateSet;
use crate::convert::determinize;
use crate::error::Result;
use crate::machines::{Alphabet, Dfa};
use crate::ops::BoolOp;

/// Generic BFS exploration of a deterministic state space keyed by `K`.
fn explore<K: Clone + Eq + Hash>(
    alphabet: &Alphabet,
    start: K,
    step: impl Fn(&K, usize) -> K,
    accepting: impl Fn(&K) -> bool,
) -> Dfa {
    let sigma = alphabet.len();
    let mut index: HashMap<K, usize> = HashMap::from([(start.clone(), 0)]);
    let mut keys = vec![start];
    let mut transitions = Vec::new();
    let mut i = 0;
    while i < keys.len() {
        let row = (0..sigma)
            .map(|s| {
                let next = step(&keys[i], s);
                if let Some(&id) = index.get(&next) {
                    id
                } else {
                    let id = keys.len();
                    index.insert(next.clone(), id);
                    keys.push(next);
                    id
                }
            })
            .collect();
        transitions.push(row);
        i += 1;
    }
    let finals = keys.iter().map(accepting).collect();
    Dfa::new(alphabet.clone(), transitions, 0, finals).expect("explored DFA is well-formed")
}

/// Reachable product automaton with finality combined by `op`.
pub fn product_dfa(op: BoolOp, a: &Dfa, b: &Dfa) -> Result<Dfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    Ok(explore(
        a.alphabet(),
        (a.initial(), b.initial()),
        |&(p, q), s| (a.next(p, s), b.next(q, s)),
        |&(p, q)| op.apply(a.is_final(p), b.is_final(q)),
    ))
}

/// `L(a)L(b)`: pairs of an `a`-state and the set of `b`-states started so far.
pub fn concat_dfa(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let kb = b.states();
    let with_start = |p: usize, mut set: StateSet| {
        if a.is_final(p) {
            set.insert(b.initial());
        }
        (p, set)
    };
    let b_finals = StateSet::from_iter(kb, (0..kb).filter(|&q| b.is_final(q)));
    Ok(explore(
        a.alphabet(),
        with_start(a.initial(), StateSet::new(kb)),
        |(p, set), s| {
            let next = StateSet::from_iter(kb, set.iter().map(|q| b.next(q, s)));
            with_start(a.next(*p, s), next)
        },
        |(_, set)| set.intersects(&b_finals),
    ))
}

/// `L(d)*`. The key `None` is the fresh start state accepting the empty word;
/// every other key is a set of `d`-states, restarted from the initial state
/// whenever it meets a final state.
pub fn star_dfa(d: &Dfa) -> Dfa {
    let k = d.states();
    let finals = StateSet::from_iter(k, (0..k).filter(|&q| d.is_final(q)));
    let close = |mut set: StateSet| {
        if set.intersects(&finals) {
            set.insert(d.initial());
        }
        set
    };
    explore(
        d.alphabet(),
        None,
        |key: &Option<StateSet>, s| {
            let next = match key {
                None => StateSet::from_iter(k, [d.next(d.initial(), s)]),
                Some(set) => StateSet::from_iter(k, set.iter().map(|q| d.next(q, s))),
            };
            Some(close(next))
        },
        |key| match key {
            None => true,
            Some(set) => set.intersects(&finals),
        },
    )
}

/// A DFA for the reverse language, by subset construction on the reversed automaton.
pub fn reverse_to_dfa(d: &Dfa) -> Dfa {
    determinize(&d.to_mnfa().reverse())
}

pub fn complement_dfa(d: &Dfa) -> Dfa {
    d.complement()
}

/// `K L^{-1} = {w | ∃u ∈ L: wu ∈ K}`: a state of `k` becomes final when some
/// word of `L` leads it into a final state.
pub fn right_quotient_dfa(k: &Dfa, l: &Dfa) -> Result<Dfa> {
    k.alphabet().ensure_same(l.alphabet())?;
    let (nk, nl) = (k.states(), l.states());
    let id = |p: usize, q: usize| p * nl + q;
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); nk * nl];
    for p in 0..nk {
        for q in 0..nl {
            for s in 0..k.alphabet().len() {
                preds[id(k.next(p, s), l.next(q, s))].push(id(p, q));
            }
        }
    }
    let mut good = vec![false; nk * nl];
    let mut queue = VecDeque::new();
    for p in (0..nk).filter(|&p| k.is_final(p)) {
        for q in (0..nl).filter(|&q| l.is_final(q)) {
            good[id(p, q)] = true;
            queue.push_back(id(p, q));
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
    k.with_finals((0..nk).map(|p| good[id(p, l.initial())]).collect())
}

/// `L^{-1} K = {w | ∃u ∈ L: uw ∈ K}`: starts from every `k`-state reachable by
/// a word of `L`.
pub fn left_quotient_dfa(k: &Dfa, l: &Dfa) -> Result<Dfa> {
    k.alphabet().ensure_same(l.alphabet())?;
    let nl = l.states();
    let mut seen = vec![false; k.states() * nl];
    let mut queue = VecDeque::from([(k.initial(), l.initial())]);
    seen[k.initial() * nl + l.initial()] = true;
    let mut starts = std::collections::BTreeSet::new();
    while let Some((p, q)) = queue.pop_front() {
        if l.is_final(q) {
            starts.insert(p);
        }
        for s in 0..k.alphabet().len() {
            let (p2, q2) = (k.next(p, s), l.next(q, s));
            if !seen[p2 * nl + q2] {
                seen[p2 * nl + q2] = true;
                queue.push_back((p2, q2));
            }
        }
    }
    let m = k.to_mnfa();
    let shifted = crate::machines::Mnfa::new(
        m.alphabet().clone(),
        (0..m.states())
            .map(|q| {
                (0..m.alphabet().len())
                    .map(|s| m.successors(q, s).to_vec())
                    .collect()
            })
            .collect(),
        starts,
        m.finals().clone(),
    )?;
    Ok(determinize(&shifted))
}
