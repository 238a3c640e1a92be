use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

use crate::error::Result;
use crate::machines::Dfa;

/// A minimal DFA with every state reachable and states numbered in BFS order
/// from the initial state, symbols taken in alphabet order. Two canonical DFAs
/// accept the same language iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalDfa(Dfa);

impl CanonicalDfa {
    pub fn into_inner(self) -> Dfa {
        self.0
    }

    pub fn count_finals(&self) -> usize {
        self.0.final_count()
    }
}

impl Deref for CanonicalDfa {
    type Target = Dfa;

    fn deref(&self) -> &Dfa {
        &self.0
    }
}

/// Moore-style partition refinement on the reachable part, then BFS renumbering.
pub fn minimize(d: &Dfa) -> CanonicalDfa {
    let sigma = d.alphabet().len();
    let reachable = bfs_order(d);
    let mut local = vec![usize::MAX; d.states()];
    for (i, &q) in reachable.iter().enumerate() {
        local[q] = i;
    }
    let k = reachable.len();
    let succ: Vec<Vec<usize>> = reachable
        .iter()
        .map(|&q| (0..sigma).map(|s| local[d.next(q, s)]).collect())
        .collect();

    let mut class: Vec<usize> = reachable.iter().map(|&q| d.is_final(q) as usize).collect();
    let mut classes = {
        let mut seen = [false; 2];
        class.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    };
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<usize> = (0..k)
            .map(|q| {
                let mut signature = Vec::with_capacity(sigma + 1);
                signature.push(class[q]);
                signature.extend(succ[q].iter().map(|&t| class[t]));
                let fresh = ids.len();
                *ids.entry(signature).or_insert(fresh)
            })
            .collect();
        let count = ids.len();
        class = next;
        if count == classes {
            break;
        }
        classes = count;
    }

    let mut rep = vec![usize::MAX; classes];
    for q in (0..k).rev() {
        rep[class[q]] = q;
    }
    let transitions: Vec<Vec<usize>> = (0..classes)
        .map(|c| succ[rep[c]].iter().map(|&t| class[t]).collect())
        .collect();
    let finals: Vec<bool> = (0..classes)
        .map(|c| d.is_final(reachable[rep[c]]))
        .collect();
    let quotient = Dfa::new(
        d.alphabet().clone(),
        transitions,
        class[local[d.initial()]],
        finals,
    )
    .expect("quotient is well-formed");
    CanonicalDfa(renumber_bfs(&quotient))
}

fn bfs_order(d: &Dfa) -> Vec<usize> {
    let mut seen = vec![false; d.states()];
    let mut order = vec![d.initial()];
    seen[d.initial()] = true;
    let mut queue = VecDeque::from([d.initial()]);
    while let Some(q) = queue.pop_front() {
        for s in 0..d.alphabet().len() {
            let t = d.next(q, s);
            if !seen[t] {
                seen[t] = true;
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    order
}

fn renumber_bfs(d: &Dfa) -> Dfa {
    let order = bfs_order(d);
    debug_assert_eq!(order.len(), d.states());
    let mut perm = vec![0; d.states()];
    for (i, &q) in order.iter().enumerate() {
        perm[q] = i;
    }
    d.permute_states(&perm)
}

/// Language equivalence by canonical-form identity.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    a.alphabet().ensure_same(b.alphabet())?;
    Ok(minimize(a) == minimize(b))
}
