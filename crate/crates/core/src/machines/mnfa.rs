use std::collections::BTreeSet;

use super::{Alphabet, Dfa};
use crate::error::{Error, Result};

/// Nondeterministic automaton with a set of initial states. States are `0..k`.
/// Transitions may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mnfa {
    alphabet: Alphabet,
    // transitions[q][a], sorted and deduplicated
    transitions: Vec<Vec<Vec<usize>>>,
    initials: BTreeSet<usize>,
    finals: BTreeSet<usize>,
}

impl Mnfa {
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<Vec<usize>>>,
        initials: BTreeSet<usize>,
        finals: BTreeSet<usize>,
    ) -> Result<Self> {
        let k = transitions.len();
        let out_of_range =
            |q: usize| Error::InvalidAutomaton(format!("state {q} out of range 0..{k}"));
        let mut transitions = transitions;
        for (q, row) in transitions.iter_mut().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transition sets for {} symbols",
                    row.len(),
                    alphabet.len()
                )));
            }
            for targets in row.iter_mut() {
                targets.sort_unstable();
                targets.dedup();
                if let Some(&bad) = targets.iter().find(|&&t| t >= k) {
                    return Err(out_of_range(bad));
                }
            }
        }
        if let Some(&bad) = initials.iter().chain(&finals).find(|&&q| q >= k) {
            return Err(out_of_range(bad));
        }
        Ok(Mnfa {
            alphabet,
            transitions,
            initials,
            finals,
        })
    }

    pub fn states(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn successors(&self, state: usize, symbol: usize) -> &[usize] {
        &self.transitions[state][symbol]
    }

    pub fn initials(&self) -> &BTreeSet<usize> {
        &self.initials
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn step_set(&self, set: &BTreeSet<usize>, symbol: usize) -> BTreeSet<usize> {
        set.iter()
            .flat_map(|&q| self.transitions[q][symbol].iter().copied())
            .collect()
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        let symbols = self.alphabet.encode(word)?;
        Ok(self.accepts_indices(&symbols))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let reached = word
            .iter()
            .fold(self.initials.clone(), |set, &a| self.step_set(&set, a));
        reached.iter().any(|q| self.finals.contains(q))
    }

    /// Swaps initials and finals and inverts every edge.
    pub fn reverse(&self) -> Mnfa {
        let k = self.states();
        let mut transitions = vec![vec![Vec::new(); self.alphabet.len()]; k];
        for (q, row) in self.transitions.iter().enumerate() {
            for (a, targets) in row.iter().enumerate() {
                for &t in targets {
                    transitions[t][a].push(q);
                }
            }
        }
        Mnfa::new(
            self.alphabet.clone(),
            transitions,
            self.finals.clone(),
            self.initials.clone(),
        )
        .expect("reversal is well-formed")
    }

    /// The automaton as a complete DFA, if it has one initial state and exactly
    /// one successor per state and symbol.
    pub fn as_dfa(&self) -> Option<Dfa> {
        if self.initials.len() != 1 {
            return None;
        }
        let mut transitions = Vec::with_capacity(self.states());
        for row in &self.transitions {
            let mut out = Vec::with_capacity(row.len());
            for targets in row {
                match targets.as_slice() {
                    [t] => out.push(*t),
                    _ => return None,
                }
            }
            transitions.push(out);
        }
        let initial = *self.initials.iter().next().expect("one initial");
        let finals = (0..self.states())
            .map(|q| self.finals.contains(&q))
            .collect();
        Some(Dfa::new(self.alphabet.clone(), transitions, initial, finals).expect("valid"))
    }

    pub fn is_reverse_deterministic(&self) -> bool {
        self.reverse().as_dfa().is_some()
    }
}
