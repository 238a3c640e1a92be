use super::{Alphabet, Mnfa};
use crate::error::{Error, Result};

/// Complete deterministic automaton over states `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    transitions: Vec<Vec<usize>>,
    initial: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<usize>>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let k = transitions.len();
        if k == 0 {
            return Err(Error::InvalidAutomaton(
                "a DFA needs at least one state".into(),
            ));
        }
        if finals.len() != k {
            return Err(Error::InvalidAutomaton(format!(
                "{} finality flags for {k} states",
                finals.len()
            )));
        }
        if initial >= k {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transitions for {} symbols",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&t| t >= k) {
                return Err(Error::InvalidAutomaton(format!(
                    "state {bad} out of range 0..{k}"
                )));
            }
        }
        Ok(Dfa {
            alphabet,
            transitions,
            initial,
            finals,
        })
    }

    pub fn states(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.transitions[state][symbol]
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    pub fn run(&self, word: &str) -> Result<usize> {
        let symbols = self.alphabet.encode(word)?;
        Ok(self.run_indices(&symbols))
    }

    pub fn run_indices(&self, word: &[usize]) -> usize {
        word.iter()
            .fold(self.initial, |q, &a| self.transitions[q][a])
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.finals[self.run(word)?])
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.finals[self.run_indices(word)]
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            finals: self.finals.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }

    pub fn with_finals(&self, finals: Vec<bool>) -> Result<Dfa> {
        Dfa::new(
            self.alphabet.clone(),
            self.transitions.clone(),
            self.initial,
            finals,
        )
    }

    pub fn to_mnfa(&self) -> Mnfa {
        Mnfa::new(
            self.alphabet.clone(),
            self.transitions
                .iter()
                .map(|row| row.iter().map(|&t| vec![t]).collect())
                .collect(),
            [self.initial].into(),
            (0..self.states()).filter(|&q| self.finals[q]).collect(),
        )
        .expect("a DFA is a valid MNFA")
    }

    /// Renames states: old state `q` becomes `perm[q]`.
    pub fn permute_states(&self, perm: &[usize]) -> Dfa {
        let k = self.states();
        assert_eq!(perm.len(), k);
        let mut transitions = vec![Vec::new(); k];
        let mut finals = vec![false; k];
        for q in 0..k {
            transitions[perm[q]] = self.transitions[q].iter().map(|&t| perm[t]).collect();
            finals[perm[q]] = self.finals[q];
        }
        Dfa::new(
            self.alphabet.clone(),
            transitions,
            perm[self.initial],
            finals,
        )
        .expect("permutation preserves well-formedness")
    }

    /// Swaps the initial state with state 0.
    pub fn with_initial_first(&self) -> Dfa {
        let mut perm: Vec<usize> = (0..self.states()).collect();
        perm.swap(0, self.initial);
        self.permute_states(&perm)
    }

    /// Appends `extra` unreachable states with self-loops on every symbol.
    pub fn pad(&self, extra: usize, final_pad: bool) -> Dfa {
        let k = self.states();
        let mut transitions = self.transitions.clone();
        let mut finals = self.finals.clone();
        for q in k..k + extra {
            transitions.push(vec![q; self.alphabet.len()]);
            finals.push(final_pad);
        }
        Dfa::new(self.alphabet.clone(), transitions, self.initial, finals).expect("valid padding")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_length() -> Dfa {
        Dfa::new(
            Alphabet::unary(),
            vec![vec![1], vec![0]],
            0,
            vec![false, true],
        )
        .unwrap()
    }

    #[test]
    fn run_and_accept() {
        let d = odd_length();
        assert_eq!(d.run("").unwrap(), 0);
        assert!(d.accepts("aaa").unwrap());
        assert!(!d.accepts("aa").unwrap());
        assert_eq!(d.run("b"), Err(Error::UnknownSymbol('b')));
    }

    #[test]
    fn validation() {
        assert!(Dfa::new(Alphabet::unary(), vec![vec![2]], 0, vec![false]).is_err());
        assert!(Dfa::new(Alphabet::unary(), vec![vec![0]], 1, vec![false]).is_err());
        assert!(Dfa::new(Alphabet::binary(), vec![vec![0]], 0, vec![false]).is_err());
    }

    #[test]
    fn initial_first_keeps_language() {
        let d = Dfa::new(
            Alphabet::unary(),
            vec![vec![1], vec![0]],
            1,
            vec![false, true],
        )
        .unwrap();
        let e = d.with_initial_first();
        assert_eq!(e.initial(), 0);
        for w in ["", "a", "aa", "aaa"] {
            assert_eq!(d.accepts(w).unwrap(), e.accepts(w).unwrap());
        }
    }

    #[test]
    fn padding_is_unreachable() {
        let d = odd_length().pad(2, true);
        assert_eq!(d.states(), 4);
        assert_eq!(d.final_count(), 3);
        assert!(!d.accepts("aa").unwrap());
    }
}
