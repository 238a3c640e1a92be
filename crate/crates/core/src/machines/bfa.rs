use super::{Alphabet, Dfa, Mnfa};
use crate::boolfn::{Assignment, BooleanFunction, MAX_ARITY};
use crate::error::{Error, Result};

/// Boolean finite automaton `(Q, Σ, ·, g_s, F)` with `Q = {q1, …, qn}`.
///
/// States are addressed by 0-based index (`0` is `q1`). The transition of
/// state `i` on a symbol is a Boolean function over all `n` states; a word is
/// accepted when the initial function, transformed by the word, evaluates to 1
/// at the finality vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bfa {
    alphabet: Alphabet,
    // by_symbol[a][i] = q(i+1)·a
    by_symbol: Vec<Vec<BooleanFunction>>,
    initial: BooleanFunction,
    finals: Vec<bool>,
}

impl Bfa {
    /// `transitions[i][a]` is the function `q(i+1)·a`.
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<BooleanFunction>>,
        initial: BooleanFunction,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let n = finals.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton(
                "a BFA needs at least one state".into(),
            ));
        }
        if transitions.len() != n {
            return Err(Error::InvalidAutomaton(format!(
                "{} transition rows for {n} states",
                transitions.len()
            )));
        }
        if initial.arity() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: initial.arity(),
            });
        }
        let mut by_symbol = vec![Vec::with_capacity(n); alphabet.len()];
        for (i, row) in transitions.into_iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "state q{} has {} transitions for {} symbols",
                    i + 1,
                    row.len(),
                    alphabet.len()
                )));
            }
            for (a, f) in row.into_iter().enumerate() {
                if f.arity() != n {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        found: f.arity(),
                    });
                }
                by_symbol[a].push(f);
            }
        }
        Ok(Bfa {
            alphabet,
            by_symbol,
            initial,
            finals,
        })
    }

    pub fn states(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> &BooleanFunction {
        &self.initial
    }

    pub fn transition(&self, state: usize, symbol: usize) -> &BooleanFunction {
        &self.by_symbol[symbol][state]
    }

    /// `(q1·a, …, qn·a)`.
    pub fn transitions_on(&self, symbol: usize) -> &[BooleanFunction] {
        &self.by_symbol[symbol]
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finality_vector(&self) -> Assignment {
        Assignment::new(self.finals.clone())
    }

    /// Table index of the finality vector.
    pub fn finality_index(&self) -> usize {
        self.finality_vector().index()
    }

    pub fn is_alternating(&self) -> bool {
        self.initial.is_projection_onto(0)
    }

    pub fn with_initial(&self, initial: BooleanFunction) -> Result<Bfa> {
        if initial.arity() != self.states() {
            return Err(Error::ArityMismatch {
                expected: self.states(),
                found: initial.arity(),
            });
        }
        Ok(Bfa {
            initial,
            ..self.clone()
        })
    }

    /// `g·a = g(q1·a, …, qn·a)` for a symbol index.
    pub fn step(&self, g: &BooleanFunction, symbol: usize) -> Result<BooleanFunction> {
        g.substitute(&self.by_symbol[symbol])
    }

    pub fn step_symbol(&self, g: &BooleanFunction, symbol: char) -> Result<BooleanFunction> {
        self.step(g, self.alphabet.index_of(symbol)?)
    }

    /// `g_s·w`, folding the word left to right.
    pub fn run(&self, word: &str) -> Result<BooleanFunction> {
        let symbols = self.alphabet.encode(word)?;
        self.run_indices(&self.initial, &symbols)
    }

    pub fn run_indices(&self, start: &BooleanFunction, word: &[usize]) -> Result<BooleanFunction> {
        word.iter()
            .try_fold(start.clone(), |g, &a| self.step(&g, a))
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        let g = self.run(word)?;
        Ok(g.value_at(self.finality_index()))
    }

    /// Acceptance by backward evaluation: `(g_s·a1…ak)(f) = g_s(H_a1(…H_ak(f)))`
    /// where `H_a(u) = (q1·a(u), …, qn·a(u))`. Avoids building intermediate functions.
    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let mut u = self.finality_index();
        for &a in word.iter().rev() {
            u = self.successor_point(u, a);
        }
        self.initial.value_at(u)
    }

    /// `H_a(u)` as a table index.
    pub fn successor_point(&self, u: usize, symbol: usize) -> usize {
        self.by_symbol[symbol]
            .iter()
            .enumerate()
            .fold(0, |acc, (j, f)| acc | (f.value_at(u) as usize) << j)
    }

    /// Renames states: old state `i` becomes state `perm[i]`.
    pub fn permute_states(&self, perm: &[usize]) -> Bfa {
        let n = self.states();
        assert_eq!(perm.len(), n);
        let mut transitions = vec![Vec::new(); n];
        for (i, &target) in perm.iter().enumerate() {
            transitions[target] = (0..self.alphabet.len())
                .map(|a| self.by_symbol[a][i].remap(n, perm))
                .collect();
        }
        let mut finals = vec![false; n];
        for (i, &target) in perm.iter().enumerate() {
            finals[target] = self.finals[i];
        }
        Bfa::new(
            self.alphabet.clone(),
            transitions,
            self.initial.remap(n, perm),
            finals,
        )
        .expect("permutation preserves well-formedness")
    }

    /// Views an MNFA as a BFA: every transition and the initial function become
    /// disjunctions of states.
    pub fn from_mnfa(m: &Mnfa) -> Result<Bfa> {
        let k = m.states();
        if k > MAX_ARITY {
            return Err(Error::InvalidAutomaton(format!(
                "{k} states exceed the BFA limit of {MAX_ARITY}"
            )));
        }
        let transitions = (0..k)
            .map(|q| {
                (0..m.alphabet().len())
                    .map(|a| BooleanFunction::disjunction_of(k, m.successors(q, a).iter().copied()))
                    .collect()
            })
            .collect();
        let initial = BooleanFunction::disjunction_of(k, m.initials().iter().copied());
        let finals = (0..k).map(|q| m.finals().contains(&q)).collect();
        Bfa::new(m.alphabet().clone(), transitions, initial, finals)
    }

    /// Views a DFA as a BFA whose initial function is `q1`: the DFA's initial
    /// state is swapped with state 0 first.
    pub fn from_dfa(d: &Dfa) -> Result<Bfa> {
        let d = d.with_initial_first();
        Bfa::from_mnfa(&d.to_mnfa())
    }
}
