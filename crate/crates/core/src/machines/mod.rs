//! The automaton models: BFA (with AFA as a special case), MNFA (with NFA as a
//! special case) and complete DFA.

mod alphabet;
mod bfa;
mod dfa;
mod mnfa;

pub use alphabet::Alphabet;
pub use bfa::Bfa;
pub use dfa::Dfa;
pub use mnfa::Mnfa;

/// Any of the three concrete representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Bfa(Bfa),
    Mnfa(Mnfa),
    Dfa(Dfa),
}

impl Automaton {
    pub fn states(&self) -> usize {
        match self {
            Automaton::Bfa(a) => a.states(),
            Automaton::Mnfa(m) => m.states(),
            Automaton::Dfa(d) => d.states(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Bfa(a) => a.alphabet(),
            Automaton::Mnfa(m) => m.alphabet(),
            Automaton::Dfa(d) => d.alphabet(),
        }
    }

    pub fn accepts(&self, word: &str) -> crate::Result<bool> {
        match self {
            Automaton::Bfa(a) => a.accepts(word),
            Automaton::Mnfa(m) => m.accepts(word),
            Automaton::Dfa(d) => d.accepts(word),
        }
    }

    /// The automaton as a BFA (MNFAs and DFAs are embedded in disjunctive form,
    /// DFAs with their initial state moved to `q1`).
    pub fn to_bfa(&self) -> crate::Result<Bfa> {
        match self {
            Automaton::Bfa(a) => Ok(a.clone()),
            Automaton::Mnfa(m) => Bfa::from_mnfa(m),
            Automaton::Dfa(d) => Bfa::from_dfa(d),
        }
    }
}

/// Which models of the hierarchy a machine belongs to, read as a BFA.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ModelFlags {
    pub bfa: bool,
    pub afa: bool,
    pub mnfa: bool,
    pub nfa: bool,
    pub dfa: bool,
}

impl ModelFlags {
    /// Most specific model name.
    pub fn most_specific(&self) -> &'static str {
        if self.dfa {
            "dfa"
        } else if self.nfa {
            "nfa"
        } else if self.mnfa {
            "mnfa"
        } else if self.afa {
            "afa"
        } else {
            "bfa"
        }
    }
}

/// Classifies a machine.
///
/// AFA means the initial function is exactly `q1`; MNFA-form means the initial
/// function and all transitions are disjunctions of states; NFA additionally
/// needs the initial function `q1` (one initial state, which for the MNFA
/// representation may be any state); DFA additionally needs every transition to
/// be a single state.
pub fn classify_machine(x: &Automaton) -> ModelFlags {
    match x {
        Automaton::Bfa(a) => classify_bfa(a),
        Automaton::Mnfa(m) => {
            let nfa = m.initials().len() == 1;
            let complete_det = (0..m.states())
                .all(|q| (0..m.alphabet().len()).all(|s| m.successors(q, s).len() == 1));
            ModelFlags {
                bfa: true,
                afa: m.initials().len() == 1 && m.initials().contains(&0),
                mnfa: true,
                nfa,
                dfa: nfa && complete_det,
            }
        }
        Automaton::Dfa(d) => ModelFlags {
            bfa: true,
            afa: d.initial() == 0,
            mnfa: true,
            nfa: true,
            dfa: true,
        },
    }
}

fn classify_bfa(a: &Bfa) -> ModelFlags {
    let init_shape = a.initial().classify();
    let afa = a.is_alternating();
    let transitions: Vec<_> = (0..a.states())
        .flat_map(|q| (0..a.alphabet().len()).map(move |s| (q, s)))
        .map(|(q, s)| a.transition(q, s).classify())
        .collect();
    let mnfa =
        init_shape.disjunction.is_some() && transitions.iter().all(|t| t.disjunction.is_some());
    let nfa = mnfa && afa;
    let dfa = nfa && transitions.iter().all(|t| t.projection.is_some());
    ModelFlags {
        bfa: true,
        afa,
        mnfa,
        nfa,
        dfa,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_expr;

    #[test]
    fn example_one_is_not_alternating() {
        let f = |s: &str| parse_expr(s, 2).unwrap();
        let a = Bfa::new(
            Alphabet::binary(),
            vec![vec![f("q1|q2"), f("q1")], vec![f("q2"), f("q1&!q2")]],
            f("q1&q2"),
            vec![true, false],
        )
        .unwrap();
        let flags = classify_machine(&Automaton::Bfa(a));
        assert!(flags.bfa && !flags.afa && !flags.mnfa);
        assert_eq!(flags.most_specific(), "bfa");
    }

    #[test]
    fn lifted_dfa_is_a_dfa_after_renumbering() {
        let d = Dfa::new(
            Alphabet::unary(),
            vec![vec![1], vec![0]],
            1,
            vec![true, false],
        )
        .unwrap();
        assert!(!classify_machine(&Automaton::Dfa(d.clone())).afa);
        let lifted = Bfa::from_dfa(&d).unwrap();
        let flags = classify_machine(&Automaton::Bfa(lifted));
        assert!(flags.afa && flags.mnfa && flags.nfa && flags.dfa);
    }

    #[test]
    fn hierarchy_is_monotone_on_mnfas() {
        let m = Mnfa::new(
            Alphabet::unary(),
            vec![vec![vec![0, 1]], vec![vec![]]],
            [0, 1].into(),
            [1].into(),
        )
        .unwrap();
        let flags = classify_machine(&Automaton::Mnfa(m.clone()));
        assert!(flags.mnfa && !flags.nfa && !flags.dfa);
        let flags = classify_machine(&Automaton::Bfa(Bfa::from_mnfa(&m).unwrap()));
        assert!(flags.mnfa && !flags.nfa && !flags.afa);
    }
}
