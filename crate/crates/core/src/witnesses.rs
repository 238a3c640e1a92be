//! Witness automata families.
//!
//! DFA families drawn with states `1..k` are returned with state `i` at index
//! `i - 1`. All families are over `{a, b}` except the unary union pair.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::machines::{Alphabet, Automaton, Dfa, Mnfa};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessId {
    Fig1Mnfa,
    MaslovA,
    MaslovB,
    HfConcatA,
    HfConcatB,
    PalmovskyStar,
    UnaryUnionK,
    UnaryUnionL,
    UnaryUnionLPadded,
}

impl WitnessId {
    pub const ALL: [WitnessId; 9] = [
        WitnessId::Fig1Mnfa,
        WitnessId::MaslovA,
        WitnessId::MaslovB,
        WitnessId::HfConcatA,
        WitnessId::HfConcatB,
        WitnessId::PalmovskyStar,
        WitnessId::UnaryUnionK,
        WitnessId::UnaryUnionL,
        WitnessId::UnaryUnionLPadded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessId::Fig1Mnfa => "fig1",
            WitnessId::MaslovA => "maslov-a",
            WitnessId::MaslovB => "maslov-b",
            WitnessId::HfConcatA => "hf-concat-a",
            WitnessId::HfConcatB => "hf-concat-b",
            WitnessId::PalmovskyStar => "palmovsky",
            WitnessId::UnaryUnionK => "unary-union-k",
            WitnessId::UnaryUnionL => "unary-union-l",
            WitnessId::UnaryUnionLPadded => "unary-union-l-padded",
        }
    }

    pub fn build(self, size: usize) -> Result<Automaton> {
        Ok(match self {
            WitnessId::Fig1Mnfa => Automaton::Mnfa(fig1_mnfa(size)?),
            WitnessId::MaslovA => Automaton::Dfa(maslov_a(size)?),
            WitnessId::MaslovB => Automaton::Dfa(maslov_b(size)?),
            WitnessId::HfConcatA => Automaton::Dfa(hf_concat_a(size)?),
            WitnessId::HfConcatB => Automaton::Dfa(hf_concat_b(size)?),
            WitnessId::PalmovskyStar => Automaton::Dfa(palmovsky_star(size)?),
            WitnessId::UnaryUnionK => Automaton::Dfa(unary_union_k(size)?),
            WitnessId::UnaryUnionL => Automaton::Dfa(unary_union_l(size)?),
            WitnessId::UnaryUnionLPadded => Automaton::Dfa(unary_union_l_padded(size)?),
        })
    }
}

impl fmt::Display for WitnessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.replace('_', "-");
        let normalized = normalized.trim_end_matches("-mnfa");
        WitnessId::ALL
            .iter()
            .copied()
            .find(|w| {
                w.name() == normalized
                    || (normalized == "palmovsky-star" && *w == WitnessId::PalmovskyStar)
            })
            .ok_or_else(|| Error::InvalidParameter(format!("unknown witness {s:?}")))
    }
}

fn param(ok: bool, message: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message.into()))
    }
}

fn binary_dfa(
    k: usize,
    next: impl Fn(usize, usize) -> usize,
    finals: impl Fn(usize) -> bool,
) -> Dfa {
    let transitions = (0..k).map(|q| vec![next(q, 0), next(q, 1)]).collect();
    Dfa::new(
        Alphabet::binary(),
        transitions,
        0,
        (0..k).map(finals).collect(),
    )
    .expect("witness is well-formed")
}

/// The `2^n`-state MNFA with initial states `0..2^(n-1)`, final state `2^n - 1`,
/// `a` cycling `i ↦ i+1 mod 2^n`, `b` looping on 0, sending `2^n - 1` to every
/// nonzero state, and undefined elsewhere.
pub fn fig1_mnfa(n: usize) -> Result<Mnfa> {
    param(n >= 2, "fig1 needs n >= 2")?;
    param(n <= 16, "fig1 is limited to n <= 16")?;
    let size = 1usize << n;
    let last = size - 1;
    let transitions = (0..size)
        .map(|i| {
            let b = if i == 0 {
                vec![0]
            } else if i == last {
                (1..size).collect()
            } else {
                Vec::new()
            };
            vec![vec![(i + 1) % size], b]
        })
        .collect();
    Mnfa::new(
        Alphabet::binary(),
        transitions,
        (0..size / 2).collect(),
        [last].into(),
    )
}

/// Maslov's first concatenation witness: `a` cycles `1..m`, `b` fixes every
/// state, final state `m`.
pub fn maslov_a(m: usize) -> Result<Dfa> {
    param(m >= 2, "maslov-a needs m >= 2")?;
    Ok(binary_dfa(
        m,
        |q, s| if s == 0 { (q + 1) % m } else { q },
        |q| q == m - 1,
    ))
}

/// Maslov's second concatenation witness: `b` counts up to `n` and stays there,
/// `a` swaps `n-1` and `n` and fixes the rest, final state `n`. With
/// [`maslov_a`] it meets `m2^n - 2^(n-1)` for `n >= 3`; at `n = 2` one state
/// short.
pub fn maslov_b(n: usize) -> Result<Dfa> {
    param(n >= 2, "maslov-b needs n >= 2")?;
    Ok(binary_dfa(
        n,
        |q, s| match s {
            0 if q == n - 2 => n - 1,
            0 if q == n - 1 => n - 2,
            0 => q,
            _ => (q + 1).min(n - 1),
        },
        |q| q == n - 1,
    ))
}

/// Half-final concatenation witness A: `a` cycles `1..m`, `b` moves `i ↦ i-1`
/// and fixes 1; final states `m/2+1..m`.
pub fn hf_concat_a(m: usize) -> Result<Dfa> {
    param(
        m >= 2 && m.is_multiple_of(2),
        "hf-concat-a needs an even m >= 2",
    )?;
    Ok(binary_dfa(
        m,
        |q, s| match s {
            0 => (q + 1) % m,
            _ => q.saturating_sub(1),
        },
        |q| q >= m / 2,
    ))
}

/// Half-final concatenation witness B: `a` fixes 1 and cycles `2..n`; `b` sends
/// `1 ↦ 2`, `2 ↦ 3` and fixes the rest; final states `n/2+1..n`. With
/// [`hf_concat_a`] it meets `m2^n - (m/2)2^(n-1)` once both sizes are at least 4.
pub fn hf_concat_b(n: usize) -> Result<Dfa> {
    param(
        n >= 2 && n.is_multiple_of(2),
        "hf-concat-b needs an even n >= 2",
    )?;
    Ok(binary_dfa(
        n,
        |q, s| match (s, q) {
            (0, 0) => 0,
            (0, q) if q == n - 1 => 1,
            (0, q) => q + 1,
            (_, 0) => 1,
            (_, 1) => 2.min(n - 1),
            (_, q) => q,
        },
        |q| q >= n / 2,
    ))
}

/// Star witness with half of the states final: `a` cycles `1..n`; `b` fixes 1
/// and `n`, moves `i ↦ i+1` for `2 ≤ i ≤ n-2`, and sends `n-1` to 1.
pub fn palmovsky_star(n: usize) -> Result<Dfa> {
    param(
        n >= 4 && n.is_multiple_of(2),
        "palmovsky needs an even n >= 4",
    )?;
    Ok(binary_dfa(
        n,
        |q, s| match (s, q) {
            (0, q) => (q + 1) % n,
            (_, 0) => 0,
            (_, q) if q == n - 2 => 0,
            (_, q) if q == n - 1 => q,
            (_, q) => q + 1,
        },
        |q| q >= n / 2,
    ))
}

fn unary_cycle(len: usize, finals: impl Fn(usize) -> bool) -> Dfa {
    Dfa::new(
        Alphabet::unary(),
        (0..len).map(|i| vec![(i + 1) % len]).collect(),
        0,
        (0..len).map(finals).collect(),
    )
    .expect("cycle is well-formed")
}

/// `2^m`-cycle over `{a}` whose upper half is final.
pub fn unary_union_k(m: usize) -> Result<Dfa> {
    param((1..=16).contains(&m), "unary-union-k needs 1 <= m <= 16")?;
    let size = 1usize << m;
    Ok(unary_cycle(size, |i| i >= size / 2))
}

/// `(2^n - 1)`-cycle over `{a}` with final states `2^(n-1)..2^n - 2`.
pub fn unary_union_l(n: usize) -> Result<Dfa> {
    param((1..=16).contains(&n), "unary-union-l needs 1 <= n <= 16")?;
    let half = 1usize << (n - 1);
    Ok(unary_cycle(2 * half - 1, |i| i >= half))
}

/// [`unary_union_l`] with one unreachable final state appended, so that exactly
/// half of its `2^n` states are final.
pub fn unary_union_l_padded(n: usize) -> Result<Dfa> {
    Ok(unary_union_l(n)?.pad(1, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_matches_the_drawing_at_n3() {
        let m = fig1_mnfa(3).unwrap();
        assert_eq!(m.states(), 8);
        assert_eq!(
            m.initials().iter().copied().collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(m.finals().iter().copied().collect::<Vec<_>>(), vec![7]);
        for i in 0..8 {
            assert_eq!(m.successors(i, 0), &[(i + 1) % 8]);
        }
        assert_eq!(m.successors(0, 1), &[0]);
        assert_eq!(m.successors(7, 1), &[1, 2, 3, 4, 5, 6, 7]);
        assert!((1..7).all(|i| m.successors(i, 1).is_empty()));
        let r = m.reverse().as_dfa().expect("reverse is a DFA");
        assert_eq!(r.final_count(), 4);
        assert!(fig1_mnfa(1).is_err());
    }

    #[test]
    fn fig1_accepts_a7() {
        let m = fig1_mnfa(3).unwrap();
        assert!(m.accepts("aaaaaaa").unwrap());
        // from the initials {0..3}, a^8 returns to {0..3}, which misses 7
        assert!(!m.accepts(&"a".repeat(8)).unwrap());
    }

    #[test]
    fn maslov_shapes() {
        let a = maslov_a(3).unwrap();
        assert!((0..3).all(|q| a.next(q, 1) == q));
        // a-count ≡ m-1 (mod m), checked on all words up to length 6
        for len in 0..=6 {
            for bits in 0..(1usize << len) {
                let w: Vec<usize> = (0..len).map(|i| bits >> i & 1).collect();
                let a_count = w.iter().filter(|&&s| s == 0).count();
                assert_eq!(a.accepts_indices(&w), a_count % 3 == 2);
            }
        }
        let b = maslov_b(4).unwrap();
        assert_eq!(b.next(2, 0), 3);
        assert_eq!(b.next(3, 0), 2);
        assert_eq!(b.next(0, 0), 0);
        assert_eq!(b.next(3, 1), 3);
        assert!(maslov_b(1).is_err());
    }

    #[test]
    fn half_final_families() {
        for k in [2, 4, 8] {
            assert_eq!(hf_concat_a(k).unwrap().final_count(), k / 2);
            assert_eq!(hf_concat_b(k).unwrap().final_count(), k / 2);
        }
        assert_eq!(palmovsky_star(4).unwrap().final_count(), 2);
        assert!(hf_concat_a(3).is_err());
        assert!(palmovsky_star(2).is_err());
        assert!(palmovsky_star(5).is_err());
    }

    #[test]
    fn palmovsky_edges_at_n4() {
        let d = palmovsky_star(4).unwrap();
        let a: Vec<usize> = (0..4).map(|q| d.next(q, 0)).collect();
        let b: Vec<usize> = (0..4).map(|q| d.next(q, 1)).collect();
        assert_eq!(a, vec![1, 2, 3, 0]);
        assert_eq!(b, vec![0, 2, 0, 3]);
    }

    #[test]
    fn unary_union_shapes() {
        let k = unary_union_k(2).unwrap();
        assert_eq!(k.states(), 4);
        assert_eq!(k.finals(), &[false, false, true, true]);
        let l = unary_union_l(2).unwrap();
        assert_eq!(l.states(), 3);
        assert_eq!(l.finals(), &[false, false, true]);
        let p = unary_union_l_padded(2).unwrap();
        assert_eq!(p.states(), 4);
        assert_eq!(p.final_count(), 2);
    }

    #[test]
    fn ids_parse() {
        for w in WitnessId::ALL {
            assert_eq!(w.name().parse::<WitnessId>().unwrap(), w);
        }
        assert_eq!(
            "fig1_mnfa".parse::<WitnessId>().unwrap(),
            WitnessId::Fig1Mnfa
        );
        assert!("leiss".parse::<WitnessId>().is_err());
    }
}
