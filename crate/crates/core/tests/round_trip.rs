//! Conversions preserve languages, and the usual algebraic identities hold at
//! the level of minimal DFAs.

mod common;

use bfa_core::convert::{
    bfa_to_afa, bfa_to_mnfa, determinize, dfa_to_afa_of_reverse, dfa_to_bfa_of_reverse,
    mnfa_to_bfa, mnfa_to_nfa, reverse_dfa_of_bfa,
};
use bfa_core::machines::{Automaton, Bfa};
use bfa_core::ops::{self, BoolOp};
use bfa_core::oracle::{concat_dfa, minimize, reverse_to_dfa};
use common::{canonical, canonical_direct, random, rng, words, INSTANCES};

#[test]
fn bfa_to_mnfa_is_reverse_deterministic_and_preserves_language() {
    let mut rng = rng(1);
    let all = words(6);
    for _ in 0..INSTANCES {
        let a = random(&mut rng, 3, false);
        let m = bfa_to_mnfa(&a);
        assert_eq!(m.states(), 1 << a.states());
        assert!(m.is_reverse_deterministic());
        for w in &all {
            assert_eq!(m.accepts_indices(w), a.accepts_indices(w));
        }
        assert_eq!(canonical(&a), canonical_direct(&a));
    }
}

#[test]
fn mnfa_round_trip_is_the_identity() {
    let mut rng = rng(2);
    for _ in 0..INSTANCES {
        let a = random(&mut rng, 3, false);
        let back = mnfa_to_bfa(&bfa_to_mnfa(&a)).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn reverse_dfa_conversions() {
    let mut rng = rng(3);
    for _ in 0..INSTANCES {
        let a = random(&mut rng, 3, false);
        let d = minimize(&determinize(&bfa_to_mnfa(&a))).into_inner();
        let r = dfa_to_bfa_of_reverse(&d);
        assert_eq!(minimize(&reverse_dfa_of_bfa(&r)), minimize(&d));
        assert_eq!(
            minimize(&reverse_dfa_of_bfa(&a)),
            minimize(&reverse_to_dfa(&d))
        );
        if let Ok(afa) = dfa_to_afa_of_reverse(&d) {
            assert!(afa.is_alternating());
            assert_eq!(canonical(&afa), canonical(&r));
        }
        let afa = bfa_to_afa(&a).unwrap();
        assert_eq!(afa.states(), a.states() + 1);
        assert!(afa.is_alternating());
        assert_eq!(canonical(&afa), canonical(&a));
    }
}

#[test]
fn nfa_conversion_preserves_language() {
    let mut rng = rng(4);
    for _ in 0..INSTANCES {
        let a = random(&mut rng, 3, false);
        let m = bfa_to_mnfa(&a);
        let nfa = mnfa_to_nfa(&m);
        assert_eq!(nfa.initials().len(), 1);
        assert_eq!(minimize(&determinize(&nfa)), minimize(&determinize(&m)));
    }
}

#[test]
fn complement_is_an_involution() {
    let mut rng = rng(5);
    for _ in 0..INSTANCES {
        let a = random(&mut rng, 3, false);
        assert_eq!(ops::complement_bfa(&ops::complement_bfa(&a)), a);
        let afa = random(&mut rng, 3, true);
        let twice = ops::complement_afa(&ops::complement_afa(&afa).unwrap()).unwrap();
        assert_eq!(twice, afa);
    }
}

#[test]
fn de_morgan() {
    let mut rng = rng(6);
    let not = |x: &Bfa| ops::complement_bfa(x);
    for _ in 0..INSTANCES {
        let (k, l) = (random(&mut rng, 3, false), random(&mut rng, 3, false));
        let union = ops::boolean_op_bfa(BoolOp::Union, &k, &l).unwrap();
        let meet = ops::boolean_op_bfa(BoolOp::Intersection, &not(&k), &not(&l)).unwrap();
        assert_eq!(canonical(&not(&union)), canonical(&meet));
        let meet = ops::boolean_op_bfa(BoolOp::Intersection, &k, &l).unwrap();
        let union = ops::boolean_op_bfa(BoolOp::Union, &not(&k), &not(&l)).unwrap();
        assert_eq!(canonical(&not(&meet)), canonical(&union));
        let diff = ops::boolean_op_bfa(BoolOp::Difference, &k, &l).unwrap();
        let meet = ops::boolean_op_bfa(BoolOp::Intersection, &k, &not(&l)).unwrap();
        assert_eq!(canonical(&diff), canonical(&meet));
    }
}

#[test]
fn reversal_of_concatenation() {
    let mut rng = rng(7);
    for _ in 0..INSTANCES {
        let (k, l) = (random(&mut rng, 3, false), random(&mut rng, 3, false));
        let kl_reversed = minimize(&reverse_dfa_of_bfa(&ops::concat_bfa(&k, &l).unwrap()));
        let lr = minimize(&reverse_dfa_of_bfa(&l)).into_inner();
        let kr = minimize(&reverse_dfa_of_bfa(&k)).into_inner();
        assert_eq!(kl_reversed, minimize(&concat_dfa(&lr, &kr).unwrap()));
    }
}

#[test]
fn reversal_of_concatenation_through_the_constructions() {
    // reversing KL takes 2^(2^|K| + |L|) states, so K has one state and L at most two
    let mut rng = rng(9);
    for _ in 0..INSTANCES {
        let k = random(&mut rng, 1, false);
        let l = random(&mut rng, 2, false);
        let left = ops::reverse_bfa(&ops::concat_bfa(&k, &l).unwrap()).unwrap();
        let right = ops::concat_bfa(
            &ops::reverse_bfa(&l).unwrap(),
            &ops::reverse_bfa(&k).unwrap(),
        )
        .unwrap();
        assert_eq!(canonical_direct(&left), canonical_direct(&right));
    }
}

#[test]
fn embedded_machines_keep_their_language() {
    let mut rng = rng(8);
    for _ in 0..INSTANCES {
        let a = random(&mut rng, 3, false);
        let m = bfa_to_mnfa(&a);
        let d = minimize(&determinize(&m)).into_inner();
        let from_mnfa = Automaton::Mnfa(m).to_bfa().unwrap();
        assert_eq!(canonical_direct(&from_mnfa), canonical_direct(&a));
        match Automaton::Dfa(d.clone()).to_bfa() {
            // functions over more than a dozen variables make the check slow
            Ok(_) if d.states() > 12 => {}
            Ok(from_dfa) => {
                assert!(from_dfa.is_alternating());
                assert_eq!(canonical_direct(&from_dfa), canonical_direct(&a));
            }
            Err(_) => assert!(d.states() > 24),
        }
    }
}
