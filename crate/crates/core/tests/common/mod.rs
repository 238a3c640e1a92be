#![allow(dead_code)]

use bfa_core::complexity::random_bfa;
use bfa_core::convert::{bfa_to_dfa, bfa_to_mnfa, determinize, reverse_dfa_of_bfa};
use bfa_core::machines::{Alphabet, Bfa, Dfa};
use bfa_core::ops::{self, result_size, Model, OperationKind};
use bfa_core::oracle::{
    complement_dfa, concat_dfa, left_quotient_dfa, minimize, product_dfa, reverse_to_dfa,
    right_quotient_dfa, star_dfa, CanonicalDfa,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_b0a1;
pub const INSTANCES: usize = 200;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A random binary BFA with 1 to `max` states.
pub fn random(rng: &mut ChaCha8Rng, max: usize, alternating: bool) -> Bfa {
    let n = rng.gen_range(1..=max);
    random_bfa(rng, n, &Alphabet::binary(), alternating)
}

/// Minimal DFA through the MNFA route.
pub fn canonical(a: &Bfa) -> CanonicalDfa {
    minimize(&determinize(&bfa_to_mnfa(a)))
}

/// Minimal DFA through the function automaton.
pub fn canonical_direct(a: &Bfa) -> CanonicalDfa {
    minimize(&bfa_to_dfa(a))
}

/// The operation computed on DFAs of the operands.
pub fn oracle(kind: OperationKind, a: &Dfa, b: Option<&Dfa>) -> Dfa {
    let b = || b.expect("binary operation");
    match kind {
        OperationKind::Complement => complement_dfa(a),
        OperationKind::Star => star_dfa(a),
        OperationKind::Reversal => reverse_to_dfa(a),
        OperationKind::Square => concat_dfa(a, a).unwrap(),
        OperationKind::Concatenation => concat_dfa(a, b()).unwrap(),
        OperationKind::RightQuotient => right_quotient_dfa(a, b()).unwrap(),
        OperationKind::LeftQuotient => left_quotient_dfa(a, b()).unwrap(),
        k => product_dfa(k.bool_op().expect("Boolean operation"), a, b()).unwrap(),
    }
}

/// All words over `{a, b}` up to length `max`, as symbol indices.
pub fn words(max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..2 {
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The reverse of the operation's result, computed on DFAs of the reversed
/// operands (`(KL)^R = L^R K^R`, `(K L^{-1})^R = (L^R)^{-1} K^R`, and so on).
pub fn oracle_of_reverses(kind: OperationKind, a: &Bfa, b: Option<&Bfa>) -> Dfa {
    let ra = reverse_dfa_of_bfa(a);
    let rb = b.map(reverse_dfa_of_bfa);
    let rb = || rb.clone().expect("binary operation");
    match kind {
        OperationKind::Reversal => bfa_to_dfa(a),
        OperationKind::Concatenation => concat_dfa(&rb(), &ra).unwrap(),
        OperationKind::RightQuotient => left_quotient_dfa(&ra, &rb()).unwrap(),
        OperationKind::LeftQuotient => right_quotient_dfa(&ra, &rb()).unwrap(),
        k => oracle(k, &ra, b.map(|_| rb()).as_ref()),
    }
}

/// Whether forward determinization of the result stays small: concatenation,
/// square and star grow exponentially in the forward DFA of an operand.
pub fn forward_feasible(kind: OperationKind, a: &Bfa, b: Option<&Bfa>) -> bool {
    let small = |x: &Bfa| canonical_direct(x).states() <= 8;
    match kind {
        OperationKind::Concatenation => small(b.expect("binary operation")),
        OperationKind::Square | OperationKind::Star => small(a),
        _ => true,
    }
}

/// Generates operands until `INSTANCES` of them have been compared with the
/// oracle on forward DFAs. Every generated instance is also compared on the
/// reverse language, which stays small for all operations. Returns the number
/// of instances generated.
pub fn check_against_oracle(kind: OperationKind, model: Model) -> Result<usize, String> {
    let salt =
        OperationKind::ALL.iter().position(|&k| k == kind).unwrap() as u64 * 2 + model as u64;
    let mut rng = rng(salt);
    let alternating = model == Model::Afa;
    let mut forward = 0;
    let mut i = 0;
    while forward < INSTANCES {
        i += 1;
        if i > 50 * INSTANCES {
            return Err(format!("{kind} {model}: too few small instances"));
        }
        let a = random(&mut rng, 3, alternating);
        let b = random(&mut rng, 3, alternating);
        let second = kind.is_binary().then_some(&b);
        let out =
            ops::apply(kind, model, &a, second).map_err(|e| format!("{kind} {model} #{i}: {e}"))?;
        let (m, n) = if kind.is_binary() {
            (a.states(), b.states())
        } else {
            (0, a.states())
        };
        if out.states() != result_size(kind, model, m, n) {
            return Err(format!("{kind} {model} #{i}: {} states", out.states()));
        }
        if model == Model::Afa && !out.is_alternating() {
            return Err(format!("{kind} {model} #{i}: not alternating"));
        }
        if minimize(&reverse_dfa_of_bfa(&out)) != minimize(&oracle_of_reverses(kind, &a, second)) {
            return Err(format!(
                "{kind} {model} #{i}: reverse languages differ\n{a:?}\n{b:?}"
            ));
        }
        if forward_feasible(kind, &a, second) {
            let expected = minimize(&oracle(
                kind,
                &bfa_to_dfa(&a),
                second.map(bfa_to_dfa).as_ref(),
            ));
            if canonical(&out) != expected {
                return Err(format!(
                    "{kind} {model} #{i}: languages differ\n{a:?}\n{b:?}"
                ));
            }
            forward += 1;
        }
    }
    Ok(i)
}
