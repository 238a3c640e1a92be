use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{random_bfa, ReverseBounds};
use crate::convert::{
    bfa_to_dfa, dfa_to_afa_of_reverse, dfa_to_bfa_of_reverse, reverse_dfa_of_bfa,
};
use crate::error::{Error, Result};
use crate::machines::{Alphabet, Bfa, Dfa};
use crate::ops::{self, result_size, BoolOp, Model, OperationKind};
use crate::oracle::{
    complement_dfa, concat_dfa, equivalent, left_quotient_dfa, product_dfa, right_quotient_dfa,
    star_dfa,
};
use crate::witnesses::{
    hf_concat_a, hf_concat_b, maslov_a, maslov_b, palmovsky_star, unary_union_k, unary_union_l,
};

/// Largest operand size the report accepts.
pub const MAX_REPORT_SIZE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsConfig {
    pub operations: Vec<OperationKind>,
    pub min_size: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub seed: u64,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            operations: OperationKind::ALL.to_vec(),
            min_size: 2,
            max_m: 3,
            max_n: 3,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsRow {
    pub operation: OperationKind,
    pub model: Model,
    /// Size of the first operand; `None` for unary operations.
    pub m: Option<usize>,
    pub n: usize,
    pub constructed: usize,
    pub formula: usize,
    pub lower: usize,
    /// Whether the operands are a witness family rather than random automata.
    pub witnessed: bool,
}

impl BoundsRow {
    pub fn tight(&self) -> bool {
        self.constructed == self.formula && self.formula == self.lower
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub config: BoundsConfig,
    pub rows: Vec<BoundsRow>,
}

impl BoundsReport {
    pub const HEADER: &'static str = "operation\tmodel\tm\tn\tconstructed\tformula\tlower\ttight";

    pub fn row(
        &self,
        operation: OperationKind,
        model: Model,
        m: Option<usize>,
        n: usize,
    ) -> Option<&BoundsRow> {
        self.rows
            .iter()
            .find(|r| r.operation == operation && r.model == model && r.m == m && r.n == n)
    }

    pub fn to_tsv(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", Self::HEADER)?;
        for r in &self.rows {
            let m = r.m.map_or_else(|| "-".to_string(), |m| m.to_string());
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.operation,
                r.model,
                m,
                r.n,
                r.constructed,
                r.formula,
                r.lower,
                if r.tight() { "yes" } else { "no" }
            )?;
        }
        Ok(())
    }
}

/// One row per (operation, model, m, n) in range. Witness families are used
/// where available and seeded random automata otherwise; each result is
/// checked against the oracle on the reverse language before its size and
/// lower bound are recorded.
pub fn bounds_report(config: &BoundsConfig) -> Result<BoundsReport> {
    if config.min_size == 0 || config.max_m > MAX_REPORT_SIZE || config.max_n > MAX_REPORT_SIZE {
        return Err(Error::InvalidParameter(format!(
            "report sizes must lie in 1..={MAX_REPORT_SIZE}"
        )));
    }
    let mut keys = Vec::new();
    for &op in &config.operations {
        for model in [Model::Bfa, Model::Afa] {
            for n in config.min_size..=config.max_n {
                if op.is_binary() {
                    for m in config.min_size..=config.max_m {
                        keys.push((op, model, Some(m), n));
                    }
                } else {
                    keys.push((op, model, None, n));
                }
            }
        }
    }
    keys.sort_by_key(|&(op, model, m, n)| {
        (
            OperationKind::ALL.iter().position(|&k| k == op),
            model,
            m,
            n,
        )
    });
    keys.dedup();
    let rows = keys
        .par_iter()
        .map(|&(op, model, m, n)| build_row(op, model, m, n, config.seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundsReport {
        config: config.clone(),
        rows,
    })
}

fn row_seed(seed: u64, op: OperationKind, model: Model, m: Option<usize>, n: usize) -> u64 {
    let op_index = OperationKind::ALL
        .iter()
        .position(|&k| k == op)
        .unwrap_or(0) as u64;
    let parts = [
        op_index,
        model as u64,
        m.map_or(0, |m| m as u64 + 1),
        n as u64,
    ];
    parts.iter().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, &x| {
        (h ^ x).wrapping_mul(0x1000_0000_01b3).rotate_left(29)
    })
}

/// A BFA or AFA for `L(d)^R`; for AFAs `d` must fit the half-final shape.
fn reverse_automaton(d: &Dfa, model: Model) -> Result<Bfa> {
    match model {
        Model::Bfa => Ok(dfa_to_bfa_of_reverse(d)),
        Model::Afa => dfa_to_afa_of_reverse(d),
    }
}

fn build_row(
    op: OperationKind,
    model: Model,
    m: Option<usize>,
    n: usize,
    seed: u64,
) -> Result<BoundsRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(row_seed(seed, op, model, m, n));
    let afa = model == Model::Afa;
    let size_m = m.unwrap_or(0);
    let (first, second, witnessed) = match op {
        OperationKind::Union | OperationKind::SymmetricDifference => (
            reverse_automaton(&unary_union_k(size_m)?, model)?,
            Some(reverse_automaton(&unary_union_l(n)?, model)?),
            true,
        ),
        OperationKind::Intersection => (
            reverse_automaton(&unary_union_k(size_m)?.complement(), model)?,
            Some(reverse_automaton(&unary_union_l(n)?.complement(), model)?),
            true,
        ),
        OperationKind::Difference => (
            reverse_automaton(&unary_union_k(size_m)?.complement(), model)?,
            Some(reverse_automaton(&unary_union_l(n)?, model)?),
            true,
        ),
        OperationKind::Complement => (reverse_automaton(&unary_union_k(n)?, model)?, None, true),
        OperationKind::Concatenation => {
            let (a, b) = if afa {
                (hf_concat_b(1 << size_m)?, hf_concat_a(1 << n)?)
            } else {
                (maslov_b(1 << size_m)?, maslov_a(1 << n)?)
            };
            (
                reverse_automaton(&a, model)?,
                Some(reverse_automaton(&b, model)?),
                true,
            )
        }
        OperationKind::Star => (dfa_to_afa_of_reverse(&palmovsky_star(1 << n)?)?, None, true),
        OperationKind::Reversal | OperationKind::Square => (
            random_bfa(&mut rng, n, &Alphabet::binary(), afa),
            None,
            false,
        ),
        OperationKind::LeftQuotient | OperationKind::RightQuotient => {
            let k = random_bfa(&mut rng, size_m, &Alphabet::binary(), afa);
            let l = random_bfa(&mut rng, n, &Alphabet::binary(), afa);
            (k, Some(l), false)
        }
    };
    let result = ops::apply(op, model, &first, second.as_ref())?;
    let result_reverse = reverse_dfa_of_bfa(&result);
    let expected = expected_reverse(op, &first, second.as_ref())?;
    if !equivalent(&result_reverse, &expected)? {
        return Err(Error::BoundCheck(format!(
            "{op} on {model}s of sizes ({size_m}, {n}) disagrees with the oracle"
        )));
    }
    let bounds = ReverseBounds::of_reverse(&result_reverse);
    let lower = if afa { bounds.asc } else { bounds.bsc };
    if lower > result.states() {
        return Err(Error::BoundCheck(format!(
            "{op} on {model}s: lower bound {lower} exceeds constructed size {}",
            result.states()
        )));
    }
    Ok(BoundsRow {
        operation: op,
        model,
        m,
        n,
        constructed: result.states(),
        formula: result_size(op, model, size_m, n),
        lower: if bounds.is_degenerate() { 0 } else { lower },
        witnessed,
    })
}

/// A DFA for the reverse of the operation's result, computed by the oracle from
/// the reverse DFAs of the operands.
fn expected_reverse(op: OperationKind, first: &Bfa, second: Option<&Bfa>) -> Result<Dfa> {
    let k = reverse_dfa_of_bfa(first);
    let l = second.map(reverse_dfa_of_bfa);
    let l = || {
        l.clone()
            .ok_or_else(|| Error::InvalidParameter(format!("{op} needs two operands")))
    };
    Ok(match op {
        OperationKind::Complement => complement_dfa(&k),
        OperationKind::Union => product_dfa(BoolOp::Union, &k, &l()?)?,
        OperationKind::Intersection => product_dfa(BoolOp::Intersection, &k, &l()?)?,
        OperationKind::Difference => product_dfa(BoolOp::Difference, &k, &l()?)?,
        OperationKind::SymmetricDifference => product_dfa(BoolOp::SymmetricDifference, &k, &l()?)?,
        OperationKind::Concatenation => concat_dfa(&l()?, &k)?,
        OperationKind::Square => concat_dfa(&k, &k)?,
        OperationKind::Star => star_dfa(&k),
        OperationKind::Reversal => bfa_to_dfa(first),
        OperationKind::RightQuotient => left_quotient_dfa(&k, &l()?)?,
        OperationKind::LeftQuotient => right_quotient_dfa(&k, &l()?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(ops: &[OperationKind]) -> BoundsConfig {
        BoundsConfig {
            operations: ops.to_vec(),
            min_size: 2,
            max_m: 2,
            max_n: 2,
            seed: 7,
        }
    }

    #[test]
    fn union_rows() {
        let config = BoundsConfig {
            max_n: 3,
            ..small(&[OperationKind::Union])
        };
        let r = bounds_report(&config).unwrap();
        let bfa = r.row(OperationKind::Union, Model::Bfa, Some(2), 2).unwrap();
        assert_eq!((bfa.constructed, bfa.formula, bfa.lower), (4, 4, 4));
        let afa = r.row(OperationKind::Union, Model::Afa, Some(2), 3).unwrap();
        assert_eq!((afa.constructed, afa.formula, afa.lower), (6, 6, 6));
        // 8 of the 12 states of the union DFA are final, so 4 AFA states suffice
        let afa = r.row(OperationKind::Union, Model::Afa, Some(2), 2).unwrap();
        assert_eq!((afa.constructed, afa.formula, afa.lower), (5, 5, 4));
    }

    #[test]
    fn tsv_shape() {
        let r = bounds_report(&small(&[
            OperationKind::Complement,
            OperationKind::Reversal,
        ]))
        .unwrap();
        let text = r.to_tsv();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(BoundsReport::HEADER));
        assert!(lines.all(|l| l.split('\t').count() == 8 && l.split('\t').nth(2) == Some("-")));
        assert_eq!(
            r,
            bounds_report(&small(&[
                OperationKind::Complement,
                OperationKind::Reversal
            ]))
            .unwrap()
        );
    }

    #[test]
    fn rejects_large_caps() {
        let config = BoundsConfig {
            max_m: MAX_REPORT_SIZE + 1,
            ..BoundsConfig::default()
        };
        assert!(matches!(
            bounds_report(&config),
            Err(Error::InvalidParameter(_))
        ));
    }
}
