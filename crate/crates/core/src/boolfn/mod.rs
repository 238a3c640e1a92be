//! Boolean functions over the variables `q1..qn`, stored as truth tables.
//!
//! The bit at table index `k` is the value of the function at the assignment
//! whose variable `q(j+1)` equals bit `j` of `k`, so `q1` is the least
//! significant bit. Every encoding of states as assignments in this crate
//! follows the same convention.
//!
//! Variable indices in the library API are 0-based (`variable(n, 0)` is `q1`);
//! the textual expression syntax is 1-based.

mod expr;

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not};

use crate::error::{Error, Result};

pub use expr::{parse_expr, Cube};

/// Largest supported arity. Tables of this arity hold 2^24 bits.
pub const MAX_ARITY: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    arity: usize,
    words: Vec<u64>,
}

/// A point of `{0,1}^n`; bit `i` is the value of `q(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    bits: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connective {
    And,
    Or,
    Xor,
}

/// Structural shape of a function, as used to recognise AFAs, MNFAs and DFAs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionShape {
    /// `Some(i)` when the function is the projection onto variable `i` (0-based).
    pub projection: Option<usize>,
    /// `Some(vars)` when the function is the disjunction of exactly `vars`.
    /// Constant 0 is the empty disjunction.
    pub disjunction: Option<Vec<usize>>,
    pub constant: Option<bool>,
}

fn word_count(arity: usize) -> usize {
    (1usize << arity).div_ceil(64)
}

fn tail_mask(arity: usize) -> u64 {
    if arity >= 6 {
        !0
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    pub fn from_index(arity: usize, index: usize) -> Self {
        Assignment {
            bits: (0..arity).map(|j| index >> j & 1 == 1).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Table index of this assignment (`q1` least significant).
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &b)| acc | (b as usize) << j)
    }
}

impl BooleanFunction {
    fn zeroed(arity: usize) -> Self {
        assert!(
            (1..=MAX_ARITY).contains(&arity),
            "arity {arity} outside 1..={MAX_ARITY}"
        );
        BooleanFunction {
            arity,
            words: vec![0; word_count(arity)],
        }
    }

    pub fn constant(arity: usize, value: bool) -> Self {
        let mut f = Self::zeroed(arity);
        if value {
            f.words.fill(!0);
            f.mask_tail();
        }
        f
    }

    /// The projection onto variable `index` (0-based), i.e. `q(index+1)`.
    pub fn variable(arity: usize, index: usize) -> Self {
        assert!(
            index < arity,
            "variable {index} out of range for arity {arity}"
        );
        Self::from_fn(arity, |k| k >> index & 1 == 1)
    }

    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut out = Self::zeroed(arity);
        for k in 0..out.table_len() {
            if f(k) {
                out.set(k);
            }
        }
        out
    }

    /// Parses a table written as a string of `0`/`1`, index 0 first.
    pub fn from_bit_string(bits: &str) -> Result<Self> {
        let len = bits.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::NotPowerOfTwo(len));
        }
        let arity = len.trailing_zeros() as usize;
        let mut out = Self::zeroed(arity);
        for (k, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => out.set(k),
                _ => {
                    return Err(Error::Syntax {
                        position: k,
                        message: format!("expected 0 or 1, found {c:?}"),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Disjunction of the given variables over `arity` variables (constant 0 when empty).
    pub fn disjunction_of(arity: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut out = Self::zeroed(arity);
        for v in vars {
            assert!(v < arity, "variable {v} out of range for arity {arity}");
            for k in 0..out.table_len() {
                if k >> v & 1 == 1 {
                    out.set(k);
                }
            }
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table_len(&self) -> usize {
        1 << self.arity
    }

    #[inline]
    pub fn value_at(&self, index: usize) -> bool {
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, index: usize) {
        self.words[index / 64] |= 1 << (index % 64);
    }

    fn mask_tail(&mut self) {
        let last = self.words.len() - 1;
        self.words[last] &= tail_mask(self.arity);
    }

    pub fn evaluate(&self, u: &Assignment) -> Result<bool> {
        if u.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: u.arity(),
            });
        }
        Ok(self.value_at(u.index()))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Table indices at which the function is 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.table_len()).filter(|&k| self.value_at(k))
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.table_len())
            .map(|k| if self.value_at(k) { '1' } else { '0' })
            .collect()
    }

    pub fn combine(&self, op: Connective, other: &BooleanFunction) -> Result<BooleanFunction> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| match op {
                Connective::And => a & b,
                Connective::Or => a | b,
                Connective::Xor => a ^ b,
            })
            .collect();
        Ok(BooleanFunction {
            arity: self.arity,
            words,
        })
    }

    pub fn negate(&self) -> BooleanFunction {
        let mut out = BooleanFunction {
            arity: self.arity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    /// The dual `u ↦ ¬f(¬u)`.
    pub fn dual(&self) -> BooleanFunction {
        let top = self.table_len() - 1;
        Self::from_fn(self.arity, |k| !self.value_at(top ^ k))
    }

    /// Simultaneous substitution `u ↦ self(h[0](u), …, h[n-1](u))`.
    ///
    /// `h` must hold exactly `arity` functions sharing one arity, which becomes
    /// the arity of the result.
    pub fn substitute(&self, h: &[BooleanFunction]) -> Result<BooleanFunction> {
        if h.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: h.len(),
            });
        }
        let out_arity = h[0].arity;
        if let Some(bad) = h.iter().find(|f| f.arity != out_arity) {
            return Err(Error::ArityMismatch {
                expected: out_arity,
                found: bad.arity,
            });
        }
        let mut out = Self::zeroed(out_arity);
        for u in 0..out.table_len() {
            let k = h
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, hj)| acc | (hj.value_at(u) as usize) << j);
            if self.value_at(k) {
                out.set(u);
            }
        }
        Ok(out)
    }

    /// Renames variables: variable `i` of `self` becomes variable `positions[i]`
    /// of a function over `new_arity` variables.
    pub fn remap(&self, new_arity: usize, positions: &[usize]) -> BooleanFunction {
        assert_eq!(positions.len(), self.arity, "one position per variable");
        Self::from_fn(new_arity, |u| {
            let k = positions
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &p)| acc | (u >> p & 1) << i);
            self.value_at(k)
        })
    }

    /// Shifts every variable up by `offset` inside a function of `new_arity` variables.
    pub fn shift(&self, new_arity: usize, offset: usize) -> BooleanFunction {
        assert!(offset + self.arity <= new_arity);
        let positions: Vec<usize> = (0..self.arity).map(|i| i + offset).collect();
        self.remap(new_arity, &positions)
    }

    pub fn as_constant(&self) -> Option<bool> {
        match self.count_ones() {
            0 => Some(false),
            c if c == self.table_len() => Some(true),
            _ => None,
        }
    }

    pub fn is_projection_onto(&self, index: usize) -> bool {
        index < self.arity && *self == Self::variable(self.arity, index)
    }

    pub fn classify(&self) -> FunctionShape {
        let constant = self.as_constant();
        let disjunction = if self.value_at(0) {
            None
        } else {
            let vars: Vec<usize> = (0..self.arity).filter(|&v| self.value_at(1 << v)).collect();
            (*self == Self::disjunction_of(self.arity, vars.iter().copied())).then_some(vars)
        };
        let projection = match &disjunction {
            Some(vars) if vars.len() == 1 => Some(vars[0]),
            _ => None,
        };
        FunctionShape {
            projection,
            disjunction,
            constant,
        }
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&expr::print_expr(self))
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BooleanFunction({}: {})",
            self.arity,
            self.to_bit_string()
        )
    }
}

macro_rules! binary_operator {
    ($trait:ident, $method:ident, $connective:expr) => {
        impl $trait for &BooleanFunction {
            type Output = BooleanFunction;

            /// Panics on arity mismatch; use [`BooleanFunction::combine`] for a checked version.
            fn $method(self, rhs: &BooleanFunction) -> BooleanFunction {
                self.combine($connective, rhs).expect("arity mismatch")
            }
        }
    };
}

binary_operator!(BitAnd, bitand, Connective::And);
binary_operator!(BitOr, bitor, Connective::Or);
binary_operator!(BitXor, bitxor, Connective::Xor);

impl Not for &BooleanFunction {
    type Output = BooleanFunction;

    fn not(self) -> BooleanFunction {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(arity: usize, i: usize) -> BooleanFunction {
        BooleanFunction::variable(arity, i - 1)
    }

    #[test]
    fn conjunction_table_and_evaluation() {
        let f = &q(2, 1) & &q(2, 2);
        assert_eq!(f.to_bit_string(), "0001");
        assert!(!f.evaluate(&Assignment::new(vec![true, false])).unwrap());
        assert!(f.evaluate(&Assignment::new(vec![true, true])).unwrap());
    }

    #[test]
    fn constant_one_everywhere() {
        let one = BooleanFunction::constant(3, true);
        assert!((0..8).all(|k| one.evaluate(&Assignment::from_index(3, k)).unwrap()));
        assert_eq!(one.as_constant(), Some(true));
    }

    #[test]
    fn example_one_chain() {
        // g_s = q1∧q2; q1·a = q1∨q2, q2·a = q2; q1·b = q1, q2·b = q1∧¬q2.
        let g = &q(2, 1) & &q(2, 2);
        let after_a = g.substitute(&[&q(2, 1) | &q(2, 2), q(2, 2)]).unwrap();
        assert_eq!(after_a, &(&q(2, 1) | &q(2, 2)) & &q(2, 2));
        let b2 = &q(2, 1) & &!&q(2, 2);
        let after_ab = after_a.substitute(&[q(2, 1), b2.clone()]).unwrap();
        let expected = &(&q(2, 1) | &b2) & &b2;
        assert_eq!(after_ab, expected);
        assert!(after_ab
            .evaluate(&Assignment::new(vec![true, false]))
            .unwrap());
    }

    #[test]
    fn arity_errors() {
        let a = q(2, 1);
        let b = q(3, 1);
        assert_eq!(
            a.combine(Connective::And, &b),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(a.evaluate(&Assignment::from_index(3, 0)).is_err());
        assert!(a.substitute(&[q(2, 1), q(3, 1)]).is_err());
        assert!(a.substitute(&[q(2, 1)]).is_err());
    }

    #[test]
    fn connective_identities() {
        let f = q(2, 1);
        assert_eq!(&f | &!&f, BooleanFunction::constant(2, true));
        assert_eq!(!&!&f, f);
        assert_eq!(
            &q(2, 1) & &q(2, 2),
            q(2, 1).combine(Connective::And, &q(2, 2)).unwrap()
        );
    }

    #[test]
    fn shapes() {
        let s = q(2, 1).classify();
        assert_eq!(s.projection, Some(0));
        assert_eq!(s.disjunction, Some(vec![0]));
        assert_eq!(s.constant, None);

        let s = (&q(3, 1) | &q(3, 3)).classify();
        assert_eq!(s.projection, None);
        assert_eq!(s.disjunction, Some(vec![0, 2]));

        let s = (&q(2, 1) & &q(2, 2)).classify();
        assert_eq!(
            s,
            FunctionShape {
                projection: None,
                disjunction: None,
                constant: None
            }
        );

        let s = BooleanFunction::constant(2, false).classify();
        assert_eq!(s.disjunction, Some(vec![]));
        assert_eq!(s.constant, Some(false));
    }

    #[test]
    fn dual_of_and_is_or() {
        assert_eq!((&q(2, 1) & &q(2, 2)).dual(), &q(2, 1) | &q(2, 2));
        let f = BooleanFunction::from_bit_string("01101001").unwrap();
        assert_eq!(f.dual().dual(), f);
    }

    #[test]
    fn remap_and_shift() {
        let f = &q(2, 1) & &!&q(2, 2);
        assert_eq!(f.shift(4, 2), &q(4, 3) & &!&q(4, 4));
        assert_eq!(f.remap(3, &[2, 0]), &q(3, 3) & &!&q(3, 1));
    }

    #[test]
    fn bit_strings() {
        let f = BooleanFunction::from_bit_string("1000").unwrap();
        assert_eq!(f, !&(&q(2, 1) | &q(2, 2)));
        assert!(BooleanFunction::from_bit_string("100").is_err());
        assert!(BooleanFunction::from_bit_string("10x0").is_err());
    }
}
