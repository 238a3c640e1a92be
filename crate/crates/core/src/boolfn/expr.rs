//! Textual Boolean expressions.
//!
//! Grammar (whitespace ignored), lowest precedence first:
//!
//! ```text
//! or    := xor ('|' xor)*
//! xor   := and ('^' and)*
//! and   := unary ('&' unary)*
//! unary := '!' unary | atom
//! atom  := 'q' digits | '0' | '1' | '(' or ')'
//! ```
//!
//! Printing emits the disjunction of all prime implicants (Blake canonical
//! form), so equal tables always print to the same text.

use std::collections::{HashMap, HashSet};

use super::BooleanFunction;
use crate::error::{Error, Result};

/// A product term: variable `v` occurs iff bit `v` of `care` is set, negated iff
/// bit `v` of `value` is clear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    pub care: u32,
    pub value: u32,
}

impl Cube {
    fn literals(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        (0..32)
            .filter(|v| self.care >> v & 1 == 1)
            .map(|v| (v, self.value >> v & 1 == 1))
    }

    fn sort_key(&self) -> (u32, Vec<(usize, bool)>) {
        // Positive literal before negative for the same variable.
        (
            self.care.count_ones(),
            self.literals().map(|(v, pos)| (v, !pos)).collect(),
        )
    }
}

pub fn parse_expr(text: &str, arity: usize) -> Result<BooleanFunction> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        arity,
    };
    let f = parser.or()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<BooleanFunction> {
        let mut f = self.xor()?;
        while self.eat(b'|') {
            f = &f | &self.xor()?;
        }
        Ok(f)
    }

    fn xor(&mut self) -> Result<BooleanFunction> {
        let mut f = self.and()?;
        while self.eat(b'^') {
            f = &f ^ &self.and()?;
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<BooleanFunction> {
        let mut f = self.unary()?;
        while self.eat(b'&') {
            f = &f & &self.unary()?;
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<BooleanFunction> {
        if self.eat(b'!') {
            return Ok(!&self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<BooleanFunction> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(b'0') | Some(b'1') => {
                let value = self.src[self.pos] == b'1';
                self.pos += 1;
                Ok(BooleanFunction::constant(self.arity, value))
            }
            Some(b'q') => {
                self.pos += 1;
                let digits_start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == digits_start {
                    return Err(self.error("expected variable index after 'q'"));
                }
                let digits =
                    std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii digits");
                let index: usize = digits.parse().map_err(|_| Error::Syntax {
                    position: start,
                    message: "variable index too large".into(),
                })?;
                if index == 0 || index > self.arity {
                    return Err(Error::VariableOutOfRange {
                        index,
                        arity: self.arity,
                    });
                }
                Ok(BooleanFunction::variable(self.arity, index - 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let f = self.or()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(f)
            }
            Some(_) => Err(self.error("expected variable, constant, '!' or '('")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

/// All prime implicants of `f`, in print order.
pub(crate) fn prime_implicants(f: &BooleanFunction) -> Vec<Cube> {
    let table: Vec<bool> = (0..f.table_len()).map(|k| f.value_at(k)).collect();
    let mut memo = HashMap::new();
    let mut cubes = primes(&table, &mut memo);
    cubes.sort_by_key(Cube::sort_key);
    cubes
}

// Shannon split on the most significant variable x:
// P(f) = P(f0∧f1) ∪ {x̄p : p ∈ P(f0)∖P(f0∧f1)} ∪ {xp : p ∈ P(f1)∖P(f0∧f1)}.
fn primes(table: &[bool], memo: &mut HashMap<Vec<bool>, Vec<Cube>>) -> Vec<Cube> {
    if table.iter().all(|&b| !b) {
        return Vec::new();
    }
    if table.iter().all(|&b| b) {
        return vec![Cube { care: 0, value: 0 }];
    }
    if let Some(hit) = memo.get(table) {
        return hit.clone();
    }
    let half = table.len() / 2;
    let x = half.trailing_zeros();
    let (f0, f1) = table.split_at(half);
    let both: Vec<bool> = f0.iter().zip(f1).map(|(a, b)| *a && *b).collect();
    let shared = primes(&both, memo);
    let shared_set: HashSet<Cube> = shared.iter().copied().collect();
    let mut out = shared.clone();
    for p in primes(f0, memo) {
        if !shared_set.contains(&p) {
            out.push(Cube {
                care: p.care | 1 << x,
                value: p.value,
            });
        }
    }
    for p in primes(f1, memo) {
        if !shared_set.contains(&p) {
            out.push(Cube {
                care: p.care | 1 << x,
                value: p.value | 1 << x,
            });
        }
    }
    memo.insert(table.to_vec(), out.clone());
    out
}

pub(crate) fn print_expr(f: &BooleanFunction) -> String {
    let cubes = prime_implicants(f);
    if cubes.is_empty() {
        return "0".into();
    }
    if cubes.len() == 1 && cubes[0].care == 0 {
        return "1".into();
    }
    cubes
        .iter()
        .map(|c| {
            c.literals()
                .map(|(v, pos)| {
                    if pos {
                        format!("q{}", v + 1)
                    } else {
                        format!("!q{}", v + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join("&")
        })
        .collect::<Vec<_>>()
        .join("|")
}
