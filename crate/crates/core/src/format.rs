//! Line-oriented text format for automata.
//!
//! ```text
//! # comment
//! type: bfa
//! states: 2
//! alphabet: a,b
//! initial: q1&q2
//! final: 1
//! trans: q1,a = q1|q2
//! ```
//!
//! BFA states are named `q1..qn` and the final list uses those 1-based
//! numbers. MNFA and DFA states are numbered from 0; their `initial:` and
//! `trans:` right-hand sides are comma-separated state lists, an empty list
//! meaning no successor. BFAs and DFAs need one `trans:` line per state and
//! symbol.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::boolfn::{parse_expr, BooleanFunction, MAX_ARITY};
use crate::error::{Error, Result};
use crate::machines::{Alphabet, Automaton, Bfa, Dfa, Mnfa};

/// Largest state count accepted for MNFA and DFA files.
pub const MAX_STATES: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Bfa,
    Mnfa,
    Dfa,
}

/// A piece of a line with its 1-based column.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Span<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn trim(self) -> Span<'a> {
        let start = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            line: self.line,
            column: self.column + self.text[..start].chars().count(),
        }
    }

    fn split_once(self, sep: char) -> Option<(Span<'a>, Span<'a>)> {
        let at = self.text.find(sep)?;
        let left = Span {
            text: &self.text[..at],
            ..self
        };
        let right = Span {
            text: &self.text[at + sep.len_utf8()..],
            line: self.line,
            column: self.column + self.text[..at].chars().count() + 1,
        };
        Some((left.trim(), right.trim()))
    }

    /// Comma-separated non-empty items; an empty span gives no items.
    fn items(self) -> Result<Vec<Span<'a>>> {
        if self.text.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut column = self.column;
        for piece in self.text.split(',') {
            let item = Span {
                text: piece,
                line: self.line,
                column,
            }
            .trim();
            if item.text.is_empty() {
                return Err(item.error("empty list item"));
            }
            out.push(item);
            column += piece.chars().count() + 1;
        }
        Ok(out)
    }
}

fn parse_number(span: Span<'_>) -> Result<usize> {
    if span.text.is_empty() || !span.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(span.error(format!("expected a number, found {:?}", span.text)));
    }
    span.text
        .parse()
        .map_err(|_| span.error(format!("number {:?} is too large", span.text)))
}

/// A 0-based state index, written `q<k>` for BFAs and `<k>` otherwise.
fn parse_state(span: Span<'_>, kind: Kind, states: usize) -> Result<usize> {
    let index = match kind {
        Kind::Bfa => {
            let digits = span.text.strip_prefix('q').ok_or_else(|| {
                span.error(format!(
                    "expected a state q1..q{states}, found {:?}",
                    span.text
                ))
            })?;
            let k = parse_number(Span {
                text: digits,
                column: span.column + 1,
                ..span
            })?;
            if k == 0 {
                return Err(span.error("BFA states are numbered from q1"));
            }
            k - 1
        }
        Kind::Mnfa | Kind::Dfa => parse_number(span)?,
    };
    if index >= states {
        return Err(span.error(format!("state {:?} is out of range", span.text)));
    }
    Ok(index)
}

/// A BFA final-state number: `k` or `qk`, 1-based.
fn parse_bfa_final(span: Span<'_>, states: usize) -> Result<usize> {
    let digits = span.text.strip_prefix('q').unwrap_or(span.text);
    let k = parse_number(Span {
        text: digits,
        ..span
    })?;
    if k == 0 || k > states {
        return Err(span.error(format!("final state {:?} is out of range", span.text)));
    }
    Ok(k - 1)
}

fn parse_function(span: Span<'_>, arity: usize) -> Result<BooleanFunction> {
    parse_expr(span.text, arity).map_err(|e| match e {
        Error::Syntax { position, message } => Error::Parse {
            line: span.line,
            column: span.column + span.text[..position.min(span.text.len())].chars().count(),
            message,
        },
        other => span.error(other.to_string()),
    })
}

/// Parses one automaton.
pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut headers: HashMap<&str, Span<'_>> = HashMap::new();
    let mut trans_lines = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let span = Span {
            text: content,
            line,
            column: 1,
        }
        .trim();
        if span.text.is_empty() {
            continue;
        }
        let (key, value) = span
            .split_once(':')
            .ok_or_else(|| span.error("expected `key: value`"))?;
        match key.text {
            "trans" => trans_lines.push(value),
            "type" | "states" | "alphabet" | "initial" | "final" => {
                if headers.insert(key.text, value).is_some() {
                    return Err(key.error(format!("duplicate `{}:` line", key.text)));
                }
            }
            other => return Err(key.error(format!("unknown key {other:?}"))),
        }
    }
    let missing = |key: &str| Error::Parse {
        line: last_line + 1,
        column: 1,
        message: format!("missing `{key}:` line"),
    };
    let header = |key: &'static str| headers.get(key).copied().ok_or_else(|| missing(key));

    let type_span = header("type")?;
    let kind = match type_span.text {
        "bfa" => Kind::Bfa,
        "mnfa" | "nfa" => Kind::Mnfa,
        "dfa" => Kind::Dfa,
        other => return Err(type_span.error(format!("unknown automaton type {other:?}"))),
    };
    let states_span = header("states")?;
    let states = parse_number(states_span)?;
    let limit = if kind == Kind::Bfa {
        MAX_ARITY
    } else {
        MAX_STATES
    };
    if states == 0 || states > limit {
        return Err(states_span.error(format!("state count must lie in 1..={limit}")));
    }
    let alphabet_span = header("alphabet")?;
    let mut symbols = Vec::new();
    for item in alphabet_span.items()? {
        let mut chars = item.text.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => symbols.push(c),
            _ => {
                return Err(item.error(format!("symbol {:?} is not a single character", item.text)))
            }
        }
    }
    let alphabet = Alphabet::new(symbols).map_err(|e| alphabet_span.error(e.to_string()))?;
    let sigma = alphabet.len();
    let initial_span = header("initial")?;
    let final_span = header("final")?;

    let mut rows: Vec<Vec<Option<Span<'_>>>> = vec![vec![None; sigma]; states];
    for line in &trans_lines {
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| line.error("expected `state,symbol = target`"))?;
        let (state_span, symbol_span) = lhs
            .split_once(',')
            .ok_or_else(|| lhs.error("expected `state,symbol`"))?;
        let state = parse_state(state_span, kind, states)?;
        let mut chars = symbol_span.text.chars();
        let symbol = match (chars.next(), chars.next()) {
            (Some(c), None) => alphabet
                .index_of(c)
                .map_err(|_| symbol_span.error(format!("unknown symbol {c:?}")))?,
            _ => return Err(symbol_span.error(format!("unknown symbol {:?}", symbol_span.text))),
        };
        let slot = &mut rows[state][symbol];
        if slot.is_some() {
            return Err(line.error(format!(
                "duplicate transition for {},{}",
                state_span.text, symbol_span.text
            )));
        }
        *slot = Some(rhs);
    }
    let missing_transition = |state: usize, symbol: usize| {
        let name = match kind {
            Kind::Bfa => format!("q{}", state + 1),
            _ => state.to_string(),
        };
        Error::Parse {
            line: last_line + 1,
            column: 1,
            message: format!("missing transition for {name},{}", alphabet.symbol(symbol)),
        }
    };

    let automaton = match kind {
        Kind::Bfa => {
            let mut transitions = Vec::with_capacity(states);
            for (q, row) in rows.iter().enumerate() {
                let mut out = Vec::with_capacity(sigma);
                for (s, rhs) in row.iter().enumerate() {
                    let rhs = rhs.ok_or_else(|| missing_transition(q, s))?;
                    out.push(parse_function(rhs, states)?);
                }
                transitions.push(out);
            }
            let initial = parse_function(initial_span, states)?;
            let mut finals = vec![false; states];
            for item in final_span.items()? {
                finals[parse_bfa_final(item, states)?] = true;
            }
            Automaton::Bfa(Bfa::new(alphabet, transitions, initial, finals)?)
        }
        Kind::Mnfa | Kind::Dfa => {
            let list = |span: Span<'_>| -> Result<Vec<usize>> {
                span.items()?
                    .into_iter()
                    .map(|item| parse_state(item, kind, states))
                    .collect()
            };
            let mut transitions = Vec::with_capacity(states);
            for (q, row) in rows.iter().enumerate() {
                let mut out = Vec::with_capacity(sigma);
                for (s, rhs) in row.iter().enumerate() {
                    let targets = match rhs {
                        Some(rhs) => {
                            let targets = list(*rhs)?;
                            if kind == Kind::Dfa && targets.len() != 1 {
                                return Err(rhs.error("a DFA transition needs exactly one target"));
                            }
                            targets
                        }
                        None if kind == Kind::Dfa => return Err(missing_transition(q, s)),
                        None => Vec::new(),
                    };
                    out.push(targets);
                }
                transitions.push(out);
            }
            let initials = list(initial_span)?;
            let finals = list(final_span)?;
            if kind == Kind::Dfa {
                if initials.len() != 1 {
                    return Err(initial_span.error("a DFA needs exactly one initial state"));
                }
                let mut flags = vec![false; states];
                for f in finals {
                    flags[f] = true;
                }
                let transitions = transitions
                    .into_iter()
                    .map(|row| row.into_iter().map(|t| t[0]).collect())
                    .collect();
                Automaton::Dfa(Dfa::new(alphabet, transitions, initials[0], flags)?)
            } else {
                Automaton::Mnfa(Mnfa::new(
                    alphabet,
                    transitions,
                    initials.into_iter().collect(),
                    finals.into_iter().collect(),
                )?)
            }
        }
    };
    Ok(automaton)
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn push_line(out: &mut String, key: &str, value: &str) {
    if value.is_empty() {
        let _ = writeln!(out, "{key}:");
    } else {
        let _ = writeln!(out, "{key}: {value}");
    }
}

fn push_trans(out: &mut String, state: &str, symbol: char, rhs: &str) {
    if rhs.is_empty() {
        let _ = writeln!(out, "trans: {state},{symbol} =");
    } else {
        let _ = writeln!(out, "trans: {state},{symbol} = {rhs}");
    }
}

/// Canonical text: header lines, then transitions by state and symbol.
pub fn print_automaton(x: &Automaton) -> String {
    let mut out = String::new();
    let alphabet = x.alphabet();
    let kind = match x {
        Automaton::Bfa(_) => "bfa",
        Automaton::Mnfa(_) => "mnfa",
        Automaton::Dfa(_) => "dfa",
    };
    push_line(&mut out, "type", kind);
    push_line(&mut out, "states", &x.states().to_string());
    push_line(&mut out, "alphabet", &alphabet.to_string());
    match x {
        Automaton::Bfa(a) => {
            push_line(&mut out, "initial", &a.initial().to_string());
            let finals = (0..a.states()).filter(|&q| a.is_final(q)).map(|q| q + 1);
            push_line(&mut out, "final", &join(finals));
            for q in 0..a.states() {
                for (s, &c) in alphabet.symbols().iter().enumerate() {
                    push_trans(
                        &mut out,
                        &format!("q{}", q + 1),
                        c,
                        &a.transition(q, s).to_string(),
                    );
                }
            }
        }
        Automaton::Mnfa(m) => {
            push_line(&mut out, "initial", &join(m.initials().iter().copied()));
            push_line(&mut out, "final", &join(m.finals().iter().copied()));
            for q in 0..m.states() {
                for (s, &c) in alphabet.symbols().iter().enumerate() {
                    push_trans(
                        &mut out,
                        &q.to_string(),
                        c,
                        &join(m.successors(q, s).iter().copied()),
                    );
                }
            }
        }
        Automaton::Dfa(d) => {
            push_line(&mut out, "initial", &d.initial().to_string());
            push_line(
                &mut out,
                "final",
                &join((0..d.states()).filter(|&q| d.is_final(q))),
            );
            for q in 0..d.states() {
                for (s, &c) in alphabet.symbols().iter().enumerate() {
                    push_trans(&mut out, &q.to_string(), c, &d.next(q, s).to_string());
                }
            }
        }
    }
    out
}
