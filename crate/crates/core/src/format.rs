//! Plain-text and Graphviz renderings of a [`Dfa`].
//!
//! The text format is line based:
//!
//! ```text
//! alphabet: abc
//! states: 2
//! initial: 0
//! final: 0
//! trans: 0 a 1
//! trans: 0 b 0
//! ...
//! ```
//!
//! Every (state, symbol) pair must have exactly one `trans` line. Blank
//! lines and lines starting with `#` are skipped when reading.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};

impl Dfa {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let finals: Vec<String> = self.finals().iter().map(|s| s.to_string()).collect();
        writeln!(out, "alphabet: {}", self.alphabet()).unwrap();
        writeln!(out, "states: {}", self.state_count()).unwrap();
        writeln!(out, "initial: {}", self.initial()).unwrap();
        if finals.is_empty() {
            writeln!(out, "final:").unwrap();
        } else {
            writeln!(out, "final: {}", finals.join(" ")).unwrap();
        }
        for s in 0..self.state_count() {
            for (i, c) in self.alphabet().symbols().iter().enumerate() {
                writeln!(out, "trans: {s} {c} {}", self.step(s, i)).unwrap();
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Dfa> {
        let mut alphabet: Option<Alphabet> = None;
        let mut states: Option<usize> = None;
        let mut initial: Option<usize> = None;
        let mut finals: Option<Vec<usize>> = None;
        let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();

        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let err = |message: String| Error::DfaFormat { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed
                .split_once(':')
                .ok_or_else(|| err(format!("expected `key: value`, found {trimmed:?}")))?;
            let value = value.trim();
            let number = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| err(format!("invalid number {s:?}")))
            };
            match key.trim() {
                "alphabet" => {
                    if alphabet.is_some() {
                        return Err(err("duplicate alphabet line".into()));
                    }
                    let symbols = value.chars().filter(|c| !c.is_whitespace());
                    alphabet = Some(Alphabet::from_symbols(symbols).map_err(|e| err(e.to_string()))?);
                }
                "states" => {
                    if states.is_some() {
                        return Err(err("duplicate states line".into()));
                    }
                    states = Some(number(value)?);
                }
                "initial" => {
                    if initial.is_some() {
                        return Err(err("duplicate initial line".into()));
                    }
                    initial = Some(number(value)?);
                }
                "final" => {
                    if finals.is_some() {
                        return Err(err("duplicate final line".into()));
                    }
                    finals = Some(value.split_whitespace().map(number).collect::<Result<_>>()?);
                }
                "trans" => {
                    let (Some(sigma), Some(n)) = (&alphabet, states) else {
                        return Err(err("trans line before alphabet and states".into()));
                    };
                    let parts: Vec<&str> = value.split_whitespace().collect();
                    let [from, symbol, to] = parts[..] else {
                        return Err(err(format!(
                            "expected `trans: <from> <symbol> <to>`, found {value:?}"
                        )));
                    };
                    let (from, to) = (number(from)?, number(to)?);
                    let mut chars = symbol.chars();
                    let (Some(c), None) = (chars.next(), chars.next()) else {
                        return Err(err(format!("symbol {symbol:?} is not a single character")));
                    };
                    let i = sigma
                        .index_of(c)
                        .ok_or_else(|| err(format!("symbol {c:?} is not in the alphabet")))?;
                    if from >= n || to >= n {
                        return Err(err(format!("state out of range (states: {n})")));
                    }
                    if table.insert((from, i), to).is_some() {
                        return Err(err(format!("duplicate transition for state {from} on {c:?}")));
                    }
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }

        let end = text.lines().count().max(1);
        let missing = |what: &str| Error::DfaFormat {
            line: end,
            message: format!("missing {what} line"),
        };
        let alphabet = alphabet.ok_or_else(|| missing("alphabet"))?;
        let n = states.ok_or_else(|| missing("states"))?;
        let initial = initial.ok_or_else(|| missing("initial"))?;
        let finals = finals.ok_or_else(|| missing("final"))?;
        let mut delta = vec![Vec::with_capacity(alphabet.len()); n];
        for (s, row) in delta.iter_mut().enumerate() {
            for i in 0..alphabet.len() {
                let to = table.get(&(s, i)).ok_or_else(|| Error::DfaFormat {
                    line: end,
                    message: format!("no transition for state {s} on {:?}", alphabet.symbol(i)),
                })?;
                row.push(*to);
            }
        }
        Dfa::new(alphabet, initial, &finals, delta)
    }

    /// Graphviz rendering: final states are double circles and the initial
    /// state is entered by an arrow from a point node labelled "start".
    /// Parallel edges are merged into one comma-separated label.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph dfa {\n");
        out.push_str("    rankdir=LR;\n");
        out.push_str("    start [shape=point, xlabel=\"start\"];\n");
        for s in 0..self.state_count() {
            let shape = if self.is_final(s) {
                "doublecircle"
            } else {
                "circle"
            };
            writeln!(out, "    S{s} [shape={shape}];").unwrap();
        }
        writeln!(out, "    start -> S{};", self.initial()).unwrap();
        for s in 0..self.state_count() {
            let mut targets: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for (i, c) in self.alphabet().symbols().iter().enumerate() {
                targets.entry(self.step(s, i)).or_default().push(escape_dot(*c));
            }
            for (t, labels) in targets {
                writeln!(out, "    S{s} -> S{t} [label=\"{}\"];", labels.join(",")).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(c: char) -> String {
    match c {
        '"' | '\\' => format!("\\{c}"),
        c => c.to_string(),
    }
}
