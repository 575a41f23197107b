use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::nfa::{Label, Nfa};

/// A total deterministic finite automaton.
///
/// States are `0..state_count`. The transition table is dense: every
/// (state, symbol) pair has a successor, so a word is accepted iff the run
/// from the initial state ends in a final state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    finals: Vec<bool>,
    // Row-major: delta[state * |Σ| + symbol index].
    delta: Vec<usize>,
}

/// Outcome of a language-equality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// Shortest (then alphabet-least) word accepted by exactly one side.
    Counterexample(Word),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }

    pub fn witness(&self) -> Option<&Word> {
        match self {
            Equivalence::Equivalent => None,
            Equivalence::Counterexample(w) => Some(w),
        }
    }
}

impl Dfa {
    /// Builds a DFA from a dense transition table, `delta[s][i]` being the
    /// successor of state `s` on the `i`-th symbol of `alphabet`.
    pub fn new(alphabet: Alphabet, initial: usize, finals: &[usize], delta: Vec<Vec<usize>>) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::MalformedAutomaton("a DFA needs at least one state".into()));
        }
        if initial >= n {
            return Err(Error::InvalidState {
                state: initial,
                count: n,
            });
        }
        let mut final_flags = vec![false; n];
        for &f in finals {
            if f >= n {
                return Err(Error::InvalidState { state: f, count: n });
            }
            final_flags[f] = true;
        }
        let k = alphabet.len();
        let mut flat = Vec::with_capacity(n * k);
        for (s, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::MalformedAutomaton(format!(
                    "state {s} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            for &t in row {
                if t >= n {
                    return Err(Error::InvalidState { state: t, count: n });
                }
            }
            flat.extend_from_slice(row);
        }
        Ok(Dfa {
            alphabet,
            initial,
            finals: final_flags,
            delta: flat,
        })
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        initial: usize,
        finals: Vec<bool>,
        delta: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(finals.len() * alphabet.len(), delta.len());
        debug_assert!(delta.iter().all(|&t| t < finals.len()));
        Dfa {
            alphabet,
            initial,
            finals,
            delta,
        }
    }

    /// The DFA accepting every word (`accept = true`) or none.
    pub fn trivial(alphabet: Alphabet, accept: bool) -> Self {
        let k = alphabet.len();
        Dfa {
            alphabet,
            initial: 0,
            finals: vec![accept],
            delta: vec![0; k],
        }
    }

    /// Subset construction.
    ///
    /// Only subsets reachable from the ε-closure of the initial state are
    /// created. NFA states that cannot reach a final state are dropped from
    /// every subset, so the empty subset doubles as the dead sink. Labels
    /// outside `alphabet` are ignored.
    pub fn from_nfa(nfa: &Nfa, alphabet: &Alphabet) -> Dfa {
        let adj = nfa.adjacency();
        let live = nfa.live_states();
        let closure = |seed: Vec<usize>| -> Vec<usize> {
            let mut seen = vec![false; nfa.state_count()];
            let mut stack = Vec::new();
            for s in seed {
                if !seen[s] {
                    seen[s] = true;
                    stack.push(s);
                }
            }
            while let Some(s) = stack.pop() {
                for &(label, t) in &adj[s] {
                    if label == Label::Epsilon && !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
            (0..nfa.state_count()).filter(|&s| seen[s] && live[s]).collect()
        };

        let k = alphabet.len();
        let start = closure(vec![nfa.initial()]);
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut delta = Vec::new();
        let mut next = 0;
        while next < subsets.len() {
            let current = subsets[next].clone();
            next += 1;
            for i in 0..k {
                let c = alphabet.symbol(i);
                let moved: Vec<usize> = current
                    .iter()
                    .flat_map(|&s| adj[s].iter())
                    .filter(|(label, _)| *label == Label::Symbol(c))
                    .map(|&(_, t)| t)
                    .collect();
                let target = closure(moved);
                let id = match ids.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        ids.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                delta.push(id);
            }
        }
        let finals = subsets
            .iter()
            .map(|set| set.iter().any(|s| nfa.finals().contains(s)))
            .collect();
        Dfa {
            alphabet: alphabet.clone(),
            initial: 0,
            finals,
            delta,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&s| self.finals[s]).collect()
    }

    /// Successor of `state` on the symbol with alphabet index `symbol`.
    #[inline]
    pub fn step(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.alphabet.len() + symbol]
    }

    /// Successor of `state` on character `c`.
    pub fn next_state(&self, state: usize, c: char) -> Result<usize> {
        self.check_state(state)?;
        let i = self.alphabet.index_of(c).ok_or(Error::SymbolNotInAlphabet(c))?;
        Ok(self.step(state, i))
    }

    pub(crate) fn check_state(&self, state: usize) -> Result<()> {
        if state < self.state_count() {
            Ok(())
        } else {
            Err(Error::InvalidState {
                state,
                count: self.state_count(),
            })
        }
    }

    /// The state reached from `state` after reading `w`.
    pub fn run_from(&self, state: usize, w: &Word) -> Result<usize> {
        self.check_state(state)?;
        w.chars().iter().try_fold(state, |s, &c| {
            let i = self.alphabet.index_of(c).ok_or(Error::SymbolNotInAlphabet(c))?;
            Ok(self.step(s, i))
        })
    }

    /// Membership test: one transition per character.
    pub fn run(&self, w: &Word) -> Result<bool> {
        Ok(self.finals[self.run_from(self.initial, w)?])
    }

    /// Synchronous product over reachable state pairs. A pair is final iff
    /// `combine(final in self, final in other)`.
    pub fn product(&self, other: &Dfa, combine: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        let k = self.alphabet.len();
        let start = (self.initial, other.initial);
        let mut ids = HashMap::from([(start, 0usize)]);
        let mut pairs = vec![start];
        let mut delta = Vec::new();
        let mut next = 0;
        while next < pairs.len() {
            let (p, q) = pairs[next];
            next += 1;
            for i in 0..k {
                let target = (self.step(p, i), other.step(q, i));
                let id = *ids.entry(target).or_insert_with(|| {
                    pairs.push(target);
                    pairs.len() - 1
                });
                delta.push(id);
            }
        }
        let finals = pairs
            .iter()
            .map(|&(p, q)| combine(self.finals[p], other.finals[q]))
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        })
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x || y)
    }

    pub fn intersection(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x && y)
    }

    /// Words accepted by `self` but not by `other`.
    pub fn difference(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x && !y)
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            finals: self.finals.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }

    /// Breadth-first discovery order from the initial state, with edges
    /// explored in alphabet order. Each reached state is paired with the
    /// shortlex-least word leading to it.
    pub(crate) fn bfs_words(&self) -> Vec<(usize, Word)> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![(self.initial, Word::epsilon())];
        seen[self.initial] = true;
        let mut next = 0;
        while next < order.len() {
            let (s, w) = order[next].clone();
            next += 1;
            for i in 0..self.alphabet.len() {
                let t = self.step(s, i);
                if !seen[t] {
                    seen[t] = true;
                    order.push((t, w.pushed(self.alphabet.symbol(i))));
                }
            }
        }
        order
    }

    /// Shortest accepted word, ties broken by alphabet order; `None` iff
    /// the language is empty.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let mut queue = VecDeque::from([self.initial]);
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.state_count()];
        let mut seen = vec![false; self.state_count()];
        seen[self.initial] = true;
        while let Some(s) = queue.pop_front() {
            if self.finals[s] {
                let mut chars = Vec::new();
                let mut cur = s;
                while let Some((prev, i)) = parent[cur] {
                    chars.push(self.alphabet.symbol(i));
                    cur = prev;
                }
                chars.reverse();
                return Some(Word::new(chars));
            }
            for i in 0..self.alphabet.len() {
                let t = self.step(s, i);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, i));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// Decides `L(self) = L(other)` via emptiness of both differences.
    pub fn equivalent(&self, other: &Dfa) -> Result<Equivalence> {
        let left = self.difference(other)?.shortest_accepted();
        let right = other.difference(self)?.shortest_accepted();
        let witness = match (left, right) {
            (None, None) => return Ok(Equivalence::Equivalent),
            (Some(w), None) | (None, Some(w)) => w,
            (Some(u), Some(v)) => match self.alphabet.shortlex_cmp(&u, &v) {
                Ordering::Greater => v,
                _ => u,
            },
        };
        Ok(Equivalence::Counterexample(witness))
    }

    /// A copy restricted to states reachable from the initial state,
    /// renumbered in breadth-first order.
    pub fn trim(&self) -> Dfa {
        let order = self.bfs_words();
        self.renumber(order.iter().map(|(s, _)| *s))
    }

    /// Keeps only the listed states (which must be closed under transitions)
    /// and renumbers them by their position in `order`.
    pub(crate) fn renumber(&self, order: impl IntoIterator<Item = usize>) -> Dfa {
        let order: Vec<usize> = order.into_iter().collect();
        let mut new_id = vec![usize::MAX; self.state_count()];
        for (i, &s) in order.iter().enumerate() {
            new_id[s] = i;
        }
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(order.len() * k);
        for &s in &order {
            for i in 0..k {
                delta.push(new_id[self.step(s, i)]);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: new_id[self.initial],
            finals: order.iter().map(|&s| self.finals[s]).collect(),
            delta,
        }
    }
}
