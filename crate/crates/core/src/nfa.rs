use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::regex::Regex;

/// Transition label: a symbol or an ε-move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Epsilon,
    Symbol(char),
}

/// A nondeterministic automaton with ε-moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    initial: usize,
    finals: BTreeSet<usize>,
    transitions: Vec<(usize, Label, usize)>,
}

impl Nfa {
    pub fn new(
        state_count: usize,
        initial: usize,
        finals: BTreeSet<usize>,
        transitions: Vec<(usize, Label, usize)>,
    ) -> Result<Self> {
        let check = |s: usize| {
            if s < state_count {
                Ok(())
            } else {
                Err(Error::InvalidState {
                    state: s,
                    count: state_count,
                })
            }
        };
        check(initial)?;
        finals.iter().try_for_each(|&s| check(s))?;
        for &(from, _, to) in &transitions {
            check(from)?;
            check(to)?;
        }
        Ok(Nfa {
            state_count,
            initial,
            finals,
            transitions,
        })
    }

    /// Thompson's construction. The result has exactly one final state, no
    /// transition leaves it, and it has at most two states per AST node.
    pub fn thompson(e: &Regex) -> Nfa {
        let mut builder = Builder::default();
        let (start, end) = builder.build(e);
        Nfa {
            state_count: builder.state_count,
            initial: start,
            finals: BTreeSet::from([end]),
            transitions: builder.transitions,
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn transitions(&self) -> &[(usize, Label, usize)] {
        &self.transitions
    }

    /// Outgoing adjacency lists, indexed by source state.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(Label, usize)>> {
        let mut adj = vec![Vec::new(); self.state_count];
        for &(from, label, to) in &self.transitions {
            adj[from].push((label, to));
        }
        adj
    }

    /// States from which some final state is reachable.
    pub(crate) fn live_states(&self) -> Vec<bool> {
        let mut reverse = vec![Vec::new(); self.state_count];
        for &(from, _, to) in &self.transitions {
            reverse[to].push(from);
        }
        let mut live = vec![false; self.state_count];
        let mut stack: Vec<usize> = self.finals.iter().copied().collect();
        for &f in &stack {
            live[f] = true;
        }
        while let Some(s) = stack.pop() {
            for &p in &reverse[s] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }
}

#[derive(Default)]
struct Builder {
    state_count: usize,
    transitions: Vec<(usize, Label, usize)>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.state_count += 1;
        self.state_count - 1
    }

    fn edge(&mut self, from: usize, label: Label, to: usize) {
        self.transitions.push((from, label, to));
    }

    fn build(&mut self, e: &Regex) -> (usize, usize) {
        match e {
            Regex::Empty => (self.fresh(), self.fresh()),
            Regex::Symbol(c) => {
                let (s, t) = (self.fresh(), self.fresh());
                self.edge(s, Label::Symbol(*c), t);
                (s, t)
            }
            Regex::Union(l, r) => {
                let s = self.fresh();
                let (ls, le) = self.build(l);
                let (rs, re) = self.build(r);
                let t = self.fresh();
                self.edge(s, Label::Epsilon, ls);
                self.edge(s, Label::Epsilon, rs);
                self.edge(le, Label::Epsilon, t);
                self.edge(re, Label::Epsilon, t);
                (s, t)
            }
            Regex::Concat(l, r) => {
                let (ls, le) = self.build(l);
                let (rs, re) = self.build(r);
                self.edge(le, Label::Epsilon, rs);
                (ls, re)
            }
            Regex::Star(inner) => {
                let s = self.fresh();
                let (is, ie) = self.build(inner);
                let t = self.fresh();
                self.edge(s, Label::Epsilon, is);
                self.edge(s, Label::Epsilon, t);
                self.edge(ie, Label::Epsilon, is);
                self.edge(ie, Label::Epsilon, t);
                (s, t)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn parse(s: &str) -> Regex {
        Regex::parse(s, &Alphabet::new("abc").unwrap()).unwrap()
    }

    fn assert_thompson_shape(n: &Nfa) {
        assert_eq!(n.finals().len(), 1);
        let f = *n.finals().iter().next().unwrap();
        assert!(n.transitions().iter().all(|&(from, _, _)| from != f));
    }

    #[test]
    fn base_cases() {
        let a = Nfa::thompson(&Regex::Symbol('a'));
        assert_eq!(a.state_count(), 2);
        assert_eq!(a.transitions(), &[(0, Label::Symbol('a'), 1)]);
        let empty = Nfa::thompson(&Regex::Empty);
        assert_eq!(empty.state_count(), 2);
        assert!(empty.transitions().is_empty());
    }

    #[test]
    fn composite_state_counts() {
        let (l, r) = (parse("a.b"), parse("c*"));
        let nl = Nfa::thompson(&l).state_count();
        let nr = Nfa::thompson(&r).state_count();
        let u = Nfa::thompson(&Regex::union(l.clone(), r.clone()));
        assert_eq!(u.state_count(), nl + nr + 2);
        assert_eq!(Nfa::thompson(&Regex::concat(l, r)).state_count(), nl + nr);
    }

    #[test]
    fn shape_and_size_bound() {
        for s in [
            "a",
            "\\0",
            "\\e",
            "(a+b)*.c",
            "a**",
            "(a+b+c)*.a.(a+b+c)*.b.(b+c)*",
        ] {
            let e = parse(s);
            let n = Nfa::thompson(&e);
            assert_thompson_shape(&n);
            assert!(n.state_count() <= 2 * e.size(), "{s}");
        }
    }

    #[test]
    fn new_validates_ranges() {
        assert!(Nfa::new(2, 0, BTreeSet::from([1]), vec![(0, Label::Epsilon, 1)]).is_ok());
        assert!(Nfa::new(2, 2, BTreeSet::new(), vec![]).is_err());
        assert!(Nfa::new(2, 0, BTreeSet::from([3]), vec![]).is_err());
        assert!(Nfa::new(2, 0, BTreeSet::new(), vec![(0, Label::Symbol('a'), 5)]).is_err());
    }
}
