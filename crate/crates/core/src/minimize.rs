//! Myhill–Nerode minimization and distinguishing extensions.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::Word;
use crate::dfa::Dfa;
use crate::error::Result;

/// Disjoint blocks of states covering every state of an automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    fn from_labels(labels: Vec<usize>) -> Self {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (s, &b) in labels.iter().enumerate() {
            blocks[b].push(s);
        }
        Partition {
            blocks,
            block_of: labels,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, state: usize) -> usize {
        self.block_of[state]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Relabels `keys` densely in order of first occurrence.
fn dense_labels<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids = HashMap::new();
    keys.map(|k| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

impl Dfa {
    /// Moore refinement over all states: start from {final, non-final} and
    /// split blocks by (block, successor blocks) signatures until nothing
    /// changes. Two states end up together iff no word distinguishes them.
    pub fn nerode_partition(&self) -> Partition {
        let k = self.alphabet().len();
        let mut labels = dense_labels((0..self.state_count()).map(|s| self.is_final(s)));
        let mut count = labels.iter().max().map_or(0, |m| m + 1);
        loop {
            let refined = dense_labels((0..self.state_count()).map(|s| {
                let mut signature = Vec::with_capacity(k + 1);
                signature.push(labels[s]);
                signature.extend((0..k).map(|i| labels[self.step(s, i)]));
                signature
            }));
            let refined_count = refined.iter().max().map_or(0, |m| m + 1);
            labels = refined;
            if refined_count == count {
                return Partition::from_labels(labels);
            }
            count = refined_count;
        }
    }

    /// The minimal DFA for the same language.
    ///
    /// Unreachable states are dropped, indistinguishable states merged, and
    /// the result is numbered in breadth-first order from the initial state
    /// with edges taken in alphabet order. Equal languages over the same
    /// alphabet therefore give identical automata.
    pub fn minimize(&self) -> Dfa {
        let trimmed = self.trim();
        let partition = trimmed.nerode_partition();
        let k = trimmed.alphabet().len();
        let mut delta = Vec::with_capacity(partition.len() * k);
        let mut finals = Vec::with_capacity(partition.len());
        for block in partition.blocks() {
            let representative = block[0];
            finals.push(trimmed.is_final(representative));
            delta.extend((0..k).map(|i| partition.block_of(trimmed.step(representative, i))));
        }
        let quotient = Dfa::from_parts(
            trimmed.alphabet().clone(),
            partition.block_of(trimmed.initial()),
            finals,
            delta,
        );
        quotient.trim()
    }

    /// Number of Myhill–Nerode classes of the language, dead class included.
    pub fn mn_index(&self) -> usize {
        self.minimize().state_count()
    }

    /// Shortest-then-alphabet-least representative of every Nerode class,
    /// listed in the state order of [`Dfa::minimize`].
    pub fn class_representatives(&self) -> Vec<Word> {
        self.minimize().bfs_words().into_iter().map(|(_, w)| w).collect()
    }

    /// Shortest word `z` (alphabet-least among equals) such that exactly one
    /// of the runs from `s` and from `t` on `z` ends in a final state, or
    /// `None` if the two states are equivalent.
    pub fn state_distinguisher(&self, s: usize, t: usize) -> Result<Option<Word>> {
        self.check_state(s)?;
        self.check_state(t)?;
        let n = self.state_count();
        let index = |p: usize, q: usize| p * n + q;
        let mut parent: HashMap<usize, (usize, usize)> = HashMap::new();
        let mut seen = vec![false; n * n];
        seen[index(s, t)] = true;
        let mut queue = VecDeque::from([(s, t)]);
        while let Some((p, q)) = queue.pop_front() {
            if self.is_final(p) != self.is_final(q) {
                let mut chars = Vec::new();
                let mut cur = index(p, q);
                while let Some(&(prev, i)) = parent.get(&cur) {
                    chars.push(self.alphabet().symbol(i));
                    cur = prev;
                }
                chars.reverse();
                return Ok(Some(Word::new(chars)));
            }
            for i in 0..self.alphabet().len() {
                let (p2, q2) = (self.step(p, i), self.step(q, i));
                let id = index(p2, q2);
                if !seen[id] {
                    seen[id] = true;
                    parent.insert(id, (index(p, q), i));
                    queue.push_back((p2, q2));
                }
            }
        }
        Ok(None)
    }

    /// Shortest distinguishing extension of the words `x` and `y`; `None`
    /// means they are Nerode-equivalent.
    pub fn distinguishing_extension(&self, x: &Word, y: &Word) -> Result<Option<Word>> {
        let s = self.run_from(self.initial(), x)?;
        let t = self.run_from(self.initial(), y)?;
        self.state_distinguisher(s, t)
    }
}

#[cfg(test)]
mod tests {
    use crate::alphabet::{Alphabet, Word};
    use crate::dfa::Dfa;
    use crate::error::Error;
    use crate::regex::Regex;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    // Residues of (#a - #b) mod 3.
    fn balance_mod3() -> Dfa {
        Dfa::new(ab(), 0, &[0], vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn contains_an_a_has_two_states() {
        let abc = Alphabet::new("abc").unwrap();
        let d = Regex::parse("(a+b+c)*.a.(a+b+c)*", &abc).unwrap().to_dfa(&abc);
        assert_eq!(d.minimize().state_count(), 2);
    }

    #[test]
    fn padded_dfa_minimizes_to_cycle() {
        // States 3 and 4 are unreachable junk; 5 duplicates residue 0.
        let d = Dfa::new(
            ab(),
            0,
            &[0, 3, 5],
            vec![
                vec![1, 2],
                vec![2, 5],
                vec![0, 1],
                vec![4, 4],
                vec![3, 0],
                vec![1, 2],
            ],
        )
        .unwrap();
        assert_eq!(d.mn_index(), 3);
        assert_eq!(d.minimize(), balance_mod3());
    }

    #[test]
    fn length_mod_five_classes() {
        let d = Regex::parse("((a+b).(a+b).(a+b).(a+b).(a+b))*.(a+b).(a+b).(a+b)", &ab())
            .unwrap()
            .to_dfa(&ab());
        assert_eq!(d.mn_index(), 5);
        let reps: Vec<String> = d.class_representatives().iter().map(|w| w.to_string()).collect();
        assert_eq!(reps, ["ε", "a", "aa", "aaa", "aaaa"]);
    }

    #[test]
    fn index_counts_dead_class() {
        let d = Regex::parse("a", &ab()).unwrap().to_dfa(&ab());
        assert_eq!(d.mn_index(), 3);
    }

    #[test]
    fn distinguishers() {
        let d = balance_mod3();
        assert_eq!(d.state_distinguisher(1, 1).unwrap(), None);
        assert_eq!(d.state_distinguisher(0, 1).unwrap(), Some(Word::epsilon()));
        assert_eq!(d.state_distinguisher(1, 2).unwrap(), Some(Word::from("a")));
        assert!(matches!(
            d.state_distinguisher(0, 7),
            Err(Error::InvalidState { state: 7, .. })
        ));
        assert_eq!(
            d.distinguishing_extension(&Word::epsilon(), &Word::from("aaa"))
                .unwrap(),
            None
        );
        assert_eq!(
            d.distinguishing_extension(&Word::from("a"), &Word::from("aa"))
                .unwrap(),
            Some(Word::from("a"))
        );
        assert!(d
            .distinguishing_extension(&Word::from("c"), &Word::from("a"))
            .is_err());
    }

    #[test]
    fn partition_covers_all_states() {
        let d = balance_mod3();
        let p = d.nerode_partition();
        assert_eq!(p.len(), 3);
        let mut all: Vec<usize> = p.blocks().concat();
        all.sort();
        assert_eq!(all, vec![0, 1, 2]);
        for s in 0..3 {
            assert!(p.blocks()[p.block_of(s)].contains(&s));
        }
    }
}
