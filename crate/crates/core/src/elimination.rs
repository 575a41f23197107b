//! DFA to regular expression by state elimination.

use crate::dfa::Dfa;
use crate::regex::Regex;

fn alt(a: Regex, b: Regex) -> Regex {
    match (a, b) {
        (Regex::Empty, x) | (x, Regex::Empty) => x,
        (a, b) if a == b => a,
        (a, b) => Regex::union(a, b),
    }
}

fn cat(a: Regex, b: Regex) -> Regex {
    match (a, b) {
        (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
        (a, b) if a.is_epsilon() => b,
        (a, b) if b.is_epsilon() => a,
        (a, b) => Regex::concat(a, b),
    }
}

fn star(a: Regex) -> Regex {
    match a {
        Regex::Empty => Regex::epsilon(),
        a if a.is_epsilon() => a,
        a @ Regex::Star(_) => a,
        a => Regex::star(a),
    }
}

impl Dfa {
    /// A regular expression for the language of this automaton.
    ///
    /// The automaton is wrapped with a fresh source and sink joined by
    /// ε-edges, then its states are eliminated from the highest id down,
    /// so the output is reproducible. States that are unreachable or cannot
    /// reach a final state are discarded first.
    pub fn to_regex(&self) -> Regex {
        let n = self.state_count();
        let reachable = {
            let mut seen = vec![false; n];
            for (s, _) in self.bfs_words() {
                seen[s] = true;
            }
            seen
        };
        let productive = {
            let mut reverse = vec![Vec::new(); n];
            for s in 0..n {
                for i in 0..self.alphabet().len() {
                    reverse[self.step(s, i)].push(s);
                }
            }
            let mut live = vec![false; n];
            let mut stack: Vec<usize> = self.finals();
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
        };
        let useful: Vec<bool> = (0..n).map(|s| reachable[s] && productive[s]).collect();
        if !useful[self.initial()] {
            return Regex::Empty;
        }

        let source = n;
        let sink = n + 1;
        let mut edges = vec![vec![Regex::Empty; n + 2]; n + 2];
        edges[source][self.initial()] = Regex::epsilon();
        for s in (0..n).filter(|&s| useful[s]) {
            if self.is_final(s) {
                edges[s][sink] = Regex::epsilon();
            }
            for i in 0..self.alphabet().len() {
                let t = self.step(s, i);
                if useful[t] {
                    let label = std::mem::replace(&mut edges[s][t], Regex::Empty);
                    edges[s][t] = alt(label, Regex::Symbol(self.alphabet().symbol(i)));
                }
            }
        }

        let mut remaining: Vec<usize> = (0..n).filter(|&s| useful[s]).collect();
        remaining.push(source);
        remaining.push(sink);
        for k in (0..n).rev().filter(|&s| useful[s]) {
            remaining.retain(|&s| s != k);
            let loop_k = star(edges[k][k].clone());
            let incoming: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&i| edges[i][k] != Regex::Empty)
                .collect();
            let outgoing: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&j| edges[k][j] != Regex::Empty)
                .collect();
            for &i in &incoming {
                let prefix = cat(edges[i][k].clone(), loop_k.clone());
                for &j in &outgoing {
                    let through = cat(prefix.clone(), edges[k][j].clone());
                    let direct = std::mem::replace(&mut edges[i][j], Regex::Empty);
                    edges[i][j] = alt(direct, through);
                }
            }
            for row in edges.iter_mut() {
                row[k] = Regex::Empty;
            }
            edges[k].fill(Regex::Empty);
        }
        edges[source][sink].clone()
    }
}
