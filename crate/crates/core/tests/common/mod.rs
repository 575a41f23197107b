#![allow(dead_code)]

use kleene::{Alphabet, Dfa, Regex, Word};
use proptest::prelude::*;
use rand::Rng;

/// Random regex with at most `budget` AST nodes over `symbols`.
pub fn random_regex<R: Rng>(rng: &mut R, symbols: &[char], budget: usize) -> Regex {
    if budget <= 1 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.1) {
            Regex::Empty
        } else {
            Regex::Symbol(symbols[rng.gen_range(0..symbols.len())])
        };
    }
    if budget == 2 || rng.gen_bool(0.25) {
        return Regex::star(random_regex(rng, symbols, budget - 1));
    }
    let left_budget = rng.gen_range(1..budget - 1);
    let left = random_regex(rng, symbols, left_budget);
    let right = random_regex(rng, symbols, budget - 1 - left_budget);
    if rng.gen_bool(0.5) {
        Regex::union(left, right)
    } else {
        Regex::concat(left, right)
    }
}

pub fn alphabet_of_size(k: usize) -> Alphabet {
    Alphabet::new(&"abc"[..k]).unwrap()
}

pub fn regex_strategy(symbols: Vec<char>) -> impl Strategy<Value = Regex> {
    let leaf = prop_oneof![
        1 => Just(Regex::Empty),
        6 => proptest::sample::select(symbols).prop_map(Regex::Symbol),
    ];
    leaf.prop_recursive(4, 10, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::union(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::concat(l, r)),
            inner.prop_map(Regex::star),
        ]
    })
}

/// Random total DFA with 1..=max_states states over an alphabet of 1..=3 symbols.
pub fn dfa_strategy(max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states, 1..=3usize).prop_flat_map(|(n, k)| {
        (
            proptest::collection::vec(proptest::collection::vec(0..n, k), n),
            proptest::collection::vec(any::<bool>(), n),
            0..n,
        )
            .prop_map(move |(delta, finals, initial)| {
                let finals: Vec<usize> = (0..n).filter(|&s| finals[s]).collect();
                Dfa::new(alphabet_of_size(k), initial, &finals, delta).unwrap()
            })
    })
}

/// Two random DFAs over the same alphabet.
pub fn dfa_pair_strategy(max_states: usize) -> impl Strategy<Value = (Dfa, Dfa)> {
    (1..=3usize).prop_flat_map(move |k| {
        let one = move || {
            (1..=max_states).prop_flat_map(move |n| {
                (
                    proptest::collection::vec(proptest::collection::vec(0..n, k), n),
                    proptest::collection::vec(any::<bool>(), n),
                )
                    .prop_map(move |(delta, finals)| {
                        let finals: Vec<usize> = (0..n).filter(|&s| finals[s]).collect();
                        Dfa::new(alphabet_of_size(k), 0, &finals, delta).unwrap()
                    })
            })
        };
        (one(), one())
    })
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| alphabet.symbol(rng.gen_range(0..alphabet.len())))
        .collect()
}

/// Independent count of a's minus b's.
pub fn balance(w: &Word) -> i64 {
    w.count('a') as i64 - w.count('b') as i64
}
