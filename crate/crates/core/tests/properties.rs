mod common;

use std::collections::BTreeSet;

use common::{alphabet_of_size, balance, dfa_pair_strategy, dfa_strategy, random_word, regex_strategy};
use kleene::evidence::{class_count_series, probe_words, ObservationTable, Verdict};
use kleene::zoo::{self, divisibility_dfa, prime_union_dfa, xi, LanguageOracle, PrimeSet};
use kleene::{Alphabet, Dfa, Regex, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn accepted_up_to(d: &Dfa, max_len: usize) -> BTreeSet<Word> {
    d.alphabet()
        .words_up_to(max_len)
        .into_iter()
        .filter(|w| d.run(w).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn format_then_parse_is_identity(e in regex_strategy(vec!['a', 'b', 'c'])) {
        let sigma = alphabet_of_size(3);
        prop_assert_eq!(Regex::parse(&e.to_string(), &sigma).unwrap(), e);
    }

    #[test]
    fn union_enumerates_as_set_union(
        l in regex_strategy(vec!['a', 'b']),
        r in regex_strategy(vec!['a', 'b']),
        k in 0..=5usize,
    ) {
        let mut expected = l.enumerate(k);
        expected.extend(r.enumerate(k));
        prop_assert_eq!(Regex::union(l, r).enumerate(k), expected);
    }

    #[test]
    fn star_contains_epsilon(e in regex_strategy(vec!['a', 'b'])) {
        prop_assert!(Regex::star(e).enumerate(0).contains(&Word::epsilon()));
    }

    #[test]
    fn compiled_dfa_matches_enumeration(e in regex_strategy(vec!['a', 'b', 'c'])) {
        let sigma = alphabet_of_size(3);
        let d = e.to_dfa(&sigma);
        prop_assert_eq!(accepted_up_to(&d, 5), e.enumerate(5));
        prop_assert!(e.to_nfa().state_count() <= 2 * e.size());
    }

    #[test]
    fn product_size_and_de_morgan((d1, d2) in dfa_pair_strategy(6)) {
        let u = d1.union(&d2).unwrap();
        prop_assert!(u.state_count() <= d1.state_count() * d2.state_count());
        let lhs = u.complement();
        let rhs = d1.complement().intersection(&d2.complement()).unwrap();
        prop_assert!(lhs.equivalent(&rhs).unwrap().is_equivalent());
    }

    #[test]
    fn equivalence_witness_is_shortest((d1, d2) in dfa_pair_strategy(5)) {
        let brute = d1
            .alphabet()
            .words_up_to(6)
            .into_iter()
            .find(|w| d1.run(w).unwrap() != d2.run(w).unwrap());
        match d1.equivalent(&d2).unwrap().witness() {
            None => prop_assert_eq!(brute, None),
            Some(w) => {
                prop_assert_ne!(d1.run(w).unwrap(), d2.run(w).unwrap());
                if let Some(b) = brute {
                    prop_assert_eq!(w, &b);
                }
            }
        }
    }

    #[test]
    fn minimize_is_idempotent_and_sound(d in dfa_strategy(8)) {
        let m = d.minimize();
        prop_assert_eq!(m.minimize(), m.clone());
        prop_assert!(m.equivalent(&d).unwrap().is_equivalent());
        prop_assert!(m.state_count() <= d.state_count());
    }

    #[test]
    fn minimal_forms_are_canonical(
        e1 in regex_strategy(vec!['a', 'b']),
        e2 in regex_strategy(vec!['a', 'b']),
    ) {
        let sigma = alphabet_of_size(2);
        let (d1, d2) = (e1.to_dfa(&sigma), e2.to_dfa(&sigma));
        let same_language = d1.equivalent(&d2).unwrap().is_equivalent();
        prop_assert_eq!(same_language, d1.minimize() == d2.minimize());
    }

    #[test]
    fn index_equals_distinct_table_rows(d in dfa_strategy(8)) {
        // Rows of reachable states against every word up to length n.
        let m = d.minimize();
        let n = m.state_count();
        let extensions = m.alphabet().words_up_to(n);
        let rows: BTreeSet<Vec<bool>> = (0..n)
            .map(|s| {
                extensions
                    .iter()
                    .map(|z| m.is_final(m.run_from(s, z).unwrap()))
                    .collect()
            })
            .collect();
        prop_assert_eq!(d.mn_index(), rows.len());
    }

    #[test]
    fn distinguishers_are_sound_and_shortest(d in dfa_strategy(6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = d.alphabet().clone();
        let candidates = sigma.words_up_to(6);
        for _ in 0..5 {
            let x = random_word(&mut rng, &sigma, 6);
            let y = random_word(&mut rng, &sigma, 6);
            let brute = candidates
                .iter()
                .find(|z| d.run(&x.concat(z)).unwrap() != d.run(&y.concat(z)).unwrap());
            match d.distinguishing_extension(&x, &y).unwrap() {
                Some(z) => {
                    prop_assert_ne!(d.run(&x.concat(&z)).unwrap(), d.run(&y.concat(&z)).unwrap());
                    prop_assert_eq!(Some(&z), brute);
                }
                None => {
                    prop_assert_eq!(brute, None);
                    for _ in 0..50 {
                        let z = random_word(&mut rng, &sigma, 12);
                        prop_assert_eq!(d.run(&x.concat(&z)).unwrap(), d.run(&y.concat(&z)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dfa_text_round_trip(d in dfa_strategy(6)) {
        prop_assert_eq!(Dfa::from_text(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn xi_is_additive(u in "[ab]{0,20}", v in "[ab]{0,20}") {
        let (u, v) = (Word::from(u.as_str()), Word::from(v.as_str()));
        prop_assert_eq!(xi(&u.concat(&v)).unwrap(), xi(&u).unwrap() + xi(&v).unwrap());
        prop_assert_eq!(xi(&u).unwrap(), balance(&u));
    }

    #[test]
    fn divisibility_dfa_on_long_words(n in 1..=12usize, w in "[ab]{9,60}") {
        let w = Word::from(w.as_str());
        let d = divisibility_dfa(n).unwrap();
        prop_assert_eq!(d.run(&w).unwrap(), balance(&w).rem_euclid(n as i64) == 0);
    }
}

#[test]
fn precedence_example() {
    let sigma = alphabet_of_size(3);
    assert_eq!(
        Regex::parse("a+b.c*", &sigma).unwrap(),
        Regex::parse("a+(b.(c*))", &sigma).unwrap()
    );
}

#[test]
fn divisibility_dfa_on_short_words() {
    let words = zoo::binary_alphabet().words_up_to(8);
    for n in 1..=12usize {
        let d = divisibility_dfa(n).unwrap();
        for w in &words {
            assert_eq!(
                d.run(w).unwrap(),
                balance(w).rem_euclid(n as i64) == 0,
                "n={n} w={w}"
            );
        }
    }
}

#[test]
fn finite_prime_union_is_xi_not_unit_on_short_words() {
    // Every nonzero balance of a word of length <= 12 has absolute value
    // <= 12, so primes up to 12 decide membership in the full union.
    let d = prime_union_dfa(&PrimeSet::up_to(12)).unwrap();
    for w in zoo::binary_alphabet().words_up_to(12) {
        assert_eq!(d.run(&w).unwrap(), balance(&w).abs() != 1, "{w}");
    }
}

#[test]
fn prime_union_is_or_of_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for set in [
        PrimeSet::new([2, 3]).unwrap(),
        PrimeSet::new([3, 5, 7]).unwrap(),
        PrimeSet::first(4),
    ] {
        let union = prime_union_dfa(&set).unwrap();
        let parts: Vec<Dfa> = set
            .primes()
            .iter()
            .map(|&p| divisibility_dfa(p as usize).unwrap())
            .collect();
        for _ in 0..500 {
            let w = random_word(&mut rng, union.alphabet(), 40);
            let expected = parts.iter().any(|d| d.run(&w).unwrap());
            assert_eq!(union.run(&w).unwrap(), expected, "{set} {w}");
        }
    }
}

#[test]
fn example_languages_match_predicates() {
    let abc = alphabet_of_size(3);
    let every_a_has_b_after = |w: &Word| {
        let chars = w.chars();
        chars
            .iter()
            .enumerate()
            .all(|(i, &c)| c != 'a' || chars[i + 1..].contains(&'b'))
    };
    let ex1 = zoo::example1_dfa();
    let ex2 = zoo::example2_dfa();
    let fig1 = zoo::figure_one_dfa();
    for w in abc.words_up_to(6) {
        assert_eq!(ex1.run(&w).unwrap(), w.count('a') > 0, "{w}");
        assert_eq!(ex2.run(&w).unwrap(), every_a_has_b_after(&w), "{w}");
        assert_eq!(fig1.run(&w).unwrap(), every_a_has_b_after(&w), "{w}");
    }
}

#[test]
fn dfa_backed_oracles_agree_with_run() {
    for o in zoo::zoo_oracles() {
        if let Some(d) = o.dfa() {
            for w in o.alphabet().words_up_to(5) {
                assert_eq!(o.accepts(&w), d.run(&w).unwrap(), "{} {w}", o.name());
            }
        }
    }
}

#[test]
fn observation_tables_lower_bound_the_index() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for o in zoo::zoo_oracles().into_iter().filter(|o| o.dfa().is_some()) {
        let index = o.dfa().unwrap().mn_index();
        for _ in 0..5 {
            let prefixes: Vec<Word> = (0..30).map(|_| random_word(&mut rng, o.alphabet(), 8)).collect();
            let extensions: Vec<Word> = (0..30).map(|_| random_word(&mut rng, o.alphabet(), 8)).collect();
            let t = ObservationTable::build(&o, prefixes, extensions).unwrap();
            assert!(t.distinct_rows() <= index, "{}", o.name());
        }
    }
    for n in 1..=8 {
        let o = LanguageOracle::from_dfa(format!("Ln:{n}"), divisibility_dfa(n).unwrap());
        let words = probe_words(o.alphabet(), n);
        let t = ObservationTable::build(&o, words.clone(), words).unwrap();
        assert_eq!(t.distinct_rows(), n);
    }
}

#[test]
fn class_counts_never_decrease() {
    for o in [
        zoo::pow2(),
        zoo::fib(),
        zoo::xi_ne_pm1(),
        zoo::oracle("ex2").unwrap(),
    ] {
        let report = class_count_series(&o, &[2, 4, 8, 16, 32]).unwrap();
        assert!(report.class_counts.windows(2).all(|w| w[0] <= w[1]), "{report:?}");
    }
}

#[test]
fn unary_counts_grow_when_horizon_doubles() {
    for o in [zoo::pow2(), zoo::fib()] {
        for h in [16, 32, 64] {
            let r = class_count_series(&o, &[h, 2 * h]).unwrap();
            assert!(
                r.class_counts[1] > r.class_counts[0],
                "{} {h}: {:?}",
                o.name(),
                r.class_counts
            );
        }
    }
}

#[test]
fn regular_zoo_series_stabilize_at_index() {
    for o in zoo::zoo_oracles().into_iter().filter(|o| o.dfa().is_some()) {
        let index = o.dfa().unwrap().mn_index();
        let r = class_count_series(&o, &[8, 16, 32]).unwrap();
        assert_eq!(r.verdict, Verdict::Stabilized(index), "{}", o.name());
    }
}

#[test]
fn random_distinguisher_probes_on_unary_cycle() {
    let sigma = Alphabet::new("a").unwrap();
    let d = Dfa::new(sigma.clone(), 0, &[2], vec![vec![1], vec![2], vec![3], vec![0]]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let (i, j) = (rng.gen_range(0..20), rng.gen_range(0..20));
        let z = d
            .distinguishing_extension(&Word::power('a', i), &Word::power('a', j))
            .unwrap();
        assert_eq!(z.is_none(), i % 4 == j % 4);
    }
}
