//! Finite evidence about regularity.
//!
//! Distinct rows of an observation table are pairwise Nerode-inequivalent
//! prefixes, so their number is a lower bound on the Myhill–Nerode index.
//! A class count that keeps climbing as the table grows is evidence of an
//! infinite index, i.e. of non-regularity; a count that settles suggests
//! the language is regular with that many classes. Neither is a proof.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::zoo::{self, LanguageOracle, PrimeSet};

/// Longest exhaustive word length used by [`class_count_series`].
pub const MAX_EXHAUSTIVE_LEN: usize = 7;

/// Cap on the exhaustive part of the prefix set: the number of binary words
/// of length at most [`MAX_EXHAUSTIVE_LEN`].
pub const EXHAUSTIVE_WORD_BUDGET: usize = 255;

/// Horizons used when none are given.
pub const DEFAULT_HORIZONS: [usize; 4] = [16, 32, 64, 128];

/// `entries[i][j]` is the membership of `prefixes[i] · extensions[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservationTable {
    prefixes: Vec<Word>,
    extensions: Vec<Word>,
    entries: Vec<Vec<bool>>,
}

impl ObservationTable {
    /// Fills the table by querying `oracle`. Rows are computed in parallel;
    /// the result is identical to a sequential fill.
    pub fn build(oracle: &LanguageOracle, prefixes: Vec<Word>, extensions: Vec<Word>) -> Result<Self> {
        for w in prefixes.iter().chain(&extensions) {
            oracle.alphabet().check_word(w)?;
        }
        let entries = match oracle.dfa() {
            // For an automaton, a cell only depends on the state reached by
            // the prefix, so tabulate each extension's outcome per state.
            Some(dfa) => {
                let outcome: Vec<Vec<bool>> = extensions
                    .par_iter()
                    .map(|z| {
                        (0..dfa.state_count())
                            .map(|s| dfa.is_final(dfa.run_from(s, z).expect("checked above")))
                            .collect()
                    })
                    .collect();
                prefixes
                    .par_iter()
                    .map(|p| {
                        let s = dfa.run_from(dfa.initial(), p).expect("checked above");
                        outcome.iter().map(|per_state| per_state[s]).collect()
                    })
                    .collect()
            }
            None => prefixes
                .par_iter()
                .map(|p| extensions.iter().map(|z| oracle.accepts(&p.concat(z))).collect())
                .collect(),
        };
        Ok(ObservationTable {
            prefixes,
            extensions,
            entries,
        })
    }

    pub fn prefixes(&self) -> &[Word] {
        &self.prefixes
    }

    pub fn extensions(&self) -> &[Word] {
        &self.extensions
    }

    pub fn entries(&self) -> &[Vec<bool>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.entries[i]
    }

    /// Number of distinct rows: a lower bound on the Myhill–Nerode index.
    pub fn distinct_rows(&self) -> usize {
        self.entries.iter().collect::<HashSet<_>>().len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stabilized(usize),
    Growing,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Stabilized(c) => write!(f, "stabilized({c})"),
            Verdict::Growing => write!(f, "growing"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceReport {
    pub oracle: String,
    pub horizons: Vec<usize>,
    pub class_counts: Vec<usize>,
    pub verdict: Verdict,
}

impl EvidenceReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "oracle: {}", self.oracle).unwrap();
        writeln!(out, "horizon  classes").unwrap();
        for (h, c) in self.horizons.iter().zip(&self.class_counts) {
            writeln!(out, "{h:>7}  {c:>7}").unwrap();
        }
        writeln!(out, "verdict: {}", self.verdict).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("horizon,class_count\n");
        for (h, c) in self.horizons.iter().zip(&self.class_counts) {
            writeln!(out, "{h},{c}").unwrap();
        }
        out
    }
}

/// The prefix (and extension) set probed at `horizon`.
///
/// Over a one-letter alphabet this is every word of length at most
/// `horizon`. Otherwise it is every word up to a bounded length (at most
/// [`MAX_EXHAUSTIVE_LEN`], and shorter for large alphabets so the count
/// stays within [`EXHAUSTIVE_WORD_BUDGET`]) followed by the single-letter
/// powers `σ^i` for every symbol and `i <= horizon`. Sets for increasing
/// horizons are nested.
pub fn probe_words(alphabet: &Alphabet, horizon: usize) -> Vec<Word> {
    if alphabet.len() == 1 {
        return (0..=horizon)
            .map(|i| Word::power(alphabet.symbol(0), i))
            .collect();
    }
    let mut exhaustive_len = 0;
    let mut total = 1;
    let mut layer = 1;
    while exhaustive_len < MAX_EXHAUSTIVE_LEN.min(horizon) {
        layer *= alphabet.len();
        if total + layer > EXHAUSTIVE_WORD_BUDGET {
            break;
        }
        total += layer;
        exhaustive_len += 1;
    }
    let mut words = alphabet.words_up_to(exhaustive_len);
    for &c in alphabet.symbols() {
        words.extend((exhaustive_len + 1..=horizon).map(|i| Word::power(c, i)));
    }
    words
}

/// Distinct-row counts of the observation table with prefixes and
/// extensions both equal to [`probe_words`] at each horizon.
///
/// The verdict looks at the last three horizons: equal counts give
/// `Stabilized`, strictly increasing counts give `Growing`, anything else
/// (including fewer than three horizons) is `Inconclusive`.
pub fn class_count_series(oracle: &LanguageOracle, horizons: &[usize]) -> Result<EvidenceReport> {
    if horizons.is_empty() {
        return Err(Error::InvalidArgument("no horizons given".into()));
    }
    if horizons.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "horizons must be strictly increasing".into(),
        ));
    }
    let class_counts = horizons
        .iter()
        .map(|&h| {
            let words = probe_words(oracle.alphabet(), h);
            ObservationTable::build(oracle, words.clone(), words).map(|t| t.distinct_rows())
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = match class_counts[..] {
        [.., x, y, z] if x == y && y == z => Verdict::Stabilized(z),
        [.., x, y, z] if x < y && y < z => Verdict::Growing,
        _ => Verdict::Inconclusive,
    };
    Ok(EvidenceReport {
        oracle: oracle.name().to_string(),
        horizons: horizons.to_vec(),
        class_counts,
        verdict,
    })
}

/// Searches for an eventual period of the lengths accepted by `oracle`,
/// probing powers of the alphabet's first symbol.
///
/// Returns the lexicographically least `(preperiod, period)` with
/// `preperiod <= max_preperiod` and `1 <= period <= max_period` such that
/// `a^i` and `a^(i+period)` agree for every `preperiod <= i <= horizon - period`.
pub fn unary_periodicity_check(
    oracle: &LanguageOracle,
    max_preperiod: usize,
    max_period: usize,
    horizon: usize,
) -> Result<Option<(usize, usize)>> {
    if max_period == 0 {
        return Err(Error::InvalidArgument("max_period must be at least 1".into()));
    }
    if horizon < max_preperiod + 2 * max_period {
        return Err(Error::InvalidArgument(format!(
            "horizon {horizon} is below max_preperiod + 2 * max_period = {}",
            max_preperiod + 2 * max_period
        )));
    }
    let a = oracle.alphabet().symbol(0);
    let member: Vec<bool> = (0..=horizon)
        .map(|i| oracle.accepts(&Word::power(a, i)))
        .collect();
    for preperiod in 0..=max_preperiod {
        for period in 1..=max_period {
            if (preperiod..=horizon - period).all(|i| member[i] == member[i + period]) {
                return Ok(Some((preperiod, period)));
            }
        }
    }
    Ok(None)
}

/// State counts of the minimal DFAs for the unions of `L_p` over the first
/// `j` primes, for `j = 1..=k`.
pub fn primes_demo(k: usize) -> Result<Vec<(PrimeSet, usize)>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    (1..=k)
        .map(|j| {
            let set = PrimeSet::first(j);
            let states = zoo::prime_union_dfa(&set)?.mn_index();
            Ok((set, states))
        })
        .collect()
}

/// Renders the primes table together with the balance-language evidence.
pub fn primes_report(rows: &[(PrimeSet, usize)], xi_evidence: &EvidenceReport) -> String {
    let mut out = String::new();
    writeln!(out, "{:<4} {:<24} {:>8}", "k", "primes", "states").unwrap();
    for (j, (set, states)) in rows.iter().enumerate() {
        writeln!(out, "{:<4} {:<24} {:>8}", j + 1, set.to_string(), states).unwrap();
    }
    let increasing = rows.windows(2).all(|w| w[0].1 < w[1].1);
    writeln!(
        out,
        "strictly increasing: {}",
        if increasing { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(out).unwrap();
    out.push_str(&xi_evidence.to_text());
    writeln!(out).unwrap();
    let last = rows.last().map_or(0, |(_, s)| *s);
    writeln!(
        out,
        "Each L_p is regular, and a finite union of regular languages is regular: the union over the first {} primes needs {} states.",
        rows.len(),
        last
    )
    .unwrap();
    writeln!(
        out,
        "If there were only finitely many primes, the union over all of them would be one such regular language, namely xi(w) != +-1."
    )
    .unwrap();
    writeln!(
        out,
        "But a^(3i) and a^(3j) are separated by b^(3j+1) for all i > j, so that language has infinitely many Myhill-Nerode classes (class counts above: {}).",
        xi_evidence.verdict
    )
    .unwrap();
    writeln!(out, "Hence there are infinitely many primes.").unwrap();
    out
}
