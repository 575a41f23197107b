//! Concrete languages: regular ones as automata, non-regular ones as
//! membership predicates.
//!
//! Stable oracle names: `pow2`, `fib`, `prime-len`, `xi-ne-pm1`, `ex1`,
//! `ex2`, `ex4`, `fig1`, `Ln:<n>` and `len-mod:<m>:<r>`.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Word};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::regex::Regex;

/// Words over {a, b, c} containing at least one `a`.
pub const EXAMPLE1_REGEX: &str = "(a+b+c)*.a.(a+b+c)*";

/// Words over {a, b, c} in which every `a` has some `b` to its right.
pub const EXAMPLE2_REGEX: &str = "(b+c)* + (a+b+c)*.a.(a+b+c)*.b.(b+c)*";

type Membership = dyn Fn(&Word) -> bool + Send + Sync;

/// A named, total membership predicate over the words of an alphabet.
#[derive(Clone)]
pub struct LanguageOracle {
    name: String,
    alphabet: Alphabet,
    membership: Arc<Membership>,
    dfa: Option<Dfa>,
}

impl LanguageOracle {
    pub fn new(
        name: impl Into<String>,
        alphabet: Alphabet,
        membership: impl Fn(&Word) -> bool + Send + Sync + 'static,
    ) -> Self {
        LanguageOracle {
            name: name.into(),
            alphabet,
            membership: Arc::new(membership),
            dfa: None,
        }
    }

    /// An oracle answering by running `dfa`.
    pub fn from_dfa(name: impl Into<String>, dfa: Dfa) -> Self {
        let runner = dfa.clone();
        LanguageOracle {
            name: name.into(),
            alphabet: dfa.alphabet().clone(),
            membership: Arc::new(move |w| runner.run(w).unwrap_or(false)),
            dfa: Some(dfa),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The backing automaton, for regular languages built from one.
    pub fn dfa(&self) -> Option<&Dfa> {
        self.dfa.as_ref()
    }

    /// Membership of a word already known to be over the oracle's alphabet.
    pub fn accepts(&self, w: &Word) -> bool {
        (self.membership)(w)
    }

    /// Membership with an alphabet check.
    pub fn contains(&self, w: &Word) -> Result<bool> {
        self.alphabet.check_word(w)?;
        Ok(self.accepts(w))
    }
}

impl fmt::Debug for LanguageOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LanguageOracle")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet.to_string())
            .field("dfa_backed", &self.dfa.is_some())
            .finish()
    }
}

/// A set of distinct primes, kept in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut list: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = list.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidArgument(format!("{bad} is not prime")));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("repeated prime".into()));
        }
        Ok(PrimeSet { primes: list })
    }

    /// The first `k` primes.
    pub fn first(k: usize) -> Self {
        PrimeSet {
            primes: (2..).filter(|&n| is_prime(n)).take(k).collect(),
        }
    }

    /// All primes `<= bound`.
    pub fn up_to(bound: u64) -> Self {
        PrimeSet {
            primes: (2..=bound).filter(|&n| is_prime(n)).collect(),
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn product(&self) -> u64 {
        self.primes.iter().product()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_fibonacci(n: usize) -> bool {
    // F(1) = F(2) = 1, so 0 is not included.
    let (mut x, mut y) = (1usize, 1usize);
    while x < n {
        (x, y) = (y, x + y);
    }
    x == n
}

pub fn binary_alphabet() -> Alphabet {
    Alphabet::new("ab").expect("valid alphabet")
}

pub fn unary_alphabet() -> Alphabet {
    Alphabet::new("a").expect("valid alphabet")
}

/// Balance of a word over {a, b}: the number of a's minus the number of b's.
pub fn xi(w: &Word) -> Result<i64> {
    w.chars().iter().try_fold(0i64, |acc, &c| match c {
        'a' => Ok(acc + 1),
        'b' => Ok(acc - 1),
        other => Err(Error::SymbolNotInAlphabet(other)),
    })
}

/// The cyclic `n`-state DFA over {a, b} accepting words whose balance is
/// divisible by `n`: states are residues, `a` adds one, `b` subtracts one.
pub fn divisibility_dfa(n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let delta = (0..n).map(|r| vec![(r + 1) % n, (r + n - 1) % n]).collect();
    Dfa::new(binary_alphabet(), 0, &[0], delta)
}

/// Minimal DFA for the words whose balance is divisible by some prime of `set`.
pub fn prime_union_dfa(set: &PrimeSet) -> Result<Dfa> {
    let (&first, rest) = set
        .primes()
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("prime set is empty".into()))?;
    let mut acc = divisibility_dfa(first as usize)?;
    for &p in rest {
        acc = acc.union(&divisibility_dfa(p as usize)?)?.minimize();
    }
    Ok(acc.minimize())
}

/// Words whose length is congruent to `residue` modulo `modulus`.
pub fn length_mod_dfa(alphabet: &Alphabet, modulus: usize, residue: usize) -> Result<Dfa> {
    if modulus == 0 || residue >= modulus {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= residue < modulus, got residue {residue} modulus {modulus}"
        )));
    }
    let delta = (0..modulus)
        .map(|r| vec![(r + 1) % modulus; alphabet.len()])
        .collect();
    Dfa::new(alphabet.clone(), 0, &[residue], delta)
}

/// Two states over {a, b, c}: S0 is initial and final; b and c keep S0,
/// a moves to S1; a and c keep S1, b returns to S0.
pub fn figure_one_dfa() -> Dfa {
    let abc = Alphabet::new("abc").expect("valid alphabet");
    Dfa::new(abc, 0, &[0], vec![vec![1, 0, 0], vec![1, 0, 1]]).expect("valid table")
}

fn compile_example(text: &str) -> Dfa {
    let abc = Alphabet::new("abc").expect("valid alphabet");
    Regex::parse(text, &abc)
        .expect("valid expression")
        .to_dfa(&abc)
        .minimize()
}

pub fn example1_dfa() -> Dfa {
    compile_example(EXAMPLE1_REGEX)
}

pub fn example2_dfa() -> Dfa {
    compile_example(EXAMPLE2_REGEX)
}

/// Words over {a, b} of length 3 mod 5.
pub fn example4_dfa() -> Dfa {
    length_mod_dfa(&binary_alphabet(), 5, 3).expect("valid modulus")
}

pub fn pow2() -> LanguageOracle {
    LanguageOracle::new("pow2", unary_alphabet(), |w| w.len().is_power_of_two())
}

pub fn fib() -> LanguageOracle {
    LanguageOracle::new("fib", unary_alphabet(), |w| is_fibonacci(w.len()))
}

pub fn prime_length() -> LanguageOracle {
    LanguageOracle::new("prime-len", unary_alphabet(), |w| is_prime(w.len() as u64))
}

/// Balance different from +1 and -1: the union of all `L_p` over primes `p`.
pub fn xi_ne_pm1() -> LanguageOracle {
    LanguageOracle::new("xi-ne-pm1", binary_alphabet(), |w| {
        xi(w).is_ok_and(|x| x.abs() != 1)
    })
}

/// Looks up an oracle by its stable name.
pub fn oracle(name: &str) -> Result<LanguageOracle> {
    let unknown = || Error::InvalidArgument(format!("unknown language {name:?}"));
    let number = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let o = match name {
        "pow2" => pow2(),
        "fib" => fib(),
        "prime-len" => prime_length(),
        "xi-ne-pm1" => xi_ne_pm1(),
        "ex1" => LanguageOracle::from_dfa(name, example1_dfa()),
        "ex2" => LanguageOracle::from_dfa(name, example2_dfa()),
        "ex4" => LanguageOracle::from_dfa(name, example4_dfa()),
        "fig1" => LanguageOracle::from_dfa(name, figure_one_dfa()),
        _ => {
            if let Some(n) = name.strip_prefix("Ln:") {
                LanguageOracle::from_dfa(name, divisibility_dfa(number(n)?)?)
            } else if let Some(rest) = name.strip_prefix("len-mod:") {
                let (m, r) = rest.split_once(':').ok_or_else(unknown)?;
                LanguageOracle::from_dfa(name, length_mod_dfa(&binary_alphabet(), number(m)?, number(r)?)?)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(o)
}

/// The fixed zoo: the four non-regular predicates followed by the
/// DFA-backed languages.
pub fn zoo_oracles() -> Vec<LanguageOracle> {
    [
        "pow2",
        "fib",
        "prime-len",
        "xi-ne-pm1",
        "ex1",
        "ex2",
        "ex4",
        "fig1",
        "Ln:1",
        "Ln:2",
        "Ln:3",
        "Ln:4",
        "Ln:5",
    ]
    .into_iter()
    .map(|name| oracle(name).expect("zoo names are valid"))
    .collect()
}
