//! Turning command-line inputs into languages.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use kleene::zoo::{self, LanguageOracle};
use kleene::{Alphabet, Dfa, Regex, Word};

const METACHARACTERS: [char; 6] = ['+', '.', '*', '(', ')', '\\'];

/// A resolved input: either an automaton or a bare membership predicate.
pub enum Language {
    Regular(Dfa),
    Oracle(LanguageOracle),
}

impl Language {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Language::Regular(d) => d.alphabet(),
            Language::Oracle(o) => o.alphabet(),
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        Ok(match self {
            Language::Regular(d) => d.run(w)?,
            Language::Oracle(o) => o.contains(w)?,
        })
    }

    pub fn into_dfa(self, what: &str) -> Result<Dfa> {
        match self {
            Language::Regular(d) => Ok(d),
            Language::Oracle(o) => bail!("{} is not regular, so it has no automaton to {what}", o.name()),
        }
    }
}

pub enum Source {
    Expr(String),
    File(String),
}

fn zoo_lookup(text: &str) -> Option<LanguageOracle> {
    let name = text.trim();
    let name = name.strip_suffix("-regex").unwrap_or(name);
    zoo::oracle(name).ok()
}

/// Symbols an expression mentions, escaped metacharacters included.
fn mentioned_symbols(text: &str, out: &mut Vec<char>) {
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        let symbol = match c {
            '\\' => match chars.next() {
                Some(m) if METACHARACTERS.contains(&m) => m,
                _ => continue,
            },
            c if c.is_whitespace() || METACHARACTERS.contains(&c) => continue,
            c => c,
        };
        if !out.contains(&symbol) {
            out.push(symbol);
        }
    }
}

/// The alphabet shared by all `sources`: the `--alphabet` flag if given,
/// else the alphabet of the first zoo language or DFA file, else the sorted
/// symbols mentioned by the expressions (`a` when there are none).
pub fn shared_alphabet(flag: Option<&str>, sources: &[Source]) -> Result<Alphabet> {
    if let Some(symbols) = flag {
        return Ok(Alphabet::new(symbols)?);
    }
    let mut symbols = Vec::new();
    for source in sources {
        match source {
            Source::Expr(text) => {
                if let Some(o) = zoo_lookup(text) {
                    return Ok(o.alphabet().clone());
                }
                mentioned_symbols(text, &mut symbols);
            }
            Source::File(path) => return Ok(read_dfa(path)?.alphabet().clone()),
        }
    }
    symbols.sort_unstable();
    if symbols.is_empty() {
        symbols.push('a');
    }
    Ok(Alphabet::from_symbols(symbols)?)
}

pub fn read_dfa(path: impl AsRef<Path>) -> Result<Dfa> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Dfa::from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Resolves one source. Expressions are compiled and minimized.
pub fn resolve(source: &Source, alphabet: &Alphabet) -> Result<Language> {
    let language = match source {
        Source::File(path) => Language::Regular(read_dfa(path)?),
        Source::Expr(text) => match zoo_lookup(text) {
            Some(o) => match o.dfa() {
                Some(d) => Language::Regular(d.minimize()),
                None => Language::Oracle(o),
            },
            None => {
                let e = Regex::parse(text, alphabet).with_context(|| format!("in expression {text:?}"))?;
                Language::Regular(e.to_dfa(alphabet).minimize())
            }
        },
    };
    if language.alphabet() != alphabet {
        return Err(anyhow!(
            "alphabet mismatch: input is over {{{}}} but {{{alphabet}}} is in use",
            language.alphabet()
        ));
    }
    Ok(language)
}

/// Reads a word from the command line; `""`, `ε` and `\e` denote the empty word.
pub fn parse_word(text: &str) -> Word {
    match text {
        "" | "ε" | "\\e" => Word::epsilon(),
        other => Word::from(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_alphabet_from_expressions() {
        let sources = [Source::Expr("c.a*".into()), Source::Expr("b + \\+".into())];
        assert_eq!(shared_alphabet(None, &sources).unwrap().to_string(), "+abc");
        assert_eq!(
            shared_alphabet(None, &[Source::Expr("\\0".into())])
                .unwrap()
                .to_string(),
            "a"
        );
        assert_eq!(
            shared_alphabet(None, &[Source::Expr("Ln:4".into())])
                .unwrap()
                .to_string(),
            "ab"
        );
        assert_eq!(shared_alphabet(Some("xyz"), &sources).unwrap().to_string(), "xyz");
    }

    #[test]
    fn words_from_arguments() {
        assert!(parse_word("").is_empty());
        assert!(parse_word("ε").is_empty());
        assert_eq!(parse_word("ab").len(), 2);
    }
}
