//! `kleene`: compile, compare and probe regular languages from the shell.
//!
//! Exit status: 0 on success or membership, 1 for a negative answer to a
//! query (non-member, inequivalent, distinguishable), 2 on usage or input
//! errors.

mod source;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use kleene::evidence::{self, DEFAULT_HORIZONS};
use kleene::zoo;
use kleene::Equivalence;

use crate::source::{parse_word, resolve, shared_alphabet, Language, Source};

#[derive(Parser)]
#[command(name = "kleene", version, about = "Regular-language toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Symbols of the alphabet, in order (e.g. `abc`)
    #[arg(long)]
    alphabet: Option<String>,
    /// Expression or zoo name (repeatable)
    #[arg(long = "expr")]
    exprs: Vec<String>,
    /// DFA file in the text format (repeatable)
    #[arg(long = "dfa")]
    dfas: Vec<PathBuf>,
    /// Write the main output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Inputs {
    /// Flag-given sources first; if there are fewer than `count`, the rest
    /// are taken from the front of `positional`. Returns the leftover
    /// positional arguments.
    fn split(&self, count: usize, positional: &[String]) -> Result<(Vec<Source>, Vec<String>)> {
        let mut sources: Vec<Source> = self
            .dfas
            .iter()
            .map(|p| Source::File(p.display().to_string()))
            .chain(self.exprs.iter().cloned().map(Source::Expr))
            .collect();
        if sources.len() > count {
            bail!("expected {count} input language(s), got {}", sources.len());
        }
        let needed = count - sources.len();
        if positional.len() < needed {
            bail!("expected {count} input language(s)");
        }
        sources.extend(positional[..needed].iter().cloned().map(Source::Expr));
        Ok((sources, positional[needed..].to_vec()))
    }

    fn languages(&self, count: usize, positional: &[String]) -> Result<(Vec<Language>, Vec<String>)> {
        let (sources, rest) = self.split(count, positional)?;
        let alphabet = shared_alphabet(self.alphabet.as_deref(), &sources)?;
        let languages = sources
            .iter()
            .map(|s| resolve(s, &alphabet))
            .collect::<Result<_>>()?;
        Ok((languages, rest))
    }

    fn single(&self, positional: &[String]) -> Result<Language> {
        let (mut languages, rest) = self.languages(1, positional)?;
        if !rest.is_empty() {
            bail!("unexpected argument {:?}", rest[0]);
        }
        Ok(languages.remove(0))
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compile to a minimal DFA and print it (or its state count with --out)
    Compile {
        #[command(flatten)]
        inputs: Inputs,
        /// Also write a Graphviz rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
        positional: Vec<String>,
    },
    /// Test membership of a word: [EXPR] WORD
    Match {
        #[command(flatten)]
        inputs: Inputs,
        positional: Vec<String>,
    },
    /// Minimize and print a DFA
    Min {
        #[command(flatten)]
        inputs: Inputs,
        positional: Vec<String>,
    },
    /// Decide language equality: EXPR1 EXPR2
    Equiv {
        #[command(flatten)]
        inputs: Inputs,
        positional: Vec<String>,
    },
    /// Myhill-Nerode index with one shortest representative per class
    Classes {
        #[command(flatten)]
        inputs: Inputs,
        positional: Vec<String>,
    },
    /// Shortest distinguishing extension: [EXPR] X Y
    Distinguish {
        #[command(flatten)]
        inputs: Inputs,
        positional: Vec<String>,
    },
    /// Observation-table class counts for a zoo language
    Evidence {
        oracle: String,
        /// Comma-separated, strictly increasing
        #[arg(long, value_delimiter = ',')]
        horizons: Option<Vec<usize>>,
        /// Print (horizon, class_count) rows as CSV
        #[arg(long)]
        csv: bool,
    },
    /// State counts of prime-indexed unions of the balance languages
    PrimesDemo {
        k: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Horizons for the accompanying non-regularity evidence
        #[arg(long, value_delimiter = ',')]
        horizons: Option<Vec<usize>>,
    },
    /// Graphviz rendering (expressions are minimized first)
    Dot {
        #[command(flatten)]
        inputs: Inputs,
        positional: Vec<String>,
    },
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Compile {
            inputs,
            dot,
            positional,
        } => {
            let dfa = inputs.single(&positional)?.into_dfa("compile")?;
            if let Some(path) = dot {
                fs::write(&path, dfa.to_dot()).with_context(|| format!("writing {}", path.display()))?;
            }
            if inputs.out.is_some() {
                inputs.emit(&dfa.to_text())?;
                println!("states: {}", dfa.state_count());
            } else {
                print!("{}", dfa.to_text());
            }
            Ok(0)
        }
        Command::Match { inputs, positional } => {
            let (languages, rest) = inputs.languages(1, &positional)?;
            let [word] = rest.as_slice() else {
                bail!("expected exactly one word to match");
            };
            if languages[0].contains(&parse_word(word))? {
                println!("member");
                Ok(0)
            } else {
                println!("non-member");
                Ok(1)
            }
        }
        Command::Min { inputs, positional } => {
            let dfa = inputs.single(&positional)?.into_dfa("minimize")?.minimize();
            inputs.emit(&dfa.to_text())?;
            Ok(0)
        }
        Command::Equiv { inputs, positional } => {
            let (languages, rest) = inputs.languages(2, &positional)?;
            if let Some(extra) = rest.first() {
                bail!("unexpected argument {extra:?}");
            }
            let mut dfas = languages.into_iter().map(|l| l.into_dfa("compare"));
            let (left, right) = (dfas.next().unwrap()?, dfas.next().unwrap()?);
            match left.equivalent(&right)? {
                Equivalence::Equivalent => {
                    println!("equivalent");
                    Ok(0)
                }
                Equivalence::Counterexample(w) => {
                    println!("not equivalent");
                    println!("witness: {w}");
                    Ok(1)
                }
            }
        }
        Command::Classes { inputs, positional } => {
            let dfa = inputs.single(&positional)?.into_dfa("analyse")?;
            let reps = dfa.class_representatives();
            let mut text = format!("classes: {}\n", reps.len());
            for (i, w) in reps.iter().enumerate() {
                text.push_str(&format!("{i} {w}\n"));
            }
            inputs.emit(&text)?;
            Ok(0)
        }
        Command::Distinguish { inputs, positional } => {
            let (mut languages, rest) = inputs.languages(1, &positional)?;
            let [x, y] = rest.as_slice() else {
                bail!("expected two words to distinguish");
            };
            let dfa = languages.remove(0).into_dfa("query")?;
            match dfa.distinguishing_extension(&parse_word(x), &parse_word(y))? {
                None => {
                    println!("equivalent");
                    Ok(0)
                }
                Some(z) => {
                    println!("{z}");
                    Ok(1)
                }
            }
        }
        Command::Evidence {
            oracle,
            horizons,
            csv,
        } => {
            let o = zoo::oracle(&oracle)?;
            let horizons = horizons.unwrap_or_else(|| DEFAULT_HORIZONS.to_vec());
            let report = evidence::class_count_series(&o, &horizons)?;
            print!("{}", if csv { report.to_csv() } else { report.to_text() });
            Ok(0)
        }
        Command::PrimesDemo { k, max_k, horizons } => {
            let k = k.unwrap_or(max_k);
            if k > max_k {
                bail!("k = {k} exceeds --max-k {max_k}");
            }
            let rows = evidence::primes_demo(k)?;
            let horizons = horizons.unwrap_or_else(|| DEFAULT_HORIZONS.to_vec());
            let xi = evidence::class_count_series(&zoo::xi_ne_pm1(), &horizons)?;
            print!("{}", evidence::primes_report(&rows, &xi));
            Ok(0)
        }
        Command::Dot { inputs, positional } => {
            let dfa = inputs.single(&positional)?.into_dfa("render")?;
            inputs.emit(&dfa.to_dot())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    let _ = io::stdout().flush();
    ExitCode::from(status)
}
