//! A small regular-language toolkit.
//!
//! The pipeline runs from regular-expression text to a total deterministic
//! automaton and on to its Myhill–Nerode canonical form:
//!
//! ```text
//! text --parse--> Regex --thompson--> Nfa --subset--> Dfa --minimize--> Dfa
//!                   ^                                   |
//!                   +-------- state elimination --------+
//! ```
//!
//! On top of that sit a zoo of concrete languages (the balance languages
//! `L_n` of words whose a-count minus b-count is divisible by `n`, their
//! prime-indexed unions, and several unary languages) and tools that gather
//! finite evidence about non-regularity: observation tables, class-count
//! series and unary periodicity checks.
//!
//! ```
//! use kleene::{Alphabet, Regex, Word};
//!
//! let sigma = Alphabet::new("abc").unwrap();
//! let e = Regex::parse("(a+b+c)*.a.(a+b+c)*", &sigma).unwrap();
//! let dfa = e.to_dfa(&sigma).minimize();
//! assert_eq!(dfa.state_count(), 2);
//! assert!(dfa.run(&Word::from("cab")).unwrap());
//! ```

mod alphabet;
mod dfa;
mod elimination;
mod error;
pub mod evidence;
mod format;
mod minimize;
mod nfa;
mod regex;
pub mod zoo;

pub use alphabet::{Alphabet, Word};
pub use dfa::{Dfa, Equivalence};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use minimize::Partition;
pub use nfa::{Label, Nfa};
pub use regex::Regex;
