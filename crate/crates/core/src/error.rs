use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),

    #[error("automata are over different alphabets ({left} vs {right})")]
    AlphabetMismatch { left: String, right: String },

    #[error("state {state} is out of range (automaton has {count} states)")]
    InvalidState { state: usize, count: usize },

    #[error("malformed automaton: {0}")]
    MalformedAutomaton(String),

    #[error("line {line}: {message}")]
    DfaFormat { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A regex syntax error, positioned at a character offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnbalancedParenthesis,
    UnknownSymbol(char),
    DanglingOperator(char),
    InvalidEscape(Option<char>),
    UnexpectedToken(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::EmptyInput => write!(f, "empty expression"),
            ParseErrorKind::UnbalancedParenthesis => write!(f, "unbalanced parenthesis"),
            ParseErrorKind::UnknownSymbol(c) => write!(f, "symbol {c:?} is not in the alphabet"),
            ParseErrorKind::DanglingOperator(c) => write!(f, "operator {c:?} is missing an operand"),
            ParseErrorKind::InvalidEscape(Some(c)) => write!(f, "invalid escape \\{c}"),
            ParseErrorKind::InvalidEscape(None) => write!(f, "trailing backslash"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
        }
    }
}
