//! Regular expressions over an explicit alphabet.
//!
//! Text grammar, with whitespace between tokens ignored:
//!
//! ```text
//! regex  := union
//! union  := concat ("+" concat)*
//! concat := star ("."? star)*
//! star   := atom "*"*
//! atom   := SYMBOL | "\0" | "\e" | "(" regex ")"
//! ```
//!
//! Star binds tightest, then concatenation, then union, so `a + b.c*` reads
//! as `a + (b.(c*))`. Binary operators associate to the left. `\0` is the
//! empty language and `\e` is sugar for `\0*`, the language `{ε}`. The
//! metacharacters `+ . * ( ) \` can be used as symbols when escaped.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{Alphabet, Word};
use crate::dfa::Dfa;
use crate::error::{ParseError, ParseErrorKind};
use crate::nfa::Nfa;

const METACHARACTERS: [char; 6] = ['+', '.', '*', '(', ')', '\\'];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regex {
    Empty,
    Symbol(char),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn epsilon() -> Regex {
        Regex::Star(Box::new(Regex::Empty))
    }

    pub fn union(left: Regex, right: Regex) -> Regex {
        Regex::Union(Box::new(left), Box::new(right))
    }

    pub fn concat(left: Regex, right: Regex) -> Regex {
        Regex::Concat(Box::new(left), Box::new(right))
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, Regex::Star(inner) if **inner == Regex::Empty)
    }

    /// Parses `text` against `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex, ParseError> {
        let tokens = tokenize(text, alphabet)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: text.chars().count(),
        };
        if parser.tokens.is_empty() {
            return Err(ParseError {
                kind: ParseErrorKind::EmptyInput,
                position: 0,
            });
        }
        let e = parser.union()?;
        if let Some(tok) = parser.peek() {
            let kind = match tok.kind {
                TokenKind::RParen => ParseErrorKind::UnbalancedParenthesis,
                _ => ParseErrorKind::UnexpectedToken(tok.kind.describe()),
            };
            return Err(ParseError {
                kind,
                position: tok.position,
            });
        }
        Ok(e)
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Symbol(_) => 1,
            Regex::Union(l, r) | Regex::Concat(l, r) => 1 + l.size() + r.size(),
            Regex::Star(inner) => 1 + inner.size(),
        }
    }

    /// Distinct symbols mentioned, in order of first occurrence.
    pub fn symbols(&self) -> Vec<char> {
        fn walk(e: &Regex, out: &mut Vec<char>) {
            match e {
                Regex::Empty => {}
                Regex::Symbol(c) => {
                    if !out.contains(c) {
                        out.push(*c);
                    }
                }
                Regex::Union(l, r) | Regex::Concat(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Regex::Star(inner) => walk(inner, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// The words of length at most `max_len` in the language, computed by
    /// structural recursion.
    ///
    /// This deliberately shares nothing with the automaton pipeline so it can
    /// serve as an oracle for it.
    pub fn enumerate(&self, max_len: usize) -> BTreeSet<Word> {
        match self {
            Regex::Empty => BTreeSet::new(),
            Regex::Symbol(c) => {
                let mut out = BTreeSet::new();
                if max_len >= 1 {
                    out.insert(Word::new(vec![*c]));
                }
                out
            }
            Regex::Union(l, r) => {
                let mut out = l.enumerate(max_len);
                out.extend(r.enumerate(max_len));
                out
            }
            Regex::Concat(l, r) => {
                let left = l.enumerate(max_len);
                let right = r.enumerate(max_len);
                concat_capped(&left, &right, max_len)
            }
            Regex::Star(inner) => {
                let base: BTreeSet<Word> = inner
                    .enumerate(max_len)
                    .into_iter()
                    .filter(|w| !w.is_empty())
                    .collect();
                let mut out = BTreeSet::from([Word::epsilon()]);
                let mut frontier = out.clone();
                while !frontier.is_empty() {
                    let grown = concat_capped(&frontier, &base, max_len);
                    frontier = grown.into_iter().filter(|w| !out.contains(w)).collect();
                    out.extend(frontier.iter().cloned());
                }
                out
            }
        }
    }

    pub fn to_nfa(&self) -> Nfa {
        Nfa::thompson(self)
    }

    /// Thompson construction followed by the subset construction.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        Dfa::from_nfa(&self.to_nfa(), alphabet)
    }

    /// Text form with the fewest parentheses; parses back to the same tree.
    fn write(&self, f: &mut fmt::Formatter<'_>, context: Precedence) -> fmt::Result {
        let own = self.precedence();
        if own < context {
            write!(f, "(")?;
        }
        match self {
            Regex::Empty => write!(f, "\\0")?,
            Regex::Symbol(c) => {
                if METACHARACTERS.contains(c) {
                    write!(f, "\\")?;
                }
                write!(f, "{c}")?;
            }
            e if e.is_epsilon() => write!(f, "\\e")?,
            Regex::Union(l, r) => {
                l.write(f, Precedence::Union)?;
                write!(f, " + ")?;
                r.write(f, Precedence::Concat)?;
            }
            Regex::Concat(l, r) => {
                l.write(f, Precedence::Concat)?;
                write!(f, ".")?;
                r.write(f, Precedence::Star)?;
            }
            Regex::Star(inner) => {
                inner.write(f, Precedence::Star)?;
                write!(f, "*")?;
            }
        }
        if own < context {
            write!(f, ")")?;
        }
        Ok(())
    }

    fn precedence(&self) -> Precedence {
        match self {
            Regex::Union(..) => Precedence::Union,
            Regex::Concat(..) => Precedence::Concat,
            Regex::Star(_) if !self.is_epsilon() => Precedence::Star,
            _ => Precedence::Atom,
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, Precedence::Union)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Precedence {
    Union,
    Concat,
    Star,
    Atom,
}

fn concat_capped(left: &BTreeSet<Word>, right: &BTreeSet<Word>, max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for u in left {
        for v in right {
            if u.len() + v.len() <= max_len {
                out.insert(u.concat(v));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum TokenKind {
    Symbol(char),
    EmptySet,
    Epsilon,
    Plus,
    Dot,
    Star,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Symbol(c) => format!("symbol {c:?}"),
            TokenKind::EmptySet => "\\0".into(),
            TokenKind::Epsilon => "\\e".into(),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Dot => "'.'".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self,
            TokenKind::Symbol(_) | TokenKind::EmptySet | TokenKind::Epsilon | TokenKind::LParen
        )
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    position: usize,
}

fn tokenize(text: &str, alphabet: &Alphabet) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some((position, c)) = chars.next() {
        let kind = match c {
            c if c.is_whitespace() => continue,
            '+' => TokenKind::Plus,
            '.' => TokenKind::Dot,
            '*' => TokenKind::Star,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '\\' => match chars.next() {
                Some((_, '0')) => TokenKind::EmptySet,
                Some((_, 'e')) => TokenKind::Epsilon,
                Some((_, m)) if METACHARACTERS.contains(&m) => symbol(m, position, alphabet)?,
                Some((_, other)) => {
                    return Err(ParseError {
                        kind: ParseErrorKind::InvalidEscape(Some(other)),
                        position,
                    })
                }
                None => {
                    return Err(ParseError {
                        kind: ParseErrorKind::InvalidEscape(None),
                        position,
                    })
                }
            },
            c => symbol(c, position, alphabet)?,
        };
        tokens.push(Token { kind, position });
    }
    Ok(tokens)
}

fn symbol(c: char, position: usize, alphabet: &Alphabet) -> Result<TokenKind, ParseError> {
    if alphabet.contains(c) {
        Ok(TokenKind::Symbol(c))
    } else {
        Err(ParseError {
            kind: ParseErrorKind::UnknownSymbol(c),
            position,
        })
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        tok
    }

    /// Where the next token starts, or the end of input.
    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.position)
    }

    fn union(&mut self) -> Result<Regex, ParseError> {
        let mut e = self.concat()?;
        while let Some(Token {
            kind: TokenKind::Plus,
            position,
        }) = self.peek().cloned()
        {
            self.pos += 1;
            self.expect_operand('+', position)?;
            e = Regex::union(e, self.concat()?);
        }
        Ok(e)
    }

    fn concat(&mut self) -> Result<Regex, ParseError> {
        let mut e = self.star()?;
        loop {
            match self.peek().cloned() {
                Some(Token {
                    kind: TokenKind::Dot,
                    position,
                }) => {
                    self.pos += 1;
                    self.expect_operand('.', position)?;
                    e = Regex::concat(e, self.star()?);
                }
                Some(tok) if tok.kind.starts_atom() => e = Regex::concat(e, self.star()?),
                _ => return Ok(e),
            }
        }
    }

    fn star(&mut self) -> Result<Regex, ParseError> {
        let mut e = self.atom()?;
        while matches!(
            self.peek(),
            Some(Token {
                kind: TokenKind::Star,
                ..
            })
        ) {
            self.pos += 1;
            e = Regex::star(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Regex, ParseError> {
        let position = self.here();
        let Some(tok) = self.next() else {
            return Err(ParseError {
                kind: ParseErrorKind::EmptyInput,
                position,
            });
        };
        match tok.kind {
            TokenKind::Symbol(c) => Ok(Regex::Symbol(c)),
            TokenKind::EmptySet => Ok(Regex::Empty),
            TokenKind::Epsilon => Ok(Regex::epsilon()),
            TokenKind::LParen => {
                if matches!(
                    self.peek(),
                    Some(Token {
                        kind: TokenKind::RParen,
                        ..
                    })
                ) {
                    return Err(ParseError {
                        kind: ParseErrorKind::UnexpectedToken("')'".into()),
                        position: self.here(),
                    });
                }
                let inner = self.union()?;
                match self.next() {
                    Some(Token {
                        kind: TokenKind::RParen,
                        ..
                    }) => Ok(inner),
                    _ => Err(ParseError {
                        kind: ParseErrorKind::UnbalancedParenthesis,
                        position: tok.position,
                    }),
                }
            }
            TokenKind::RParen => Err(ParseError {
                kind: ParseErrorKind::UnbalancedParenthesis,
                position: tok.position,
            }),
            TokenKind::Plus => Err(ParseError {
                kind: ParseErrorKind::DanglingOperator('+'),
                position,
            }),
            TokenKind::Dot => Err(ParseError {
                kind: ParseErrorKind::DanglingOperator('.'),
                position,
            }),
            TokenKind::Star => Err(ParseError {
                kind: ParseErrorKind::DanglingOperator('*'),
                position,
            }),
        }
    }

    /// A binary operator at `position` must be followed by something that can
    /// start an operand.
    fn expect_operand(&self, op: char, position: usize) -> Result<(), ParseError> {
        match self.peek() {
            Some(tok) if tok.kind.starts_atom() => Ok(()),
            _ => Err(ParseError {
                kind: ParseErrorKind::DanglingOperator(op),
                position,
            }),
        }
    }
}
