//! Term language for the free symmetric monoidal category on the Frobenius
//! generators.
//!
//! Grammar (`*` binds tighter than `;`, both left-associative):
//!
//! ```text
//! term := seq
//! seq  := par (";" par)*
//! par  := atom ("*" atom)*
//! atom := "mult" | "unit" | "comult" | "counit" | "swap" | "id" | "id<k>"
//!       | "(" term ")"
//! ```
//!
//! Whitespace is insignificant; `#` starts a line comment. `id` alone means
//! `id1`.

use std::fmt;

use thiserror::Error;

use crate::cospan::{CospanError, Generator, GraphCospan, Semantics};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("{pos}: unexpected character '{ch}'")]
    Lexical { pos: Pos, ch: char },
    #[error("{pos}: unknown atom '{name}'")]
    UnknownAtom { pos: Pos, name: String },
    #[error("{pos}: expected {expected}, found {found}")]
    Unexpected {
        pos: Pos,
        expected: &'static str,
        found: String,
    },
    #[error("{pos}: unbalanced parenthesis")]
    Unbalanced { pos: Pos },
    #[error("empty input")]
    Empty,
    #[error("arity mismatch in '{subterm}': left yields {left_cod} outputs, right expects {right_dom} inputs")]
    ArityMismatch {
        subterm: String,
        left_cod: usize,
        right_dom: usize,
    },
    #[error(transparent)]
    Cospan(#[from] CospanError),
}

/// Input/output arity of a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arity {
    pub dom: usize,
    pub cod: usize,
}

/// Abstract syntax of terms over the Frobenius generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrobTerm {
    Mult,
    Unit,
    Comult,
    Counit,
    Swap,
    Id(usize),
    /// Composition in diagrammatic order: first left, then right.
    Seq(Box<FrobTerm>, Box<FrobTerm>),
    /// Tensor product.
    Par(Box<FrobTerm>, Box<FrobTerm>),
}

impl FrobTerm {
    pub fn seq(a: FrobTerm, b: FrobTerm) -> FrobTerm {
        FrobTerm::Seq(Box::new(a), Box::new(b))
    }

    pub fn par(a: FrobTerm, b: FrobTerm) -> FrobTerm {
        FrobTerm::Par(Box::new(a), Box::new(b))
    }

    /// Bottom-up arity computation. Fails on a composition whose feet do
    /// not match, naming the smallest offending subterm.
    pub fn infer_arity(&self) -> Result<Arity, TermError> {
        match self {
            FrobTerm::Mult => Ok(Arity { dom: 2, cod: 1 }),
            FrobTerm::Unit => Ok(Arity { dom: 0, cod: 1 }),
            FrobTerm::Comult => Ok(Arity { dom: 1, cod: 2 }),
            FrobTerm::Counit => Ok(Arity { dom: 1, cod: 0 }),
            FrobTerm::Swap => Ok(Arity { dom: 2, cod: 2 }),
            FrobTerm::Id(n) => Ok(Arity { dom: *n, cod: *n }),
            FrobTerm::Seq(a, b) => {
                let la = a.infer_arity()?;
                let lb = b.infer_arity()?;
                if la.cod != lb.dom {
                    return Err(TermError::ArityMismatch {
                        subterm: self.to_string(),
                        left_cod: la.cod,
                        right_dom: lb.dom,
                    });
                }
                Ok(Arity {
                    dom: la.dom,
                    cod: lb.cod,
                })
            }
            FrobTerm::Par(a, b) => {
                let la = a.infer_arity()?;
                let lb = b.infer_arity()?;
                Ok(Arity {
                    dom: la.dom + lb.dom,
                    cod: la.cod + lb.cod,
                })
            }
        }
    }

    /// Structural compilation to a graph cospan under the chosen
    /// composition semantics.
    pub fn compile(&self, semantics: Semantics) -> Result<GraphCospan, TermError> {
        self.infer_arity()?;
        self.compile_unchecked(semantics)
    }

    fn compile_unchecked(&self, semantics: Semantics) -> Result<GraphCospan, TermError> {
        Ok(match self {
            FrobTerm::Mult => GraphCospan::generator(Generator::Mult),
            FrobTerm::Unit => GraphCospan::generator(Generator::Unit),
            FrobTerm::Comult => GraphCospan::generator(Generator::Comult),
            FrobTerm::Counit => GraphCospan::generator(Generator::Counit),
            FrobTerm::Swap => GraphCospan::generator(Generator::Swap),
            FrobTerm::Id(n) => GraphCospan::identity(*n),
            FrobTerm::Seq(a, b) => {
                let fa = a.compile_unchecked(semantics)?;
                let fb = b.compile_unchecked(semantics)?;
                fa.compose(&fb, semantics)?
            }
            FrobTerm::Par(a, b) => {
                let fa = a.compile_unchecked(semantics)?;
                let fb = b.compile_unchecked(semantics)?;
                fa.tensor(&fb)
            }
        })
    }
}

/// Pretty-print with minimal parentheses; `parse` inverts this exactly.
impl fmt::Display for FrobTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl FrobTerm {
    // precedence levels: 0 = seq context, 1 = par context, 2 = atom context
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            FrobTerm::Mult => write!(f, "mult"),
            FrobTerm::Unit => write!(f, "unit"),
            FrobTerm::Comult => write!(f, "comult"),
            FrobTerm::Counit => write!(f, "counit"),
            FrobTerm::Swap => write!(f, "swap"),
            FrobTerm::Id(n) => write!(f, "id{}", n),
            FrobTerm::Seq(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, " ; ")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            FrobTerm::Par(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Atom(FrobTerm),
    Semi,
    Star,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Atom(t) => write!(f, "'{}'", t),
            Token::Semi => write!(f, "';'"),
            Token::Star => write!(f, "'*'"),
            Token::LParen => write!(f, "'('"),
            Token::RParen => write!(f, "')'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, Pos)>, TermError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    let mut col = 1;
    while let Some(&ch) = chars.peek() {
        let pos = Pos { line, col };
        match ch {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            ';' => {
                chars.next();
                col += 1;
                tokens.push((Token::Semi, pos));
            }
            '*' => {
                chars.next();
                col += 1;
                tokens.push((Token::Star, pos));
            }
            '(' => {
                chars.next();
                col += 1;
                tokens.push((Token::LParen, pos));
            }
            ')' => {
                chars.next();
                col += 1;
                tokens.push((Token::RParen, pos));
            }
            c if c.is_ascii_alphabetic() => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        word.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let atom = match word.as_str() {
                    "mult" => FrobTerm::Mult,
                    "unit" => FrobTerm::Unit,
                    "comult" => FrobTerm::Comult,
                    "counit" => FrobTerm::Counit,
                    "swap" => FrobTerm::Swap,
                    "id" => FrobTerm::Id(1),
                    w if w.starts_with("id") && w[2..].chars().all(|c| c.is_ascii_digit()) => {
                        FrobTerm::Id(w[2..].parse().map_err(|_| TermError::UnknownAtom {
                            pos,
                            name: word.clone(),
                        })?)
                    }
                    _ => {
                        return Err(TermError::UnknownAtom { pos, name: word });
                    }
                };
                tokens.push((Token::Atom(atom), pos));
            }
            c => {
                return Err(TermError::Lexical { pos, ch: c });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    index: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&(Token, Pos)> {
        self.tokens.get(self.index)
    }

    fn here(&self) -> Pos {
        self.peek().map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn parse_seq(&mut self) -> Result<FrobTerm, TermError> {
        let mut term = self.parse_par()?;
        while matches!(self.peek(), Some((Token::Semi, _))) {
            self.index += 1;
            let rhs = self.parse_par()?;
            term = FrobTerm::seq(term, rhs);
        }
        Ok(term)
    }

    fn parse_par(&mut self) -> Result<FrobTerm, TermError> {
        let mut term = self.parse_atom()?;
        while matches!(self.peek(), Some((Token::Star, _))) {
            self.index += 1;
            let rhs = self.parse_atom()?;
            term = FrobTerm::par(term, rhs);
        }
        Ok(term)
    }

    fn parse_atom(&mut self) -> Result<FrobTerm, TermError> {
        match self.peek().cloned() {
            Some((Token::Atom(t), _)) => {
                self.index += 1;
                Ok(t)
            }
            Some((Token::LParen, open_pos)) => {
                self.index += 1;
                let term = self.parse_seq()?;
                match self.peek() {
                    Some((Token::RParen, _)) => {
                        self.index += 1;
                        Ok(term)
                    }
                    _ => Err(TermError::Unbalanced { pos: open_pos }),
                }
            }
            Some((tok, pos)) => Err(TermError::Unexpected {
                pos,
                expected: "an atom or '('",
                found: tok.to_string(),
            }),
            None => Err(TermError::Unexpected {
                pos: self.here(),
                expected: "an atom or '('",
                found: "end of input".to_string(),
            }),
        }
    }
}

/// Parse a term from source text.
pub fn parse(text: &str) -> Result<FrobTerm, TermError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(TermError::Empty);
    }
    let end = {
        let lines: Vec<&str> = text.split('\n').collect();
        Pos {
            line: lines.len(),
            col: lines.last().map(|l| l.chars().count()).unwrap_or(0) + 1,
        }
    };
    let mut parser = Parser {
        tokens,
        index: 0,
        end,
    };
    let term = parser.parse_seq()?;
    match parser.peek() {
        None => Ok(term),
        Some((Token::RParen, pos)) => Err(TermError::Unbalanced { pos: *pos }),
        Some((tok, pos)) => Err(TermError::Unexpected {
            pos: *pos,
            expected: "';', '*', or end of input",
            found: tok.to_string(),
        }),
    }
}
