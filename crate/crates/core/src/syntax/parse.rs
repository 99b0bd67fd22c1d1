use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::ast::{Name, Term, Type};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Scope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseErrorKind::Syntax => "parse error",
            ParseErrorKind::Scope => "scope error",
        };
        write!(f, "{what} at {}:{}: {}", self.line, self.column, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Lambda,
    BigLambda,
    Forall,
    Arrow,
    Dot,
    Colon,
    LParen,
    RParen,
    LBracket,
    RBracket,
    UnitType,
    UnitTerm,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Lambda => f.write_str("`\\`"),
            Tok::BigLambda => f.write_str("`/\\`"),
            Tok::Forall => f.write_str("`forall`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::UnitType => f.write_str("`Unit`"),
            Tok::UnitTerm => f.write_str("`unit`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, column, message: String| ParseError {
        kind: ParseErrorKind::Syntax,
        line,
        column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut push = |tok, width: usize, i: &mut usize, col: &mut usize| {
            out.push(Lexed {
                tok,
                line: l0,
                column: c0,
            });
            *i += width;
            *col += width;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '-' if chars.get(i + 1) == Some(&'-') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Arrow, 2, &mut i, &mut col),
            '/' if chars.get(i + 1) == Some(&'\\') => push(Tok::BigLambda, 2, &mut i, &mut col),
            '\\' | 'λ' => push(Tok::Lambda, 1, &mut i, &mut col),
            'Λ' => push(Tok::BigLambda, 1, &mut i, &mut col),
            '∀' => push(Tok::Forall, 1, &mut i, &mut col),
            '→' => push(Tok::Arrow, 1, &mut i, &mut col),
            '.' => push(Tok::Dot, 1, &mut i, &mut col),
            ':' => push(Tok::Colon, 1, &mut i, &mut col),
            '(' => push(Tok::LParen, 1, &mut i, &mut col),
            ')' => push(Tok::RParen, 1, &mut i, &mut col),
            '[' => push(Tok::LBracket, 1, &mut i, &mut col),
            ']' => push(Tok::RBracket, 1, &mut i, &mut col),
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += i - start;
                let tok = match word.as_str() {
                    "forall" => Tok::Forall,
                    "Unit" => Tok::UnitType,
                    "unit" => Tok::UnitTerm,
                    _ => Tok::Ident(word),
                };
                out.push(Lexed {
                    tok,
                    line: l0,
                    column: c0,
                });
            }
            c => return Err(err(line, col, format!("unexpected character `{c}`"))),
        }
    }
    out.push(Lexed {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    /// Type variable names, innermost last.
    tys: Vec<String>,
    /// Term variable names, innermost last.
    terms: Vec<String>,
}

impl Parser {
    fn new(text: &str, tys: &[&str], terms: &[&str]) -> Result<Self, ParseError> {
        Ok(Self {
            toks: lex(text)?,
            pos: 0,
            tys: tys.iter().map(|s| s.to_string()).collect(),
            terms: terms.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, kind: ParseErrorKind, message: String) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            kind,
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(
                ParseErrorKind::Syntax,
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => Err(self.error(
                ParseErrorKind::Syntax,
                format!("expected a name, found {t}"),
            )),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(
                ParseErrorKind::Syntax,
                format!("unexpected {} after the end", self.peek()),
            ))
        }
    }

    fn ty(&mut self) -> Result<Type, ParseError> {
        if *self.peek() == Tok::Forall {
            self.bump();
            let x = self.ident()?;
            self.expect(Tok::Dot)?;
            self.tys.push(x.clone());
            let body = self.ty();
            self.tys.pop();
            return Ok(Type::Forall(Name(x), Box::new(body?)));
        }
        let lhs = self.ty_atom()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.ty()?;
            return Ok(Type::arrow(lhs, rhs));
        }
        Ok(lhs)
    }

    fn ty_atom(&mut self) -> Result<Type, ParseError> {
        match self.peek().clone() {
            Tok::UnitType => {
                self.bump();
                Ok(Type::Unit)
            }
            Tok::LParen => {
                self.bump();
                let t = self.ty()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(x) => {
                let Some(i) = self.tys.iter().rev().position(|y| *y == x) else {
                    return Err(self.error(
                        ParseErrorKind::Scope,
                        format!("type variable `{x}` is not in scope"),
                    ));
                };
                self.bump();
                Ok(Type::Var(i))
            }
            t => Err(self.error(
                ParseErrorKind::Syntax,
                format!("expected a type, found {t}"),
            )),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Tok::Lambda => {
                self.bump();
                let x = self.ident()?;
                self.expect(Tok::Colon)?;
                let t = self.ty()?;
                self.expect(Tok::Dot)?;
                self.terms.push(x.clone());
                let body = self.term();
                self.terms.pop();
                Ok(Term::Lam(Name(x), t, Box::new(body?)))
            }
            Tok::BigLambda => {
                self.bump();
                let x = self.ident()?;
                self.expect(Tok::Dot)?;
                self.tys.push(x.clone());
                let body = self.term();
                self.tys.pop();
                Ok(Term::TyLam(Name(x), Box::new(body?)))
            }
            _ => self.application(),
        }
    }

    fn application(&mut self) -> Result<Term, ParseError> {
        let mut t = self.term_atom()?;
        loop {
            match self.peek() {
                Tok::LBracket => {
                    self.bump();
                    let s = self.ty()?;
                    self.expect(Tok::RBracket)?;
                    t = Term::ty_app(t, s);
                }
                Tok::Lambda | Tok::BigLambda => {
                    let arg = self.term()?;
                    return Ok(Term::app(t, arg));
                }
                Tok::Ident(_) | Tok::UnitTerm | Tok::LParen => {
                    let arg = self.term_atom()?;
                    t = Term::app(t, arg);
                }
                _ => return Ok(t),
            }
        }
    }

    fn term_atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::UnitTerm => {
                self.bump();
                Ok(Term::Unit)
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(x) => {
                let Some(i) = self.terms.iter().rev().position(|y| *y == x) else {
                    return Err(self.error(
                        ParseErrorKind::Scope,
                        format!("variable `{x}` is not in scope"),
                    ));
                };
                self.bump();
                Ok(Term::Var(i))
            }
            t => Err(self.error(
                ParseErrorKind::Syntax,
                format!("expected a term, found {t}"),
            )),
        }
    }
}

/// Parses a closed type.
pub fn parse_type(text: &str) -> Result<Type, ParseError> {
    parse_type_in(text, &[])
}

/// Parses a type over the given type variables (outermost first).
pub fn parse_type_in(text: &str, tys: &[&str]) -> Result<Type, ParseError> {
    let mut p = Parser::new(text, tys, &[])?;
    let t = p.ty()?;
    p.finish()?;
    Ok(t)
}

/// Parses a closed term.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_term_in(text, &[], &[])
}

/// Parses a term over the given type and term variables (outermost first).
pub fn parse_term_in(text: &str, tys: &[&str], terms: &[&str]) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, tys, terms)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types() {
        assert_eq!(
            parse_type("forall X. X -> X").unwrap(),
            Type::forall("X", Type::arrow(Type::Var(0), Type::Var(0)))
        );
        assert_eq!(
            parse_type("∀X. ∀Y. X → Y → X").unwrap(),
            Type::forall(
                "X",
                Type::forall(
                    "Y",
                    Type::arrow(Type::Var(1), Type::arrow(Type::Var(0), Type::Var(1)))
                )
            )
        );
        assert_eq!(
            parse_type_in("(A -> A) -> Unit", &["A"]).unwrap(),
            Type::arrow(Type::arrow(Type::Var(0), Type::Var(0)), Type::Unit)
        );
    }

    #[test]
    fn terms() {
        assert_eq!(
            parse_term("/\\X. \\x:X. x").unwrap(),
            Term::ty_lam("X", Term::lam("x", Type::Var(0), Term::Var(0)))
        );
        let t = parse_term("/\\X. \\f:X -> X. \\x:X. f (f x) -- twice").unwrap();
        let Term::TyLam(_, b) = t else { panic!() };
        let Term::Lam(_, _, b) = *b else { panic!() };
        let Term::Lam(_, _, b) = *b else { panic!() };
        assert_eq!(*b, Term::app(Term::Var(1), Term::app(Term::Var(1), Term::Var(0))));
        assert_eq!(
            parse_term("(/\\X. \\x:X. x) [Unit] unit").unwrap(),
            Term::app(
                Term::ty_app(
                    Term::ty_lam("X", Term::lam("x", Type::Var(0), Term::Var(0))),
                    Type::Unit
                ),
                Term::Unit
            )
        );
    }

    #[test]
    fn errors_carry_locations() {
        let e = parse_term("\\x:X. x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Scope);
        assert_eq!((e.line, e.column), (1, 4));
        let e = parse_type("forall X.\n  X -> ").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        assert_eq!(e.line, 2);
        assert!(parse_term("x y").is_err());
        assert!(parse_type("X ->").is_err());
        assert!(parse_term("unit )").is_err());
    }
}
