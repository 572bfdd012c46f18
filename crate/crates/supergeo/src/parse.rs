//! Expression language for scalars and polynomials.
//!
//! Grammar:
//!
//! ```text
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' int)?
//! atom     := rational | 'i' | ident | '(' expr ')'
//! rational := digits ('/' digits)?
//! int      := '-'? digits
//! ```
//!
//! `i` is the imaginary unit; every other identifier must be declared in the
//! active [`VarTable`]. A negative exponent inverts its base and therefore
//! requires the base to be a unit of the ring.

use std::sync::Arc;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::superpoly::{SuperPolynomial, VarTable};
use crate::scalar::Scalar;

/// Abstract syntax of the expression language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(BigRational),
    ImagUnit,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = text[start..i].parse().expect("digits");
                let denom = if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(syntax(slash, "expected digits after '/'"));
                    }
                    let d: BigInt = text[dstart..i].parse().expect("digits");
                    if d == BigInt::from(0) {
                        return Err(syntax(dstart, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                toks.push((start, Tok::Num(BigRational::new(numer, denom))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => return Err(syntax(i, format!("unexpected character {other:?}"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Tok, desc: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.here(), format!("expected {desc}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Expr::Add(
                        Box::new(acc),
                        Box::new(Expr::Neg(Box::new(self.term()?))),
                    );
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.here();
            match self.bump() {
                Some(Tok::Num(r)) if r.is_integer() => {
                    let mag: i64 = r
                        .to_integer()
                        .try_into()
                        .map_err(|_| syntax(at, "exponent out of range"))?;
                    Ok(Expr::Pow(
                        Box::new(base),
                        if negative { -mag } else { mag },
                    ))
                }
                _ => Err(syntax(at, "expected integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(r)) => Ok(Expr::Rational(r)),
            Some(Tok::Ident(name)) => {
                if name == "i" {
                    Ok(Expr::ImagUnit)
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(syntax(
                at,
                "expected a rational, 'i', a variable, or '('",
            )),
        }
    }
}

/// Parses the text into an AST without resolving variables.
pub fn parse_ast(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Evaluates an AST over the given table.
pub fn eval(expr: &Expr, table: &Arc<VarTable>) -> Result<SuperPolynomial> {
    match expr {
        Expr::Rational(r) => Ok(SuperPolynomial::scalar(
            table,
            Scalar::from_rational(r.clone()),
        )),
        Expr::ImagUnit => Ok(SuperPolynomial::scalar(table, Scalar::i())),
        Expr::Var(name) => SuperPolynomial::var(table, name),
        Expr::Neg(e) => Ok(-&eval(e, table)?),
        Expr::Add(a, b) => Ok(&eval(a, table)? + &eval(b, table)?),
        Expr::Mul(a, b) => Ok(&eval(a, table)? * &eval(b, table)?),
        Expr::Pow(base, e) => eval(base, table)?.pow(*e),
    }
}

/// Parses and evaluates in one step.
pub fn parse_expression(text: &str, table: &Arc<VarTable>) -> Result<SuperPolynomial> {
    eval(&parse_ast(text)?, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<VarTable> {
        VarTable::new(&[("z0", true), ("z1", false)], &["zeta0", "zeta1"]).unwrap()
    }

    #[test]
    fn parses_arithmetic_with_precedence() {
        let t = table();
        let p = parse_expression("1/2*z0^2 - z1*zeta0*zeta1 + i", &t).unwrap();
        let q = parse_expression("i + z0*z0*1/2 - z1*zeta0*zeta1", &t).unwrap();
        assert_eq!(p, q);
        let r = parse_expression("-(z0 - z1)^2", &t).unwrap();
        let s = parse_expression("-z0^2 + 2*z0*z1 - z1^2", &t).unwrap();
        assert_eq!(r, s);
    }

    #[test]
    fn negative_powers_need_units() {
        let t = table();
        assert!(parse_expression("z0^-2", &t).is_ok());
        assert!(matches!(
            parse_expression("z1^-1", &t),
            Err(Error::NotAUnit(_))
        ));
        // (2 + zeta0*zeta1)^-1 exists because the perturbation is nilpotent.
        let u = parse_expression("(2 + zeta0*zeta1)^-1", &t).unwrap();
        let v = parse_expression("2 + zeta0*zeta1", &t).unwrap();
        assert!((&u * &v).is_one());
    }

    #[test]
    fn reports_positions_and_unknown_variables() {
        let t = table();
        match parse_expression("z0 + ", &t) {
            Err(Error::SyntaxError { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected: {other:?}"),
        }
        match parse_expression("z0 + q3", &t) {
            Err(Error::UnknownVariable(name)) => assert_eq!(name, "q3"),
            other => panic!("unexpected: {other:?}"),
        }
        assert!(matches!(
            parse_expression("z0 ) z1", &t),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_expression("1/0", &t),
            Err(Error::SyntaxError { .. })
        ));
    }

    #[test]
    fn rational_literals() {
        let t = table();
        let p = parse_expression("3/6", &t).unwrap();
        assert_eq!(p.as_scalar().unwrap(), Scalar::ratio(1, 2));
        let q = parse_expression("2^-3", &t).unwrap();
        assert_eq!(q.as_scalar().unwrap(), Scalar::ratio(1, 8));
    }
}
