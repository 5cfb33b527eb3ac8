//! Parser for rational expressions in `z` and `w`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' unary)?
//! atom    := integer | 'z' | 'w' | 'f' | '(' expr ')'
//! ```
//!
//! `f` is a synonym for `w`. Exponents must evaluate to nonnegative integer
//! constants. Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bivariate::WPoly;
use crate::equation::{EquationKind, REq};
use crate::error::Result;
use crate::ratfunc::RatFunc;
use crate::rational::Rat;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at position {pos} is not a nonnegative integer constant")]
    NonIntegerExponent { pos: usize },
    #[error("exponent at position {pos} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { pos: usize },
    #[error("denominator is identically zero")]
    DivisionByZero,
    #[error("variable '{name}' at position {pos} is not allowed here")]
    UnexpectedVariable { pos: usize, name: char },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Z,
    W,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Base, exponent, and the exponent's position in the source.
    Pow(Box<Expr>, Box<Expr>, usize),
}

impl fmt::Display for Expr {
    /// Fully parenthesised rendering, handy for checking structure.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Z => f.write_str("z"),
            Expr::W => f.write_str("w"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, b, _) => write!(f, "({a} ^ {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Op(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    it.next();
                }
                if it.peek().is_some_and(|&(_, d)| d == '.') {
                    return Err(ParseError::Syntax {
                        pos: pos + s.len(),
                        msg: "decimal literals are not supported; write p/q".into(),
                    });
                }
                out.push((Tok::Int(s.parse().unwrap()), pos));
            }
            'z' | 'w' => {
                out.push((Tok::Var(c), pos));
                it.next();
            }
            'f' => {
                out.push((Tok::Var('w'), pos));
                it.next();
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((Tok::Op(c), pos));
                it.next();
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn eat(&mut self, op: char) -> bool {
        if *self.peek() == Tok::Op(op) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp), pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let tok = self.peek().clone();
        match tok {
            Tok::Int(n) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Tok::Var('z') => {
                self.at += 1;
                Ok(Expr::Z)
            }
            Tok::Var(_) => {
                self.at += 1;
                Ok(Expr::W)
            }
            Tok::Op('(') => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(e)
            }
            Tok::End => self.error("unexpected end of input"),
            Tok::Op(c) => self.error(&format!("unexpected '{c}'")),
        }
    }
}

/// Parses text into an expression tree.
pub fn parse_ast(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// A quotient of two elements of Q[z][w].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: WPoly,
    pub den: WPoly,
}

impl Fraction {
    fn from_poly(p: WPoly) -> Self {
        Fraction { num: p, den: WPoly::one() }
    }

    fn reduced(num: WPoly, den: WPoly) -> Result<Self, ParseError> {
        if den.is_zero() {
            return Err(ParseError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Fraction::from_poly(WPoly::zero()));
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num.div_exact(&g).expect("gcd divides"),
            den: den.div_exact(&g).expect("gcd divides"),
        })
    }
}

fn constant_value(e: &Expr) -> Option<Rat> {
    Some(match e {
        Expr::Int(n) => Rat::from_integer(n.clone()),
        Expr::Z | Expr::W => return None,
        Expr::Neg(a) => -constant_value(a)?,
        Expr::Add(a, b) => constant_value(a)? + constant_value(b)?,
        Expr::Sub(a, b) => constant_value(a)? - constant_value(b)?,
        Expr::Mul(a, b) => constant_value(a)? * constant_value(b)?,
        Expr::Div(a, b) => {
            let d = constant_value(b)?;
            if d.is_zero() {
                return None;
            }
            constant_value(a)? / d
        }
        Expr::Pow(a, b, _) => {
            let base = constant_value(a)?;
            let e = constant_value(b)?;
            if !e.is_integer() || e.is_negative() || e > Rat::from_integer(MAX_EXPONENT.into()) {
                return None;
            }
            num_traits::pow(base, e.to_integer().to_usize()?)
        }
    })
}

/// Evaluates an expression tree to a reduced fraction.
pub fn evaluate(e: &Expr) -> Result<Fraction, ParseError> {
    Ok(match e {
        Expr::Int(n) => Fraction::from_poly(WPoly::constant(Rat::from_integer(n.clone()))),
        Expr::Z => Fraction::from_poly(WPoly::z()),
        Expr::W => Fraction::from_poly(WPoly::w()),
        Expr::Neg(a) => {
            let a = evaluate(a)?;
            Fraction { num: -&a.num, den: a.den }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (a, b) = (evaluate(a)?, evaluate(b)?);
            let l = &a.num * &b.den;
            let r = &b.num * &a.den;
            let num = if matches!(e, Expr::Add(..)) { &l + &r } else { &l - &r };
            Fraction::reduced(num, &a.den * &b.den)?
        }
        Expr::Mul(a, b) => {
            let (a, b) = (evaluate(a)?, evaluate(b)?);
            Fraction::reduced(&a.num * &b.num, &a.den * &b.den)?
        }
        Expr::Div(a, b) => {
            let (a, b) = (evaluate(a)?, evaluate(b)?);
            Fraction::reduced(&a.num * &b.den, &a.den * &b.num)?
        }
        Expr::Pow(a, b, pos) => {
            let exp = constant_value(b)
                .filter(|x| x.is_integer() && !x.is_negative())
                .ok_or(ParseError::NonIntegerExponent { pos: *pos })?;
            let n = exp
                .to_integer()
                .to_u32()
                .filter(|&n| n <= MAX_EXPONENT)
                .ok_or(ParseError::ExponentTooLarge { pos: *pos })?;
            let a = evaluate(a)?;
            Fraction {
                num: a.num.pow(n),
                den: a.den.pow(n),
            }
        }
    })
}

/// Parses and evaluates a rational expression in `z` and `w`.
pub fn parse_expression(text: &str) -> Result<Fraction, ParseError> {
    evaluate(&parse_ast(text)?)
}

/// Parses `R(z, w)` and canonicalises it as an equation of the given kind.
pub fn parse_equation(kind: EquationKind, text: &str) -> Result<REq> {
    let fr = parse_expression(text)?;
    REq::from_rational(kind, &fr.num, &fr.den)
}

/// Parses a rational function of `z` alone.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let ast = parse_ast(text)?;
    if let Some((_, pos)) = tokenize(text)?.into_iter().find(|(t, _)| *t == Tok::Var('w')) {
        let name = text[pos..].chars().next().unwrap();
        return Err(ParseError::UnexpectedVariable { pos, name }.into());
    }
    let fr = evaluate(&ast)?;
    RatFunc::reduce(&fr.num.coeff(0), &fr.den.coeff(0))
}
