//! Recursive-descent parser for polynomial expressions over Q(t).
//!
//! expr := ['-'] term (('+'|'-') term)*
//! term := factor (('*'|'/') factor)*
//! factor := base ('^' ['-'] integer)?
//! base := integer | 't' | identifier | '(' expr ')'

use num_bigint::BigInt;

use super::mpoly::MPoly;
use super::rat::Rat;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = b[st..i].iter().collect();
            out.push((st, Tok::Int(txt.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            out.push((st, Tok::Ident(b[st..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                let neg = self.eat('-');
                let t = self.term()?;
                acc = if neg { &acc - &t } else { &acc + &t };
            } else if self.eat('-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let f = self.factor()?;
                acc = &acc * &f;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.pos();
                self.i += 1;
                let f = self.factor()?;
                acc = divide(&acc, &f).map_err(|m| Error::Parse { pos: at, msg: m })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.base()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let at = self.pos();
            let Some(Tok::Int(n)) = self.peek().cloned() else { return self.err("expected integer exponent") };
            self.i += 1;
            let n: i64 = i64::try_from(n).map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
            let n = if neg { -n } else { n };
            return power(&base, n).map_err(|m| Error::Parse { pos: at, msg: m });
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(MPoly::constant_in(self.vars.clone(), RatFunc::from_rat(Rat::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == "t" {
                    return Ok(MPoly::constant_in(self.vars.clone(), RatFunc::t()));
                }
                if !self.vars.contains(&name) {
                    self.vars.push(name.clone());
                }
                MPoly::var_in(self.vars.clone(), &name)
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn power(b: &MPoly, n: i64) -> std::result::Result<MPoly, String> {
    if n >= 0 {
        return Ok(b.pow(n as u32));
    }
    let inv = invert_unit(b)?;
    Ok(inv.pow((-n) as u32))
}

fn invert_unit(b: &MPoly) -> std::result::Result<MPoly, String> {
    if b.len() != 1 {
        return Err("division by a non-unit".into());
    }
    let (e, c) = b.terms().next().unwrap();
    let ne: Vec<i32> = e.iter().map(|x| -x).collect();
    let ci = c.inv().map_err(|_| "division by zero".to_string())?;
    Ok(MPoly::monomial_in(b.vars().to_vec(), ne, ci))
}

fn divide(a: &MPoly, b: &MPoly) -> std::result::Result<MPoly, String> {
    if b.is_zero() {
        return Err("division by zero".into());
    }
    if let Some(c) = b.as_constant() {
        return Ok(a.scale(&c.inv().unwrap()));
    }
    Ok(a * &invert_unit(b)?)
}

/// Parses with the ring inferred from the identifiers, in order of appearance.
pub fn parse_expr(s: &str) -> Result<MPoly> {
    parse_expr_in(s, &[])
}

/// Parses in a ring that starts with the declared variables.
pub fn parse_expr_in(s: &str, vars: &[&str]) -> Result<MPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, i: 0, end: s.chars().count(), vars: vars.iter().map(|v| v.to_string()).collect() };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return p.err("trailing input");
    }
    let vars = p.vars.clone();
    e.in_ring(&vars)
}
