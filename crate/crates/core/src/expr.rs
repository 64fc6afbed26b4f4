//! Integer expressions in a single variable `i` (the tile length), e.g.
//! `i*(i-1)/2`. Supports `+ - * /`, parentheses, unary minus and integer
//! literals. Division truncates toward zero.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthExpr {
    Const(i64),
    Var,
    Neg(Box<LengthExpr>),
    Bin(Op, Box<LengthExpr>, Box<LengthExpr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl LengthExpr {
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = ExprParser { src: s.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.ws();
        if p.pos != p.src.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }

    pub fn eval(&self, i: i64) -> Result<i64> {
        let overflow = || Error::Domain(format!("overflow evaluating {self} at i = {i}"));
        Ok(match self {
            LengthExpr::Const(c) => *c,
            LengthExpr::Var => i,
            LengthExpr::Neg(e) => e.eval(i)?.checked_neg().ok_or_else(overflow)?,
            LengthExpr::Bin(op, a, b) => {
                let (a, b) = (a.eval(i)?, b.eval(i)?);
                match op {
                    Op::Add => a.checked_add(b),
                    Op::Sub => a.checked_sub(b),
                    Op::Mul => a.checked_mul(b),
                    Op::Div => {
                        if b == 0 {
                            return Err(Error::Domain(format!("division by zero in {self} at i = {i}")));
                        }
                        a.checked_div(b)
                    }
                }
                .ok_or_else(overflow)?
            }
        })
    }
}

impl fmt::Display for LengthExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthExpr::Const(c) => write!(f, "{c}"),
            LengthExpr::Var => f.write_str("i"),
            LengthExpr::Neg(e) => write!(f, "-({e})"),
            LengthExpr::Bin(op, a, b) => {
                let s = match op {
                    Op::Add => "+",
                    Op::Sub => "-",
                    Op::Mul => "*",
                    Op::Div => "/",
                };
                write!(f, "({a}{s}{b})")
            }
        }
    }
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<LengthExpr> {
        let mut lhs = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            let op = if c == b'+' { Op::Add } else { Op::Sub };
            lhs = LengthExpr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<LengthExpr> {
        let mut lhs = self.atom()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.atom()?;
            let op = if c == b'*' { Op::Mul } else { Op::Div };
            lhs = LengthExpr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<LengthExpr> {
        match self.peek() {
            Some(b'i') => {
                self.pos += 1;
                Ok(LengthExpr::Var)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(LengthExpr::Neg(Box::new(self.atom()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                text.parse().map(LengthExpr::Const).map_err(|_| Error::Syntax {
                    pos: start,
                    msg: "integer literal out of range".into(),
                })
            }
            _ => self.err("expected 'i', integer, '-' or '('"),
        }
    }
}
