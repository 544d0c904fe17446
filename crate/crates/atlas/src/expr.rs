//! The integer mini-language used by parameterized dataset rows.
//!
//! ```text
//! or    := and ("||" and)*
//! and   := cmp ("&&" cmp)*
//! cmp   := sum (("==" | "!=" | "<=" | ">=" | "<" | ">") sum)?
//! sum   := prod (("+" | "-") prod)*
//! prod  := unary (("*" | "·" | "/") unary)*
//! unary := "-" unary | atom
//! atom  := integer | name | "(" or ")"
//! ```
//!
//! Arithmetic is checked `i64`; `/` is exact division and fails on a remainder.
//! `−` (U+2212) is accepted as a minus sign.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub type Env = BTreeMap<String, i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("`{expr}` at offset {pos}: {message}")]
    Syntax { expr: String, pos: usize, message: String },
    #[error("unknown parameter `{0}`")]
    UnknownVar(String),
    #[error("expected {expected} value in `{expr}`")]
    Type { expr: String, expected: &'static str },
    #[error("{num} is not divisible by {den}")]
    InexactDivision { num: i64, den: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("integer overflow")]
    Overflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::Lt => "<",
            BinOp::Le => "<=",
            BinOp::Gt => ">",
            BinOp::Ge => ">=",
            BinOp::And => "&&",
            BinOp::Or => "||",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        let tokens = tokenize(src)?;
        let mut p = Parser { src, tokens, at: 0 };
        let e = p.or()?;
        if p.at < p.tokens.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, env: &Env) -> Result<Value, ExprError> {
        match self {
            Expr::Int(n) => Ok(Value::Int(*n)),
            Expr::Var(v) => env.get(v).map(|&n| Value::Int(n)).ok_or_else(|| ExprError::UnknownVar(v.clone())),
            Expr::Neg(e) => Ok(Value::Int(e.int(env)?.checked_neg().ok_or(ExprError::Overflow)?)),
            Expr::Bin(op, a, b) => match op {
                BinOp::And => Ok(Value::Bool(a.boolean(env)? && b.boolean(env)?)),
                BinOp::Or => Ok(Value::Bool(a.boolean(env)? || b.boolean(env)?)),
                _ => {
                    let (x, y) = (a.int(env)?, b.int(env)?);
                    let arith = |r: Option<i64>| r.map(Value::Int).ok_or(ExprError::Overflow);
                    match op {
                        BinOp::Add => arith(x.checked_add(y)),
                        BinOp::Sub => arith(x.checked_sub(y)),
                        BinOp::Mul => arith(x.checked_mul(y)),
                        BinOp::Div => {
                            if y == 0 {
                                Err(ExprError::DivisionByZero)
                            } else if x % y != 0 {
                                Err(ExprError::InexactDivision { num: x, den: y })
                            } else {
                                Ok(Value::Int(x / y))
                            }
                        }
                        BinOp::Eq => Ok(Value::Bool(x == y)),
                        BinOp::Ne => Ok(Value::Bool(x != y)),
                        BinOp::Lt => Ok(Value::Bool(x < y)),
                        BinOp::Le => Ok(Value::Bool(x <= y)),
                        BinOp::Gt => Ok(Value::Bool(x > y)),
                        BinOp::Ge => Ok(Value::Bool(x >= y)),
                        BinOp::And | BinOp::Or => unreachable!(),
                    }
                }
            },
        }
    }

    pub fn int(&self, env: &Env) -> Result<i64, ExprError> {
        match self.eval(env)? {
            Value::Int(n) => Ok(n),
            Value::Bool(_) => Err(ExprError::Type { expr: self.to_string(), expected: "an integer" }),
        }
    }

    pub fn boolean(&self, env: &Env) -> Result<bool, ExprError> {
        match self.eval(env)? {
            Value::Bool(b) => Ok(b),
            Value::Int(_) => Err(ExprError::Type { expr: self.to_string(), expected: "a boolean" }),
        }
    }
}

/// Parses and evaluates an integer expression.
pub fn eval_int(src: &str, env: &Env) -> Result<i64, ExprError> {
    Expr::parse(src)?.int(env)
}

/// Parses and evaluates a condition.
pub fn eval_bool(src: &str, env: &Env) -> Result<bool, ExprError> {
    Expr::parse(src)?.boolean(env)
}

impl fmt::Display for Expr {
    /// Fully parenthesised, so that the output re-parses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) if *n < 0 => write!(f, "(-{})", n.unsigned_abs()),
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Bin(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Name(String),
    Op(BinOp),
    Minus,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let err = |pos: usize, message: &str| ExprError::Syntax {
        expr: src.to_string(),
        pos,
        message: message.to_string(),
    };
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let two = |op: BinOp| (2usize, Tok::Op(op));
        let (len, tok) = match (c, next) {
            (c, _) if c.is_whitespace() => {
                i += 1;
                continue;
            }
            (c, _) if c.is_ascii_digit() => {
                let end = chars[i..].iter().position(|&(_, c)| !c.is_ascii_digit()).map_or(chars.len(), |k| i + k);
                let text: String = chars[i..end].iter().map(|&(_, c)| c).collect();
                let n = text.parse().map_err(|_| err(pos, "integer literal out of range"))?;
                (end - i, Tok::Int(n))
            }
            (c, _) if c.is_ascii_alphabetic() || c == '_' => {
                let end = chars[i..]
                    .iter()
                    .position(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
                    .map_or(chars.len(), |k| i + k);
                (end - i, Tok::Name(chars[i..end].iter().map(|&(_, c)| c).collect()))
            }
            ('=', Some('=')) => two(BinOp::Eq),
            ('!', Some('=')) => two(BinOp::Ne),
            ('<', Some('=')) => two(BinOp::Le),
            ('>', Some('=')) => two(BinOp::Ge),
            ('&', Some('&')) => two(BinOp::And),
            ('|', Some('|')) => two(BinOp::Or),
            ('<', _) => (1, Tok::Op(BinOp::Lt)),
            ('>', _) => (1, Tok::Op(BinOp::Gt)),
            ('+', _) => (1, Tok::Op(BinOp::Add)),
            ('-' | '−', _) => (1, Tok::Minus),
            ('*' | '·', _) => (1, Tok::Op(BinOp::Mul)),
            ('/', _) => (1, Tok::Op(BinOp::Div)),
            ('(', _) => (1, Tok::Open),
            (')', _) => (1, Tok::Close),
            _ => return Err(err(pos, &format!("unexpected character `{c}`"))),
        };
        out.push((pos, tok));
        i += len;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ExprError {
        let pos = self.tokens.get(self.at).map_or(self.src.len(), |t| t.0);
        ExprError::Syntax { expr: self.src.to_string(), pos, message: message.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.1)
    }

    /// Consumes the next token if it is one of `ops`, mapping `-` to subtraction.
    fn take_op(&mut self, ops: &[BinOp]) -> Option<BinOp> {
        let op = match self.peek()? {
            Tok::Op(op) => *op,
            Tok::Minus => BinOp::Sub,
            _ => return None,
        };
        if ops.contains(&op) {
            self.at += 1;
            Some(op)
        } else {
            None
        }
    }

    fn left_assoc(
        &mut self,
        ops: &[BinOp],
        next: fn(&mut Self) -> Result<Expr, ExprError>,
    ) -> Result<Expr, ExprError> {
        let mut e = next(self)?;
        while let Some(op) = self.take_op(ops) {
            e = Expr::Bin(op, Box::new(e), Box::new(next(self)?));
        }
        Ok(e)
    }

    fn or(&mut self) -> Result<Expr, ExprError> {
        self.left_assoc(&[BinOp::Or], Self::and)
    }

    fn and(&mut self) -> Result<Expr, ExprError> {
        self.left_assoc(&[BinOp::And], Self::cmp)
    }

    fn cmp(&mut self) -> Result<Expr, ExprError> {
        let a = self.sum()?;
        let ops = [BinOp::Eq, BinOp::Ne, BinOp::Lt, BinOp::Le, BinOp::Gt, BinOp::Ge];
        match self.take_op(&ops) {
            Some(op) => Ok(Expr::Bin(op, Box::new(a), Box::new(self.sum()?))),
            None => Ok(a),
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        self.left_assoc(&[BinOp::Add, BinOp::Sub], Self::prod)
    }

    fn prod(&mut self) -> Result<Expr, ExprError> {
        self.left_assoc(&[BinOp::Mul, BinOp::Div], Self::unary)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("unexpected end of expression"));
        };
        self.at += 1;
        match tok {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Name(v) => Ok(Expr::Var(v)),
            Tok::Open => {
                let e = self.or()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.at += 1;
                Ok(e)
            }
            _ => {
                self.at -= 1;
                Err(self.error("expected a number, a name or `(`"))
            }
        }
    }
}
