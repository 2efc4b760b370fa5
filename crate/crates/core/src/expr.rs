//! A small expression language for formulas over the non-backtracking matrix.
//!
//! Formulas are stored as text and parsed into [`Expr`] trees:
//!
//! | syntax            | meaning                                         |
//! |-------------------|-------------------------------------------------|
//! | `B`, `Btri`, ...  | named matrix, vector or scalar                  |
//! | `X ^ k`           | operator power                                  |
//! | `X'`              | transpose                                       |
//! | `X @ Y`           | operator product (matrix-matrix or matrix-vector)|
//! | `X * Y`           | entry-wise product, or scaling by a scalar      |
//! | `X / k`           | exact division by an integer                    |
//! | `X + Y`, `X - Y`  | sums; an integer next to a matrix means `k J`   |
//! | `rowsum(M)`       | `M 1`                                           |
//! | `colsum(M)`       | `1ᵀ M`, as a vector over the column edge        |
//! | `sum(X)`          | sum of all entries                              |
//! | `diag(M)`         | main diagonal as a vector                       |
//! | `under(X)`        | row reversal (vector: `x[rev e]`)               |
//! | `over(M)`         | column reversal                                 |
//! | `binom(X, k)`     | entry-wise binomial coefficient                 |
//! | `gamma(x)`        | per-vertex sum over out-edges                   |
//! | `outer(x, y)`     | rank-one matrix `x yᵀ`                          |
//!
//! `*`, `@` and `/` share one precedence level and associate to the left.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    MatMul,
    Hadamard,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    RowSum,
    ColSum,
    Sum,
    Diag,
    Under,
    Over,
    Binom,
    Gamma,
    Outer,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "rowsum" => Func::RowSum,
            "colsum" => Func::ColSum,
            "sum" => Func::Sum,
            "diag" => Func::Diag,
            "under" => Func::Under,
            "over" => Func::Over,
            "binom" => Func::Binom,
            "gamma" => Func::Gamma,
            "outer" => Func::Outer,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::RowSum => "rowsum",
            Func::ColSum => "colsum",
            Func::Sum => "sum",
            Func::Diag => "diag",
            Func::Under => "under",
            Func::Over => "over",
            Func::Binom => "binom",
            Func::Gamma => "gamma",
            Func::Outer => "outer",
        }
    }

    fn arity(self) -> usize {
        match self {
            Func::Binom | Func::Outer => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(i64),
    Name(String),
    Pow(Box<Expr>, u32),
    Transpose(Box<Expr>),
    Neg(Box<Expr>),
    Call(Func, Vec<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0, text };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Names referenced anywhere in the tree.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Name(n) => out.push(n.clone()),
            Expr::Pow(x, _) | Expr::Transpose(x) | Expr::Neg(x) => x.collect_names(out),
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_names(out)),
            Expr::Bin(_, a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
        }
    }

    /// Every integer divisor appearing in a `/ k` node.
    pub fn divisors(&self) -> Vec<i64> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let Expr::Bin(BinOp::Div, _, d) = e {
                if let Expr::Int(k) = **d {
                    out.push(k);
                }
            }
        });
        out
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Int(_) | Expr::Name(_) => {}
            Expr::Pow(x, _) | Expr::Transpose(x) | Expr::Neg(x) => x.visit(f),
            Expr::Call(_, args) => args.iter().for_each(|a| a.visit(f)),
            Expr::Bin(_, a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Name(n) => write!(f, "{n}"),
            Expr::Pow(x, k) => write!(f, "{}^{k}", Atom(x)),
            Expr::Transpose(x) => write!(f, "{}'", Atom(x)),
            Expr::Neg(x) => write!(f, "-{}", Atom(x)),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            Expr::Bin(op, a, b) => {
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::MatMul => "@",
                    BinOp::Hadamard => "*",
                    BinOp::Div => "/",
                };
                write!(f, "({a} {sym} {b})")
            }
        }
    }
}

struct Atom<'a>(&'a Expr);

impl fmt::Display for Atom<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Expr::Int(_) | Expr::Name(_) | Expr::Call(..) | Expr::Bin(..) => write!(f, "{}", self.0),
            other => write!(f, "({other})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
            let value = text[pos..end].parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad integer at column {pos} in `{text}`"),
            })?;
            out.push((pos, Tok::Int(value)));
            i = j;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_') {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
            out.push((pos, Tok::Ident(text[pos..end].to_string())));
            i = j;
        } else if "()+-*/@^',".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                line: 0,
                message: format!("unexpected `{c}` at column {pos} in `{text}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        let col = self.tokens.get(self.pos).map_or(self.text.len(), |t| t.0);
        Error::Parse {
            line: 0,
            message: format!("{what} at column {col} in `{}`", self.text),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                BinOp::Hadamard
            } else if self.eat('@') {
                BinOp::MatMul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        loop {
            if self.eat('\'') {
                e = Expr::Transpose(Box::new(e));
            } else if self.eat('^') {
                match self.peek().cloned() {
                    Some(Tok::Int(k)) if k >= 1 => {
                        self.pos += 1;
                        e = Expr::Pow(Box::new(e), k as u32);
                    }
                    _ => return Err(self.error("expected a positive power")),
                }
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                Ok(Expr::Int(k))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(func) = Func::from_name(&name) {
                    self.expect('(')?;
                    let mut args = vec![self.expr()?];
                    while self.eat(',') {
                        args.push(self.expr()?);
                    }
                    self.expect(')')?;
                    if args.len() != func.arity() {
                        return Err(self.error(&format!("`{name}` takes {} argument(s)", func.arity())));
                    }
                    Ok(Expr::Call(func, args))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(self.error("expected an operand")),
        }
    }
}
