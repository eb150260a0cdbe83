//! Lexer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr    = sum
//! sum     = product { ("+" | "-") product }
//! product = tensor { ("*" | "/" | <juxtaposition>) tensor }
//! tensor  = unary { "x" unary }
//! unary   = "-" unary | power
//! power   = atom [ "^" ["-"] INT ]
//! atom    = INT | NAME | NAME "(" [ expr { "," expr } ] ")"
//!         | "(" expr { "," expr } ")"
//! NAME    = ident { "." ident }
//! ```
//!
//! `x` is reserved for the tensor product (Unicode `⊗` and `⊕` are accepted
//! for `x` and `+`).

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at {span}: {msg}")]
pub struct ParseError {
    pub span: Span,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Name(String),
    Call(String, Vec<Expr>),
    Tuple(Vec<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn name(&self) -> Option<&str> {
        match &self.kind {
            ExprKind::Name(n) => Some(n),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Name(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Int(s.parse().expect("digits")), span));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                let dot_ok = d == '.' && !s.is_empty() && !s.ends_with('.');
                if d.is_alphanumeric() || d == '_' || dot_ok {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            if s.ends_with('.') {
                return Err(ParseError {
                    span,
                    msg: format!("malformed name `{s}`"),
                });
            }
            out.push((Tok::Name(s), span));
            continue;
        }
        let sym = match c {
            '⊗' => 'x',
            '⊕' => '+',
            '(' | ')' | ',' | '+' | '-' | '*' | '/' | '^' => c,
            _ => {
                return Err(ParseError {
                    span,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        chars.next();
        col += 1;
        if sym == 'x' {
            out.push((Tok::Name("x".into()), span));
        } else {
            out.push((Tok::Sym(sym), span));
        }
    }
    out.push((Tok::Eof, Span { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            span: self.span(),
            msg: msg.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        self.err(format!("expected {wanted}, found {}", self.peek()))
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn is_tensor_op(&self) -> bool {
        matches!(self.peek(), Tok::Name(n) if n == "x")
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::Int(_) | Tok::Sym('(') => true,
            Tok::Name(n) => n != "x",
            _ => false,
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, span) = self.bump();
            let rhs = self.product()?;
            lhs = Expr {
                kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.tensor()?;
        loop {
            let (op, span) = match self.peek() {
                Tok::Sym('*') => (BinOp::Mul, self.bump().1),
                Tok::Sym('/') => (BinOp::Div, self.bump().1),
                _ if self.starts_atom() => (BinOp::Mul, self.span()),
                _ => return Ok(lhs),
            };
            let rhs = self.tensor()?;
            lhs = Expr {
                kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.is_tensor_op() {
            let (_, span) = self.bump();
            let rhs = self.unary()?;
            lhs = Expr {
                kind: ExprKind::Bin(BinOp::Tensor, Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            let (_, span) = self.bump();
            let inner = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        let (_, span) = self.bump();
        let neg = self.eat('-');
        let Tok::Int(n) = self.peek().clone() else {
            return self.unexpected("an integer exponent");
        };
        self.bump();
        let Ok(mut k) = i64::try_from(&n) else {
            return Err(ParseError {
                span,
                msg: "exponent out of range".into(),
            });
        };
        if neg {
            k = -k;
        }
        Ok(Expr {
            kind: ExprKind::Pow(Box::new(base), k),
            span,
        })
    }

    fn list(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut items = Vec::new();
        if self.eat(')') {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if self.eat(',') {
                continue;
            }
            if self.eat(')') {
                return Ok(items);
            }
            if *self.peek() == Tok::Eof {
                return self.unexpected("`)`");
            }
            return self.unexpected("`,` or `)`");
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Int(n),
                    span,
                })
            }
            Tok::Name(n) if n != "x" => {
                self.bump();
                if self.eat('(') {
                    let args = self.list()?;
                    Ok(Expr {
                        kind: ExprKind::Call(n, args),
                        span,
                    })
                } else {
                    Ok(Expr {
                        kind: ExprKind::Name(n),
                        span,
                    })
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let mut items = self.list()?;
                match items.len() {
                    0 => Err(ParseError {
                        span,
                        msg: "empty parentheses".into(),
                    }),
                    1 => Ok(items.pop().expect("one item")),
                    _ => Ok(Expr {
                        kind: ExprKind::Tuple(items),
                        span,
                    }),
                }
            }
            _ => self.unexpected("an expression"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.unexpected("end of input");
    }
    Ok(e)
}
