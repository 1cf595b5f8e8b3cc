//! Line-oriented input grammar, ';'-terminated:
//!
//! ```text
//! char 32003;
//! ring x y;            ring x1..x6;
//! matrix M = generic 2 3;   symmetric 3;   catalecticant 2;   [x, y; y, z];
//! ideal I = y^2 - x^3, x*y;  ideal J = minors 2 M;
//! check battery I;     check rees I;      check ft I 1;   ...
//! ```
//!
//! Polynomial expressions use explicit `*`, `^` with integer exponents,
//! parentheses, and integer coefficients.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixSpec {
    Generic(usize, usize),
    Symmetric(usize),
    Catalecticant(usize),
    Literal(Vec<Vec<Expr>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    Polys(Vec<Expr>),
    Minors(usize, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub op: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Char(u32),
    Ring(Vec<String>),
    Matrix(String, MatrixSpec),
    Ideal(String, IdealSpec),
    Check(CheckSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    DotDot,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            while let Some(c) = self.peek() {
                if c == b'#' {
                    // comment to end of line
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                } else if c.is_ascii_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.peek() else {
                return Ok(out);
            };
            let tok = match c {
                b'+' => {
                    self.bump();
                    Tok::Plus
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'*' => {
                    self.bump();
                    Tok::Star
                }
                b'^' => {
                    self.bump();
                    Tok::Caret
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b'[' => {
                    self.bump();
                    Tok::LBracket
                }
                b']' => {
                    self.bump();
                    Tok::RBracket
                }
                b',' => {
                    self.bump();
                    Tok::Comma
                }
                b';' => {
                    self.bump();
                    Tok::Semi
                }
                b'=' => {
                    self.bump();
                    Tok::Eq
                }
                b'.' => {
                    self.bump();
                    if self.peek() == Some(b'.') {
                        self.bump();
                        Tok::DotDot
                    } else {
                        return Err(self.error("expected `..`"));
                    }
                }
                b'0'..=b'9' => {
                    let mut v: i64 = 0;
                    while let Some(d) = self.peek() {
                        if d.is_ascii_digit() {
                            v = v
                                .checked_mul(10)
                                .and_then(|v| v.checked_add((d - b'0') as i64))
                                .ok_or_else(|| self.error("integer literal overflow"))?;
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Int(v)
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut s = String::new();
                    while let Some(d) = self.peek() {
                        if d.is_ascii_alphanumeric() || d == b'_' || d == b'\'' {
                            s.push(d as char);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(s)
                }
                other => {
                    return Err(self.error(format!("unexpected character `{}`", other as char)))
                }
            };
            out.push((tok, line, col));
        }
    }
}

pub struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    pub fn parse(src: &str) -> Result<Vec<Stmt>, ParseError> {
        let toks = Lexer::new(src).tokens()?;
        let mut p = Parser { toks, pos: 0 };
        let mut stmts = Vec::new();
        while !p.at_end() {
            stmts.push(p.statement()?);
        }
        Ok(stmts)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn next(&mut self) -> Result<Tok, ParseError> {
        let t = self
            .toks
            .get(self.pos)
            .map(|(t, _, _)| t.clone())
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        let got = self.next()?;
        if got == t {
            Ok(())
        } else {
            self.pos -= 1;
            Err(self.error(format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.next()? {
            Tok::Ident(s) => Ok(s),
            _ => {
                self.pos -= 1;
                Err(self.error(format!("expected {what}")))
            }
        }
    }

    fn uint(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.next()? {
            Tok::Int(v) if v >= 0 => Ok(v as usize),
            _ => {
                self.pos -= 1;
                Err(self.error(format!("expected {what}")))
            }
        }
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let kw = self.ident("a statement keyword (char, ring, matrix, ideal, check)")?;
        let stmt = match kw.as_str() {
            "char" => {
                let p = self.uint("a characteristic")?;
                Stmt::Char(p as u32)
            }
            "ring" => {
                let mut names = Vec::new();
                loop {
                    match self.peek() {
                        Some(Tok::Ident(_)) => {
                            let base = self.ident("a variable name")?;
                            // x1..x6 range shorthand
                            if self.peek() == Some(&Tok::DotDot) {
                                self.next()?;
                                let end = self.ident("the range end")?;
                                let (stem_a, a) = split_trailing_number(&base)
                                    .ok_or_else(|| self.error("range start must end in a number"))?;
                                let (stem_b, b) = split_trailing_number(&end)
                                    .ok_or_else(|| self.error("range end must end in a number"))?;
                                if stem_a != stem_b || b < a {
                                    return Err(self.error("malformed variable range"));
                                }
                                for i in a..=b {
                                    names.push(format!("{stem_a}{i}"));
                                }
                            } else {
                                names.push(base);
                            }
                        }
                        Some(Tok::Semi) => break,
                        _ => return Err(self.error("expected a variable name or `;`")),
                    }
                }
                if names.is_empty() {
                    return Err(self.error("ring needs at least one variable"));
                }
                Stmt::Ring(names)
            }
            "matrix" => {
                let name = self.ident("a matrix name")?;
                self.expect(Tok::Eq, "`=`")?;
                let spec = self.matrix_spec()?;
                Stmt::Matrix(name, spec)
            }
            "ideal" => {
                let name = self.ident("an ideal name")?;
                self.expect(Tok::Eq, "`=`")?;
                if self.peek() == Some(&Tok::Semi) {
                    return Err(self.error("ideal needs at least one generator"));
                }
                let spec = if let Some(Tok::Ident(w)) = self.peek() {
                    if w == "minors" {
                        self.next()?;
                        let t = self.uint("a minor size")?;
                        let m = self.ident("a matrix name")?;
                        IdealSpec::Minors(t, m)
                    } else {
                        IdealSpec::Polys(self.expr_list()?)
                    }
                } else {
                    IdealSpec::Polys(self.expr_list()?)
                };
                Stmt::Ideal(name, spec)
            }
            "check" => {
                let op = self.ident("an operation name")?;
                let mut args = Vec::new();
                loop {
                    match self.peek() {
                        Some(Tok::Semi) => break,
                        Some(Tok::Ident(_)) => args.push(self.ident("argument")?),
                        Some(Tok::Int(_)) => {
                            let v = self.uint("argument")?;
                            args.push(v.to_string());
                        }
                        _ => return Err(self.error("expected an argument or `;`")),
                    }
                }
                Stmt::Check(CheckSpec { op, args })
            }
            other => return Err(self.error(format!("unknown statement `{other}`"))),
        };
        self.expect(Tok::Semi, "`;`")?;
        Ok(stmt)
    }

    fn matrix_spec(&mut self) -> Result<MatrixSpec, ParseError> {
        match self.peek() {
            Some(Tok::Ident(w)) => {
                let w = w.clone();
                self.next()?;
                match w.as_str() {
                    "generic" => {
                        let r = self.uint("row count")?;
                        let c = self.uint("column count")?;
                        Ok(MatrixSpec::Generic(r, c))
                    }
                    "symmetric" => Ok(MatrixSpec::Symmetric(self.uint("size")?)),
                    "catalecticant" => Ok(MatrixSpec::Catalecticant(self.uint("shift")?)),
                    _ => Err(self.error("expected generic, symmetric, catalecticant or [rows]")),
                }
            }
            Some(Tok::LBracket) => {
                self.next()?;
                let mut rows = Vec::new();
                loop {
                    let mut row = vec![self.expr()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.next()?;
                        row.push(self.expr()?);
                    }
                    rows.push(row);
                    match self.next()? {
                        Tok::Semi => continue,
                        Tok::RBracket => break,
                        _ => {
                            self.pos -= 1;
                            return Err(self.error("expected `;` between rows or `]`"));
                        }
                    }
                }
                Ok(MatrixSpec::Literal(rows))
            }
            _ => Err(self.error("expected a matrix description")),
        }
    }

    fn expr_list(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut out = vec![self.expr()?];
        while self.peek() == Some(&Tok::Comma) {
            self.next()?;
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next()?;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.next()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next()?;
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = match self.next()? {
            Tok::Minus => return Ok(Expr::Neg(Box::new(self.factor()?))),
            Tok::Int(v) => Expr::Int(v),
            Tok::Ident(s) => Expr::Var(s),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                e
            }
            _ => {
                self.pos -= 1;
                return Err(self.error("expected a polynomial factor"));
            }
        };
        if self.peek() == Some(&Tok::Caret) {
            self.next()?;
            let e = self.uint("an exponent")?;
            if e > u32::MAX as usize {
                return Err(self.error("exponent too large"));
            }
            return Ok(Expr::Pow(Box::new(base), e as u32));
        }
        Ok(base)
    }
}

fn split_trailing_number(s: &str) -> Option<(&str, usize)> {
    let digits = s.chars().rev().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 || digits == s.len() {
        return None;
    }
    let (stem, num) = s.split_at(s.len() - digits);
    num.parse().ok().map(|n| (stem, n))
}
