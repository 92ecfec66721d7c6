//! Polynomial coefficient tables of the focus-focus expansions.
//!
//! The tables live in `data/coefficients.txt`, one record per coefficient:
//! `family i j [k] : expression`. Expressions are polynomials in `R`, `t`,
//! `rA`, `sR` (square root of `R`) and, for the action-integrand family,
//! `p2`. The grammar accepts `+`, `-`, `*`, juxtaposition, parentheses,
//! integer literals and `^` with a non-negative integer exponent.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const DATA: &str = include_str!("../data/coefficients.txt");

/// Coefficient family, one per expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Birkhoff normal form.
    A,
    /// Action integrand near the singular fibre (depends on `p2`).
    B,
    /// Imaginary action.
    C,
    /// Lower root in `(l, h)`.
    D,
    /// Middle root in `(l, h)`.
    E,
    /// Upper root in `(l, h)`.
    F,
    /// Regular part of the period.
    H,
    /// Logarithmic part of the period.
    HL,
    /// Discriminant radius in `(l, j)`.
    U,
    /// Lower root in `(l, j)`.
    Alpha,
    /// Middle root in `(l, j)`.
    Beta,
    /// Upper root in `(l, j)`.
    Gamma,
    /// Squared elliptic modulus.
    Delta,
    /// Regular part of the rotation number.
    V,
    /// Logarithmic part of the rotation number.
    VL,
    /// Derivative of the invariant along `l`.
    Mu,
    /// Derivative of the invariant along `j`.
    Kappa,
}

impl Family {
    /// All families in data-file order.
    pub const ALL: [Family; 17] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::H,
        Family::HL,
        Family::U,
        Family::Alpha,
        Family::Beta,
        Family::Gamma,
        Family::Delta,
        Family::V,
        Family::VL,
        Family::Mu,
        Family::Kappa,
    ];

    /// Name used in the data file.
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::E => "e",
            Family::F => "f",
            Family::H => "h",
            Family::HL => "hL",
            Family::U => "u",
            Family::Alpha => "alpha",
            Family::Beta => "beta",
            Family::Gamma => "gamma",
            Family::Delta => "delta",
            Family::V => "v",
            Family::VL => "vL",
            Family::Mu => "mu",
            Family::Kappa => "kappa",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.iter().copied().find(|f| f.name() == s).ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// Values of the variables an expression may reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Variables {
    pub r: f64,
    pub t: f64,
    pub ra: f64,
    pub sr: f64,
    pub p2: f64,
}

impl Variables {
    /// Variables at a parameter point; `rA` and `sqrt(R)` are derived.
    pub fn at(r: f64, t: f64) -> Self {
        let ra2 = -r * r * (1.0 - 2.0 * t).powi(2) + 2.0 * r * t - t * t;
        Self { r, t, ra: ra2.max(0.0).sqrt(), sr: r.sqrt(), p2: 0.0 }
    }
}

/// Variable of a coefficient expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    R,
    T,
    RA,
    SR,
    P2,
}

/// Parsed polynomial expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Evaluates the expression.
    pub fn eval(&self, v: &Variables) -> f64 {
        match self {
            Expr::Num(x) => *x,
            Expr::Var(Var::R) => v.r,
            Expr::Var(Var::T) => v.t,
            Expr::Var(Var::RA) => v.ra,
            Expr::Var(Var::SR) => v.sr,
            Expr::Var(Var::P2) => v.p2,
            Expr::Neg(a) => -a.eval(v),
            Expr::Add(a, b) => a.eval(v) + b.eval(v),
            Expr::Sub(a, b) => a.eval(v) - b.eval(v),
            Expr::Mul(a, b) => a.eval(v) * b.eval(v),
            Expr::Pow(a, n) => a.eval(v).powi(*n as i32),
        }
    }

    /// Parses an expression of the data-file grammar.
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut parser = Parser { tokens: &tokens, pos: 0 };
        let e = parser.sum()?;
        if parser.pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input in `{src}`")));
        }
        Ok(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Num(s.parse().map_err(|_| Error::Parse(format!("bad number `{s}`")))?));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(s));
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Expr::Neg(Box::new(self.product()?))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::Open) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Num(n)) if n.fract() == 0.0 && *n >= 0.0 => {
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), *n as u32));
                }
                _ => return Err(Error::Parse("exponent must be a non-negative integer".into())),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(x)) => Ok(Expr::Num(x)),
            Some(Token::Ident(name)) => Ok(Expr::Var(match name.as_str() {
                "R" => Var::R,
                "t" => Var::T,
                "rA" => Var::RA,
                "sR" => Var::SR,
                "p2" => Var::P2,
                _ => return Err(Error::Parse(format!("unknown variable `{name}`"))),
            })),
            Some(Token::Open) => {
                let e = self.sum()?;
                match self.tokens.get(self.pos) {
                    Some(Token::Close) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Index of a coefficient: two or three non-negative integers.
pub type Index = [u8; 3];

/// One parsed record of the data file.
#[derive(Debug, Clone)]
pub struct Record {
    pub family: Family,
    pub index: Vec<u8>,
    pub expr: Expr,
}

/// All coefficient records, parsed from the embedded data file.
#[derive(Debug, Clone)]
pub struct CoefficientTables {
    records: Vec<Record>,
}

impl CoefficientTables {
    /// Parses a data file.
    pub fn parse(src: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (n, line) in src.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, body) =
                line.split_once(':').ok_or_else(|| Error::Parse(format!("line {}: missing `:`", n + 1)))?;
            let mut words = head.split_whitespace();
            let family: Family =
                words.next().ok_or_else(|| Error::Parse(format!("line {}: missing family", n + 1)))?.parse()?;
            let index = words
                .map(|w| w.parse::<u8>().map_err(|_| Error::Parse(format!("line {}: bad index `{w}`", n + 1))))
                .collect::<Result<Vec<u8>>>()?;
            if !(2..=3).contains(&index.len()) {
                return Err(Error::Parse(format!("line {}: expected two or three indices", n + 1)));
            }
            let expr = Expr::parse(body).map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?;
            records.push(Record { family, index, expr });
        }
        Ok(Self { records })
    }

    /// The tables shipped with the crate.
    pub fn embedded() -> &'static CoefficientTables {
        static TABLES: OnceLock<CoefficientTables> = OnceLock::new();
        TABLES.get_or_init(|| CoefficientTables::parse(DATA).expect("embedded coefficient data is well formed"))
    }

    /// All records in file order.
    pub fn records(&self) -> &[Record] {
        &self.records
    }

    /// Looks up a single record.
    pub fn expr(&self, family: Family, index: &[u8]) -> Option<&Expr> {
        self.records.iter().find(|r| r.family == family && r.index == index).map(|r| &r.expr)
    }

    /// Evaluates every record that does not depend on `p2` at a parameter point.
    pub fn evaluate(&self, r: f64, t: f64) -> Coefficients {
        let vars = Variables::at(r, t);
        let values = self
            .records
            .iter()
            .filter(|rec| rec.family != Family::B)
            .map(|rec| ((rec.family, pad(&rec.index)), rec.expr.eval(&vars)))
            .collect();
        Coefficients { values }
    }

    /// Evaluates the action-integrand coefficient `b_{ij}` at `p2`.
    pub fn integrand_coefficient(&self, i: u8, j: u8, r: f64, t: f64, p2: f64) -> Option<f64> {
        let vars = Variables { p2, ..Variables::at(r, t) };
        self.expr(Family::B, &[i, j]).map(|e| e.eval(&vars))
    }
}

fn pad(index: &[u8]) -> Index {
    let mut out = [0u8; 3];
    out[..index.len()].copy_from_slice(index);
    out
}

/// Numeric coefficient values at one parameter point.
#[derive(Debug, Clone)]
pub struct Coefficients {
    values: HashMap<(Family, Index), f64>,
}

impl Coefficients {
    /// Value of a coefficient. Two-index families take a zero third index.
    ///
    /// # Panics
    /// If the record is absent from the tables; the embedded tables are
    /// complete for every index used by the expansions.
    pub fn get(&self, family: Family, index: &[u8]) -> f64 {
        *self.values.get(&(family, pad(index))).unwrap_or_else(|| panic!("missing coefficient {family} {index:?}"))
    }

    /// Value of a coefficient, if present.
    pub fn try_get(&self, family: Family, index: &[u8]) -> Option<f64> {
        self.values.get(&(family, pad(index))).copied()
    }
}
