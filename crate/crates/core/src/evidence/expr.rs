//! Constant expressions over rationals, `π`, `sqrt`, `ln`, `arccosh` and
//! `arccos`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := number | 'pi' | 'π' | 'sqrtN' | func '(' expr ')' | '(' expr ')'
//! func   := sqrt | ln | acosh | arccosh | acos | arccos
//! ```
//!
//! `sqrtN` with a literal integer `N` is shorthand for `sqrt(N)`.

use std::fmt;

use num_bigint::BigInt;

use super::interval::Interval;
use crate::arith::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Ln,
    Acosh,
    Acos,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Ln => "ln",
            Func::Acosh => "acosh",
            Func::Acos => "acos",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    Pi,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!(
                "unexpected `{}` in `{text}`",
                p.tokens[p.pos]
            )));
        }
        Ok(e)
    }

    /// Enclosure of the value at `prec` fractional bits.
    pub fn eval_interval(&self, prec: u32) -> Result<Interval> {
        Ok(match self {
            Expr::Num(r) => Interval::from_rat(r, prec),
            Expr::Pi => Interval::pi(prec),
            Expr::Neg(a) => a.eval_interval(prec)?.neg(),
            Expr::Add(a, b) => a.eval_interval(prec)?.add(&b.eval_interval(prec)?),
            Expr::Sub(a, b) => a.eval_interval(prec)?.sub(&b.eval_interval(prec)?),
            Expr::Mul(a, b) => a.eval_interval(prec)?.mul(&b.eval_interval(prec)?),
            Expr::Div(a, b) => a.eval_interval(prec)?.div(&b.eval_interval(prec)?)?,
            Expr::Pow(a, e) => a.eval_interval(prec)?.powi(*e)?,
            Expr::Call(f, a) => {
                let x = a.eval_interval(prec)?;
                match f {
                    Func::Sqrt => x.sqrt()?,
                    Func::Ln => x.ln()?,
                    Func::Acosh => x.acosh()?,
                    Func::Acos => x.acos()?,
                }
            }
        })
    }

    /// Value rounded to binary64, from a 128-bit enclosure.
    pub fn eval_f64(&self) -> Result<f64> {
        Ok(self.eval_interval(128)?.to_f64())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Pi => f.write_str("pi"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Op(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(r) => write!(f, "{r}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Op(c) => write!(f, "{c}"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_decimal(&s)?));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

fn parse_decimal(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad number `{s}`"));
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if (int.is_empty() && frac.is_empty()) || frac.contains('.') {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    Ok(Rat::new(digits, den))
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.eat_op(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected `{c}`, found {}",
                self.peek().map_or("end of input".to_string(), |t| format!("`{t}`"))
            )))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let neg = self.eat_op('-');
        match self.tokens.get(self.pos) {
            Some(Tok::Num(r)) if r.is_integer() => {
                let e: i32 = r
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => Err(Error::Parse("exponent must be an integer literal".into())),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(r) => Ok(Expr::Num(r)),
            Tok::Op('(') => {
                let e = self.expr()?;
                self.expect_op(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let func = match name.as_str() {
                    "pi" | "π" => return Ok(Expr::Pi),
                    "sqrt" => Func::Sqrt,
                    "ln" => Func::Ln,
                    "acosh" | "arccosh" => Func::Acosh,
                    "acos" | "arccos" => Func::Acos,
                    other => {
                        if let Some(n) = other.strip_prefix("sqrt") {
                            if let Ok(v) = n.parse::<u64>() {
                                let r = Rat::from_integer(BigInt::from(v));
                                return Ok(Expr::Call(Func::Sqrt, Box::new(Expr::Num(r))));
                            }
                        }
                        return Err(Error::Parse(format!("unknown name `{other}`")));
                    }
                };
                self.expect_op('(')?;
                let arg = self.expr()?;
                self.expect_op(')')?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        let v = Expr::parse("-(acosh(1+sqrt2))^2").unwrap().eval_f64().unwrap();
        assert!((v + 2.336528).abs() < 1e-5);
        let v = Expr::parse("pi^2/4").unwrap().eval_f64().unwrap();
        assert!((v - 2.4674011).abs() < 1e-6);
        let v = Expr::parse("arccos(1/3) + ln(3) - 0.5 * 2").unwrap().eval_f64().unwrap();
        assert!((v - ((1.0f64 / 3.0).acos() + 3f64.ln() - 1.0)).abs() < 1e-14);
        let v = Expr::parse("2^-2").unwrap().eval_f64().unwrap();
        assert_eq!(v, 0.25);
        assert_eq!(Expr::parse("1.25").unwrap(), Expr::Num(Rat::new(5.into(), 4.into())));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "1+", "foo(2)", "sqrt 2", "2^x", "(1", "1)", "3 $ 4", "1..2"] {
            assert!(matches!(Expr::parse(bad), Err(Error::Parse(_))), "{bad}");
        }
        assert!(matches!(
            Expr::parse("acosh(1/2)").unwrap().eval_f64(),
            Err(Error::Domain(_))
        ));
    }
}
