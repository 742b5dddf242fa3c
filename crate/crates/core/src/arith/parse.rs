//! Text form of rational functions: integers, variable names, `+ - * / ^`
//! and parentheses. Coefficients are reduced mod `p`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Monomial, MultiPoly, PrimeField, RatFunc};
use crate::{Error, Result};

/// Default variable names `t1..tm`.
pub fn default_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("t{i}")).collect()
}

/// Parses `s` as an element of `F_p(names...)`.
pub fn parse_ratfunc(s: &str, field: PrimeField, names: &[&str]) -> Result<RatFunc> {
    let mut parser = Parser { src: s.as_bytes(), pos: 0, field, names };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: PrimeField,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                        position: at,
                        message: "division by zero".to_string(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()? as i64;
            let at = self.pos;
            return base.pow(if neg { -e } else { e }).map_err(|_| Error::Parse {
                position: at,
                message: "negative power of zero".to_string(),
            });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| self.err("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        Ok(v)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        let m = self.names.len();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(RatFunc::constant(self.field, m, (v % self.field.p() as u64) as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while let Some(c) = self.src.get(self.pos) {
                    if c.is_ascii_alphanumeric() || *c == b'_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let ident = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|n| *n == ident) {
                    Some(i) => Ok(RatFunc::var(self.field, m, i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{ident}'")))
                    }
                }
            }
            _ => Err(self.err("expected number, variable or '('")),
        }
    }
}

fn write_monomial(out: &mut String, m: &Monomial, names: &[String]) {
    let mut first = true;
    for (i, name) in names.iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
}

/// Formats a polynomial with terms in descending graded-lex order.
pub fn format_poly(p: &MultiPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        if k > 0 {
            out.push('+');
        }
        if *m == Monomial::ONE {
            out.push_str(&format!("{c}"));
        } else {
            if *c != 1 {
                out.push_str(&format!("{c}*"));
            }
            write_monomial(&mut out, m, names);
        }
    }
    out
}

/// A single term that reads the same to the left of `/`.
fn is_atomic(p: &MultiPoly) -> bool {
    p.num_terms() == 1 && p.terms().all(|(m, c)| *c == 1 || *m == Monomial::ONE)
}

/// A single factor: a constant or a power of one variable.
fn is_factor(p: &MultiPoly) -> bool {
    p.num_terms() == 1 && p.terms().all(|(m, c)| *m == Monomial::ONE || (*c == 1 && m.0.iter().filter(|e| **e > 0).count() == 1))
}

impl RatFunc {
    /// Text form using the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        let n = format_poly(self.num(), names);
        if self.is_polynomial() {
            return n;
        }
        let d = format_poly(self.den(), names);
        let n = if is_atomic(self.num()) { n } else { format!("({n})") };
        let d = if is_factor(self.den()) { d } else { format!("({d})") };
        format!("{n}/{d}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.nvars())))
    }
}
