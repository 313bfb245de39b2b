//! Canonical text rendering of scalars and a small expression parser that
//! reads the same grammar back.

use std::fmt;

use super::int::Int;
use super::rational::Rational;
use super::ring::{Field, Ring};

/// Render a list of `(coefficient, [(variable, exponent)])` terms, already
/// sorted in display order, as `"-q*t + 1/2*q - 3"`.
pub fn render_terms(terms: &[(Rational, Vec<(&str, usize)>)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, vars)) in terms.iter().enumerate() {
        let negative = c.signum() < 0;
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let a = c.abs();
        let mono: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = bytes[start..i].iter().collect();
            out.push((Tok::Num(lit.parse().expect("digits")), start));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(bytes[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError { message: format!("unexpected character '{c}'"), position: i });
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    var: &'a dyn Fn(&str) -> Option<F>,
}

impl<F: Field> Parser<'_, F> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        let position = self.toks.get(self.pos).map_or(self.end, |t| t.1);
        Err(ParseError { message: msg.to_string(), position })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<F, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<F, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                match acc.div(&d) {
                    Some(v) => acc = v,
                    None => return self.err("division by zero"),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<F, ParseError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<F, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(n)) => n.to_i64().filter(|v| *v <= u32::MAX as i64),
            _ => None,
        };
        let Some(e) = e else {
            return self.err("expected an integer exponent");
        };
        self.pos += 1;
        let p = base.pow(e as u32);
        if negative {
            match p.inv() {
                Some(v) => Ok(v),
                None => self.err("negative power of zero"),
            }
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<F, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(F::from_int(&n))
            }
            Some(Tok::Ident(name)) => match (self.var)(&name) {
                Some(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                None => self.err(&format!("unknown variable '{name}'")),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

/// Evaluate an arithmetic expression in a field, resolving identifiers with
/// `var`.
pub fn parse_expr<F: Field>(s: &str, var: &dyn Fn(&str) -> Option<F>) -> Result<F, ParseError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, end: s.len(), var };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render() {
        let t = vec![
            (Rational::from_i64(-1), vec![("q", 1), ("t", 1)]),
            (Rational::frac(1, 2), vec![("q", 2)]),
            (Rational::from_i64(1), vec![]),
        ];
        assert_eq!(render_terms(&t), "-q*t + 1/2*q^2 + 1");
        assert_eq!(render_terms(&[]), "0");
    }

    #[test]
    fn parse_rationals() {
        let none = |_: &str| None::<Rational>;
        assert_eq!(parse_expr("1/2 + 1/3", &none).unwrap(), Rational::frac(5, 6));
        assert_eq!(parse_expr("-(2^3)/4", &none).unwrap(), Rational::from_i64(-2));
        assert_eq!(parse_expr("2^-2", &none).unwrap(), Rational::frac(1, 4));
        assert!(parse_expr("1/0", &none).is_err());
        assert!(parse_expr("x", &none).is_err());
        assert!(parse_expr("(1", &none).is_err());
    }
}
