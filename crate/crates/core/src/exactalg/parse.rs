//! Text grammar for Laurent polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ')'
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by single-term polynomials, and negative powers
//! only of single terms, so every accepted string is a Laurent polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::laurent::{vars as make_vars, LaurentPoly, Vars};

const MAX_DEPTH: usize = 128;
const MAX_LITERAL_DIGITS: usize = 512;
// a 512-digit integer has at most 1701 bits
const MAX_COEFF_BITS: u64 = 1701;
const MAX_EXPONENT: i64 = 4096;
const MAX_STORED_EXPONENT: u64 = 1 << 24;
/// Bound on term-pair products performed by a single multiplication.
const MAX_WORK: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i - start > MAX_LITERAL_DIGITS {
                    return err(start, "integer literal too long");
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => return err(start, format!("unexpected character {:?}", text[start..].chars().next().unwrap())),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a Vars,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return err(self.here(), "expression nested too deeply");
        }
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.checked_mul(&acc, &rhs)?;
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return err(at, "division by zero");
                    }
                    let inv = rhs
                        .monomial_inverse()
                        .or_else(|_| err(at, "division by a polynomial with more than one term"))?;
                    acc = self.checked_mul(&acc, &inv)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn checked_mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, ParseError> {
        if a.num_terms().saturating_mul(b.num_terms()) > MAX_WORK {
            return err(self.here(), "product too large");
        }
        if a.max_abs_exponent() + b.max_abs_exponent() > MAX_STORED_EXPONENT {
            return err(self.here(), "exponent too large");
        }
        if coeff_bits(a) + coeff_bits(b) > 2 * MAX_COEFF_BITS {
            return err(self.here(), "coefficient too large");
        }
        Ok(a * b)
    }

    fn unary(&mut self) -> Result<LaurentPoly, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return err(self.here(), "expression nested too deeply");
        }
        let out = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.unary()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()?
            }
            _ => self.power()?,
        };
        self.depth -= 1;
        Ok(out)
    }

    fn power(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.here();
        self.bump();
        let exp = self.exponent()?;
        if exp.abs() > MAX_EXPONENT {
            return err(at, "exponent too large");
        }
        if base.max_abs_exponent().saturating_mul(exp.unsigned_abs()) > MAX_STORED_EXPONENT {
            return err(at, "exponent too large");
        }
        if exp < 0 && !base.is_monomial() {
            return err(at, "negative power of a polynomial with more than one term");
        }
        if !base.is_monomial() && exp > 1 {
            // Rough bound on the size of the expanded power.
            let est = (base.num_terms() as f64).powf(exp as f64);
            if est > MAX_WORK as f64 * 4.0 {
                return err(at, "power expands too far");
            }
        }
        let growth = coeff_bits(&base) + (base.num_terms() as u64).max(2).ilog2() as u64 + 1;
        if growth.saturating_mul(exp.unsigned_abs()) > 2 * MAX_COEFF_BITS {
            return err(at, "coefficient too large");
        }
        base.pow(exp).or_else(|e| err(at, e.to_string()))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let at = self.here();
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.bump();
        }
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let value = match self.bump() {
            Some(Tok::Num(n)) => i64::try_from(n).or_else(|_| err(at, "exponent too large"))?,
            _ => return err(at, "expected integer exponent"),
        };
        if paren && self.bump() != Some(Tok::RParen) {
            return err(self.here(), "expected ')'");
        }
        Ok(if negative { -value } else { value })
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(LaurentPoly::constant(self.vars.clone(), BigRational::from_integer(n))),
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(LaurentPoly::var(self.vars.clone(), i)),
                None => err(at, format!("unknown variable `{name}`")),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err(self.here(), "expected ')'"),
                }
            }
            Some(t) => err(at, format!("unexpected token {t:?}")),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parses `text` as a Laurent polynomial over the given variables.
pub fn parse_poly(text: &str, vars: &Vars) -> Result<LaurentPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars,
        depth: 0,
    };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return err(p.here(), "trailing input");
    }
    // keep every accepted value printable as parseable literals
    let digits = |n: &BigInt| n.magnitude().to_string().len();
    if out.terms().any(|(_, c)| digits(c.numer()) > MAX_LITERAL_DIGITS || digits(c.denom()) > MAX_LITERAL_DIGITS) {
        return err(0, "coefficient too large");
    }
    Ok(out)
}

fn coeff_bits(p: &LaurentPoly) -> u64 {
    p.terms().map(|(_, c)| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
}

/// Identifiers of `text` in order of first appearance.
pub fn collect_vars(text: &str) -> Result<Vec<String>, ParseError> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Tok::Ident(name) = t {
            if !out.contains(&name) {
                out.push(name);
            }
        }
    }
    Ok(out)
}

/// Parses with variables inferred from the text, in order of appearance.
pub fn parse_poly_auto(text: &str) -> Result<LaurentPoly, ParseError> {
    let names = collect_vars(text)?;
    parse_poly(text, &make_vars(&names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v() -> Vars {
        make_vars(&["x", "y", "z"])
    }

    #[test]
    fn basic_grammar() {
        let f = parse_poly("1 + x*y", &v()).unwrap();
        assert_eq!(f.to_string(), "x*y + 1");
        let g = parse_poly("x^-1*y^2", &v()).unwrap();
        assert_eq!(g.to_string(), "x^-1*y^2");
        let h = parse_poly("-(x - y)^2", &v()).unwrap();
        assert_eq!(h.to_string(), "-x^2 + 2*x*y - y^2");
        assert_eq!(parse_poly("x^(-2)", &v()).unwrap(), parse_poly("1/x^2", &v()).unwrap());
        assert_eq!(parse_poly("3/6*z", &v()).unwrap().to_string(), "1/2*z");
    }

    #[test]
    fn rejections() {
        assert!(parse_poly("w", &v()).is_err());
        assert!(parse_poly("(1+x)^-1", &v()).is_err());
        assert!(parse_poly("1/(1+x)", &v()).is_err());
        assert!(parse_poly("x/0", &v()).is_err());
        assert!(parse_poly("x +", &v()).is_err());
        assert!(parse_poly("x y", &v()).is_err());
        assert!(parse_poly("(x", &v()).is_err());
        assert!(parse_poly("x^y", &v()).is_err());
        assert!(parse_poly("x^99999", &v()).is_err());
        assert!(parse_poly("(x+y+z+1)^4000", &v()).is_err());
        assert!(parse_poly("x $ y", &v()).is_err());
        let deep = "(".repeat(500) + "x" + &")".repeat(500);
        assert!(parse_poly(&deep, &v()).is_err());
    }

    #[test]
    fn auto_vars_follow_appearance() {
        let f = parse_poly_auto("y + x*y").unwrap();
        assert_eq!(f.vars().as_slice(), &["y".to_string(), "x".to_string()]);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-3i32..4, 3), -5i64..6, 1i64..4), 0..8).prop_map(|ts| {
            LaurentPoly::from_terms(
                v(),
                ts.into_iter()
                    .map(|(e, n, d)| (e, BigRational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn display_parses_back(f in arb_poly()) {
            let text = f.to_string();
            prop_assert_eq!(parse_poly(&text, &v()).unwrap(), f);
        }

        #[test]
        fn never_panics_on_garbage(s in "[-+*/^() 0-9xyzw]{0,40}") {
            let _ = parse_poly(&s, &v());
        }
    }
}
