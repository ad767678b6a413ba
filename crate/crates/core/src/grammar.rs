//! Text form of mixed polynomials.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := ("-" | "+") unary | power
//! power  := atom ("^" integer)?
//! atom   := number | number "i" | "i" | "z"k | "conj" "(" expr ")" | "(" expr ")"
//! ```
//!
//! Variables are `z1` … `z9`. Juxtaposition is rejected, so `2z1` is an error
//! while `2*z1` and `2i*z1` are fine. [`format`] prints a canonical form that
//! parses back to the identical polynomial.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::MixedPolynomial;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { value: f64, imaginary: bool, integer: Option<u32> },
    I,
    Var(usize),
    Conj,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let ch = bytes[pos];
        let start = pos;
        let simple = match ch {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((start, tok));
            pos += 1;
            continue;
        }
        if ch.is_ascii_digit() || ch == b'.' {
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut integral = true;
            if pos < bytes.len() && bytes[pos] == b'.' {
                integral = false;
                pos += 1;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
            }
            if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
                integral = false;
                pos += 1;
                if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                    pos += 1;
                }
                let digits = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if digits == pos {
                    return Err(syntax(pos, "exponent needs digits"));
                }
            }
            let literal = &text[start..pos];
            let value: f64 = literal
                .parse()
                .map_err(|_| syntax(start, format!("malformed number {literal:?}")))?;
            let imaginary = pos < bytes.len() && bytes[pos] == b'i';
            if imaginary {
                pos += 1;
            }
            let integer = if integral && !imaginary { literal.parse().ok() } else { None };
            out.push((start, Tok::Num { value, imaginary, integer }));
            if pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'.') {
                return Err(syntax(pos, "implicit multiplication is not allowed; use '*'"));
            }
            continue;
        }
        if ch.is_ascii_alphabetic() {
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            let word = &text[start..pos];
            let tok = match word {
                "i" => Tok::I,
                "conj" => Tok::Conj,
                _ => match word.strip_prefix('z').map(str::parse::<usize>) {
                    Some(Ok(k)) if (1..=9).contains(&k) && word.len() == 2 => Tok::Var(k - 1),
                    _ => return Err(syntax(start, format!("unknown identifier {word:?}"))),
                },
            };
            out.push((start, tok));
            continue;
        }
        return Err(syntax(start, format!("unexpected character {:?}", text[start..].chars().next().unwrap_or('?'))));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<MixedPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MixedPolynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MixedPolynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MixedPolynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let k = match self.bump() {
            Tok::Num { integer: Some(k), .. } => k,
            _ => return Err(syntax(pos, "exponent must be a non-negative integer")),
        };
        if *self.peek() == Tok::Caret {
            return Err(syntax(self.pos(), "chained exponents need parentheses"));
        }
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<MixedPolynomial> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num { value, imaginary, .. } => {
                let c = if imaginary { Complex64::new(0.0, value) } else { Complex64::new(value, 0.0) };
                Ok(MixedPolynomial::constant(self.n, c))
            }
            Tok::I => Ok(MixedPolynomial::constant(self.n, Complex64::new(0.0, 1.0))),
            Tok::Var(k) => {
                if k >= self.n {
                    return Err(syntax(pos, format!("z{} exceeds the {} declared variables", k + 1, self.n)));
                }
                Ok(MixedPolynomial::var(self.n, k))
            }
            Tok::Conj => {
                self.expect(Tok::LParen, "'(' after conj")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner.conjugate())
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            other => Err(syntax(pos, format!("unexpected {other:?}"))),
        }
    }
}

fn run(toks: Vec<(usize, Tok)>, n: usize) -> Result<MixedPolynomial> {
    let mut p = Parser { toks, at: 0, n };
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(f)
}

/// Parses with `n` equal to the largest variable index that occurs (at least 1).
pub fn parse(text: &str) -> Result<MixedPolynomial> {
    let toks = tokenize(text)?;
    let n = toks
        .iter()
        .filter_map(|(_, t)| if let Tok::Var(k) = t { Some(k + 1) } else { None })
        .max()
        .unwrap_or(1);
    run(toks, n)
}

/// Parses into a polynomial in exactly `n` variables.
pub fn parse_in(text: &str, n: usize) -> Result<MixedPolynomial> {
    if n == 0 {
        return Err(Error::AmbientDimension { n });
    }
    run(tokenize(text)?, n)
}

fn push_monomial(out: &mut String, nu: &[u32], mu: &[u32]) {
    let mut first = true;
    let mut factor = |out: &mut String, s: String, k: u32| {
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&s);
        if k > 1 {
            let _ = write!(out, "^{k}");
        }
    };
    for j in 0..nu.len() {
        if nu[j] > 0 {
            factor(out, format!("z{}", j + 1), nu[j]);
        }
        if mu[j] > 0 {
            factor(out, format!("conj(z{})", j + 1), mu[j]);
        }
    }
}

/// Canonical text: terms in descending exponent order, real and imaginary
/// coefficients sign-extracted, general complex ones parenthesized.
pub fn format(f: &MixedPolynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in f.terms().rev().enumerate() {
        let constant = e.radial_degree() == 0;
        let (negative, body) = if c.im == 0.0 {
            let a = c.re.abs();
            let body = if a == 1.0 && !constant { String::new() } else { format!("{a}") };
            (c.re < 0.0, body)
        } else if c.re == 0.0 {
            (c.im < 0.0, format!("{}i", c.im.abs()))
        } else {
            let sign = if c.im < 0.0 { '-' } else { '+' };
            (false, format!("({}{sign}{}i)", c.re, c.im.abs()))
        };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
        if !constant {
            if !body.is_empty() {
                out.push('*');
            }
            push_monomial(&mut out, &e.nu, &e.mu);
        }
    }
    out
}

impl std::fmt::Display for MixedPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExponentPair;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parses_brieskorn_pair() {
        let f = parse("z1^3*conj(z1) + z2^3*conj(z2)").unwrap();
        assert_eq!(f.n_vars(), 2);
        assert_eq!(f.len(), 2);
        assert_eq!(f.coefficient(&ExponentPair::new(vec![3, 0], vec![1, 0])), c(1.0, 0.0));
        assert_eq!(format(&f), "z1^3*conj(z1) + z2^3*conj(z2)");
    }

    #[test]
    fn parses_worked_example() {
        let f = parse("-2*z1^2*conj(z1) + 3*z1^2 + 1").unwrap();
        let expected = MixedPolynomial::univariate([(2, 1, c(-2.0, 0.0)), (2, 0, c(3.0, 0.0)), (0, 0, c(1.0, 0.0))]);
        assert_eq!(f, expected);
        assert_eq!(format(&f), "-2*z1^2*conj(z1) + 3*z1^2 + 1");
    }

    #[test]
    fn complex_literals() {
        let f = parse("(1+2i)*z1").unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&ExponentPair::new(vec![1], vec![0])), c(1.0, 2.0));
        assert_eq!(format(&f), "(1+2i)*z1");
        assert_eq!(parse("i*z1 - 2.5i").unwrap().to_string(), "1i*z1 - 2.5i");
        assert_eq!(parse("(1-2i)").unwrap().to_string(), "(1-2i)");
    }

    #[test]
    fn conj_exponent_binds_to_conjugate() {
        let f = parse("conj(z1)^2").unwrap();
        assert_eq!(f.coefficient(&ExponentPair::new(vec![0], vec![2])), c(1.0, 0.0));
        assert_eq!(format(&parse("z1*conj(z1)").unwrap()), "z1*conj(z1)");
    }

    #[test]
    fn precedence() {
        let f = parse("-z1^2 + 2*z1*3").unwrap();
        assert_eq!(f, MixedPolynomial::univariate([(2, 0, c(-1.0, 0.0)), (1, 0, c(6.0, 0.0))]));
        let g = parse("(z1 + 1)^2 - z1^2").unwrap();
        assert_eq!(g, MixedPolynomial::univariate([(1, 0, c(2.0, 0.0)), (0, 0, c(1.0, 0.0))]));
    }

    #[test]
    fn zero_formats_as_zero() {
        let f = parse("z1 - z1").unwrap();
        assert!(f.is_zero());
        assert_eq!(format(&f), "0");
        assert!(parse("0").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let at = |s: &str| match parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s:?} gave {other:?}"),
        };
        assert_eq!(at("2z1"), 1);
        assert_eq!(at("z1 + "), 5);
        assert_eq!(at("z1^-1"), 3);
        assert_eq!(at("z1^1.5"), 3);
        assert_eq!(at("z0"), 0);
        assert_eq!(at("z1 z2"), 3);
        assert_eq!(at("(z1"), 3);
        assert_eq!(at("z1^2^2"), 4);
        assert_eq!(at("x1"), 0);
        assert_eq!(at("conj z1"), 5);
    }

    #[test]
    fn explicit_arity() {
        let f = parse_in("z1", 3).unwrap();
        assert_eq!(f.n_vars(), 3);
        assert!(parse_in("z4", 3).is_err());
    }

    #[test]
    fn awkward_numbers_round_trip() {
        for v in [0.1, 1e-7, 1.0 / 3.0, 123456789.125, 5e-324, 1e300] {
            let f = MixedPolynomial::univariate([(1, 0, c(v, -v)), (0, 1, c(0.0, v)), (0, 0, c(-v, 0.0))]);
            assert_eq!(parse_in(&format(&f), 1).unwrap(), f);
        }
    }
}
