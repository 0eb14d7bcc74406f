use super::{Coeff, Monomial, Polynomial};
use crate::{Error, Result};

/// Parses polynomial text such as `2*Y^3 + 5*Z^4`, `X - Y*Z`, or `-3*X^2*Y`.
///
/// Grammar: a signed sum of terms, each term a product of an optional
/// coefficient literal and variable powers joined by `*`, exponents written
/// with `^`.  Rational literals like `1/2` are accepted only when `C` is the
/// rational domain.  The grammar round-trips with `Polynomial`'s `Display`.
pub fn parse_polynomial<C: Coeff>(text: &str) -> Result<Polynomial<C>> {
    Parser {
        chars: text.chars().collect(),
        pos: 0,
        text,
    }
    .parse()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn parse<C: Coeff>(mut self) -> Result<Polynomial<C>> {
        let mut poly = Polynomial::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                false
            }
            Some('+') => {
                self.pos += 1;
                true
            }
            _ => true,
        };
        loop {
            self.skip_ws();
            let (coeff, mono) = self.term::<C>()?;
            let signed = if sign { coeff } else { -coeff };
            poly.add_term(signed, mono);
            self.skip_ws();
            match self.peek() {
                None => return Ok(poly),
                Some('+') => {
                    self.pos += 1;
                    sign = true;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = false;
                }
                Some(c) => return Err(self.err(&format!("unexpected `{c}`"))),
            }
        }
    }

    fn term<C: Coeff>(&mut self) -> Result<(C, Monomial)> {
        let mut coeff: Option<C> = None;
        let mut mono = Monomial::ONE;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    if coeff.is_some() || mono != Monomial::ONE {
                        return Err(self.err("coefficient must come first in a term"));
                    }
                    coeff = Some(self.coeff_literal::<C>()?);
                }
                Some('X') | Some('Y') | Some('Z') => {
                    let name = self.next_char();
                    let exp = self.optional_exponent()?;
                    let factor = match name {
                        'X' => Monomial::new(exp, 0, 0),
                        'Y' => Monomial::new(0, exp, 0),
                        _ => Monomial::new(0, 0, exp),
                    };
                    mono = mono.mul(&factor);
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff.unwrap_or_else(C::one), mono))
    }

    fn coeff_literal<C: Coeff>(&mut self) -> Result<C> {
        let num = self.digits()?;
        self.skip_ws();
        // `3/4` is a rational literal, but only if a denominator follows.
        if self.peek() == Some('/') {
            let save = self.pos;
            self.pos += 1;
            self.skip_ws();
            if self.peek().map_or(false, |c| c.is_ascii_digit()) {
                let den = self.digits()?;
                return C::parse_coeff(&format!("{num}/{den}"));
            }
            self.pos = save;
        }
        C::parse_coeff(&num)
    }

    fn optional_exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let digits = self.digits()?;
        digits
            .parse::<u32>()
            .map_err(|_| self.err(&format!("exponent `{digits}` out of range")))
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn next_char(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().map_or(false, |c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("`{}` at offset {}: {msg}", self.text, self.pos))
    }
}
