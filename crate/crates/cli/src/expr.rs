//! Text form of polynomials over `Q`.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*
//! term  := coeff ('*' atom)* | atom ('*' atom)*
//! atom  := ('x' | 'y') ('^' nat)?
//! coeff := nat ('/' nat)?
//! ```
//!
//! `x` stands for `α₁` and `y` for `α₂`. Whitespace is ignored everywhere.

use std::fmt::Write as _;

use circint_core::{Monomial, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest exponent accepted in an expression.
pub const MAX_EXPONENT: u32 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: expected {expected}, found {found}")]
pub struct ParseError {
    /// 1-based column of the offending character.
    pub column: usize,
    pub expected: String,
    pub found: String,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    source: &'a str,
}

impl<'a> Parser<'a> {
    fn new(source: &'a str) -> Self {
        Self {
            chars: source
                .chars()
                .enumerate()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            source,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.source.chars().count(), |&(i, _)| i)
            + 1
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            column: self.column(),
            expected: expected.to_string(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), |c| format!("'{c}'")),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .map(|&(_, c)| c)
                .collect()
        })
    }

    fn nat(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let err = self.error(what);
        let digits = self.digits().ok_or(err)?;
        Ok(digits.parse().expect("ascii digits"))
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let num = self.nat("a number")?;
        if !self.eat('/') {
            return Ok(Rational::from_integer(num));
        }
        let at = self.error("a nonzero denominator");
        let den = self.nat("a denominator")?;
        if den.is_zero() {
            return Err(ParseError {
                found: "0".into(),
                ..at
            });
        }
        Ok(Rational::new(num, den))
    }

    fn atom(&mut self, mono: &mut Monomial) -> Result<(), ParseError> {
        let is_x = match self.peek() {
            Some('x') => true,
            Some('y') => false,
            _ => return Err(self.error("'x' or 'y'")),
        };
        self.pos += 1;
        let exp = if self.eat('^') {
            let at = self.error("an exponent");
            let e = self.nat("an exponent")?;
            u32::try_from(&e)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| ParseError {
                    expected: format!("an exponent at most {MAX_EXPONENT}"),
                    found: e.to_string(),
                    ..at
                })?
        } else {
            1
        };
        let slot = if is_x { &mut mono.k } else { &mut mono.l };
        *slot += exp;
        if *slot > MAX_EXPONENT {
            return Err(ParseError {
                expected: format!("a combined exponent at most {MAX_EXPONENT}"),
                found: slot.to_string(),
                ..self.error("")
            });
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut mono = Monomial::ONE;
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.coeff()?,
            Some('x' | 'y') => {
                self.atom(&mut mono)?;
                Rational::one()
            }
            _ => return Err(self.error("a number, 'x' or 'y'")),
        };
        while self.eat('*') {
            self.atom(&mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn expr(&mut self) -> Result<Polynomial<Rational>, ParseError> {
        let mut poly = Polynomial::zero();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (mono, c) = self.term()?;
            poly.add_term(mono, if negate { -c } else { c });
            negate = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                None => break,
                Some(_) => return Err(self.error("'+', '-', '*' or end of input")),
            };
            self.pos += 1;
        }
        Ok(poly)
    }
}

/// Parses an expression into an exact polynomial.
pub fn parse_poly(text: &str) -> Result<Polynomial<Rational>, ParseError> {
    Parser::new(text).expr()
}

/// Parses a signed rational `"a"`, `"-a"`, `"a/b"` or `"-a/b"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut p = Parser::new(text);
    let negative = p.eat('-');
    if !negative {
        p.eat('+');
    }
    let value = p.coeff()?;
    if p.peek().is_some() {
        return Err(p.error("end of input"));
    }
    Ok(if negative { -value } else { value })
}

/// Prints a polynomial in the grammar accepted by [`parse_poly`]: terms by
/// descending total degree, then descending power of `x`.
pub fn format_poly(p: &Polynomial<Rational>) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then(b.k.cmp(&a.k)));
    let mut out = String::new();
    for (i, (mono, c)) in terms.into_iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let magnitude = c.abs();
        let atoms = format_atoms(mono);
        match (atoms.is_empty(), magnitude.is_one()) {
            (true, _) => {
                let _ = write!(out, "{magnitude}");
            }
            (false, true) => out.push_str(&atoms),
            (false, false) => {
                let _ = write!(out, "{magnitude}*{atoms}");
            }
        }
    }
    out
}

fn format_atoms(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x", m.k), ("y", m.l)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}
