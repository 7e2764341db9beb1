//! Text parsing for polynomials and rationals.
//!
//! Grammar (ASCII, whitespace insignificant):
//!
//! ```text
//! polynomial := [sign] term { sign term }
//! term       := coeff [ "*" ] [ var ] | var
//! var        := "t" [ "^" uint ]
//! coeff      := uint [ "/" uint ]
//! sign       := "+" | "-"
//! ```
//!
//! Examples: `t^3 - 3*t - 1`, `1/2*t^2 + t`, `0`.

use crate::error::Error;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use num::bigint::BigInt;
use std::fmt;

/// Default cap on the degree of parsed polynomials.
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// A parse failure, carrying the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character that fits no production at this point.
    UnexpectedChar(char),
    /// Input ended where a term, digit or exponent was required.
    UnexpectedEnd,
    /// A letter other than `t` was used as the variable.
    UnsupportedVariable(char),
    /// A coefficient with denominator zero.
    ZeroDenominator,
    /// An exponent above the configured degree cap.
    DegreeTooLarge { limit: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at byte {}", c, self.offset)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of input at byte {}", self.offset)
            }
            ParseErrorKind::UnsupportedVariable(c) => write!(
                f,
                "unsupported variable '{}' at byte {} (the variable must be 't')",
                c, self.offset
            ),
            ParseErrorKind::ZeroDenominator => {
                write!(f, "zero denominator at byte {}", self.offset)
            }
            ParseErrorKind::DegreeTooLarge { limit } => write!(
                f,
                "degree at byte {} exceeds the cap of {}",
                self.offset, limit
            ),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses polynomial text with the default degree cap of 64.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, Error> {
    parse_polynomial_capped(text, DEFAULT_MAX_DEGREE)
}

/// Parses polynomial text, rejecting any exponent above `max_degree`.
pub fn parse_polynomial_capped(text: &str, max_degree: usize) -> Result<Polynomial, Error> {
    let p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        max_degree,
    };
    p.parse().map_err(Error::Parse)
}

/// Parses `n` or `n/d` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let bytes = text.as_bytes();
    let mut parser = Parser {
        bytes,
        pos: 0,
        max_degree: 0,
    };
    parser.skip_ws();
    let negative = match parser.peek() {
        Some(b'-') => {
            parser.pos += 1;
            true
        }
        Some(b'+') => {
            parser.pos += 1;
            false
        }
        _ => false,
    };
    parser.skip_ws();
    let value = parser.coefficient()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.fail(ParseErrorKind::UnexpectedChar(c as char)));
    }
    Ok(if negative { -value } else { value })
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    max_degree: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Polynomial, ParseError> {
        let mut coeffs: Vec<Rational> = Vec::new();
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            self.skip_ws();
            let (mut coeff, deg) = self.term()?;
            if sign < 0 {
                coeff = -coeff;
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Rational::zero());
            }
            coeffs[deg] = &coeffs[deg] + &coeff;
            self.skip_ws();
            sign = match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(c) => return Err(self.fail(ParseErrorKind::UnexpectedChar(c as char))),
            };
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// One term: coefficient, variable part, or both. Returns (coeff, degree).
    fn term(&mut self) -> Result<(Rational, usize), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coefficient()?;
                self.skip_ws();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.skip_ws();
                        let deg = self.variable_part()?;
                        Ok((coeff, deg))
                    }
                    Some(c) if c.is_ascii_alphabetic() => {
                        let deg = self.variable_part()?;
                        Ok((coeff, deg))
                    }
                    _ => Ok((coeff, 0)),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let deg = self.variable_part()?;
                Ok((Rational::one(), deg))
            }
            Some(c) => Err(self.fail(ParseErrorKind::UnexpectedChar(c as char))),
            None => Err(self.fail(ParseErrorKind::UnexpectedEnd)),
        }
    }

    /// `t` or `t^exp`, enforcing the degree cap.
    fn variable_part(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(b't') => self.pos += 1,
            Some(c) if c.is_ascii_alphabetic() => {
                return Err(self.fail(ParseErrorKind::UnsupportedVariable(c as char)))
            }
            Some(c) => return Err(self.fail(ParseErrorKind::UnexpectedChar(c as char))),
            None => return Err(self.fail(ParseErrorKind::UnexpectedEnd)),
        }
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let exp_offset = self.pos;
        let digits = self.digits()?;
        let mut exp: usize = 0;
        for d in digits.bytes() {
            exp = exp
                .checked_mul(10)
                .and_then(|e| e.checked_add((d - b'0') as usize))
                .filter(|&e| e <= self.max_degree)
                .ok_or(ParseError {
                    offset: exp_offset,
                    kind: ParseErrorKind::DegreeTooLarge {
                        limit: self.max_degree,
                    },
                })?;
        }
        Ok(exp)
    }

    /// `uint` or `uint/uint`.
    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits()?.parse().expect("digit run");
        self.skip_ws();
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_bigint(num));
        }
        self.pos += 1;
        self.skip_ws();
        let den_offset = self.pos;
        let den: BigInt = self.digits()?.parse().expect("digit run");
        if den == BigInt::from(0) {
            return Err(ParseError {
                offset: den_offset,
                kind: ParseErrorKind::ZeroDenominator,
            });
        }
        Ok(Rational::from_big(num, den))
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return match self.peek() {
                Some(c) => Err(self.fail(ParseErrorKind::UnexpectedChar(c as char))),
                None => Err(self.fail(ParseErrorKind::UnexpectedEnd)),
            };
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().map_or(false, |c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn fail(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }
}
