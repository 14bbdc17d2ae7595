//! Polynomial expression grammar.
//!
//! ```text
//! poly  := sign? term (sign term)*
//! sign  := '+' | '-' | '−'
//! term  := coeff ('*'? var power?)? | var power?
//! coeff := digits ('/' digits)?
//! power := '^' digits
//! ```
//!
//! Whitespace is ignored everywhere; a coefficient directly followed by a
//! variable (`3/2y`) multiplies it. Positions in errors are character offsets.

use num_bigint::BigInt;
use num_traits::Zero;
use resolvent_core::complex::ExactRational;
use resolvent_core::Polynomial;
use thiserror::Error;

/// Highest exponent accepted, to keep coefficient vectors reasonable.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("mixed variables '{first}' and '{second}' (position {position})")]
    MixedVariables {
        first: char,
        second: char,
        position: usize,
    },
}

impl ParseError {
    fn syntax(position: usize, expected: &str) -> Self {
        ParseError::Syntax {
            position,
            expected: expected.to_string(),
        }
    }
}

/// A parsed polynomial and the variable it was written in.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedPoly {
    pub poly: Polynomial,
    /// `None` for constant input.
    pub var: Option<char>,
}

impl ParsedPoly {
    pub fn var_or(&self, default: char) -> char {
        self.var.unwrap_or(default)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    var: Option<(char, usize)>,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn here(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-' | '−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn variable(&mut self) -> Result<bool, ParseError> {
        let Some(c) = self.peek().filter(|c| c.is_alphabetic()) else {
            return Ok(false);
        };
        let position = self.here();
        match self.var {
            Some((first, _)) if first != c => {
                return Err(ParseError::MixedVariables {
                    first,
                    second: c,
                    position,
                })
            }
            Some(_) => {}
            None => self.var = Some((c, position)),
        }
        self.pos += 1;
        Ok(true)
    }

    fn term(&mut self) -> Result<(ExactRational, usize), ParseError> {
        let mut coeff = ExactRational::from_integer(1.into());
        let mut has_coeff = false;
        if let Some(n) = self.digits() {
            has_coeff = true;
            coeff = ExactRational::from_integer(n);
            if self.peek() == Some('/') {
                self.pos += 1;
                let at = self.here();
                let d = self.digits().ok_or_else(|| ParseError::syntax(at, "denominator digits"))?;
                if d.is_zero() {
                    return Err(ParseError::syntax(at, "nonzero denominator"));
                }
                coeff /= ExactRational::from_integer(d);
            }
        }
        let star = if has_coeff && self.peek() == Some('*') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.here();
        if !self.variable()? {
            if star {
                return Err(ParseError::syntax(at, "variable after '*'"));
            }
            if !has_coeff {
                return Err(ParseError::syntax(at, "coefficient or variable"));
            }
            return Ok((coeff, 0));
        }
        let mut exp = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.here();
            let e = self.digits().ok_or_else(|| ParseError::syntax(at, "integer exponent"))?;
            exp = usize::try_from(e)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::syntax(at, &format!("exponent at most {MAX_EXPONENT}")))?;
        }
        Ok((coeff, exp))
    }
}

pub fn parse_poly(text: &str) -> Result<ParsedPoly, ParseError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        chars,
        pos: 0,
        end: text.chars().count(),
        var: None,
    };
    let mut coeffs: Vec<ExactRational> = Vec::new();
    let mut first = true;
    while first || p.peek().is_some() {
        let at = p.here();
        let negative = match p.sign() {
            Some(neg) => neg,
            None if first => false,
            None => return Err(ParseError::syntax(at, "'+' or '-'")),
        };
        first = false;
        let (c, k) = p.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, ExactRational::zero());
        }
        if negative {
            coeffs[k] -= c;
        } else {
            coeffs[k] += c;
        }
    }
    Ok(ParsedPoly {
        poly: Polynomial::new(coeffs),
        var: p.var.map(|(c, _)| c),
    })
}

/// Parses a comma-separated ascending coefficient list such as `-9,-6,0,1`.
pub fn parse_coeffs(text: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let lead = item.len() - item.trim_start().len();
        let q = resolvent_core::complex::parse_rational(&item.replace('−', "-"))
            .ok_or_else(|| ParseError::syntax(offset + lead, "rational coefficient"))?;
        coeffs.push(q);
        offset += item.chars().count() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use resolvent_core::complex::rat;

    #[test]
    fn examples() {
        assert_eq!(parse_poly("x^3 - 6x - 9").unwrap().poly, Polynomial::from_ints(&[-9, -6, 0, 1]));
        assert_eq!(parse_poly("x + x").unwrap().poly, Polynomial::from_ints(&[0, 2]));
        assert!(matches!(parse_poly("x^2 + y"), Err(ParseError::MixedVariables { .. })));
        let p = parse_poly("y^6 + 6y^5 + 14y^4 + 18y^3 + 14y^2 + 6y + 1").unwrap();
        assert_eq!(p.poly, Polynomial::from_ints(&[1, 6, 14, 18, 14, 6, 1]));
        assert_eq!(p.var, Some('y'));
    }

    #[test]
    fn rationals_signs_and_stars() {
        let p = parse_poly(" −3/2 * t^2+ t -  1/4").unwrap().poly;
        assert_eq!(p, Polynomial::new(vec![rat(-1, 4), rat(1, 1), rat(-3, 2)]));
        assert_eq!(parse_poly("0").unwrap().poly, Polynomial::zero());
        assert_eq!(parse_poly("x^2 - x^2").unwrap().poly, Polynomial::zero());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("x^ + 1"),
            Err(ParseError::syntax(3, "integer exponent"))
        );
        assert_eq!(parse_poly("x 2"), Err(ParseError::syntax(2, "'+' or '-'")));
        assert_eq!(parse_poly(""), Err(ParseError::syntax(0, "coefficient or variable")));
        assert_eq!(parse_poly("3/0x"), Err(ParseError::syntax(2, "nonzero denominator")));
        assert!(parse_poly("2*").is_err());
        assert!(parse_poly("x^99999").is_err());
    }

    #[test]
    fn coefficient_lists() {
        assert_eq!(parse_coeffs("-9, -6, 0, 1").unwrap(), Polynomial::from_ints(&[-9, -6, 0, 1]));
        assert_eq!(parse_coeffs("1/2,3").unwrap(), Polynomial::new(vec![rat(1, 2), rat(3, 1)]));
        assert_eq!(parse_coeffs("1,x"), Err(ParseError::syntax(2, "rational coefficient")));
    }
}
