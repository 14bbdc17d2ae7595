//! Reads back the rendered radical expressions found in documents:
//!
//! ```text
//! sum     := product (" + " product)*
//! product := factor (" * " factor)*
//! factor  := rational | "(" sum ")" | "root(" index ", " sum ", " branch ")"
//! ```

use resolvent_core::complex::parse_rational;
use resolvent_core::RadicalExpr;

use crate::parse::ParseError;

struct Reader<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{}'", c as char)))
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn number(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit() || *c == b'/')
        {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).ok()?;
        if text.is_empty() || text == "-" {
            self.pos = start;
            return None;
        }
        Some(text)
    }

    fn integer(&mut self, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        self.number()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ParseError::Syntax {
                position: at,
                expected: what.to_string(),
            })
    }

    fn sum(&mut self) -> Result<RadicalExpr, ParseError> {
        let mut terms = vec![self.product()?];
        while self.eat(b'+') {
            terms.push(self.product()?);
        }
        Ok(RadicalExpr::sum(terms))
    }

    fn product(&mut self) -> Result<RadicalExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(RadicalExpr::product(factors))
    }

    fn factor(&mut self) -> Result<RadicalExpr, ParseError> {
        if self.eat(b'(') {
            let e = self.sum()?;
            self.expect(b')')?;
            return Ok(e);
        }
        self.skip_ws();
        if self.s[self.pos..].starts_with(b"root") {
            self.pos += 4;
            self.expect(b'(')?;
            let index = self.integer("root index")?;
            self.expect(b',')?;
            let radicand = self.sum()?;
            self.expect(b',')?;
            let branch = self.integer("branch index")?;
            self.expect(b')')?;
            if index < 2 || branch >= index {
                return Err(self.error("branch below an index of at least 2"));
            }
            return Ok(RadicalExpr::Root {
                index,
                radicand: Box::new(radicand),
                branch,
            });
        }
        let at = self.pos;
        let q = self
            .number()
            .and_then(parse_rational)
            .ok_or_else(|| ParseError::Syntax {
                position: at,
                expected: "rational, '(' or root(".into(),
            })?;
        Ok(RadicalExpr::Const(q))
    }
}

pub fn parse_radical(text: &str) -> Result<RadicalExpr, ParseError> {
    let mut r = Reader {
        s: text.as_bytes(),
        pos: 0,
    };
    let e = r.sum()?;
    r.skip_ws();
    if r.pos != r.s.len() {
        return Err(r.error("end of expression"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use resolvent_core::complex::{int, rat};
    use resolvent_core::resolvent::solve_quartic;

    #[test]
    fn round_trips_rendered_trees() {
        let report = solve_quartic(&int(3), &int(-7), &rat(1, 2));
        for r in &report.roots {
            let e = r.closed_form.as_ref().unwrap();
            let back = parse_radical(&e.render()).unwrap();
            assert!((back.eval() - e.eval()).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_radical("root(2, 3)").is_err());
        assert!(parse_radical("root(2, 3, 2)").is_err());
        assert!(parse_radical("1 +").is_err());
        assert_eq!(parse_radical("-1/2").unwrap(), RadicalExpr::Const(rat(-1, 2)));
    }
}
