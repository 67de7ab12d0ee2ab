//! Parser for the ASCII bundle expression grammar.
//!
//! Atoms: `O(t)`, `O`, `Q`, `S`, `Sd`. Operators: `*` (tensor), `+` (direct
//! sum), `Sym^j X`, `Wedge^j X`, `X(t)` (twist), `dual(X)`, parentheses.
//! Whitespace insensitive. Twist/Sym/Wedge/dual bind tightest, then `*`,
//! then `+`. Errors carry the byte position of the offending token;
//! unsupported plethysm surfaces as a parse error at the operator.

use crate::bundle::BundleExpr;
use crate::error::ParseError;

pub fn parse_bundle(input: &str) -> Result<BundleExpr, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn error_at(&self, position: usize, message: String) -> ParseError {
        ParseError { position, message }
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn ident(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.src.len() && self.src[end].is_ascii_alphabetic() {
            end += 1;
        }
        if end == start {
            return None;
        }
        self.pos = end;
        Some((start, String::from_utf8_lossy(&self.src[start..end]).into()))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        if end < self.src.len() && self.src[end] == b'-' {
            end += 1;
        }
        while end < self.src.len() && self.src[end].is_ascii_digit() {
            end += 1;
        }
        let text = std::str::from_utf8(&self.src[start..end]).unwrap();
        let value: i64 = text
            .parse()
            .map_err(|_| self.error_at(start, "expected an integer".to_string()))?;
        self.pos = end;
        Ok(value)
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let v = self.integer()?;
        u64::try_from(v).map_err(|_| self.error_at(start, "degree must be non-negative".into()))
    }

    fn expr(&mut self) -> Result<BundleExpr, ParseError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            acc = acc + self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BundleExpr, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.tensor(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BundleExpr, ParseError> {
        let save = self.pos;
        self.skip_ws();
        let op_pos = self.pos;
        if let Some((_, name)) = self.ident() {
            match name.as_str() {
                "Sym" | "Wedge" => {
                    self.expect(b'^')?;
                    let j = self.unsigned()?;
                    let operand = self.factor()?;
                    let result = if name == "Sym" {
                        operand.sym(j)
                    } else {
                        operand.ext(j)
                    };
                    return result.map_err(|e| self.error_at(op_pos, e.to_string()));
                }
                _ => self.pos = save,
            }
        } else {
            self.pos = save;
        }
        self.postfixed()
    }

    fn postfixed(&mut self) -> Result<BundleExpr, ParseError> {
        let mut e = self.primary()?;
        while self.peek() == Some(b'(') {
            self.expect(b'(')?;
            let t = self.integer()?;
            self.expect(b')')?;
            e = e.twist(t);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<BundleExpr, ParseError> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        self.skip_ws();
        let at = self.pos;
        match self.ident() {
            Some((_, name)) => match name.as_str() {
                "O" => Ok(BundleExpr::line(0)),
                "Q" => Ok(BundleExpr::q()),
                "S" => Ok(BundleExpr::s()),
                "Sd" => Ok(BundleExpr::s_dual()),
                "dual" => {
                    self.expect(b'(')?;
                    let e = self.expr()?;
                    self.expect(b')')?;
                    Ok(e.dual())
                }
                other => Err(self.error_at(at, format!("unknown name '{other}'"))),
            },
            None => Err(self.error_at(at, "expected a bundle atom".to_string())),
        }
    }
}
