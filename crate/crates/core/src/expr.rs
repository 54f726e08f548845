//! Text form of products of `(1 ± t^p)^k`.
//!
//! ```text
//! expr   := term (('*' | '/')? term)*
//! term   := atom ('^' int)?
//! atom   := '1' | '(' factor ')' | '(' expr ')'
//! factor := '1' ('+' | '-') 't' ('^' int)?
//! ```
//!
//! Whitespace is ignored, `−` is read as `-`, and a `(` directly after a
//! term multiplies, so `(1-t^3)^2(1+t^3)` parses. Exponents may carry a
//! sign. Anything that is not a factor `1 ± t^p` with `p ≥ 1`, such as
//! `1 - 2t`, `2`, `t - 1` or `1 - t + t^2`, is rejected as not
//! representable; malformed text is a parse error with a character offset.

use crate::cyclo::{CycloVector, Sign};
use crate::error::{Error, Result};
use crate::mperl::{minus_coordinates, Factor, Representation};

/// Parses an expression into its cyclotomic exponent vector.
pub fn parse_zeta_expression(text: &str) -> Result<CycloVector> {
    Ok(parse_representation(text)?.product())
}

/// Parses an expression keeping the factors as written (merged per
/// `(sign, p)`), so that the periods it forces can be read off.
pub fn parse_representation(text: &str) -> Result<Representation> {
    let mut parser = Parser::new(text);
    parser.skip_ws();
    if parser.peek() == Some('-') {
        return Err(Error::NotRepresentable(
            "a leading minus sign gives constant term -1, which no product of 1 ± t^p has".into(),
        ));
    }
    // a lone binomial may be written without parentheses
    if parser.peek() == Some('1') && matches!(parser.peek_second(), Some('+' | '-')) {
        let f = parser.factor()?;
        return match parser.peek() {
            None => Ok(Representation::new(vec![f])),
            Some('+' | '-') => Err(Error::NotRepresentable(format!(
                "polynomial with more than two terms at offset {}",
                parser.pos
            ))),
            Some(c) => Err(parser.error(format!("unexpected '{c}'; parenthesize binomials inside products"))),
        };
    }
    let factors = parser.expr()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected '{c}'")));
    }
    Ok(Representation::new(factors))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().map(|c| if c == '−' { '-' } else { c }).collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    // The character after the next one, skipping whitespace in between.
    fn peek_second(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars[self.pos + 1..]
            .iter()
            .copied()
            .find(|c| !c.is_whitespace())
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Vec<Factor>> {
        let mut out = self.term()?;
        loop {
            let k = match self.peek() {
                Some('*') => 1,
                Some('/') => -1,
                Some('(') => 0,
                _ => return Ok(out),
            };
            if k != 0 {
                self.pos += 1;
            }
            let k = if k == 0 { 1 } else { k };
            for f in self.term()? {
                let e = f.e.checked_mul(k).ok_or_else(|| self.error("exponent overflow"))?;
                out.push(Factor { e, ..f });
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Factor>> {
        let atom = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        let k = self.signed_int()?;
        atom.into_iter()
            .map(|f| {
                f.e.checked_mul(k)
                    .map(|e| Factor { e, ..f })
                    .ok_or_else(|| self.error("exponent overflow"))
            })
            .collect()
    }

    fn atom(&mut self) -> Result<Vec<Factor>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = if self.peek() == Some('1') && matches!(self.peek_second(), Some('+' | '-'))
                {
                    vec![self.factor()?]
                } else {
                    self.expr()?
                };
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some('+' | '-') => Err(Error::NotRepresentable(format!(
                        "polynomial with more than two terms at offset {}",
                        self.pos
                    ))),
                    _ => Err(self.expect(')').unwrap_err()),
                }
            }
            Some('1') if !self.chars.get(self.pos + 1).is_some_and(char::is_ascii_digit) => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(c) if c.is_ascii_digit() || c == 't' => Err(Error::NotRepresentable(format!(
                "only 1 and factors 1 ± t^p are admitted, found '{c}' at offset {}",
                self.pos
            ))),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        self.expect('1')?;
        let sign = match self.peek() {
            Some('+') => Sign::Plus,
            _ => Sign::Minus,
        };
        self.pos += 1;
        match self.peek() {
            Some('t') => self.pos += 1,
            Some(c) if c.is_ascii_digit() => {
                return Err(Error::NotRepresentable(format!(
                    "coefficient {c} on t at offset {}; only 1 ± t^p is admitted",
                    self.pos
                )))
            }
            Some(c) => return Err(self.error(format!("expected 't', found '{c}'"))),
            None => return Err(self.error("expected 't', found end of input")),
        }
        let p = if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.pos;
            let p = self.unsigned_int()?;
            if p == 0 {
                return Err(Error::NotRepresentable(format!(
                    "t^0 at offset {at}: 1 ± t^0 is not a factor 1 ± t^p with p ≥ 1"
                )));
            }
            p
        } else {
            1
        };
        Ok(Factor { sign, p, e: 1 })
    }

    fn unsigned_int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("integer {digits} out of range"),
        })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let at = self.pos;
        let v = i64::try_from(self.unsigned_int()?).map_err(|_| Error::Parse {
            position: at,
            message: "exponent out of range".into(),
        })?;
        Ok(if negative { -v } else { v })
    }
}

fn format_one(f: &Factor, e: u64) -> String {
    let base = match f.p {
        1 => format!("(1{}t)", f.sign),
        p => format!("(1{}t^{p})", f.sign),
    };
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

/// Numerator over denominator, e.g. `(1-t^3)^2*(1+t^3)/((1-t)^6*(1+t)^3)`;
/// the empty product prints as `1`.
pub fn format_factors(factors: &[Factor]) -> String {
    let num: Vec<String> = factors
        .iter()
        .filter(|f| f.e > 0)
        .map(|f| format_one(f, f.e.unsigned_abs()))
        .collect();
    let den: Vec<String> = factors
        .iter()
        .filter(|f| f.e < 0)
        .map(|f| format_one(f, f.e.unsigned_abs()))
        .collect();
    let mut out = if num.is_empty() {
        "1".to_string()
    } else {
        num.join("*")
    };
    match den.len() {
        0 => {}
        1 => {
            out.push('/');
            out.push_str(&den[0]);
        }
        _ => {
            out.push_str("/(");
            out.push_str(&den.join("*"));
            out.push(')');
        }
    }
    out
}

/// `ζ` written in its unique expansion `Π_q (1 - t^q)^{c_q}`.
pub fn format_factored(zeta: &CycloVector) -> String {
    let factors: Vec<Factor> = minus_coordinates(zeta)
        .into_iter()
        .map(|(q, c)| Factor::minus(q, c))
        .collect();
    format_factors(&factors)
}
