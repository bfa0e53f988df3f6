//! Parser for algebra strings such as `E8`, `A4xA4` or `a1 x e7`.
//!
//! Grammar: `FACTOR ("x" FACTOR)*` with `FACTOR = [A-Ga-g] DIGITS`.
//! Whitespace is ignored and letters are case-insensitive.

use eqrank_core::rootsys::{Family, SemisimpleAlgebra, SimpleType};
use thiserror::Error;

/// Syntax or validity error, with the byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        message: message.into(),
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn factor(&mut self) -> Result<SimpleType, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let c = self.peek().ok_or_else(|| err(start, "expected a simple factor such as A4 or E8"))?;
        let family = Family::from_letter(c).ok_or_else(|| err(start, format!("expected a family letter A-G, found {c:?}")))?;
        self.pos += c.len_utf8();
        self.skip_ws();
        let digits_at = self.pos;
        let digits: String = self.src[self.pos..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(err(digits_at, format!("expected a rank after {}", family.letter())));
        }
        self.pos += digits.len();
        let rank: usize = digits.parse().map_err(|_| err(digits_at, "rank is too large"))?;
        SimpleType::new(family, rank).map_err(|e| err(start, e.to_string()))
    }
}

pub fn parse_simple(s: &str) -> Result<SimpleType, ParseError> {
    let a = parse_algebra(s)?;
    match a.factors() {
        [t] => Ok(*t),
        _ => Err(err(0, format!("expected a simple algebra, got {a}"))),
    }
}

pub fn parse_algebra(s: &str) -> Result<SemisimpleAlgebra, ParseError> {
    let mut cur = Cursor { src: s, pos: 0 };
    let mut factors = vec![cur.factor()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('x' | 'X') => {
                cur.pos += 1;
                factors.push(cur.factor()?);
            }
            Some(c) => return Err(err(cur.pos, format!("expected 'x' or end of input, found {c:?}"))),
        }
    }
    SemisimpleAlgebra::new(factors).map_err(|e| err(0, e.to_string()))
}

/// Comma-separated integer list, e.g. `1,0,2`.
pub fn parse_labels(s: &str) -> Result<Vec<i64>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let t = part.trim();
        out.push(t.parse().map_err(|_| err(offset, format!("expected an integer, found {t:?}")))?);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_algebra("A4xA4").unwrap().to_string(), "A4xA4");
        assert_eq!(parse_algebra(" e7 X a1 ").unwrap().to_string(), "A1xE7");
        assert_eq!(parse_algebra("C2xD3").unwrap().to_string(), "A3xB2");
        assert_eq!(parse_simple("g2").unwrap().to_string(), "G2");
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(parse_algebra("A4xH2").unwrap_err().offset, 3);
        assert_eq!(parse_algebra("A4x").unwrap_err().offset, 3);
        assert_eq!(parse_algebra("A4 A4").unwrap_err().offset, 3);
        assert_eq!(parse_algebra("E").unwrap_err().offset, 1);
        assert_eq!(parse_algebra("").unwrap_err().offset, 0);
        let e = parse_algebra("A1xE9").unwrap_err();
        assert_eq!(e.offset, 3);
    }

    #[test]
    fn d2_suggests_a1xa1() {
        let e = parse_algebra("D2").unwrap_err();
        assert!(e.message.contains("A1xA1"), "{e}");
    }

    #[test]
    fn labels() {
        assert_eq!(parse_labels("1, 0,2").unwrap(), vec![1, 0, 2]);
        assert_eq!(parse_labels("1,x").unwrap_err().offset, 2);
    }
}
