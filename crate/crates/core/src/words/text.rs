//! Text form of words: `A^-1*B^2*A`, with parenthesized powers such as
//! `(A*B)^2` accepted on input. The identity prints as `1`.

use std::fmt;

use super::{Letter, Word, WordError};

pub struct WordDisplay<'a> {
    pub(super) word: &'a Word,
    pub(super) names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let run = letters[i..].iter().take_while(|&&m| m == l).count();
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = self.names.get(l.generator()).map(String::as_str).unwrap_or("?");
            let e = if l.is_inverse() { -(run as i64) } else { run as i64 };
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            i += run;
        }
        Ok(())
    }
}

pub(super) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

pub(super) fn parse(s: &str, names: &[String]) -> Result<Word, WordError> {
    let trimmed = s.trim();
    if trimmed.starts_with("<identity") && trimmed.ends_with('>') {
        return Ok(Word::identity());
    }
    let mut p = Parser { src: s.as_bytes(), pos: 0, names };
    let letters = p.product()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(Word::reduce(letters))
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> WordError {
        WordError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn starts_factor(c: u8) -> bool {
        c == b'(' || c == b'1' || c.is_ascii_alphabetic() || c == b'_'
    }

    /// Factors separated by `*` or whitespace.
    fn product(&mut self) -> Result<Vec<Letter>, WordError> {
        let mut out = Vec::new();
        match self.peek() {
            Some(c) if Self::starts_factor(c) => {}
            _ => return Ok(out),
        }
        loop {
            out.extend(self.factor()?);
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    match self.peek() {
                        Some(c) if Self::starts_factor(c) => {}
                        _ => return Err(self.error("expected factor after `*`")),
                    }
                }
                Some(c) if Self::starts_factor(c) => {}
                _ => return Ok(out),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<Letter>, WordError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            let unit: Vec<Letter> = if e < 0 {
                base.iter().rev().map(|l| l.inverse()).collect()
            } else {
                base
            };
            let mut out = Vec::with_capacity(unit.len() * e.unsigned_abs() as usize);
            for _ in 0..e.unsigned_abs() {
                out.extend_from_slice(&unit);
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Vec<Letter>, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.product()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(_) => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let g = self
                    .names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| WordError::UnknownName(name.to_string()))?;
                Ok(vec![Letter::pos(g)])
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse::<i64>()
            .map_err(|_| WordError::Parse { pos: start, msg: "bad exponent".into() })
    }
}
