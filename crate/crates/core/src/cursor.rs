//! Byte cursor shared by the small text grammars.

use crate::error::ParseError;

pub(crate) struct Cursor<'a> {
    pub(crate) bytes: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    /// Digits immediately at the cursor (no whitespace skipping), as a u64-checked decimal.
    pub(crate) fn digits(&mut self) -> Result<Option<u128>, ParseError> {
        let start = self.pos;
        let mut value: u128 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u128::from(b - b'0')))
                .ok_or_else(|| ParseError::new(start, "integer overflow"))?;
            self.pos += 1;
        }
        Ok((self.pos > start).then_some(value))
    }

    pub(crate) fn signed_int(&mut self) -> Result<i64, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        self.skip_ws();
        let magnitude = self
            .digits()?
            .ok_or_else(|| self.error("expected integer exponent"))?;
        let value = if negative {
            -(magnitude as i128)
        } else {
            magnitude as i128
        };
        i64::try_from(value).map_err(|_| ParseError::new(start, "exponent overflow"))
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// A decimal float such as `0.25`, `-1e-3` or `30`.
    pub(crate) fn float(&mut self) -> Result<f64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            let sign_ok = (b == b'-' || b == b'+')
                && (self.pos == start || matches!(self.bytes[self.pos - 1], b'e' | b'E'));
            if b.is_ascii_digit() || b == b'.' || b == b'e' || b == b'E' || sign_ok {
                self.pos += 1;
            } else {
                break;
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or("");
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(ParseError::new(start, "expected a finite number")),
        }
    }

    /// An ASCII identifier `[A-Za-z_][A-Za-z0-9_]*`.
    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            let ok = b.is_ascii_alphabetic() || b == b'_' || (self.pos > start && b.is_ascii_digit());
            if !ok {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii"))
    }
}
