//! Complex literals: `a`, `bi`, `a+bi`, `a-bi`, `i`, with decimal or `n/d` parts.

use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the original text.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    /// Non-whitespace chars with their byte offsets.
    chars: Vec<(usize, char)>,
    idx: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.idx)
            .map_or(self.text.len(), |&(p, _)| p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.idx += 1;
        }
        s
    }

    /// `digits[.digits][e[±]digits][/digits]`, or `None` when no digit starts here.
    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        let start = self.pos();
        let mut s = self.digits();
        if self.peek() == Some('.') {
            self.idx += 1;
            s.push('.');
            s.push_str(&self.digits());
        }
        if s.is_empty() || s == "." {
            return if s.is_empty() {
                Ok(None)
            } else {
                self.err("expected digits")
            };
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            self.idx += 1;
            s.push('e');
            if let Some(sign @ ('+' | '-')) = self.peek() {
                s.push(sign);
                self.idx += 1;
            }
            let exp = self.digits();
            if exp.is_empty() {
                return self.err("expected exponent digits");
            }
            s.push_str(&exp);
        }
        let value: f64 = s.parse().map_err(|_| ParseError {
            position: start,
            message: format!("invalid number {s:?}"),
        })?;
        if self.peek() != Some('/') {
            return Ok(Some(value));
        }
        if s.contains(['.', 'e']) {
            return self.err("rational literals need an integer numerator");
        }
        self.idx += 1;
        let den_pos = self.pos();
        let den = self.digits();
        if den.is_empty() {
            return self.err("expected denominator digits");
        }
        let den: f64 = den.parse().expect("ascii digits");
        if den == 0.0 {
            return Err(ParseError {
                position: den_pos,
                message: "zero denominator".into(),
            });
        }
        Ok(Some(value / den))
    }

    /// `[sign] [number] [i]`; returns the value and whether it was imaginary.
    fn term(&mut self, sign_required: bool) -> Result<(f64, bool), ParseError> {
        let sign = match self.peek() {
            Some('+') => {
                self.idx += 1;
                1.0
            }
            Some('-') => {
                self.idx += 1;
                -1.0
            }
            _ if sign_required => return self.err("expected '+' or '-'"),
            _ => 1.0,
        };
        let number = self.number()?;
        let imaginary = self.peek() == Some('i');
        if imaginary {
            self.idx += 1;
        }
        match (number, imaginary) {
            (None, false) => self.err("expected a number or 'i'"),
            (n, _) => Ok((sign * n.unwrap_or(1.0), imaginary)),
        }
    }
}

pub fn parse_complex(text: &str) -> Result<Complex64, ParseError> {
    let mut cur = Cursor {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        idx: 0,
        text,
    };
    let (first, first_imag) = cur.term(false)?;
    if cur.peek().is_none() {
        return Ok(if first_imag {
            Complex64::new(0.0, first)
        } else {
            Complex64::new(first, 0.0)
        });
    }
    if first_imag {
        return cur.err("the imaginary part must come last");
    }
    let (second, second_imag) = cur.term(true)?;
    if !second_imag {
        return cur.err("expected 'i' after the imaginary part");
    }
    if cur.peek().is_some() {
        return cur.err("unexpected trailing input");
    }
    Ok(Complex64::new(first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(s: &str) -> Complex64 {
        parse_complex(s).unwrap_or_else(|e| panic!("{s:?}: {e}"))
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(ok("0.7+0.8i"), Complex64::new(0.7, 0.8));
        assert_eq!(ok("1"), Complex64::new(1.0, 0.0));
        assert_eq!(ok("-2.5i"), Complex64::new(0.0, -2.5));
        assert_eq!(ok("i"), Complex64::new(0.0, 1.0));
        assert_eq!(ok("-i"), Complex64::new(0.0, -1.0));
        assert_eq!(ok("3-i"), Complex64::new(3.0, -1.0));
        assert_eq!(ok(" 1 - 2 i "), Complex64::new(1.0, -2.0));
        assert_eq!(ok("1e-3+2E2i"), Complex64::new(1e-3, 200.0));
        assert_eq!(ok(".5"), Complex64::new(0.5, 0.0));
        assert_eq!(ok("+4"), Complex64::new(4.0, 0.0));
    }

    #[test]
    fn rationals() {
        assert_eq!(ok("1/3"), Complex64::new(1.0 / 3.0, 0.0));
        assert_eq!(ok("-7/8"), Complex64::new(-7.0 / 8.0, 0.0));
        assert_eq!(ok("1/2-1/3i"), Complex64::new(0.5, -1.0 / 3.0));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_complex("2+").unwrap_err();
        assert_eq!(e.position, 2);
        assert_eq!(parse_complex("").unwrap_err().position, 0);
        assert_eq!(parse_complex("1+2").unwrap_err().position, 3);
        assert_eq!(parse_complex("2i+1").unwrap_err().position, 2);
        assert_eq!(parse_complex("1/0").unwrap_err().position, 2);
        assert_eq!(parse_complex("1+2ix").unwrap_err().position, 4);
        assert!(parse_complex("1.5/2").is_err());
        assert!(parse_complex("1e").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1++2i").is_err());
    }
}
