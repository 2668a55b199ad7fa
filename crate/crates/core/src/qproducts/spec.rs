use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Self {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `(sign * q^offset; q^step)_inf ^ exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub sign: Sign,
    pub offset: usize,
    pub step: usize,
    pub exponent: i64,
}

impl Factor {
    pub fn new(sign: Sign, offset: usize, step: usize, exponent: i64) -> Result<Self> {
        if offset == 0 || step == 0 {
            return Err(Error::Usage(format!(
                "Pochhammer factor needs offset and step >= 1, got q^{offset}; q^{step}"
            )));
        }
        Ok(Factor {
            sign,
            offset,
            step,
            exponent,
        })
    }

    /// `(q^k; q^k)^e`, the most common factor shape.
    pub fn euler(k: usize, exponent: i64) -> Self {
        Factor::new(Sign::Plus, k, k, exponent).expect("k >= 1")
    }
}

/// A finite product of Pochhammer factors, kept symbolic until expanded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProductSpec {
    pub factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        ProductSpec { factors }
    }

    pub fn concat(&self, other: &ProductSpec) -> ProductSpec {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        ProductSpec { factors }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        write!(f, "({sign}q^{};q^{})", self.offset, self.step)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn error(&self, msg: String) -> Error {
        Error::Parse { pos: self.pos, msg }
    }

    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    /// `q` optionally followed by `^k`.
    fn q_power(&mut self) -> Result<usize> {
        self.expect(b'q')?;
        if self.eat(b'^') {
            self.uint()
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let start = self.pos;
        self.expect(b'(')?;
        let sign = if self.eat(b'-') { Sign::Minus } else { Sign::Plus };
        let offset = self.q_power()?;
        self.expect(b';')?;
        let step = self.q_power()?;
        self.expect(b')')?;
        let exponent = if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.uint()? as i64;
            if neg {
                -e
            } else {
                e
            }
        } else {
            1
        };
        Factor::new(sign, offset, step, exponent).map_err(|e| Error::Parse {
            pos: start,
            msg: e.to_string(),
        })
    }
}

impl FromStr for ProductSpec {
    type Err = Error;

    /// Parses `(-q^1;q^2)^2 * (q^2;q^2)^-2`; whitespace is ignored. The
    /// literal `1` (or an empty string) is the empty product.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor {
            src: s.as_bytes(),
            pos: 0,
        };
        if cur.peek().is_none() {
            return Ok(ProductSpec::default());
        }
        if cur.eat(b'1') {
            return match cur.peek() {
                None => Ok(ProductSpec::default()),
                Some(_) => Err(cur.error("trailing input after '1'".into())),
            };
        }
        let mut factors = vec![cur.factor()?];
        while cur.eat(b'*') {
            factors.push(cur.factor()?);
        }
        if cur.peek().is_some() {
            return Err(cur.error("expected '*' or end of input".into()));
        }
        Ok(ProductSpec { factors })
    }
}
