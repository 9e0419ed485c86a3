use num_bigint::BigInt;

use crate::error::ParseError;
use crate::terms::Signature;
use crate::Rational;

/// A position-tracking reader over one line.
pub(crate) struct Cursor<'a> {
    line_no: usize,
    line: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(line_no: usize, line: &'a str, pos: usize) -> Self {
        Cursor { line_no, line, pos }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        let column = self.line[..self.pos].chars().count() + 1;
        ParseError { line: self.line_no, column, message: message.into() }
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.line[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.line.len()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected {s:?}")))
        }
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// A maximal run of characters satisfying `f`.
    pub(crate) fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !f(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    pub(crate) fn word(&mut self) -> &'a str {
        self.take_while(|c| !c.is_whitespace())
    }

    /// `int ["/" uint]`, unsigned.
    pub(crate) fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        self.skip_ws();
        if !self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            return Ok(None);
        }
        let num: BigInt = self.take_while(|c| c.is_ascii_digit()).parse().unwrap();
        let den: BigInt = if self.rest().starts_with('/') {
            self.pos += 1;
            let d = self.take_while(|c| c.is_ascii_digit());
            if d.is_empty() {
                return Err(self.error("expected denominator"));
            }
            d.parse().unwrap()
        } else {
            BigInt::from(1)
        };
        if den == BigInt::from(0) {
            return Err(self.error("zero denominator"));
        }
        Ok(Some(Rational::new(num, den)))
    }

    /// The longest operation name of `sig` starting here.
    pub(crate) fn op(&mut self, sig: &Signature) -> Result<usize, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let best = (0..sig.op_count())
            .filter(|&o| rest.starts_with(sig.op_name(o)))
            .max_by_key(|&o| sig.op_name(o).len());
        match best {
            Some(o) => {
                self.pos += sig.op_name(o).len();
                Ok(o)
            }
            None => {
                let shown: String = rest.chars().take_while(|c| !c.is_whitespace()).collect();
                Err(self.error(format!("unknown operation {shown:?}")))
            }
        }
    }
}

/// Parses a signature header line (`ops:`, `diops:`, `preops:`); `None` if the line is not one.
pub(crate) fn parse_header(line_no: usize, line: &str) -> Option<Result<Signature, ParseError>> {
    use crate::terms::Flavor;
    let (key, flavor) = [("ops:", Flavor::Plain), ("diops:", Flavor::Di), ("preops:", Flavor::Pre)]
        .into_iter()
        .find(|(k, _)| line.trim_start().starts_with(k))?;
    let start = line.find(key).unwrap() + key.len();
    let mut cur = Cursor::new(line_no, line, start);
    let to_err = |cur: &Cursor, e: crate::Error| cur.error(e.to_string());
    let result = if flavor == Flavor::Plain {
        let mut names = Vec::new();
        loop {
            let name = cur.take_while(|c| !c.is_whitespace() && c != ',');
            if name.is_empty() {
                return Some(Err(cur.error("expected operation name")));
            }
            names.push(name);
            if !cur.eat(",") {
                break;
            }
        }
        if let Err(e) = cur.expect_end() {
            return Some(Err(e));
        }
        Signature::plain(names).map_err(|e| to_err(&cur, e))
    } else {
        let mut pairs = Vec::new();
        loop {
            if let Err(e) = cur.expect("(") {
                return Some(Err(e));
            }
            let a = cur.take_while(|c| !c.is_whitespace() && c != ',' && c != ')');
            if let Err(e) = cur.expect(",") {
                return Some(Err(e));
            }
            let b = cur.take_while(|c| !c.is_whitespace() && c != ',' && c != ')');
            if let Err(e) = cur.expect(")") {
                return Some(Err(e));
            }
            pairs.push((a, b));
            if !cur.eat(",") {
                break;
            }
        }
        if let Err(e) = cur.expect_end() {
            return Some(Err(e));
        }
        Signature::doubled(flavor, pairs).map_err(|e| to_err(&cur, e))
    };
    Some(result)
}
