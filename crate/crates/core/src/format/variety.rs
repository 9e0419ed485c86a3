use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::cursor::{parse_header, Cursor};
use crate::error::{ParseError, Result};
use crate::terms::{multilinearize, Monomial, RawPoly, Signature, MAX_DEGREE};
use crate::tideal::VarietyPresentation;
use crate::Rational;

/// A parsed presentation and any notices about rewritten identities.
#[derive(Clone, Debug)]
pub struct ParsedVariety {
    pub presentation: VarietyPresentation,
    pub notices: Vec<String>,
}

pub fn parse_variety(text: &str) -> Result<VarietyPresentation> {
    Ok(parse_variety_with_notices(text)?.presentation)
}

pub fn parse_variety_with_notices(text: &str) -> Result<ParsedVariety> {
    let mut name: Option<String> = None;
    let mut sig: Option<Signature> = None;
    let mut generators = Vec::new();
    let mut notices = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            continue;
        }
        if let Some(header) = parse_header(line_no, line) {
            if sig.is_some() {
                let col = line.len() - line.trim_start().len() + 1;
                return Err(ParseError { line: line_no, column: col, message: "second signature header".into() }.into());
            }
            sig = Some(header?);
            continue;
        }
        let start = line.len() - line.trim_start().len();
        let mut cur = Cursor::new(line_no, line, start);
        if !cur.eat("identity") {
            return Err(cur.error("expected `identity`, `name:` or a signature header").into());
        }
        let Some(sig) = &sig else {
            return Err(cur.error("identity before the signature header").into());
        };
        let mut poly = RawPoly::default();
        expr(&mut cur, sig, &Rational::one(), &mut poly)?;
        cur.expect("=")?;
        expr(&mut cur, sig, &-Rational::one(), &mut poly)?;
        cur.expect_end()?;
        let repeated = poly.terms.iter().any(|(m, _)| !m.is_multilinear());
        let linear = multilinearize(&poly).map_err(|e| cur.error(e.to_string()))?;
        if linear.is_empty() {
            notices.push(format!("line {line_no}: identity is trivial and was dropped"));
            continue;
        }
        if repeated {
            notices.push(format!("line {line_no}: identity was multilinearized"));
        }
        generators.extend(linear);
    }
    let Some(sig) = sig else {
        return Err(ParseError { line: 1, column: 1, message: "missing signature header".into() }.into());
    };
    let presentation = VarietyPresentation::new(name.unwrap_or_default(), sig, generators)?;
    Ok(ParsedVariety { presentation, notices })
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

/// `expr := [sign] term (sign term)*`, accumulated into `out` scaled by `scale`.
fn expr(cur: &mut Cursor, sig: &Signature, scale: &Rational, out: &mut RawPoly) -> Result<(), ParseError> {
    let mut sign = if cur.eat("-") {
        -Rational::one()
    } else {
        cur.eat("+");
        Rational::one()
    };
    loop {
        let coeff = cur.rational()?;
        let has_factor = matches!(cur.peek(), Some('(') | Some('x'));
        match (coeff, has_factor) {
            (Some(c), false) if c.is_zero() => {}
            (c, true) => {
                let m = factor(cur, sig)?;
                let c = c.unwrap_or_else(Rational::one);
                out.push(m, c * &sign * scale);
            }
            (_, false) => return Err(cur.error("expected a variable or '('")),
        }
        if cur.eat("+") {
            sign = Rational::one();
        } else if cur.eat("-") {
            sign = -Rational::one();
        } else {
            return Ok(());
        }
    }
}

/// `factor := x<digits> | "(" factor op factor ")"`.
fn factor(cur: &mut Cursor, sig: &Signature) -> Result<Monomial, ParseError> {
    if cur.eat("(") {
        let left = factor(cur, sig)?;
        let op = cur.op(sig)?;
        let right = factor(cur, sig)?;
        if !cur.eat(")") {
            return Err(cur.error("expected ')': operations are binary"));
        }
        return Ok(Monomial::op(op, &left, &right));
    }
    if cur.eat("x") {
        let digits = cur.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return Err(cur.error("expected variable index after 'x'"));
        }
        let index: usize = cur.take_while(|c| c.is_ascii_digit()).parse().unwrap_or(0);
        if index == 0 || index > MAX_DEGREE {
            return Err(cur.error(format!("variable index must be in 1..={MAX_DEGREE}")));
        }
        return Ok(Monomial::var(index));
    }
    Err(cur.error("expected a variable or '('"))
}

/// Canonical text of a presentation; [`parse_variety`] reads it back unchanged.
pub fn emit_variety(v: &VarietyPresentation) -> String {
    let mut s = String::new();
    if !v.name().is_empty() {
        let _ = writeln!(s, "name: {}", v.name());
    }
    let _ = writeln!(s, "{}", v.sig());
    for g in v.generators() {
        let _ = writeln!(s, "identity {} = 0", g.display(v.sig()));
    }
    s
}
