use std::collections::HashSet;
use std::fmt::Write as _;

use num_traits::{One, Signed};

use super::cursor::{parse_header, Cursor};
use super::variety::strip_comment;
use crate::concrete::FinDimAlgebra;
use crate::error::{ParseError, Result};
use crate::linalg::SparseVector;
use crate::terms::{Flavor, Signature};
use crate::Rational;

fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '\'' | '.')
}

struct Pending {
    name: Option<String>,
    sig: Option<Signature>,
    labels: Option<Vec<String>>,
    dim: Option<usize>,
}

pub fn parse_algebra(text: &str) -> Result<FinDimAlgebra> {
    let mut p = Pending { name: None, sig: None, labels: None, dim: None };
    let mut alg: Option<FinDimAlgebra> = None;
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut complete: Option<(usize, usize)> = None;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let start = line.len() - line.trim_start().len();
        let mut cur = Cursor::new(line_no, line, start);
        if let Some(rest) = trimmed.strip_prefix("name:") {
            p.name = Some(rest.trim().to_string());
        } else if let Some(header) = parse_header(line_no, line) {
            if p.sig.is_some() {
                return Err(cur.error("second signature header").into());
            }
            p.sig = Some(header?);
        } else if cur.eat("dim") {
            if alg.is_some() || p.dim.is_some() {
                return Err(cur.error("`dim` must appear once, before the table").into());
            }
            let d = cur.take_while(|c| c.is_ascii_digit());
            let d: usize = d.parse().map_err(|_| cur.error("expected a dimension"))?;
            cur.expect_end()?;
            p.dim = Some(d);
        } else if cur.eat("basis") {
            if alg.is_some() || p.labels.is_some() {
                return Err(cur.error("`basis` must appear once, before the table").into());
            }
            let mut labels: Vec<String> = Vec::new();
            while !cur.at_end() {
                let before = cur.error("");
                let l = cur.take_while(is_label_char);
                if l.is_empty() || !l.starts_with(|c: char| c.is_ascii_alphabetic()) {
                    return Err(cur.error("basis labels start with a letter").into());
                }
                if labels.iter().any(|x| x == l) {
                    return Err(ParseError { message: format!("duplicate basis label {l:?}"), ..before }.into());
                }
                labels.push(l.to_string());
            }
            p.labels = Some(labels);
        } else if cur.eat("complete:") {
            let what = cur.word();
            cur.expect_end()?;
            if what != "di-lie" {
                return Err(cur.error(format!("unknown completion {what:?}")).into());
            }
            complete = Some((line_no, start + 1));
        } else if cur.eat("table") {
            if alg.is_none() {
                alg = Some(start_algebra(&p, &mut cur)?);
            }
            let a = alg.as_mut().unwrap();
            let op = cur.op(&a.sig().clone())?;
            cur.expect(":")?;
            let entry = cur.error("");
            let i = label(&mut cur, a)?;
            let j = label(&mut cur, a)?;
            cur.expect("->")?;
            let v = value(&mut cur, a)?;
            cur.expect_end()?;
            if !seen.insert((op, i, j)) {
                return Err(ParseError { message: "duplicate table entry".into(), ..entry }.into());
            }
            a.set_product(op, i, j, v).map_err(|e| cur.error(e.to_string()))?;
        } else {
            return Err(cur.error("expected `name:`, a signature header, `dim`, `basis`, `table` or `complete:`").into());
        }
    }
    let mut alg = match alg {
        Some(a) => a,
        None => {
            let mut cur = Cursor::new(text.lines().count().max(1), "", 0);
            start_algebra(&p, &mut cur)?
        }
    };
    if let Some((line, column)) = complete {
        let err = |message: &str| ParseError { line, column, message: message.into() };
        if alg.sig().flavor() != Flavor::Di {
            return Err(err("`complete: di-lie` needs a diops signature").into());
        }
        if seen.iter().any(|(op, _, _)| op % 2 == 1) {
            return Err(err("`complete: di-lie` with explicit -| entries").into());
        }
        complete_di_lie(&mut alg);
    }
    Ok(alg)
}

fn start_algebra(p: &Pending, cur: &mut Cursor) -> Result<FinDimAlgebra, ParseError> {
    let sig = p.sig.clone().ok_or_else(|| cur.error("missing signature header"))?;
    let labels = match (&p.labels, p.dim) {
        (Some(l), Some(d)) if l.len() != d => {
            return Err(cur.error(format!("`basis` lists {} labels but dim is {d}", l.len())))
        }
        (Some(l), _) => l.clone(),
        (None, Some(d)) => (1..=d).map(|i| format!("e{i}")).collect(),
        (None, None) => return Err(cur.error("missing `dim`")),
    };
    Ok(FinDimAlgebra::with_labels(p.name.clone().unwrap_or_default(), sig, labels))
}

fn label(cur: &mut Cursor, a: &FinDimAlgebra) -> Result<usize, ParseError> {
    cur.skip_ws();
    let at = cur.error("");
    let l = cur.take_while(is_label_char);
    if l.is_empty() {
        return Err(cur.error("expected a basis label"));
    }
    a.label_index(l).ok_or(ParseError { message: format!("unknown basis label {l:?}"), ..at })
}

/// `0` or `[-] [c] label ((+|-) [c] label)*`.
fn value(cur: &mut Cursor, a: &FinDimAlgebra) -> Result<SparseVector, ParseError> {
    if cur.rest().trim() == "0" {
        cur.take_while(|c| c == '0');
        return Ok(SparseVector::zero());
    }
    let mut entries = Vec::new();
    let mut sign = if cur.eat("-") { -Rational::one() } else { Rational::one() };
    loop {
        let c = cur.rational()?.unwrap_or_else(Rational::one);
        let k = label(cur, a)?;
        entries.push((k, c * &sign));
        if cur.eat("+") {
            sign = Rational::one();
        } else if cur.eat("-") {
            sign = -Rational::one();
        } else {
            break;
        }
    }
    Ok(SparseVector::from_entries(entries))
}

/// Fills each `-|` table from the matching `|-` table by `a -| b = -(b |- a)`.
pub(crate) fn complete_di_lie(alg: &mut FinDimAlgebra) {
    let dim = alg.dim();
    for j in 0..alg.sig().base_count() {
        let (l, r) = alg.sig().pair(j);
        for a in 0..dim {
            for b in 0..dim {
                let v = alg.product(l, b, a).scale(&-Rational::one());
                alg.set_product(r, a, b, v).expect("indices in range");
            }
        }
    }
}

/// Canonical text of an algebra; [`parse_algebra`] reads it back unchanged.
pub fn emit_algebra(alg: &FinDimAlgebra) -> String {
    let mut s = String::new();
    if !alg.name().is_empty() {
        let _ = writeln!(s, "name: {}", alg.name());
    }
    let _ = writeln!(s, "{}", alg.sig());
    let _ = writeln!(s, "dim {}", alg.dim());
    let _ = writeln!(s, "basis {}", alg.labels().join(" "));
    let labels = alg.labels();
    for op in 0..alg.sig().op_count() {
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let v = alg.product(op, i, j);
                if v.is_zero() {
                    continue;
                }
                let _ = write!(s, "table {}: {} {} ->", alg.sig().op_name(op), labels[i], labels[j]);
                for (n, (k, c)) in v.entries().iter().enumerate() {
                    let sign = match (n, c.is_negative()) {
                        (0, false) => "",
                        (0, true) => "-",
                        (_, false) => "+ ",
                        (_, true) => "- ",
                    };
                    let _ = write!(s, " {sign}{} {}", c.abs(), labels[*k]);
                }
                s.push('\n');
            }
        }
    }
    s
}
