use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of operation symbols in one signature.
pub const MAX_OPS: usize = 32;

/// How the operation symbols of a signature are organized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// One binary operation per base symbol.
    Plain,
    /// Ordered pairs `(⊢ω, ⊣ω)`; op `2j` is `⊢` and `2j + 1` is `⊣` of base symbol `j`.
    Di,
    /// Ordered pairs `(≻ω, ≺ω)`; op `2j` is `≻` and `2j + 1` is `≺` of base symbol `j`.
    Pre,
}

impl Flavor {
    pub fn is_doubled(self) -> bool {
        !matches!(self, Flavor::Plain)
    }
}

/// A finite family of binary operation symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    ops: Vec<String>,
    base: Vec<String>,
    flavor: Flavor,
}

fn validate_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '=' | '#'))
        || name.starts_with(|c: char| c.is_ascii_digit())
        || name.starts_with('+')
        || (name.starts_with('x') && name[1..].starts_with(|c: char| c.is_ascii_digit()));
    if bad {
        return Err(Error::InvalidSignature(format!("illegal operation name {name:?}")));
    }
    Ok(())
}

impl Signature {
    pub fn plain<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let ops: Vec<String> = names.into_iter().map(Into::into).collect();
        Self::build(ops.clone(), ops, Flavor::Plain)
    }

    /// A doubled signature from explicit pairs. Base names are recovered from the
    /// `|-s`/`-|s` (di) or `>s`/`<s` (pre) convention when the pair follows it.
    pub fn doubled<S: Into<String>>(flavor: Flavor, pairs: impl IntoIterator<Item = (S, S)>) -> Result<Self> {
        if flavor == Flavor::Plain {
            return Err(Error::InvalidSignature("doubled signature needs di or pre flavor".into()));
        }
        let pairs: Vec<(String, String)> = pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        let single = pairs.len() == 1;
        let (p1, p2) = match flavor {
            Flavor::Di => ("|-", "-|"),
            _ => (">", "<"),
        };
        let base = pairs
            .iter()
            .enumerate()
            .map(|(j, (a, b))| match (a.strip_prefix(p1), b.strip_prefix(p2)) {
                (Some(s), Some(t)) if s == t && !s.is_empty() => s.to_string(),
                _ if single => "*".to_string(),
                _ => format!("*{}", j + 1),
            })
            .collect();
        let ops = pairs.into_iter().flat_map(|(a, b)| [a, b]).collect();
        Self::build(ops, base, flavor)
    }

    fn build(ops: Vec<String>, base: Vec<String>, flavor: Flavor) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::InvalidSignature("no operations".into()));
        }
        if ops.len() > MAX_OPS {
            return Err(Error::InvalidSignature(format!("more than {MAX_OPS} operations")));
        }
        for (i, name) in ops.iter().enumerate() {
            validate_name(name)?;
            if ops[..i].contains(name) {
                return Err(Error::InvalidSignature(format!("duplicate operation {name:?}")));
            }
        }
        for name in &base {
            validate_name(name)?;
        }
        Ok(Signature { ops, base, flavor })
    }

    /// The di-doubling `(⊢ω, ⊣ω)` of a plain signature.
    pub fn di_of(&self) -> Result<Signature> {
        self.doubling(Flavor::Di, "|-", "-|")
    }

    /// The pre-doubling `(≻ω, ≺ω)` of a plain signature.
    pub fn pre_of(&self) -> Result<Signature> {
        self.doubling(Flavor::Pre, ">", "<")
    }

    fn doubling(&self, flavor: Flavor, left: &str, right: &str) -> Result<Signature> {
        if self.flavor != Flavor::Plain {
            return Err(Error::SignatureMismatch("only plain signatures can be doubled".into()));
        }
        let pairs = self.ops.iter().map(|s| (format!("{left}{s}"), format!("{right}{s}")));
        let mut sig = Self::doubled(flavor, pairs)?;
        sig.base = self.ops.clone();
        Ok(sig)
    }

    /// The plain signature on the base symbols.
    pub fn base(&self) -> Signature {
        Signature { ops: self.base.clone(), base: self.base.clone(), flavor: Flavor::Plain }
    }

    pub fn ops(&self) -> &[String] {
        &self.ops
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    /// Number of base symbols ω.
    pub fn base_count(&self) -> usize {
        self.base.len()
    }

    pub fn base_names(&self) -> &[String] {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn op_name(&self, op: usize) -> &str {
        &self.ops[op]
    }

    pub fn op_index(&self, name: &str) -> Option<usize> {
        self.ops.iter().position(|o| o == name)
    }

    /// Operation indices `(⊢ω, ⊣ω)` or `(≻ω, ≺ω)` of base symbol `j`.
    pub fn pair(&self, j: usize) -> (usize, usize) {
        debug_assert!(self.flavor.is_doubled());
        (2 * j, 2 * j + 1)
    }

    /// Same operation symbols in the same order (names may differ).
    pub fn same_shape(&self, other: &Signature) -> bool {
        self.flavor == other.flavor && self.ops.len() == other.ops.len()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.flavor {
            Flavor::Plain => write!(f, "ops: {}", self.ops.join(", ")),
            Flavor::Di | Flavor::Pre => {
                let key = if self.flavor == Flavor::Di { "diops" } else { "preops" };
                let pairs: Vec<String> =
                    self.ops.chunks(2).map(|p| format!("({}, {})", p[0], p[1])).collect();
                write!(f, "{key}: {}", pairs.join(", "))
            }
        }
    }
}
