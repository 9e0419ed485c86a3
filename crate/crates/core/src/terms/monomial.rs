use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::terms::Signature;

/// Token values below this are operation indices; `VAR_BASE + i` is variable `x_i`.
pub(crate) const VAR_BASE: u8 = 64;
/// Largest variable index a monomial can carry.
pub const MAX_DEGREE: usize = (u8::MAX - VAR_BASE) as usize;

/// A planar binary tree with operation-labelled nodes and variable-labelled leaves.
///
/// Stored as its preorder serialization: one byte per node, operation indices
/// for internal nodes and `VAR_BASE + i` for the leaf `x_i`. Monomials order by
/// degree and then lexicographically on that serialization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    code: Box<[u8]>,
}

/// One level of a monomial's tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node<'a> {
    Leaf(usize),
    Op { op: usize, left: &'a [u8], right: &'a [u8] },
}

/// End (exclusive) of the subtree starting at `start`.
pub(crate) fn subtree_end(code: &[u8], start: usize) -> usize {
    let mut need = 1usize;
    let mut i = start;
    while need > 0 {
        if code[i] < VAR_BASE {
            need += 1;
        } else {
            need -= 1;
        }
        i += 1;
    }
    i
}

pub(crate) fn node(code: &[u8]) -> Node<'_> {
    let head = code[0];
    if head >= VAR_BASE {
        Node::Leaf((head - VAR_BASE) as usize)
    } else {
        let mid = subtree_end(code, 1);
        Node::Op { op: head as usize, left: &code[1..mid], right: &code[mid..] }
    }
}

pub(crate) fn leaves_of(code: &[u8]) -> impl Iterator<Item = usize> + '_ {
    code.iter().filter(|&&t| t >= VAR_BASE).map(|&t| (t - VAR_BASE) as usize)
}

impl Monomial {
    pub fn var(i: usize) -> Monomial {
        assert!((1..=MAX_DEGREE).contains(&i), "variable index {i} out of range");
        Monomial { code: vec![VAR_BASE + i as u8].into_boxed_slice() }
    }

    /// `left ∘op right`.
    pub fn op(op: usize, left: &Monomial, right: &Monomial) -> Monomial {
        assert!(op < VAR_BASE as usize);
        let mut code = Vec::with_capacity(1 + left.code.len() + right.code.len());
        code.push(op as u8);
        code.extend_from_slice(&left.code);
        code.extend_from_slice(&right.code);
        Monomial { code: code.into_boxed_slice() }
    }

    /// Wraps a serialization that is already known to be a complete tree.
    pub(crate) fn from_code_unchecked(code: Vec<u8>) -> Monomial {
        debug_assert!(!code.is_empty() && subtree_end(&code, 0) == code.len());
        Monomial { code: code.into_boxed_slice() }
    }

    pub fn from_code(code: &[u8]) -> Result<Monomial> {
        let mut need = 1isize;
        for (i, &t) in code.iter().enumerate() {
            if need == 0 {
                return Err(Error::InvalidArgument(format!("trailing tokens at {i}")));
            }
            if t >= VAR_BASE {
                if t == VAR_BASE {
                    return Err(Error::InvalidArgument("variable index 0".into()));
                }
                need -= 1;
            } else {
                need += 1;
            }
        }
        if need != 0 {
            return Err(Error::InvalidArgument("incomplete tree".into()));
        }
        Ok(Monomial { code: code.into() })
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    pub fn node(&self) -> Node<'_> {
        node(&self.code)
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        self.code.len().div_ceil(2)
    }

    /// Leaf labels in left-to-right order.
    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        leaves_of(&self.code)
    }

    /// Operation labels in preorder.
    pub fn ops(&self) -> impl Iterator<Item = usize> + '_ {
        self.code.iter().filter(|&&t| t < VAR_BASE).map(|&t| t as usize)
    }

    pub fn max_op(&self) -> Option<usize> {
        self.ops().max()
    }

    /// Each of `1..=degree` occurs exactly once as a leaf.
    pub fn is_multilinear(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        for v in self.leaves() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Applies `f` to every leaf label.
    pub fn relabel(&self, mut f: impl FnMut(usize) -> usize) -> Monomial {
        let code = self
            .code
            .iter()
            .map(|&t| if t >= VAR_BASE { VAR_BASE + f((t - VAR_BASE) as usize) as u8 } else { t })
            .collect();
        Monomial { code }
    }

    /// Applies `f` to every operation label.
    pub fn map_ops(&self, mut f: impl FnMut(usize) -> usize) -> Monomial {
        let code = self
            .code
            .iter()
            .map(|&t| if t < VAR_BASE { f(t as usize) as u8 } else { t })
            .collect();
        Monomial { code }
    }

    /// Renders as `(t1 <op> t2)` with variables `x1, x2, ...`.
    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        DisplayCode { code: &self.code, sig: Some(sig) }
    }
}

pub(crate) struct DisplayCode<'a> {
    pub(crate) code: &'a [u8],
    pub(crate) sig: Option<&'a Signature>,
}

impl fmt::Display for DisplayCode<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match node(self.code) {
            Node::Leaf(i) => write!(f, "x{i}"),
            Node::Op { op, left, right } => {
                let l = DisplayCode { code: left, sig: self.sig };
                let r = DisplayCode { code: right, sig: self.sig };
                match self.sig {
                    Some(sig) if op < sig.op_count() => write!(f, "({l} {} {r})", sig.op_name(op)),
                    _ => write!(f, "({l} #{op} {r})"),
                }
            }
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", DisplayCode { code: &self.code, sig: None })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.len().cmp(&other.code.len()).then_with(|| self.code.cmp(&other.code))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(op: usize, l: Monomial, r: Monomial) -> Monomial {
        Monomial::op(op, &l, &r)
    }

    #[test]
    fn structure_and_leaves() {
        let t = m(0, m(1, Monomial::var(2), Monomial::var(3)), Monomial::var(1));
        assert_eq!(t.degree(), 3);
        assert_eq!(t.leaves().collect::<Vec<_>>(), [2, 3, 1]);
        assert!(t.is_multilinear());
        match t.node() {
            Node::Op { op, left, right } => {
                assert_eq!(op, 0);
                assert_eq!(left.len(), 3);
                assert_eq!(right, &[VAR_BASE + 1]);
            }
            Node::Leaf(_) => panic!(),
        }
        assert_eq!(format!("{t:?}"), "((x2 #1 x3) #0 x1)");
        assert!(!m(0, Monomial::var(1), Monomial::var(1)).is_multilinear());
    }

    #[test]
    fn from_code_validates() {
        assert!(Monomial::from_code(&[0, VAR_BASE + 1]).is_err());
        assert!(Monomial::from_code(&[VAR_BASE + 1, VAR_BASE + 2]).is_err());
        assert!(Monomial::from_code(&[0, VAR_BASE + 1, VAR_BASE + 2]).is_ok());
    }

    #[test]
    fn order_is_degree_first() {
        let a = Monomial::var(2);
        let b = m(0, Monomial::var(1), Monomial::var(2));
        assert!(a < b);
        let c = m(0, Monomial::var(2), Monomial::var(1));
        assert!(b < c);
    }
}
