//! Evaluation of multilinear monomials on basis tuples.

use std::collections::HashMap;

use crate::concrete::FinDimAlgebra;
use crate::linalg::SparseVector;
use crate::terms::{node, Monomial, Node};

#[derive(Clone, Copy, Debug)]
enum PlanNode {
    Leaf(usize),
    Op(usize, usize, usize),
}

/// A set of monomials with shared subtrees interned, evaluated bottom-up.
#[derive(Clone, Debug)]
pub struct EvalPlan {
    nodes: Vec<PlanNode>,
    roots: Vec<usize>,
    degree: usize,
}

impl EvalPlan {
    pub fn new<'a>(monomials: impl IntoIterator<Item = &'a Monomial>) -> EvalPlan {
        let mut ids: HashMap<Vec<u8>, usize> = HashMap::new();
        let mut nodes = Vec::new();
        let mut roots = Vec::new();
        let mut degree = 0;
        for m in monomials {
            degree = degree.max(m.leaves().max().unwrap_or(0));
            roots.push(intern(m.code(), &mut ids, &mut nodes));
        }
        EvalPlan { nodes, roots, degree }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Values of every monomial when `x_v` is the basis vector `tuple[v-1]`.
    pub fn eval(&self, alg: &FinDimAlgebra, tuple: &[usize]) -> Vec<SparseVector> {
        debug_assert!(tuple.len() >= self.degree);
        let mut vals: Vec<SparseVector> = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let v = match *n {
                PlanNode::Leaf(i) => SparseVector::unit(tuple[i - 1]),
                PlanNode::Op(op, l, r) => alg.multiply(op, &vals[l], &vals[r]),
            };
            vals.push(v);
        }
        self.roots.iter().map(|&r| vals[r].clone()).collect()
    }
}

fn intern(code: &[u8], ids: &mut HashMap<Vec<u8>, usize>, nodes: &mut Vec<PlanNode>) -> usize {
    if let Some(&id) = ids.get(code) {
        return id;
    }
    let n = match node(code) {
        Node::Leaf(i) => PlanNode::Leaf(i),
        Node::Op { op, left, right } => {
            let l = intern(left, ids, nodes);
            let r = intern(right, ids, nodes);
            PlanNode::Op(op, l, r)
        }
    };
    nodes.push(n);
    ids.insert(code.to_vec(), nodes.len() - 1);
    nodes.len() - 1
}

/// All `dim^n` tuples of basis indices, last coordinate fastest.
pub fn basis_tuples(dim: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur = if dim == 0 && n > 0 { None } else { Some(vec![0usize; n]) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        let mut k = n;
        loop {
            if k == 0 {
                cur = None;
                break;
            }
            k -= 1;
            c[k] += 1;
            if c[k] < dim {
                break;
            }
            c[k] = 0;
        }
        Some(out)
    })
}
