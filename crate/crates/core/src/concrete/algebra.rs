use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::SparseVector;
use crate::terms::Signature;
use crate::Rational;

/// A finite-dimensional algebra given by structure constants.
///
/// `product(op, i, j)` is the coordinate vector of `e_i ∘op e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    name: String,
    sig: Signature,
    labels: Vec<String>,
    table: Vec<Vec<SparseVector>>,
}

impl FinDimAlgebra {
    /// The algebra with all products zero and basis `e1, ..., e_dim`.
    pub fn zero(name: impl Into<String>, sig: Signature, dim: usize) -> FinDimAlgebra {
        let labels = (1..=dim).map(|i| format!("e{i}")).collect();
        FinDimAlgebra::with_labels(name, sig, labels)
    }

    pub fn with_labels(name: impl Into<String>, sig: Signature, labels: Vec<String>) -> FinDimAlgebra {
        let dim = labels.len();
        let table = vec![vec![SparseVector::zero(); dim * dim]; sig.op_count()];
        FinDimAlgebra { name: name.into(), sig, labels, table }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_product(&mut self, op: usize, i: usize, j: usize, value: SparseVector) -> Result<()> {
        let dim = self.dim();
        if op >= self.sig.op_count() || i >= dim || j >= dim || value.max_pos().is_some_and(|p| p >= dim) {
            return Err(Error::InvalidArgument(format!("product entry ({op}, {i}, {j}) out of range")));
        }
        self.table[op][i * dim + j] = value;
        Ok(())
    }

    pub fn product(&self, op: usize, i: usize, j: usize) -> &SparseVector {
        &self.table[op][i * self.dim() + j]
    }

    /// `x ∘op y` for arbitrary coordinate vectors.
    pub fn multiply(&self, op: usize, x: &SparseVector, y: &SparseVector) -> SparseVector {
        if x.is_zero() || y.is_zero() {
            return SparseVector::zero();
        }
        let mut acc = vec![Rational::zero(); self.dim()];
        let mut touched = false;
        for (i, a) in x.entries() {
            for (j, b) in y.entries() {
                let e = self.product(op, *i, *j);
                if e.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in e.entries() {
                    acc[*k] += &ab * c;
                    touched = true;
                }
            }
        }
        if !touched {
            return SparseVector::zero();
        }
        SparseVector::from_sorted_unchecked(
            acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect(),
        )
    }

    /// Whether every structure constant vanishes.
    pub fn is_zero_algebra(&self) -> bool {
        self.table.iter().flatten().all(SparseVector::is_zero)
    }

    /// Same signature shape and structure constants (names and labels ignored).
    pub fn same_structure(&self, other: &FinDimAlgebra) -> bool {
        self.sig.same_shape(&other.sig) && self.table == other.table
    }
}
