//! Codimensions of varieties of nonassociative algebras and dialgebras.
//!
//! The crate computes multilinear components of T-ideals by exact rational
//! elimination, translates variety presentations to their di- and pre-
//! counterparts, works with the free Zinbiel algebra through its shuffle
//! product, and builds finite-dimensional algebras from structure constants
//! (tensor dialgebras, split null extensions, the hat construction) so that
//! the relations between these objects can be checked mechanically.
//!
//! Module map:
//!
//! - [`terms`]: signatures, multilinear monomials and polynomials, `S_n` action
//! - [`linalg`]: exact sparse row spaces
//! - [`tideal`]: T-ideal closure and codimensions
//! - [`library`]: standard presentations (Com, Lie, Leib, Perm, ...)
//! - [`transfer`]: di- and pre- presentations of a variety
//! - [`zinbiel`]: free Zinbiel algebra
//! - [`concrete`]: structure-constant algebras and constructions
//! - [`format`]: variety and algebra file formats
//! - [`zoo`]: shipped example algebras and varieties

pub mod concrete;
pub mod error;
pub mod format;
pub mod library;
pub mod linalg;
pub mod terms;
pub mod tideal;
pub mod transfer;
pub mod zinbiel;
pub mod zoo;

pub use concrete::FinDimAlgebra;
pub use error::{Error, ParseError, Result};
pub use linalg::{RowBasis, SparseVector};
pub use terms::{Flavor, Monomial, Permutation, Poly, Signature};
pub use tideal::{CodimReport, VarietyPresentation};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Caps on the size of computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest multilinear free space `dim Free(n)` that may be materialized.
    pub max_free_dim: usize,
    /// Largest number of candidate rows generated for one degree.
    pub max_rows: usize,
    /// Largest number of basis tuples evaluated on a finite-dimensional algebra.
    pub max_tuples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_free_dim: 30_240, max_rows: 20_000_000, max_tuples: 1 << 20 }
    }
}

impl Limits {
    pub fn check_free_dim(&self, dim: impl Into<u128>, degree: Option<usize>) -> Result<()> {
        let dim = dim.into();
        if dim > self.max_free_dim as u128 {
            return Err(Error::ResourceLimit {
                what: "free multilinear dimension",
                requested: dim,
                limit: self.max_free_dim as u128,
                degree,
            });
        }
        Ok(())
    }
}
