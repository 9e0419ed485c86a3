//! Text formats for variety presentations and structure-constant algebras.
//!
//! Variety file:
//!
//! ```text
//! # comments start with '#'
//! name: Lie
//! ops: *
//! identity (x1 * x2) + (x2 * x1) = 0
//! identity ((x1 * x2) * x3) = (x1 * (x2 * x3)) - (x2 * (x1 * x3))
//! ```
//!
//! The header is one of `ops: a, b`, `diops: (|-, -|)` or `preops: (>, <)`.
//! A term is an optional rational coefficient followed by a factor
//! `x<digits>` or `(factor op factor)`. Identities that repeat a variable
//! are replaced by their full linearization.
//!
//! Algebra file:
//!
//! ```text
//! name: P2
//! ops: *
//! dim 2
//! basis e1 e2
//! table *: e1 e1 -> 1 e1
//! table *: e1 e2 -> 1 e2
//! ```
//!
//! Unlisted products are zero. For a di signature, `complete: di-lie` fills
//! every `⊣` table from the `⊢` table by `a ⊣ b = −(b ⊢ a)`.

mod algebra;
mod cursor;
mod variety;

pub use algebra::{emit_algebra, parse_algebra};
pub use variety::{emit_variety, parse_variety, parse_variety_with_notices, ParsedVariety};
