//! Exact rational row spaces.
//!
//! [`RowBasis`] keeps its rows in reduced row echelon form with unit pivots
//! while rows are streamed in one at a time. The reduced echelon basis of a
//! subspace is unique, so the result never depends on insertion order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Limits, Rational};

/// A sparse vector: strictly increasing positions, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVector {
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero() -> SparseVector {
        SparseVector::default()
    }

    pub fn unit(pos: usize) -> SparseVector {
        SparseVector { entries: vec![(pos, Rational::one())] }
    }

    /// Sums repeated positions and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseVector {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (p, c) in entries {
            *acc.entry(p).or_insert_with(Rational::zero) += c;
        }
        SparseVector { entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> SparseVector {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVector { entries }
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, pos: usize) -> Option<&Rational> {
        self.entries.binary_search_by_key(&pos, |(p, _)| *p).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(p, c)| (*p, c))
    }

    pub fn max_pos(&self) -> Option<usize> {
        self.entries.last().map(|(p, _)| *p)
    }

    pub fn scale(&self, c: &Rational) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero();
        }
        SparseVector { entries: self.entries.iter().map(|(p, x)| (*p, x * c)).collect() }
    }

    /// Scales so that the leading entry is one.
    pub fn normalized(&self) -> SparseVector {
        match self.entries.first() {
            Some((_, lead)) if !lead.is_one() => self.scale(&lead.recip()),
            _ => self.clone(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVector) -> SparseVector {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + c * &b[j].1;
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVector { entries: out }
    }

    /// Relabels positions through `map` (which must be injective on the support).
    pub fn permuted(&self, map: impl Fn(usize) -> usize) -> SparseVector {
        let mut entries: Vec<(usize, Rational)> =
            self.entries.iter().map(|(p, c)| (map(*p), c.clone())).collect();
        entries.sort_unstable_by_key(|(p, _)| *p);
        SparseVector { entries }
    }

    fn dump_line(&self) -> String {
        let mut s = String::new();
        for (k, (p, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{p}:{}/{}", c.numer(), c.denom());
        }
        s
    }
}

const NO_ROW: u32 = u32::MAX;

/// A subspace of `ℚ^ambient_dim` kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct RowBasis {
    ambient_dim: usize,
    rows: Vec<SparseVector>,
    row_of_pivot: Vec<u32>,
    // column -> ids of rows that may have an entry there (superset; pivot columns cleared)
    occ: Vec<Vec<u32>>,
}

impl RowBasis {
    pub fn new(ambient_dim: usize) -> RowBasis {
        RowBasis {
            ambient_dim,
            rows: Vec::new(),
            row_of_pivot: vec![NO_ROW; ambient_dim],
            occ: vec![Vec::new(); ambient_dim],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: &SparseVector) -> Result<()> {
        match v.max_pos() {
            Some(p) if p >= self.ambient_dim => {
                Err(Error::AmbientMismatch { expected: self.ambient_dim, found: p + 1 })
            }
            _ => Ok(()),
        }
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot[col] != NO_ROW
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVector> + '_ {
        self.row_of_pivot.iter().filter(|&&r| r != NO_ROW).map(move |&r| &self.rows[r as usize])
    }

    /// The row whose pivot is `col`.
    pub fn pivot_row(&self, col: usize) -> Option<&SparseVector> {
        match self.row_of_pivot.get(col) {
            Some(&r) if r != NO_ROW => Some(&self.rows[r as usize]),
            _ => None,
        }
    }

    /// Remainder of `v` modulo the span. Every entry of the result sits in a non-pivot column.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        if v.entries.iter().all(|(p, _)| !self.is_pivot(*p)) {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (p, c) in &v.entries {
            match self.row_of_pivot[*p] {
                NO_ROW => *acc.entry(*p).or_insert_with(Rational::zero) += c,
                r => {
                    for (q, x) in &self.rows[r as usize].entries[1..] {
                        *acc.entry(*q).or_insert_with(Rational::zero) -= c * x;
                    }
                }
            }
        }
        SparseVector { entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        self.check(v)?;
        Ok(self.reduce(v).is_zero())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool> {
        self.check(v)?;
        let r = self.reduce(v);
        if r.is_zero() {
            return Ok(false);
        }
        let r = r.normalized();
        let pivot = r.entries[0].0;
        let id = self.rows.len() as u32;
        for other in std::mem::take(&mut self.occ[pivot]) {
            let row = &self.rows[other as usize];
            let Some(c) = row.get(pivot).cloned() else { continue };
            let (updated, fresh) = eliminate(row, &c, &r);
            self.rows[other as usize] = updated;
            for col in fresh {
                self.occ[col].push(other);
            }
        }
        for (col, _) in &r.entries[1..] {
            self.occ[*col].push(id);
        }
        self.row_of_pivot[pivot] = id;
        self.rows.push(r);
        Ok(true)
    }

    /// Inserts every vector; returns the rank increase.
    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a SparseVector>) -> Result<usize> {
        let mut grew = 0;
        for v in vs {
            grew += usize::from(self.insert(v)?);
        }
        Ok(grew)
    }

    /// Mutual containment.
    pub fn same_span(&self, other: &RowBasis) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.rank() == other.rank()
            && self.rows().zip(other.rows()).all(|(a, b)| a == b)
    }

    /// Whether every row of `other` lies in this span.
    pub fn contains_span(&self, other: &RowBasis) -> Result<bool> {
        for row in other.rows() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Vectors `x` with `row · x = 0` for every row, as a row space.
    pub fn annihilator(&self) -> RowBasis {
        let mut by_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.ambient_dim];
        for row in self.rows() {
            let pivot = row.entries[0].0;
            for (c, x) in &row.entries[1..] {
                by_col[*c].push((pivot, -x.clone()));
            }
        }
        let mut out = RowBasis::new(self.ambient_dim);
        for (c, mut entries) in by_col.into_iter().enumerate() {
            if self.is_pivot(c) {
                continue;
            }
            entries.push((c, Rational::one()));
            let v = SparseVector::from_entries(entries);
            out.insert(&v).expect("positions are in range");
        }
        out
    }

    /// One row per line as `pos:num/den` pairs, ordered by pivot.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for row in self.rows() {
            s.push_str(&row.dump_line());
            s.push('\n');
        }
        s
    }
}

impl PartialEq for RowBasis {
    fn eq(&self, other: &Self) -> bool {
        self.same_span(other)
    }
}

impl Eq for RowBasis {}

/// `row - c * pivot_row`, plus the columns that became nonzero.
fn eliminate(row: &SparseVector, c: &Rational, pivot_row: &SparseVector) -> (SparseVector, Vec<usize>) {
    let (a, b) = (&row.entries, &pivot_row.entries);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut fresh = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            fresh.push(b[j].0);
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    (SparseVector { entries: out }, fresh)
}

/// Reduced echelon basis of the span of `rows`.
pub fn row_space<'a>(rows: impl IntoIterator<Item = &'a SparseVector>, ambient_dim: usize) -> Result<RowBasis> {
    let mut b = RowBasis::new(ambient_dim);
    b.extend(rows)?;
    Ok(b)
}

/// [`row_space`] with the ambient dimension checked against a cap.
pub fn row_space_capped<'a>(
    rows: impl IntoIterator<Item = &'a SparseVector>,
    ambient_dim: usize,
    limits: &Limits,
) -> Result<RowBasis> {
    limits.check_free_dim(ambient_dim as u128, None)?;
    row_space(rows, ambient_dim)
}
