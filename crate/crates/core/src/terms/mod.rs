//! Multilinear nonassociative monomials and polynomials over a family of
//! binary operations, with the symmetric group action, substitution and
//! linearization.

mod monomial;
mod perm;
mod poly;
mod signature;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub use monomial::{Monomial, Node, MAX_DEGREE};
pub(crate) use monomial::{leaves_of, node, VAR_BASE};
pub use perm::Permutation;
pub use poly::Poly;
pub use signature::{Flavor, Signature, MAX_OPS};

use crate::error::{Error, Result};
use crate::linalg::SparseVector;
use crate::{Limits, Rational};

/// `dim Free(n) = n! · Catalan(n−1) · k^(n−1)` for `k` binary operations.
pub fn free_dim(n: usize, k: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut fact: u128 = 1;
    for i in 2..=n as u128 {
        fact = fact.saturating_mul(i);
    }
    // Catalan(n-1) = binom(2n-2, n-1) / n
    let m = (n - 1) as u128;
    let mut binom: u128 = 1;
    for i in 0..m {
        binom = binom.saturating_mul(2 * m - i) / (i + 1);
    }
    let catalan = binom / (m + 1);
    let pow = (k as u128).saturating_pow((n - 1) as u32);
    fact.saturating_mul(catalan).saturating_mul(pow)
}

/// All multilinear monomials of degree `n` over `k` operations, in canonical order.
pub fn enumerate_free_basis(n: usize, sig: &Signature, limits: &Limits) -> Result<Vec<Monomial>> {
    Ok(FreeSpace::get(n, sig.op_count(), limits)?.monomials.clone())
}

fn enumerate(n: usize, k: usize) -> Vec<Monomial> {
    let full = (1usize << n) - 1;
    let mut by_mask: Vec<Vec<Monomial>> = vec![Vec::new(); full + 1];
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        if mask.count_ones() == 1 {
            by_mask[mask].push(Monomial::var(mask.trailing_zeros() as usize + 1));
            continue;
        }
        let mut out = Vec::new();
        let mut left = (mask - 1) & mask;
        while left > 0 {
            let right = mask ^ left;
            for op in 0..k {
                for l in &by_mask[left] {
                    for r in &by_mask[right] {
                        out.push(Monomial::op(op, l, r));
                    }
                }
            }
            left = (left - 1) & mask;
        }
        by_mask[mask] = out;
    }
    let mut all = std::mem::take(&mut by_mask[full]);
    all.sort_unstable();
    all
}

/// The multilinear component `Free(n)` with a fixed monomial basis.
#[derive(Debug)]
pub struct FreeSpace {
    n: usize,
    k: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

type SpaceCache = Mutex<HashMap<(usize, usize), Arc<FreeSpace>>>;

impl FreeSpace {
    /// The basis of `Free(n)` over `k` operations; shared across callers.
    pub fn get(n: usize, k: usize, limits: &Limits) -> Result<Arc<FreeSpace>> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidArgument(format!("degree {n} out of range")));
        }
        limits.check_free_dim(free_dim(n, k), None)?;
        static CACHE: OnceLock<SpaceCache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(space) = cache.lock().unwrap().get(&(n, k)) {
            return Ok(space.clone());
        }
        let monomials = enumerate(n, k);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let space = Arc::new(FreeSpace { n, k, monomials, index });
        cache.lock().unwrap().insert((n, k), space.clone());
        Ok(space)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn op_count(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, pos: usize) -> &Monomial {
        &self.monomials[pos]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a polynomial in the monomial basis.
    pub fn vector(&self, p: &Poly) -> Result<SparseVector> {
        let mut entries = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let pos = self.position(m).ok_or_else(|| {
                if m.degree() != self.n {
                    Error::DegreeMismatch { expected: self.n, found: m.degree() }
                } else {
                    Error::InvalidArgument(format!("{m:?} is not a multilinear monomial over {} ops", self.k))
                }
            })?;
            entries.push((pos, c.clone()));
        }
        Ok(SparseVector::from_entries(entries))
    }

    pub fn poly(&self, v: &SparseVector) -> Poly {
        Poly::from_terms(v.entries().iter().map(|(p, c)| (self.monomials[*p].clone(), c.clone())))
    }
}

/// Relabels every leaf `i` as `perm(i)`.
pub fn act(perm: &Permutation, p: &Poly) -> Result<Poly> {
    if let Some(d) = p.degree() {
        if d != perm.degree() {
            return Err(Error::DegreeMismatch { expected: perm.degree(), found: d });
        }
    }
    Ok(p.map_monomials(|m| m.relabel(|i| perm.apply(i))))
}

/// Replaces leaf `x_i` of every monomial of `p` (degree `n`) by `m` (degree `d`).
///
/// The leaves of `m`, read left to right, become `x_i, x_{n+1}, ..., x_{n+d-1}`;
/// every other leaf keeps its index. The labels `m` carries are ignored.
pub fn substitute(p: &Poly, i: usize, m: &Monomial) -> Result<Poly> {
    let Some(n) = p.degree() else { return Ok(Poly::zero()) };
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("variable x{i} not in 1..={n}")));
    }
    if n + m.degree() - 1 > MAX_DEGREE {
        return Err(Error::InvalidArgument("substitution exceeds maximum degree".into()));
    }
    let mut fresh = Vec::with_capacity(m.code().len());
    let mut next = n;
    for &t in m.code() {
        if t >= VAR_BASE {
            let label = if fresh.iter().any(|&u| u >= VAR_BASE) {
                next += 1;
                next
            } else {
                i
            };
            fresh.push(VAR_BASE + label as u8);
        } else {
            fresh.push(t);
        }
    }
    let target = VAR_BASE + i as u8;
    Ok(p.map_monomials(|t| {
        let mut code = Vec::with_capacity(t.code().len() + fresh.len());
        for &tok in t.code() {
            if tok == target {
                code.extend_from_slice(&fresh);
            } else {
                code.push(tok);
            }
        }
        Monomial::from_code_unchecked(code)
    }))
}

/// A polynomial whose monomials may repeat variables and need not share a degree.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RawPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl RawPoly {
    pub fn push(&mut self, m: Monomial, c: Rational) {
        self.terms.push((m, c));
    }

    /// Multilinear on `1..=n` with every monomial of degree `n`.
    pub fn as_multilinear(&self) -> Option<Poly> {
        let n = self.terms.first()?.0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == n && m.is_multilinear())
            .then(|| Poly::from_terms(self.terms.iter().cloned()))
    }
}

/// Full linearization of a polynomial homogeneous in each variable.
///
/// The variables, sorted by index, are replaced by consecutive blocks of fresh
/// variables (one per occurrence) and every assignment of occurrences to the
/// block is summed. A multilinear input on `1..=n` comes back unchanged. The
/// result is empty when the linearization vanishes.
pub fn multilinearize(p: &RawPoly) -> Result<Vec<Poly>> {
    let mut combined: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (m, c) in &p.terms {
        *combined.entry(m.clone()).or_default() += c;
    }
    combined.retain(|_, c| *c != Rational::default());
    let mut pattern: Option<BTreeMap<usize, usize>> = None;
    for m in combined.keys() {
        let mut deg = BTreeMap::new();
        for v in m.leaves() {
            *deg.entry(v).or_insert(0usize) += 1;
        }
        match &pattern {
            None => pattern = Some(deg),
            Some(pat) if *pat != deg => return Err(Error::NotHomogeneous),
            Some(_) => {}
        }
    }
    let Some(pattern) = pattern else { return Ok(Vec::new()) };
    let total: usize = pattern.values().sum();
    if total > MAX_DEGREE {
        return Err(Error::InvalidArgument("degree too large".into()));
    }
    // block start (0-based offset) per original variable
    let mut offset = HashMap::new();
    let mut acc = 0;
    for (&v, &d) in &pattern {
        offset.insert(v, (acc, d));
        acc += d;
    }
    let blocks: Vec<(usize, usize)> = pattern.keys().map(|v| offset[v]).collect();
    let vars: Vec<usize> = pattern.keys().copied().collect();
    let assignments = block_assignments(&blocks);

    let mut out = Poly::zero();
    for (m, c) in &combined {
        // occurrence number of each leaf within its variable
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let occ: Vec<(usize, usize)> = m
            .leaves()
            .map(|v| {
                let k = seen.entry(v).or_insert(0);
                *k += 1;
                (vars.binary_search(&v).unwrap(), *k - 1)
            })
            .collect();
        for assign in &assignments {
            let mut leaf = 0;
            let code: Vec<u8> = m
                .code()
                .iter()
                .map(|&t| {
                    if t >= VAR_BASE {
                        let (j, k) = occ[leaf];
                        leaf += 1;
                        VAR_BASE + assign[j][k] as u8
                    } else {
                        t
                    }
                })
                .collect();
            out.add_term(Monomial::from_code_unchecked(code), c.clone());
        }
    }
    Ok(if out.is_zero() { Vec::new() } else { vec![out] })
}

/// Every way to label the occurrences of each variable bijectively with its block.
fn block_assignments(blocks: &[(usize, usize)]) -> Vec<Vec<Vec<usize>>> {
    let mut all: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &(start, len) in blocks {
        let perms: Vec<Vec<usize>> = Permutation::all(len)
            .map(|p| p.images().iter().map(|&i| start + i).collect())
            .collect();
        all = all
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    all
}
