//! Multilinear components of T-ideals and codimensions.
//!
//! The degree-`m` component is generated from a basis of the degree-`m−1`
//! component by the elementary steps with a fresh variable `x_m`
//! (outer products `p ∘ x_m`, `x_m ∘ p`, and doubling `x_i ← x_i ∘ x_m`,
//! `x_i ← x_m ∘ x_i`), closed under `S_m`, together with the `S_m`-orbits of
//! the degree-`m` generators. Because the lower component is already
//! `S_{m−1}`-stable, closing under the coset representatives
//! `id, (1 m), ..., (m−1 m)` is enough.
//!
//! [`brute_force_consequences`] builds the same space by direct enumeration
//! and is used to check this closure.

use std::collections::HashSet;
use std::sync::Arc;

use log::{debug, warn};

use crate::error::{Error, Result};
use crate::linalg::{RowBasis, SparseVector};
use crate::terms::{act, free_dim, FreeSpace, Monomial, Node, Permutation, Poly, Signature, VAR_BASE};
use crate::Limits;

/// A signature and a finite set of multilinear defining identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPresentation {
    name: String,
    sig: Signature,
    generators: Vec<Poly>,
}

impl VarietyPresentation {
    pub fn new(name: impl Into<String>, sig: Signature, generators: Vec<Poly>) -> Result<Self> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::InvalidArgument("zero generator".into()));
            }
            if !g.is_multilinear() {
                return Err(Error::InvalidArgument(format!(
                    "generator {} is not multilinear",
                    g.display(&sig)
                )));
            }
            if g.max_op().is_some_and(|op| op >= sig.op_count()) {
                return Err(Error::SignatureMismatch(format!(
                    "generator uses an operation outside {sig}"
                )));
            }
        }
        Ok(VarietyPresentation { name: name.into(), sig, generators })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.generators.iter().filter_map(Poly::degree).min()
    }
}

/// `c_n = free_dim − ideal_dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodimReport {
    pub n: usize,
    pub free_dim: usize,
    pub ideal_dim: usize,
    pub codim: usize,
}

impl CodimReport {
    fn new(n: usize, free_dim: usize, ideal_dim: usize) -> Self {
        CodimReport { n, free_dim, ideal_dim, codim: free_dim - ideal_dim }
    }
}

/// Degree-by-degree T-ideal closure of a presentation.
pub struct Closure<'a> {
    v: &'a VarietyPresentation,
    limits: Limits,
    degree: usize,
    current: Option<(Arc<FreeSpace>, RowBasis)>,
}

impl<'a> Closure<'a> {
    pub fn new(v: &'a VarietyPresentation, limits: Limits) -> Self {
        Closure { v, limits, degree: 0, current: None }
    }

    /// Degree of the component held, 0 before the first step.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn component(&self) -> Option<&RowBasis> {
        self.current.as_ref().map(|(_, b)| b)
    }

    pub fn space(&self) -> Option<&Arc<FreeSpace>> {
        self.current.as_ref().map(|(s, _)| s)
    }

    /// Advances to the next degree and returns its component.
    pub fn step(&mut self) -> Result<&RowBasis> {
        let m = self.degree + 1;
        let k = self.v.sig.op_count();
        let reached = (self.degree > 0).then_some(self.degree);
        let dim = free_dim(m, k);
        self.limits.check_free_dim(dim, reached).map_err(|e| match e {
            Error::ResourceLimit { what, requested, limit, .. } => {
                Error::ResourceLimit { what, requested, limit, degree: reached }
            }
            e => e,
        })?;
        if dim > 10_000 {
            warn!("degree {m} free space has dimension {dim}; this may take a while");
        }
        let space = FreeSpace::get(m, k, &self.limits)?;
        let mut basis = RowBasis::new(space.dim());
        let mut seen: HashSet<SparseVector> = HashSet::new();
        let mut candidates = 0usize;
        let mut push = |v: SparseVector, basis: &mut RowBasis| -> Result<()> {
            if v.is_zero() {
                return Ok(());
            }
            candidates += 1;
            if candidates > self.limits.max_rows {
                return Err(Error::ResourceLimit {
                    what: "candidate rows",
                    requested: candidates as u128,
                    limit: self.limits.max_rows as u128,
                    degree: reached,
                });
            }
            let v = v.normalized();
            if seen.insert(v.clone()) {
                basis.insert(&v)?;
            }
            Ok(())
        };

        for g in self.v.generators.iter().filter(|g| g.degree() == Some(m)) {
            for perm in Permutation::all(m) {
                push(space.vector(&act(&perm, g)?)?, &mut basis)?;
            }
        }

        if let Some((prev_space, prev)) = &self.current {
            if prev.rank() > 0 {
                let steps = step_tables(prev_space, &space);
                let cosets = coset_tables(&space);
                for row in prev.rows() {
                    for step in &steps {
                        let lifted = row.permuted(|p| step[p] as usize);
                        push(lifted.clone(), &mut basis)?;
                        for t in &cosets {
                            push(lifted.permuted(|p| t[p] as usize), &mut basis)?;
                        }
                    }
                }
            }
        }
        debug!("degree {m}: {candidates} candidate rows, {} distinct, rank {}", seen.len(), basis.rank());
        self.degree = m;
        self.current = Some((space, basis));
        Ok(&self.current.as_ref().unwrap().1)
    }

    /// Steps until degree `n` and returns the component.
    pub fn advance_to(&mut self, n: usize) -> Result<&RowBasis> {
        if n < self.degree || n == 0 {
            return Err(Error::InvalidArgument(format!("cannot move closure from {} to {n}", self.degree)));
        }
        while self.degree < n {
            self.step()?;
        }
        Ok(self.component().unwrap())
    }
}

/// For each elementary step, the image position in `Free(m)` of every position of `Free(m−1)`.
fn step_tables(prev: &FreeSpace, space: &FreeSpace) -> Vec<Vec<u32>> {
    let m = space.degree();
    let k = space.op_count();
    let fresh = VAR_BASE + m as u8;
    let mut tables = Vec::with_capacity(2 * k * m);
    let image = |code: Vec<u8>| space.position(&Monomial::from_code_unchecked(code)).unwrap() as u32;
    for op in 0..k {
        let op = op as u8;
        tables.push(prev.monomials().iter().map(|t| image([&[op], t.code(), &[fresh]].concat())).collect());
        tables.push(prev.monomials().iter().map(|t| image([&[op, fresh], t.code()].concat())).collect());
        for i in 1..m {
            let target = VAR_BASE + i as u8;
            for fresh_right in [true, false] {
                let pair = if fresh_right { [op, target, fresh] } else { [op, fresh, target] };
                tables.push(
                    prev.monomials()
                        .iter()
                        .map(|t| {
                            let mut code = Vec::with_capacity(t.code().len() + 2);
                            for &tok in t.code() {
                                if tok == target {
                                    code.extend_from_slice(&pair);
                                } else {
                                    code.push(tok);
                                }
                            }
                            image(code)
                        })
                        .collect(),
                );
            }
        }
    }
    tables
}

/// Position maps of the transpositions `(i m)`, `i < m`, on `Free(m)`.
fn coset_tables(space: &FreeSpace) -> Vec<Vec<u32>> {
    let m = space.degree();
    (1..m)
        .map(|i| {
            space
                .monomials()
                .iter()
                .map(|t| {
                    let s = t.relabel(|v| if v == i { m } else if v == m { i } else { v });
                    space.position(&s).unwrap() as u32
                })
                .collect()
        })
        .collect()
}

/// The degree-`n` multilinear component of the T-ideal, inside `Free(n)`.
pub fn consequences(v: &VarietyPresentation, n: usize, limits: &Limits) -> Result<RowBasis> {
    let mut closure = Closure::new(v, *limits);
    closure.advance_to(n)?;
    Ok(closure.current.take().unwrap().1)
}

/// `c_n = dim Free(n) − dim` of the degree-`n` T-ideal component.
pub fn codim(v: &VarietyPresentation, n: usize, limits: &Limits) -> Result<CodimReport> {
    let b = consequences(v, n, limits)?;
    Ok(CodimReport::new(n, b.ambient_dim(), b.rank()))
}

/// Codimensions for degrees `1..=nmax`, sharing the closure between degrees.
pub fn codim_sequence(v: &VarietyPresentation, nmax: usize, limits: &Limits) -> Result<Vec<CodimReport>> {
    let mut closure = Closure::new(v, *limits);
    let mut out = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let b = closure.step()?;
        out.push(CodimReport::new(n, b.ambient_dim(), b.rank()));
    }
    Ok(out)
}

/// Whether the two presentations generate the same T-ideal components in every degree `≤ n`.
pub fn tideal_equal(a: &VarietyPresentation, b: &VarietyPresentation, n: usize, limits: &Limits) -> Result<bool> {
    if !a.sig.same_shape(&b.sig) {
        return Err(Error::SignatureMismatch(format!("{} vs {}", a.sig, b.sig)));
    }
    let mut ca = Closure::new(a, *limits);
    let mut cb = Closure::new(b, *limits);
    for _ in 1..=n {
        let ra = ca.step()?;
        let rb = cb.step()?;
        if !ra.same_span(rb) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force free-dimension guard for [`brute_force_consequences`].
pub const BRUTE_FORCE_MAX_FREE_DIM: usize = 10_000;

#[derive(Clone)]
enum Tree {
    Leaf(usize),
    Node(usize, Box<Tree>, Box<Tree>),
}

impl Tree {
    fn from_code(code: &[u8]) -> Tree {
        match crate::terms::node(code) {
            Node::Leaf(i) => Tree::Leaf(i),
            Node::Op { op, left, right } => {
                Tree::Node(op, Box::new(Tree::from_code(left)), Box::new(Tree::from_code(right)))
            }
        }
    }

    fn write(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(i) => out.push(VAR_BASE + *i as u8),
            Tree::Node(op, l, r) => {
                out.push(*op as u8);
                l.write(out);
                r.write(out);
            }
        }
    }

    /// Number the leaves left to right starting at `next`.
    fn number(&self, next: &mut usize) -> Tree {
        match self {
            Tree::Leaf(_) => {
                *next += 1;
                Tree::Leaf(*next)
            }
            Tree::Node(op, l, r) => {
                let l = l.number(next);
                let r = r.number(next);
                Tree::Node(*op, Box::new(l), Box::new(r))
            }
        }
    }

    /// Replace leaf `x_i` by `subs[i-1]`.
    fn fill(&self, subs: &[Tree]) -> Tree {
        match self {
            Tree::Leaf(i) => subs[*i - 1].clone(),
            Tree::Node(op, l, r) => Tree::Node(*op, Box::new(l.fill(subs)), Box::new(r.fill(subs))),
        }
    }

    /// Replace the leaf labelled 0 (the hole) by `t`.
    fn plug(&self, t: &Tree) -> Tree {
        match self {
            Tree::Leaf(0) => t.clone(),
            Tree::Leaf(i) => Tree::Leaf(*i),
            Tree::Node(op, l, r) => Tree::Node(*op, Box::new(l.plug(t)), Box::new(r.plug(t))),
        }
    }
}

/// Unlabelled planar binary trees with `s` leaves over `k` operations.
fn shapes(s: usize, k: usize) -> Vec<Tree> {
    if s == 1 {
        return vec![Tree::Leaf(1)];
    }
    let mut out = Vec::new();
    for ls in 1..s {
        for l in shapes(ls, k) {
            for r in shapes(s - ls, k) {
                for op in 0..k {
                    out.push(Tree::Node(op, Box::new(l.clone()), Box::new(r.clone())));
                }
            }
        }
    }
    out
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Degree-`n` T-ideal component by direct enumeration of every one-hole
/// context around every generator with monomials substituted for its variables.
pub fn brute_force_consequences(v: &VarietyPresentation, n: usize, limits: &Limits) -> Result<RowBasis> {
    let k = v.sig.op_count();
    let dim = free_dim(n, k);
    if dim > BRUTE_FORCE_MAX_FREE_DIM as u128 {
        return Err(Error::ResourceLimit {
            what: "brute-force free dimension",
            requested: dim,
            limit: BRUTE_FORCE_MAX_FREE_DIM as u128,
            degree: None,
        });
    }
    let space = FreeSpace::get(n, k, limits)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut rows: Vec<SparseVector> = Vec::new();
    for g in &v.generators {
        let d = g.degree().unwrap();
        if d > n {
            continue;
        }
        let terms: Vec<(Tree, _)> = g.terms().map(|(m, c)| (Tree::from_code(m.code()), c.clone())).collect();
        for r in 0..=n - d {
            // contexts: trees with r+1 leaves, one of which is the hole
            let mut contexts = Vec::new();
            for shape in shapes(r + 1, k) {
                for hole in 0..=r {
                    let mut next = 0;
                    let numbered = shape.number(&mut next);
                    contexts.push(relabel_context(&numbered, hole + 1));
                }
            }
            for comp in compositions(n - r, d) {
                let mut choices: Vec<Vec<Tree>> = vec![vec![]];
                for &s in &comp {
                    let opts = shapes(s, k);
                    choices = choices
                        .into_iter()
                        .flat_map(|prefix| {
                            opts.iter().map(move |t| {
                                let mut next = prefix.clone();
                                next.push(t.clone());
                                next
                            })
                        })
                        .collect();
                }
                for choice in choices {
                    let mut next = r;
                    let subs: Vec<Tree> = choice.iter().map(|t| t.number(&mut next)).collect();
                    for ctx in &contexts {
                        let mut poly = Poly::zero();
                        for (t, c) in &terms {
                            let mut code = Vec::new();
                            ctx.plug(&t.fill(&subs)).write(&mut code);
                            poly.add_term(Monomial::from_code_unchecked(code), c.clone());
                        }
                        for perm in &perms {
                            rows.push(space.vector(&act(perm, &poly)?)?);
                        }
                    }
                }
            }
        }
    }
    crate::linalg::row_space(&rows, space.dim())
}

/// Turns the leaf numbered `hole` into the hole (label 0) and renumbers the rest `1..`.
fn relabel_context(t: &Tree, hole: usize) -> Tree {
    match t {
        Tree::Leaf(i) if *i == hole => Tree::Leaf(0),
        Tree::Leaf(i) if *i > hole => Tree::Leaf(i - 1),
        Tree::Leaf(i) => Tree::Leaf(*i),
        Tree::Node(op, l, r) => {
            Tree::Node(*op, Box::new(relabel_context(l, hole)), Box::new(relabel_context(r, hole)))
        }
    }
}
