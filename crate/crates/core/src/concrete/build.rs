//! Constructions of new algebras from old ones.

use num_traits::One;

use crate::concrete::check::{certify, check_homomorphism, EmbeddingReport};
use crate::concrete::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::library;
use crate::linalg::{row_space, RowBasis, SparseVector};
use crate::terms::{Flavor, Signature};
use crate::Rational;

/// The Perm algebras used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermKind {
    /// `e1·x = x`, `e2·x = 0`.
    P2,
    /// Polynomials of degree `< N` with `f·g = f(0) g`.
    P0(usize),
    /// The group algebra of `Z_k` with `f·g = ε(f) g`.
    GroupAlg(usize),
}

fn one_op() -> Signature {
    Signature::plain(["*"]).expect("valid signature")
}

/// Builds a Perm algebra and certifies it against the Perm identities.
pub fn make_perm(kind: PermKind) -> Result<FinDimAlgebra> {
    let mut alg = match kind {
        PermKind::P2 => {
            let mut a = FinDimAlgebra::zero("P2", one_op(), 2);
            a.set_product(0, 0, 0, SparseVector::unit(0))?;
            a.set_product(0, 0, 1, SparseVector::unit(1))?;
            a
        }
        PermKind::P0(n) => {
            if n == 0 {
                return Err(Error::InvalidArgument("P0 needs N >= 1".into()));
            }
            let labels = (0..n).map(|k| format!("x{k}")).collect();
            let mut a = FinDimAlgebra::with_labels(format!("P0({n})"), one_op(), labels);
            for j in 0..n {
                a.set_product(0, 0, j, SparseVector::unit(j))?;
            }
            a
        }
        PermKind::GroupAlg(k) => {
            if k == 0 {
                return Err(Error::InvalidArgument("group order must be at least 1".into()));
            }
            let labels = (0..k).map(|g| format!("g{g}")).collect();
            let mut a = FinDimAlgebra::with_labels(format!("GroupAlg({k})"), one_op(), labels);
            for i in 0..k {
                for j in 0..k {
                    a.set_product(0, i, j, SparseVector::unit(j))?;
                }
            }
            a
        }
    };
    certify(&alg, &library::perm())?;
    alg.set_name(alg.name().to_string());
    Ok(alg)
}

/// `x ⊗ y` in coordinates `i · dy + j`.
fn kron(x: &SparseVector, y: &SparseVector, dy: usize) -> SparseVector {
    let mut entries = Vec::with_capacity(x.len() * y.len());
    for (i, a) in x.entries() {
        for (j, b) in y.entries() {
            entries.push((i * dy + j, a * b));
        }
    }
    SparseVector::from_sorted_unchecked(entries)
}

fn tensor_labels(a: &FinDimAlgebra, b: &FinDimAlgebra) -> Vec<String> {
    let mut out = Vec::with_capacity(a.dim() * b.dim());
    for x in a.labels() {
        for y in b.labels() {
            out.push(format!("{x}_{y}"));
        }
    }
    out
}

fn require_flavor(a: &FinDimAlgebra, flavor: Flavor, what: &str) -> Result<()> {
    if a.sig().flavor() != flavor {
        return Err(Error::SignatureMismatch(format!("{what} needs a {flavor:?} signature, got {}", a.sig())));
    }
    Ok(())
}

fn require_single_op(a: &FinDimAlgebra, what: &str) -> Result<()> {
    if a.sig().base_count() != 1 {
        return Err(Error::SignatureMismatch(format!("{what} must have a single base operation")));
    }
    Ok(())
}

/// `P ⊗ A` with `(p⊗a) |-w (q⊗b) = pq ⊗ a∘w b` and `(p⊗a) -|w (q⊗b) = qp ⊗ a∘w b`.
pub fn tensor_dialgebra(p: &FinDimAlgebra, a: &FinDimAlgebra) -> Result<FinDimAlgebra> {
    require_flavor(p, Flavor::Plain, "the Perm factor")?;
    require_single_op(p, "the Perm factor")?;
    require_flavor(a, Flavor::Plain, "the second factor")?;
    certify(p, &library::perm())?;
    let sig = a.sig().di_of()?;
    let (dp, da) = (p.dim(), a.dim());
    let mut out = FinDimAlgebra::with_labels(format!("{}(x){}", p.name(), a.name()), sig, tensor_labels(p, a));
    for w in 0..a.sig().op_count() {
        for i in 0..dp {
            for j in 0..dp {
                let pq = p.product(0, i, j);
                let qp = p.product(0, j, i);
                for x in 0..da {
                    for y in 0..da {
                        let ab = a.product(w, x, y);
                        out.set_product(2 * w, i * da + x, j * da + y, kron(pq, ab, da))?;
                        out.set_product(2 * w + 1, i * da + x, j * da + y, kron(qp, ab, da))?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `P ⊠ D` for a pre-algebra `D`: `(p⊗a) ∘w (q⊗b) = pq ⊗ a >w b + qp ⊗ a <w b`.
pub fn pboxtimes(p: &FinDimAlgebra, d: &FinDimAlgebra) -> Result<FinDimAlgebra> {
    require_flavor(p, Flavor::Plain, "the Perm factor")?;
    require_single_op(p, "the Perm factor")?;
    require_flavor(d, Flavor::Pre, "the second factor")?;
    certify(p, &library::perm())?;
    let (dp, dd) = (p.dim(), d.dim());
    let mut out =
        FinDimAlgebra::with_labels(format!("{}[x]{}", p.name(), d.name()), d.sig().base(), tensor_labels(p, d));
    for w in 0..d.sig().base_count() {
        let (gt, lt) = d.sig().pair(w);
        for i in 0..dp {
            for j in 0..dp {
                for x in 0..dd {
                    for y in 0..dd {
                        let v = kron(p.product(0, i, j), d.product(gt, x, y), dd)
                            .axpy(&Rational::one(), &kron(p.product(0, j, i), d.product(lt, x, y), dd));
                        out.set_product(w, i * dd + x, j * dd + y, v)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `Z ⊠ D` for a pre-commutative `Z` (product `>`) and a dialgebra `D`:
/// `(z⊗a) ∘w (u⊗b) = zu ⊗ a |-w b + uz ⊗ a -|w b`.
pub fn zboxtimes(z: &FinDimAlgebra, d: &FinDimAlgebra) -> Result<FinDimAlgebra> {
    require_flavor(z, Flavor::Pre, "the pre-commutative factor")?;
    require_single_op(z, "the pre-commutative factor")?;
    require_flavor(d, Flavor::Di, "the second factor")?;
    certify(z, &library::pre_com())?;
    let (dz, dd) = (z.dim(), d.dim());
    let mut out =
        FinDimAlgebra::with_labels(format!("{}[x]{}", z.name(), d.name()), d.sig().base(), tensor_labels(z, d));
    for w in 0..d.sig().base_count() {
        let (l, r) = d.sig().pair(w);
        for i in 0..dz {
            for j in 0..dz {
                for x in 0..dd {
                    for y in 0..dd {
                        let v = kron(z.product(0, i, j), d.product(l, x, y), dd)
                            .axpy(&Rational::one(), &kron(z.product(0, j, i), d.product(r, x, y), dd));
                        out.set_product(w, i * dd + x, j * dd + y, v)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `C ⊗ A` for a one-operation `C`: `(c⊗a) ∘w (d⊗b) = cd ⊗ a∘w b`.
pub fn current_tensor(c: &FinDimAlgebra, a: &FinDimAlgebra) -> Result<FinDimAlgebra> {
    require_flavor(c, Flavor::Plain, "the first factor")?;
    require_single_op(c, "the first factor")?;
    let (dc, da) = (c.dim(), a.dim());
    let mut out =
        FinDimAlgebra::with_labels(format!("{}(x){}", c.name(), a.name()), a.sig().clone(), tensor_labels(c, a));
    for w in 0..a.sig().op_count() {
        for i in 0..dc {
            for j in 0..dc {
                for x in 0..da {
                    for y in 0..da {
                        out.set_product(w, i * da + x, j * da + y, kron(c.product(0, i, j), a.product(w, x, y), da))?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Actions `l_w(a, u)` and `r_w(u, a)` of an algebra on a module `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleSpec {
    base_dim: usize,
    mdim: usize,
    labels: Vec<String>,
    left: Vec<Vec<SparseVector>>,
    right: Vec<Vec<SparseVector>>,
}

impl BimoduleSpec {
    /// Zero actions of `base` on an `mdim`-dimensional module with basis `u1, u2, ...`.
    pub fn new(base: &FinDimAlgebra, mdim: usize) -> BimoduleSpec {
        let labels = (1..=mdim).map(|k| format!("u{k}")).collect();
        BimoduleSpec::with_labels(base, labels)
    }

    pub fn with_labels(base: &FinDimAlgebra, labels: Vec<String>) -> BimoduleSpec {
        let (da, dm, k) = (base.dim(), labels.len(), base.sig().op_count());
        BimoduleSpec {
            base_dim: da,
            mdim: dm,
            labels,
            left: vec![vec![SparseVector::zero(); da * dm]; k],
            right: vec![vec![SparseVector::zero(); da * dm]; k],
        }
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn check(&self, op: usize, a: usize, u: usize, v: &SparseVector) -> Result<()> {
        if op >= self.left.len() || a >= self.base_dim || u >= self.mdim || v.max_pos().is_some_and(|p| p >= self.mdim)
        {
            return Err(Error::InvalidArgument(format!("action entry ({op}, {a}, {u}) out of range")));
        }
        Ok(())
    }

    /// Sets `l_op(e_a, u_u)`.
    pub fn set_left(&mut self, op: usize, a: usize, u: usize, v: SparseVector) -> Result<()> {
        self.check(op, a, u, &v)?;
        self.left[op][a * self.mdim + u] = v;
        Ok(())
    }

    /// Sets `r_op(u_u, e_a)`.
    pub fn set_right(&mut self, op: usize, u: usize, a: usize, v: SparseVector) -> Result<()> {
        self.check(op, a, u, &v)?;
        self.right[op][u * self.base_dim + a] = v;
        Ok(())
    }

    pub fn left(&self, op: usize, a: usize, u: usize) -> &SparseVector {
        &self.left[op][a * self.mdim + u]
    }

    pub fn right(&self, op: usize, u: usize, a: usize) -> &SparseVector {
        &self.right[op][u * self.base_dim + a]
    }

    fn matches(&self, a: &FinDimAlgebra) -> Result<()> {
        if a.dim() != self.base_dim || a.sig().op_count() != self.left.len() {
            return Err(Error::InvalidArgument("bimodule does not match the algebra".into()));
        }
        Ok(())
    }
}

fn shifted(v: &SparseVector, by: usize) -> SparseVector {
    v.permuted(|p| p + by)
}

fn sum_labels(a: &FinDimAlgebra, m: &BimoduleSpec) -> Vec<String> {
    a.labels().iter().chain(m.labels()).cloned().collect()
}

/// `A ⋉ M` without certification.
pub fn split_null_unchecked(a: &FinDimAlgebra, m: &BimoduleSpec) -> Result<FinDimAlgebra> {
    m.matches(a)?;
    let (da, dm) = (a.dim(), m.mdim());
    let mut out = FinDimAlgebra::with_labels(format!("{}+M", a.name()), a.sig().clone(), sum_labels(a, m));
    for w in 0..a.sig().op_count() {
        for x in 0..da {
            for y in 0..da {
                out.set_product(w, x, y, a.product(w, x, y).clone())?;
            }
            for u in 0..dm {
                out.set_product(w, x, da + u, shifted(m.left(w, x, u), da))?;
                out.set_product(w, da + u, x, shifted(m.right(w, u, x), da))?;
            }
        }
    }
    Ok(out)
}

/// The split null extension `A ⋉ M`, certified to lie in `v`.
pub fn split_null(
    a: &FinDimAlgebra,
    m: &BimoduleSpec,
    v: &crate::tideal::VarietyPresentation,
) -> Result<FinDimAlgebra> {
    let out = split_null_unchecked(a, m)?;
    certify(&out, v)?;
    Ok(out)
}

/// `A ⋌ M` and the check of `a + u ↦ e1⊗a + e2⊗u` into `P2 ⊗ (A ⋉ M)`.
#[derive(Clone, Debug)]
pub struct Hemisemidirect {
    pub algebra: FinDimAlgebra,
    pub embedding: EmbeddingReport,
}

/// The one-sided dialgebra on `A ⊕ M`: `a |- b = a -| b = ab`, `a |- u = l(a, u)`,
/// `u -| a = r(u, a)`, every other product zero.
pub fn hemisemidirect(a: &FinDimAlgebra, m: &BimoduleSpec) -> Result<Hemisemidirect> {
    require_flavor(a, Flavor::Plain, "the base algebra")?;
    m.matches(a)?;
    let (da, dm) = (a.dim(), m.mdim());
    let sig = a.sig().di_of()?;
    let mut out = FinDimAlgebra::with_labels(format!("{}|M", a.name()), sig, sum_labels(a, m));
    for w in 0..a.sig().op_count() {
        for x in 0..da {
            for y in 0..da {
                out.set_product(2 * w, x, y, a.product(w, x, y).clone())?;
                out.set_product(2 * w + 1, x, y, a.product(w, x, y).clone())?;
            }
            for u in 0..dm {
                out.set_product(2 * w, x, da + u, shifted(m.left(w, x, u), da))?;
                out.set_product(2 * w + 1, da + u, x, shifted(m.right(w, u, x), da))?;
            }
        }
    }
    let target = tensor_dialgebra(&make_perm(PermKind::P2)?, &split_null_unchecked(a, m)?)?;
    let ds = da + dm;
    let images: Vec<SparseVector> =
        (0..ds).map(|k| SparseVector::unit(if k < da { k } else { ds + k })).collect();
    let embedding = check_homomorphism(&out, &target, &images)?;
    Ok(Hemisemidirect { algebra: out, embedding })
}

/// `D̂ = D̄ ⊕ D` with `D̄ = D / span(a |-w b − a -|w b)`.
///
/// The basis lists `D̄` first, one element per non-pivot coordinate of the
/// relation space, then `D`. For each base operation:
/// `ā ∘ b = a |- b`, `a ∘ b̄ = a -| b`, `ā ∘ b̄` is the class of `a |- b`, `a ∘ b = 0`.
#[derive(Clone, Debug)]
pub struct Hat {
    pub algebra: FinDimAlgebra,
    pub bar_dim: usize,
    /// The coordinates of `D` that index `D̄`.
    pub bar_columns: Vec<usize>,
    /// The span of `a |-w b − a -|w b` in `D`.
    pub relations: RowBasis,
}

impl Hat {
    /// The class of `v ∈ D` in `D̄`, in `D̄` coordinates.
    pub fn project(&self, v: &SparseVector) -> SparseVector {
        let r = self.relations.reduce(v);
        SparseVector::from_entries(r.entries().iter().map(|(p, c)| {
            let k = self.bar_columns.binary_search(p).expect("reduced vectors live on non-pivot columns");
            (k, c.clone())
        }))
    }
}

pub fn hat(d: &FinDimAlgebra) -> Result<Hat> {
    require_flavor(d, Flavor::Di, "hat")?;
    let dim = d.dim();
    let mut diffs = Vec::new();
    for w in 0..d.sig().base_count() {
        let (l, r) = d.sig().pair(w);
        for a in 0..dim {
            for b in 0..dim {
                diffs.push(d.product(l, a, b).axpy(&-Rational::one(), d.product(r, a, b)));
            }
        }
    }
    let relations = row_space(&diffs, dim)?;
    let bar_columns: Vec<usize> = (0..dim).filter(|&c| !relations.is_pivot(c)).collect();
    let q = bar_columns.len();
    let labels = bar_columns
        .iter()
        .map(|&c| format!("bar_{}", d.labels()[c]))
        .chain(d.labels().iter().cloned())
        .collect();
    let mut out = FinDimAlgebra::with_labels(format!("hat({})", d.name()), d.sig().base(), labels);
    let mut h = Hat { algebra: out.clone(), bar_dim: q, bar_columns, relations };
    for w in 0..d.sig().base_count() {
        let (l, r) = d.sig().pair(w);
        for (k, &ck) in h.bar_columns.iter().enumerate() {
            for b in 0..dim {
                out.set_product(w, k, q + b, shifted(d.product(l, ck, b), q))?;
                out.set_product(w, q + b, k, shifted(d.product(r, b, ck), q))?;
            }
            for (j, &cj) in h.bar_columns.iter().enumerate() {
                out.set_product(w, k, j, h.project(d.product(l, ck, cj)))?;
            }
        }
    }
    h.algebra = out;
    Ok(h)
}
