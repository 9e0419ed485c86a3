//! Identity checks, evaluation ranks and the verification routines built on them.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::concrete::build::{current_tensor, hat, make_perm, pboxtimes, tensor_dialgebra, zboxtimes, Hat, PermKind};
use crate::concrete::eval::{basis_tuples, EvalPlan};
use crate::concrete::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{RowBasis, SparseVector};
use crate::terms::{Flavor, FreeSpace, Poly};
use crate::tideal::VarietyPresentation;
use crate::transfer::orient_toward;
use crate::{Limits, Rational};

const CHUNK: usize = 64;

fn check_tuples(dim: usize, n: usize, limits: &Limits) -> Result<()> {
    let count = (dim as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > limits.max_tuples as u128 {
        return Err(Error::ResourceLimit {
            what: "basis tuples",
            requested: count,
            limit: limits.max_tuples as u128,
            degree: Some(n),
        });
    }
    Ok(())
}

fn tuple_chunks(dim: usize, n: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
    let mut it = basis_tuples(dim, n);
    std::iter::from_fn(move || {
        let chunk: Vec<Vec<usize>> = it.by_ref().take(CHUNK).collect();
        (!chunk.is_empty()).then_some(chunk)
    })
}

/// A basis tuple on which `f` does not vanish.
pub fn find_violation(a: &FinDimAlgebra, f: &Poly) -> Result<Option<Vec<usize>>> {
    if f.max_op().is_some_and(|op| op >= a.sig().op_count()) {
        return Err(Error::SignatureMismatch(format!("identity uses an operation outside {}", a.sig())));
    }
    if !f.is_multilinear() {
        return Err(Error::InvalidArgument("identity is not multilinear".into()));
    }
    let Some(n) = f.degree() else { return Ok(None) };
    check_tuples(a.dim(), n, &Limits::default())?;
    let monomials: Vec<_> = f.terms().map(|(m, _)| m.clone()).collect();
    let coeffs: Vec<Rational> = f.terms().map(|(_, c)| c.clone()).collect();
    let plan = EvalPlan::new(&monomials);
    for chunk in tuple_chunks(a.dim(), n) {
        let bad = chunk.par_iter().position_first(|t| {
            let vals = plan.eval(a, t);
            let mut acc = SparseVector::zero();
            for (v, c) in vals.iter().zip(&coeffs) {
                acc = acc.axpy(c, v);
            }
            !acc.is_zero()
        });
        if let Some(k) = bad {
            return Ok(Some(chunk[k].clone()));
        }
    }
    Ok(None)
}

/// Whether `f` vanishes on every tuple of basis elements of `a`.
pub fn check_identity(a: &FinDimAlgebra, f: &Poly) -> Result<bool> {
    Ok(find_violation(a, f)?.is_none())
}

/// Checks every generator of `v` on `a`; the error names the first failure.
pub fn certify(a: &FinDimAlgebra, v: &VarietyPresentation) -> Result<()> {
    if !a.sig().same_shape(v.sig()) {
        return Err(Error::SignatureMismatch(format!("algebra over {} checked against {}", a.sig(), v.sig())));
    }
    for g in v.generators() {
        if let Some(t) = find_violation(a, g)? {
            let at: Vec<&str> = t.iter().map(|&i| a.labels()[i].as_str()).collect();
            let who = if a.name().is_empty() { "algebra" } else { a.name() };
            let var = if v.name().is_empty() { "the variety" } else { v.name() };
            return Err(Error::Certification(format!(
                "{who} is not in {var}: {} fails at ({})",
                g.display(v.sig()),
                at.join(", ")
            )));
        }
    }
    Ok(())
}

/// Rank of a family of functionals on `Free(n)`, streamed chunk by chunk.
///
/// `values(t)` returns, for one basis tuple, the value of every basis monomial
/// as a vector in the algebra; each output coordinate is one functional.
fn functional_rank(
    free_dim: usize,
    alg_dim: usize,
    n: usize,
    out: &mut RowBasis,
    values: impl Fn(&[usize]) -> Vec<SparseVector> + Sync,
) -> Result<()> {
    for chunk in tuple_chunks(alg_dim, n) {
        if out.rank() == free_dim {
            break;
        }
        let rows: Vec<Vec<SparseVector>> = chunk
            .par_iter()
            .map(|t| {
                let vals = values(t);
                let mut comps: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); alg_dim];
                for (pos, v) in vals.into_iter().enumerate() {
                    for (c, x) in v.into_entries() {
                        comps[c].push((pos, x));
                    }
                }
                comps.into_iter().map(SparseVector::from_sorted_unchecked).collect()
            })
            .collect();
        for r in rows.iter().flatten() {
            out.insert(r)?;
        }
    }
    Ok(())
}

/// `Id(A)(n)` and `c_n(Var A)`.
#[derive(Clone, Debug)]
pub struct IdComponent {
    pub n: usize,
    pub free_dim: usize,
    /// Identities of degree `n` as a subspace of `Free(n)`.
    pub basis: RowBasis,
    pub var_codim: usize,
}

fn evaluation_rank(a: &FinDimAlgebra, n: usize, limits: &Limits) -> Result<(std::sync::Arc<FreeSpace>, RowBasis)> {
    check_tuples(a.dim(), n, limits)?;
    let space = FreeSpace::get(n, a.sig().op_count(), limits)?;
    let plan = EvalPlan::new(space.monomials());
    let mut f = RowBasis::new(space.dim());
    functional_rank(space.dim(), a.dim(), n, &mut f, |t| plan.eval(a, t))?;
    Ok((space, f))
}

/// `c_n(Var A)`: the rank of the evaluation functionals on `Free(n)`.
pub fn var_codim(a: &FinDimAlgebra, n: usize, limits: &Limits) -> Result<usize> {
    Ok(evaluation_rank(a, n, limits)?.1.rank())
}

pub fn id_component(a: &FinDimAlgebra, n: usize, limits: &Limits) -> Result<IdComponent> {
    let (space, f) = evaluation_rank(a, n, limits)?;
    Ok(IdComponent { n, free_dim: space.dim(), basis: f.annihilator(), var_codim: f.rank() })
}

/// A presentation whose generators span `Id(A)(m)` for `m ≤ mmax`.
pub fn identities_presentation(a: &FinDimAlgebra, mmax: usize, limits: &Limits) -> Result<VarietyPresentation> {
    let mut gens = Vec::new();
    for m in 1..=mmax {
        let (space, f) = evaluation_rank(a, m, limits)?;
        gens.extend(f.annihilator().rows().map(|r| space.poly(r)));
    }
    VarietyPresentation::new(format!("Id({})", a.name()), a.sig().clone(), gens)
}

/// Outcome of checking a linear map on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub is_homomorphism: bool,
    pub is_injective: bool,
    /// The first offending product, as `op left right`.
    pub witness: Option<String>,
}

impl EmbeddingReport {
    pub fn is_monomorphism(&self) -> bool {
        self.is_homomorphism && self.is_injective
    }
}

fn apply(images: &[SparseVector], v: &SparseVector) -> SparseVector {
    let mut acc = SparseVector::zero();
    for (k, c) in v.entries() {
        acc = acc.axpy(c, &images[*k]);
    }
    acc
}

/// Checks `φ(e_i ∘ e_j) = φ(e_i) ∘ φ(e_j)` for every operation and basis pair,
/// and injectivity, for the linear map sending `e_k` to `images[k]`.
pub fn check_homomorphism(src: &FinDimAlgebra, dst: &FinDimAlgebra, images: &[SparseVector]) -> Result<EmbeddingReport> {
    if src.sig().op_count() != dst.sig().op_count() {
        return Err(Error::SignatureMismatch(format!("{} vs {}", src.sig(), dst.sig())));
    }
    if images.len() != src.dim() || images.iter().any(|v| v.max_pos().is_some_and(|p| p >= dst.dim())) {
        return Err(Error::InvalidArgument("images do not match the algebras".into()));
    }
    let mut witness = None;
    'outer: for op in 0..src.sig().op_count() {
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = apply(images, src.product(op, i, j));
                let rhs = dst.multiply(op, &images[i], &images[j]);
                if lhs != rhs {
                    witness = Some(format!("{} {} {}", src.sig().op_name(op), src.labels()[i], src.labels()[j]));
                    break 'outer;
                }
            }
        }
    }
    let mut span = RowBasis::new(dst.dim());
    span.extend(images)?;
    Ok(EmbeddingReport { is_homomorphism: witness.is_none(), is_injective: span.rank() == src.dim(), witness })
}

/// Checks `a ↦ e1⊗ā + e2⊗a` from `D` into `P2 ⊗ D̂`.
pub fn embed_check_p2(d: &FinDimAlgebra) -> Result<EmbeddingReport> {
    embed_check_p2_with(d, &hat(d)?)
}

/// [`embed_check_p2`] against a given (possibly altered) hat construction.
pub fn embed_check_p2_with(d: &FinDimAlgebra, h: &Hat) -> Result<EmbeddingReport> {
    let target = tensor_dialgebra(&make_perm(PermKind::P2)?, &h.algebra)?;
    let dh = h.algebra.dim();
    let images: Vec<SparseVector> = (0..d.dim())
        .map(|a| {
            let bar = h.project(&SparseVector::unit(a));
            bar.axpy(&Rational::one(), &SparseVector::unit(dh + h.bar_dim + a))
        })
        .collect();
    check_homomorphism(d, &target, &images)
}

fn require_di(d: &FinDimAlgebra) -> Result<()> {
    if d.sig().flavor() != Flavor::Di {
        return Err(Error::SignatureMismatch(format!("expected a dialgebra, got {}", d.sig())));
    }
    Ok(())
}

/// `c_n` of the variety `V̂` for `V = Var(D)`: the rank of `f ↦ ψ_i(f)(t)` over
/// all leaves `i` and basis tuples `t` of `D`.
pub fn hat_variety_codim(d: &FinDimAlgebra, n: usize, limits: &Limits) -> Result<usize> {
    require_di(d)?;
    check_tuples(d.dim(), n, limits)?;
    let space = FreeSpace::get(n, d.sig().base_count(), limits)?;
    let mut f = RowBasis::new(space.dim());
    for i in 1..=n {
        let oriented: Vec<_> = space.monomials().iter().map(|m| orient_toward(m, i)).collect::<Result<_>>()?;
        let plan = EvalPlan::new(&oriented);
        functional_rank(space.dim(), d.dim(), n, &mut f, |t| plan.eval(d, t))?;
    }
    Ok(f.rank())
}

/// One degree of the comparison between `c_n(V)` and `c_n(V̂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem4Row {
    pub n: usize,
    pub cv: usize,
    pub cvhat: usize,
    /// `c_n(V) ≤ n · c_n(V̂)`.
    pub c1: bool,
    /// `c_n(V̂) ≤ n · c_n(V)`.
    pub c2: bool,
    /// Enclosure of `c_n(V̂)^(1/n)`.
    pub root: (Rational, Rational),
    /// Enclosure of `(c_n(V)/n)^(1/n)`.
    pub root_lower: (Rational, Rational),
    /// Enclosure of `(n · c_n(V))^(1/n)`.
    pub root_upper: (Rational, Rational),
}

impl Theorem4Row {
    pub fn holds(&self) -> bool {
        self.c1 && self.c2
    }
}

/// Width of the root enclosures, as a power of two.
const ROOT_BITS: u32 = 20;

pub fn theorem4_check(d: &FinDimAlgebra, nmax: usize, limits: &Limits) -> Result<Vec<Theorem4Row>> {
    require_di(d)?;
    let mut rows = Vec::new();
    for n in 2..=nmax {
        let cv = var_codim(d, n, limits)?;
        let cvhat = hat_variety_codim(d, n, limits)?;
        let r = |x: Rational| nth_root_enclosure(&x, n, ROOT_BITS);
        let int = |k: usize| Rational::from_integer((k as i64).into());
        rows.push(Theorem4Row {
            n,
            cv,
            cvhat,
            c1: cv <= n * cvhat,
            c2: cvhat <= n * cv,
            root: r(int(cvhat)),
            root_lower: r(int(cv) / int(n)),
            root_upper: r(int(n * cv)),
        });
    }
    Ok(rows)
}

/// `[lo, hi]` with `lo^n ≤ x ≤ hi^n` and `hi − lo ≤ 2^-bits`, for `x ≥ 0`.
pub fn nth_root_enclosure(x: &Rational, n: usize, bits: u32) -> (Rational, Rational) {
    assert!(n >= 1 && *x >= Rational::zero());
    let pow = |r: &Rational| (0..n).fold(Rational::one(), |acc, _| acc * r);
    let mut lo = Rational::zero();
    let mut hi = if *x > Rational::one() { x.clone() } else { Rational::one() };
    let eps = Rational::new(1.into(), num_bigint::BigInt::from(1u8) << bits as usize);
    let two = Rational::from_integer(2.into());
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / &two;
        if pow(&mid) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// The two sides of the `σ12` isomorphism `Z ⊠ (P ⊗ A) ≅ (P ⊠ Z) ⊗ A`.
#[derive(Clone, Debug)]
pub struct Lemma1Algebras {
    pub left: FinDimAlgebra,
    pub right: FinDimAlgebra,
    /// `σ12` on basis elements of `left`.
    pub images: Vec<SparseVector>,
}

pub fn lemma1_algebras(z: &FinDimAlgebra, p: &FinDimAlgebra, a: &FinDimAlgebra) -> Result<Lemma1Algebras> {
    let left = zboxtimes(z, &tensor_dialgebra(p, a)?)?;
    let right = current_tensor(&pboxtimes(p, z)?, a)?;
    let (dz, dp, da) = (z.dim(), p.dim(), a.dim());
    let mut images = Vec::with_capacity(left.dim());
    for zi in 0..dz {
        for pi in 0..dp {
            for ai in 0..da {
                images.push(SparseVector::unit((pi * dz + zi) * da + ai));
            }
        }
    }
    Ok(Lemma1Algebras { left, right, images })
}

/// Whether `σ12` is an isomorphism `Z ⊠ (P ⊗ A) → (P ⊠ Z) ⊗ A`.
pub fn lemma1_check(z: &FinDimAlgebra, p: &FinDimAlgebra, a: &FinDimAlgebra) -> Result<bool> {
    let l = lemma1_algebras(z, p, a)?;
    Ok(check_homomorphism(&l.left, &l.right, &l.images)?.is_monomorphism() && l.left.dim() == l.right.dim())
}
