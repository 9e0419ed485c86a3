//! Translation of a variety presentation to its di- and pre- counterparts.
//!
//! For a base operation `j` of a plain signature, the doubled signatures use
//! operation `2j` for `|-` (resp. `>`) and `2j + 1` for `-|` (resp. `<`).
//! The di-translation orients a monomial toward a marked leaf: a node whose
//! left subtree holds the mark becomes `-|`, one whose right subtree holds it
//! becomes `|-`, and nodes off the path get `|-`. The pre-translation marks
//! the same path with `<` / `>` and replaces every subtree off the path by the
//! sum of all its marked expansions.

use num_traits::One;

use crate::error::{Error, Result};
use crate::terms::{leaves_of, node, Flavor, Monomial, Node, Poly, Signature};
use crate::tideal::{codim, VarietyPresentation};
use crate::{Limits, Rational};

/// The basis element `e_i` of `Perm(n)`: the product of all variables with `x_i` last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PermBasisElement {
    n: usize,
    i: usize,
}

impl PermBasisElement {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidArgument(format!("e_{i} is not a basis element of Perm({n})")));
        }
        Ok(PermBasisElement { n, i })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.i
    }
}

/// Which half of a doubled operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `|-`: the right factor's mark survives.
    Right,
    /// `-|`: the left factor's mark survives.
    Left,
}

/// Composition `e_i^(k) · e_j^(m)` in the Perm operad along one side.
pub fn perm_compose(a: PermBasisElement, b: PermBasisElement, side: Side) -> PermBasisElement {
    let n = a.n + b.n;
    match side {
        Side::Right => PermBasisElement { n, i: a.n + b.i },
        Side::Left => PermBasisElement { n, i: a.i },
    }
}

/// A monomial with one distinguished leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedMonomial {
    m: Monomial,
    mark: usize,
}

impl MarkedMonomial {
    pub fn new(m: Monomial, mark: usize) -> Result<Self> {
        if !m.leaves().any(|l| l == mark) {
            return Err(Error::InvalidArgument(format!("x{mark} is not a leaf of the monomial")));
        }
        Ok(MarkedMonomial { m, mark })
    }

    pub fn monomial(&self) -> &Monomial {
        &self.m
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    /// The element of `Perm(n)` this marking stands for.
    pub fn perm_element(&self) -> PermBasisElement {
        PermBasisElement { n: self.m.degree(), i: self.mark }
    }

    pub fn orient(&self) -> Monomial {
        orient_code(self.m.code(), self.mark)
    }

    pub fn expand(&self) -> Poly {
        marked(self.m.code(), self.mark)
    }
}

fn check_mark(m: &Monomial, i: usize) -> Result<()> {
    MarkedMonomial::new(m.clone(), i).map(|_| ())
}

/// `ψ_i(m)`: the di-monomial oriented toward leaf `x_i`.
pub fn orient_toward(m: &Monomial, i: usize) -> Result<Monomial> {
    check_mark(m, i)?;
    Ok(orient_code(m.code(), i))
}

fn orient_code(code: &[u8], mark: usize) -> Monomial {
    match node(code) {
        Node::Leaf(v) => Monomial::var(v),
        Node::Op { op, left, right } => {
            if leaves_of(left).any(|l| l == mark) {
                Monomial::op(2 * op + 1, &orient_code(left, mark), &orient_code(right, mark))
            } else {
                let right_has = leaves_of(right).any(|l| l == mark);
                let r = if right_has { orient_code(right, mark) } else { orient_code(right, 0) };
                Monomial::op(2 * op, &orient_code(left, 0), &r)
            }
        }
    }
}

/// `ψ_i` extended linearly.
pub fn orient_poly(f: &Poly, i: usize) -> Poly {
    f.map_monomials(|m| orient_code(m.code(), i))
}

/// The 0-identities `(x1 |-w x2 − x1 -|w x2) |-u x3` and `x1 -|u (x2 |-w x3 − x2 -|w x3)`
/// over the di-signature of `base`, for every pair of base operations.
pub fn zero_identities(base: &Signature) -> Vec<Poly> {
    let x = Monomial::var;
    let k = base.op_count();
    let one = Rational::one();
    let mut out = Vec::with_capacity(2 * k * k);
    for w in 0..k {
        for u in 0..k {
            let (l, r) = (2 * w, 2 * w + 1);
            out.push(Poly::from_terms([
                (Monomial::op(2 * u, &Monomial::op(l, &x(1), &x(2)), &x(3)), one.clone()),
                (Monomial::op(2 * u, &Monomial::op(r, &x(1), &x(2)), &x(3)), -one.clone()),
            ]));
            out.push(Poly::from_terms([
                (Monomial::op(2 * u + 1, &x(1), &Monomial::op(l, &x(2), &x(3))), one.clone()),
                (Monomial::op(2 * u + 1, &x(1), &Monomial::op(r, &x(2), &x(3))), -one.clone()),
            ]));
        }
    }
    out
}

fn require_plain(v: &VarietyPresentation) -> Result<()> {
    if v.sig().flavor() != Flavor::Plain {
        return Err(Error::SignatureMismatch(format!(
            "{} is already over a doubled signature",
            if v.name().is_empty() { "the presentation" } else { v.name() }
        )));
    }
    Ok(())
}

fn prefixed(prefix: &str, name: &str) -> String {
    if name.is_empty() {
        String::new()
    } else {
        format!("{prefix}-{name}")
    }
}

/// The presentation of `di-V`: the 0-identities and `ψ_i(f)` for every generator `f` and leaf `i`.
pub fn di_presentation(v: &VarietyPresentation) -> Result<VarietyPresentation> {
    require_plain(v)?;
    let sig = v.sig().di_of()?;
    let mut gens = zero_identities(v.sig());
    for f in v.generators() {
        let n = f.degree().unwrap_or(0);
        for i in 1..=n {
            let g = orient_poly(f, i);
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    VarietyPresentation::new(prefixed("di", v.name()), sig, gens)
}

/// The sum of all marked expansions of a subtree.
fn full(code: &[u8]) -> Poly {
    let mut acc = Poly::zero();
    for l in leaves_of(code) {
        acc = &acc + &marked(code, l);
    }
    acc
}

fn combine(op: usize, a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            out.add_term(Monomial::op(op, ma, mb), ca * cb);
        }
    }
    out
}

fn marked(code: &[u8], mark: usize) -> Poly {
    match node(code) {
        Node::Leaf(v) => Poly::monomial(Monomial::var(v)),
        Node::Op { op, left, right } => {
            if leaves_of(left).any(|l| l == mark) {
                combine(2 * op + 1, &marked(left, mark), &full(right))
            } else {
                combine(2 * op, &full(left), &marked(right, mark))
            }
        }
    }
}

/// The `e_i`-coefficient of `m` expanded in `P ⊠ D` over the free Perm algebra.
pub fn expand_marked(m: &Monomial, i: usize) -> Result<Poly> {
    check_mark(m, i)?;
    Ok(marked(m.code(), i))
}

/// The presentation of `pre-V`: `Σ c_t · expand_marked(t, i)` for every generator and leaf.
pub fn pre_presentation(v: &VarietyPresentation) -> Result<VarietyPresentation> {
    require_plain(v)?;
    let sig = v.sig().pre_of()?;
    let mut gens = Vec::new();
    for f in v.generators() {
        let n = f.degree().unwrap_or(0);
        for i in 1..=n {
            let mut g = Poly::zero();
            for (t, c) in f.terms() {
                g = &g + &marked(t.code(), i).scale(c);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    VarietyPresentation::new(prefixed("pre", v.name()), sig, gens)
}

/// Rewrites `x <j y` as `y >j x` and reads `>j` as the base operation `j`.
///
/// Every generator that becomes zero is dropped. Intended for presentations
/// that contain `x >j y − y <j x`, which this rewriting absorbs.
pub fn eliminate_pairing(v: &VarietyPresentation) -> Result<VarietyPresentation> {
    if v.sig().flavor() != Flavor::Pre {
        return Err(Error::SignatureMismatch("eliminate_pairing needs a preops signature".into()));
    }
    let sig = v.sig().base();
    let gens: Vec<Poly> = v
        .generators()
        .iter()
        .map(|f| f.map_monomials(|m| swap_prec(m.code())))
        .filter(|g| !g.is_zero())
        .collect();
    let name = if v.name().is_empty() { String::new() } else { format!("{}-one-op", v.name()) };
    VarietyPresentation::new(name, sig, gens)
}

fn swap_prec(code: &[u8]) -> Monomial {
    match node(code) {
        Node::Leaf(v) => Monomial::var(v),
        Node::Op { op, left, right } => {
            let (l, r) = (swap_prec(left), swap_prec(right));
            if op % 2 == 1 {
                Monomial::op(op / 2, &r, &l)
            } else {
                Monomial::op(op / 2, &l, &r)
            }
        }
    }
}

/// Both sides of `c_n(di-V) = n · c_n(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimRelation {
    pub n: usize,
    pub codim: usize,
    pub di_codim: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
}

pub fn verify_codim_relation(v: &VarietyPresentation, n: usize, limits: &Limits) -> Result<CodimRelation> {
    let di = di_presentation(v)?;
    let c = codim(v, n, limits)?.codim;
    let dc = codim(&di, n, limits)?.codim;
    Ok(CodimRelation { n, codim: c, di_codim: dc, lhs: dc, rhs: n * c, equal: dc == n * c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_variety;

    fn m(s: &str, sig: &Signature) -> Monomial {
        let text = format!("{sig}\nidentity {s} = 0");
        let v = parse_variety(&text).unwrap();
        let t = v.generators()[0].terms().next().unwrap().0.clone();
        t
    }

    fn shown(p: &Poly, sig: &Signature) -> String {
        p.display(sig).to_string()
    }

    #[test]
    fn compose_rule() {
        let e = |n, i| PermBasisElement::new(n, i).unwrap();
        assert_eq!(perm_compose(e(1, 1), e(1, 1), Side::Right), e(2, 2));
        assert_eq!(perm_compose(e(1, 1), e(1, 1), Side::Left), e(2, 1));
        assert_eq!(perm_compose(e(2, 1), e(2, 2), Side::Right), e(4, 4));
        assert!(PermBasisElement::new(2, 3).is_err());
    }

    #[test]
    fn orientation_examples() {
        let sig = Signature::plain(["*"]).unwrap();
        let di = sig.di_of().unwrap();
        let s = |t: &str, i| orient_toward(&m(t, &sig), i).unwrap().display(&di).to_string();
        assert_eq!(s("(x1 * x2)", 2), "(x1 |-* x2)");
        assert_eq!(s("(x1 * x2)", 1), "(x1 -|* x2)");
        assert_eq!(s("((x1 * x2) * x3)", 3), "((x1 |-* x2) |-* x3)");
        assert_eq!(s("((x1 * x2) * x3)", 1), "((x1 -|* x2) -|* x3)");
        assert!(orient_toward(&m("(x1 * x2)", &sig), 3).is_err());
    }

    #[test]
    fn expansion_examples() {
        let sig = Signature::plain(["*"]).unwrap();
        let pre = sig.pre_of().unwrap();
        let s = |t: &str, i| shown(&expand_marked(&m(t, &sig), i).unwrap(), &pre);
        assert_eq!(s("(x1 * x2)", 1), "(x1 <* x2)");
        assert_eq!(s("(x1 * x2)", 2), "(x1 >* x2)");
        let p = expand_marked(&m("((x1 * x2) * x3)", &sig), 3).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(shown(&p, &pre), "((x1 >* x2) >* x3) + ((x1 <* x2) >* x3)");
        let q = expand_marked(&m("(x1 * (x2 * x3))", &sig), 1).unwrap();
        assert_eq!(shown(&q, &pre), "(x1 <* (x2 >* x3)) + (x1 <* (x2 <* x3))");
    }

    #[test]
    fn pre_presentation_sizes() {
        let com = crate::library::com();
        let pre = pre_presentation(&com).unwrap();
        assert_eq!(pre.generators().len(), 2 + 3);
        let one = eliminate_pairing(&pre).unwrap();
        assert_eq!(one.sig().op_count(), 1);
    }

    #[test]
    fn zero_identity_count() {
        let sig = Signature::plain(["a", "b"]).unwrap();
        assert_eq!(zero_identities(&sig).len(), 8);
    }
}
