//! The free Zinbiel (pre-commutative) algebra.
//!
//! A word `z_{l1} z_{l2} ... z_{lk}` stands for the left-normed product
//! `(...((z_{l1} z_{l2}) z_{l3}) ...) z_{lk}`. These words form a basis, and the
//! product of two words keeps the last letter of the right factor at the end
//! while shuffling everything else.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::concrete::{certify, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{RowBasis, SparseVector};
use crate::terms::{Flavor, Permutation, Signature};
use crate::Rational;

/// A nonempty word in the generators `z_1, z_2, ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZWord {
    letters: Vec<usize>,
}

impl ZWord {
    pub fn new(letters: Vec<usize>) -> Result<ZWord> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("empty Zinbiel word".into()));
        }
        Ok(ZWord { letters })
    }

    pub fn letter(z: usize) -> ZWord {
        ZWord { letters: vec![z] }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for ZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "z{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rational combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZElement {
    terms: BTreeMap<ZWord, Rational>,
}

impl ZElement {
    pub fn zero() -> ZElement {
        ZElement::default()
    }

    pub fn word(w: ZWord) -> ZElement {
        let mut e = ZElement::zero();
        e.add_term(w, Rational::one());
        e
    }

    pub fn letter(z: usize) -> ZElement {
        ZElement::word(ZWord::letter(z))
    }

    pub fn add_term(&mut self, w: ZWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &ZWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ZElement) -> ZElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ZElement {
        let mut out = ZElement::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), d * c);
        }
        out
    }

    /// The Zinbiel product, extended bilinearly.
    pub fn mul(&self, other: &ZElement) -> ZElement {
        let mut out = ZElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for_each_shuffle(u, v, |w| out.add_term(w, ab.clone()));
            }
        }
        out
    }
}

impl fmt::Display for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{c} ({w})")?;
            }
        }
        Ok(())
    }
}

fn for_each_shuffle(u: &ZWord, v: &ZWord, mut f: impl FnMut(ZWord)) {
    let (n, m) = (u.len(), v.len());
    let head = &v.letters[..m - 1];
    let last = v.letters[m - 1];
    let total = n + m - 1;
    // positions of u's letters among the first `total` slots, increasing
    let mut pos: Vec<usize> = (0..n).collect();
    loop {
        let mut letters = Vec::with_capacity(total + 1);
        let (mut a, mut b) = (0, 0);
        for slot in 0..total {
            if a < n && pos[a] == slot {
                letters.push(u.letters[a]);
                a += 1;
            } else {
                letters.push(head[b]);
                b += 1;
            }
        }
        letters.push(last);
        f(ZWord { letters });
        // next n-subset of 0..total in lexicographic order
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if pos[k] < total - n + k {
                pos[k] += 1;
                for t in k + 1..n {
                    pos[t] = pos[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The product `u · v` of two words.
pub fn shuffle_product(u: &ZWord, v: &ZWord) -> ZElement {
    let mut out = ZElement::zero();
    for_each_shuffle(u, v, |w| out.add_term(w, Rational::one()));
    out
}

/// `z_{l1}(z_{l2}(...(z_{l(k-1)} z_{lk})...))` in the word basis.
pub fn right_normed_word(letters: &[usize]) -> Result<ZElement> {
    let (&last, init) = letters
        .split_last()
        .ok_or_else(|| Error::InvalidArgument("empty Zinbiel word".into()))?;
    let mut acc = ZElement::letter(last);
    for &l in init.iter().rev() {
        acc = ZElement::letter(l).mul(&acc);
    }
    Ok(acc)
}

/// `z_{a+1}(z_{a+2}(...ẑ_i...(z_b z_i)...))`: the letters `a+1..=b` without `i`, then `z_i`.
pub fn right_normed(a: usize, b: usize, i: usize) -> Result<ZElement> {
    if !(a < i && i <= b) {
        return Err(Error::InvalidArgument(format!("need {a} < {i} <= {b}")));
    }
    let mut letters: Vec<usize> = (a + 1..=b).filter(|&l| l != i).collect();
    letters.push(i);
    right_normed_word(&letters)
}

/// Both sides of the identity `Σ_i (z1...ẑi...(zn zi)...) z_{n+1} = z1(z2...(zn z_{n+1})...)`.
#[derive(Clone, Debug)]
pub struct Lemma3Report {
    pub n: usize,
    pub lhs: ZElement,
    pub rhs: ZElement,
    /// `Σ_{σ ∈ S_n}` of the words `z_{σ1} ... z_{σn} z_{n+1}`.
    pub symmetrized: ZElement,
}

impl Lemma3Report {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.rhs == self.symmetrized
    }
}

pub fn lemma3_report(n: usize) -> Result<Lemma3Report> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let last = ZElement::letter(n + 1);
    let mut lhs = ZElement::zero();
    for i in 1..=n {
        lhs = lhs.add(&right_normed(0, n, i)?.mul(&last));
    }
    let rhs = right_normed_word(&(1..=n + 1).collect::<Vec<_>>())?;
    let mut symmetrized = ZElement::zero();
    for p in Permutation::all(n) {
        let mut letters = p.images().to_vec();
        letters.push(n + 1);
        symmetrized.add_term(ZWord { letters }, Rational::one());
    }
    Ok(Lemma3Report { n, lhs, rhs, symmetrized })
}

pub fn verify_lemma3(n: usize) -> Result<bool> {
    Ok(lemma3_report(n)?.holds())
}

/// Rank of the right-normed products `z_{σ1}(...(z_{σ(n-1)} z_{σn})...)`, `σ ∈ S_n`.
pub fn zn_dimension(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(k, p)| (p.images().to_vec(), k)).collect();
    let mut basis = RowBasis::new(perms.len());
    for p in &perms {
        let e = right_normed_word(p.images())?;
        let v = SparseVector::from_entries(e.terms().map(|(w, c)| (index[w.letters()], c.clone())));
        basis.insert(&v)?;
    }
    Ok(basis.rank())
}

/// `x^1, ..., x^N` with `x^a > x^b = (1/a) x^{a+b}` (zero past `N`) and `x < y = y > x`.
pub fn divided_power_algebra(n: usize) -> Result<FinDimAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("truncation degree must be at least 1".into()));
    }
    let sig = Signature::doubled(Flavor::Pre, [(">", "<")])?;
    let labels = (1..=n).map(|k| format!("x{k}")).collect();
    let mut alg = FinDimAlgebra::with_labels(format!("DivPow({n})"), sig, labels);
    for a in 1..=n {
        for b in 1..=n {
            if a + b > n {
                continue;
            }
            let v = SparseVector::from_entries([(a + b - 1, Rational::new(1.into(), (a as i64).into()))]);
            alg.set_product(0, a - 1, b - 1, v)?;
            let w = SparseVector::from_entries([(a + b - 1, Rational::new(1.into(), (b as i64).into()))]);
            alg.set_product(1, a - 1, b - 1, w)?;
        }
    }
    certify(&alg, &crate::library::pre_com())?;
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn w(l: &[usize]) -> ZWord {
        ZWord::new(l.to_vec()).unwrap()
    }

    fn el(words: &[&[usize]]) -> ZElement {
        let mut e = ZElement::zero();
        for l in words {
            e.add_term(w(l), Rational::one());
        }
        e
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_product(&w(&[1]), &w(&[2])), el(&[&[1, 2]]));
        assert_eq!(shuffle_product(&w(&[1, 2]), &w(&[3])), el(&[&[1, 2, 3]]));
        assert_eq!(shuffle_product(&w(&[1]), &w(&[2, 3])), el(&[&[1, 2, 3], &[2, 1, 3]]));
        assert_eq!(
            shuffle_product(&w(&[1, 2]), &w(&[3, 4])),
            el(&[&[1, 2, 3, 4], &[1, 3, 2, 4], &[3, 1, 2, 4]])
        );
    }

    #[test]
    fn right_normed_examples() {
        assert_eq!(right_normed(0, 2, 2).unwrap(), el(&[&[1, 2]]));
        assert_eq!(right_normed(0, 2, 1).unwrap(), el(&[&[2, 1]]));
        assert_eq!(right_normed(0, 3, 3).unwrap(), el(&[&[1, 2, 3], &[2, 1, 3]]));
        assert_eq!(right_normed_word(&[1, 2, 3]).unwrap(), right_normed_word(&[2, 1, 3]).unwrap());
        assert!(right_normed(2, 2, 2).is_err());
    }

    #[test]
    fn lemma3_small() {
        assert!(verify_lemma3(1).unwrap());
        let r = lemma3_report(3).unwrap();
        assert!(r.holds());
        assert_eq!(r.rhs.len(), 6);
        assert!(r.rhs.terms().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn zn_small() {
        assert_eq!(zn_dimension(1).unwrap(), 1);
        assert_eq!(zn_dimension(2).unwrap(), 2);
        assert_eq!(zn_dimension(3).unwrap(), 3);
    }

    #[test]
    fn divided_powers() {
        let a = divided_power_algebra(4).unwrap();
        assert_eq!(a.product(0, 0, 0), &SparseVector::unit(1));
        assert_eq!(a.product(0, 1, 0), &SparseVector::from_entries([(2, rat(1, 2))]));
        assert!(a.product(0, 1, 2).is_zero());
        assert_eq!(a.product(1, 0, 1), &SparseVector::from_entries([(2, rat(1, 2))]));
    }
}
