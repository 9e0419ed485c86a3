use dicodim::concrete::check_identity;
use dicodim::library;
use dicodim::zinbiel::{
    divided_power_algebra, lemma3_report, shuffle_product, verify_lemma3, zn_dimension, ZElement, ZWord,
};
use dicodim::{FinDimAlgebra, Rational, Signature};
use num_traits::One;
use proptest::prelude::*;
use std::collections::BTreeMap;

/// All interleavings of `u` and `v`, built letter by letter.
fn interleavings(u: &[usize], v: &[usize]) -> Vec<Vec<usize>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in interleavings(&u[1..], v) {
        rest.insert(0, u[0]);
        out.push(rest);
    }
    for mut rest in interleavings(u, &v[1..]) {
        rest.insert(0, v[0]);
        out.push(rest);
    }
    out
}

fn oracle_product(u: &[usize], v: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let (last, head) = v.split_last().unwrap();
    let mut out = BTreeMap::new();
    for mut w in interleavings(u, head) {
        w.push(*last);
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn word_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 1..=4)
}

fn element_strategy() -> impl Strategy<Value = ZElement> {
    prop::collection::vec((word_strategy(), -3i64..=3), 1..=3).prop_map(|terms| {
        let mut e = ZElement::zero();
        for (w, c) in terms {
            e.add_term(ZWord::new(w).unwrap(), Rational::from_integer(c.into()));
        }
        e
    })
}

#[test]
fn lemma3_small_degrees() {
    for n in 1..=5 {
        let r = lemma3_report(n).unwrap();
        assert!(r.holds(), "n = {n}");
        let fact: usize = (1..=n).product();
        assert_eq!(r.lhs.len(), fact);
        assert!(r.lhs.terms().all(|(_, c)| c.is_one()));
        assert!(verify_lemma3(n).unwrap());
    }
}

#[test]
fn right_normed_span_dimension() {
    for n in 1..=6 {
        assert_eq!(zn_dimension(n).unwrap(), n, "n = {n}");
    }
}

#[test]
fn divided_powers_satisfy_single_product_identity() {
    for n in 1..=8 {
        let d = divided_power_algebra(n).unwrap();
        let sig = Signature::plain(["*"]).unwrap();
        let mut z = FinDimAlgebra::with_labels("succ", sig, d.labels().to_vec());
        for i in 0..n {
            for j in 0..n {
                z.set_product(0, i, j, d.product(0, i, j).clone()).unwrap();
            }
        }
        for f in library::zinbiel().generators() {
            assert!(check_identity(&z, f).unwrap(), "N = {n}");
        }
    }
}

proptest! {
    #[test]
    fn shuffle_matches_interleaving_oracle(u in word_strategy(), v in word_strategy()) {
        let p = shuffle_product(&ZWord::new(u.clone()).unwrap(), &ZWord::new(v.clone()).unwrap());
        let oracle = oracle_product(&u, &v);
        let total: i64 = oracle.values().sum();
        prop_assert_eq!(total as usize, binom(u.len() + v.len() - 1, u.len()));
        prop_assert_eq!(p.len(), oracle.len());
        for (w, c) in oracle {
            prop_assert_eq!(p.coeff(&ZWord::new(w).unwrap()), Rational::from_integer(c.into()));
        }
    }

    #[test]
    fn zinbiel_identity_on_elements(x in element_strategy(), y in element_strategy(), z in element_strategy()) {
        let lhs = x.mul(&y).mul(&z).add(&y.mul(&x).mul(&z));
        prop_assert_eq!(lhs, x.mul(&y.mul(&z)));
    }

    #[test]
    fn right_commutativity(x in element_strategy(), y in element_strategy(), z in element_strategy()) {
        // x(yz) = y(xz) holds in every algebra with this identity
        prop_assert_eq!(x.mul(&y.mul(&z)), y.mul(&x.mul(&z)));
    }

    #[test]
    fn product_is_bilinear(x in element_strategy(), y in element_strategy(), z in element_strategy(), c in -4i64..=4) {
        let c = Rational::from_integer(c.into());
        prop_assert_eq!(x.scale(&c).add(&y).mul(&z), x.mul(&z).scale(&c).add(&y.mul(&z)));
    }
}
