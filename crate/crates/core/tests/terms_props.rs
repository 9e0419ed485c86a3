use dicodim::terms::{act, enumerate_free_basis, free_dim, multilinearize, substitute, RawPoly};
use dicodim::{rat, Limits, Monomial, Permutation, Poly, Signature};
use proptest::prelude::*;

/// Independent count: planar binary trees with labelled leaves and labelled nodes.
fn count_trees(n: u128, k: u128) -> u128 {
    fn shapes(n: u128) -> u128 {
        if n == 1 {
            return 1;
        }
        (1..n).map(|l| shapes(l) * shapes(n - l)).sum()
    }
    let fact: u128 = (1..=n).product();
    fact * shapes(n) * k.pow(n as u32 - 1)
}

#[test]
fn free_basis_counts_match_recursive_oracle() {
    let limits = Limits::default();
    for k in 1..=2 {
        let names: Vec<String> = (0..k).map(|j| format!("o{j}")).collect();
        let sig = Signature::plain(names).unwrap();
        for n in 1..=6 {
            let want = count_trees(n as u128, k as u128);
            assert_eq!(free_dim(n, k), want);
            if want <= limits.max_free_dim as u128 {
                assert_eq!(enumerate_free_basis(n, &sig, &limits).unwrap().len() as u128, want);
            }
        }
    }
    assert_eq!(free_dim(5, 1), 1680);
    assert_eq!(free_dim(5, 2), 26880);
}

#[test]
fn canonical_order_is_sorted_and_stable() {
    let sig = Signature::plain(["a", "b"]).unwrap();
    let basis = enumerate_free_basis(4, &sig, &Limits::default()).unwrap();
    let mut again = basis.clone();
    again.reverse();
    again.sort();
    assert_eq!(again, basis);
    assert!(basis.windows(2).all(|w| w[0] < w[1]));
}

fn arb_monomial(n: usize, k: usize) -> impl Strategy<Value = Monomial> {
    let leaves = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
    (leaves, proptest::collection::vec((0..k, any::<prop::sample::Index>()), n - 1)).prop_map(|(order, merges)| {
        let mut parts: Vec<Monomial> = order.into_iter().map(Monomial::var).collect();
        for (op, idx) in merges {
            let i = idx.index(parts.len() - 1);
            let r = parts.remove(i + 1);
            let l = parts.remove(i);
            parts.insert(i, Monomial::op(op, &l, &r));
        }
        parts.pop().unwrap()
    })
}

fn arb_poly(n: usize, k: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((arb_monomial(n, k), -5i64..=5), 1..5)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(m, c)| (m, rat(c, 1)))))
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn action_is_a_group_action(p in arb_poly(5, 2), s in arb_perm(5), t in arb_perm(5)) {
        let lhs = act(&s, &act(&t, &p).unwrap()).unwrap();
        let rhs = act(&s.compose(&t), &p).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(act(&Permutation::identity(5), &p).unwrap(), p.clone());
        prop_assert_eq!(act(&s.inverse(), &act(&s, &p).unwrap()).unwrap(), p);
    }

    #[test]
    fn action_is_linear(p in arb_poly(4, 1), q in arb_poly(4, 1), s in arb_perm(4)) {
        let sum = act(&s, &(&p + &q)).unwrap();
        prop_assert_eq!(sum, &act(&s, &p).unwrap() + &act(&s, &q).unwrap());
    }

    #[test]
    fn substitution_is_multilinear_and_linear(p in arb_poly(3, 2), q in arb_poly(3, 2), m in arb_monomial(2, 2), i in 1usize..=3) {
        let s = substitute(&(&p + &q), i, &m).unwrap();
        prop_assert_eq!(s.clone(), &substitute(&p, i, &m).unwrap() + &substitute(&q, i, &m).unwrap());
        prop_assert!(s.is_zero() || (s.is_multilinear() && s.degree() == Some(4)));
    }

    #[test]
    fn substitution_commutes_with_relabelling(p in arb_poly(3, 1), m in arb_monomial(2, 1), s in arb_perm(3)) {
        // substituting into x_{s(i)} after acting by s equals acting by the extended s after substituting into x_i
        let i = 1;
        let lhs = substitute(&act(&s, &p).unwrap(), s.apply(i), &m).unwrap();
        let mut ext: Vec<usize> = s.images().to_vec();
        ext.push(4);
        let ext = Permutation::from_images(ext).unwrap();
        let rhs = act(&ext, &substitute(&p, i, &m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn disjoint_substitutions_commute(p in arb_poly(3, 2), m1 in arb_monomial(2, 2), m2 in arb_monomial(2, 2)) {
        // the fresh leaves x4 and x5 are handed out in the opposite order
        let a = substitute(&substitute(&p, 1, &m1).unwrap(), 2, &m2).unwrap();
        let b = substitute(&substitute(&p, 2, &m2).unwrap(), 1, &m1).unwrap();
        let swap = Permutation::from_images(vec![1, 2, 3, 5, 4]).unwrap();
        prop_assert_eq!(a, act(&swap, &b).unwrap());
    }

    #[test]
    fn order_is_total_and_degree_first(a in arb_monomial(3, 2), b in arb_monomial(4, 2)) {
        prop_assert!(a < b);
        prop_assert_eq!(a.cmp(&a), std::cmp::Ordering::Equal);
    }

    #[test]
    fn multilinearize_fixes_multilinear_input(p in arb_poly(4, 2)) {
        let raw = RawPoly { terms: p.terms().map(|(m, c)| (m.clone(), c.clone())).collect() };
        let out = multilinearize(&raw).unwrap();
        if p.is_zero() {
            prop_assert!(out.is_empty());
        } else {
            prop_assert_eq!(out, vec![p]);
        }
    }
}
