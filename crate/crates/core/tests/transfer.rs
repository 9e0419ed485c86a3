use dicodim::format::parse_variety;
use dicodim::library;
use dicodim::terms::{free_dim, FreeSpace, Node};
use dicodim::tideal::{codim, consequences, tideal_equal};
use dicodim::transfer::{
    di_presentation, eliminate_pairing, orient_toward, pre_presentation, verify_codim_relation, zero_identities,
};
use dicodim::{Limits, Monomial, Signature, VarietyPresentation};
use proptest::prelude::*;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn codim_relation_examples() {
    let l = limits();
    let r = verify_codim_relation(&library::lie(), 3, &l).unwrap();
    assert_eq!((r.lhs, r.rhs, r.equal), (6, 6, true));
    let r = verify_codim_relation(&library::com(), 4, &l).unwrap();
    assert_eq!((r.lhs, r.rhs), (4, 4));
    let r = verify_codim_relation(&library::perm(), 3, &l).unwrap();
    assert_eq!((r.lhs, r.rhs), (9, 9));
}

#[test]
fn codim_relation_holds_on_library() {
    let l = limits();
    for v in [library::com(), library::lie(), library::perm(), library::assoc(), library::leib()] {
        for n in 1..=4 {
            let r = verify_codim_relation(&v, n, &l).unwrap();
            assert!(r.equal, "{} at {n}: {} vs {}", v.name(), r.lhs, r.rhs);
        }
    }
    let pois = library::pois();
    for n in 1..=3 {
        assert!(verify_codim_relation(&pois, n, &l).unwrap().equal);
    }
}

#[test]
fn zero_identities_alone_give_n_times_free() {
    let sig = Signature::plain(["*"]).unwrap();
    let free = VarietyPresentation::new("Alg", sig, vec![]).unwrap();
    let di = di_presentation(&free).unwrap();
    assert_eq!(di.generators().len(), 2);
    for n in 1..=4 {
        assert_eq!(codim(&di, n, &limits()).unwrap().codim as u128, n as u128 * free_dim(n, 1));
    }
}

#[test]
fn di_lie_is_leibniz() {
    let di = di_presentation(&library::lie()).unwrap();
    assert!(tideal_equal(&di, &library::leib_di(), 5, &limits()).unwrap());
    let com = codim(&di_presentation(&library::com()).unwrap(), 3, &limits()).unwrap();
    assert_eq!(com.codim, 3);
}

#[test]
fn pre_com_matches_hand_presentation() {
    let pre = pre_presentation(&library::com()).unwrap();
    // 2 generators of degree 2 and 3 give 2 + 3 marked identities
    assert_eq!(pre.generators().len(), 5);
    assert!(tideal_equal(&pre, &library::pre_com(), 4, &limits()).unwrap());
    let one = eliminate_pairing(&pre).unwrap();
    assert_eq!(codim(&one, 3, &limits()).unwrap().codim, 6);
    assert!(tideal_equal(&one, &library::zinbiel(), 4, &limits()).unwrap());
}

#[test]
fn pre_com_codims_match_single_operation_form() {
    let pre = pre_presentation(&library::com()).unwrap();
    for n in 1..=4 {
        assert_eq!(
            codim(&pre, n, &limits()).unwrap().codim,
            codim(&library::zinbiel(), n, &limits()).unwrap().codim
        );
    }
}

#[test]
fn di_poisson_leibniz_rules() {
    let l = limits();
    let di = di_presentation(&library::pois()).unwrap();
    let ideal = consequences(&di, 3, &l).unwrap();
    let space = FreeSpace::get(3, 4, &l).unwrap();
    let header = "diops: (|-., -|.), (|-{}, -|{})";
    for rule in [
        "((x1 |-. x2) |-{} x3) = (x1 |-. (x2 |-{} x3)) + (x2 |-. (x1 |-{} x3))",
        "(x1 |-{} (x2 |-. x3)) = ((x1 |-{} x2) |-. x3) + (x2 |-. (x1 |-{} x3))",
    ] {
        let v = parse_variety(&format!("{header}\nidentity {rule}")).unwrap();
        let f = space.vector(&v.generators()[0]).unwrap();
        assert!(ideal.contains(&f).unwrap(), "{rule}");
    }
}

/// Orientation toward `mark` with off-path nodes chosen by `flip`.
fn orient_with(m: &Monomial, mark: usize, flip: &mut impl FnMut() -> bool) -> Monomial {
    match m.node() {
        Node::Leaf(v) => Monomial::var(v),
        Node::Op { op, left, right } => {
            let l = Monomial::from_code(left).unwrap();
            let r = Monomial::from_code(right).unwrap();
            let in_left = l.leaves().any(|x| x == mark);
            let in_right = r.leaves().any(|x| x == mark);
            let side = if in_left {
                1
            } else if in_right {
                0
            } else {
                usize::from(flip())
            };
            Monomial::op(2 * op + side, &orient_with(&l, mark, flip), &orient_with(&r, mark, flip))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn off_path_orientation_is_irrelevant(pos in 0usize..120, mark in 1usize..=4, bits in any::<u64>()) {
        let l = limits();
        let sig = Signature::plain(["*"]).unwrap();
        let space = FreeSpace::get(4, 1, &l).unwrap();
        let m = space.monomial(pos).clone();
        let zero = VarietyPresentation::new("Alg0", sig.di_of().unwrap(), zero_identities(&sig)).unwrap();
        let ideal = consequences(&zero, 4, &l).unwrap();
        let di_space = FreeSpace::get(4, 2, &l).unwrap();
        let mut k = 0;
        let mut flip = || { k += 1; bits >> (k % 64) & 1 == 1 };
        let alt = orient_with(&m, mark, &mut flip);
        let canonical = orient_toward(&m, mark).unwrap();
        let diff = &dicodim::Poly::monomial(canonical) - &dicodim::Poly::monomial(alt);
        prop_assert!(ideal.contains(&di_space.vector(&diff).unwrap()).unwrap());
    }
}
