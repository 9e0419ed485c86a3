use dicodim::format::parse_variety;
use dicodim::library;
use dicodim::terms::{act, FreeSpace};
use dicodim::tideal::{brute_force_consequences, codim, codim_sequence, consequences, tideal_equal};
use dicodim::{Error, Limits, Permutation, Signature, VarietyPresentation};

fn limits() -> Limits {
    Limits::default()
}

fn codims(v: &VarietyPresentation, nmax: usize) -> Vec<usize> {
    codim_sequence(v, nmax, &limits()).unwrap().iter().map(|r| r.codim).collect()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn com_degree_three() {
    let r = codim(&library::com(), 3, &limits()).unwrap();
    assert_eq!((r.free_dim, r.ideal_dim, r.codim), (12, 11, 1));
}

#[test]
fn perm_basis_count() {
    let r = codim(&library::perm(), 4, &limits()).unwrap();
    assert_eq!((r.free_dim, r.ideal_dim), (120, 116));
    assert_eq!(codims(&library::perm(), 5), vec![1, 2, 3, 4, 5]);
}

#[test]
fn classical_sequences() {
    assert_eq!(codims(&library::com(), 5), vec![1; 5]);
    let lie: Vec<usize> = (1..=5).map(|n| factorial(n - 1)).collect();
    assert_eq!(codims(&library::lie(), 5), lie);
    let fact: Vec<usize> = (1..=5).map(factorial).collect();
    assert_eq!(codims(&library::leib(), 5), fact);
    assert_eq!(codims(&library::zinbiel(), 5), fact);
    assert_eq!(codims(&library::assoc(), 5), fact);
}

#[test]
fn empty_presentation() {
    let sig = Signature::plain(["*"]).unwrap();
    let v = VarietyPresentation::new("free", sig, vec![]).unwrap();
    assert_eq!(consequences(&v, 3, &limits()).unwrap().rank(), 0);
    assert_eq!(brute_force_consequences(&v, 3, &limits()).unwrap().rank(), 0);
}

#[test]
fn single_monomial_generator_fills_degree_two() {
    let v = parse_variety("ops: *\nidentity (x1 * x2) = 0").unwrap();
    assert_eq!(brute_force_consequences(&v, 2, &limits()).unwrap().rank(), 2);
    assert_eq!(codims(&v, 4), vec![1, 0, 0, 0]);
}

#[test]
fn closure_matches_brute_force() {
    let l = limits();
    for v in [library::com(), library::lie(), library::perm(), library::zinbiel(), library::leib()] {
        for n in 3..=4 {
            let a = consequences(&v, n, &l).unwrap();
            let b = brute_force_consequences(&v, n, &l).unwrap();
            assert!(a == b, "{} at {n}", v.name());
        }
    }
    let di = dicodim::transfer::di_presentation(&library::lie()).unwrap();
    assert!(consequences(&di, 3, &l).unwrap() == brute_force_consequences(&di, 3, &l).unwrap());
    let pois = library::pois();
    assert!(consequences(&pois, 3, &l).unwrap() == brute_force_consequences(&pois, 3, &l).unwrap());
}

#[test]
fn brute_force_guard() {
    let di = dicodim::transfer::di_presentation(&library::lie()).unwrap();
    assert!(matches!(brute_force_consequences(&di, 5, &limits()), Err(Error::ResourceLimit { .. })));
}

#[test]
fn lie_in_two_forms() {
    let leibniz_form = parse_variety(
        "ops: *\nidentity (x1 * x2) + (x2 * x1) = 0\nidentity (x1 * (x2 * x3)) = ((x1 * x2) * x3) + (x2 * (x1 * x3))",
    )
    .unwrap();
    assert!(tideal_equal(&library::lie(), &leibniz_form, 5, &limits()).unwrap());
    assert!(tideal_equal(&library::com(), &library::com(), 4, &limits()).unwrap());
    assert!(!tideal_equal(&library::com(), &library::perm(), 3, &limits()).unwrap());
    assert!(matches!(
        tideal_equal(&library::com(), &library::leib_di(), 3, &limits()),
        Err(Error::SignatureMismatch(_))
    ));
}

#[test]
fn components_are_symmetric_and_monotone() {
    let l = limits();
    let v = library::leib();
    let b3 = consequences(&v, 3, &l).unwrap();
    let b4 = consequences(&v, 4, &l).unwrap();
    let s3 = FreeSpace::get(3, 1, &l).unwrap();
    let s4 = FreeSpace::get(4, 1, &l).unwrap();
    for perm in Permutation::all(3) {
        for row in b3.rows() {
            let moved = act(&perm, &s3.poly(row)).unwrap();
            assert!(b3.contains(&s3.vector(&moved).unwrap()).unwrap());
        }
    }
    let x4 = dicodim::Monomial::var(4);
    for row in b3.rows() {
        let p = s3.poly(row);
        let right = p.map_monomials(|m| dicodim::Monomial::op(0, m, &x4));
        let left = p.map_monomials(|m| dicodim::Monomial::op(0, &x4, m));
        assert!(b4.contains(&s4.vector(&right).unwrap()).unwrap());
        assert!(b4.contains(&s4.vector(&left).unwrap()).unwrap());
    }
}

#[test]
fn nilpotent_variety_saturates() {
    let v = parse_variety("ops: *\nidentity ((x1 * x2) * x3) = 0\nidentity (x1 * (x2 * x3)) = 0").unwrap();
    assert_eq!(codims(&v, 5), vec![1, 2, 0, 0, 0]);
}

#[test]
fn resource_cap_reports_degree() {
    let l = Limits { max_free_dim: 200, ..Limits::default() };
    match codim(&library::lie(), 5, &l) {
        Err(Error::ResourceLimit { degree, .. }) => assert_eq!(degree, Some(4)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn dump_golden() {
    let b = consequences(&library::com(), 2, &limits()).unwrap();
    assert_eq!(b.dump(), "0:1/1 1:-1/1\n");
}
