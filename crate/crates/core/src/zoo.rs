//! Example algebras shipped with the crate.

use crate::concrete::FinDimAlgebra;
use crate::format::parse_algebra;
use crate::terms::Flavor;

const SOURCES: &[(&str, &str)] = &[
    ("p2", include_str!("../zoo/p2.alg")),
    ("p0-4", include_str!("../zoo/p0-4.alg")),
    ("group2", include_str!("../zoo/group2.alg")),
    ("group3", include_str!("../zoo/group3.alg")),
    ("lie1", include_str!("../zoo/lie1.alg")),
    ("lie2", include_str!("../zoo/lie2.alg")),
    ("lie-ltimes", include_str!("../zoo/lie-ltimes.alg")),
    ("cyclic-leibniz", include_str!("../zoo/cyclic-leibniz.alg")),
    ("hemi-lie", include_str!("../zoo/hemi-lie.alg")),
    ("hemi-adjoint", include_str!("../zoo/hemi-adjoint.alg")),
    ("p2-lie2", include_str!("../zoo/p2-lie2.alg")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn algebra(name: &str) -> Option<FinDimAlgebra> {
    source(name).map(|s| parse_algebra(s).expect("shipped algebra parses"))
}

/// Every shipped algebra, in listing order.
pub fn all() -> Vec<(&'static str, FinDimAlgebra)> {
    names().map(|n| (n, algebra(n).unwrap())).collect()
}

/// The shipped algebras over a di signature.
pub fn dialgebras() -> Vec<(&'static str, FinDimAlgebra)> {
    all().into_iter().filter(|(_, a)| a.sig().flavor() == Flavor::Di).collect()
}
