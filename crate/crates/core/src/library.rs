//! Standard variety presentations.

use crate::format::parse_variety;
use crate::tideal::VarietyPresentation;

const SOURCES: &[(&str, &str)] = &[
    ("com", include_str!("../varieties/com.var")),
    ("assoc", include_str!("../varieties/assoc.var")),
    ("lie", include_str!("../varieties/lie.var")),
    ("leib", include_str!("../varieties/leib.var")),
    ("perm", include_str!("../varieties/perm.var")),
    ("zinbiel", include_str!("../varieties/zinbiel.var")),
    ("pre-com", include_str!("../varieties/pre-com.var")),
    ("leib-di", include_str!("../varieties/leib-di.var")),
    ("pois", include_str!("../varieties/pois.var")),
];

/// Names accepted by [`by_name`].
pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(n, _)| *n)
}

/// The shipped presentation called `name`.
pub fn by_name(name: &str) -> Option<VarietyPresentation> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, src)| parse_variety(src).expect("shipped variety parses"))
}

/// The file text of the shipped presentation called `name`.
pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, src)| *src)
}

/// Commutative associative algebras.
pub fn com() -> VarietyPresentation {
    by_name("com").unwrap()
}

/// Associative algebras.
pub fn assoc() -> VarietyPresentation {
    by_name("assoc").unwrap()
}

/// Lie algebras: anticommutativity and the Jacobi identity.
pub fn lie() -> VarietyPresentation {
    by_name("lie").unwrap()
}

/// Left Leibniz algebras.
pub fn leib() -> VarietyPresentation {
    by_name("leib").unwrap()
}

/// Associative algebras with `(xy − yx)z = 0`.
pub fn perm() -> VarietyPresentation {
    by_name("perm").unwrap()
}

/// Pre-commutative (Zinbiel) algebras with one product.
pub fn zinbiel() -> VarietyPresentation {
    by_name("zinbiel").unwrap()
}

/// Pre-commutative algebras with the pair `(>, <)`.
pub fn pre_com() -> VarietyPresentation {
    by_name("pre-com").unwrap()
}

/// Leibniz algebras written over the pair `(|-, -|)` with `x -| y = −(y |- x)`.
pub fn leib_di() -> VarietyPresentation {
    by_name("leib-di").unwrap()
}

/// Poisson algebras.
pub fn pois() -> VarietyPresentation {
    by_name("pois").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_parse() {
        for n in names() {
            let v = by_name(n).unwrap();
            assert!(!v.generators().is_empty(), "{n}");
        }
        assert_eq!(pre_com().sig().op_count(), 2);
        assert_eq!(pois().sig().op_count(), 2);
        assert!(by_name("nope").is_none());
    }
}
