//! Finite-dimensional algebras given by structure constants, the standard
//! constructions on them, and checks by evaluation on basis tuples.

mod algebra;
mod build;
mod check;
mod eval;

pub use algebra::FinDimAlgebra;
pub use build::{
    current_tensor, hat, hemisemidirect, make_perm, pboxtimes, split_null, split_null_unchecked, tensor_dialgebra,
    zboxtimes, BimoduleSpec, Hat, Hemisemidirect, PermKind,
};
pub use check::{
    certify, check_homomorphism, check_identity, embed_check_p2, embed_check_p2_with, find_violation,
    hat_variety_codim, id_component, identities_presentation, lemma1_algebras, lemma1_check, nth_root_enclosure,
    theorem4_check, var_codim, EmbeddingReport, IdComponent, Lemma1Algebras, Theorem4Row,
};
pub use eval::{basis_tuples, EvalPlan};
