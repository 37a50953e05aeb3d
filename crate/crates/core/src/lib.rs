//! Exact-arithmetic computations with matroids: lattices of flats, Chow rings
//! with canonical integer normal forms, Bergman fans and Minkowski weights,
//! staircase classes and CSM cycles, plus verifiers for the algebraic
//! identities relating them (contraction-deletion, divisor/pullback
//! compatibility, Poincaré-duality pairings).
//!
//! Everything is computed over the integers (rationals only at input
//! boundaries and inside exact solvers); there is no floating point anywhere.

pub mod chow;
pub mod corpus;
pub mod csm;
pub mod error;
pub mod fan;
pub mod json;
pub mod linalg;
pub mod matroid;
pub mod subset;

pub use chow::{ChainMonomial, ChowContext, ChowElement, Presentation};
pub use corpus::{builtin, builtin_corpus, builtin_names, CorpusEntry, Expected, Provenance};
pub use csm::{
    coefficient_cf, contraction_embedding, csm_cycle, csm_cycle_checked, deletion_pullback,
    expand_staircase_bruteforce, rational_product_form, run_verifier, staircase, staircase_factor,
    tsuv_partition, verify_identity, y_element, Identity, Route, TsuvPartition, VerifyOutcome,
};
pub use error::{Error, Result};
pub use fan::{
    balance_certificate, bergman_cones, cap_by_degree, courant_divisor, flags_of_dim, is_balanced,
    modification_pullback, one_top, phi_function, ray_vector, FlagCone, MinkowskiWeight,
    PLFunction,
};
pub use matroid::{
    validate_rank_axioms, ElementMap, FlatLattice, IntPoly, Matroid, MatroidSpec, MinorKind,
};
pub use subset::Subset;
