//! Finite skew lattices: checking the axioms and identities, computing
//! Green's D-structure and the commutative shadow, deciding the completeness
//! properties JC, BA, EX and LS, and verifying the noncommutative frame
//! theorem on finite structures and on windows of two infinite models.
//!
//! ```
//! use skewlat::{FiniteSkewLattice, green_d, quotient, check_identity, Identity};
//!
//! // two elements, meet = left projection, join = right projection
//! let s = FiniteSkewLattice::from_fn(2, |a, _| a, |_, b| b)?.validate()?;
//! assert!(check_identity(&s, Identity::LeftHanded).verdict);
//! assert_eq!(green_d(&s).len(), 1);
//! assert_eq!(quotient(&s)?.order(), 1);
//! # Ok::<(), skewlat::Error>(())
//! ```
//!
//! The `book/` directory of the repository walks through the concepts; its
//! code samples are compiled and run as doc-tests of this crate.

mod certificate;
mod error;
mod green;
mod laws;
mod structure;

pub mod census;
pub mod completeness;
pub mod format;
pub mod frames;
pub mod models;

pub use certificate::{
    CaseAnalysis, CaseCheck, Certificate, DistributiveSide, Operation, Violation, Witness,
};
pub use completeness::{
    check_ba, check_ex, check_implication_chain, check_jc, check_ls, check_prop_joins,
    commutation_graph, completeness_profile, enumerate_commuting_subsets, inf_natural, join_fold,
    lattice_sections, meet_fold, sup_natural, CommutationGraph, CommutingSubset,
    CompletenessProfile, LatticeSection,
};
pub use error::{Error, Result};
pub use frames::{check_theorem_ncframes, is_frame, is_ncframe, FrameVerdict};
pub use green::{
    check_lemma_reg, down_set, green_d, is_homomorphism, quotient, restriction, subalgebra,
    DPartition, Homomorphism, QuotientLattice, Subalgebra,
};
pub use laws::{check_identity, check_identity_named, check_symmetric, Identity, Law};
pub use structure::{check_law, natural_leq, FiniteSkewLattice, Id, SkewLattice};

#[cfg(doctest)]
mod book;
