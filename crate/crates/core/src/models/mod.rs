//! Concrete skew lattices: partial functions and two infinite models.
//!
//! The strongly distributive skew lattice of partial functions on an
//! uncountable set whose fibers are all finite has no lattice section at
//! all. That argument rests on uncountability and has no finite content,
//! so it is not modelled here.

pub mod finimg;
pub mod omega;
pub mod pfn;

pub use finimg::{fi_join, fi_meet, fi_one_point_chain, FinCofinSet, FiniteImageElement};
pub use omega::{
    nat_window, om_id, om_join, om_leq, om_meet, om_verify_no_infimum_of_infs,
    om_verify_no_join_of_naturals, om_window, OmegaModel, SymbolicElement, SymbolicOrder,
};
pub use pfn::{build_pfn_algebra, pfn_carrier, pfn_index, PartialFunction};
