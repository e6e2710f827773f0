//! The naturals with two incomparable tops, `ℕ ∪ {∞a, ∞b}`.
//!
//! On naturals, and between a natural and an infinity, meet is `min` and
//! join is `max` (both infinities lie above every natural). Between the two
//! infinities meet is the left projection and join the right projection:
//!
//! ```text
//! ∞a ∧ ∞b = ∞a = ∞b ∨ ∞a
//! ∞b ∧ ∞a = ∞b = ∞a ∨ ∞b
//! ```
//!
//! The result is a left-handed, strongly distributive skew lattice with
//! zero `0` in which every subset avoiding one of the infinities commutes
//! and has an upper bound, yet the naturals have no supremum: the upper
//! bounds `∞a` and `∞b` are incomparable. The structure is infinite, so the
//! module offers the symbolic operations, finite windows `{0..k, ∞a, ∞b}`,
//! and finite case analyses ([`om_verify_no_join_of_naturals`],
//! [`om_verify_no_infimum_of_infs`]) whose checks cover every natural up
//! to `k`. The inference from "for every `k`" to the infinite statement is
//! the usual one and is not itself mechanized.
//!
//! Restricting to the naturals gives the chain `ℕ` ([`nat_window`]), where
//! every commuting subset extends to a lattice section (the chain itself)
//! but no infinite subset is bounded above.

use std::cmp::Ordering;
use std::fmt;

use crate::certificate::{CaseAnalysis, Certificate, Witness};
use crate::structure::{FiniteSkewLattice, Id, SkewLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolicElement {
    Nat(u64),
    InfA,
    InfB,
}

use SymbolicElement::{InfA, InfB, Nat};

impl fmt::Display for SymbolicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nat(n) => write!(f, "{n}"),
            InfA => f.write_str("inf_a"),
            InfB => f.write_str("inf_b"),
        }
    }
}

// Position in the chain ℕ < {∞a, ∞b}; both infinities share the top rank.
fn rank(x: SymbolicElement) -> Option<u64> {
    match x {
        Nat(n) => Some(n),
        _ => None,
    }
}

fn chain_cmp(x: SymbolicElement, y: SymbolicElement) -> Ordering {
    match (rank(x), rank(y)) {
        (Some(a), Some(b)) => a.cmp(&b),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

pub fn om_meet(x: SymbolicElement, y: SymbolicElement) -> SymbolicElement {
    match chain_cmp(x, y) {
        Ordering::Less => x,
        Ordering::Greater => y,
        // equal naturals, or two infinities: left projection
        Ordering::Equal => x,
    }
}

pub fn om_join(x: SymbolicElement, y: SymbolicElement) -> SymbolicElement {
    match chain_cmp(x, y) {
        Ordering::Less => y,
        Ordering::Greater => x,
        // equal naturals, or two infinities: right projection
        Ordering::Equal => y,
    }
}

/// Natural partial order: `x ∧ y = y ∧ x = x`.
pub fn om_leq(x: SymbolicElement, y: SymbolicElement) -> bool {
    om_meet(x, y) == x && om_meet(y, x) == x
}

/// An order on the symbolic carrier; lets the case analyses run against
/// altered models.
pub trait SymbolicOrder {
    fn leq(&self, x: SymbolicElement, y: SymbolicElement) -> bool;
}

/// The model itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct OmegaModel;

impl SymbolicOrder for OmegaModel {
    fn leq(&self, x: SymbolicElement, y: SymbolicElement) -> bool {
        om_leq(x, y)
    }
}

impl<F: Fn(SymbolicElement, SymbolicElement) -> bool> SymbolicOrder for F {
    fn leq(&self, x: SymbolicElement, y: SymbolicElement) -> bool {
        self(x, y)
    }
}

/// Carrier of [`om_window`] in id order: `0..=k`, then `∞a`, `∞b`.
pub fn om_window_carrier(k: u64) -> Vec<SymbolicElement> {
    (0..=k).map(Nat).chain([InfA, InfB]).collect()
}

/// Id of `x` in `om_window(k)`, if it lies in the window.
pub fn om_id(k: u64, x: SymbolicElement) -> Option<Id> {
    match x {
        Nat(n) if n <= k => Some(n as Id),
        Nat(_) => None,
        InfA => Some(k as Id + 1),
        InfB => Some(k as Id + 2),
    }
}

/// The finite window `{0, …, k, ∞a, ∞b}` as a table structure, zero `0`.
///
/// # Panics
///
/// If `k` is 0.
pub fn om_window(k: u64) -> SkewLattice {
    assert!(k >= 1, "window size must be at least 1");
    window_from(om_window_carrier(k))
}

/// The chain `{0, …, k}`: the naturals alone.
pub fn nat_window(k: u64) -> SkewLattice {
    window_from((0..=k).map(Nat).collect())
}

fn window_from(carrier: Vec<SymbolicElement>) -> SkewLattice {
    let id = |x: SymbolicElement| carrier.iter().position(|&c| c == x).unwrap();
    let raw = FiniteSkewLattice::from_fn(
        carrier.len(),
        |a, b| id(om_meet(carrier[a], carrier[b])),
        |a, b| id(om_join(carrier[a], carrier[b])),
    )
    .and_then(|s| s.with_zero(Some(0)))
    .and_then(|s| s.with_labels(Some(carrier.iter().map(|x| x.to_string()).collect())))
    .expect("window tables are well formed");
    SkewLattice::trusted(raw)
}

/// Case analysis showing that no element of the model is a supremum of
/// the naturals `0..=k` growing without bound:
///
/// - (a) every `n ≤ k` lies below both `∞a` and `∞b`;
/// - (b) `n < n + 1` strictly for `n < k`, so no natural bounds them all;
/// - (c) `∞a` and `∞b` are incomparable, so neither upper bound is least.
///
/// The record has `4k + 4` atomic checks.
pub fn om_verify_no_join_of_naturals(k: u64) -> Certificate {
    om_verify_no_join_of_naturals_in(&OmegaModel, k)
}

pub fn om_verify_no_join_of_naturals_in(model: &impl SymbolicOrder, k: u64) -> Certificate {
    let mut cases = CaseAnalysis::default();
    for n in 0..=k {
        cases.record(format!("{n} <= inf_a"), model.leq(Nat(n), InfA));
        cases.record(format!("{n} <= inf_b"), model.leq(Nat(n), InfB));
    }
    strict_chain(model, k, &mut cases);
    cases.record("not inf_a <= inf_b", !model.leq(InfA, InfB));
    cases.record("not inf_b <= inf_a", !model.leq(InfB, InfA));
    Certificate::new(cases.all_hold(), Witness::Cases(cases))
}

/// Case analysis showing `{∞a, ∞b}` has no infimum:
///
/// - (a) every `n ≤ k` is a lower bound of the pair;
/// - (b) `n < n + 1` strictly for `n < k`, so no natural lower bound is
///   greatest;
/// - (c) neither infinity lies below the other, so neither is a lower bound
///   of the pair.
pub fn om_verify_no_infimum_of_infs(k: u64) -> Certificate {
    om_verify_no_infimum_of_infs_in(&OmegaModel, k)
}

pub fn om_verify_no_infimum_of_infs_in(model: &impl SymbolicOrder, k: u64) -> Certificate {
    let mut cases = CaseAnalysis::default();
    for n in 0..=k {
        cases.record(
            format!("{n} is a lower bound of {{inf_a, inf_b}}"),
            model.leq(Nat(n), InfA) && model.leq(Nat(n), InfB),
        );
    }
    strict_chain(model, k, &mut cases);
    cases.record("inf_a is not a lower bound", !model.leq(InfA, InfB));
    cases.record("inf_b is not a lower bound", !model.leq(InfB, InfA));
    Certificate::new(cases.all_hold(), Witness::Cases(cases))
}

fn strict_chain(model: &impl SymbolicOrder, k: u64, cases: &mut CaseAnalysis) {
    for n in 0..k {
        cases.record(format!("{n} <= {}", n + 1), model.leq(Nat(n), Nat(n + 1)));
        cases.record(
            format!("not {} <= {n}", n + 1),
            !model.leq(Nat(n + 1), Nat(n)),
        );
    }
}
