//! Partial functions `ℕ ⇀ ℕ` with finite image.
//!
//! Such a function is a finite list of fibers `(value, preimage)`. We keep
//! only fibers whose preimage is finite or cofinite: that family contains
//! the one-point maps, the constant maps and every finite partial function,
//! and it is closed under restriction and override because finite/cofinite
//! sets are closed under intersection, union and difference.
//!
//! The one-point maps `{n ↦ n}` commute pairwise. Joining the first `k` of
//! them gives the identity on `{0..k-1}`, whose image has `k` points, so no
//! finite-image function lies above all of them and the set does not extend
//! to a lattice section. [`fi_one_point_chain`] computes this growth.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::models::pfn::PartialFunction;

/// A finite or cofinite subset of `ℕ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FinCofinSet {
    Fin(BTreeSet<u64>),
    /// The complement of the listed (finite) set.
    Cofin(BTreeSet<u64>),
}

use FinCofinSet::{Cofin, Fin};

impl FinCofinSet {
    pub fn empty() -> Self {
        Fin(BTreeSet::new())
    }

    pub fn all() -> Self {
        Cofin(BTreeSet::new())
    }

    pub fn finite(xs: impl IntoIterator<Item = u64>) -> Self {
        Fin(xs.into_iter().collect())
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Self {
        Cofin(excluded.into_iter().collect())
    }

    pub fn contains(&self, x: u64) -> bool {
        match self {
            Fin(s) => s.contains(&x),
            Cofin(e) => !e.contains(&x),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Fin(s) if s.is_empty())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Fin(_))
    }

    pub fn complement(&self) -> Self {
        match self {
            Fin(s) => Cofin(s.clone()),
            Cofin(e) => Fin(e.clone()),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a.intersection(b).copied().collect()),
            (Fin(a), Cofin(e)) | (Cofin(e), Fin(a)) => Fin(a.difference(e).copied().collect()),
            (Cofin(e), Cofin(f)) => Cofin(e.union(f).copied().collect()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a.union(b).copied().collect()),
            (Fin(a), Cofin(e)) | (Cofin(e), Fin(a)) => Cofin(e.difference(a).copied().collect()),
            (Cofin(e), Cofin(f)) => Cofin(e.intersection(f).copied().collect()),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }
}

impl fmt::Display for FinCofinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (prefix, set) = match self {
            Fin(s) => ("", s),
            Cofin(e) => ("N\\", e),
        };
        f.write_str(prefix)?;
        f.write_str("{")?;
        for (i, x) in set.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// A partial function `ℕ ⇀ ℕ` with finite image, as `(value, preimage)`
/// fibers sorted by value. Preimages are nonempty and pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteImageElement {
    fibers: Vec<(u64, FinCofinSet)>,
}

impl FiniteImageElement {
    /// Validates and normalizes a fiber list. Empty preimages are dropped.
    pub fn new(fibers: impl IntoIterator<Item = (u64, FinCofinSet)>) -> Result<Self> {
        let mut by_value: BTreeMap<u64, FinCofinSet> = BTreeMap::new();
        for (value, pre) in fibers {
            if by_value.insert(value, pre).is_some() {
                return Err(Error::Representation(format!(
                    "value {value} has two fibers"
                )));
            }
        }
        let fibers: Vec<(u64, FinCofinSet)> = by_value
            .into_iter()
            .filter(|(_, p)| !p.is_empty())
            .collect();
        for (i, (v, p)) in fibers.iter().enumerate() {
            for (w, q) in &fibers[i + 1..] {
                if !p.is_disjoint(q) {
                    return Err(Error::Representation(format!(
                        "fibers of {v} and {w} overlap"
                    )));
                }
            }
        }
        Ok(FiniteImageElement { fibers })
    }

    pub fn empty() -> Self {
        FiniteImageElement { fibers: Vec::new() }
    }

    /// `{point ↦ value}`.
    pub fn point(point: u64, value: u64) -> Self {
        FiniteImageElement {
            fibers: vec![(value, FinCofinSet::finite([point]))],
        }
    }

    /// The total function with constant value `value`.
    pub fn constant(value: u64) -> Self {
        FiniteImageElement {
            fibers: vec![(value, FinCofinSet::all())],
        }
    }

    pub fn fibers(&self) -> &[(u64, FinCofinSet)] {
        &self.fibers
    }

    pub fn image(&self) -> impl Iterator<Item = u64> + '_ {
        self.fibers.iter().map(|(v, _)| *v)
    }

    pub fn image_size(&self) -> usize {
        self.fibers.len()
    }

    pub fn domain(&self) -> FinCofinSet {
        self.fibers
            .iter()
            .fold(FinCofinSet::empty(), |acc, (_, p)| acc.union(p))
    }

    pub fn apply(&self, x: u64) -> Option<u64> {
        self.fibers
            .iter()
            .find(|(_, p)| p.contains(x))
            .map(|(v, _)| *v)
    }

    /// Re-checks the representation invariants.
    pub fn is_valid(&self) -> bool {
        self.fibers.windows(2).all(|w| w[0].0 < w[1].0)
            && self.fibers.iter().all(|(_, p)| !p.is_empty())
            && self
                .fibers
                .iter()
                .enumerate()
                .all(|(i, (_, p))| self.fibers[i + 1..].iter().all(|(_, q)| p.is_disjoint(q)))
    }

    /// `f ∧ g`: `f` restricted to `dom f ∩ dom g`.
    pub fn meet(&self, other: &Self) -> Self {
        let dom = other.domain();
        let fibers = self
            .fibers
            .iter()
            .map(|(v, p)| (*v, p.intersection(&dom)))
            .filter(|(_, p)| !p.is_empty())
            .collect();
        FiniteImageElement { fibers }
    }

    /// `f ∨ g`: `g`, extended by `f` on `dom f ∖ dom g`.
    pub fn join(&self, other: &Self) -> Self {
        let dom = other.domain();
        let mut by_value: BTreeMap<u64, FinCofinSet> = other.fibers.iter().cloned().collect();
        for (v, p) in &self.fibers {
            let extra = p.difference(&dom);
            if extra.is_empty() {
                continue;
            }
            by_value
                .entry(*v)
                .and_modify(|q| *q = q.union(&extra))
                .or_insert(extra);
        }
        FiniteImageElement {
            fibers: by_value.into_iter().collect(),
        }
    }

    /// The same function as a [`PartialFunction`], when its domain is finite.
    pub fn to_partial_function(&self) -> Option<PartialFunction> {
        let mut pairs = Vec::new();
        for (v, p) in &self.fibers {
            match p {
                Fin(s) => pairs.extend(s.iter().map(|&x| (x, *v))),
                Cofin(_) => return None,
            }
        }
        PartialFunction::from_pairs(pairs).ok()
    }

    pub fn from_partial_function(f: &PartialFunction) -> Self {
        let mut by_value: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
        for (x, y) in f.pairs() {
            by_value.entry(y).or_default().insert(x);
        }
        FiniteImageElement {
            fibers: by_value.into_iter().map(|(v, s)| (v, Fin(s))).collect(),
        }
    }
}

impl fmt::Display for FiniteImageElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (v, p)) in self.fibers.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} <- {p}")?;
        }
        f.write_str("]")
    }
}

pub fn fi_meet(f: &FiniteImageElement, g: &FiniteImageElement) -> FiniteImageElement {
    f.meet(g)
}

pub fn fi_join(f: &FiniteImageElement, g: &FiniteImageElement) -> FiniteImageElement {
    f.join(g)
}

/// Joins `{0↦0}, {1↦1}, …, {k-1↦k-1}` one at a time and records
/// `(step, image size)` after each join. Each partial join is checked to be
/// a valid element equal to the identity on `{0..=step}`.
pub fn fi_one_point_chain(k: u64) -> Result<Vec<(u64, usize)>> {
    if k == 0 {
        return Err(Error::precondition("chain length must be at least 1"));
    }
    let mut acc = FiniteImageElement::point(0, 0);
    let mut out = Vec::with_capacity(k as usize);
    for step in 0..k {
        if step > 0 {
            acc = acc.join(&FiniteImageElement::point(step, step));
        }
        let expected = PartialFunction::from_pairs((0..=step).map(|n| (n, n)))?;
        if !acc.is_valid() || acc.to_partial_function().as_ref() != Some(&expected) {
            return Err(Error::inconsistent(format!(
                "join at step {step} is not the identity on 0..={step}: {acc}"
            )));
        }
        out.push((step, acc.image_size()));
    }
    Ok(out)
}
