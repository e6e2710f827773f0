//! Partial functions `A ⇀ B` under restriction and override.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::structure::{FiniteSkewLattice, SkewLattice};

/// A finite partial function, stored as its graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialFunction {
    graph: BTreeMap<u64, u64>,
}

impl PartialFunction {
    pub fn empty() -> Self {
        PartialFunction::default()
    }

    /// Builds a function from `(point, value)` pairs; fails if a point is
    /// listed twice.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut graph = BTreeMap::new();
        for (x, y) in pairs {
            if graph.insert(x, y).is_some() {
                return Err(Error::Representation(format!(
                    "point {x} has more than one value"
                )));
            }
        }
        Ok(PartialFunction { graph })
    }

    pub fn get(&self, x: u64) -> Option<u64> {
        self.graph.get(&x).copied()
    }

    pub fn domain(&self) -> impl Iterator<Item = u64> + '_ {
        self.graph.keys().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.graph.iter().map(|(&x, &y)| (x, y))
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// `f ∧ g`: `f` restricted to `dom f ∩ dom g`.
    pub fn meet(&self, other: &Self) -> Self {
        PartialFunction {
            graph: self
                .graph
                .iter()
                .filter(|(x, _)| other.graph.contains_key(x))
                .map(|(&x, &y)| (x, y))
                .collect(),
        }
    }

    /// `f ∨ g`: `g` together with `f` restricted to `dom f ∖ dom g`.
    pub fn join(&self, other: &Self) -> Self {
        let mut graph = other.graph.clone();
        for (&x, &y) in &self.graph {
            graph.entry(x).or_insert(y);
        }
        PartialFunction { graph }
    }
}

impl fmt::Display for PartialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}:{y}")?;
        }
        f.write_str("}")
    }
}

/// Default cap on the order of structures built by constructors.
pub const DEFAULT_BUILD_CAP: usize = 512;

/// The cap in effect: `SKEWLAT_ORDER_CAP` if set and numeric, else `default`.
pub fn order_cap(default: usize) -> usize {
    std::env::var("SKEWLAT_ORDER_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

/// Carrier of `P(domain_size, codomain_size)` in id order.
///
/// Element `i` is read in base `codomain_size + 1`: digit `k` is 0 when the
/// point `k` is undefined, and `v + 1` when it maps to `v`. Id 0 is the
/// empty function.
pub fn pfn_carrier(domain_size: usize, codomain_size: usize) -> Vec<PartialFunction> {
    let base = codomain_size as u64 + 1;
    let order = base.pow(domain_size as u32);
    (0..order)
        .map(|mut code| {
            let mut graph = BTreeMap::new();
            for point in 0..domain_size as u64 {
                let digit = code % base;
                code /= base;
                if digit > 0 {
                    graph.insert(point, digit - 1);
                }
            }
            PartialFunction { graph }
        })
        .collect()
}

/// Id of `f` in [`pfn_carrier`] order.
pub fn pfn_index(f: &PartialFunction, codomain_size: usize) -> usize {
    let base = codomain_size + 1;
    f.pairs()
        .map(|(x, y)| (y as usize + 1) * base.pow(x as u32))
        .sum()
}

/// All partial functions `{0..domain_size} ⇀ {0..codomain_size}` with
/// restriction as meet and override as join. Zero is the empty function.
pub fn build_pfn_algebra(domain_size: usize, codomain_size: usize) -> Result<SkewLattice> {
    build_pfn_algebra_capped(domain_size, codomain_size, order_cap(DEFAULT_BUILD_CAP))
}

pub fn build_pfn_algebra_capped(
    domain_size: usize,
    codomain_size: usize,
    cap: usize,
) -> Result<SkewLattice> {
    if domain_size == 0 || codomain_size == 0 {
        return Err(Error::precondition(
            "domain and codomain sizes must be at least 1",
        ));
    }
    let order = (codomain_size + 1)
        .checked_pow(domain_size as u32)
        .filter(|&o| o <= cap)
        .ok_or(Error::CapExceeded {
            order: (codomain_size + 1).saturating_pow(domain_size as u32),
            cap,
        })?;
    let carrier = pfn_carrier(domain_size, codomain_size);
    debug_assert_eq!(carrier.len(), order);
    let raw = FiniteSkewLattice::from_fn(
        order,
        |a, b| pfn_index(&carrier[a].meet(&carrier[b]), codomain_size),
        |a, b| pfn_index(&carrier[a].join(&carrier[b]), codomain_size),
    )?
    .with_zero(Some(0))?
    .with_labels(Some(carrier.iter().map(|f| f.to_string()).collect()))?;
    raw.validate()
}
