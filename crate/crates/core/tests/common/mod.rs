#![allow(dead_code)]

use itertools::Itertools;
use skewlat::models::{pfn_index, PartialFunction};
use skewlat::{FiniteSkewLattice, Id, SkewLattice};

pub fn l2() -> SkewLattice {
    FiniteSkewLattice::from_fn(2, |a, _| a, |_, b| b)
        .unwrap()
        .validate()
        .unwrap()
}

pub fn chain(n: usize) -> SkewLattice {
    FiniteSkewLattice::from_fn(n, usize::min, usize::max)
        .unwrap()
        .with_zero(Some(0))
        .unwrap()
        .validate()
        .unwrap()
}

/// Subsets of `0..bits` under intersection and union.
pub fn boolean(bits: u32) -> SkewLattice {
    FiniteSkewLattice::from_fn(1 << bits, |a, b| a & b, |a, b| a | b)
        .unwrap()
        .with_zero(Some(0))
        .unwrap()
        .validate()
        .unwrap()
}

/// Id of a partial function in `build_pfn_algebra(_, codomain)`.
pub fn pf(codomain: usize, pairs: &[(u64, u64)]) -> Id {
    pfn_index(
        &PartialFunction::from_pairs(pairs.iter().copied()).unwrap(),
        codomain,
    )
}

/// Brute-force isomorphism search, independent of canonical forms.
pub fn isomorphic(a: &FiniteSkewLattice, b: &FiniteSkewLattice) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    (0..n).permutations(n).any(|p| {
        (0..n).all(|x| {
            (0..n).all(|y| {
                p[a.meet(x, y)] == b.meet(p[x], p[y]) && p[a.join(x, y)] == b.join(p[x], p[y])
            })
        })
    })
}
