//! Exhaustive enumeration of small skew lattices up to isomorphism.
//!
//! The main search ([`enumerate`]) first lists every labelled band
//! (idempotent semigroup) on `0..n` for the meet, then, for each one,
//! every compatible join. Absorption fixes many join cells outright
//! (`x ∨ (x ∧ y) = x`, `(x ∧ y) ∨ y = y`) and restricts the rest
//! (`x ∧ (x ∨ y) = x`, `(x ∨ y) ∧ y = y`); associativity is checked on
//! every partially filled table. Results are deduplicated by
//! [`canonicalize`], the lexicographically least table pair over all
//! relabellings, and emitted in canonical-form order.
//!
//! [`enumerate_brute_force`] is an independent second route for tiny
//! orders: it scans every idempotent table pair without pruning.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::completeness::{
    check_ba, check_ex, check_implication_chain, check_jc, check_ls, check_prop_joins,
};
use crate::error::{Error, Result};
use crate::frames::{check_theorem_ncframes, is_frame, is_ncframe};
use crate::green::{check_lemma_reg, green_d, quotient};
use crate::laws::{check_identity, check_symmetric, Identity};
use crate::models::pfn::order_cap;
use crate::structure::{FiniteSkewLattice, SkewLattice};

/// Default order cap for unfiltered enumeration.
pub const DEFAULT_UNFILTERED_CAP: usize = 4;
/// Default order cap when a filter is set.
pub const DEFAULT_FILTERED_CAP: usize = 5;

const UNSET: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TriState {
    Require,
    Forbid,
    #[default]
    Ignore,
}

impl TriState {
    fn accepts(self, value: bool) -> bool {
        match self {
            TriState::Require => value,
            TriState::Forbid => !value,
            TriState::Ignore => true,
        }
    }
}

/// Property filter applied to census output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CensusFilter {
    pub zero: TriState,
    pub strongly_distributive: TriState,
    pub left_handed: TriState,
    pub normal: TriState,
    pub symmetric: TriState,
    pub commutative: TriState,
}

impl CensusFilter {
    pub fn is_empty(&self) -> bool {
        *self == CensusFilter::default()
    }

    pub fn accepts(&self, s: &SkewLattice) -> bool {
        self.zero.accepts(s.zero().is_some())
            && self
                .strongly_distributive
                .accepts(check_identity(s, Identity::StronglyDistributive).verdict)
            && self
                .left_handed
                .accepts(check_identity(s, Identity::LeftHanded).verdict)
            && self
                .normal
                .accepts(check_identity(s, Identity::Normal).verdict)
            && self.symmetric.accepts(check_symmetric(s).verdict)
            && self.commutative.accepts(s.is_commutative())
    }

    fn slot(&mut self, name: &str) -> Option<&mut TriState> {
        Some(match name {
            "zero" => &mut self.zero,
            "strongly_distributive" => &mut self.strongly_distributive,
            "left_handed" => &mut self.left_handed,
            "normal" => &mut self.normal,
            "symmetric" => &mut self.symmetric,
            "commutative" => &mut self.commutative,
            _ => return None,
        })
    }
}

/// Comma-separated flags; a leading `!` forbids, e.g. `zero,!commutative`.
impl FromStr for CensusFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut filter = CensusFilter::default();
        for raw in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (state, name) = match raw.strip_prefix('!') {
                Some(rest) => (TriState::Forbid, rest),
                None => (TriState::Require, raw),
            };
            let name = name.replace('-', "_");
            *filter
                .slot(&name)
                .ok_or_else(|| Error::UnknownPredicate(raw.to_string()))? = state;
        }
        Ok(filter)
    }
}

/// Lexicographically least `meet ‖ join` (row-major) over all relabellings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    tables: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The representative structure whose tables are the canonical form.
    pub fn to_structure(&self) -> FiniteSkewLattice {
        let n2 = self.order * self.order;
        let widen = |xs: &[u8]| xs.iter().map(|&x| x as usize).collect();
        FiniteSkewLattice::from_flat(
            self.order,
            widen(&self.tables[..n2]),
            widen(&self.tables[n2..]),
        )
    }
}

fn relabel(n: usize, tables: &[u8], perm: &[usize], out: &mut [u8]) {
    let n2 = n * n;
    for half in 0..2 {
        let src = &tables[half * n2..(half + 1) * n2];
        let dst = &mut out[half * n2..(half + 1) * n2];
        for a in 0..n {
            for b in 0..n {
                dst[perm[a] * n + perm[b]] = perm[src[a * n + b] as usize] as u8;
            }
        }
    }
}

fn canonical_tables(n: usize, tables: &[u8]) -> Vec<u8> {
    let mut best = tables.to_vec();
    let mut scratch = vec![0u8; tables.len()];
    for perm in (0..n).permutations(n) {
        relabel(n, tables, &perm, &mut scratch);
        if scratch < best {
            best.copy_from_slice(&scratch);
        }
    }
    best
}

fn packed(s: &FiniteSkewLattice) -> Vec<u8> {
    s.meet_flat()
        .iter()
        .chain(s.join_flat())
        .map(|&x| u8::try_from(x).expect("census orders fit in u8"))
        .collect()
}

/// Canonical form of `s`; equal forms mean isomorphic structures.
///
/// # Panics
///
/// If the order exceeds 255.
pub fn canonicalize(s: &FiniteSkewLattice) -> CanonicalForm {
    let n = s.order();
    CanonicalForm {
        order: n,
        tables: canonical_tables(n, &packed(s)),
    }
}

fn assoc_consistent(n: usize, t: &[u8]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = t[b * n + c];
                if bc == UNSET {
                    continue;
                }
                let left = t[ab as usize * n + c];
                let right = t[a * n + bc as usize];
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Completes every unset cell of `table` with values allowed by `allowed`
/// while keeping associativity consistent, calling `visit` on each full
/// table.
fn complete_tables(
    n: usize,
    table: &mut Vec<u8>,
    allowed: &dyn Fn(usize, usize, u8) -> bool,
    visit: &mut dyn FnMut(&[u8]),
) {
    let free: Vec<usize> = (0..n * n).filter(|&i| table[i] == UNSET).collect();
    if assoc_consistent(n, table) {
        fill(n, table, &free, 0, allowed, visit);
    }
}

fn fill(
    n: usize,
    table: &mut Vec<u8>,
    free: &[usize],
    k: usize,
    allowed: &dyn Fn(usize, usize, u8) -> bool,
    visit: &mut dyn FnMut(&[u8]),
) {
    let Some(&cell) = free.get(k) else {
        visit(table);
        return;
    };
    let (x, y) = (cell / n, cell % n);
    for v in 0..n as u8 {
        if !allowed(x, y, v) {
            continue;
        }
        table[cell] = v;
        if assoc_consistent(n, table) {
            fill(n, table, free, k + 1, allowed, visit);
        }
    }
    table[cell] = UNSET;
}

fn diagonal(n: usize) -> Vec<u8> {
    let mut t = vec![UNSET; n * n];
    for i in 0..n {
        t[i * n + i] = i as u8;
    }
    t
}

/// Every labelled band on `0..n`, as row-major tables.
fn labelled_bands(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    complete_tables(n, &mut diagonal(n), &|_, _, _| true, &mut |t| {
        out.push(t.to_vec())
    });
    out
}

/// Every join table making `(meet, join)` a skew lattice.
fn joins_for(n: usize, meet: &[u8]) -> Vec<Vec<u8>> {
    let m = |a: usize, b: usize| meet[a * n + b] as usize;
    let mut join = diagonal(n);
    for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            for (cell, v) in [(x * n + xy, x), (xy * n + y, y)] {
                if join[cell] != UNSET && join[cell] as usize != v {
                    return Vec::new();
                }
                join[cell] = v as u8;
            }
        }
    }
    let allowed = |x: usize, y: usize, v: u8| m(x, v as usize) == x && m(v as usize, y) == y;
    let forced_ok = (0..n * n).all(|c| join[c] == UNSET || allowed(c / n, c % n, join[c]));
    if !forced_ok {
        return Vec::new();
    }
    let mut out = Vec::new();
    complete_tables(n, &mut join, &allowed, &mut |t| out.push(t.to_vec()));
    out
}

/// All labelled skew lattices on `0..n` found by the pruned search, as
/// packed `meet ‖ join` tables.
fn labelled_pruned(n: usize) -> Vec<Vec<u8>> {
    labelled_bands(n)
        .par_iter()
        .flat_map_iter(|meet| {
            joins_for(n, meet).into_iter().map(move |join| {
                let mut t = meet.clone();
                t.extend_from_slice(&join);
                t
            })
        })
        .filter(|t| from_packed(n, t).validate_skew_axioms().verdict)
        .collect()
}

fn from_packed(n: usize, t: &[u8]) -> FiniteSkewLattice {
    CanonicalForm {
        order: n,
        tables: t.to_vec(),
    }
    .to_structure()
}

/// Number of labelled skew lattices on `0..n` (not up to isomorphism).
pub fn count_labelled(order: usize) -> usize {
    labelled_pruned(order).len()
}

fn canonical_set(n: usize, labelled: Vec<Vec<u8>>) -> BTreeSet<CanonicalForm> {
    labelled
        .par_iter()
        .map(|t| CanonicalForm {
            order: n,
            tables: canonical_tables(n, t),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn finish(forms: BTreeSet<CanonicalForm>, filter: &CensusFilter) -> Vec<SkewLattice> {
    forms
        .into_iter()
        .map(|f| SkewLattice::trusted(f.to_structure().with_detected_zero()))
        .filter(|s| filter.accepts(s))
        .collect()
}

/// The cap in effect for `filter`; `SKEWLAT_ORDER_CAP` overrides both
/// defaults.
pub fn census_cap(filter: &CensusFilter) -> usize {
    order_cap(if filter.is_empty() {
        DEFAULT_UNFILTERED_CAP
    } else {
        DEFAULT_FILTERED_CAP
    })
}

/// One representative per isomorphism class of skew lattices of `order`
/// passing `filter`, in canonical-form order. Representatives carry their
/// zero when they have one.
pub fn enumerate(order: usize, filter: &CensusFilter) -> Result<Vec<SkewLattice>> {
    enumerate_capped(order, filter, census_cap(filter))
}

pub fn enumerate_capped(
    order: usize,
    filter: &CensusFilter,
    cap: usize,
) -> Result<Vec<SkewLattice>> {
    if order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if order > cap {
        return Err(Error::CapExceeded { order, cap });
    }
    Ok(finish(canonical_set(order, labelled_pruned(order)), filter))
}

/// Every census structure of order `1..=max_order`, unfiltered.
pub fn enumerate_up_to(max_order: usize) -> Result<Vec<SkewLattice>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate(n, &CensusFilter::default())?);
    }
    Ok(out)
}

/// Second enumeration route: every pair of idempotent tables, no pruning
/// beyond checking each table is a band. Practical for order ≤ 3.
pub fn enumerate_brute_force(order: usize) -> Result<Vec<SkewLattice>> {
    if order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if order > 3 {
        return Err(Error::CapExceeded { order, cap: 3 });
    }
    let n = order;
    let off: Vec<usize> = (0..n * n).filter(|c| c / n != c % n).collect();
    let all_idempotent = (0..off.len())
        .map(|_| 0..n as u8)
        .multi_cartesian_product()
        .map(|vals| {
            let mut t = diagonal(n);
            for (&c, v) in off.iter().zip(vals) {
                t[c] = v;
            }
            t
        });
    let bands: Vec<Vec<u8>> = if off.is_empty() {
        vec![diagonal(n)]
    } else {
        all_idempotent.filter(|t| is_associative(n, t)).collect()
    };
    let labelled: Vec<Vec<u8>> = bands
        .iter()
        .cartesian_product(bands.iter())
        .map(|(m, j)| [m.as_slice(), j.as_slice()].concat())
        .filter(|t| from_packed(n, t).validate_skew_axioms().verdict)
        .collect();
    Ok(finish(canonical_set(n, labelled), &CensusFilter::default()))
}

fn is_associative(n: usize, t: &[u8]) -> bool {
    let op = |a: usize, b: usize| t[a * n + b] as usize;
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))))
}

/// Named properties usable in [`search_counterexample`].
///
/// Properties that need a normal symmetric structure (the completeness
/// checks) or a strongly distributive one with zero (the frame theorem) are
/// false when that precondition fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Validated,
    Identity(Identity),
    Symmetric,
    HasZero,
    LemmaReg,
    DownSetsCommutative,
    PropJoins,
    Jc,
    Ba,
    Ex,
    Ls,
    ImplicationChain,
    NcFrame,
    ShadowFrame,
    TheoremNcFrames,
}

impl Predicate {
    pub const CATALOG: &'static [&'static str] = &[
        "validated",
        "regular",
        "normal",
        "distributive",
        "strongly_distributive",
        "left_handed",
        "right_handed",
        "commutative",
        "symmetric",
        "has_zero",
        "lemma_reg",
        "down_sets_commutative",
        "prop_joins",
        "jc",
        "ba",
        "ex",
        "ls",
        "implication_chain",
        "ncframe",
        "shadow_frame",
        "theorem_ncframes",
    ];

    pub fn eval(self, s: &SkewLattice) -> bool {
        let ok = |r: Result<crate::Certificate>| r.map(|c| c.verdict).unwrap_or(false);
        match self {
            Predicate::Validated => s.validate_skew_axioms().verdict,
            Predicate::Identity(i) => check_identity(s, i).verdict,
            Predicate::Symmetric => check_symmetric(s).verdict,
            Predicate::HasZero => s.zero().or_else(|| s.detect_zero()).is_some(),
            Predicate::LemmaReg => check_lemma_reg(s, &green_d(s)).verdict,
            Predicate::DownSetsCommutative => s
                .elements()
                .all(|a| crate::green::down_set(s, a).is_ok_and(|d| d.lattice.is_commutative())),
            Predicate::PropJoins => ok(check_prop_joins(s)),
            Predicate::Jc => ok(check_jc(s)),
            Predicate::Ba => ok(check_ba(s)),
            Predicate::Ex => ok(check_ex(s)),
            Predicate::Ls => ok(check_ls(s)),
            Predicate::ImplicationChain => ok(check_implication_chain(s)),
            Predicate::NcFrame => is_ncframe(s).verdict,
            Predicate::ShadowFrame => quotient(s)
                .and_then(|q| is_frame(&q.lattice))
                .is_ok_and(|v| v.is_frame),
            Predicate::TheoremNcFrames => ok(check_theorem_ncframes(s)),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim().to_ascii_lowercase().replace('-', "_");
        if let Ok(i) = name.parse::<Identity>() {
            return Ok(Predicate::Identity(i));
        }
        Ok(match name.as_str() {
            "validated" => Predicate::Validated,
            "symmetric" => Predicate::Symmetric,
            "has_zero" | "zero" => Predicate::HasZero,
            "lemma_reg" => Predicate::LemmaReg,
            "down_sets_commutative" => Predicate::DownSetsCommutative,
            "prop_joins" => Predicate::PropJoins,
            "jc" => Predicate::Jc,
            "ba" => Predicate::Ba,
            "ex" => Predicate::Ex,
            "ls" => Predicate::Ls,
            "implication_chain" => Predicate::ImplicationChain,
            "ncframe" => Predicate::NcFrame,
            "shadow_frame" => Predicate::ShadowFrame,
            "theorem_ncframes" => Predicate::TheoremNcFrames,
            _ => return Err(Error::UnknownPredicate(s.to_string())),
        })
    }
}

/// A conjunction of predicates, written `a&b&c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjunction(pub Vec<Predicate>);

impl Conjunction {
    pub fn eval(&self, s: &SkewLattice) -> bool {
        self.0.iter().all(|p| p.eval(s))
    }
}

impl FromStr for Conjunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<Predicate> = s.split(['&', '∧']).map(str::parse).collect::<Result<_>>()?;
        Ok(Conjunction(parts))
    }
}

impl fmt::Display for Conjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|p| format!("{p:?}")).join("&"))
    }
}

/// First census structure of order `1..=order_max` satisfying `hypothesis`
/// but not `conclusion`.
pub fn search_counterexample(
    order_max: usize,
    hypothesis: &str,
    conclusion: &str,
) -> Result<Option<SkewLattice>> {
    let hyp: Conjunction = hypothesis.parse()?;
    let concl: Conjunction = conclusion.parse()?;
    for n in 1..=order_max {
        let found = enumerate(n, &CensusFilter::default())?
            .into_iter()
            .find(|s| hyp.eval(s) && !concl.eval(s));
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
