//! Commuting subsets, suprema in the natural order, and the completeness
//! properties of normal symmetric skew lattices:
//!
//! - **JC**: every commuting subset has a supremum;
//! - **BA**: every commuting subset has an upper bound;
//! - **EX**: every commuting subset is contained in a lattice section;
//! - **LS**: some lattice section exists.
//!
//! Each implies the next. On a finite structure all four hold, so the
//! deciders here double as consistency checks; the infinite failures are
//! witnessed in [`models`](crate::models).
//!
//! All checks enumerate every commuting subset, which is exponential in the
//! worst case. They are meant for the small structures of the census and
//! the model windows.

use std::fmt;

use crate::certificate::{Certificate, Witness};
use crate::error::{Error, Result};
use crate::green::{down_set, green_d, DPartition};
use crate::laws::{check_identity, check_symmetric, Identity};
use crate::structure::{Id, SkewLattice};

/// Pairs of elements commuting under both operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationGraph {
    adj: Vec<Vec<bool>>,
}

impl CommutationGraph {
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: Id, b: Id) -> bool {
        self.adj[a][b]
    }

    /// Unordered pairs `a < b` that do not commute.
    pub fn missing_edges(&self) -> Vec<(Id, Id)> {
        let n = self.order();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.adj[a][b])
            .collect()
    }

    pub fn is_clique(&self, members: &[Id]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.adj[a][b]))
    }

    /// Maximal commuting subsets, by Bron–Kerbosch with pivoting. Each
    /// clique is sorted; the list is sorted lexicographically.
    pub fn maximal_cliques(&self) -> Vec<Vec<Id>> {
        let mut out = Vec::new();
        let all: Vec<Id> = (0..self.order()).collect();
        self.bron_kerbosch(&mut Vec::new(), all, Vec::new(), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: &mut Vec<Id>, p: Vec<Id>, mut x: Vec<Id>, out: &mut Vec<Vec<Id>>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| v != u && self.adj[u][v]).count())
            .expect("p is nonempty");
        let mut p = p;
        let branch: Vec<Id> = p
            .iter()
            .copied()
            .filter(|&v| v == pivot || !self.adj[pivot][v])
            .collect();
        for v in branch {
            let np = p
                .iter()
                .copied()
                .filter(|&w| w != v && self.adj[v][w])
                .collect();
            let nx = x
                .iter()
                .copied()
                .filter(|&w| w != v && self.adj[v][w])
                .collect();
            r.push(v);
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
}

pub fn commutation_graph(s: &SkewLattice) -> CommutationGraph {
    let adj = s
        .elements()
        .map(|a| s.elements().map(|b| s.commutes(a, b)).collect())
        .collect();
    CommutationGraph { adj }
}

/// A nonempty set of pairwise commuting elements, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommutingSubset {
    members: Vec<Id>,
}

impl CommutingSubset {
    pub fn new(s: &SkewLattice, members: &[Id]) -> Result<Self> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::precondition("commuting subsets are nonempty"));
        }
        for &m in &members {
            s.check_id(m)?;
        }
        for (i, &a) in members.iter().enumerate() {
            if let Some(&b) = members[i + 1..].iter().find(|&&b| !s.commutes(a, b)) {
                return Err(Error::precondition(format!("{a} and {b} do not commute")));
            }
        }
        Ok(CommutingSubset { members })
    }

    pub fn members(&self) -> &[Id] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Every commuting subset, each exactly once, in lexicographic order of
/// the sorted member lists (a subset precedes its extensions).
pub struct CommutingSubsets {
    graph: CommutationGraph,
    max_size: Option<usize>,
    stack: Vec<Frame>,
}

struct Frame {
    members: Vec<Id>,
    candidates: Vec<Id>,
    next: usize,
}

impl Iterator for CommutingSubsets {
    type Item = CommutingSubset;

    fn next(&mut self) -> Option<CommutingSubset> {
        loop {
            let top = self.stack.last_mut()?;
            let Some(&v) = top.candidates.get(top.next) else {
                self.stack.pop();
                continue;
            };
            top.next += 1;
            let mut members = top.members.clone();
            members.push(v);
            let below_cap = self.max_size.is_none_or(|m| members.len() < m);
            if below_cap {
                let candidates = top.candidates[top.next..]
                    .iter()
                    .copied()
                    .filter(|&w| self.graph.adj[v][w])
                    .collect();
                self.stack.push(Frame {
                    members: members.clone(),
                    candidates,
                    next: 0,
                });
            }
            return Some(CommutingSubset { members });
        }
    }
}

/// Streams the nonempty cliques of the commutation graph, optionally only
/// those with at most `max_size` members.
pub fn enumerate_commuting_subsets(s: &SkewLattice, max_size: Option<usize>) -> CommutingSubsets {
    let graph = commutation_graph(s);
    let root = Frame {
        members: Vec::new(),
        candidates: (0..s.order()).collect(),
        next: 0,
    };
    let stack = if max_size == Some(0) {
        Vec::new()
    } else {
        vec![root]
    };
    CommutingSubsets {
        graph,
        max_size,
        stack,
    }
}

fn check_subset(s: &SkewLattice, c: &[Id]) -> Result<()> {
    if c.is_empty() {
        return Err(Error::precondition(
            "empty subset has no supremum or infimum here",
        ));
    }
    c.iter().try_for_each(|&x| s.check_id(x))
}

/// Least upper bound of `c` in the natural order, if it exists.
pub fn sup_natural(s: &SkewLattice, c: &[Id]) -> Result<Option<Id>> {
    check_subset(s, c)?;
    let uppers: Vec<Id> = s
        .elements()
        .filter(|&u| c.iter().all(|&x| s.leq(x, u)))
        .collect();
    Ok(uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&w| s.leq(u, w))))
}

/// Greatest lower bound of `c` in the natural order, if it exists.
pub fn inf_natural(s: &SkewLattice, c: &[Id]) -> Result<Option<Id>> {
    check_subset(s, c)?;
    let lowers: Vec<Id> = s
        .elements()
        .filter(|&l| c.iter().all(|&x| s.leq(l, x)))
        .collect();
    Ok(lowers
        .iter()
        .copied()
        .find(|&l| lowers.iter().all(|&w| s.leq(w, l))))
}

/// `c₁ ∨ c₂ ∨ … ∨ cₖ` over the members in ascending order.
pub fn join_fold(s: &SkewLattice, c: &CommutingSubset) -> Id {
    s.join_all(c.members())
}

/// `c₁ ∧ c₂ ∧ … ∧ cₖ` over the members in ascending order.
pub fn meet_fold(s: &SkewLattice, c: &CommutingSubset) -> Id {
    s.meet_all(c.members())
}

pub(crate) fn require_normal_symmetric(s: &SkewLattice) -> Result<()> {
    if !check_identity(s, Identity::Normal).verdict {
        return Err(Error::precondition("structure is not normal"));
    }
    if !check_symmetric(s).verdict {
        return Err(Error::precondition("structure is not symmetric"));
    }
    Ok(())
}

/// A join of commuting elements exists iff the join of their classes exists
/// and exactly one element of that class lies above all of them; when it
/// does, it is that element. Checked over every commuting subset.
pub fn check_prop_joins(s: &SkewLattice) -> Result<Certificate> {
    require_normal_symmetric(s)?;
    let d = green_d(s);
    for c in enumerate_commuting_subsets(s, None) {
        let members = c.members();
        let sup = sup_natural(s, members)?;
        let class_join = d.class_join(members.iter().map(|&x| d.class_of(x)));
        let dominating: Vec<Id> = match class_join {
            Some(u) => d
                .class(u)
                .iter()
                .copied()
                .filter(|&a| members.iter().all(|&x| s.leq(x, a)))
                .collect(),
            None => Vec::new(),
        };
        let rhs = class_join.is_some() && dominating.len() == 1;
        let consistent = match sup {
            Some(a) => rhs && dominating[0] == a && Some(d.class_of(a)) == class_join,
            None => !rhs,
        };
        if !consistent {
            return Ok(Certificate::fails(Witness::Subset(members.to_vec())));
        }
    }
    Ok(Certificate::holds())
}

/// A subalgebra meeting every D-class exactly once on which both operations
/// commute.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeSection {
    members: Vec<Id>,
}

impl LatticeSection {
    pub fn members(&self) -> &[Id] {
        &self.members
    }

    pub fn contains(&self, a: Id) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn contains_all(&self, xs: &[Id]) -> bool {
        xs.iter().all(|&x| self.contains(x))
    }
}

/// Checks the three defining conditions of a lattice section.
pub fn is_lattice_section(s: &SkewLattice, d: &DPartition, members: &[Id]) -> bool {
    let mut seen = vec![false; d.len()];
    for &m in members {
        if m >= s.order() || std::mem::replace(&mut seen[d.class_of(m)], true) {
            return false;
        }
    }
    if !seen.iter().all(|&x| x) {
        return false;
    }
    members.iter().all(|&a| {
        members.iter().all(|&b| {
            s.commutes(a, b) && members.contains(&s.meet(a, b)) && members.contains(&s.join(a, b))
        })
    })
}

/// All lattice sections. For normal structures with a top class these are
/// the down-sets `t↓` of its members; without a top class every transversal
/// of the D-classes is tried.
pub fn lattice_sections(s: &SkewLattice) -> Result<Vec<LatticeSection>> {
    require_normal_symmetric(s)?;
    let d = green_d(s);
    let Some(top) = d.top_class() else {
        return lattice_sections_by_transversals(s);
    };
    let mut out = Vec::new();
    for &t in d.class(top) {
        let members = down_set(s, t)?.members;
        if is_lattice_section(s, &d, &members) {
            out.push(LatticeSection { members });
        }
    }
    out.sort();
    Ok(out)
}

/// All lattice sections by brute force over transversals of the D-classes.
pub fn lattice_sections_by_transversals(s: &SkewLattice) -> Result<Vec<LatticeSection>> {
    let d = green_d(s);
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(d.len());
    transversals(s, &d, &mut choice, &mut out);
    for sec in &mut out {
        sec.members.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn transversals(
    s: &SkewLattice,
    d: &DPartition,
    choice: &mut Vec<Id>,
    out: &mut Vec<LatticeSection>,
) {
    let u = choice.len();
    if u == d.len() {
        if is_lattice_section(s, d, choice) {
            out.push(LatticeSection {
                members: choice.clone(),
            });
        }
        return;
    }
    for &x in d.class(u) {
        if choice.iter().all(|&y| s.commutes(x, y)) {
            choice.push(x);
            transversals(s, d, choice, out);
            choice.pop();
        }
    }
}

/// Every commuting subset has a supremum.
pub fn check_jc(s: &SkewLattice) -> Result<Certificate> {
    require_normal_symmetric(s)?;
    for c in enumerate_commuting_subsets(s, None) {
        if sup_natural(s, c.members())?.is_none() {
            return Ok(Certificate::fails(Witness::Subset(c.members)));
        }
    }
    Ok(Certificate::holds())
}

/// Every commuting subset has an upper bound (which need not commute with
/// it).
pub fn check_ba(s: &SkewLattice) -> Result<Certificate> {
    require_normal_symmetric(s)?;
    for c in enumerate_commuting_subsets(s, None) {
        let bounded = s
            .elements()
            .any(|u| c.members().iter().all(|&x| s.leq(x, u)));
        if !bounded {
            return Ok(Certificate::fails(Witness::Subset(c.members)));
        }
    }
    Ok(Certificate::holds())
}

/// Every commuting subset lies inside some lattice section.
pub fn check_ex(s: &SkewLattice) -> Result<Certificate> {
    let sections = lattice_sections(s)?;
    for c in enumerate_commuting_subsets(s, None) {
        if !sections.iter().any(|l| l.contains_all(c.members())) {
            return Ok(Certificate::fails(Witness::Subset(c.members)));
        }
    }
    Ok(Certificate::holds())
}

/// Some lattice section exists; the witness is the first one found.
pub fn check_ls(s: &SkewLattice) -> Result<Certificate> {
    Ok(match lattice_sections(s)?.into_iter().next() {
        Some(l) => Certificate::new(true, Witness::Section(l.members)),
        None => Certificate::fails(Witness::None),
    })
}

/// The four completeness verdicts of one structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletenessProfile {
    pub jc: bool,
    pub ba: bool,
    pub ex: bool,
    pub ls: bool,
}

impl CompletenessProfile {
    pub fn as_array(&self) -> [(&'static str, bool); 4] {
        [
            ("JC", self.jc),
            ("BA", self.ba),
            ("EX", self.ex),
            ("LS", self.ls),
        ]
    }

    /// No property in the chain JC ⇒ BA ⇒ EX ⇒ LS is true while a later one
    /// is false.
    pub fn is_monotone(&self) -> bool {
        let v = self.as_array();
        v.windows(2).all(|w| !w[0].1 || w[1].1)
    }
}

impl fmt::Display for CompletenessProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, v)) in self.as_array().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={v}")?;
        }
        Ok(())
    }
}

pub fn completeness_profile(s: &SkewLattice) -> Result<CompletenessProfile> {
    Ok(CompletenessProfile {
        jc: check_jc(s)?.verdict,
        ba: check_ba(s)?.verdict,
        ex: check_ex(s)?.verdict,
        ls: check_ls(s)?.verdict,
    })
}

/// JC ⇒ BA ⇒ EX ⇒ LS on `s`. The witness lists the four verdicts.
pub fn check_implication_chain(s: &SkewLattice) -> Result<Certificate> {
    let p = completeness_profile(s)?;
    let sides = p
        .as_array()
        .iter()
        .map(|(n, v)| (n.to_string(), *v))
        .collect();
    Ok(Certificate::new(p.is_monotone(), Witness::Sides(sides)))
}
