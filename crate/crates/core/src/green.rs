//! Green's relation D, the commutative shadow, down-sets and restrictions.

use crate::certificate::{Certificate, Operation, Violation, Witness};
use crate::error::{Error, Result};
use crate::laws::Law;
use crate::structure::{FiniteSkewLattice, Id, SkewLattice};

/// The D-classes of a skew lattice and the lattice order between them.
///
/// Classes are numbered in order of their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<Id>>,
    class_leq: Vec<Vec<bool>>,
    top_class: Option<usize>,
    bottom_class: Option<usize>,
}

impl DPartition {
    pub fn class_of(&self, a: Id) -> usize {
        self.class_of[a]
    }

    pub fn classes(&self) -> &[Vec<Id>] {
        &self.classes
    }

    pub fn class(&self, u: usize) -> &[Id] {
        &self.classes[u]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `u ≤ v` in the order of the commutative shadow.
    pub fn class_leq(&self, u: usize, v: usize) -> bool {
        self.class_leq[u][v]
    }

    pub fn top_class(&self) -> Option<usize> {
        self.top_class
    }

    pub fn bottom_class(&self) -> Option<usize> {
        self.bottom_class
    }

    /// Least upper bound of `classes` in the class order, if it exists.
    pub fn class_join(&self, classes: impl IntoIterator<Item = usize>) -> Option<usize> {
        let given: Vec<usize> = classes.into_iter().collect();
        let uppers: Vec<usize> = (0..self.len())
            .filter(|&w| given.iter().all(|&u| self.class_leq(u, w)))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&w| uppers.iter().all(|&x| self.class_leq(w, x)))
    }
}

/// Computes the D-classes of `s`.
pub fn green_d(s: &SkewLattice) -> DPartition {
    let n = s.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Id>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<Id> = (a..n).filter(|&b| s.d_related(a, b)).collect();
        for &b in &members {
            class_of[b] = id;
        }
        classes.push(members);
    }
    let k = classes.len();
    // [a] ≤ [b] iff a ∧ b ∧ a = a
    let class_leq: Vec<Vec<bool>> = (0..k)
        .map(|u| {
            let a = classes[u][0];
            (0..k)
                .map(|v| s.meet_all(&[a, classes[v][0], a]) == a)
                .collect()
        })
        .collect();
    let top_class = (0..k).find(|&t| (0..k).all(|u| class_leq[u][t]));
    let bottom_class = (0..k).find(|&b| (0..k).all(|u| class_leq[b][u]));
    DPartition {
        class_of,
        classes,
        class_leq,
        top_class,
        bottom_class,
    }
}

/// The commutative shadow `S/D` with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientLattice {
    pub lattice: SkewLattice,
    pub projection: Vec<usize>,
}

impl QuotientLattice {
    pub fn order(&self) -> usize {
        self.lattice.order()
    }
}

/// Builds `S/D`, checking that both operations are well defined on classes.
pub fn quotient(s: &SkewLattice) -> Result<QuotientLattice> {
    let d = green_d(s);
    let k = d.len();
    let rep = |u: usize| d.class(u)[0];
    let meet: Vec<Vec<usize>> = (0..k)
        .map(|u| (0..k).map(|v| d.class_of(s.meet(rep(u), rep(v)))).collect())
        .collect();
    let join: Vec<Vec<usize>> = (0..k)
        .map(|u| (0..k).map(|v| d.class_of(s.join(rep(u), rep(v)))).collect())
        .collect();
    for a in s.elements() {
        for b in s.elements() {
            let (u, v) = (d.class_of(a), d.class_of(b));
            if d.class_of(s.meet(a, b)) != meet[u][v] || d.class_of(s.join(a, b)) != join[u][v] {
                return Err(Error::inconsistent(format!(
                    "D is not a congruence at ({a}, {b})"
                )));
            }
        }
    }
    let labels = d
        .classes()
        .iter()
        .map(|c| {
            let names: Vec<String> = c.iter().map(|&x| s.label(x)).collect();
            format!("[{}]", names.join(","))
        })
        .collect();
    let raw = FiniteSkewLattice::from_tables(meet, join)?
        .with_zero(s.zero().map(|z| d.class_of(z)))?
        .with_labels(Some(labels))?;
    let lattice = raw.validate()?;
    if !lattice.is_commutative() {
        return Err(Error::inconsistent("quotient by D is not commutative"));
    }
    Ok(QuotientLattice {
        lattice,
        projection: d.class_of,
    })
}

/// A subalgebra together with the ids its elements had in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub lattice: SkewLattice,
    /// `members[i]` is the parent id of element `i`; sorted ascending.
    pub members: Vec<Id>,
}

/// Restricts `s` to `members`, which must be closed under both operations.
pub fn subalgebra(s: &SkewLattice, members: &[Id]) -> Result<Subalgebra> {
    let mut members = members.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    for &m in &members {
        s.check_id(m)?;
    }
    let mut index = vec![usize::MAX; s.order()];
    for (i, &m) in members.iter().enumerate() {
        index[m] = i;
    }
    let k = members.len();
    let mut meet = vec![vec![0; k]; k];
    let mut join = vec![vec![0; k]; k];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            let (m, jn) = (s.meet(a, b), s.join(a, b));
            if index[m] == usize::MAX || index[jn] == usize::MAX {
                return Err(Error::inconsistent(format!(
                    "subset not closed under the operations at ({a}, {b})"
                )));
            }
            meet[i][j] = index[m];
            join[i][j] = index[jn];
        }
    }
    let zero = s
        .zero()
        .and_then(|z| (index[z] != usize::MAX).then_some(index[z]));
    let labels = s
        .labels()
        .map(|l| members.iter().map(|&m| l[m].clone()).collect());
    let raw = FiniteSkewLattice::from_tables(meet, join)?
        .with_zero(zero)?
        .with_labels(labels)?;
    Ok(Subalgebra {
        lattice: SkewLattice::trusted(raw),
        members,
    })
}

/// `a↓ = { u : u ≤ a }` as a subalgebra.
pub fn down_set(s: &SkewLattice, a: Id) -> Result<Subalgebra> {
    s.check_id(a)?;
    let members: Vec<Id> = s.elements().filter(|&u| s.leq(u, a)).collect();
    subalgebra(s, &members)
}

/// The unique `d ≤ a` lying in class `u`, for `u ≤ [a]`.
pub fn restriction(s: &SkewLattice, d: &DPartition, a: Id, u: usize) -> Result<Id> {
    s.check_id(a)?;
    if u >= d.len() {
        return Err(Error::precondition(format!("no D-class {u}")));
    }
    if !d.class_leq(u, d.class_of(a)) {
        return Err(Error::precondition(format!(
            "class {u} is not below the class of {a}"
        )));
    }
    let below: Vec<Id> = d
        .class(u)
        .iter()
        .copied()
        .filter(|&x| s.leq(x, a))
        .collect();
    match below.as_slice() {
        [x] => Ok(*x),
        [] => Err(Error::inconsistent(format!(
            "no element of class {u} below {a}; structure is not normal"
        ))),
        _ => Err(Error::inconsistent(format!(
            "several elements of class {u} below {a}; structure is not normal"
        ))),
    }
}

/// For all `a, b, u, v` with `[u] ≤ [a], [b] ≤ [v]`: `a ∧ v ∧ b = a ∧ b` and
/// `a ∨ u ∨ b = a ∨ b`.
pub fn check_lemma_reg(s: &SkewLattice, d: &DPartition) -> Certificate {
    let n = s.order();
    let le = |x: Id, y: Id| d.class_leq(d.class_of(x), d.class_of(y));
    for a in 0..n {
        for b in 0..n {
            for u in 0..n {
                if !(le(u, a) && le(u, b)) {
                    continue;
                }
                for v in 0..n {
                    if !(le(a, v) && le(b, v)) {
                        continue;
                    }
                    let args = [a, b, u, v];
                    for law in [Law::BridgeMeet, Law::BridgeJoin] {
                        if !law.holds(s, &args) {
                            return Certificate::fails(Witness::Violation(Violation {
                                law,
                                args: args.to_vec(),
                            }));
                        }
                    }
                }
            }
        }
    }
    Certificate::holds()
}

/// A map between the carriers of two skew lattices.
#[derive(Clone, Debug)]
pub struct Homomorphism<'a> {
    source: &'a SkewLattice,
    target: &'a SkewLattice,
    map: Vec<Id>,
}

impl<'a> Homomorphism<'a> {
    pub fn new(source: &'a SkewLattice, target: &'a SkewLattice, map: Vec<Id>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::precondition(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        for &t in &map {
            target.check_id(t)?;
        }
        Ok(Homomorphism {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &SkewLattice {
        self.source
    }

    pub fn target(&self) -> &SkewLattice {
        self.target
    }

    pub fn apply(&self, a: Id) -> Id {
        self.map[a]
    }
}

/// Checks `h(a ∧ b) = h(a) ∧ h(b)` and `h(a ∨ b) = h(a) ∨ h(b)` for all pairs.
pub fn is_homomorphism(h: &Homomorphism<'_>) -> Certificate {
    let (s, t) = (h.source, h.target);
    for a in s.elements() {
        for b in s.elements() {
            if h.apply(s.meet(a, b)) != t.meet(h.apply(a), h.apply(b)) {
                return Certificate::fails(Witness::Morphism {
                    op: Operation::Meet,
                    a,
                    b,
                });
            }
            if h.apply(s.join(a, b)) != t.join(h.apply(a), h.apply(b)) {
                return Certificate::fails(Witness::Morphism {
                    op: Operation::Join,
                    a,
                    b,
                });
            }
        }
    }
    Certificate::holds()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l2() -> SkewLattice {
        FiniteSkewLattice::from_fn(2, |a, _| a, |_, b| b)
            .unwrap()
            .validate()
            .unwrap()
    }

    fn chain(n: usize) -> SkewLattice {
        FiniteSkewLattice::from_fn(n, usize::min, usize::max)
            .unwrap()
            .with_zero(Some(0))
            .unwrap()
            .validate()
            .unwrap()
    }

    #[test]
    fn l2_has_one_class() {
        let d = green_d(&l2());
        assert_eq!(d.classes(), &[vec![0, 1]]);
        assert_eq!(d.top_class(), Some(0));
        assert_eq!(d.bottom_class(), Some(0));
    }

    #[test]
    fn chain_classes_are_singletons() {
        let d = green_d(&chain(3));
        assert_eq!(d.classes(), &[vec![0], vec![1], vec![2]]);
        assert!(d.class_leq(0, 2));
        assert!(!d.class_leq(2, 0));
        assert_eq!(d.top_class(), Some(2));
        assert_eq!(d.bottom_class(), Some(0));
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient(&l2()).unwrap().order(), 1);
        let q = quotient(&chain(3)).unwrap();
        assert_eq!(
            q.lattice.as_raw().meet_rows().collect::<Vec<_>>(),
            chain(3).meet_rows().collect::<Vec<_>>()
        );
        assert_eq!(q.lattice.zero(), Some(0));
    }

    #[test]
    fn down_sets() {
        let s = l2();
        assert_eq!(down_set(&s, 0).unwrap().members, vec![0]);
        let c = chain(3);
        let bottom = down_set(&c, 0).unwrap();
        assert_eq!(bottom.members, vec![0]);
        assert_eq!(bottom.lattice.zero(), Some(0));
        assert_eq!(down_set(&c, 2).unwrap().members, vec![0, 1, 2]);
    }

    #[test]
    fn restriction_basics() {
        let c = chain(3);
        let d = green_d(&c);
        assert_eq!(restriction(&c, &d, 2, d.class_of(2)).unwrap(), 2);
        assert_eq!(restriction(&c, &d, 2, d.class_of(0)).unwrap(), 0);
        assert!(matches!(
            restriction(&c, &d, 0, d.class_of(2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lemma_reg_on_small_cases() {
        let s = l2();
        assert!(check_lemma_reg(&s, &green_d(&s)).verdict);
        let c = chain(4);
        assert!(check_lemma_reg(&c, &green_d(&c)).verdict);
    }

    #[test]
    fn homomorphisms() {
        let s = l2();
        let id = Homomorphism::new(&s, &s, vec![0, 1]).unwrap();
        assert!(is_homomorphism(&id).verdict);
        let c2 = chain(2);
        let to_top = Homomorphism::new(&s, &c2, vec![1, 1]).unwrap();
        assert!(is_homomorphism(&to_top).verdict);
        // 0 ↦ 0, 1 ↦ 1 into the chain breaks 1 ∧ 0 = 1.
        let bad = Homomorphism::new(&s, &c2, vec![0, 1]).unwrap();
        let cert = is_homomorphism(&bad);
        assert_eq!(
            cert.witness,
            Witness::Morphism {
                op: Operation::Meet,
                a: 1,
                b: 0
            }
        );
        assert!(Homomorphism::new(&s, &c2, vec![0]).is_err());
        assert!(Homomorphism::new(&s, &c2, vec![0, 2]).is_err());
    }

    #[test]
    fn non_closed_subset_is_rejected() {
        let s = chain(3);
        // {0, 2} is closed; {1} alone is closed; a non-closed subset needs
        // a non-chain structure, so check the flat band {0,1} ∪ zero.
        assert!(subalgebra(&s, &[0, 2]).is_ok());
        let m3 = FiniteSkewLattice::from_fn(
            4,
            |a, b| {
                if a == b {
                    a
                } else if a == 3 {
                    b
                } else if b == 3 {
                    a
                } else {
                    0
                }
            },
            |a, b| {
                if a == b {
                    a
                } else if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    3
                }
            },
        )
        .unwrap()
        .validate()
        .unwrap();
        assert!(matches!(
            subalgebra(&m3, &[1, 2]),
            Err(Error::Inconsistent(_))
        ));
    }
}
