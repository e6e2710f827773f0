//! Finite skew lattices given by operation tables.
//!
//! A [`FiniteSkewLattice`] is only a pair of well-formed tables; nothing is
//! assumed about the operations. Calling [`FiniteSkewLattice::validate`]
//! checks idempotency, associativity and the four absorption laws and, on
//! success, yields a [`SkewLattice`], which is what every downstream
//! operation takes.

use std::fmt;
use std::ops::Deref;

use crate::certificate::{Certificate, Witness};
use crate::error::{Error, Result};
use crate::laws::{first_violation, Law, AXIOMS, ZERO_LAWS};

/// Element identifier: a position in `0..order`.
pub type Id = usize;

/// A carrier `0..n` with two total `n x n` operation tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSkewLattice {
    order: usize,
    meet: Vec<Id>,
    join: Vec<Id>,
    zero: Option<Id>,
    labels: Option<Vec<String>>,
}

impl FiniteSkewLattice {
    /// Builds a structure from row-major tables (row = left operand).
    pub fn from_tables(meet: Vec<Vec<Id>>, join: Vec<Vec<Id>>) -> Result<Self> {
        let order = meet.len();
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        let meet = flatten("meet", order, meet)?;
        let join = flatten("join", order, join)?;
        Ok(FiniteSkewLattice {
            order,
            meet,
            join,
            zero: None,
            labels: None,
        })
    }

    /// Builds a structure by evaluating two closures on every pair.
    pub fn from_fn(
        order: usize,
        meet: impl Fn(Id, Id) -> Id,
        join: impl Fn(Id, Id) -> Id,
    ) -> Result<Self> {
        let table = |f: &dyn Fn(Id, Id) -> Id| {
            (0..order)
                .map(|a| (0..order).map(|b| f(a, b)).collect())
                .collect::<Vec<Vec<Id>>>()
        };
        Self::from_tables(table(&meet), table(&join))
    }

    pub(crate) fn from_flat(order: usize, meet: Vec<Id>, join: Vec<Id>) -> Self {
        debug_assert_eq!(meet.len(), order * order);
        debug_assert_eq!(join.len(), order * order);
        FiniteSkewLattice {
            order,
            meet,
            join,
            zero: None,
            labels: None,
        }
    }

    /// Marks `zero` as the distinguished bottom element. Its laws are
    /// checked by [`validate_skew_axioms`](Self::validate_skew_axioms).
    pub fn with_zero(mut self, zero: Option<Id>) -> Result<Self> {
        if let Some(z) = zero {
            self.check_id(z)?;
        }
        self.zero = zero;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != self.order {
                return Err(Error::LabelCount {
                    order: self.order,
                    got: l.len(),
                });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Sets `zero` to the element absorbing everything under meet, if any.
    pub fn with_detected_zero(mut self) -> Self {
        self.zero = self.detect_zero();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn meet(&self, a: Id, b: Id) -> Id {
        self.meet[a * self.order + b]
    }

    #[inline]
    pub fn join(&self, a: Id, b: Id) -> Id {
        self.join[a * self.order + b]
    }

    /// `x1 ∧ x2 ∧ ... ∧ xk`, evaluated left to right.
    pub fn meet_all(&self, xs: &[Id]) -> Id {
        xs.iter()
            .copied()
            .reduce(|acc, x| self.meet(acc, x))
            .expect("meet of an empty word")
    }

    /// `x1 ∨ x2 ∨ ... ∨ xk`, evaluated left to right.
    pub fn join_all(&self, xs: &[Id]) -> Id {
        xs.iter()
            .copied()
            .reduce(|acc, x| self.join(acc, x))
            .expect("join of an empty word")
    }

    pub fn zero(&self) -> Option<Id> {
        self.zero
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `a`: its label if present, else its id.
    pub fn label(&self, a: Id) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn meet_rows(&self) -> impl Iterator<Item = &[Id]> {
        self.meet.chunks(self.order)
    }

    pub fn join_rows(&self) -> impl Iterator<Item = &[Id]> {
        self.join.chunks(self.order)
    }

    pub(crate) fn meet_flat(&self) -> &[Id] {
        &self.meet
    }

    pub(crate) fn join_flat(&self) -> &[Id] {
        &self.join
    }

    pub fn check_id(&self, id: Id) -> Result<()> {
        if id < self.order {
            Ok(())
        } else {
            Err(Error::IdOutOfRange {
                id,
                order: self.order,
            })
        }
    }

    /// The element `z` with `z ∧ x = z = x ∧ z` for all `x`, if one exists.
    pub fn detect_zero(&self) -> Option<Id> {
        (0..self.order)
            .find(|&z| (0..self.order).all(|x| self.meet(z, x) == z && self.meet(x, z) == z))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| {
            (a + 1..self.order)
                .all(|b| self.meet(a, b) == self.meet(b, a) && self.join(a, b) == self.join(b, a))
        })
    }

    /// Checks idempotency, associativity, the absorption laws and, when a
    /// zero is set, the zero laws. The witness on failure is the first
    /// violated law, with the first violating tuple in lexicographic order.
    pub fn validate_skew_axioms(&self) -> Certificate {
        let found = first_violation(self, AXIOMS).or_else(|| match self.zero {
            Some(_) => first_violation(self, ZERO_LAWS),
            None => None,
        });
        Certificate::from_violation(found)
    }

    pub fn validate(self) -> Result<SkewLattice> {
        match self.validate_skew_axioms().witness {
            Witness::Violation(v) => Err(Error::NotASkewLattice(v)),
            _ => Ok(SkewLattice(self)),
        }
    }

    /// Relabels the carrier: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[Id]) -> FiniteSkewLattice {
        let n = self.order;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[perm[a] * n + perm[b]] = perm[self.meet(a, b)];
                join[perm[a] * n + perm[b]] = perm[self.join(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (i, s) in l.iter().enumerate() {
                out[perm[i]] = s.clone();
            }
            out
        });
        FiniteSkewLattice {
            order: n,
            meet,
            join,
            zero: self.zero.map(|z| perm[z]),
            labels,
        }
    }
}

fn flatten(table: &'static str, order: usize, rows: Vec<Vec<Id>>) -> Result<Vec<Id>> {
    if rows.len() != order {
        return Err(Error::RowCount {
            table,
            order,
            rows: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (row, entries) in rows.into_iter().enumerate() {
        if entries.len() != order {
            return Err(Error::NotSquare {
                table,
                order,
                row,
                len: entries.len(),
            });
        }
        for (col, value) in entries.into_iter().enumerate() {
            if value >= order {
                return Err(Error::EntryOutOfRange {
                    table,
                    row,
                    col,
                    value,
                    order,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

/// A [`FiniteSkewLattice`] that passed [`FiniteSkewLattice::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewLattice(FiniteSkewLattice);

impl Deref for SkewLattice {
    type Target = FiniteSkewLattice;

    fn deref(&self) -> &FiniteSkewLattice {
        &self.0
    }
}

impl SkewLattice {
    pub fn into_inner(self) -> FiniteSkewLattice {
        self.0
    }

    pub fn as_raw(&self) -> &FiniteSkewLattice {
        &self.0
    }

    /// Natural partial order: `a ≤ b` iff `a ∧ b = b ∧ a = a`.
    #[inline]
    pub fn leq(&self, a: Id, b: Id) -> bool {
        self.meet(a, b) == a && self.meet(b, a) == a
    }

    /// The join form of the natural order: `a ∨ b = b = b ∨ a`.
    #[inline]
    pub fn leq_by_join(&self, a: Id, b: Id) -> bool {
        self.join(a, b) == b && self.join(b, a) == b
    }

    /// `a` and `b` commute under both operations.
    #[inline]
    pub fn commutes(&self, a: Id, b: Id) -> bool {
        self.meet(a, b) == self.meet(b, a) && self.join(a, b) == self.join(b, a)
    }

    /// Green's relation D in its meet form.
    #[inline]
    pub fn d_related(&self, a: Id, b: Id) -> bool {
        self.meet_all(&[a, b, a]) == a && self.meet_all(&[b, a, b]) == b
    }

    /// Green's relation D in its join form.
    #[inline]
    pub fn d_related_by_join(&self, a: Id, b: Id) -> bool {
        self.join_all(&[a, b, a]) == a && self.join_all(&[b, a, b]) == b
    }

    pub fn elements(&self) -> std::ops::Range<Id> {
        0..self.order()
    }

    /// Wraps a structure assumed valid; used where validity follows from
    /// construction and is re-checked in tests.
    pub(crate) fn trusted(raw: FiniteSkewLattice) -> Self {
        debug_assert!(raw.validate_skew_axioms().verdict);
        SkewLattice(raw)
    }
}

/// Natural partial order with range checking.
pub fn natural_leq(s: &SkewLattice, a: Id, b: Id) -> Result<bool> {
    s.check_id(a)?;
    s.check_id(b)?;
    Ok(s.leq(a, b))
}

impl fmt::Display for FiniteSkewLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::emit(self))
    }
}

/// Asserts the law holds at every tuple; exposed for callers that need a
/// single-law scan.
pub fn check_law(s: &FiniteSkewLattice, law: Law) -> Certificate {
    Certificate::from_violation(first_violation(s, &[law]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_right() -> FiniteSkewLattice {
        FiniteSkewLattice::from_fn(2, |a, _| a, |_, b| b).unwrap()
    }

    #[test]
    fn l2_is_a_skew_lattice() {
        assert!(left_right().validate_skew_axioms().verdict);
    }

    #[test]
    fn one_element_is_a_skew_lattice() {
        let s = FiniteSkewLattice::from_tables(vec![vec![0]], vec![vec![0]]).unwrap();
        assert!(s.validate_skew_axioms().verdict);
    }

    #[test]
    fn left_projection_twice_fails_absorption_at_a_b() {
        let s = FiniteSkewLattice::from_fn(2, |a, _| a, |a, _| a).unwrap();
        let cert = s.validate_skew_axioms();
        assert!(!cert.verdict);
        let Witness::Violation(v) = cert.witness else {
            panic!("expected a violation")
        };
        assert_eq!(v.law, Law::MeetAbsorbsJoinRight);
        assert_eq!(v.args, vec![0, 1]);
        assert!(v.is_violated_in(&s));
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        let e =
            FiniteSkewLattice::from_tables(vec![vec![0, 1], vec![0]], vec![vec![0, 1], vec![0, 1]]);
        assert!(matches!(e, Err(Error::NotSquare { row: 1, .. })));
        let e = FiniteSkewLattice::from_tables(
            vec![vec![0, 2], vec![0, 1]],
            vec![vec![0, 1], vec![0, 1]],
        );
        assert!(matches!(e, Err(Error::EntryOutOfRange { value: 2, .. })));
        let e = FiniteSkewLattice::from_tables(vec![], vec![]);
        assert!(matches!(e, Err(Error::EmptyCarrier)));
        let e = FiniteSkewLattice::from_tables(vec![vec![0, 1], vec![0, 1]], vec![vec![0, 1]]);
        assert!(matches!(e, Err(Error::RowCount { .. })));
    }

    #[test]
    fn bogus_zero_is_rejected_by_validation() {
        let chain = FiniteSkewLattice::from_fn(2, usize::min, usize::max).unwrap();
        assert!(
            chain
                .clone()
                .with_zero(Some(0))
                .unwrap()
                .validate_skew_axioms()
                .verdict
        );
        let cert = chain.with_zero(Some(1)).unwrap().validate_skew_axioms();
        assert!(!cert.verdict);
    }

    #[test]
    fn natural_leq_range_and_values() {
        let s = left_right().validate().unwrap();
        assert!(natural_leq(&s, 0, 0).unwrap());
        assert!(!natural_leq(&s, 0, 1).unwrap());
        assert!(matches!(
            natural_leq(&s, 0, 2),
            Err(Error::IdOutOfRange { .. })
        ));
    }

    #[test]
    fn permuting_preserves_validity() {
        let chain = FiniteSkewLattice::from_fn(3, usize::min, usize::max).unwrap();
        let p = chain.permuted(&[2, 0, 1]);
        assert!(p.validate_skew_axioms().verdict);
        assert_eq!(p.meet(2, 0), 2);
    }
}
