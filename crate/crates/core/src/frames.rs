//! Frames and noncommutative frames.
//!
//! A frame is a lattice with all joins in which `x ∧ ⋁ yᵢ = ⋁ (x ∧ yᵢ)`.
//! A noncommutative frame is a join complete, strongly distributive skew
//! lattice with zero in which both
//!
//! ```text
//! (⋁ xᵢ) ∧ y = ⋁ (xᵢ ∧ y)     x ∧ (⋁ yᵢ) = ⋁ (x ∧ yᵢ)
//! ```
//!
//! hold for every commuting family. For a join complete, strongly
//! distributive `S` with zero, `S` is a noncommutative frame exactly when
//! `S/D` is a frame; [`check_theorem_ncframes`] tests that biconditional on
//! a given finite structure.

use crate::certificate::{Certificate, DistributiveSide, Witness};
use crate::completeness::{check_jc, enumerate_commuting_subsets, sup_natural};
use crate::error::{Error, Result};
use crate::green::{down_set, green_d, quotient};
use crate::laws::{check_identity, Identity};
use crate::structure::{Id, SkewLattice};

/// Orders below this are checked against every subset.
pub const EXHAUSTIVE_FRAME_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameVerdict {
    pub is_frame: bool,
    /// `(x, {yᵢ})` with `x ∧ ⋁ yᵢ ≠ ⋁ (x ∧ yᵢ)`, or with a join missing.
    pub failing_instance: Option<(Id, Vec<Id>)>,
}

impl FrameVerdict {
    fn ok() -> Self {
        FrameVerdict {
            is_frame: true,
            failing_instance: None,
        }
    }

    fn fail(instance: Option<(Id, Vec<Id>)>) -> Self {
        FrameVerdict {
            is_frame: false,
            failing_instance: instance,
        }
    }
}

fn require_commutative(l: &SkewLattice) -> Result<()> {
    if l.is_commutative() {
        Ok(())
    } else {
        Err(Error::precondition(
            "frame checks need a commutative lattice",
        ))
    }
}

fn has_bounds(l: &SkewLattice) -> bool {
    let bottom = l.elements().any(|b| l.elements().all(|x| l.leq(b, x)));
    let top = l.elements().any(|t| l.elements().all(|x| l.leq(x, t)));
    bottom && top
}

/// Frame check: exhaustive below [`EXHAUSTIVE_FRAME_LIMIT`], pairwise
/// distributivity above.
pub fn is_frame(l: &SkewLattice) -> Result<FrameVerdict> {
    if l.order() < EXHAUSTIVE_FRAME_LIMIT {
        is_frame_exhaustive(l)
    } else {
        is_frame_pairwise(l)
    }
}

/// Checks `x ∧ ⋁ Y = ⋁ { x ∧ y : y ∈ Y }` for every `x` and every nonempty
/// `Y`, with joins taken as least upper bounds in the natural order.
pub fn is_frame_exhaustive(l: &SkewLattice) -> Result<FrameVerdict> {
    require_commutative(l)?;
    if !has_bounds(l) {
        return Ok(FrameVerdict::fail(None));
    }
    let n = l.order();
    assert!(
        n < usize::BITS as usize,
        "order {n} too large for subset masks"
    );
    for mask in 1usize..(1 << n) {
        let ys: Vec<Id> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        for x in 0..n {
            let Some(sup) = sup_natural(l, &ys)? else {
                return Ok(FrameVerdict::fail(Some((x, ys))));
            };
            let images: Vec<Id> = ys.iter().map(|&y| l.meet(x, y)).collect();
            if sup_natural(l, &images)? != Some(l.meet(x, sup)) {
                return Ok(FrameVerdict::fail(Some((x, ys))));
            }
        }
    }
    Ok(FrameVerdict::ok())
}

/// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` and the presence of a top and
/// a bottom; for finite lattices this is equivalent to the subset check.
pub fn is_frame_pairwise(l: &SkewLattice) -> Result<FrameVerdict> {
    require_commutative(l)?;
    if !has_bounds(l) {
        return Ok(FrameVerdict::fail(None));
    }
    for x in l.elements() {
        for y in l.elements() {
            for z in y + 1..l.order() {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    return Ok(FrameVerdict::fail(Some((x, vec![y, z]))));
                }
            }
        }
    }
    Ok(FrameVerdict::ok())
}

/// Noncommutative frame check. Join completeness is verified over every
/// commuting subset rather than assumed from finiteness.
pub fn is_ncframe(s: &SkewLattice) -> Certificate {
    let sd = check_identity(s, Identity::StronglyDistributive);
    if !sd.verdict {
        return sd;
    }
    if s.zero().or_else(|| s.detect_zero()).is_none() {
        return Certificate::fails(Witness::Reason("no zero".into()));
    }
    let sup = |xs: &[Id]| sup_natural(s, xs).expect("nonempty in-range subset");
    for c in enumerate_commuting_subsets(s, None) {
        let members = c.members();
        let Some(join) = sup(members) else {
            return Certificate::fails(Witness::Subset(members.to_vec()));
        };
        for x in s.elements() {
            let right: Vec<Id> = members.iter().map(|&m| s.meet(m, x)).collect();
            if sup(&right) != Some(s.meet(join, x)) {
                return Certificate::fails(Witness::Distributivity {
                    side: DistributiveSide::JoinThenMeet,
                    element: x,
                    subset: members.to_vec(),
                });
            }
            let left: Vec<Id> = members.iter().map(|&m| s.meet(x, m)).collect();
            if sup(&left) != Some(s.meet(x, join)) {
                return Certificate::fails(Witness::Distributivity {
                    side: DistributiveSide::MeetThenJoin,
                    element: x,
                    subset: members.to_vec(),
                });
            }
        }
    }
    Certificate::holds()
}

/// For a join complete, strongly distributive `s` with zero: `s` is a
/// noncommutative frame iff `s/D` is a frame. A `false` verdict would be a
/// counterexample; the witness records both sides.
pub fn check_theorem_ncframes(s: &SkewLattice) -> Result<Certificate> {
    if !check_identity(s, Identity::StronglyDistributive).verdict {
        return Err(Error::precondition(
            "structure is not strongly distributive",
        ));
    }
    if s.zero().or_else(|| s.detect_zero()).is_none() {
        return Err(Error::precondition("structure has no zero"));
    }
    if !check_jc(s)?.verdict {
        return Err(Error::precondition("structure is not join complete"));
    }
    let nc = is_ncframe(s).verdict;
    let shadow = is_frame(&quotient(s)?.lattice)?.is_frame;
    Ok(Certificate::new(
        nc == shadow,
        Witness::Sides(vec![
            ("noncommutative_frame".into(), nc),
            ("shadow_is_frame".into(), shadow),
        ]),
    ))
}

/// For every `t` in the top D-class, the projection maps `t↓` bijectively
/// onto `S/D` and preserves both operations.
pub fn check_top_down_sets_copy_shadow(s: &SkewLattice) -> Result<Certificate> {
    let d = green_d(s);
    let top = d
        .top_class()
        .ok_or_else(|| Error::precondition("no top D-class"))?;
    let q = quotient(s)?;
    for &t in d.class(top) {
        let members = down_set(s, t)?.members;
        let mut image: Vec<usize> = members.iter().map(|&m| q.projection[m]).collect();
        image.sort_unstable();
        image.dedup();
        let bijective = members.len() == q.order() && image.len() == q.order();
        let preserves = members.iter().all(|&a| {
            members.iter().all(|&b| {
                q.projection[s.meet(a, b)] == q.lattice.meet(q.projection[a], q.projection[b])
                    && q.projection[s.join(a, b)]
                        == q.lattice.join(q.projection[a], q.projection[b])
            })
        });
        if !(bijective && preserves) {
            return Ok(Certificate::fails(Witness::Element(t)));
        }
    }
    Ok(Certificate::holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_pfn_algebra, om_window};
    use crate::structure::FiniteSkewLattice;

    fn boolean4() -> SkewLattice {
        FiniteSkewLattice::from_fn(4, |a, b| a & b, |a, b| a | b)
            .unwrap()
            .validate()
            .unwrap()
    }

    // 0 < a, b, c < 1 with ids 0, 1, 2, 3, 4
    fn m3() -> SkewLattice {
        FiniteSkewLattice::from_fn(
            5,
            |a, b| match (a, b) {
                _ if a == b => a,
                (4, x) | (x, 4) => x,
                _ => 0,
            },
            |a, b| match (a, b) {
                _ if a == b => a,
                (0, x) | (x, 0) => x,
                _ => 4,
            },
        )
        .unwrap()
        .validate()
        .unwrap()
    }

    #[test]
    fn boolean_and_chain_are_frames() {
        assert!(is_frame(&boolean4()).unwrap().is_frame);
        let chain = FiniteSkewLattice::from_fn(3, usize::min, usize::max)
            .unwrap()
            .validate()
            .unwrap();
        assert!(is_frame(&chain).unwrap().is_frame);
    }

    #[test]
    fn diamond_is_not_a_frame() {
        let v = is_frame(&m3()).unwrap();
        assert!(!v.is_frame);
        let (x, ys) = v.failing_instance.unwrap();
        let l = m3();
        let sup = sup_natural(&l, &ys).unwrap().unwrap();
        let images: Vec<Id> = ys.iter().map(|&y| l.meet(x, y)).collect();
        assert_ne!(sup_natural(&l, &images).unwrap(), Some(l.meet(x, sup)));
        assert!(!is_frame_pairwise(&m3()).unwrap().is_frame);
    }

    #[test]
    fn non_commutative_input_is_rejected() {
        let l2 = FiniteSkewLattice::from_fn(2, |a, _| a, |_, b| b)
            .unwrap()
            .validate()
            .unwrap();
        assert!(is_frame(&l2).is_err());
        let c = is_ncframe(&l2);
        assert_eq!(c.witness, Witness::Reason("no zero".into()));
        assert!(check_theorem_ncframes(&l2).is_err());
    }

    #[test]
    fn ncframes() {
        assert!(is_ncframe(&build_pfn_algebra(1, 2).unwrap()).verdict);
        assert!(is_ncframe(&om_window(3)).verdict);
        let p = build_pfn_algebra(2, 2).unwrap();
        let c = check_theorem_ncframes(&p).unwrap();
        assert!(c.verdict);
        assert_eq!(
            c.witness,
            Witness::Sides(vec![
                ("noncommutative_frame".into(), true),
                ("shadow_is_frame".into(), true)
            ])
        );
        assert!(check_theorem_ncframes(&om_window(4)).unwrap().verdict);
    }

    #[test]
    fn top_down_sets_are_copies_of_the_shadow() {
        assert!(
            check_top_down_sets_copy_shadow(&build_pfn_algebra(2, 2).unwrap())
                .unwrap()
                .verdict
        );
        assert!(
            check_top_down_sets_copy_shadow(&om_window(3))
                .unwrap()
                .verdict
        );
    }
}
