//! Equational laws over the two operations and the identity catalog.

use std::fmt;
use std::str::FromStr;

use crate::certificate::{Certificate, Violation};
use crate::error::Error;
use crate::structure::{FiniteSkewLattice, Id};

/// A single law, evaluated at a tuple of elements.
///
/// Variables are bound positionally: `args[0]` is `x` (or `a`), `args[1]`
/// is `y`, and so on, in the order they appear in [`Law::equation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    MeetIdempotent,
    JoinIdempotent,
    MeetAssociative,
    JoinAssociative,
    /// `x ∧ (x ∨ y) = x`
    MeetAbsorbsJoin,
    /// `(x ∨ y) ∧ y = y`
    MeetAbsorbsJoinRight,
    /// `x ∨ (x ∧ y) = x`
    JoinAbsorbsMeet,
    /// `(x ∧ y) ∨ y = y`
    JoinAbsorbsMeetRight,
    ZeroJoin,
    ZeroMeet,
    RegularMeet,
    RegularJoin,
    Normal,
    DistributiveMeet,
    DistributiveJoin,
    StrongDistributiveRight,
    StrongDistributiveLeft,
    LeftHandedMeet,
    LeftHandedJoin,
    RightHandedMeet,
    RightHandedJoin,
    MeetCommutative,
    JoinCommutative,
    Symmetric,
    /// `a ∧ v ∧ b = a ∧ b`; only asserted under the class conditions of the
    /// regularity lemma, see [`check_lemma_reg`](crate::check_lemma_reg).
    BridgeMeet,
    /// `a ∨ u ∨ b = a ∨ b`, under the same conditions.
    BridgeJoin,
}

pub(crate) const AXIOMS: &[Law] = &[
    Law::MeetIdempotent,
    Law::JoinIdempotent,
    Law::MeetAssociative,
    Law::JoinAssociative,
    Law::MeetAbsorbsJoin,
    Law::MeetAbsorbsJoinRight,
    Law::JoinAbsorbsMeet,
    Law::JoinAbsorbsMeetRight,
];

pub(crate) const ZERO_LAWS: &[Law] = &[Law::ZeroJoin, Law::ZeroMeet];

impl Law {
    pub fn arity(self) -> usize {
        use Law::*;
        match self {
            MeetIdempotent | JoinIdempotent | ZeroJoin | ZeroMeet => 1,
            MeetAbsorbsJoin | MeetAbsorbsJoinRight | JoinAbsorbsMeet | JoinAbsorbsMeetRight
            | LeftHandedMeet | LeftHandedJoin | RightHandedMeet | RightHandedJoin
            | MeetCommutative | JoinCommutative | Symmetric => 2,
            MeetAssociative
            | JoinAssociative
            | RegularMeet
            | RegularJoin
            | Normal
            | DistributiveMeet
            | DistributiveJoin
            | StrongDistributiveRight
            | StrongDistributiveLeft => 3,
            BridgeMeet | BridgeJoin => 4,
        }
    }

    pub fn equation(self) -> &'static str {
        use Law::*;
        match self {
            MeetIdempotent => "x ∧ x = x",
            JoinIdempotent => "x ∨ x = x",
            MeetAssociative => "(x ∧ y) ∧ z = x ∧ (y ∧ z)",
            JoinAssociative => "(x ∨ y) ∨ z = x ∨ (y ∨ z)",
            MeetAbsorbsJoin => "x ∧ (x ∨ y) = x",
            MeetAbsorbsJoinRight => "(x ∨ y) ∧ y = y",
            JoinAbsorbsMeet => "x ∨ (x ∧ y) = x",
            JoinAbsorbsMeetRight => "(x ∧ y) ∨ y = y",
            ZeroJoin => "x ∨ 0 = x = 0 ∨ x",
            ZeroMeet => "x ∧ 0 = 0 = 0 ∧ x",
            RegularMeet => "a ∧ x ∧ a ∧ y ∧ a = a ∧ x ∧ y ∧ a",
            RegularJoin => "a ∨ x ∨ a ∨ y ∨ a = a ∨ x ∨ y ∨ a",
            Normal => "x ∧ y ∧ z ∧ x = x ∧ z ∧ y ∧ x",
            DistributiveMeet => "x ∧ (y ∨ z) ∧ x = (x ∧ y ∧ x) ∨ (x ∧ z ∧ x)",
            DistributiveJoin => "x ∨ (y ∧ z) ∨ x = (x ∨ y ∨ x) ∧ (x ∨ z ∨ x)",
            StrongDistributiveRight => "(x ∨ y) ∧ z = (x ∧ z) ∨ (y ∧ z)",
            StrongDistributiveLeft => "x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)",
            LeftHandedMeet => "x ∧ y ∧ x = x ∧ y",
            LeftHandedJoin => "x ∨ y ∨ x = y ∨ x",
            RightHandedMeet => "x ∧ y ∧ x = y ∧ x",
            RightHandedJoin => "x ∨ y ∨ x = x ∨ y",
            MeetCommutative => "x ∧ y = y ∧ x",
            JoinCommutative => "x ∨ y = y ∨ x",
            Symmetric => "x ∨ y = y ∨ x iff x ∧ y = y ∧ x",
            BridgeMeet => "a ∧ v ∧ b = a ∧ b",
            BridgeJoin => "a ∨ u ∨ b = a ∨ b",
        }
    }

    /// Evaluates the law at `args`. Zero laws hold vacuously when the
    /// structure has no zero.
    pub fn holds(self, s: &FiniteSkewLattice, args: &[Id]) -> bool {
        use Law::*;
        let m = |a, b| s.meet(a, b);
        let j = |a, b| s.join(a, b);
        match (self, args) {
            (MeetIdempotent, &[x]) => m(x, x) == x,
            (JoinIdempotent, &[x]) => j(x, x) == x,
            (ZeroJoin, &[x]) => s.zero().is_none_or(|z| j(x, z) == x && j(z, x) == x),
            (ZeroMeet, &[x]) => s.zero().is_none_or(|z| m(x, z) == z && m(z, x) == z),
            (MeetAssociative, &[x, y, z]) => m(m(x, y), z) == m(x, m(y, z)),
            (JoinAssociative, &[x, y, z]) => j(j(x, y), z) == j(x, j(y, z)),
            (MeetAbsorbsJoin, &[x, y]) => m(x, j(x, y)) == x,
            (MeetAbsorbsJoinRight, &[x, y]) => m(j(x, y), y) == y,
            (JoinAbsorbsMeet, &[x, y]) => j(x, m(x, y)) == x,
            (JoinAbsorbsMeetRight, &[x, y]) => j(m(x, y), y) == y,
            (RegularMeet, &[a, x, y]) => s.meet_all(&[a, x, a, y, a]) == s.meet_all(&[a, x, y, a]),
            (RegularJoin, &[a, x, y]) => s.join_all(&[a, x, a, y, a]) == s.join_all(&[a, x, y, a]),
            (Normal, &[x, y, z]) => s.meet_all(&[x, y, z, x]) == s.meet_all(&[x, z, y, x]),
            (DistributiveMeet, &[x, y, z]) => {
                s.meet_all(&[x, j(y, z), x]) == j(s.meet_all(&[x, y, x]), s.meet_all(&[x, z, x]))
            }
            (DistributiveJoin, &[x, y, z]) => {
                s.join_all(&[x, m(y, z), x]) == m(s.join_all(&[x, y, x]), s.join_all(&[x, z, x]))
            }
            (StrongDistributiveRight, &[x, y, z]) => m(j(x, y), z) == j(m(x, z), m(y, z)),
            (StrongDistributiveLeft, &[x, y, z]) => m(x, j(y, z)) == j(m(x, y), m(x, z)),
            (LeftHandedMeet, &[x, y]) => s.meet_all(&[x, y, x]) == m(x, y),
            (LeftHandedJoin, &[x, y]) => s.join_all(&[x, y, x]) == j(y, x),
            (RightHandedMeet, &[x, y]) => s.meet_all(&[x, y, x]) == m(y, x),
            (RightHandedJoin, &[x, y]) => s.join_all(&[x, y, x]) == j(x, y),
            (MeetCommutative, &[x, y]) => m(x, y) == m(y, x),
            (JoinCommutative, &[x, y]) => j(x, y) == j(y, x),
            (Symmetric, &[x, y]) => (m(x, y) == m(y, x)) == (j(x, y) == j(y, x)),
            (BridgeMeet, &[a, b, _u, v]) => s.meet_all(&[a, v, b]) == m(a, b),
            (BridgeJoin, &[a, b, u, _v]) => s.join_all(&[a, u, b]) == j(a, b),
            _ => panic!("{self:?} applied to {} arguments", args.len()),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.equation())
    }
}

/// Lexicographic odometer over `0..n` tuples of length `arity`.
pub(crate) fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<Id>> {
    let mut next = Some(vec![0; arity]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = arity;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < n {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}

/// First violation in law order, then lexicographic tuple order.
pub(crate) fn first_violation(s: &FiniteSkewLattice, laws: &[Law]) -> Option<Violation> {
    laws.iter().find_map(|&law| {
        tuples(s.order(), law.arity())
            .find(|t| !law.holds(s, t))
            .map(|args| Violation { law, args })
    })
}

/// The named identities of skew lattice theory. Each name may stand for a
/// dual pair of laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Regular,
    Normal,
    Distributive,
    StronglyDistributive,
    LeftHanded,
    RightHanded,
    Commutative,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Regular,
        Identity::Normal,
        Identity::Distributive,
        Identity::StronglyDistributive,
        Identity::LeftHanded,
        Identity::RightHanded,
        Identity::Commutative,
    ];

    pub fn laws(self) -> &'static [Law] {
        match self {
            Identity::Regular => &[Law::RegularMeet, Law::RegularJoin],
            Identity::Normal => &[Law::Normal],
            Identity::Distributive => &[Law::DistributiveMeet, Law::DistributiveJoin],
            Identity::StronglyDistributive => {
                &[Law::StrongDistributiveRight, Law::StrongDistributiveLeft]
            }
            Identity::LeftHanded => &[Law::LeftHandedMeet, Law::LeftHandedJoin],
            Identity::RightHanded => &[Law::RightHandedMeet, Law::RightHandedJoin],
            Identity::Commutative => &[Law::MeetCommutative, Law::JoinCommutative],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::Regular => "regular",
            Identity::Normal => "normal",
            Identity::Distributive => "distributive",
            Identity::StronglyDistributive => "strongly_distributive",
            Identity::LeftHanded => "left_handed",
            Identity::RightHanded => "right_handed",
            Identity::Commutative => "commutative",
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == norm)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks that the named identity holds for every tuple.
pub fn check_identity(s: &FiniteSkewLattice, identity: Identity) -> Certificate {
    Certificate::from_violation(first_violation(s, identity.laws()))
}

/// Like [`check_identity`], with the identity given by name.
pub fn check_identity_named(s: &FiniteSkewLattice, name: &str) -> Result<Certificate, Error> {
    Ok(check_identity(s, name.parse()?))
}

/// `x ∨ y = y ∨ x` iff `x ∧ y = y ∧ x`, for all pairs.
pub fn check_symmetric(s: &FiniteSkewLattice) -> Certificate {
    Certificate::from_violation(first_violation(s, &[Law::Symmetric]))
}
