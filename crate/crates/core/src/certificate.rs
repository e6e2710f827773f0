//! Verdicts with machine-checkable witnesses.

use std::fmt;

use crate::laws::Law;
use crate::structure::{FiniteSkewLattice, Id};

/// A law together with the tuple at which it fails.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub law: Law,
    pub args: Vec<Id>,
}

impl Violation {
    /// Re-evaluates the law at the recorded tuple.
    pub fn is_violated_in(&self, s: &FiniteSkewLattice) -> bool {
        !self.law.holds(s, &self.args)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.law)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Which operation a homomorphism failed to preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    Meet,
    Join,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Meet => "meet",
            Operation::Join => "join",
        })
    }
}

/// One named atomic check of a case analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCheck {
    pub label: String,
    pub holds: bool,
}

/// Finite case analysis backing a statement about an infinite model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseAnalysis {
    pub checks: Vec<CaseCheck>,
}

impl CaseAnalysis {
    pub fn record(&mut self, label: impl Into<String>, holds: bool) {
        self.checks.push(CaseCheck {
            label: label.into(),
            holds,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&CaseCheck> {
        self.checks.iter().find(|c| !c.holds)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// Which infinite distributive law failed in a noncommutative frame check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistributiveSide {
    /// `(⋁ xᵢ) ∧ y = ⋁ (xᵢ ∧ y)`
    JoinThenMeet,
    /// `x ∧ (⋁ yᵢ) = ⋁ (x ∧ yᵢ)`
    MeetThenJoin,
}

/// The evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// A law and the tuple at which it fails.
    Violation(Violation),
    /// A homomorphism failing to preserve `op` at `(a, b)`.
    Morphism {
        op: Operation,
        a: Id,
        b: Id,
    },
    /// A supremum, infimum or other distinguished element.
    Element(Id),
    /// A subset of elements: a failing commuting subset, say.
    Subset(Vec<Id>),
    /// A lattice section.
    Section(Vec<Id>),
    /// Both sides of a biconditional or implication, in order.
    Sides(Vec<(String, bool)>),
    /// An infinite distributive law failing for `x` and a commuting subset.
    Distributivity {
        side: DistributiveSide,
        element: Id,
        subset: Vec<Id>,
    },
    Cases(CaseAnalysis),
    Reason(String),
}

/// A verdict and its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: bool,
    pub witness: Witness,
}

impl Certificate {
    pub fn holds() -> Self {
        Certificate {
            verdict: true,
            witness: Witness::None,
        }
    }

    pub fn new(verdict: bool, witness: Witness) -> Self {
        Certificate { verdict, witness }
    }

    pub fn fails(witness: Witness) -> Self {
        Certificate {
            verdict: false,
            witness,
        }
    }

    pub(crate) fn from_violation(v: Option<Violation>) -> Self {
        match v {
            None => Certificate::holds(),
            Some(v) => Certificate::fails(Witness::Violation(v)),
        }
    }

    pub fn violation(&self) -> Option<&Violation> {
        match &self.witness {
            Witness::Violation(v) => Some(v),
            _ => None,
        }
    }
}

fn list(f: &mut fmt::Formatter<'_>, xs: &[Id]) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("none"),
            Witness::Violation(v) => write!(f, "{v}"),
            Witness::Morphism { op, a, b } => write!(f, "{op} not preserved at ({a}, {b})"),
            Witness::Element(e) => write!(f, "element {e}"),
            Witness::Subset(xs) => {
                f.write_str("subset ")?;
                list(f, xs)
            }
            Witness::Section(xs) => {
                f.write_str("section ")?;
                list(f, xs)
            }
            Witness::Sides(sides) => {
                for (i, (name, v)) in sides.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{name}={v}")?;
                }
                Ok(())
            }
            Witness::Distributivity {
                side,
                element,
                subset,
            } => {
                let law = match side {
                    DistributiveSide::JoinThenMeet => "(⋁ xᵢ) ∧ y = ⋁ (xᵢ ∧ y)",
                    DistributiveSide::MeetThenJoin => "x ∧ (⋁ yᵢ) = ⋁ (x ∧ yᵢ)",
                };
                write!(f, "{law} fails for element {element} and subset ")?;
                list(f, subset)
            }
            Witness::Cases(cases) => match cases.first_failure() {
                Some(c) => write!(f, "case `{}` fails ({} checks)", c.label, cases.len()),
                None => write!(f, "{} checks hold", cases.len()),
            },
            Witness::Reason(r) => f.write_str(r),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}",
            if self.verdict { "true" } else { "false" },
            self.witness
        )
    }
}
