//! Decision procedures for the matrix classes of the semimonotone
//! hierarchy, each returning a verdict with a re-checkable certificate.
//!
//! `A` is semimonotone (`E0`) iff no nonempty support `α` admits `y > 0`
//! with `A_αα y < 0`, and strictly semimonotone (`E`) iff none admits
//! `A_αα y ≤ 0`. Both classes are hereditary, so the per-support answers
//! are computed once and shared by every principal submatrix query.

mod copositive;
mod pattern;
mod semimonotone;
mod support;

pub use copositive::{
    copositive_exact_order, is_copositive, is_copositive_by_lp, is_strictly_copositive,
    is_strictly_copositive_by_lp,
};
pub use pattern::{
    check_3x3_structure, is_inverse_z, is_nonnegative, is_p, is_p0, is_z, negative_entry_profile,
    NegativeEntryProfile, SignPattern, Structure3Report,
};
pub use semimonotone::{
    exact_order, exact_order_by_elimination, is_almost_semimonotone, is_almost_strictly_semimonotone, is_semimonotone,
    is_strictly_semimonotone, membership_profile,
};
pub use support::MembershipTable;
pub(crate) use pattern::is_triangular;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::feasibility::{self, Strictness};
use crate::ratcore::ser;
use crate::ratcore::{IndexSet, RatMatrix, Rational};

/// The two semimonotonicity variants. For copositivity `E0` stands for
/// copositive and `E` for strictly copositive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    E0,
    E,
}

impl Variant {
    /// Sign system whose feasibility on a support refutes membership.
    pub fn violation_system(self) -> Strictness {
        match self {
            Variant::E0 => Strictness::Strict,
            Variant::E => Strictness::Semistrict,
        }
    }

    pub fn both() -> [Variant; 2] {
        [Variant::E0, Variant::E]
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::E0 => "E0",
            Variant::E => "E",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassLabel {
    E0,
    E,
    AlmostE0,
    AlmostE,
    E0ExactOrder(usize),
    EExactOrder(usize),
    Z,
    P0,
    P,
    Copositive,
    StrictlyCopositive,
    InverseZ,
    Nonnegative,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::E0ExactOrder(k) => write!(f, "E0 exact order {k}"),
            ClassLabel::EExactOrder(k) => write!(f, "E exact order {k}"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Why a matrix was rejected from a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `y > 0` on support `α` with `A_αα y < 0` (or `≤ 0` for `E`).
    Support {
        alpha: IndexSet,
        #[serde(serialize_with = "ser::rationals")]
        y: Vec<Rational>,
    },
    /// Principal minor of the wrong sign.
    Minor {
        alpha: IndexSet,
        #[serde(serialize_with = "ser::rational")]
        value: Rational,
    },
    /// Entry of the wrong sign, 0-based position.
    Entry {
        row: usize,
        col: usize,
        #[serde(serialize_with = "ser::rational")]
        value: Rational,
    },
    /// `x ≥ 0`, `x ≠ 0` with `xᵀAx < 0` (or `≤ 0` for strict copositivity).
    QuadraticForm {
        #[serde(serialize_with = "ser::rationals")]
        x: Vec<Rational>,
        #[serde(serialize_with = "ser::rational")]
        value: Rational,
    },
    /// Inverse requested of a singular matrix.
    Singular,
    /// No `x > 0` with `Ax < 0` (resp. `Ax ≤ 0`) for the full matrix.
    NoFullSupportDirection,
}

/// Membership of one matrix in one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub label: ClassLabel,
    pub member: bool,
    pub witness: Option<Witness>,
}

impl ClassVerdict {
    pub(crate) fn pass(label: ClassLabel) -> Self {
        ClassVerdict { label, member: true, witness: None }
    }

    pub(crate) fn fail(label: ClassLabel, witness: Witness) -> Self {
        ClassVerdict { label, member: false, witness: Some(witness) }
    }

    /// Re-checks a negative verdict's witness against `a` by direct
    /// substitution. Positive verdicts carry no witness and return true.
    pub fn revalidate(&self, a: &RatMatrix) -> bool {
        if self.member {
            return true;
        }
        let Some(w) = &self.witness else {
            return false;
        };
        match (self.label, w) {
            (ClassLabel::E0 | ClassLabel::E | ClassLabel::AlmostE0 | ClassLabel::AlmostE, Witness::Support { alpha, y }) => {
                let strict = matches!(self.label, ClassLabel::E0 | ClassLabel::AlmostE0);
                let system = if strict { Strictness::Strict } else { Strictness::Semistrict };
                let proper_ok = !matches!(self.label, ClassLabel::AlmostE0 | ClassLabel::AlmostE)
                    || alpha.len() < a.rows();
                let block = match a.principal_submatrix(alpha) {
                    Ok(b) => b,
                    Err(_) => return false,
                };
                proper_ok
                    && y.len() == alpha.len()
                    && y.iter().all(Signed::is_positive)
                    && system.accepts(&block.mul_vec(y))
            }
            (ClassLabel::AlmostE0 | ClassLabel::AlmostE, Witness::NoFullSupportDirection) => {
                let system = if self.label == ClassLabel::AlmostE0 {
                    Strictness::Strict
                } else {
                    Strictness::Semistrict
                };
                !feasibility::fm_feasible(a, system)
                    .map(|o| o.is_feasible())
                    .unwrap_or_else(|_| feasibility::feasible(a, system).is_feasible())
            }
            (ClassLabel::P0 | ClassLabel::P, Witness::Minor { alpha, value }) => {
                let Ok(block) = a.principal_submatrix(alpha) else {
                    return false;
                };
                let recomputed = block.det().ok();
                recomputed.as_ref() == Some(value)
                    && if self.label == ClassLabel::P0 { value.is_negative() } else { !value.is_positive() }
            }
            (ClassLabel::Z, Witness::Entry { row, col, value }) => {
                row != col && a[(*row, *col)] == *value && value.is_positive()
            }
            (ClassLabel::Nonnegative, Witness::Entry { row, col, value }) => {
                a[(*row, *col)] == *value && value.is_negative()
            }
            (ClassLabel::InverseZ, Witness::Singular) => a.det().is_ok_and(|d| d.is_zero()),
            (ClassLabel::InverseZ, Witness::Entry { row, col, value }) => a
                .inverse()
                .is_ok_and(|inv| row != col && inv[(*row, *col)] == *value && value.is_positive()),
            (ClassLabel::Copositive | ClassLabel::StrictlyCopositive, Witness::QuadraticForm { x, value }) => {
                let q = a.quadratic_form(x);
                let nonzero = x.iter().any(|v| !v.is_zero());
                let sign_ok =
                    if self.label == ClassLabel::Copositive { q.is_negative() } else { !q.is_positive() };
                nonzero && !x.iter().any(Signed::is_negative) && q == *value && sign_ok
            }
            _ => false,
        }
    }
}

/// Whether all, none, or some of the principal submatrices of one order
/// are in the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum LevelStatus {
    All,
    None,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrderLevel {
    pub order: usize,
    pub status: LevelStatus,
    pub members: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "k", rename_all = "snake_case")]
pub enum ExactOrder {
    /// Orders `n−k+1..n` are all out of the class and order `n−k` is all in.
    Exact(usize),
    /// No `k` satisfies the definition; the evidence shows a mixed level.
    NoExactOrder,
}

/// Class family an [`ExactOrderResult`] was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Semimonotone,
    Copositive,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExactOrderResult {
    pub family: Family,
    pub variant: Variant,
    pub outcome: ExactOrder,
    /// One entry per order `1..=n`, ascending.
    pub evidence: Vec<OrderLevel>,
}

impl ExactOrderResult {
    pub fn order(&self) -> Option<usize> {
        match self.outcome {
            ExactOrder::Exact(k) => Some(k),
            ExactOrder::NoExactOrder => None,
        }
    }

    pub fn is_exact(&self, k: usize) -> bool {
        self.outcome == ExactOrder::Exact(k)
    }

    pub fn label(&self) -> Option<ClassLabel> {
        self.order().map(|k| match self.variant {
            Variant::E0 => ClassLabel::E0ExactOrder(k),
            Variant::E => ClassLabel::EExactOrder(k),
        })
    }

    /// Same outcome and per-order profile, ignoring the family tag.
    pub fn same_profile(&self, other: &ExactOrderResult) -> bool {
        self.variant == other.variant && self.outcome == other.outcome && self.evidence == other.evidence
    }
}

impl fmt::Display for ExactOrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome {
            ExactOrder::Exact(k) => write!(f, "exact order {k}")?,
            ExactOrder::NoExactOrder => write!(f, "no exact order")?,
        }
        let levels: Vec<String> = self.evidence.iter().map(|l| format!("{}:{:?}", l.order, l.status)).collect();
        write!(f, " [{}]", levels.join(" "))
    }
}
