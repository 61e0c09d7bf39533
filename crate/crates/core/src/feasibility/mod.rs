//! Exact feasibility of the homogeneous sign systems behind the
//! semimonotonicity definitions.
//!
//! A matrix `M` fails to be semimonotone on a support exactly when some
//! `y > 0` has `My < 0`, and fails to be strictly semimonotone when some
//! `y > 0` has `My ≤ 0`. Both cones are invariant under positive scaling,
//! so the strict inequalities can be replaced by `y ≥ 1` and `My ≤ −1`
//! (resp. `My ≤ 0`) without changing the answer.

mod fourier_motzkin;
mod simplex;

pub use fourier_motzkin::{fm_feasible, FM_MAX_ORDER};
pub use simplex::find_nonneg_solution;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ratcore::{RatMatrix, Rational};

/// Which sign system is being asked about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    /// `∃ y > 0` with `My < 0`.
    Strict,
    /// `∃ y > 0` with `My ≤ 0`.
    Semistrict,
}

impl Strictness {
    /// Right-hand side bound after scaling: `−1` for strict, `0` otherwise.
    pub(crate) fn bound(self) -> Rational {
        match self {
            Strictness::Strict => -Rational::one(),
            Strictness::Semistrict => Rational::zero(),
        }
    }

    /// True if `my` meets the system's sign requirement.
    pub fn accepts(self, my: &[Rational]) -> bool {
        match self {
            Strictness::Strict => my.iter().all(Signed::is_negative),
            Strictness::Semistrict => my.iter().all(|v| !v.is_positive()),
        }
    }
}

/// Result of a feasibility query. A feasible certificate `y` always has
/// `y ≥ 1` componentwise and satisfies the scaled system exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "certificate", rename_all = "lowercase")]
pub enum FeasibilityOutcome {
    Feasible(#[serde(serialize_with = "crate::ratcore::ser::rationals")] Vec<Rational>),
    Infeasible,
}

impl FeasibilityOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityOutcome::Feasible(_))
    }

    pub fn certificate(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityOutcome::Feasible(y) => Some(y),
            FeasibilityOutcome::Infeasible => None,
        }
    }
}

/// Decides `∃ y > 0, My < 0` by exact phase-1 simplex.
pub fn feasible_strict(m: &RatMatrix) -> FeasibilityOutcome {
    solve_scaled(m, Strictness::Strict)
}

/// Decides `∃ y > 0, My ≤ 0` by exact phase-1 simplex.
pub fn feasible_semistrict(m: &RatMatrix) -> FeasibilityOutcome {
    solve_scaled(m, Strictness::Semistrict)
}

/// Dispatches on `strictness`.
pub fn feasible(m: &RatMatrix, strictness: Strictness) -> FeasibilityOutcome {
    solve_scaled(m, strictness)
}

fn solve_scaled(m: &RatMatrix, strictness: Strictness) -> FeasibilityOutcome {
    assert!(m.is_square(), "sign systems are defined for square blocks");
    let n = m.rows();
    let ones = vec![Rational::one(); n];
    // y = 1 + u with u ≥ 0:  M u ≤ bound − M·1
    let bound = strictness.bound();
    let rhs: Vec<Rational> = m.mul_vec(&ones).into_iter().map(|v| &bound - v).collect();
    match find_nonneg_solution(m, &rhs) {
        Some(u) => {
            let y: Vec<Rational> = u.into_iter().map(|v| v + Rational::one()).collect();
            debug_assert!(satisfies(m, &y, strictness));
            FeasibilityOutcome::Feasible(y)
        }
        None => FeasibilityOutcome::Infeasible,
    }
}

/// Checks `y ≥ 1` and `My ≤ bound` by direct substitution.
pub fn satisfies(m: &RatMatrix, y: &[Rational], strictness: Strictness) -> bool {
    let bound = strictness.bound();
    y.len() == m.cols()
        && y.iter().all(|v| *v >= Rational::one())
        && m.mul_vec(y).iter().all(|v| *v <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::int;

    #[test]
    fn strict_examples() {
        let out = feasible_strict(&RatMatrix::from_ints(&[[-1]]));
        assert_eq!(out, FeasibilityOutcome::Feasible(vec![int(1)]));
        assert_eq!(feasible_strict(&RatMatrix::from_ints(&[[1]])), FeasibilityOutcome::Infeasible);
        let m = RatMatrix::from_ints(&[[0, -1], [-2, 0]]);
        let y = feasible_strict(&m).certificate().unwrap().to_vec();
        assert!(satisfies(&m, &y, Strictness::Strict));
        assert_eq!(m.mul_vec(&[int(1), int(1)]), vec![int(-1), int(-2)]);
    }

    #[test]
    fn semistrict_examples() {
        let out = feasible_semistrict(&RatMatrix::from_ints(&[[0]]));
        assert_eq!(out, FeasibilityOutcome::Feasible(vec![int(1)]));
        assert!(!feasible_semistrict(&RatMatrix::from_ints(&[[1]])).is_feasible());
        let m = RatMatrix::from_ints(&[[1, -3], [-3, 1]]);
        let y = feasible_semistrict(&m).certificate().unwrap().to_vec();
        assert!(satisfies(&m, &y, Strictness::Semistrict));
        // the strict system is also feasible here
        assert!(feasible_strict(&m).is_feasible());
    }

    #[test]
    fn zero_matrix_is_semistrict_only() {
        let z = RatMatrix::zeros(3, 3);
        assert!(!feasible_strict(&z).is_feasible());
        assert!(feasible_semistrict(&z).is_feasible());
    }
}
