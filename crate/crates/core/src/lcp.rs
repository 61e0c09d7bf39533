//! Linear complementarity problems `LCP(q, A)`: find `z ≥ 0` with
//! `w = q + Az ≥ 0` and `zᵀw = 0`.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::{find_nonneg_solution, FeasibilityOutcome};
use crate::ratcore::{dot, ser, IndexSet, RatMatrix, Rational};

/// Largest order accepted; enumeration visits `2^n` supports.
pub const MAX_LCP_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpInstance {
    q: Vec<Rational>,
    a: RatMatrix,
}

impl LcpInstance {
    pub fn new(q: Vec<Rational>, a: RatMatrix) -> Result<Self> {
        let n = a.order()?;
        if q.len() != n {
            return Err(Error::DimensionMismatch { expected: format!("q of length {n}"), found: format!("length {}", q.len()) });
        }
        if n > MAX_LCP_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_LCP_ORDER });
        }
        Ok(LcpInstance { q, a })
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.a
    }

    pub fn order(&self) -> usize {
        self.q.len()
    }

    /// `q + Az`.
    pub fn slack(&self, z: &[Rational]) -> Vec<Rational> {
        self.a.mul_vec(z).into_iter().zip(&self.q).map(|(az, q)| az + q).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcpSolution {
    #[serde(serialize_with = "ser::rationals")]
    pub z: Vec<Rational>,
    #[serde(serialize_with = "ser::rationals")]
    pub w: Vec<Rational>,
    /// Complementary support the solution was found on.
    pub support: IndexSet,
}

impl LcpSolution {
    /// Checks `z ≥ 0`, `w = q + Az ≥ 0` and `zᵀw = 0` by substitution.
    pub fn verify(&self, inst: &LcpInstance) -> bool {
        self.z.len() == inst.order()
            && self.w == inst.slack(&self.z)
            && !self.z.iter().any(Signed::is_negative)
            && !self.w.iter().any(Signed::is_negative)
            && dot(&self.z, &self.w).is_zero()
    }
}

/// Whether `FEA(q, A) = {z ≥ 0 : q + Az ≥ 0}` is nonempty, with a point of it.
pub fn lcp_feasible(inst: &LcpInstance) -> FeasibilityOutcome {
    // q + Az ≥ 0  ⟺  −Az ≤ q
    let neg = -&inst.a;
    match find_nonneg_solution(&neg, &inst.q) {
        Some(z) => FeasibilityOutcome::Feasible(z),
        None => FeasibilityOutcome::Infeasible,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcpEnumeration {
    pub solutions: Vec<LcpSolution>,
    /// Supports whose block `A_αα` is singular and were skipped. Solutions
    /// living only on such supports are missed.
    pub singular_supports: Vec<IndexSet>,
}

/// All solutions reachable by complementary support enumeration: for each
/// `α` (the empty set included) with `A_αα` invertible, `z_α = −A_αα⁻¹ q_α`,
/// `z_ᾱ = 0`, kept when `z ≥ 0` and `w ≥ 0`.
pub fn lcp_solve_enum(inst: &LcpInstance) -> LcpEnumeration {
    let n = inst.order();
    let mut solutions: Vec<LcpSolution> = Vec::new();
    let mut singular_supports = Vec::new();
    let supports = std::iter::once(IndexSet::empty(n)).chain(IndexSet::nonempty_subsets(n));
    for alpha in supports {
        let members = alpha.members();
        let mut z = vec![Rational::zero(); n];
        if !members.is_empty() {
            let inv = match inst.a.submatrix(&alpha, &alpha).inverse() {
                Ok(inv) => inv,
                Err(_) => {
                    singular_supports.push(alpha);
                    continue;
                }
            };
            let q_alpha: Vec<Rational> = members.iter().map(|&i| -inst.q[i].clone()).collect();
            for (&i, v) in members.iter().zip(inv.mul_vec(&q_alpha)) {
                z[i] = v;
            }
        }
        if z.iter().any(Signed::is_negative) {
            continue;
        }
        let w = inst.slack(&z);
        if w.iter().any(Signed::is_negative) {
            continue;
        }
        if solutions.iter().all(|s| s.z != z) {
            solutions.push(LcpSolution { z, w, support: alpha });
        }
    }
    LcpEnumeration { solutions, singular_supports }
}

/// Outcome of sampling `q` vectors against the `Q0` property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Q0Report {
    pub trials: usize,
    pub seed: u64,
    /// Samples with `FEA(q, A) ≠ ∅`.
    pub feasible: usize,
    /// Feasible samples for which enumeration found a solution.
    pub solved: usize,
    /// A feasible `q` with no solution found, if any.
    #[serde(serialize_with = "opt_rationals")]
    pub counterexample: Option<Vec<Rational>>,
    /// Feasible samples that hit at least one singular support.
    pub degenerate: usize,
    pub note: &'static str,
}

fn opt_rationals<S: serde::Serializer>(x: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser::rationals(v, s),
        None => s.serialize_none(),
    }
}

impl Q0Report {
    pub fn violation_found(&self) -> bool {
        self.counterexample.is_some()
    }
}

/// Numerators of sampled `q` entries lie in `[-Q_NUMERATOR, Q_NUMERATOR]`.
pub const Q_NUMERATOR: i64 = 6;
/// Denominators of sampled `q` entries lie in `[1, Q_DENOMINATOR]`.
pub const Q_DENOMINATOR: i64 = 4;

/// Samples `trials` vectors `q` from a bounded rational grid and checks that
/// every feasible `LCP(q, A)` has a solution. This can refute `A ∈ Q0` but
/// never prove it.
pub fn q0_falsify(a: &RatMatrix, trials: usize, seed: u64) -> Result<Q0Report> {
    let n = a.order()?;
    if n > MAX_LCP_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_LCP_ORDER });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Q0Report {
        trials: 0,
        seed,
        feasible: 0,
        solved: 0,
        counterexample: None,
        degenerate: 0,
        note: "sampling can only falsify Q0; no violation is evidence, not proof",
    };
    for _ in 0..trials {
        let q: Vec<Rational> = (0..n)
            .map(|_| {
                let p = rng.random_range(-Q_NUMERATOR..=Q_NUMERATOR);
                let d = rng.random_range(1..=Q_DENOMINATOR);
                Rational::new(p.into(), d.into())
            })
            .collect();
        report.trials += 1;
        let inst = LcpInstance::new(q, a.clone())?;
        if !lcp_feasible(&inst).is_feasible() {
            continue;
        }
        report.feasible += 1;
        let sols = lcp_solve_enum(&inst);
        if !sols.singular_supports.is_empty() {
            report.degenerate += 1;
        }
        if sols.solutions.is_empty() {
            report.counterexample = Some(inst.q);
            break;
        }
        report.solved += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ratcore::{int, rat};

    fn inst(q: &[i64], a: RatMatrix) -> LcpInstance {
        LcpInstance::new(q.iter().map(|&v| int(v)).collect(), a).unwrap()
    }

    #[test]
    fn feasibility() {
        let i = inst(&[1, 1], RatMatrix::identity(2));
        assert!(lcp_feasible(&i).is_feasible());
        let i = inst(&[-1], RatMatrix::zeros(1, 1));
        assert!(!lcp_feasible(&i).is_feasible());
        let i = inst(&[-1, -1], RatMatrix::identity(2));
        let z = lcp_feasible(&i).certificate().unwrap().to_vec();
        assert!(i.slack(&z).iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn enumeration() {
        let i = inst(&[1, 2, 3], RatMatrix::identity(3));
        let s = lcp_solve_enum(&i);
        assert_eq!(s.solutions.len(), 1);
        assert_eq!(s.solutions[0].z, vec![int(0); 3]);

        let i = inst(&[-1, -2], RatMatrix::identity(2));
        let s = lcp_solve_enum(&i);
        assert_eq!(s.solutions.len(), 1);
        assert_eq!(s.solutions[0].z, vec![int(1), int(2)]);
        assert_eq!(s.solutions[0].w, vec![int(0), int(0)]);

        let i = inst(&[-1, -1, -1], fixtures::e02_3x3());
        let s = lcp_solve_enum(&i);
        assert!(s.solutions.iter().all(|sol| sol.verify(&i)));
        // q < 0 with a nonpositive matrix is infeasible, so no solution
        assert!(!lcp_feasible(&i).is_feasible());
        assert!(s.solutions.is_empty());
    }

    #[test]
    fn verify_rejects_tampered_solution() {
        let i = inst(&[-1, -2], RatMatrix::identity(2));
        let mut sol = lcp_solve_enum(&i).solutions.remove(0);
        sol.z[0] = rat(3, 2);
        assert!(!sol.verify(&i));
    }

    #[test]
    fn singular_supports_are_recorded() {
        let i = inst(&[1, 1], RatMatrix::zeros(2, 2));
        let s = lcp_solve_enum(&i);
        assert_eq!(s.singular_supports.len(), 3);
        assert_eq!(s.solutions.len(), 1);
    }

    #[test]
    fn q0_sampling() {
        let r = q0_falsify(&RatMatrix::identity(3), 100, 5).unwrap();
        assert!(!r.violation_found());
        assert_eq!(r.feasible, 100);
        let r = q0_falsify(&RatMatrix::zeros(1, 1), 50, 1).unwrap();
        assert!(!r.violation_found());
        let r = q0_falsify(&fixtures::e02_3x3(), 300, 9).unwrap();
        assert!(!r.violation_found());
        assert_eq!(r.solved, r.feasible);
    }

    #[test]
    fn dimension_mismatch() {
        let e = LcpInstance::new(vec![int(1)], RatMatrix::identity(2));
        assert!(matches!(e, Err(Error::DimensionMismatch { .. })));
    }
}
