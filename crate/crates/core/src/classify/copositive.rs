//! Copositivity through the symmetric part `S = (A + Aᵀ)/2`, which has the
//! same quadratic form as `A`.
//!
//! Membership is decided support by support with the Cottle–Habetler–Lemke
//! criterion: if every principal submatrix of order `m − 1` of a symmetric
//! `S` (order `m`) is copositive, then `S` fails to be copositive iff `S⁻¹`
//! exists and is entrywise `≤ 0`; if every such submatrix is strictly
//! copositive, `S` fails strict copositivity iff `det S ≤ 0` and
//! `adj S > 0` entrywise. This uses only determinants and adjugates and
//! shares no code with the LP route, which is kept as an independent check
//! (`is_copositive_by_lp`): for symmetric matrices copositivity coincides
//! with semimonotonicity.

use num_traits::{One, Signed, Zero};

use super::semimonotone::{is_semimonotone, is_strictly_semimonotone};
use super::support::MembershipTable;
use super::{ClassLabel, ClassVerdict, ExactOrderResult, Family, Variant, Witness};
use crate::error::Result;
use crate::ratcore::{IndexSet, RatMatrix, Rational};

/// Local test on one block of the symmetric part, assuming every proper
/// principal block passed. Returns a full-length witness vector on failure.
fn local_failure(s: &RatMatrix, variant: Variant) -> impl FnMut(&IndexSet) -> Option<Witness> + '_ {
    let n = s.rows();
    move |alpha| {
        let block = s.submatrix(alpha, alpha);
        let m = alpha.len();
        let ones = vec![Rational::one(); m];
        let x_alpha = match variant {
            Variant::E0 => {
                let inv = block.inverse().ok()?;
                if inv.entries().iter().any(Signed::is_positive) {
                    return None;
                }
                // x = −S⁻¹·1 ≥ 0 and xᵀSx = 1ᵀS⁻¹1 < 0
                inv.mul_vec(&ones).into_iter().map(|v| -v).collect::<Vec<_>>()
            }
            Variant::E => {
                let det = block.det().expect("square block");
                if det.is_positive() {
                    return None;
                }
                let adj = block.adjugate().expect("square block");
                if !adj.entries().iter().all(Signed::is_positive) {
                    return None;
                }
                // x = adj·1 > 0 and xᵀSx = det · 1ᵀadj1 ≤ 0
                adj.mul_vec(&ones)
            }
        };
        let mut x = vec![Rational::zero(); n];
        for (slot, v) in alpha.members().into_iter().zip(x_alpha) {
            x[slot] = v;
        }
        let value = s.quadratic_form(&x);
        Some(Witness::QuadraticForm { x, value })
    }
}

fn table(a: &RatMatrix, variant: Variant) -> Result<MembershipTable> {
    let s = a.symmetric_part()?;
    MembershipTable::build(s.rows(), local_failure(&s, variant))
}

fn verdict(a: &RatMatrix, variant: Variant) -> Result<ClassVerdict> {
    let s = a.symmetric_part()?;
    let label = match variant {
        Variant::E0 => ClassLabel::Copositive,
        Variant::E => ClassLabel::StrictlyCopositive,
    };
    let t = MembershipTable::build_until_failure(s.rows(), local_failure(&s, variant))?;
    Ok(match t.first_failure() {
        None => ClassVerdict::pass(label),
        Some((_, w)) => ClassVerdict::fail(label, w.clone()),
    })
}

/// `xᵀAx ≥ 0` for every `x ≥ 0`.
pub fn is_copositive(a: &RatMatrix) -> Result<ClassVerdict> {
    verdict(a, Variant::E0)
}

/// `xᵀAx > 0` for every `x ≥ 0`, `x ≠ 0`.
pub fn is_strictly_copositive(a: &RatMatrix) -> Result<ClassVerdict> {
    verdict(a, Variant::E)
}

/// Copositivity decided as semimonotonicity of the symmetric part (LP route).
pub fn is_copositive_by_lp(a: &RatMatrix) -> Result<bool> {
    Ok(is_semimonotone(&a.symmetric_part()?)?.member)
}

/// Strict copositivity decided as strict semimonotonicity of the symmetric
/// part (LP route).
pub fn is_strictly_copositive_by_lp(a: &RatMatrix) -> Result<bool> {
    Ok(is_strictly_semimonotone(&a.symmetric_part()?)?.member)
}

/// Exact order in the (strictly) copositive hierarchy; `Variant::E0` means
/// copositive and `Variant::E` strictly copositive.
pub fn copositive_exact_order(a: &RatMatrix, variant: Variant) -> Result<ExactOrderResult> {
    Ok(table(a, variant)?.exact_order(Family::Copositive, variant))
}
