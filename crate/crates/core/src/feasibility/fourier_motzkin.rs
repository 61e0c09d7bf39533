//! Fourier–Motzkin elimination for the same scaled sign systems the
//! simplex route decides. Used as an independent cross-check, so it shares
//! nothing with the simplex code beyond the rational type.

use num_traits::{One, Signed, Zero};

use super::{FeasibilityOutcome, Strictness};
use crate::error::{Error, Result};
use crate::ratcore::{RatMatrix, Rational};

/// Elimination is doubly exponential; orders above this are refused.
pub const FM_MAX_ORDER: usize = 5;

/// `coeffs · y ≤ rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
struct Row {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Row {
    /// Scales so the last nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Row {
        if let Some(last) = self.coeffs.iter().rev().find(|c| !c.is_zero()).cloned() {
            let s = last.abs().recip();
            for c in &mut self.coeffs {
                *c *= &s;
            }
            self.rhs *= &s;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Decides `∃ y ≥ 1` with `My ≤ −1` (strict) or `My ≤ 0` (semistrict)
/// by eliminating variables one at a time, then back-substitutes a
/// certificate.
pub fn fm_feasible(m: &RatMatrix, strictness: Strictness) -> Result<FeasibilityOutcome> {
    let n = m.order()?;
    if n > FM_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: FM_MAX_ORDER });
    }
    let bound = strictness.bound();
    let mut rows: Vec<Row> = (0..n).map(|i| Row { coeffs: m.row(i).to_vec(), rhs: bound.clone() }).collect();
    for j in 0..n {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[j] = -Rational::one();
        rows.push(Row { coeffs, rhs: -Rational::one() });
    }

    // stages[j] holds the system over variables 0..=j.
    let mut stages: Vec<Vec<Row>> = vec![Vec::new(); n];
    let mut current = dedup(rows);
    for j in (0..n).rev() {
        stages[j] = current.clone();
        let (mut upper, mut lower, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in current {
            if r.coeffs[j].is_positive() {
                upper.push(r);
            } else if r.coeffs[j].is_negative() {
                lower.push(r);
            } else {
                rest.push(r);
            }
        }
        for u in &upper {
            for l in &lower {
                // u has coefficient +1 or larger, l negative: combine to cancel y_j
                let cu = l.coeffs[j].abs();
                let cl = u.coeffs[j].clone();
                let coeffs = u.coeffs.iter().zip(&l.coeffs).map(|(a, b)| a * &cu + b * &cl).collect();
                let rhs = &u.rhs * &cu + &l.rhs * &cl;
                rest.push(Row { coeffs, rhs }.normalized());
            }
        }
        let mut next = Vec::new();
        for r in rest {
            if r.is_trivial() {
                if r.rhs.is_negative() {
                    return Ok(FeasibilityOutcome::Infeasible);
                }
            } else {
                next.push(r);
            }
        }
        current = dedup(next);
    }

    let mut y: Vec<Rational> = Vec::with_capacity(n);
    for (j, stage) in stages.iter().enumerate() {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for r in stage {
            let fixed: Rational = r.coeffs[..j].iter().zip(&y).map(|(c, v)| c * v).sum();
            let slack = &r.rhs - fixed;
            let c = &r.coeffs[j];
            if c.is_positive() {
                let b = slack / c;
                hi = Some(hi.map_or(b.clone(), |h| h.min(b)));
            } else if c.is_negative() {
                let b = slack / c;
                lo = Some(lo.map_or(b.clone(), |l| l.max(b)));
            }
        }
        // every stage keeps the row −y_j ≤ −1, so a lower bound exists
        let value = lo.expect("lower bound row present");
        debug_assert!(hi.as_ref().is_none_or(|h| value <= *h));
        y.push(value);
    }
    Ok(FeasibilityOutcome::Feasible(y))
}

fn dedup(rows: Vec<Row>) -> Vec<Row> {
    let mut out: Vec<Row> = Vec::with_capacity(rows.len());
    for r in rows.into_iter().map(Row::normalized) {
        // among rows with identical coefficients keep the tightest
        match out.iter_mut().find(|o| o.coeffs == r.coeffs) {
            Some(o) => {
                if r.rhs < o.rhs {
                    o.rhs = r.rhs;
                }
            }
            None => out.push(r),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::{feasible_semistrict, feasible_strict, satisfies};
    use crate::ratcore::int;

    #[test]
    fn agrees_on_small_examples() {
        let m = RatMatrix::from_ints(&[[0, -1], [-2, 0]]);
        let out = fm_feasible(&m, Strictness::Strict).unwrap();
        assert!(out.is_feasible());
        assert!(feasible_strict(&m).is_feasible());
        assert!(satisfies(&m, out.certificate().unwrap(), Strictness::Strict));

        let z = RatMatrix::from_ints(&[[0]]);
        assert_eq!(fm_feasible(&z, Strictness::Semistrict).unwrap(), FeasibilityOutcome::Feasible(vec![int(1)]));
        assert!(feasible_semistrict(&z).is_feasible());

        let p = RatMatrix::from_ints(&[[1]]);
        assert!(!fm_feasible(&p, Strictness::Semistrict).unwrap().is_feasible());
    }

    #[test]
    fn infeasible_two_by_two() {
        let m = RatMatrix::from_ints(&[[2, -1], [-1, 2]]);
        assert!(!fm_feasible(&m, Strictness::Semistrict).unwrap().is_feasible());
        assert!(!fm_feasible(&m, Strictness::Strict).unwrap().is_feasible());
    }

    #[test]
    fn refuses_large_orders() {
        let m = RatMatrix::identity(FM_MAX_ORDER + 1);
        assert!(matches!(fm_feasible(&m, Strictness::Strict), Err(Error::OrderTooLarge { .. })));
    }
}
