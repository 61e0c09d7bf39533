use super::support::MembershipTable;
use super::{ClassLabel, ClassVerdict, ExactOrderResult, Family, Variant, Witness};
use crate::error::Result;
use crate::feasibility::{self, FeasibilityOutcome, Strictness};
use crate::ratcore::{IndexSet, RatMatrix};

fn local_lp_failure(a: &RatMatrix, system: Strictness) -> impl FnMut(&IndexSet) -> Option<Witness> + '_ {
    move |alpha| {
        let block = a.submatrix(alpha, alpha);
        match feasibility::feasible(&block, system) {
            FeasibilityOutcome::Feasible(y) => Some(Witness::Support { alpha: *alpha, y }),
            FeasibilityOutcome::Infeasible => None,
        }
    }
}

/// Membership of every principal submatrix of `a` in `E0` or `E`, one LP
/// per support whose proper subsupports all pass.
pub fn membership_profile(a: &RatMatrix, variant: Variant) -> Result<MembershipTable> {
    let n = a.order()?;
    MembershipTable::build(n, local_lp_failure(a, variant.violation_system()))
}

fn verdict(a: &RatMatrix, variant: Variant) -> Result<ClassVerdict> {
    let n = a.order()?;
    let label = match variant {
        Variant::E0 => ClassLabel::E0,
        Variant::E => ClassLabel::E,
    };
    let table = MembershipTable::build_until_failure(n, local_lp_failure(a, variant.violation_system()))?;
    Ok(match table.first_failure() {
        Some((_, w)) => ClassVerdict::fail(label, w.clone()),
        None => ClassVerdict::pass(label),
    })
}

/// `E0`: every `0 ≠ x ≥ 0` has some `i` with `x_i > 0` and `(Ax)_i ≥ 0`.
///
/// A failing `x` restricted to its support `α` gives `x_α > 0` with
/// `A_αα x_α < 0`, and padding such a vector with zeros gives a failing
/// `x`; the verdict's witness is the first such `(α, y)` in size-then-lex
/// support order.
pub fn is_semimonotone(a: &RatMatrix) -> Result<ClassVerdict> {
    verdict(a, Variant::E0)
}

/// `E`: same with `(Ax)_i > 0`.
pub fn is_strictly_semimonotone(a: &RatMatrix) -> Result<ClassVerdict> {
    verdict(a, Variant::E)
}

fn almost(a: &RatMatrix, variant: Variant) -> Result<ClassVerdict> {
    a.order()?;
    let label = match variant {
        Variant::E0 => ClassLabel::AlmostE0,
        Variant::E => ClassLabel::AlmostE,
    };
    // Not in the class while every proper block is: the full support then
    // carries the violating direction (`Ax < 0` for E0, `Ax ≤ 0` for E).
    let full_system = variant.violation_system();
    let table = membership_profile(a, variant)?;
    if let Some((_, w)) = table.first_proper_failure() {
        return Ok(ClassVerdict::fail(label, w.clone()));
    }
    Ok(if feasibility::feasible(a, full_system).is_feasible() {
        ClassVerdict::pass(label)
    } else {
        ClassVerdict::fail(label, Witness::NoFullSupportDirection)
    })
}

/// Not `E0`, but every proper principal submatrix is; equivalently every
/// proper block is `E0` and some `x > 0` has `Ax < 0`.
pub fn is_almost_semimonotone(a: &RatMatrix) -> Result<ClassVerdict> {
    almost(a, Variant::E0)
}

/// Not `E`, but every proper principal submatrix is; equivalently every
/// proper block is `E` and some `x > 0` has `Ax ≤ 0`.
pub fn is_almost_strictly_semimonotone(a: &RatMatrix) -> Result<ClassVerdict> {
    almost(a, Variant::E)
}

/// Exact order of `a` in the `E0` or `E` hierarchy, with the per-order
/// profile as evidence.
pub fn exact_order(a: &RatMatrix, variant: Variant) -> Result<ExactOrderResult> {
    Ok(membership_profile(a, variant)?.exact_order(Family::Semimonotone, variant))
}

/// [`exact_order`] with every support decided by Fourier–Motzkin
/// elimination instead of the simplex method. Limited to order
/// [`feasibility::FM_MAX_ORDER`]; used to cross-check the LP route.
pub fn exact_order_by_elimination(a: &RatMatrix, variant: Variant) -> Result<ExactOrderResult> {
    let n = a.order()?;
    if n > feasibility::FM_MAX_ORDER {
        return Err(crate::Error::OrderTooLarge { order: n, max: feasibility::FM_MAX_ORDER });
    }
    let system = variant.violation_system();
    let table = MembershipTable::build(n, |alpha| {
        let block = a.submatrix(alpha, alpha);
        match feasibility::fm_feasible(&block, system).expect("order checked above") {
            FeasibilityOutcome::Feasible(y) => Some(Witness::Support { alpha: *alpha, y }),
            FeasibilityOutcome::Infeasible => None,
        }
    })?;
    Ok(table.exact_order(Family::Semimonotone, variant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{ExactOrder, LevelStatus};
    use crate::fixtures;
    use crate::ratcore::int;

    #[test]
    fn semimonotone_examples() {
        let v = is_semimonotone(&RatMatrix::identity(3)).unwrap();
        assert!(v.member);

        let m = RatMatrix::from_ints(&[[0, -1], [-2, 0]]);
        let v = is_semimonotone(&m).unwrap();
        assert!(!v.member);
        match v.witness.as_ref().unwrap() {
            Witness::Support { alpha, .. } => assert_eq!(alpha.to_string(), "{1,2}"),
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(v.revalidate(&m));
        assert_eq!(m.mul_vec(&[int(1), int(1)]), vec![int(-1), int(-2)]);

        let a = fixtures::e02_3x3();
        let v = is_semimonotone(&a).unwrap();
        assert!(!v.member && v.revalidate(&a));
    }

    #[test]
    fn strictly_semimonotone_examples() {
        assert!(is_strictly_semimonotone(&RatMatrix::identity(3)).unwrap().member);
        let z = RatMatrix::zeros(2, 2);
        let v = is_strictly_semimonotone(&z).unwrap();
        assert!(!v.member && v.revalidate(&z));
        let m = RatMatrix::from_ints(&[[1, -2], [-2, 1]]);
        let v = is_strictly_semimonotone(&m).unwrap();
        assert!(!v.member && v.revalidate(&m));
        match v.witness.unwrap() {
            Witness::Support { alpha, .. } => assert_eq!(alpha.len(), 2),
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn almost_examples() {
        let m = RatMatrix::from_ints(&[[0, -1], [-2, 0]]);
        assert!(is_almost_semimonotone(&m).unwrap().member);
        assert_eq!(m.det().unwrap(), int(-2));

        let v = is_almost_semimonotone(&RatMatrix::identity(2)).unwrap();
        assert!(!v.member);
        assert_eq!(v.witness, Some(Witness::NoFullSupportDirection));
        assert!(v.revalidate(&RatMatrix::identity(2)));

        let m = RatMatrix::from_ints(&[[1, -3], [-3, 1]]);
        assert!(is_almost_strictly_semimonotone(&m).unwrap().member);
        assert_eq!(m.det().unwrap(), int(-8));

        // singular boundary case: E0 itself, but almost E
        let m = RatMatrix::from_ints(&[[1, -1], [-1, 1]]);
        assert!(!is_almost_semimonotone(&m).unwrap().member);
        assert!(is_almost_strictly_semimonotone(&m).unwrap().member);

        // a proper submatrix already fails
        let v = is_almost_semimonotone(&fixtures::e02_3x3()).unwrap();
        assert!(!v.member && v.revalidate(&fixtures::e02_3x3()));
    }

    #[test]
    fn exact_order_examples() {
        let r = exact_order(&fixtures::e02_3x3(), Variant::E0).unwrap();
        assert_eq!(r.outcome, ExactOrder::Exact(2));
        let r = exact_order(&fixtures::e2_3x3(), Variant::E).unwrap();
        assert_eq!(r.outcome, ExactOrder::Exact(2));

        let sum = RatMatrix::from_ints(&[[11, -3, -3], [-3, 1, -3], [-3, -3, 1]]);
        let r = exact_order(&sum, Variant::E0).unwrap();
        assert_eq!(r.outcome, ExactOrder::NoExactOrder);
        assert_eq!(r.evidence[1].status, LevelStatus::Mixed);
        // {1,2} and {1,3} blocks are E0, {2,3} is not
        assert_eq!(r.evidence[1].members, 2);

        let r = exact_order(&fixtures::exact_order_three_4x4(), Variant::E0).unwrap();
        assert_eq!(r.outcome, ExactOrder::Exact(3));

        let r = exact_order(&RatMatrix::identity(3), Variant::E).unwrap();
        assert_eq!(r.outcome, ExactOrder::Exact(0));
    }

    #[test]
    fn elimination_route_agrees_on_fixtures() {
        for f in fixtures::all().into_iter().filter(|f| f.matrix.rows() <= 5) {
            for v in Variant::both() {
                let lp = exact_order(&f.matrix, v).unwrap();
                let fm = exact_order_by_elimination(&f.matrix, v).unwrap();
                assert_eq!(lp, fm, "{}", f.name);
            }
        }
    }

    #[test]
    fn exact_order_n_when_every_diagonal_fails() {
        // zero diagonal fails E at order 1
        let r = exact_order(&fixtures::e02_3x3(), Variant::E).unwrap();
        assert_eq!(r.outcome, ExactOrder::Exact(3));
        let r = exact_order(&RatMatrix::from_ints(&[[-1]]), Variant::E0).unwrap();
        assert_eq!(r.outcome, ExactOrder::Exact(1));
    }
}
