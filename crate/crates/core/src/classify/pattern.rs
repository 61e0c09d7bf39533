use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{ClassLabel, ClassVerdict, Variant, Witness};
use crate::error::{Error, Result};
use crate::ratcore::ser;
use crate::ratcore::{IndexSet, RatMatrix, Rational, Sign};

/// Z-matrix: every off-diagonal entry is `≤ 0`.
pub fn is_z(a: &RatMatrix) -> Result<ClassVerdict> {
    let n = a.order()?;
    for i in 0..n {
        for j in 0..n {
            if i != j && a[(i, j)].is_positive() {
                let w = Witness::Entry { row: i, col: j, value: a[(i, j)].clone() };
                return Ok(ClassVerdict::fail(ClassLabel::Z, w));
            }
        }
    }
    Ok(ClassVerdict::pass(ClassLabel::Z))
}

pub fn is_nonnegative(a: &RatMatrix) -> Result<ClassVerdict> {
    let n = a.order()?;
    for i in 0..n {
        for j in 0..n {
            if a[(i, j)].is_negative() {
                let w = Witness::Entry { row: i, col: j, value: a[(i, j)].clone() };
                return Ok(ClassVerdict::fail(ClassLabel::Nonnegative, w));
            }
        }
    }
    Ok(ClassVerdict::pass(ClassLabel::Nonnegative))
}

fn principal_minors(a: &RatMatrix, label: ClassLabel, bad: impl Fn(&Rational) -> bool) -> Result<ClassVerdict> {
    let n = a.order()?;
    for alpha in IndexSet::nonempty_subsets(n) {
        let value = a.submatrix(&alpha, &alpha).det()?;
        if bad(&value) {
            return Ok(ClassVerdict::fail(label, Witness::Minor { alpha, value }));
        }
    }
    Ok(ClassVerdict::pass(label))
}

/// All `2ⁿ − 1` principal minors are `≥ 0`.
pub fn is_p0(a: &RatMatrix) -> Result<ClassVerdict> {
    principal_minors(a, ClassLabel::P0, Signed::is_negative)
}

/// All `2ⁿ − 1` principal minors are `> 0`.
pub fn is_p(a: &RatMatrix) -> Result<ClassVerdict> {
    principal_minors(a, ClassLabel::P, |v| !v.is_positive())
}

/// Nonsingular with a Z-matrix inverse.
pub fn is_inverse_z(a: &RatMatrix) -> Result<ClassVerdict> {
    a.order()?;
    let inv = match a.inverse() {
        Ok(inv) => inv,
        Err(Error::SingularMatrix) => return Ok(ClassVerdict::fail(ClassLabel::InverseZ, Witness::Singular)),
        Err(e) => return Err(e),
    };
    let z = is_z(&inv)?;
    Ok(match z.witness {
        None => ClassVerdict::pass(ClassLabel::InverseZ),
        Some(w) => ClassVerdict::fail(ClassLabel::InverseZ, w),
    })
}

/// Exact sign of every entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignPattern {
    pub diagonal: Vec<Sign>,
    /// Full grid; diagonal cells repeat `diagonal`.
    pub off_diagonal: Vec<Vec<Sign>>,
}

impl SignPattern {
    pub fn of(a: &RatMatrix) -> Result<Self> {
        let n = a.order()?;
        Ok(SignPattern {
            diagonal: (0..n).map(|i| Sign::of(&a[(i, i)])).collect(),
            off_diagonal: (0..n).map(|i| (0..n).map(|j| Sign::of(&a[(i, j)])).collect()).collect(),
        })
    }

    /// Diagonal `≥ 0` (or `> 0` for `E`) and every off-diagonal `< 0`.
    pub fn matches_order_two_form(&self, variant: Variant) -> bool {
        let n = self.diagonal.len();
        let diag_ok = self.diagonal.iter().all(|s| match variant {
            Variant::E0 => *s != Sign::Negative,
            Variant::E => *s == Sign::Positive,
        });
        diag_ok && (0..n).all(|i| (0..n).all(|j| i == j || self.off_diagonal[i][j] == Sign::Negative))
    }
}

/// Structural facts about a 3×3 matrix that an exact-order-2 matrix must
/// have; computed without consulting the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure3Report {
    pub variant: Variant,
    pub pattern: SignPattern,
    pub diagonal_ok: bool,
    pub off_diagonal_negative: bool,
    /// Minors for `{1,2}`, `{1,3}`, `{2,3}`.
    #[serde(serialize_with = "ser::rationals")]
    pub order_two_minors: Vec<Rational>,
    /// Negative for `E0`, nonpositive for `E`.
    pub minors_ok: bool,
}

impl Structure3Report {
    pub fn pattern_ok(&self) -> bool {
        self.diagonal_ok && self.off_diagonal_negative
    }
}

pub fn check_3x3_structure(a: &RatMatrix, variant: Variant) -> Result<Structure3Report> {
    let n = a.order()?;
    if n != 3 {
        return Err(Error::WrongOrder { expected: "3".into(), found: n });
    }
    let pattern = SignPattern::of(a)?;
    let diagonal_ok = pattern.diagonal.iter().all(|s| match variant {
        Variant::E0 => *s != Sign::Negative,
        Variant::E => *s == Sign::Positive,
    });
    let off_diagonal_negative = (0..3).all(|i| (0..3).all(|j| i == j || pattern.off_diagonal[i][j] == Sign::Negative));
    let order_two_minors = IndexSet::of_size(3, 2)
        .map(|alpha| a.submatrix(&alpha, &alpha).det())
        .collect::<Result<Vec<_>>>()?;
    let minors_ok = order_two_minors.iter().all(|m| match variant {
        Variant::E0 => m.is_negative(),
        Variant::E => !m.is_positive(),
    });
    Ok(Structure3Report { variant, pattern, diagonal_ok, off_diagonal_negative, order_two_minors, minors_ok })
}

/// Counts of strictly negative entries per row and per column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeEntryProfile {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl NegativeEntryProfile {
    /// Smallest count over all rows and columns; `0` for an empty matrix.
    pub fn min_count(&self) -> usize {
        self.rows.iter().chain(&self.cols).copied().min().unwrap_or(0)
    }
}

pub fn negative_entry_profile(a: &RatMatrix) -> Result<NegativeEntryProfile> {
    let n = a.order()?;
    let mut rows = vec![0; n];
    let mut cols = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            if a[(i, j)].is_negative() {
                rows[i] += 1;
                cols[j] += 1;
            }
        }
    }
    Ok(NegativeEntryProfile { rows, cols })
}

/// True iff `a` is upper or lower triangular.
pub(crate) fn is_triangular(a: &RatMatrix) -> bool {
    let n = a.rows();
    let upper = (0..n).all(|i| (0..i).all(|j| a[(i, j)].is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| a[(i, j)].is_zero()));
    upper || lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ratcore::int;

    #[test]
    fn z_and_nonnegative() {
        assert!(is_z(&RatMatrix::from_ints(&[[0, -1], [-2, 0]])).unwrap().member);
        let ex = fixtures::example_4x4_symmetric();
        let v = is_z(&ex).unwrap();
        assert!(!v.member && v.revalidate(&ex));
        assert!(is_z(&RatMatrix::identity(3)).unwrap().member);
        assert!(is_nonnegative(&RatMatrix::identity(3)).unwrap().member);
        assert!(!is_nonnegative(&ex).unwrap().member);
    }

    #[test]
    fn p_and_p0() {
        assert!(is_p(&RatMatrix::identity(3)).unwrap().member);
        let m = RatMatrix::from_ints(&[[11, -3], [-3, 1]]);
        // minors 11, 1, 2
        assert_eq!(m.det().unwrap(), int(2));
        assert!(is_p(&m).unwrap().member);
        let m = RatMatrix::from_ints(&[[0, -1], [-2, 0]]);
        let v = is_p0(&m).unwrap();
        assert!(!v.member && v.revalidate(&m));
        assert_eq!(v.witness, Some(Witness::Minor { alpha: IndexSet::full(2), value: int(-2) }));
        let v = is_p(&m).unwrap();
        // first failing minor is the zero diagonal
        assert_eq!(v.witness, Some(Witness::Minor { alpha: IndexSet::new(2, &[0]).unwrap(), value: int(0) }));
    }

    #[test]
    fn inverse_z_examples() {
        assert!(is_inverse_z(&fixtures::example_4x4_symmetric()).unwrap().member);
        assert!(is_inverse_z(&RatMatrix::identity(3)).unwrap().member);
        assert!(is_inverse_z(&RatMatrix::from_ints(&[[1, 1], [0, 1]])).unwrap().member);
        let m = RatMatrix::from_ints(&[[1, -1], [1, 1]]);
        let v = is_inverse_z(&m).unwrap();
        assert!(!v.member && v.revalidate(&m));
        let s = RatMatrix::from_ints(&[[1, 2], [2, 4]]);
        let v = is_inverse_z(&s).unwrap();
        assert_eq!(v.witness, Some(Witness::Singular));
        assert!(v.revalidate(&s));
    }

    #[test]
    fn structure_3x3() {
        let r = check_3x3_structure(&fixtures::e02_3x3(), Variant::E0).unwrap();
        assert!(r.pattern_ok() && r.minors_ok);
        assert_eq!(r.order_two_minors, vec![int(-2), int(-3), int(-4)]);

        let r = check_3x3_structure(&RatMatrix::identity(3), Variant::E0).unwrap();
        assert!(!r.pattern_ok());

        let r = check_3x3_structure(&fixtures::e2_3x3(), Variant::E).unwrap();
        assert!(r.diagonal_ok && r.minors_ok);
        assert_eq!(r.order_two_minors, vec![int(-3); 3]);

        assert!(matches!(
            check_3x3_structure(&RatMatrix::identity(4), Variant::E0),
            Err(Error::WrongOrder { found: 4, .. })
        ));
    }

    #[test]
    fn negative_entries() {
        let p = negative_entry_profile(&fixtures::example_4x4_symmetric()).unwrap();
        assert!(p.min_count() >= 2);
        let p = negative_entry_profile(&RatMatrix::identity(3)).unwrap();
        assert_eq!((p.rows.clone(), p.cols.clone()), (vec![0; 3], vec![0; 3]));
        let p = negative_entry_profile(&RatMatrix::from_ints(&[[0, -1], [-2, 0]])).unwrap();
        assert_eq!((p.rows, p.cols), (vec![1, 1], vec![1, 1]));
    }
}
