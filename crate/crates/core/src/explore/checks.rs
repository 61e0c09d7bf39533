//! Conclusion checks run on search hits, and the independent re-checks a
//! failed conclusion must pass before it is reported.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::ratcore::{int, IndexSet, Poly, RatMatrix, Rational};
use crate::verify::inverse_block_formula;

/// Which re-checks a failed conclusion survived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Validation {
    /// The hit re-classifies into the target by an independent route.
    pub classifier: bool,
    /// The failed conclusion is reproduced by a second computation.
    pub audit: bool,
    /// The evidence checks out by direct substitution.
    pub substitution: bool,
}

impl Validation {
    pub fn all(&self) -> bool {
        self.classifier && self.audit && self.substitution
    }
}

/// What exactly went wrong, with enough data to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FindingKind {
    /// The block formula for `α` has a positive entry at global `(row, col)`.
    BlockNotZ { alpha: IndexSet, row: usize, col: usize },
    /// `A_αα` or its Schur complement is singular.
    BlockUndefined { alpha: IndexSet },
    NegativeEigenvalues { count: usize },
    DetNotNegative,
    Singular,
    /// `(A⁻¹)_{row,col} > 0` with `row ≠ col`.
    InverseNotZ { row: usize, col: usize },
    /// Row (or column) `index` has only `count` negative entries.
    FewNegatives { index: usize, is_row: bool, count: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub conclusion: String,
    pub evidence: String,
    pub kind: FindingKind,
}

pub(crate) fn is_z_by_scan(a: &RatMatrix) -> bool {
    let n = a.rows();
    (0..n).all(|i| (0..n).all(|j| i == j || !a[(i, j)].is_positive()))
}

fn first_positive_off_diagonal(m: &RatMatrix) -> Option<(usize, usize)> {
    let n = m.rows();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && m[(i, j)].is_positive())
}

pub(crate) fn conjecture_one(a: &RatMatrix) -> Result<Vec<Finding>> {
    let n = a.order()?;
    let mut out = Vec::new();
    for alpha in IndexSet::of_size(n, n - 1) {
        match inverse_block_formula(a, &alpha) {
            Ok(block) => {
                if let Some((i, j)) = first_positive_off_diagonal(&block) {
                    let members = alpha.members();
                    out.push(Finding {
                        conclusion: format!("block formula for {alpha} is a Z-matrix"),
                        evidence: format!("entry ({}, {}) = {}", members[i] + 1, members[j] + 1, block[(i, j)]),
                        kind: FindingKind::BlockNotZ { alpha, row: members[i], col: members[j] },
                    });
                }
            }
            Err(e) => out.push(Finding {
                conclusion: format!("block formula for {alpha} is defined"),
                evidence: e.to_string(),
                kind: FindingKind::BlockUndefined { alpha },
            }),
        }
    }
    let count = a.count_negative_eigenvalues()?;
    if count != 1 {
        out.push(Finding {
            conclusion: "exactly one negative eigenvalue".into(),
            evidence: format!("{count} negative eigenvalues"),
            kind: FindingKind::NegativeEigenvalues { count },
        });
    }
    Ok(out)
}

pub(crate) fn conjecture_two(a: &RatMatrix) -> Result<Vec<Finding>> {
    let mut out = Vec::new();
    let det = a.det()?;
    if !det.is_negative() {
        out.push(Finding {
            conclusion: "determinant negative".into(),
            evidence: det.to_string(),
            kind: FindingKind::DetNotNegative,
        });
    }
    match a.inverse() {
        Err(_) => out.push(Finding {
            conclusion: "inverse exists".into(),
            evidence: "singular".into(),
            kind: FindingKind::Singular,
        }),
        Ok(inv) => {
            if let Some((i, j)) = first_positive_off_diagonal(&inv) {
                out.push(Finding {
                    conclusion: "inverse is a Z-matrix".into(),
                    evidence: format!("inverse entry ({}, {}) = {}", i + 1, j + 1, inv[(i, j)]),
                    kind: FindingKind::InverseNotZ { row: i, col: j },
                });
            }
        }
    }
    Ok(out)
}

fn line_negatives(a: &RatMatrix, index: usize, is_row: bool) -> usize {
    let n = a.rows();
    (0..n).filter(|&t| if is_row { a[(index, t)].is_negative() } else { a[(t, index)].is_negative() }).count()
}

pub(crate) fn negative_entries(a: &RatMatrix, k: usize) -> Vec<Finding> {
    let n = a.rows();
    for is_row in [true, false] {
        for index in 0..n {
            let count = line_negatives(a, index, is_row);
            if count < k {
                let what = if is_row { "row" } else { "column" };
                return vec![Finding {
                    conclusion: format!("at least {k} negative entries in every row and column"),
                    evidence: format!("{what} {} has {count}", index + 1),
                    kind: FindingKind::FewNegatives { index, is_row, count, k },
                }];
            }
        }
    }
    Vec::new()
}

/// `det(xI − A)` from sums of principal minors: the coefficient of
/// `x^{n−k}` is `(−1)^k` times the sum of the order-`k` principal minors.
fn char_poly_by_minors(a: &RatMatrix) -> Option<Poly> {
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    for k in 1..=n {
        let mut e = Rational::zero();
        for alpha in IndexSet::of_size(n, k) {
            e += a.principal_submatrix(&alpha).ok()?.det().ok()?;
        }
        coeffs[n - k] = if k % 2 == 0 { e } else { -e };
    }
    Some(Poly::new(coeffs))
}

/// Laplace expansion along the first row.
fn det_by_expansion(a: &RatMatrix) -> Option<Rational> {
    let n = a.rows();
    let mut sum = Rational::zero();
    for j in 0..n {
        sum += &a[(0, j)] * a.cofactor(0, j).ok()?;
    }
    Some(sum)
}

fn unit(n: usize, j: usize) -> Vec<Rational> {
    (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

/// Column `col` of the inverse solves `Ax = e_col` and has a positive
/// entry at `row`.
fn inverse_column_positive(a: &RatMatrix, row: usize, col: usize) -> bool {
    let Ok(inv) = a.inverse() else { return false };
    let x: Vec<Rational> = (0..a.rows()).map(|i| inv[(i, col)].clone()).collect();
    row != col && a.mul_vec(&x) == unit(a.rows(), col) && x[row].is_positive()
}

/// Some nonzero `v` with `Av = 0`, taken from a column of the adjugate.
fn has_null_vector(a: &RatMatrix) -> bool {
    let Ok(adj) = a.adjugate() else { return false };
    let n = a.rows();
    (0..n).any(|j| {
        let v: Vec<Rational> = (0..n).map(|i| adj[(i, j)].clone()).collect();
        v.iter().any(|x| !x.is_zero()) && a.mul_vec(&v).iter().all(Zero::is_zero)
    })
}

impl FindingKind {
    pub(crate) fn audit(&self, a: &RatMatrix) -> bool {
        match self {
            FindingKind::BlockNotZ { row, col, .. } => a.inverse().is_ok_and(|inv| inv[(*row, *col)].is_positive()),
            FindingKind::BlockUndefined { alpha } => {
                a.principal_submatrix(alpha).is_ok_and(|b| det_by_expansion(&b).is_some_and(|d| d.is_zero()))
                    || det_by_expansion(a).is_some_and(|d| d.is_zero())
            }
            FindingKind::NegativeEigenvalues { count } => {
                char_poly_by_minors(a).is_some_and(|p| p.real_root_signs().negative == *count)
            }
            FindingKind::DetNotNegative | FindingKind::Singular => a.char_poly().is_ok_and(|p| {
                let c0 = &p.coefficients()[0];
                let det = if a.rows() % 2 == 0 { c0.clone() } else { -c0.clone() };
                match self {
                    FindingKind::Singular => det.is_zero(),
                    _ => !det.is_negative(),
                }
            }),
            FindingKind::InverseNotZ { row, col } => match (a.adjugate(), a.det()) {
                (Ok(adj), Ok(det)) if !det.is_zero() => (&adj[(*row, *col)] / &det).is_positive(),
                _ => false,
            },
            FindingKind::FewNegatives { index, is_row, count, .. } => {
                let rows = a.to_rows();
                let line: Vec<&Rational> =
                    if *is_row { rows[*index].iter().collect() } else { rows.iter().map(|r| &r[*index]).collect() };
                line.iter().filter(|x| x.is_negative()).count() == *count
            }
        }
    }

    pub(crate) fn substitute(&self, a: &RatMatrix) -> bool {
        let n = a.rows();
        match self {
            FindingKind::BlockNotZ { row, col, .. } | FindingKind::InverseNotZ { row, col } => {
                inverse_column_positive(a, *row, *col)
            }
            FindingKind::BlockUndefined { alpha } => {
                // a singular block, or a singular Schur complement (then A
                // itself is singular)
                a.principal_submatrix(alpha).is_ok_and(|b| has_null_vector(&b)) || has_null_vector(a)
            }
            FindingKind::Singular => has_null_vector(a),
            FindingKind::NegativeEigenvalues { .. } => {
                // The polynomial used for the count agrees with det(xI − A)
                // at n + 1 points, which pins it down.
                let Ok(p) = a.char_poly() else { return false };
                (0..=n as i64).all(|t| {
                    let x = int(t - (n as i64) / 2);
                    let shifted = &RatMatrix::identity(n).scale(&x) - a;
                    det_by_expansion(&shifted).is_some_and(|d| d == p.as_poly().eval(&x))
                })
            }
            FindingKind::DetNotNegative => det_by_expansion(a).is_some_and(|d| !d.is_negative()),
            FindingKind::FewNegatives { count, k, .. } => count < k,
        }
    }
}
