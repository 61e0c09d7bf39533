use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::poly::{CharPoly, RootSigns};
use super::{IndexSet, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{} entries", rows * cols),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(RatMatrix { rows, cols, data })
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: format!("{cols} columns"),
                    found: format!("{} columns in row {}", row.len(), i + 1),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix { rows: n, cols, data })
    }

    /// Integer matrix from nested slices. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in entries.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Column vector.
    pub fn column(entries: &[Rational]) -> Self {
        RatMatrix { rows: entries.len(), cols: 1, data: entries.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix, or `NotSquare`.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, t: &Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * t).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `(A + Aᵀ) / 2`, which has the same quadratic form as `A`.
    pub fn symmetric_part(&self) -> Result<RatMatrix> {
        self.order()?;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        Ok((self + &self.transpose()).scale(&half))
    }

    /// `xᵀ A x`.
    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        super::dot(x, &self.mul_vec(x))
    }

    /// `A_{αβ}`: rows in `rows`, columns in `cols`, order preserved.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> RatMatrix {
        assert_eq!(rows.universe(), self.rows);
        assert_eq!(cols.universe(), self.cols);
        let (ri, ci) = (rows.members(), cols.members());
        let mut data = Vec::with_capacity(ri.len() * ci.len());
        for &i in &ri {
            for &j in &ci {
                data.push(self[(i, j)].clone());
            }
        }
        RatMatrix { rows: ri.len(), cols: ci.len(), data }
    }

    /// `A_{αα}`.
    pub fn principal_submatrix(&self, alpha: &IndexSet) -> Result<RatMatrix> {
        let n = self.order()?;
        if alpha.universe() != n {
            return Err(Error::DimensionMismatch {
                expected: format!("index set over {{1..{n}}}"),
                found: format!("index set over {{1..{}}}", alpha.universe()),
            });
        }
        if alpha.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        Ok(self.submatrix(alpha, alpha))
    }

    /// `P A Pᵀ` for the permutation sending index `i` to `perm[i]`.
    pub fn permute_similar(&self, perm: &[usize]) -> Result<RatMatrix> {
        let n = self.order()?;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidPermutation);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first scaled to integers by the lcm of its denominators,
    /// so the elimination runs on `BigInt` with exact divisions.
    pub fn det(&self) -> Result<Rational> {
        let n = self.order()?;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = self.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            m.push(self.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scale *= l;
        }
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        let d = if negate { -d } else { d };
        Ok(Rational::new(d, scale))
    }

    /// Signed cofactor `(-1)^{i+j} det A_{(i),(j)}` with row `i` and column
    /// `j` deleted.
    pub fn cofactor(&self, i: usize, j: usize) -> Result<Rational> {
        let n = self.order()?;
        let rows = IndexSet::with_members(n, &[i])?.complement();
        let cols = IndexSet::with_members(n, &[j])?.complement();
        let minor = self.submatrix(&rows, &cols).det()?;
        Ok(if (i + j) % 2 == 0 { minor } else { -minor })
    }

    /// Transposed cofactor matrix; `A adj(A) = det(A) I` for every square `A`.
    pub fn adjugate(&self) -> Result<RatMatrix> {
        let n = self.order()?;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                adj[(j, i)] = self.cofactor(i, j)?;
            }
        }
        Ok(adj)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.order()?;
        let mut a = self.to_rows();
        let mut inv = Self::identity(n).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x *= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let da = &f * &a[col][c];
                    a[r][c] -= da;
                    let di = &f * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        RatMatrix::from_rows(inv)
    }

    /// `A / A_{αα} = A_{ᾱᾱ} − A_{ᾱα} A_{αα}⁻¹ A_{αᾱ}`.
    ///
    /// When `α` is the full index set the complement is empty and the
    /// result is the 0×0 matrix, whose determinant is 1.
    pub fn schur_complement(&self, alpha: &IndexSet) -> Result<RatMatrix> {
        let block = self.principal_submatrix(alpha)?;
        let block_inv = block.inverse().map_err(|e| match e {
            Error::SingularMatrix => Error::SingularBlock(alpha.to_string()),
            other => other,
        })?;
        let beta = alpha.complement();
        let a_bb = self.submatrix(&beta, &beta);
        let a_ba = self.submatrix(&beta, alpha);
        let a_ab = self.submatrix(alpha, &beta);
        Ok(&a_bb - &(&(&a_ba * &block_inv) * &a_ab))
    }

    pub fn char_poly(&self) -> Result<CharPoly> {
        CharPoly::of(self)
    }

    /// Number of negative eigenvalues, counted with algebraic multiplicity.
    pub fn count_negative_eigenvalues(&self) -> Result<usize> {
        Ok(self.eigenvalue_signs()?.negative)
    }

    /// Real eigenvalue counts by sign, with multiplicity.
    pub fn eigenvalue_signs(&self) -> Result<RootSigns> {
        Ok(self.char_poly()?.real_root_signs())
    }

    /// True iff the digraph with an edge `i → j` for every nonzero
    /// off-diagonal `a_ij` is strongly connected.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.order()?;
        if n <= 1 {
            return Ok(true);
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    let edge = if forward { &self[(u, v)] } else { &self[(v, u)] };
                    if u != v && !edge.is_zero() && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        Ok(reach(true) && reach(false))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;

    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;

    fn neg(self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix{:?}", self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

/// One row per line, entries right-aligned.
impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serialized as an array of rows of `"p/q"` strings.
impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, rat};

    fn e02() -> RatMatrix {
        RatMatrix::from_ints(&[[0, -1, -1], [-2, 0, -1], [-3, -4, 0]])
    }

    fn example_4x4() -> RatMatrix {
        RatMatrix::from_rows(vec![
            vec![int(1), rat(1, 2), int(-1), int(-1)],
            vec![rat(1, 2), int(1), int(-1), int(-1)],
            vec![int(-1), int(-1), int(1), int(0)],
            vec![int(-1), int(-1), int(0), int(1)],
        ])
        .unwrap()
    }

    /// Laplace expansion along the first row; test oracle only.
    fn det_cofactor(m: &RatMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        let rest = IndexSet::with_members(n, &[0]).unwrap().complement();
        (0..n).fold(Rational::zero(), |acc, j| {
            let cols = IndexSet::with_members(n, &[j]).unwrap().complement();
            let term = &m[(0, j)] * det_cofactor(&m.submatrix(&rest, &cols));
            if j % 2 == 0 { acc + term } else { acc - term }
        })
    }

    #[test]
    fn principal_submatrix_examples() {
        let i3 = RatMatrix::identity(3);
        let a = IndexSet::new(3, &[0, 2]).unwrap();
        assert_eq!(i3.principal_submatrix(&a).unwrap(), RatMatrix::identity(2));

        let a12 = IndexSet::new(3, &[0, 1]).unwrap();
        assert_eq!(e02().principal_submatrix(&a12).unwrap(), RatMatrix::from_ints(&[[0, -1], [-2, 0]]));

        let a34 = IndexSet::new(4, &[2, 3]).unwrap();
        assert_eq!(example_4x4().principal_submatrix(&a34).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn principal_submatrix_errors() {
        let m = RatMatrix::zeros(2, 3);
        assert!(matches!(m.principal_submatrix(&IndexSet::full(2)), Err(Error::NotSquare { .. })));
        let i3 = RatMatrix::identity(3);
        assert!(matches!(i3.principal_submatrix(&IndexSet::empty(3)), Err(Error::EmptyIndexSet)));
        assert!(matches!(i3.principal_submatrix(&IndexSet::full(4)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), int(1));
        assert_eq!(RatMatrix::from_ints(&[[0, -1], [-2, 0]]).det().unwrap(), int(-2));
        // Frozen from the cofactor oracle.
        assert_eq!(det_cofactor(&example_4x4()), rat(-5, 4));
        assert_eq!(example_4x4().det().unwrap(), rat(-5, 4));
        assert_eq!(e02().det().unwrap(), int(-11));
        assert!(matches!(RatMatrix::zeros(2, 3).det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn det_handles_zero_pivots_and_singular() {
        let m = RatMatrix::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(m.det().unwrap(), int(-1));
        let s = RatMatrix::from_ints(&[[1, 2], [2, 4]]);
        assert_eq!(s.det().unwrap(), int(0));
        assert_eq!(RatMatrix::zeros(0, 0).det().unwrap(), int(1));
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(RatMatrix::identity(3).adjugate().unwrap(), RatMatrix::identity(3));
        // Printed cofactor formulas at a=e=i=0, b=c=f=1, d=2, g=3, h=4.
        let (a, b, c, d, e, f, g, h, i) = (0i64, 1, 1, 2, 0, 1, 3, 4, 0);
        let printed = RatMatrix::from_ints(&[
            [e * i - f * h, b * i + c * h, b * f + c * e],
            [d * i + f * g, a * i - c * g, a * f + c * d],
            [d * h + e * g, a * h + b * g, a * e - b * d],
        ]);
        assert_eq!(printed, RatMatrix::from_ints(&[[-4, 4, 1], [3, -3, 2], [8, 3, -2]]));
        assert_eq!(e02().adjugate().unwrap(), printed);
    }

    #[test]
    fn inverse_examples() {
        let expected = RatMatrix::from_rows(vec![
            vec![rat(4, 5), rat(-6, 5), rat(-2, 5), rat(-2, 5)],
            vec![rat(-6, 5), rat(4, 5), rat(-2, 5), rat(-2, 5)],
            vec![rat(-2, 5), rat(-2, 5), rat(1, 5), rat(-4, 5)],
            vec![rat(-2, 5), rat(-2, 5), rat(-4, 5), rat(1, 5)],
        ])
        .unwrap();
        assert_eq!(example_4x4().inverse().unwrap(), expected);
        assert_eq!(RatMatrix::identity(4).inverse().unwrap(), RatMatrix::identity(4));
        let s = RatMatrix::from_ints(&[[1, 2], [2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn schur_complement_examples() {
        let a12 = IndexSet::new(3, &[0, 1]).unwrap();
        assert_eq!(RatMatrix::identity(3).schur_complement(&a12).unwrap(), RatMatrix::identity(1));
        // i - (g(ce+bf) + h(cd+af)) / (ae-bd) with the E0_2 example entries
        let (a, b, c, d, e, f, g, h, i) = (0i64, 1, 1, 2, 0, 1, 3, 4, 0);
        let closed = int(i) - rat(g * (c * e + b * f) + h * (c * d + a * f), a * e - b * d);
        assert_eq!(closed, rat(11, 2));
        let s = e02().schur_complement(&a12).unwrap();
        assert_eq!(s, RatMatrix::column(&[closed]));
        let sing = RatMatrix::from_ints(&[[1, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert!(matches!(sing.schur_complement(&a12), Err(Error::SingularBlock(_))));
    }

    #[test]
    fn char_poly_and_eigen_counts() {
        let cp = RatMatrix::from_ints(&[[0, -1], [-2, 0]]).char_poly().unwrap();
        assert_eq!(cp.coefficients(), &[int(-2), int(0), int(1)]);
        let cp = RatMatrix::identity(3).char_poly().unwrap();
        assert_eq!(cp.coefficients(), &[int(-1), int(3), int(-3), int(1)]);

        let minus_i3 = -&RatMatrix::identity(3);
        assert_eq!(minus_i3.count_negative_eigenvalues().unwrap(), 3);
        assert_eq!(RatMatrix::identity(3).count_negative_eigenvalues().unwrap(), 0);
        assert_eq!(e02().count_negative_eigenvalues().unwrap(), 1);
    }

    #[test]
    fn irreducibility() {
        let upper = RatMatrix::from_ints(&[[0, -1, -1], [0, 0, -1], [0, 0, 0]]);
        assert!(!upper.is_irreducible().unwrap());
        assert!(e02().is_irreducible().unwrap());
        assert!(RatMatrix::from_ints(&[[5]]).is_irreducible().unwrap());
        let cycle = RatMatrix::from_ints(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert!(cycle.is_irreducible().unwrap());
    }

    #[test]
    fn permutation_similarity() {
        let m = RatMatrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(m.permute_similar(&[1, 0]).unwrap(), RatMatrix::from_ints(&[[4, 3], [2, 1]]));
        assert!(matches!(m.permute_similar(&[0, 0]), Err(Error::InvalidPermutation)));
    }
}
