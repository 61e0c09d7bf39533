#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semimonotone::ratcore::rat;
use semimonotone::{RatMatrix, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn entry(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.random_range(-num..=num), rng.random_range(1..=den))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, num: i64, den: i64) -> RatMatrix {
    let rows = (0..n).map(|_| (0..n).map(|_| entry(rng, num, den)).collect()).collect();
    RatMatrix::from_rows(rows).unwrap()
}

pub fn random_z(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = entry(rng, 4, 3);
                    if i == j { x } else { -x.abs() }
                })
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows).unwrap()
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let x = entry(rng, 4, 2);
            rows[i][j] = x.clone();
            rows[j][i] = x;
        }
    }
    RatMatrix::from_rows(rows).unwrap()
}

/// Cofactor expansion along the first row.
pub fn laplace_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> =
            rows[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &rows[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn block(a: &RatMatrix, members: &[usize]) -> Vec<Vec<Rational>> {
    members.iter().map(|&i| members.iter().map(|&j| a.row(i)[j].clone()).collect()).collect()
}

/// All principal minors by expansion, keyed by bitmask.
pub fn principal_minors(a: &RatMatrix) -> Vec<(u32, Rational)> {
    let n = a.rows();
    (1u32..(1 << n))
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            (mask, laplace_det(&block(a, &members)))
        })
        .collect()
}

pub fn is_p0_by_expansion(a: &RatMatrix) -> bool {
    principal_minors(a).iter().all(|(_, m)| !m.is_negative())
}

pub fn off_diagonal_nonpositive(a: &RatMatrix) -> bool {
    (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || !a.row(i)[j].is_positive()))
}
