use num_traits::{One, Signed, Zero};

use crate::ratcore::{RatMatrix, Rational};

/// Finds `x ≥ 0` with `A x ≤ b`, or proves there is none.
///
/// Phase 1 of the simplex method on the standard-form system
/// `A x + s = b`, `x, s ≥ 0`. Rows with `b_i < 0` are negated and receive an
/// artificial variable; the sum of artificials is minimized with Bland's
/// rule, and the system is feasible iff the optimum is exactly zero.
pub fn find_nonneg_solution(a: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let (m, k) = (a.rows(), a.cols());
    assert_eq!(b.len(), m, "right-hand side length must match row count");
    if b.iter().all(|x| !x.is_negative()) {
        return Some(vec![Rational::zero(); k]);
    }

    let art_rows: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let width = k + m + art_rows.len();
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); width];
        let flip = b[i].is_negative();
        for j in 0..k {
            row[j] = if flip { -&a[(i, j)] } else { a[(i, j)].clone() };
        }
        row[k + i] = if flip { -Rational::one() } else { Rational::one() };
        if flip {
            let slot = k + m + art_rows.iter().position(|&r| r == i).unwrap();
            row[slot] = Rational::one();
            basis.push(slot);
            rhs.push(-&b[i]);
        } else {
            basis.push(k + i);
            rhs.push(b[i].clone());
        }
        tab.push(row);
    }

    // Reduced costs of the phase-1 objective and its current value.
    let mut cost = vec![Rational::zero(); width];
    for j in k + m..width {
        cost[j] = Rational::one();
    }
    let mut value = Rational::zero();
    for &i in &art_rows {
        for j in 0..width {
            cost[j] -= &tab[i][j];
        }
        value += &rhs[i];
    }

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((r, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*r]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-1 objective is bounded below by zero.
        let (row, _) = leave.expect("phase-1 objective cannot be unbounded");
        pivot(&mut tab, &mut rhs, &mut cost, &mut value, row, enter);
        basis[row] = enter;
    }

    if !value.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &var) in basis.iter().enumerate() {
        if var < k {
            x[var] = rhs[i].clone();
        }
    }
    Some(x)
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    value: &mut Rational,
    row: usize,
    col: usize,
) {
    let p = tab[row][col].recip();
    for x in tab[row].iter_mut() {
        *x *= &p;
    }
    rhs[row] *= &p;
    let pivot_row = tab[row].clone();
    let pivot_rhs = rhs[row].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, y) in r.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        rhs[i] -= &f * &pivot_rhs;
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        // objective value changes by reduced cost times the step length
        *value += &f * &pivot_rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, rat};

    fn check(a: &RatMatrix, b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (lhs, rhs) in a.mul_vec(x).iter().zip(b) {
            assert!(lhs <= rhs, "{lhs} > {rhs}");
        }
    }

    #[test]
    fn trivially_feasible_origin() {
        let a = RatMatrix::from_ints(&[[1, 2], [3, 4]]);
        let b = [int(0), int(1)];
        let x = find_nonneg_solution(&a, &b).unwrap();
        assert_eq!(x, vec![int(0), int(0)]);
    }

    #[test]
    fn needs_phase_one() {
        // x1 + x2 >= 3, x1 <= 1, x2 <= 5/2
        let a = RatMatrix::from_ints(&[[-1, -1], [1, 0], [0, 1]]);
        let b = [int(-3), int(1), rat(5, 2)];
        let x = find_nonneg_solution(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn detects_infeasible() {
        // x1 >= 2 and x1 <= 1
        let a = RatMatrix::from_ints(&[[-1], [1]]);
        assert!(find_nonneg_solution(&a, &[int(-2), int(1)]).is_none());
        // x >= 0 with -x <= -1 and x <= -1/2
        assert!(find_nonneg_solution(&a, &[int(-1), rat(-1, 2)]).is_none());
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's cycling example rewritten as a feasibility system with a
        // forcing row; Bland's rule must terminate.
        let a = RatMatrix::from_rows(vec![
            vec![rat(1, 4), int(-8), int(-1), int(9)],
            vec![rat(1, 2), int(-12), rat(-1, 2), int(3)],
            vec![int(0), int(0), int(1), int(0)],
            vec![rat(-3, 4), int(20), rat(-1, 2), int(6)],
        ])
        .unwrap();
        let b = [int(0), int(0), int(1), int(-1)];
        let x = find_nonneg_solution(&a, &b).unwrap();
        check(&a, &b, &x);
    }
}
