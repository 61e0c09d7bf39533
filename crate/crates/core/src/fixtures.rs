//! Named example matrices from the literature on semimonotone matrices of
//! exact order `k`, with the classifications they are known to have.

use crate::ratcore::{int, rat, RatMatrix};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub matrix: RatMatrix,
}

fn m(rows: Vec<Vec<crate::Rational>>) -> RatMatrix {
    RatMatrix::from_rows(rows).expect("fixture rows are rectangular")
}

/// 3×3 semimonotone matrix of exact order 2 with zero diagonal.
pub fn e02_3x3() -> RatMatrix {
    RatMatrix::from_ints(&[[0, -1, -1], [-2, 0, -1], [-3, -4, 0]])
}

/// Symmetric 3×3 strictly semimonotone matrix of exact order 2.
pub fn e2_3x3() -> RatMatrix {
    RatMatrix::from_ints(&[[1, -2, -2], [-2, 1, -2], [-2, -2, 1]])
}

/// Symmetric 4×4 E0 exact order 2 matrix that is not a Z-matrix but has a
/// Z-matrix inverse.
pub fn example_4x4_symmetric() -> RatMatrix {
    m(vec![
        vec![int(1), rat(1, 2), int(-1), int(-1)],
        vec![rat(1, 2), int(1), int(-1), int(-1)],
        vec![int(-1), int(-1), int(1), int(0)],
        vec![int(-1), int(-1), int(0), int(1)],
    ])
}

pub fn example_4x4_symmetric_inverse() -> RatMatrix {
    m(vec![
        vec![rat(4, 5), rat(-6, 5), rat(-2, 5), rat(-2, 5)],
        vec![rat(-6, 5), rat(4, 5), rat(-2, 5), rat(-2, 5)],
        vec![rat(-2, 5), rat(-2, 5), rat(1, 5), rat(-4, 5)],
        vec![rat(-2, 5), rat(-2, 5), rat(-4, 5), rat(1, 5)],
    ])
}

/// Non-symmetric variant of [`example_4x4_symmetric`] with `a₂₁ = 1/3`.
pub fn example_4x4_asymmetric() -> RatMatrix {
    m(vec![
        vec![int(1), rat(1, 2), int(-1), int(-1)],
        vec![rat(1, 3), int(1), int(-1), int(-1)],
        vec![int(-1), int(-1), int(1), int(0)],
        vec![int(-1), int(-1), int(0), int(1)],
    ])
}

pub fn example_4x4_asymmetric_inverse() -> RatMatrix {
    m(vec![
        vec![rat(2, 3), int(-1), rat(-1, 3), rat(-1, 3)],
        vec![rat(-10, 9), rat(2, 3), rat(-4, 9), rat(-4, 9)],
        vec![rat(-4, 9), rat(-1, 3), rat(2, 9), rat(-7, 9)],
        vec![rat(-4, 9), rat(-1, 3), rat(-7, 9), rat(2, 9)],
    ])
}

/// 4×4 E0 exact order 3 (so every off-diagonal entry is negative).
pub fn exact_order_three_4x4() -> RatMatrix {
    RatMatrix::from_ints(&[[1, -2, -3, -2], [-3, 1, -2, -3], [-2, -3, 1, -4], [-3, -2, -3, 1]])
}

/// 5×5 E0 exact order 3.
pub fn exact_order_three_5x5() -> RatMatrix {
    m(vec![
        vec![int(1), rat(-1, 2), int(-1), int(-1), int(-1)],
        vec![int(0), int(1), int(-1), int(-1), int(-1)],
        vec![int(-1), int(-1), int(1), int(-1), int(-1)],
        vec![int(-1), int(-1), int(-1), int(1), int(0)],
        vec![int(-1), int(-1), int(-1), int(0), int(1)],
    ])
}

/// 4×4 E0 exact order 2.
pub fn exact_order_two_4x4() -> RatMatrix {
    m(vec![
        vec![int(1), rat(1, 2), int(-1), int(-1)],
        vec![int(0), int(1), int(-1), int(-1)],
        vec![int(-1), int(-1), int(1), int(0)],
        vec![int(-1), int(-1), int(0), int(1)],
    ])
}

/// 5×5 E0 exact order 2.
pub fn exact_order_two_5x5() -> RatMatrix {
    m(vec![
        vec![int(1), int(0), int(0), int(-1), int(-1)],
        vec![int(-1), int(2), int(0), int(0), int(-1)],
        vec![int(-1), rat(-1, 2), int(1), int(0), int(0)],
        vec![int(0), int(-1), int(-1), int(1), int(0)],
        vec![int(0), rat(-1, 2), rat(-1, 2), int(-1), int(1)],
    ])
}

/// Left operand of the sum/product non-closure pair (the right one is
/// [`e2_3x3`]).
pub fn nonclosure_left() -> RatMatrix {
    RatMatrix::from_ints(&[[10, -1, -1], [-1, 0, -1], [-1, -1, 0]])
}

pub fn nonclosure_sum() -> RatMatrix {
    RatMatrix::from_ints(&[[11, -3, -3], [-3, 1, -3], [-3, -3, 1]])
}

pub fn nonclosure_product() -> RatMatrix {
    RatMatrix::from_ints(&[[14, -19, -19], [1, 4, 1], [1, 1, 4]])
}

/// Zero diagonal, `−1` off the diagonal; E0 exact order 2.
pub fn zero_diagonal_minus_ones_3x3() -> RatMatrix {
    RatMatrix::from_ints(&[[0, -1, -1], [-1, 0, -1], [-1, -1, 0]])
}

/// Nonnegative matrix with a single `1` in position (1,2).
pub fn single_entry_nonnegative_3x3() -> RatMatrix {
    RatMatrix::from_ints(&[[0, 1, 0], [0, 0, 0], [0, 0, 0]])
}

pub fn nonnegative_perturbation_sum() -> RatMatrix {
    RatMatrix::from_ints(&[[0, 0, -1], [-1, 0, -1], [-1, -1, 0]])
}

/// Copositive of exact order 2 but not E0 exact order 2.
pub fn copositive_order_two_upper() -> RatMatrix {
    RatMatrix::from_ints(&[[0, -1, -1], [0, 0, -1], [0, 0, 0]])
}

/// Strictly copositive of exact order 2 but not E exact order 2.
pub fn strictly_copositive_order_two_upper() -> RatMatrix {
    RatMatrix::from_ints(&[[1, -3, -3], [0, 1, -3], [0, 0, 1]])
}

/// Every named square fixture.
pub fn all() -> Vec<Fixture> {
    let f = |name, description, matrix| Fixture { name, description, matrix };
    vec![
        f("e02_3x3", "E0 exact order 2, zero diagonal", e02_3x3()),
        f("e2_3x3", "E exact order 2, symmetric", e2_3x3()),
        f("example_4x4_symmetric", "E0 exact order 2, not Z, inverse Z", example_4x4_symmetric()),
        f("example_4x4_asymmetric", "E0 exact order 2, not Z, not symmetric", example_4x4_asymmetric()),
        f("exact_order_three_4x4", "E0 exact order 3", exact_order_three_4x4()),
        f("exact_order_three_5x5", "E0 exact order 3", exact_order_three_5x5()),
        f("exact_order_two_4x4", "E0 exact order 2", exact_order_two_4x4()),
        f("exact_order_two_5x5", "E0 exact order 2", exact_order_two_5x5()),
        f("nonclosure_left", "E0 exact order 2", nonclosure_left()),
        f("nonclosure_sum", "not E0 exact order 2", nonclosure_sum()),
        f("nonclosure_product", "not E0 exact order 2", nonclosure_product()),
        f("zero_diagonal_minus_ones_3x3", "E0 exact order 2", zero_diagonal_minus_ones_3x3()),
        f("nonnegative_perturbation_sum", "not E0 exact order 2", nonnegative_perturbation_sum()),
        f("copositive_order_two_upper", "copositive exact order 2", copositive_order_two_upper()),
        f("strictly_copositive_order_two_upper", "strictly copositive exact order 2", strictly_copositive_order_two_upper()),
    ]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}
