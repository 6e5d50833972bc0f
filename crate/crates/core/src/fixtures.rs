//! Small explicit matrix families with known properties, used as
//! verification fixtures.

use crate::gf::Field;
use crate::linalg::Matrix;

fn build(q: u64, mats: &[&[&[u32]]]) -> Vec<Matrix> {
    let field = Field::from_order(q).expect("fixture fields are valid");
    mats.iter()
        .map(|rows| {
            let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
            Matrix::from_rows(field.clone(), &rows).expect("fixture entries are valid")
        })
        .collect()
}

/// Basis of a 3-dimensional space of 3x3 matrices over GF(2) whose nonzero
/// elements are invertible; meets the staircase `[3,2,1]` in dimension 1.
pub fn unrestricted_3x3_a() -> Vec<Matrix> {
    build(
        2,
        &[
            &[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]],
            &[&[0, 1, 0], &[1, 1, 1], &[1, 1, 0]],
            &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]],
        ],
    )
}

/// As [`unrestricted_3x3_a`], but meeting `[3,2,1]` only in zero.
pub fn unrestricted_3x3_b() -> Vec<Matrix> {
    build(
        2,
        &[
            &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1]],
            &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
            &[&[0, 0, 1], &[1, 1, 0], &[1, 0, 1]],
        ],
    )
}

/// Generator of `unrestricted_3x3_a() ∩ F_2[[3,2,1]]`.
pub fn unrestricted_3x3_a_staircase() -> Matrix {
    build(2, &[&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]]).remove(0)
}

/// A 3-dimensional rank-2 space of shape `[3,2,1]` over GF(2).
pub fn staircase_rank2_a() -> Vec<Matrix> {
    build(
        2,
        &[
            &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 0]],
            &[&[1, 0, 1], &[0, 0, 1], &[0, 0, 0]],
            &[&[1, 1, 1], &[0, 0, 0], &[0, 0, 1]],
        ],
    )
}

/// Same shape and minimum rank as [`staircase_rank2_a`], different rank
/// distribution.
pub fn staircase_rank2_b() -> Vec<Matrix> {
    build(
        2,
        &[
            &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 0]],
            &[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]],
            &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]],
        ],
    )
}

/// A 2x2 rank-2 space of dimension 2 over GF(5).
pub fn gf5_rank2_pair() -> Vec<Matrix> {
    build(5, &[&[&[0, 1], &[3, 1]], &[&[3, 1], &[3, 4]]])
}

/// Block-diagonal doubling of [`gf5_rank2_pair`]: a rank-4 space of shape
/// `[4,4,2,2]`.
pub fn gf5_rank4_pair() -> Vec<Matrix> {
    build(
        5,
        &[
            &[&[0, 1, 0, 0], &[3, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 3, 1]],
            &[&[3, 1, 0, 0], &[3, 4, 0, 0], &[0, 0, 3, 1], &[0, 0, 3, 4]],
        ],
    )
}

/// Three 5x5 matrices over GF(3) of shape `[5,5,5,3,3]` spanning a space in
/// which every nonzero element is invertible.
pub fn gf3_invertible_triple() -> Vec<Matrix> {
    build(
        3,
        &[
            &[
                &[1, 2, 1, 0, 0],
                &[0, 0, 0, 1, 0],
                &[1, 0, 1, 0, 0],
                &[0, 0, 0, 1, 1],
                &[0, 0, 1, 0, 0],
            ],
            &[
                &[1, 0, 1, 0, 1],
                &[2, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0],
                &[0, 0, 1, 1, 0],
                &[0, 0, 0, 1, 0],
            ],
            &[
                &[0, 0, 0, 1, 0],
                &[0, 1, 0, 0, 0],
                &[1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1],
            ],
        ],
    )
}

/// Three upper-triangular 4x4 matrices over GF(2) spanning a rank-3 space.
pub fn triangular_rank3_gf2() -> Vec<Matrix> {
    build(
        2,
        &[
            &[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]],
            &[&[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1], &[0, 0, 0, 0]],
            &[&[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 1]],
        ],
    )
}
