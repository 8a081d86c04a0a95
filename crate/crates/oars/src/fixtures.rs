//! Small classical arrays used across the test and example suites:
//! well-known orthogonal arrays, a difference scheme, a sliced array,
//! a strong orthogonal array, a grouped orthogonal array, and a pair of
//! dual binary codes.

use crate::galois::GaloisField;
use crate::oa::OrthogonalArray;

fn parse(text: &str) -> OrthogonalArray {
    OrthogonalArray::parse(text).expect("fixture parses")
}

/// The regular OA(8, 2^4, 3): the half fraction defined by
/// d1 + d2 + d3 + d4 = 0 (mod 2).
pub fn oa_8_runs_4_cols() -> OrthogonalArray {
    parse(
        "8 4\n2 2 2 2\n\
         0 0 0 0\n0 0 1 1\n0 1 0 1\n0 1 1 0\n\
         1 0 0 1\n1 0 1 0\n1 1 0 0\n1 1 1 1\n",
    )
}

/// A mixed OA(12, 2^4 3^1, 2).
pub fn mixed_12_runs_5_cols() -> OrthogonalArray {
    parse(
        "12 5\n2 2 2 2 3\n\
         0 0 0 0 0\n0 1 0 1 0\n1 0 1 0 0\n1 1 1 1 0\n\
         0 0 1 1 1\n0 1 1 0 1\n1 0 0 0 1\n1 1 0 1 1\n\
         0 0 1 1 2\n0 1 0 0 2\n1 0 0 1 2\n1 1 1 0 2\n",
    )
}

/// The 12-run Plackett-Burman array OA(12, 2^11, 2), a non-regular
/// two-level fraction.
pub fn oa_12_runs_11_cols() -> OrthogonalArray {
    parse(
        "12 11\n2 2 2 2 2 2 2 2 2 2 2\n\
         0 0 0 0 0 0 0 0 0 0 0\n\
         0 0 0 0 0 1 1 1 1 1 1\n\
         0 0 1 1 1 0 0 0 1 1 1\n\
         0 1 0 1 1 0 1 1 0 0 1\n\
         0 1 1 0 1 1 0 1 0 1 0\n\
         0 1 1 1 0 1 1 0 1 0 0\n\
         1 0 0 1 1 1 1 0 0 1 0\n\
         1 0 1 0 1 0 1 1 1 0 0\n\
         1 0 1 1 0 1 0 1 0 0 1\n\
         1 1 0 0 1 1 0 0 1 0 1\n\
         1 1 0 1 0 0 0 1 1 1 0\n\
         1 1 1 0 0 0 1 0 0 1 1\n",
    )
}

/// An OA(9, 3^4, 2) meeting Rao's bound with equality.
pub fn oa_9_runs_4_cols() -> OrthogonalArray {
    parse(
        "9 4\n3 3 3 3\n\
         0 0 0 0\n0 1 1 2\n0 2 2 1\n\
         1 0 1 1\n1 1 2 0\n1 2 0 2\n\
         2 0 2 2\n2 1 0 1\n2 2 1 0\n",
    )
}

/// One Latin hypercube obtainable from [`oa_9_runs_4_cols`] by the
/// level-expansion procedure (entries 1..9, each column a permutation).
pub fn lhc_9_runs_4_cols() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 3, 3],
        vec![2, 6, 4, 9],
        vec![3, 8, 7, 6],
        vec![4, 3, 6, 4],
        vec![5, 5, 9, 1],
        vec![6, 7, 1, 7],
        vec![7, 1, 8, 8],
        vec![8, 4, 2, 5],
        vec![9, 9, 5, 2],
    ]
}

/// A difference scheme D(9, 9, 3) over GF(3), as a 9x9 row-major matrix.
pub fn difference_scheme_9_9_3() -> (GaloisField, Vec<u16>) {
    let field = GaloisField::new(3).unwrap();
    let cells = vec![
        0, 0, 0, 0, 0, 0, 0, 0, 0, //
        0, 1, 2, 0, 1, 2, 0, 1, 2, //
        0, 2, 1, 0, 2, 1, 0, 2, 1, //
        0, 0, 0, 2, 2, 2, 1, 1, 1, //
        0, 1, 2, 2, 0, 1, 1, 2, 0, //
        0, 2, 1, 2, 1, 0, 1, 0, 2, //
        0, 0, 0, 1, 1, 1, 2, 2, 2, //
        0, 1, 2, 1, 2, 0, 2, 0, 1, //
        0, 2, 1, 1, 0, 2, 2, 1, 0,
    ];
    (field, cells)
}

/// An OA(16, 4^3, 2) that is also a balanced sliced array with four slices
/// of four rows (1-4, 5-8, 9-12, 13-16) under the collapse 0,1 -> 0 and
/// 2,3 -> 1, and a nested array with any one slice as the subarray.
pub fn sliced_16_runs_3_cols() -> OrthogonalArray {
    parse(
        "16 3\n4 4 4\n\
         0 0 0\n2 1 3\n1 3 2\n3 2 1\n\
         2 2 2\n0 3 1\n3 1 0\n1 0 3\n\
         1 1 1\n3 0 2\n0 2 3\n2 3 0\n\
         3 3 3\n1 2 0\n2 0 1\n0 1 2\n",
    )
}

/// A strong orthogonal array SOA(8, 8^3, 3) with s = 2, t = 3.
pub fn strong_8_runs_3_cols() -> OrthogonalArray {
    parse(
        "8 3\n8 8 8\n\
         0 0 0\n2 3 6\n3 6 2\n1 5 4\n\
         6 2 3\n4 1 5\n5 4 1\n7 7 7\n",
    )
}

/// A grouped orthogonal array: 27 runs, three-level, strength 2 overall,
/// with column groups (0-3), (4-6), (7-9) each of strength 3.
pub fn grouped_27_runs_10_cols() -> OrthogonalArray {
    parse(
        "27 10\n3 3 3 3 3 3 3 3 3 3\n\
         0 0 0 0 0 0 0 0 0 0\n\
         1 1 1 0 1 1 1 1 1 1\n\
         2 2 2 0 2 2 2 2 2 2\n\
         0 1 2 0 0 1 2 0 1 2\n\
         1 2 0 0 1 2 0 1 2 0\n\
         2 0 1 0 2 0 1 2 0 1\n\
         0 2 1 0 0 2 1 0 2 1\n\
         1 0 2 0 1 0 2 1 0 2\n\
         2 1 0 0 2 1 0 2 1 0\n\
         0 1 1 1 1 2 2 2 0 0\n\
         1 2 2 1 2 0 0 0 1 1\n\
         2 0 0 1 0 1 1 1 2 2\n\
         0 2 0 1 1 0 1 2 1 2\n\
         1 0 1 1 2 1 2 0 2 0\n\
         2 1 2 1 0 2 0 1 0 1\n\
         0 0 2 1 1 1 0 2 2 1\n\
         1 1 0 1 2 2 1 0 0 2\n\
         2 2 1 1 0 0 2 1 1 0\n\
         0 2 2 2 2 1 1 1 0 0\n\
         1 0 0 2 0 2 2 2 1 1\n\
         2 1 1 2 1 0 0 0 2 2\n\
         0 0 1 2 2 2 0 1 1 2\n\
         1 1 2 2 0 0 1 2 2 0\n\
         2 2 0 2 1 1 2 0 0 1\n\
         0 1 0 2 2 0 2 1 2 1\n\
         1 2 1 2 0 1 0 2 0 2\n\
         2 0 2 2 1 2 1 0 1 0\n",
    )
}

/// Three mutually orthogonal Latin squares of order 4, row-major.
pub fn mols_order_4() -> Vec<Vec<u16>> {
    vec![
        vec![0, 2, 3, 1, 3, 1, 0, 2, 1, 3, 2, 0, 2, 0, 1, 3],
        vec![0, 2, 3, 1, 1, 3, 2, 0, 2, 0, 1, 3, 3, 1, 0, 2],
        vec![0, 2, 3, 1, 2, 0, 1, 3, 3, 1, 0, 2, 1, 3, 2, 0],
    ]
}

/// Generator matrix of a (7, 8, 4)_2 binary code, 3x7 row-major.
pub fn code_7_8_4_generator() -> Vec<u16> {
    vec![
        1, 1, 1, 0, 1, 0, 0, //
        0, 1, 1, 1, 0, 1, 0, //
        0, 0, 1, 1, 1, 0, 1,
    ]
}

/// The eight codewords of the (7, 8, 4)_2 code, 8x7 row-major.
pub fn code_7_8_4_words() -> Vec<u16> {
    vec![
        0, 0, 0, 0, 0, 0, 0, //
        1, 1, 1, 0, 1, 0, 0, //
        0, 1, 1, 1, 0, 1, 0, //
        0, 0, 1, 1, 1, 0, 1, //
        1, 0, 0, 1, 1, 1, 0, //
        0, 1, 0, 0, 1, 1, 1, //
        1, 0, 1, 0, 0, 1, 1, //
        1, 1, 0, 1, 0, 0, 1,
    ]
}

/// Generator matrix of the dual (7, 16, 3)_2 code, 4x7 row-major.
pub fn code_7_16_3_generator() -> Vec<u16> {
    vec![
        1, 0, 1, 1, 0, 0, 0, //
        0, 1, 0, 1, 1, 0, 0, //
        0, 0, 1, 0, 1, 1, 0, //
        0, 0, 0, 1, 0, 1, 1,
    ]
}
