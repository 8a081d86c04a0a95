//! The generalized Kronecker product over GF(s) and the recursive
//! expansion that combines two strength-2 arrays into one with
//! (s-1) m1 m2 + m1 + m2 factors.

use crate::error::{Error, Result};
use crate::galois::GaloisField;
use crate::oa::OrthogonalArray;

/// Generalized Kronecker product A (*) B with entrywise group addition:
/// the rows of B are partitioned into one block per row of A, and block i
/// of the result is a_i (x) B_i. The result has as many rows as all the
/// blocks together and m1 * m2 columns.
pub fn generalized_kronecker(
    field: &GaloisField,
    a: &OrthogonalArray,
    b_blocks: &[OrthogonalArray],
) -> Result<OrthogonalArray> {
    let s = field.order();
    if b_blocks.len() != a.runs() {
        return Err(Error::PartitionMismatch {
            expected: a.runs(),
            got: b_blocks.len(),
        });
    }
    if a.fixed_levels() != Some(s) {
        return Err(Error::GroupMismatch(format!(
            "A has levels {:?}, expected all {s}",
            a.levels()
        )));
    }
    let m2 = b_blocks[0].cols();
    for (i, b) in b_blocks.iter().enumerate() {
        if b.cols() != m2 {
            return Err(Error::ShapeMismatch(format!(
                "block {i} has {} columns, expected {m2}",
                b.cols()
            )));
        }
        if b.fixed_levels() != Some(s) {
            return Err(Error::GroupMismatch(format!(
                "block {i} has levels {:?}, expected all {s}",
                b.levels()
            )));
        }
    }
    let m1 = a.cols();
    let rows: usize = b_blocks.iter().map(|b| b.runs()).sum();
    let mut cells = Vec::with_capacity(rows * m1 * m2);
    for (i, block) in b_blocks.iter().enumerate() {
        let ai = a.row(i);
        for brow in block.rows() {
            for &aj in ai {
                for &bl in brow {
                    cells.push(field.add(aj, bl));
                }
            }
        }
    }
    OrthogonalArray::fixed_level(s, m1 * m2, cells)
}

/// Split an array into `n` equal consecutive row blocks.
pub fn split_rows(b: &OrthogonalArray, n: usize) -> Result<Vec<OrthogonalArray>> {
    if n == 0 || !b.runs().is_multiple_of(n) {
        return Err(Error::ShapeMismatch(format!(
            "{} rows cannot be split into {n} equal blocks",
            b.runs()
        )));
    }
    let per = b.runs() / n;
    (0..n)
        .map(|i| {
            let mut cells = Vec::with_capacity(per * b.cols());
            for r in i * per..(i + 1) * per {
                cells.extend_from_slice(b.row(r));
            }
            OrthogonalArray::new(b.levels().to_vec(), cells)
        })
        .collect()
}

/// Recursive expansion: from A = OA(n1, s^m1, 2) (or a single balanced
/// column when m1 = 1) and B = OA(n2, s^m2, 2) split into n1 equal blocks
/// that are each strength-2 arrays, build
///
/// E = [A (*) (alpha_1 B), ..., A (*) (alpha_{s-1} B), B, A (x) 0],
///
/// a verified OA(n2, s^((s-1) m1 m2 + m1 + m2), 2). Field elements
/// alpha_g are taken in element-index order.
pub fn he_expand(a: &OrthogonalArray, b: &OrthogonalArray) -> Result<OrthogonalArray> {
    let s = a
        .fixed_levels()
        .ok_or_else(|| Error::PreconditionViolated("A is not fixed-level".into()))?;
    if b.fixed_levels() != Some(s) {
        return Err(Error::PreconditionViolated(format!(
            "B has levels {:?}, expected all {s}",
            b.levels()
        )));
    }
    let field = GaloisField::new(s)?;
    let required_strength = if a.cols() == 1 { 1 } else { 2 };
    if !a.verify_strength(required_strength) {
        return Err(Error::PreconditionViolated(format!(
            "A is not a strength-{required_strength} array"
        )));
    }
    let (n1, n2) = (a.runs(), b.runs());
    if n2 % n1 != 0 {
        return Err(Error::PreconditionViolated(format!(
            "n1 = {n1} does not divide n2 = {n2}"
        )));
    }
    let blocks = split_rows(b, n1)?;
    for (i, block) in blocks.iter().enumerate() {
        if !block.verify_strength(2) {
            return Err(Error::PreconditionViolated(format!(
                "row block {i} of B is not a strength-2 array"
            )));
        }
    }

    let (m1, m2) = (a.cols(), b.cols());
    let k = (s - 1) * m1 * m2 + m1 + m2;
    let mut columns: Vec<Vec<u16>> = Vec::with_capacity(k);
    let push_array = |columns: &mut Vec<Vec<u16>>, arr: &OrthogonalArray| {
        for j in 0..arr.cols() {
            columns.push((0..arr.runs()).map(|r| arr.get(r, j)).collect());
        }
    };

    // D_1 .. D_{s-1}: A (*) (alpha_g B)
    for g in 1..s as u16 {
        let scaled: Vec<OrthogonalArray> = blocks
            .iter()
            .map(|blk| {
                let cells = blk
                    .rows()
                    .flat_map(|row| row.iter().map(|&v| field.mul(g, v)))
                    .collect();
                OrthogonalArray::fixed_level(s, m2, cells)
            })
            .collect::<Result<_>>()?;
        let d = generalized_kronecker(&field, a, &scaled)?;
        push_array(&mut columns, &d);
    }
    // D_s: B itself
    push_array(&mut columns, b);
    // D_{s+1}: A (x) 0, each row of A repeated n2/n1 times
    let per = n2 / n1;
    for j in 0..m1 {
        let mut col = Vec::with_capacity(n2);
        for i in 0..n1 {
            col.extend(std::iter::repeat_n(a.get(i, j), per));
        }
        columns.push(col);
    }

    let mut cells = Vec::with_capacity(n2 * k);
    for r in 0..n2 {
        for col in &columns {
            cells.push(col[r]);
        }
    }
    OrthogonalArray::fixed_level(s, k, cells)?.assert_strength(2)
}
