//! Difference schemes over the additive group of GF(s), and the two
//! Kronecker-style expansions that turn them into strength-2 orthogonal
//! arrays.

use crate::error::{Error, Result};
use crate::galois::GaloisField;
use crate::oa::OrthogonalArray;

/// An r x c matrix over the additive group of GF(s) in which the entrywise
/// difference of any two distinct columns contains each group element
/// exactly r/s times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceScheme {
    field: GaloisField,
    rows: usize,
    cols: usize,
    cells: Vec<u16>, // row-major
}

impl DifferenceScheme {
    /// Build from row-major cells, checking ranges and the difference
    /// property.
    pub fn new(field: GaloisField, rows: usize, cols: usize, cells: Vec<u16>) -> Result<Self> {
        if rows == 0 || cols == 0 || cells.len() != rows * cols {
            return Err(Error::InvalidScheme(format!(
                "shape {rows}x{cols} does not match {} cells",
                cells.len()
            )));
        }
        let s = field.order() as u16;
        if let Some(&v) = cells.iter().find(|&&v| v >= s) {
            return Err(Error::InvalidScheme(format!(
                "entry {v} outside the group of order {s}"
            )));
        }
        if !verify_difference_scheme(rows, cols, &cells, &field) {
            return Err(Error::InvalidScheme(
                "column-pair difference property fails".into(),
            ));
        }
        Ok(DifferenceScheme {
            field,
            rows,
            cols,
            cells,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn group_order(&self) -> usize {
        self.field.order()
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn get(&self, row: usize, col: usize) -> u16 {
        self.cells[row * self.cols + col]
    }
}

/// True iff every pair of distinct columns of the r x c matrix has
/// entrywise differences hitting each group element equally often.
/// A single-column matrix passes vacuously.
pub fn verify_difference_scheme(
    rows: usize,
    cols: usize,
    cells: &[u16],
    field: &GaloisField,
) -> bool {
    let s = field.order();
    if !rows.is_multiple_of(s) {
        return cols < 2;
    }
    let lambda = rows / s;
    for a in 0..cols {
        for b in a + 1..cols {
            let mut counts = vec![0usize; s];
            for r in 0..rows {
                let d = field.sub(cells[r * cols + a], cells[r * cols + b]);
                counts[d as usize] += 1;
            }
            if counts.iter().any(|&c| c != lambda) {
                return false;
            }
        }
    }
    true
}

/// The multiplication table of GF(s) as a difference scheme D(s, s, s).
pub fn gf_difference_scheme(s: usize) -> Result<DifferenceScheme> {
    let field = GaloisField::new(s)?;
    let mut cells = Vec::with_capacity(s * s);
    for i in field.elements() {
        for j in field.elements() {
            cells.push(field.mul(i, j));
        }
    }
    DifferenceScheme::new(field, s, s, cells)
}

/// Stack the translates D + sigma for every group element sigma, giving an
/// OA(rs, s^c, 2). With `add_column`, a further column cycling through the
/// group within each block is appended, giving OA(rs, s^(c+1), 2).
pub fn ds_expand(d: &DifferenceScheme, add_column: bool) -> Result<OrthogonalArray> {
    let field = d.field();
    let s = field.order();
    let (r, c) = (d.rows(), d.cols());
    let out_cols = if add_column { c + 1 } else { c };
    let mut cells = Vec::with_capacity(r * s * out_cols);
    for sigma in field.elements() {
        for row in 0..r {
            for col in 0..c {
                cells.push(field.add(d.get(row, col), sigma));
            }
            if add_column {
                // r is a multiple of s, so the block position mod s cycles
                // through the whole group within every block
                cells.push((row % s) as u16);
            }
        }
    }
    OrthogonalArray::fixed_level(s, out_cols, cells)?.assert_strength(2)
}

/// Kronecker composition B (x) D with group addition: the block at (i, j)
/// is b_ij + D. Requires B to be a verified strength-2 array over the same
/// group as D; yields OA(Nr, s^(kc), 2).
pub fn kronecker_oa(b: &OrthogonalArray, d: &DifferenceScheme) -> Result<OrthogonalArray> {
    let field = d.field();
    let s = field.order();
    if b.fixed_levels() != Some(s) {
        return Err(Error::GroupMismatch(format!(
            "array levels {:?} do not match the group of order {s}",
            b.levels()
        )));
    }
    if b.cols() < 2 || !b.verify_strength(2) {
        return Err(Error::GroupMismatch(
            "composition requires a strength-2 array".into(),
        ));
    }
    let (n, k) = (b.runs(), b.cols());
    let (r, c) = (d.rows(), d.cols());
    let mut cells = Vec::with_capacity(n * r * k * c);
    for bi in 0..n {
        for dr in 0..r {
            for bj in 0..k {
                for dc in 0..c {
                    cells.push(field.add(b.get(bi, bj), d.get(dr, dc)));
                }
            }
        }
    }
    OrthogonalArray::fixed_level(s, k * c, cells)?.assert_strength(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn gf_schemes_pass_exhaustive_check() {
        for s in [2usize, 3, 4, 5, 9] {
            let d = gf_difference_scheme(s).unwrap();
            assert_eq!((d.rows(), d.cols()), (s, s));
        }
        assert!(gf_difference_scheme(6).is_err());
    }

    #[test]
    fn gf2_table() {
        let d = gf_difference_scheme(2).unwrap();
        let got: Vec<u16> = (0..2)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .map(|(r, c)| d.get(r, c))
            .collect();
        assert_eq!(got, vec![0, 0, 0, 1]);
    }

    #[test]
    fn golden_9_9_3_scheme() {
        let (field, cells) = fixtures::difference_scheme_9_9_3();
        assert!(verify_difference_scheme(9, 9, &cells, &field));
        // perturbing one cell breaks the property
        let mut bad = cells.clone();
        bad[10] = (bad[10] + 1) % 3;
        assert!(!verify_difference_scheme(9, 9, &bad, &field));
        // a single column is vacuously a scheme
        let one_col: Vec<u16> = (0..9).map(|r| cells[r * 9]).collect();
        assert!(verify_difference_scheme(9, 1, &one_col, &field));
    }

    #[test]
    fn expand_golden_scheme() {
        let (field, cells) = fixtures::difference_scheme_9_9_3();
        let d = DifferenceScheme::new(field, 9, 9, cells).unwrap();
        let a = ds_expand(&d, true).unwrap();
        assert_eq!((a.runs(), a.cols()), (27, 10));
        assert_eq!(a.verified_strength(), Some(2));
    }

    #[test]
    fn expand_small_schemes() {
        let d = gf_difference_scheme(2).unwrap();
        let a = ds_expand(&d, true).unwrap();
        assert_eq!((a.runs(), a.cols()), (4, 3));
        assert!(a.verify_strength(2));

        // D(s,s,s) with the extra column meets Rao's bound with equality
        let d = gf_difference_scheme(3).unwrap();
        let a = ds_expand(&d, true).unwrap();
        assert_eq!((a.runs(), a.cols()), (9, 4));
        let rao = crate::bounds::rao_bound(4, 3, 2).unwrap();
        assert_eq!(rao, num_bigint::BigInt::from(a.runs()));
    }

    #[test]
    fn kronecker_compositions() {
        let d2 = gf_difference_scheme(2).unwrap();
        let b = ds_expand(&d2, true).unwrap(); // OA(4, 2^3, 2)
        let a = kronecker_oa(&b, &d2).unwrap();
        assert_eq!((a.runs(), a.cols()), (8, 6));

        let d3 = gf_difference_scheme(3).unwrap();
        let b = ds_expand(&d3, true).unwrap(); // OA(9, 3^4, 2)
        let a = kronecker_oa(&b, &d3).unwrap();
        assert_eq!((a.runs(), a.cols()), (27, 12));
    }

    #[test]
    fn kronecker_rejects_bad_inputs() {
        let d3 = gf_difference_scheme(3).unwrap();
        // wrong level count
        let b2 = ds_expand(&gf_difference_scheme(2).unwrap(), true).unwrap();
        assert!(matches!(
            kronecker_oa(&b2, &d3),
            Err(Error::GroupMismatch(_))
        ));
        // a single balanced column has strength 1 only
        let col = OrthogonalArray::fixed_level(3, 1, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            kronecker_oa(&col, &d3),
            Err(Error::GroupMismatch(_))
        ));
    }
}
