//! Mutually orthogonal Latin squares and their equivalence with
//! strength-2 orthogonal arrays OA(s^2, s^(k+2), 2).

use crate::error::{Error, Result};
use crate::oa::OrthogonalArray;

/// A set of Latin squares of a common order, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquareSet {
    order: usize,
    squares: Vec<Vec<u16>>,
}

impl LatinSquareSet {
    /// Validates that every square is Latin: each row and each column is a
    /// permutation of 0..s-1.
    pub fn new(order: usize, squares: Vec<Vec<u16>>) -> Result<Self> {
        if order < 2 || squares.is_empty() {
            return Err(Error::InvalidParams(
                "need order >= 2 and at least one square".into(),
            ));
        }
        for (idx, sq) in squares.iter().enumerate() {
            if sq.len() != order * order {
                return Err(Error::ShapeMismatch(format!(
                    "square {idx} has {} cells, expected {}",
                    sq.len(),
                    order * order
                )));
            }
            for line in 0..order {
                let mut row_seen = vec![false; order];
                let mut col_seen = vec![false; order];
                for i in 0..order {
                    for (seen, v) in [
                        (&mut row_seen, sq[line * order + i]),
                        (&mut col_seen, sq[i * order + line]),
                    ] {
                        let v = v as usize;
                        if v >= order || seen[v] {
                            return Err(Error::InvalidParams(format!(
                                "square {idx} is not Latin at line {line}"
                            )));
                        }
                        seen[v] = true;
                    }
                }
            }
        }
        Ok(LatinSquareSet { order, squares })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn count(&self) -> usize {
        self.squares.len()
    }

    pub fn square(&self, idx: usize) -> &[u16] {
        &self.squares[idx]
    }
}

/// True iff every pair of squares is orthogonal: superimposing them yields
/// each ordered value pair exactly once. Returns the offending pair
/// otherwise.
pub fn verify_mols(set: &LatinSquareSet) -> Result<()> {
    let s = set.order();
    for a in 0..set.count() {
        for b in a + 1..set.count() {
            let mut seen = vec![false; s * s];
            for cell in 0..s * s {
                let key = set.square(a)[cell] as usize * s + set.square(b)[cell] as usize;
                if seen[key] {
                    return Err(Error::NotMols(a, b));
                }
                seen[key] = true;
            }
        }
    }
    Ok(())
}

/// k mutually orthogonal Latin squares of order s give a verified
/// OA(s^2, s^(k+2), 2): one run per cell, with the row index, column
/// index, and the k superimposed values as factors.
pub fn mols_to_oa(set: &LatinSquareSet) -> Result<OrthogonalArray> {
    verify_mols(set)?;
    let s = set.order();
    let k = set.count();
    let mut cells = Vec::with_capacity(s * s * (k + 2));
    for r in 0..s {
        for c in 0..s {
            cells.push(r as u16);
            cells.push(c as u16);
            for sq in 0..k {
                cells.push(set.square(sq)[r * s + c]);
            }
        }
    }
    OrthogonalArray::fixed_level(s, k + 2, cells)?.assert_strength(2)
}

/// Converse direction: an OA(s^2, s^(k+2), 2) with k >= 1 yields k
/// mutually orthogonal Latin squares, reading the first two columns as
/// cell coordinates. Fails with `NotConvertible` if the coordinate pairs
/// do not enumerate the s x s grid exactly once.
pub fn oa_to_mols(a: &OrthogonalArray) -> Result<LatinSquareSet> {
    let s = a
        .fixed_levels()
        .ok_or_else(|| Error::NotConvertible("array is not fixed-level".into()))?;
    if a.runs() != s * s || a.cols() < 3 {
        return Err(Error::NotConvertible(format!(
            "need s^2 = {} runs and at least 3 columns, got {} x {}",
            s * s,
            a.runs(),
            a.cols()
        )));
    }
    if !a.verify_strength(2) {
        return Err(Error::NotConvertible(
            "array does not have strength 2".into(),
        ));
    }
    let k = a.cols() - 2;
    let mut squares = vec![vec![u16::MAX; s * s]; k];
    let mut filled = vec![false; s * s];
    for row in a.rows() {
        let cell = row[0] as usize * s + row[1] as usize;
        if filled[cell] {
            return Err(Error::NotConvertible(format!(
                "coordinate pair ({}, {}) repeats",
                row[0], row[1]
            )));
        }
        filled[cell] = true;
        for (sq, &v) in squares.iter_mut().zip(&row[2..]) {
            sq[cell] = v;
        }
    }
    let set = LatinSquareSet::new(s, squares)?;
    verify_mols(&set)?;
    Ok(set)
}
