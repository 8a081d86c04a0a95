//! Quality measures for two-level designs: J-characteristics, generalized
//! resolution, and the regularity test.
//!
//! The signed view maps level 0 to +1 and level 1 to -1. The choice is
//! harmless: flipping any column's sign leaves every |J| unchanged.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::oa::{next_combination, OrthogonalArray};

/// An N x k matrix over {+1, -1} derived from an all-two-level array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTwoLevelView {
    runs: usize,
    cols: usize,
    cells: Vec<i8>,
}

impl SignedTwoLevelView {
    pub fn from_oa(a: &OrthogonalArray) -> Result<Self> {
        if a.levels().iter().any(|&s| s != 2) {
            return Err(Error::NotTwoLevel);
        }
        let cells = a
            .rows()
            .flat_map(|r| r.iter().map(|&v| if v == 0 { 1i8 } else { -1i8 }))
            .collect();
        Ok(SignedTwoLevelView {
            runs: a.runs(),
            cols: a.cols(),
            cells,
        })
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn get(&self, row: usize, col: usize) -> i8 {
        self.cells[row * self.cols + col]
    }

    /// J(S) = |sum over rows of the product of the columns in S|.
    pub fn j_characteristic(&self, subset: &[usize]) -> Result<u64> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&j) = subset.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange(j, self.cols));
        }
        let mut sum: i64 = 0;
        for row in 0..self.runs {
            let mut prod: i64 = 1;
            for &j in subset {
                prod *= self.get(row, j) as i64;
            }
            sum += prod;
        }
        Ok(sum.unsigned_abs())
    }

    /// Maximum J over all m-subsets of columns.
    pub fn max_j(&self, m: usize) -> Result<u64> {
        if m == 0 || m > self.cols {
            return Err(Error::EmptySubset);
        }
        let mut subset: Vec<usize> = (0..m).collect();
        let mut best = 0;
        loop {
            best = best.max(self.j_characteristic(&subset)?);
            if !next_combination(&mut subset, self.cols) {
                break;
            }
        }
        Ok(best)
    }

    /// R = r + (1 - max J_r / N) for the smallest r with a nonzero J,
    /// as an exact rational with r <= R < r + 1.
    pub fn generalized_resolution(&self) -> Result<Ratio<i64>> {
        for r in 1..=self.cols {
            let max_j = self.max_j(r)?;
            if max_j > 0 {
                let n = self.runs as i64;
                return Ok(Ratio::from_integer(r as i64)
                    + (Ratio::from_integer(1) - Ratio::new(max_j as i64, n)));
            }
        }
        Err(Error::AllZeroJ(self.cols))
    }

    /// True iff J(S) is 0 or N for every nonempty subset S. Exhaustive over
    /// all 2^k - 1 subsets; refused for k > 20.
    pub fn is_regular(&self) -> Result<bool> {
        if self.cols > 20 {
            return Err(Error::TooManyColumns(self.cols));
        }
        let n = self.runs as u64;
        for mask in 1u32..(1u32 << self.cols) {
            let subset: Vec<usize> = (0..self.cols).filter(|j| mask >> j & 1 == 1).collect();
            let j = self.j_characteristic(&subset)?;
            if j != 0 && j != n {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn j_on_plackett_burman_triple() {
        let d = SignedTwoLevelView::from_oa(&fixtures::oa_12_runs_11_cols()).unwrap();
        // correlation 1/3 between column 3 and the interaction of 1 and 2
        assert_eq!(d.j_characteristic(&[0, 1, 2]).unwrap(), 4);
    }

    #[test]
    fn j_on_regular_half_fraction() {
        let d = SignedTwoLevelView::from_oa(&fixtures::oa_8_runs_4_cols()).unwrap();
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(d.j_characteristic(&[a, b]).unwrap(), 0);
            }
        }
        assert_eq!(d.j_characteristic(&[0, 1, 2, 3]).unwrap(), 8);
        assert!(matches!(d.j_characteristic(&[]), Err(Error::EmptySubset)));
    }

    /// Independent brute-force J over an m-subset, written against the raw
    /// 0/1 cells rather than the signed view.
    fn brute_j(a: &OrthogonalArray, subset: &[usize]) -> u64 {
        let mut sum: i64 = 0;
        for row in a.rows() {
            let ones: u32 = subset.iter().map(|&j| row[j] as u32).sum();
            sum += if ones.is_multiple_of(2) { 1 } else { -1 };
        }
        sum.unsigned_abs()
    }

    #[test]
    fn generalized_resolution_plackett_burman() {
        let a = fixtures::oa_12_runs_11_cols();
        let d = SignedTwoLevelView::from_oa(&a).unwrap();
        // exhaustive brute force over all 165 triples fixes max J_3 = 4
        let mut max = 0;
        for i in 0..11 {
            for j in i + 1..11 {
                for k in j + 1..11 {
                    max = max.max(brute_j(&a, &[i, j, k]));
                }
            }
        }
        assert_eq!(max, 4);
        assert_eq!(d.generalized_resolution().unwrap(), Ratio::new(11, 3));
    }

    #[test]
    fn generalized_resolution_regular() {
        let d = SignedTwoLevelView::from_oa(&fixtures::oa_8_runs_4_cols()).unwrap();
        assert_eq!(d.generalized_resolution().unwrap(), Ratio::from_integer(4));
    }

    #[test]
    fn full_factorial_has_no_resolution() {
        let mut cells = Vec::new();
        for r in 0..8u16 {
            cells.extend([r >> 2 & 1, r >> 1 & 1, r & 1]);
        }
        let a = OrthogonalArray::fixed_level(2, 3, cells).unwrap();
        let d = SignedTwoLevelView::from_oa(&a).unwrap();
        assert!(matches!(
            d.generalized_resolution(),
            Err(Error::AllZeroJ(3))
        ));
    }

    #[test]
    fn regularity() {
        let reg = SignedTwoLevelView::from_oa(&fixtures::oa_8_runs_4_cols()).unwrap();
        assert!(reg.is_regular().unwrap());
        let pb = SignedTwoLevelView::from_oa(&fixtures::oa_12_runs_11_cols()).unwrap();
        assert!(!pb.is_regular().unwrap()); // partial aliasing

        let single = OrthogonalArray::fixed_level(2, 1, vec![0, 1, 0, 1]).unwrap();
        assert!(SignedTwoLevelView::from_oa(&single)
            .unwrap()
            .is_regular()
            .unwrap());
    }

    #[test]
    fn rejects_mixed_levels() {
        let m = fixtures::mixed_12_runs_5_cols();
        assert!(matches!(
            SignedTwoLevelView::from_oa(&m),
            Err(Error::NotTwoLevel)
        ));
    }

    #[test]
    fn floor_resolution_matches_strength() {
        for a in [fixtures::oa_8_runs_4_cols(), fixtures::oa_12_runs_11_cols()] {
            let d = SignedTwoLevelView::from_oa(&a).unwrap();
            let r = d.generalized_resolution().unwrap();
            assert_eq!(r.floor().to_integer() as usize - 1, a.max_strength());
        }
    }
}
