//! Balanced incomplete block designs as 0/1 incidence matrices, the
//! Hadamard route to symmetric designs, and the complement and residual
//! derivations.

use crate::error::{Error, Result};

use super::hadamard::HadamardMatrix;

/// The v x b incidence matrix of a BIBD(v, b, r, k, lambda): rows are
/// treatments, columns are blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    v: usize,
    b: usize,
    r: usize,
    k: usize,
    lambda: usize,
    cells: Vec<u8>, // row-major, 0/1
}

impl IncidenceMatrix {
    /// Build from row-major 0/1 cells, verifying constant replication r,
    /// constant block size k, and constant pairwise concurrence lambda.
    pub fn new(v: usize, b: usize, cells: Vec<u8>) -> Result<Self> {
        if v < 2 || b < 1 || cells.len() != v * b {
            return Err(Error::InvalidParams(format!(
                "shape {v}x{b} does not match {} cells",
                cells.len()
            )));
        }
        if cells.iter().any(|&c| c > 1) {
            return Err(Error::InvalidParams(
                "incidence cells must be 0 or 1".into(),
            ));
        }
        let row_sum =
            |i: usize| -> usize { cells[i * b..(i + 1) * b].iter().map(|&c| c as usize).sum() };
        let r = row_sum(0);
        if (1..v).any(|i| row_sum(i) != r) {
            return Err(Error::InvalidParams(
                "treatments are not equally replicated".into(),
            ));
        }
        let col_sum = |j: usize| -> usize { (0..v).map(|i| cells[i * b + j] as usize).sum() };
        let k = col_sum(0);
        if (1..b).any(|j| col_sum(j) != k) {
            return Err(Error::InvalidParams("blocks are not of equal size".into()));
        }
        if k == 0 || k >= v {
            return Err(Error::InvalidParams(format!(
                "block size {k} is not incomplete for {v} treatments"
            )));
        }
        let pair = |i1: usize, i2: usize| -> usize {
            (0..b)
                .filter(|&j| cells[i1 * b + j] == 1 && cells[i2 * b + j] == 1)
                .count()
        };
        let lambda = pair(0, 1);
        for i1 in 0..v {
            for i2 in i1 + 1..v {
                if pair(i1, i2) != lambda {
                    return Err(Error::InvalidParams(format!(
                        "treatments {i1} and {i2} do not meet lambda = {lambda}"
                    )));
                }
            }
        }
        Ok(IncidenceMatrix {
            v,
            b,
            r,
            k,
            lambda,
            cells,
        })
    }

    /// The design parameters (v, b, r, k, lambda).
    pub fn params(&self) -> (usize, usize, usize, usize, usize) {
        (self.v, self.b, self.r, self.k, self.lambda)
    }

    pub fn get(&self, treatment: usize, block: usize) -> u8 {
        self.cells[treatment * self.b + block]
    }

    /// True iff the design is symmetric (b = v, hence r = k).
    pub fn is_symmetric(&self) -> bool {
        self.v == self.b
    }
}

/// Normalize a Hadamard matrix of order N >= 8 so its first row and column
/// are all +1, delete both, and read +1 as incidence: a symmetric
/// BIBD(N-1, N-1, N/2-1, N/2-1, N/4-1).
pub fn hadamard_to_sbibd(h: &HadamardMatrix) -> Result<IncidenceMatrix> {
    let n = h.order();
    if n < 8 || !n.is_multiple_of(4) {
        return Err(Error::InvalidParams(format!(
            "need order >= 8 and a multiple of 4, got {n}"
        )));
    }
    // column signs that make the first row +1, then row signs that make the
    // first column +1
    let col_sign: Vec<i8> = (0..n).map(|j| h.get(0, j)).collect();
    let row_sign: Vec<i8> = (0..n).map(|i| h.get(i, 0) * col_sign[0]).collect();
    let mut cells = Vec::with_capacity((n - 1) * (n - 1));
    for (i, &rs) in row_sign.iter().enumerate().skip(1) {
        for (j, &cs) in col_sign.iter().enumerate().skip(1) {
            let v = h.get(i, j) * rs * cs;
            cells.push(if v == 1 { 1 } else { 0 });
        }
    }
    let d =
        IncidenceMatrix::new(n - 1, n - 1, cells).map_err(|e| Error::NotSbibd(e.to_string()))?;
    let expect = (n - 1, n - 1, n / 2 - 1, n / 2 - 1, n / 4 - 1);
    if d.params() != expect {
        return Err(Error::NotSbibd(format!(
            "parameters {:?} differ from the expected {expect:?}",
            d.params()
        )));
    }
    Ok(d)
}

/// Complementary design: swap incidence, giving
/// BIBD(v, b, b - r, v - k, b - 2r + lambda).
pub fn bibd_complement(d: &IncidenceMatrix) -> Result<IncidenceMatrix> {
    let (v, b, _, _, _) = d.params();
    let cells = (0..v * b).map(|idx| 1 - d.get(idx / b, idx % b)).collect();
    IncidenceMatrix::new(v, b, cells)
}

/// Residual design of a symmetric BIBD with respect to one block: delete
/// the block and every treatment it contains, giving
/// BIBD(v - k, b - 1, r, k - lambda, lambda).
pub fn bibd_residual(d: &IncidenceMatrix, block: usize) -> Result<IncidenceMatrix> {
    if !d.is_symmetric() {
        return Err(Error::NotSbibd(
            "residual designs require a symmetric BIBD".into(),
        ));
    }
    let (v, b, _, _, _) = d.params();
    if block >= b {
        return Err(Error::BlockIndexOutOfRange(block, b));
    }
    let kept_treatments: Vec<usize> = (0..v).filter(|&i| d.get(i, block) == 0).collect();
    let kept_blocks: Vec<usize> = (0..b).filter(|&j| j != block).collect();
    let mut cells = Vec::with_capacity(kept_treatments.len() * kept_blocks.len());
    for &i in &kept_treatments {
        for &j in &kept_blocks {
            cells.push(d.get(i, j));
        }
    }
    IncidenceMatrix::new(kept_treatments.len(), kept_blocks.len(), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{paley1, sylvester};

    #[test]
    fn fano_plane_from_hadamard() {
        for h in [sylvester(3).unwrap(), paley1(7).unwrap()] {
            let d = hadamard_to_sbibd(&h).unwrap();
            assert_eq!(d.params(), (7, 7, 3, 3, 1));
            assert!(d.is_symmetric());
        }
    }

    #[test]
    fn larger_symmetric_designs() {
        let d = hadamard_to_sbibd(&paley1(11).unwrap()).unwrap();
        assert_eq!(d.params(), (11, 11, 5, 5, 2));
        let d = hadamard_to_sbibd(&sylvester(4).unwrap()).unwrap();
        assert_eq!(d.params(), (15, 15, 7, 7, 3));
    }

    #[test]
    fn complement_of_fano() {
        let d = hadamard_to_sbibd(&sylvester(3).unwrap()).unwrap();
        let c = bibd_complement(&d).unwrap();
        assert_eq!(c.params(), (7, 7, 4, 4, 2));
        // complementing twice restores the design
        assert_eq!(bibd_complement(&c).unwrap(), d);
    }

    #[test]
    fn residual_of_fano() {
        let d = hadamard_to_sbibd(&sylvester(3).unwrap()).unwrap();
        for block in 0..7 {
            let r = bibd_residual(&d, block).unwrap();
            assert_eq!(r.params(), (4, 6, 3, 2, 1));
        }
        assert_eq!(
            bibd_residual(&d, 7).unwrap_err(),
            Error::BlockIndexOutOfRange(7, 7)
        );
    }

    #[test]
    fn residual_requires_symmetry() {
        let d = hadamard_to_sbibd(&sylvester(3).unwrap()).unwrap();
        let r = bibd_residual(&d, 0).unwrap();
        assert!(matches!(bibd_residual(&r, 0), Err(Error::NotSbibd(_))));
    }

    #[test]
    fn validation_rejects_unbalanced_incidence() {
        // 3 treatments, 3 blocks, one pair never together
        let cells = vec![
            1, 1, 0, //
            1, 0, 1, //
            0, 1, 1,
        ];
        assert!(IncidenceMatrix::new(3, 3, cells.clone()).is_ok());
        let mut bad = cells;
        bad[0] = 0;
        assert!(IncidenceMatrix::new(3, 3, bad).is_err());
        assert!(hadamard_to_sbibd(&sylvester(2).unwrap()).is_err());
    }
}
