//! The Rao-Hamming family OA(s^n, s^((s^n - 1)/(s - 1)), 2) for prime
//! powers s and n >= 2.

use crate::error::{Error, Result};
use crate::galois::GaloisField;
use crate::oa::OrthogonalArray;

/// Rows are the s^n points x of GF(s)^n in lexicographic order; columns
/// are the normalized nonzero direction vectors c (first nonzero
/// coordinate equal to 1) in lexicographic order, one column of values
/// x . c per direction. The result meets Rao's bound with equality and is
/// verified to strength 2 before return.
pub fn rao_hamming(s: usize, n: usize) -> Result<OrthogonalArray> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "rao_hamming requires n >= 2, got {n}"
        )));
    }
    let field = GaloisField::new(s)?;
    let runs = s
        .checked_pow(n as u32)
        .ok_or(Error::InvalidParams("s^n overflows".into()))?;
    if runs > 1 << 20 {
        return Err(Error::InvalidParams(format!(
            "s^n = {runs} exceeds the cap of 2^20"
        )));
    }

    // lexicographic tuples of GF(s)^n, most significant coordinate first
    let tuples = |count: usize| -> Vec<Vec<u16>> {
        let mut out = Vec::with_capacity(count);
        let mut cur = vec![0u16; n];
        loop {
            out.push(cur.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if (cur[i] as usize) + 1 < s {
                    cur[i] += 1;
                    for v in cur[i + 1..].iter_mut() {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    };

    let points = tuples(runs);
    let directions: Vec<&Vec<u16>> = points
        .iter()
        .filter(|z| z.iter().find(|&&v| v != 0) == Some(&1))
        .collect();
    let cols = (runs - 1) / (s - 1);
    debug_assert_eq!(directions.len(), cols);

    let mut cells = Vec::with_capacity(runs * cols);
    for x in &points {
        for c in &directions {
            let mut dot = 0u16;
            for (&xi, &ci) in x.iter().zip(c.iter()) {
                dot = field.add(dot, field.mul(xi, ci));
            }
            cells.push(dot);
        }
    }
    OrthogonalArray::fixed_level(s, cols, cells)?.assert_strength(2)
}
