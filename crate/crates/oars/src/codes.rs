//! Linear codes over GF(s) and the duality with orthogonal arrays: the
//! codewords of C form an array whose strength is one less than the
//! minimum distance of the dual code.

use crate::error::{Error, Result};
use crate::galois::{FieldElement, GaloisField};
use crate::oa::OrthogonalArray;

/// Cap on the number of codewords enumerated anywhere in this module.
pub const WORD_CAP: u128 = 1 << 20;

/// A linear [n, dim] code over GF(q), held as a full-rank generator
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: GaloisField,
    dim: usize,
    length: usize,
    generator: Vec<FieldElement>, // dim x length row-major
}

/// Reduced row echelon form over GF(q) with smallest-index pivoting.
/// Returns the pivot columns; `m` is reduced in place.
fn rref(
    field: &GaloisField,
    rows: usize,
    cols: usize,
    m: &mut [FieldElement],
) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(rank * cols + j, pivot_row * cols + j);
        }
        let inv = field.inv(m[rank * cols + col])?;
        for j in 0..cols {
            m[rank * cols + j] = field.mul(inv, m[rank * cols + j]);
        }
        for r in 0..rows {
            if r != rank && m[r * cols + col] != 0 {
                let f = m[r * cols + col];
                for j in 0..cols {
                    let sub = field.mul(f, m[rank * cols + j]);
                    m[r * cols + j] = field.sub(m[r * cols + j], sub);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(pivots)
}

impl LinearCode {
    /// Build from a dim x length row-major generator matrix. Rejects
    /// rank-deficient generators and codes with more than 2^20 words.
    pub fn from_generator(
        field: GaloisField,
        dim: usize,
        length: usize,
        generator: Vec<FieldElement>,
    ) -> Result<Self> {
        if dim == 0 || length == 0 || generator.len() != dim * length {
            return Err(Error::InvalidParams(format!(
                "generator shape {dim}x{length} does not match {} cells",
                generator.len()
            )));
        }
        let q = field.order() as u16;
        if generator.iter().any(|&v| v >= q) {
            return Err(Error::InvalidParams(format!(
                "generator entry outside GF({q})"
            )));
        }
        let words = (field.order() as u128).pow(dim as u32);
        if words > WORD_CAP {
            return Err(Error::ScaleExceeded(words));
        }
        let mut scratch = generator.clone();
        let pivots = rref(&field, dim, length, &mut scratch)?;
        if pivots.len() < dim {
            return Err(Error::RankDeficient);
        }
        Ok(LinearCode {
            field,
            dim,
            length,
            generator,
        })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generator(&self) -> &[FieldElement] {
        &self.generator
    }

    /// Number of codewords, q^dim.
    pub fn word_count(&self) -> u128 {
        (self.field.order() as u128).pow(self.dim as u32)
    }

    /// All q^dim codewords, in lexicographic message order.
    pub fn words(&self) -> Vec<Vec<FieldElement>> {
        let q = self.field.order() as u16;
        let mut out = Vec::with_capacity(self.word_count() as usize);
        let mut msg = vec![0u16; self.dim];
        loop {
            let mut word = vec![0u16; self.length];
            for (i, &mi) in msg.iter().enumerate() {
                if mi != 0 {
                    let row = &self.generator[i * self.length..(i + 1) * self.length];
                    for (w, &g) in word.iter_mut().zip(row) {
                        *w = self.field.add(*w, self.field.mul(mi, g));
                    }
                }
            }
            out.push(word);
            // lexicographic increment, most significant coordinate first
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if msg[i] + 1 < q {
                    msg[i] += 1;
                    for v in msg[i + 1..].iter_mut() {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Minimum distance: by linearity, the minimum Hamming weight over the
    /// nonzero codewords.
    pub fn min_distance(&self) -> Result<usize> {
        let words = self.words();
        if words.len() < 2 {
            return Err(Error::TooFewWords);
        }
        words
            .iter()
            .map(|w| w.iter().filter(|&&v| v != 0).count())
            .filter(|&w| w > 0)
            .min()
            .ok_or(Error::TooFewWords)
    }

    /// The dual code, from a basis of the null space of the generator.
    pub fn dual(&self) -> Result<LinearCode> {
        let n = self.length;
        if self.dim == n {
            return Err(Error::TooFewWords); // the dual is the zero code
        }
        let mut m = self.generator.clone();
        let pivots = rref(&self.field, self.dim, n, &mut m)?;
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut dual_gen = Vec::with_capacity(free.len() * n);
        for &f in &free {
            let mut x = vec![0u16; n];
            x[f] = 1;
            for (row, &p) in pivots.iter().enumerate() {
                // x_p = -coefficient of the free column in the reduced row
                x[p] = self.field.neg(m[row * n + f]);
            }
            dual_gen.extend(x);
        }
        LinearCode::from_generator(self.field.clone(), free.len(), n, dual_gen)
    }

    /// The codewords as an orthogonal array whose strength is exactly one
    /// less than the dual minimum distance.
    pub fn to_oa(&self) -> Result<OrthogonalArray> {
        let t = self.dual()?.min_distance()? - 1;
        let s = self.field.order();
        let cells = self.words().into_iter().flatten().collect();
        let a = OrthogonalArray::fixed_level(s, self.length, cells)?;
        if t == 0 {
            return Ok(a);
        }
        let a = a.assert_strength(t)?;
        if t < a.cols() && a.verify_strength(t + 1) {
            return Err(Error::Internal(format!(
                "strength exceeds the dual-distance value {t}"
            )));
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn binary_code(dim: usize, length: usize, gen: Vec<u16>) -> LinearCode {
        LinearCode::from_generator(GaloisField::new(2).unwrap(), dim, length, gen).unwrap()
    }

    #[test]
    fn golden_binary_code_words_and_distance() {
        let c = binary_code(3, 7, fixtures::code_7_8_4_generator());
        assert_eq!(c.word_count(), 8);
        let mut words = c.words();
        words.sort();
        let mut expect: Vec<Vec<u16>> = fixtures::code_7_8_4_words()
            .chunks(7)
            .map(|w| w.to_vec())
            .collect();
        expect.sort();
        assert_eq!(words, expect);
        assert_eq!(c.min_distance().unwrap(), 4);
    }

    #[test]
    fn dual_pair_spans_match() {
        let c = binary_code(3, 7, fixtures::code_7_8_4_generator());
        let d = c.dual().unwrap();
        assert_eq!((d.dim(), d.length()), (4, 7));
        assert_eq!(d.min_distance().unwrap(), 3);
        // same span as the published dual generator
        let d2 = binary_code(4, 7, fixtures::code_7_16_3_generator());
        let sorted = |x: &LinearCode| {
            let mut w = x.words();
            w.sort();
            w
        };
        assert_eq!(sorted(&d), sorted(&d2));
        // and duality is an involution on spans
        assert_eq!(sorted(&d.dual().unwrap()), sorted(&c));
        // |C| * |C-dual| = 2^7
        assert_eq!(c.word_count() * d.word_count(), 1 << 7);
    }

    #[test]
    fn code_array_duality() {
        let c = binary_code(3, 7, fixtures::code_7_8_4_generator());
        // dual distance 3 => strength 2
        let a = c.to_oa().unwrap();
        assert_eq!((a.runs(), a.cols()), (8, 7));
        assert_eq!(a.verified_strength(), Some(2));
        assert_eq!(a.max_strength(), 2);
        // the dual code: distance of C is 4 => strength 3
        let b = c.dual().unwrap().to_oa().unwrap();
        assert_eq!((b.runs(), b.cols()), (16, 7));
        assert_eq!(b.verified_strength(), Some(3));
        assert_eq!(b.max_strength(), 3);
    }

    #[test]
    fn min_distance_matches_pairwise_oracle() {
        let c = binary_code(3, 7, fixtures::code_7_8_4_generator());
        let words = c.words();
        let mut best = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let d = words[i]
                    .iter()
                    .zip(&words[j])
                    .filter(|(a, b)| a != b)
                    .count();
                best = best.min(d);
            }
        }
        assert_eq!(best, c.min_distance().unwrap());
    }

    #[test]
    fn ternary_parity_check_code() {
        let field = GaloisField::new(3).unwrap();
        let c = LinearCode::from_generator(field, 1, 3, vec![1, 1, 1]).unwrap();
        assert_eq!(c.min_distance().unwrap(), 3);
        let d = c.dual().unwrap();
        assert_eq!(d.word_count(), 9);
        assert_eq!(d.min_distance().unwrap(), 2);
        // zero-sum words form OA(9, 3^3, 2)
        let a = d.to_oa().unwrap();
        assert_eq!((a.runs(), a.cols()), (9, 3));
        assert_eq!(a.verified_strength(), Some(2));
    }

    #[test]
    fn rejects_bad_generators() {
        let field = GaloisField::new(2).unwrap();
        assert!(matches!(
            LinearCode::from_generator(field.clone(), 2, 3, vec![1, 0, 1, 1, 0, 1]),
            Err(Error::RankDeficient)
        ));
        assert!(matches!(
            LinearCode::from_generator(field.clone(), 21, 21, vec![0; 441]),
            Err(Error::ScaleExceeded(_))
        ));
        assert!(LinearCode::from_generator(field, 1, 2, vec![0, 2]).is_err());
    }
}
