//! The orthogonal-array data model: strength verification for fixed and
//! mixed levels, projection, level collapsing, and the interchange format.
//!
//! Interchange format (ASCII, LF line endings): lines starting with `#`
//! are comments; the first data line is `N k`, the second holds the k
//! level counts, then N rows of k space-separated integers in `0..s_j-1`.
//! Serialization emits no trailing whitespace and a trailing LF.

use crate::error::{Error, Result};

/// An N x k array over per-column level sets, the central value type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    runs: usize,
    cols: usize,
    levels: Vec<usize>,
    cells: Vec<u16>, // row-major
    verified_strength: Option<usize>,
}

impl OrthogonalArray {
    /// Build an array from per-column level counts and row-major cells.
    /// Rejects degenerate shapes (N = 0, k = 0, any s_j < 2) and
    /// out-of-range cells.
    pub fn new(levels: Vec<usize>, cells: Vec<u16>) -> Result<Self> {
        let cols = levels.len();
        if cols == 0 {
            return Err(Error::Degenerate("k = 0".into()));
        }
        if let Some(j) = levels.iter().position(|&s| s < 2) {
            return Err(Error::Degenerate(format!(
                "column {j} has fewer than 2 levels"
            )));
        }
        if cells.is_empty() || !cells.len().is_multiple_of(cols) {
            return Err(Error::Degenerate(format!(
                "cell count {} is not a positive multiple of k = {cols}",
                cells.len()
            )));
        }
        let runs = cells.len() / cols;
        for (idx, &v) in cells.iter().enumerate() {
            let (row, col) = (idx / cols, idx % cols);
            if (v as usize) >= levels[col] {
                return Err(Error::Range {
                    row,
                    col,
                    value: v as usize,
                    levels: levels[col],
                });
            }
        }
        Ok(OrthogonalArray {
            runs,
            cols,
            levels,
            cells,
            verified_strength: None,
        })
    }

    /// Convenience constructor for fixed-level arrays.
    pub fn fixed_level(s: usize, cols: usize, cells: Vec<u16>) -> Result<Self> {
        Self::new(vec![s; cols], cells)
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Level count shared by every column, if the array is fixed-level.
    pub fn fixed_levels(&self) -> Option<usize> {
        let s = self.levels[0];
        self.levels.iter().all(|&x| x == s).then_some(s)
    }

    pub fn get(&self, row: usize, col: usize) -> u16 {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u16] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u16]> {
        self.cells.chunks(self.cols)
    }

    pub fn verified_strength(&self) -> Option<usize> {
        self.verified_strength
    }

    /// Verify strength `t` and return the array with `verified_strength`
    /// recorded, or an error naming the first failing subset.
    pub fn assert_strength(mut self, t: usize) -> Result<Self> {
        match self.strength_failure(t) {
            None => {
                self.verified_strength = Some(t);
                Ok(self)
            }
            Some(subset) => Err(Error::ConstructionInvalid(format!(
                "not strength {t}: unbalanced column subset {subset:?}"
            ))),
        }
    }

    /// True iff every N x t subarray contains each t-tuple exactly
    /// N / prod(s_j) times.
    pub fn verify_strength(&self, t: usize) -> bool {
        self.strength_failure(t).is_none()
    }

    /// First failing t-subset in lexicographic column order, or None if the
    /// array has strength t. Counts use one dense mixed-radix counter pass
    /// per subset.
    pub fn strength_failure(&self, t: usize) -> Option<Vec<usize>> {
        assert!(t >= 1 && t <= self.cols, "require 1 <= t <= k");
        let mut subset: Vec<usize> = (0..t).collect();
        loop {
            if !self.subset_balanced(&subset) {
                return Some(subset);
            }
            if !next_combination(&mut subset, self.cols) {
                return None;
            }
        }
    }

    fn subset_balanced(&self, cols: &[usize]) -> bool {
        let prod: usize = cols.iter().map(|&j| self.levels[j]).product();
        if !self.runs.is_multiple_of(prod) {
            return false;
        }
        let lambda = self.runs / prod;
        let mut counts = vec![0usize; prod];
        for row in self.rows() {
            let mut idx = 0usize;
            for &j in cols {
                idx = idx * self.levels[j] + row[j] as usize;
            }
            counts[idx] += 1;
        }
        counts.iter().all(|&c| c == lambda)
    }

    /// Largest t with strength t, or 0 if even t = 1 fails. Divisibility of
    /// the index prunes impossible t before any counting.
    pub fn max_strength(&self) -> usize {
        let mut sorted = self.levels.clone();
        sorted.sort_unstable();
        let mut cap = 0;
        let mut prod = 1usize;
        for &s in &sorted {
            match prod.checked_mul(s) {
                Some(p) if self.runs.is_multiple_of(p) => {
                    prod = p;
                    cap += 1;
                }
                _ => break,
            }
        }
        let mut best = 0;
        for t in 1..=cap.min(self.cols) {
            if self.verify_strength(t) {
                best = t;
            } else {
                break; // strength is monotone
            }
        }
        best
    }

    /// Column-subset array.
    pub fn project(&self, cols: &[usize]) -> Result<OrthogonalArray> {
        if cols.is_empty() {
            return Err(Error::EmptySelection);
        }
        if let Some(&j) = cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange(j, self.cols));
        }
        let levels = cols.iter().map(|&j| self.levels[j]).collect();
        let mut cells = Vec::with_capacity(self.runs * cols.len());
        for row in self.rows() {
            cells.extend(cols.iter().map(|&j| row[j]));
        }
        OrthogonalArray::new(levels, cells)
    }

    /// Cell-wise application of per-column collapse maps; N and k unchanged.
    pub fn collapse_levels(&self, maps: &[LevelCollapseMap]) -> Result<OrthogonalArray> {
        if maps.len() != self.cols {
            return Err(Error::BadCollapseMap(format!(
                "{} maps for {} columns",
                maps.len(),
                self.cols
            )));
        }
        for (j, map) in maps.iter().enumerate() {
            if map.domain() != self.levels[j] {
                return Err(Error::MapMismatch {
                    col: j,
                    map: map.domain(),
                    levels: self.levels[j],
                });
            }
        }
        let levels = maps.iter().map(|m| m.codomain()).collect();
        let mut cells = Vec::with_capacity(self.cells.len());
        for row in self.rows() {
            for (j, &v) in row.iter().enumerate() {
                cells.push(maps[j].apply(v));
            }
        }
        OrthogonalArray::new(levels, cells)
    }

    /// True iff all rows are distinct.
    pub fn is_simple(&self) -> bool {
        let mut rows: Vec<&[u16]> = self.rows().collect();
        rows.sort_unstable();
        rows.windows(2).all(|w| w[0] != w[1])
    }

    /// Parse the interchange format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut data_lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let (ln, header) = data_lines.next().ok_or(Error::Format {
            line: 0,
            msg: "empty input".into(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::Format {
                line: ln + 1,
                msg: "expected header `N k`".into(),
            });
        }
        let n: usize = parts[0].parse().map_err(|_| Error::Format {
            line: ln + 1,
            msg: format!("bad run count `{}`", parts[0]),
        })?;
        let k: usize = parts[1].parse().map_err(|_| Error::Format {
            line: ln + 1,
            msg: format!("bad column count `{}`", parts[1]),
        })?;
        let (ln2, level_line) = data_lines.next().ok_or(Error::Format {
            line: ln + 1,
            msg: "missing level-count line".into(),
        })?;
        let levels: Vec<usize> = level_line
            .split_whitespace()
            .map(|w| {
                w.parse().map_err(|_| Error::Format {
                    line: ln2 + 1,
                    msg: format!("bad level count `{w}`"),
                })
            })
            .collect::<Result<_>>()?;
        if levels.len() != k {
            return Err(Error::Format {
                line: ln2 + 1,
                msg: format!("expected {k} level counts, found {}", levels.len()),
            });
        }
        let mut cells: Vec<u16> = Vec::with_capacity(n * k);
        let mut rows_seen = 0;
        for (lnr, line) in data_lines {
            let row: Vec<u16> = line
                .split_whitespace()
                .map(|w| {
                    w.parse().map_err(|_| Error::Format {
                        line: lnr + 1,
                        msg: format!("bad cell `{w}`"),
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != k {
                return Err(Error::Format {
                    line: lnr + 1,
                    msg: format!("expected {k} cells, found {}", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if (v as usize) >= levels[j] {
                    return Err(Error::Range {
                        row: rows_seen,
                        col: j,
                        value: v as usize,
                        levels: levels[j],
                    });
                }
            }
            cells.extend(row);
            rows_seen += 1;
        }
        if rows_seen != n {
            return Err(Error::Format {
                line: text.lines().count(),
                msg: format!("expected {n} rows, found {rows_seen}"),
            });
        }
        OrthogonalArray::new(levels, cells)
    }

    /// Serialize to the interchange format, bit-exact: no trailing
    /// whitespace, trailing LF.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.runs, self.cols));
        let levels: Vec<String> = self.levels.iter().map(|s| s.to_string()).collect();
        out.push_str(&levels.join(" "));
        out.push('\n');
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Advance `c` to the next k-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - (k - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Per-column surjection from `0..s-1` onto `0..s0-1` with equal preimage
/// classes of size s/s0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCollapseMap {
    map: Vec<u16>,
    codomain: usize,
}

impl LevelCollapseMap {
    pub fn new(map: Vec<u16>) -> Result<Self> {
        let s = map.len();
        if s == 0 {
            return Err(Error::BadCollapseMap("empty map".into()));
        }
        let s0 = map.iter().map(|&v| v as usize + 1).max().unwrap();
        if !s.is_multiple_of(s0) {
            return Err(Error::BadCollapseMap(format!(
                "{s0} classes cannot partition {s} levels equally"
            )));
        }
        let class = s / s0;
        let mut counts = vec![0usize; s0];
        for &v in &map {
            counts[v as usize] += 1;
        }
        if counts.iter().any(|&c| c != class) {
            return Err(Error::BadCollapseMap(
                "preimage classes are not of equal size".into(),
            ));
        }
        Ok(LevelCollapseMap { map, codomain: s0 })
    }

    /// The identity map on `0..s-1`.
    pub fn identity(s: usize) -> Self {
        LevelCollapseMap {
            map: (0..s as u16).collect(),
            codomain: s,
        }
    }

    /// The map `a -> floor(a / block)` from `0..s-1` onto `0..s/block-1`.
    pub fn floor_div(s: usize, block: usize) -> Result<Self> {
        if block == 0 || !s.is_multiple_of(block) {
            return Err(Error::BadCollapseMap(format!(
                "block {block} does not divide {s} levels"
            )));
        }
        Self::new((0..s).map(|a| (a / block) as u16).collect())
    }

    pub fn domain(&self) -> usize {
        self.map.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn apply(&self, v: u16) -> u16 {
        self.map[v as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_golden_tables() {
        let a = fixtures::oa_8_runs_4_cols();
        assert_eq!((a.runs(), a.cols()), (8, 4));
        let m = fixtures::mixed_12_runs_5_cols();
        assert_eq!((m.runs(), m.cols()), (12, 5));
        assert_eq!(m.levels(), &[2, 2, 2, 2, 3]);
    }

    #[test]
    fn parse_rejects_out_of_range_cell() {
        let text = "2 2\n2 2\n0 0\n0 2\n";
        match OrthogonalArray::parse(text) {
            Err(Error::Range {
                row: 1,
                col: 1,
                value: 2,
                levels: 2,
            }) => {}
            other => panic!("expected RangeError, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_degenerate() {
        assert!(OrthogonalArray::parse("0 0\n\n").is_err());
        assert!(matches!(
            OrthogonalArray::new(vec![2, 1], vec![0, 0]),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn serialize_round_trip_is_bit_exact() {
        let a = fixtures::oa_12_runs_11_cols();
        let text = a.serialize();
        assert!(text.ends_with('\n'));
        assert!(!text.lines().any(|l| l.ends_with(' ')));
        let b = OrthogonalArray::parse(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.serialize(), text);
    }

    #[test]
    fn strengths_of_golden_tables() {
        let t1 = fixtures::oa_8_runs_4_cols();
        assert!(t1.verify_strength(3));
        assert!(!t1.verify_strength(4)); // lambda = 8/16 is not an integer
        assert_eq!(t1.max_strength(), 3);

        let t2 = fixtures::mixed_12_runs_5_cols();
        assert!(t2.verify_strength(2));
        assert_eq!(t2.max_strength(), 2);

        let t3 = fixtures::oa_12_runs_11_cols();
        assert_eq!(t3.max_strength(), 2);
    }

    #[test]
    fn constant_column_has_strength_zero() {
        let a = OrthogonalArray::new(vec![2], vec![0, 0, 0, 0]).unwrap();
        assert_eq!(a.max_strength(), 0);
    }

    #[test]
    fn projection_gives_factorial_replicates() {
        let t1 = fixtures::oa_8_runs_4_cols();
        let p = t1.project(&[0, 1, 2]).unwrap();
        let mut rows: Vec<Vec<u16>> = p.rows().map(|r| r.to_vec()).collect();
        rows.sort();
        rows.dedup();
        assert_eq!(rows.len(), 8); // each of the 8 triples once

        assert_eq!(t1.project(&[0, 1, 2, 3]).unwrap(), t1);

        // mixed array pair projection: each (2-level, 3-level) pair twice
        let t2 = fixtures::mixed_12_runs_5_cols();
        let p = t2.project(&[3, 4]).unwrap();
        let mut counts = [0usize; 6];
        for r in p.rows() {
            counts[r[0] as usize * 3 + r[1] as usize] += 1;
        }
        assert!(counts.iter().all(|&c| c == 2));
    }

    #[test]
    fn projection_errors() {
        let t1 = fixtures::oa_8_runs_4_cols();
        assert_eq!(t1.project(&[]).unwrap_err(), Error::EmptySelection);
        assert_eq!(t1.project(&[7]).unwrap_err(), Error::IndexOutOfRange(7, 4));
    }

    #[test]
    fn collapse_identity_and_mismatch() {
        let t1 = fixtures::oa_8_runs_4_cols();
        let ids = vec![LevelCollapseMap::identity(2); 4];
        assert_eq!(t1.collapse_levels(&ids).unwrap(), t1);

        let bad = vec![LevelCollapseMap::identity(3); 4];
        assert!(matches!(
            t1.collapse_levels(&bad),
            Err(Error::MapMismatch { col: 0, .. })
        ));
    }

    #[test]
    fn collapse_map_validation() {
        assert!(LevelCollapseMap::new(vec![0, 0, 1, 1]).is_ok());
        // unequal classes
        assert!(LevelCollapseMap::new(vec![0, 0, 0, 1]).is_err());
        // floor-div collapse of 8 levels to 2
        let m = LevelCollapseMap::floor_div(8, 4).unwrap();
        assert_eq!(m.codomain(), 2);
        assert_eq!(m.apply(3), 0);
        assert_eq!(m.apply(4), 1);
    }

    #[test]
    fn simple_rows() {
        assert!(fixtures::oa_8_runs_4_cols().is_simple());
        assert!(fixtures::oa_12_runs_11_cols().is_simple());
        let dup = OrthogonalArray::new(vec![2, 2], vec![0, 0, 0, 0]).unwrap();
        assert!(!dup.is_simple());
    }

    #[test]
    fn collapse_cannot_increase_distinct_rows() {
        let a = fixtures::sliced_16_runs_3_cols();
        let maps = vec![LevelCollapseMap::floor_div(4, 2).unwrap(); 3];
        let c = a.collapse_levels(&maps).unwrap();
        let count = |x: &OrthogonalArray| {
            let mut rows: Vec<Vec<u16>> = x.rows().map(|r| r.to_vec()).collect();
            rows.sort();
            rows.dedup();
            rows.len()
        };
        assert!(count(&c) <= count(&a));
    }
}
