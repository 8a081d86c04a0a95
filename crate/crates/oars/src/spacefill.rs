//! Space-filling derivatives of orthogonal arrays: array-based Latin
//! hypercubes, the rotation construction for orthogonal Latin hypercube
//! designs, and verifiers for sliced, nested, strong, strength-2+, and
//! grouped arrays.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oa::{next_combination, LevelCollapseMap, OrthogonalArray};

/// An N x k matrix in which every column is a permutation of 1..N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinHypercube {
    runs: usize,
    cols: usize,
    cells: Vec<usize>, // row-major, 1-based entries
    comments: Vec<String>,
}

impl LatinHypercube {
    /// Build from row-major 1-based cells, checking the per-column
    /// permutation property.
    pub fn new(runs: usize, cols: usize, cells: Vec<usize>) -> Result<Self> {
        if runs == 0 || cols == 0 || cells.len() != runs * cols {
            return Err(Error::ShapeMismatch(format!(
                "shape {runs}x{cols} does not match {} cells",
                cells.len()
            )));
        }
        for j in 0..cols {
            let mut seen = vec![false; runs];
            for i in 0..runs {
                let v = cells[i * cols + j];
                if v < 1 || v > runs || seen[v - 1] {
                    return Err(Error::ShapeMismatch(format!(
                        "column {j} is not a permutation of 1..{runs}"
                    )));
                }
                seen[v - 1] = true;
            }
        }
        Ok(LatinHypercube {
            runs,
            cols,
            cells,
            comments: Vec::new(),
        })
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.cols + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.cols)
    }

    /// Collapse back to an s-level array via u = ceil(l * s / N) - 1.
    pub fn collapse(&self, s: usize) -> Result<OrthogonalArray> {
        if s < 2 || !self.runs.is_multiple_of(s) {
            return Err(Error::InvalidParams(format!(
                "{s} levels do not divide {} runs",
                self.runs
            )));
        }
        let cells = self
            .cells
            .iter()
            .map(|&l| ((l * s).div_ceil(self.runs) - 1) as u16)
            .collect();
        OrthogonalArray::fixed_level(s, self.cols, cells)
    }

    /// Interchange-format serialization: every level count is N and the
    /// 1-based entries are shifted down by one, so the output parses back
    /// with [`OrthogonalArray::parse`]. Comment lines record how the design was generated
    /// such as the PRNG contract.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str(&format!("{} {}\n", self.runs, self.cols));
        let levels = vec![self.runs.to_string(); self.cols];
        out.push_str(&levels.join(" "));
        out.push('\n');
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| (v - 1).to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Expand an OA(N, s^k, t) into a Latin hypercube: in each column, the
/// N/s positions holding level u receive a random permutation of
/// u N/s + 1 .. (u+1) N/s.
///
/// PRNG contract: one ChaCha8 stream seeded with `seed` drives a
/// Fisher-Yates shuffle per (column, level) pair, columns outer, levels
/// inner; this contract is recorded in the serialization header.
pub fn oa_to_lhc(a: &OrthogonalArray, seed: u64) -> Result<LatinHypercube> {
    let s = a.fixed_levels().ok_or(Error::MixedLevelsUnsupported)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perms = Vec::with_capacity(a.cols());
    let per = a.runs() / s;
    for _ in 0..a.cols() {
        let mut col_perms = Vec::with_capacity(s);
        for u in 0..s {
            let mut p: Vec<usize> = (u * per + 1..=(u + 1) * per).collect();
            p.shuffle(&mut rng);
            col_perms.push(p);
        }
        perms.push(col_perms);
    }
    let mut l = oa_to_lhc_with(a, &perms)?;
    l.comments.push(format!(
        "prng: chacha8, fisher-yates per (column, level), seed {seed}"
    ));
    Ok(l)
}

/// Deterministic variant of [`oa_to_lhc`]: `perms[j][u]` lists the values
/// given, in row order, to the positions of column j holding level u.
pub fn oa_to_lhc_with(a: &OrthogonalArray, perms: &[Vec<Vec<usize>>]) -> Result<LatinHypercube> {
    let s = a.fixed_levels().ok_or(Error::MixedLevelsUnsupported)?;
    let (n, k) = (a.runs(), a.cols());
    if n % s != 0 {
        return Err(Error::InvalidParams(format!(
            "{s} levels do not divide {n} runs"
        )));
    }
    let per = n / s;
    if perms.len() != k || perms.iter().any(|c| c.len() != s) {
        return Err(Error::ShapeMismatch(format!("need {k} x {s} permutations")));
    }
    let mut cells = vec![0usize; n * k];
    for j in 0..k {
        let mut next = vec![0usize; s]; // per-level fill position
        for i in 0..n {
            let u = a.get(i, j) as usize;
            let p = &perms[j][u];
            if p.len() != per {
                return Err(Error::ShapeMismatch(format!(
                    "permutation for column {j} level {u} has length {}",
                    p.len()
                )));
            }
            cells[i * k + j] = p[next[u]];
            next[u] += 1;
        }
    }
    LatinHypercube::new(n, k, cells)
}

/// Rotation construction for orthogonal Latin hypercube designs. From
/// A = OA(n^2, n^(2f), 2) and an n x p matrix B whose columns are
/// permutations of the centered vector g_n (entries i - (n+1)/2), each
/// column b of B relabels A's symbols; consecutive column pairs of the
/// relabeled array are rotated by V = [[1, -n], [n, 1]]. The result is an
/// n^2 x 2pf matrix whose columns are permutations of the n^2 centered
/// values, with pairwise correlations governed by those of B.
pub fn lin_rotation_olhd(
    a: &OrthogonalArray,
    b_cols: &[Vec<Ratio<i64>>],
) -> Result<Vec<Vec<Ratio<i64>>>> {
    let n = a.fixed_levels().ok_or(Error::MixedLevelsUnsupported)?;
    if a.runs() != n * n || !a.cols().is_multiple_of(2) {
        return Err(Error::ShapeMismatch(format!(
            "need an n^2 x 2f array at n levels, got {} x {} at {n}",
            a.runs(),
            a.cols()
        )));
    }
    // g_n as rationals: i - (n+1)/2 for i = 1..n
    let mut g: Vec<Ratio<i64>> = (1..=n as i64)
        .map(|i| Ratio::new(2 * i - n as i64 - 1, 2))
        .collect();
    g.sort();
    for (j, col) in b_cols.iter().enumerate() {
        let mut sorted = col.clone();
        sorted.sort();
        if sorted != g {
            return Err(Error::NotFromGamma(j));
        }
    }
    let nq = Ratio::from_integer(n as i64);
    let rows = n * n;
    let f = a.cols() / 2;
    let mut out = vec![Vec::with_capacity(2 * b_cols.len() * f); rows];
    for b in b_cols {
        for pair in 0..f {
            for (i, row) in out.iter_mut().enumerate() {
                let c1 = b[a.get(i, 2 * pair) as usize];
                let c2 = b[a.get(i, 2 * pair + 1) as usize];
                row.push(c1 + c2 * nq); // (c1, c2) . first column of V^T
                row.push(-c1 * nq + c2);
            }
        }
    }
    Ok(out)
}

/// An ordered partition of row indices 0..N-1 into equal-size blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePartition {
    runs: usize,
    blocks: Vec<Vec<usize>>,
}

impl SlicePartition {
    /// Validates that the blocks are disjoint, cover 0..runs-1, and share
    /// one size.
    pub fn new(runs: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() || !runs.is_multiple_of(blocks.len()) {
            return Err(Error::BadPartition(format!(
                "{} blocks cannot partition {runs} rows equally",
                blocks.len()
            )));
        }
        let size = runs / blocks.len();
        let mut seen = vec![false; runs];
        for (i, block) in blocks.iter().enumerate() {
            if block.len() != size {
                return Err(Error::BadPartition(format!(
                    "block {i} has {} rows, expected {size}",
                    block.len()
                )));
            }
            for &r in block {
                if r >= runs || seen[r] {
                    return Err(Error::BadPartition(format!("row {r} missing or repeated")));
                }
                seen[r] = true;
            }
        }
        Ok(SlicePartition { runs, blocks })
    }

    /// v consecutive blocks of N/v rows.
    pub fn consecutive(runs: usize, v: usize) -> Result<Self> {
        if v == 0 || !runs.is_multiple_of(v) {
            return Err(Error::BadPartition(format!(
                "{v} blocks cannot partition {runs} rows equally"
            )));
        }
        let size = runs / v;
        Self::new(
            runs,
            (0..v)
                .map(|i| (i * size..(i + 1) * size).collect())
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Comment-header annotation, e.g. `# slices: 0-3 | 4-7`.
    pub fn comment_header(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("# slices: {}", parts.join(" | "))
    }
}

fn row_subarray(a: &OrthogonalArray, rows: &[usize]) -> Result<OrthogonalArray> {
    let mut cells = Vec::with_capacity(rows.len() * a.cols());
    for &r in rows {
        if r >= a.runs() {
            return Err(Error::IndexOutOfRange(r, a.runs()));
        }
        cells.extend_from_slice(a.row(r));
    }
    OrthogonalArray::new(a.levels().to_vec(), cells)
}

/// True iff every slice, collapsed per column by `maps`, is a strength-2
/// array at s0 levels; with `balanced`, each column of each slice must
/// additionally hit every original level equally often.
pub fn verify_sliced(
    a: &OrthogonalArray,
    p: &SlicePartition,
    maps: &[LevelCollapseMap],
    s0: usize,
    balanced: bool,
) -> Result<bool> {
    if p.runs != a.runs() {
        return Err(Error::BadPartition(format!(
            "partition covers {} rows, array has {}",
            p.runs,
            a.runs()
        )));
    }
    if maps.iter().any(|m| m.codomain() != s0) {
        return Err(Error::BadCollapseMap(format!(
            "every map must collapse onto {s0} levels"
        )));
    }
    for block in p.blocks() {
        let slice = row_subarray(a, block)?;
        if balanced {
            for j in 0..slice.cols() {
                let s = slice.levels()[j];
                if block.len() % s != 0 {
                    return Ok(false);
                }
                let mut counts = vec![0usize; s];
                for r in 0..slice.runs() {
                    counts[slice.get(r, j) as usize] += 1;
                }
                if counts.iter().any(|&c| c != block.len() / s) {
                    return Ok(false);
                }
            }
        }
        if !slice.collapse_levels(maps)?.verify_strength(2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the subarray on `rows`, collapsed per column by `maps`, is a
/// strength-2 array at s0 levels.
pub fn verify_nested(
    a: &OrthogonalArray,
    rows: &[usize],
    maps: &[LevelCollapseMap],
    s0: usize,
) -> Result<bool> {
    if rows.is_empty() {
        return Err(Error::EmptySelection);
    }
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != rows.len() {
        return Err(Error::BadPartition("repeated row index".into()));
    }
    if maps.iter().any(|m| m.codomain() != s0) {
        return Err(Error::BadCollapseMap(format!(
            "every map must collapse onto {s0} levels"
        )));
    }
    let sub = row_subarray(a, rows)?;
    Ok(sub.collapse_levels(maps)?.verify_strength(2))
}

/// Compositions of t into g positive parts.
fn compositions(t: usize, g: usize) -> Vec<Vec<usize>> {
    if g == 1 {
        return vec![vec![t]];
    }
    let mut out = Vec::new();
    for first in 1..=t - g + 1 {
        for mut rest in compositions(t - first, g - 1) {
            let mut c = vec![first];
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

/// Strong-array verification per the collapsing definition: for every
/// g <= t, every g-subset of columns, and every composition
/// (u_1, ..., u_g) of t, the collapse a -> floor(a / s^(t - u_j)) must
/// give a strength-g mixed array.
pub fn verify_strong(a: &OrthogonalArray, s: usize, t: usize) -> Result<bool> {
    let st = s.pow(t as u32);
    for (col, &levels) in a.levels().iter().enumerate() {
        if levels != st {
            return Err(Error::LevelCountMismatch {
                col,
                levels,
                expected: st,
            });
        }
    }
    if !a.runs().is_multiple_of(st) {
        return Ok(false);
    }
    let lambda = a.runs() / st;
    for g in 1..=t.min(a.cols()) {
        let comps = compositions(t, g);
        let mut subset: Vec<usize> = (0..g).collect();
        loop {
            for comp in &comps {
                // dense counter over the collapsed tuple, radix s^(u_j)
                let mut counts = vec![0usize; st];
                for row in a.rows() {
                    let mut idx = 0usize;
                    for (&j, &u) in subset.iter().zip(comp) {
                        let divisor = s.pow((t - u) as u32);
                        idx = idx * s.pow(u as u32) + row[j] as usize / divisor;
                    }
                    counts[idx] += 1;
                }
                if counts.iter().any(|&c| c != lambda) {
                    return Ok(false);
                }
            }
            if !next_combination(&mut subset, a.cols()) {
                break;
            }
        }
    }
    Ok(true)
}

/// Strength-2+ verification: every ordered pair of columns, one kept at
/// s^2 levels and the other collapsed to s by floor(a / s), must be a
/// strength-2 mixed array. A single column passes vacuously.
pub fn verify_strong_2plus(a: &OrthogonalArray, s: usize) -> Result<bool> {
    let s2 = s * s;
    for (col, &levels) in a.levels().iter().enumerate() {
        if levels != s2 {
            return Err(Error::LevelCountMismatch {
                col,
                levels,
                expected: s2,
            });
        }
    }
    if a.cols() < 2 {
        return Ok(true);
    }
    let cells = s2 * s;
    if !a.runs().is_multiple_of(cells) {
        return Ok(false);
    }
    let lambda = a.runs() / cells;
    for full in 0..a.cols() {
        for coarse in 0..a.cols() {
            if full == coarse {
                continue;
            }
            let mut counts = vec![0usize; cells];
            for row in a.rows() {
                let idx = row[full] as usize * s + row[coarse] as usize / s;
                counts[idx] += 1;
            }
            if counts.iter().any(|&c| c != lambda) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A disjoint covering partition of columns into groups with per-group
/// claimed strengths and an overall claimed strength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    cols: usize,
    groups: Vec<Vec<usize>>,
    strengths: Vec<usize>,
    overall: usize,
}

impl GroupSpec {
    pub fn new(
        cols: usize,
        groups: Vec<Vec<usize>>,
        strengths: Vec<usize>,
        overall: usize,
    ) -> Result<Self> {
        if groups.is_empty() || groups.len() != strengths.len() {
            return Err(Error::BadGroupSpec(format!(
                "{} groups with {} strengths",
                groups.len(),
                strengths.len()
            )));
        }
        let mut seen = vec![false; cols];
        for group in &groups {
            if group.is_empty() {
                return Err(Error::BadGroupSpec("empty group".into()));
            }
            for &j in group {
                if j >= cols || seen[j] {
                    return Err(Error::BadGroupSpec(format!(
                        "column {j} missing or repeated"
                    )));
                }
                seen[j] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::BadGroupSpec(
                "groups do not cover all columns".into(),
            ));
        }
        if overall == 0 || strengths.iter().any(|&t| t < overall) {
            return Err(Error::BadGroupSpec(
                "each group strength must be at least the overall strength".into(),
            ));
        }
        for (i, group) in groups.iter().enumerate() {
            if strengths[i] > group.len() {
                return Err(Error::BadGroupSpec(format!(
                    "group {i} claims strength {} with only {} columns",
                    strengths[i],
                    group.len()
                )));
            }
        }
        Ok(GroupSpec {
            cols,
            groups,
            strengths,
            overall,
        })
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn strengths(&self) -> &[usize] {
        &self.strengths
    }

    pub fn overall(&self) -> usize {
        self.overall
    }

    /// Comment-header annotation, e.g. `# groups: 0,1,2,3:3 | 4,5,6:3 (overall 2)`.
    pub fn comment_header(&self) -> String {
        let parts: Vec<String> = self
            .groups
            .iter()
            .zip(&self.strengths)
            .map(|(g, t)| {
                let cols: Vec<String> = g.iter().map(|c| c.to_string()).collect();
                format!("{}:{t}", cols.join(","))
            })
            .collect();
        format!("# groups: {} (overall {})", parts.join(" | "), self.overall)
    }
}

/// True iff the whole array has the overall claimed strength and every
/// group projection has its claimed strength.
pub fn verify_grouped(a: &OrthogonalArray, spec: &GroupSpec) -> Result<bool> {
    if spec.cols != a.cols() {
        return Err(Error::BadGroupSpec(format!(
            "spec covers {} columns, array has {}",
            spec.cols,
            a.cols()
        )));
    }
    if spec.overall > a.cols() || !a.verify_strength(spec.overall) {
        return Ok(false);
    }
    for (group, &t) in spec.groups.iter().zip(&spec.strengths) {
        if !a.project(group)?.verify_strength(t) {
            return Ok(false);
        }
    }
    Ok(true)
}
