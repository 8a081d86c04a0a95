//! A small dense two-phase simplex solver over exact rationals.
//!
//! Bland's smallest-index pivot rule is used in both phases, which
//! guarantees termination on degenerate polytopes and makes the pivot
//! sequence (and hence the exact output) a deterministic function of the
//! input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// Minimize `objective . x` subject to `row . x (rel) rhs` for every
/// constraint, with all variables nonnegative.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<BigRational>,
    pub constraints: Vec<(Vec<BigRational>, Relation, BigRational)>,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

struct Tableau {
    rows: usize,
    cols: usize, // structural + slack + artificial
    a: Vec<Vec<BigRational>>,
    b: Vec<BigRational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.a[row][col].clone();
        for v in self.a[row].iter_mut() {
            *v /= &piv;
        }
        self.b[row] /= &piv;
        for r in 0..self.rows {
            if r == row || self.a[r][col].is_zero() {
                continue;
            }
            let factor = self.a[r][col].clone();
            for c in 0..self.cols {
                let delta = &factor * &self.a[row][c];
                self.a[r][c] -= delta;
            }
            let delta = &factor * &self.b[row];
            self.b[r] -= delta;
        }
        self.basis[row] = col;
    }

    /// Minimize `cost` over the current basis; Bland's rule. Returns the
    /// optimal objective value. `allowed` masks columns that may enter.
    fn optimize(&mut self, cost: &[BigRational], allowed: &[bool]) -> Result<BigRational> {
        loop {
            // reduced costs z_j = c_j - c_B . B^-1 A_j
            let mut entering = None;
            'cols: for j in 0..self.cols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j].clone();
                for r in 0..self.rows {
                    if !cost[self.basis[r]].is_zero() {
                        red -= &cost[self.basis[r]] * &self.a[r][j];
                    }
                }
                if red.is_negative() {
                    entering = Some(j);
                    break 'cols; // smallest index
                }
            }
            let j = match entering {
                Some(j) => j,
                None => {
                    let mut obj = BigRational::zero();
                    for r in 0..self.rows {
                        obj += &cost[self.basis[r]] * &self.b[r];
                    }
                    return Ok(obj);
                }
            };
            // ratio test; ties broken by smallest basis index
            let mut leave: Option<(usize, BigRational)> = None;
            for r in 0..self.rows {
                if self.a[r][j].is_positive() {
                    let ratio = &self.b[r] / &self.a[r][j];
                    let better = match &leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let (row, _) =
                leave.ok_or_else(|| Error::Internal("linear program is unbounded below".into()))?;
            self.pivot(row, j);
        }
    }
}

/// Solve the program to optimality, returning the exact minimal objective.
pub fn solve_min(lp: &LinearProgram) -> Result<BigRational> {
    let n = lp.objective.len();
    let m = lp.constraints.len();
    // count auxiliary columns
    let mut n_slack = 0;
    for (_, rel, _) in &lp.constraints {
        if !matches!(rel, Relation::Eq) {
            n_slack += 1;
        }
    }
    let cols = n + n_slack + m; // one artificial per row, unused ones stay zero
    let mut a = vec![vec![BigRational::zero(); cols]; m];
    let mut b = vec![BigRational::zero(); m];
    let mut basis = vec![0usize; m];
    let mut slack_idx = n;
    let art_base = n + n_slack;
    let mut artificial_used = vec![false; m];
    for (r, (row, rel, rhs)) in lp.constraints.iter().enumerate() {
        assert_eq!(row.len(), n, "constraint arity");
        let flip = rhs.is_negative();
        for (c, v) in row.iter().enumerate() {
            a[r][c] = if flip { -v.clone() } else { v.clone() };
        }
        b[r] = if flip { -rhs.clone() } else { rhs.clone() };
        let rel = match (rel, flip) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => *r,
        };
        match rel {
            Relation::Le => {
                a[r][slack_idx] = BigRational::one();
                basis[r] = slack_idx;
                slack_idx += 1;
            }
            Relation::Ge => {
                a[r][slack_idx] = -BigRational::one();
                slack_idx += 1;
                a[r][art_base + r] = BigRational::one();
                basis[r] = art_base + r;
                artificial_used[r] = true;
            }
            Relation::Eq => {
                a[r][art_base + r] = BigRational::one();
                basis[r] = art_base + r;
                artificial_used[r] = true;
            }
        }
    }
    let mut t = Tableau {
        rows: m,
        cols,
        a,
        b,
        basis,
    };

    if artificial_used.iter().any(|&u| u) {
        // phase 1: minimize the sum of artificials
        let mut cost = vec![BigRational::zero(); cols];
        for r in 0..m {
            if artificial_used[r] {
                cost[art_base + r] = BigRational::one();
            }
        }
        let allowed = vec![true; cols];
        let phase1 = t.optimize(&cost, &allowed)?;
        if !phase1.is_zero() {
            return Err(Error::Internal("linear program is infeasible".into()));
        }
        // drive any residual artificial out of the basis
        for r in 0..m {
            if t.basis[r] >= art_base {
                if let Some(j) = (0..art_base).find(|&j| !t.a[r][j].is_zero()) {
                    t.pivot(r, j);
                }
                // a fully zero row is redundant and can stay basic at zero
            }
        }
    }

    let mut cost = vec![BigRational::zero(); cols];
    cost[..n].clone_from_slice(&lp.objective);
    let mut allowed = vec![true; cols];
    allowed[art_base..].fill(false);
    t.optimize(&cost, &allowed)
}
