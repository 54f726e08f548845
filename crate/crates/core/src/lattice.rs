//! Integer linear systems `A x = b` decided exactly through the Smith
//! normal form `U A V = D` with unimodular `U`, `V`.
//!
//! A system is solvable over the integers iff `d_i | (U b)_i` for every
//! nonzero diagonal entry and `(U b)_i = 0` past the rank. When it is not,
//! the offending row of `U` is a dual certificate: a weight vector `w` with
//! `w·A ≡ 0` and `w·b ≢ 0` modulo `d_i` (or exactly, when `d_i = 0`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix stored as rows.
pub type Rows = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Rows {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal of `D`, length `min(rows, cols)`; nonnegative, each entry
    /// dividing the next among the nonzero ones.
    pub diag: Vec<BigInt>,
    pub rank: usize,
    /// `U`, rows × rows.
    pub left: Rows,
    /// `V`, cols × cols.
    pub right: Rows,
}

struct Reducer {
    d: Rows,
    u: Rows,
    v: Rows,
    m: usize,
    n: usize,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.d.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.d.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i += k * row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for mat in [&mut self.d, &mut self.u] {
            let src = mat[j].clone();
            for (x, s) in mat[i].iter_mut().zip(&src) {
                *x += k * s;
            }
        }
    }

    /// col_i += k * col_j
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        for row in self.d.iter_mut().chain(self.v.iter_mut()) {
            let s = row[j].clone();
            row[i] += k * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for mat in [&mut self.d, &mut self.u] {
            for x in mat[i].iter_mut() {
                *x = -&*x;
            }
        }
    }

    fn smallest_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.d[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` around the pivot; returns false if the
    /// pivot had to be replaced by a smaller remainder.
    fn clear_cross(&mut self, t: usize) -> bool {
        for i in t + 1..self.m {
            if self.d[i][t].is_zero() {
                continue;
            }
            let q = &self.d[i][t] / &self.d[t][t];
            self.add_row(i, t, &-q);
            if !self.d[i][t].is_zero() {
                self.swap_rows(i, t);
                return false;
            }
        }
        for j in t + 1..self.n {
            if self.d[t][j].is_zero() {
                continue;
            }
            let q = &self.d[t][j] / &self.d[t][t];
            self.add_col(j, t, &-q);
            if !self.d[t][j].is_zero() {
                self.swap_cols(j, t);
                return false;
            }
        }
        true
    }

    fn run(mut self) -> SmithForm {
        let size = self.m.min(self.n);
        let mut t = 0;
        while t < size {
            let Some((pi, pj)) = self.smallest_nonzero(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                if !self.clear_cross(t) {
                    continue;
                }
                // divisibility: fold an offending row into the pivot row
                let pivot = self.d[t][t].clone();
                let offending = (t + 1..self.m).find(|&i| {
                    (t + 1..self.n).any(|j| !self.d[i][j].is_multiple_of(&pivot))
                });
                match offending {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.d[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        let diag = (0..size).map(|i| self.d[i][i].clone()).collect();
        SmithForm {
            diag,
            rank: t,
            left: self.u,
            right: self.v,
        }
    }
}

/// Smith normal form of an `a.len() × cols` matrix.
pub fn smith_normal_form(a: &[Vec<BigInt>], cols: usize) -> SmithForm {
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let m = a.len();
    Reducer {
        d: a.to_vec(),
        u: identity(m),
        v: identity(cols),
        m,
        n: cols,
    }
    .run()
}

/// Weights `w` on the rows with `w·A ≡ 0` and `w·b ≢ 0` modulo `modulus`;
/// a zero modulus means exact equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    pub weights: Vec<BigInt>,
    pub modulus: BigInt,
}

impl DualCertificate {
    fn reduce(&self, x: BigInt) -> BigInt {
        if self.modulus.is_zero() {
            x
        } else {
            x.mod_floor(&self.modulus)
        }
    }

    /// Re-checks the certificate against `A` and `b`.
    pub fn verify(&self, a: &[Vec<BigInt>], cols: usize, b: &[BigInt]) -> bool {
        let dot_col = |j: usize| -> BigInt {
            a.iter().zip(&self.weights).map(|(row, w)| &row[j] * w).sum()
        };
        let wb: BigInt = b.iter().zip(&self.weights).map(|(x, w)| x * w).sum();
        (0..cols).all(|j| self.reduce(dot_col(j)).is_zero()) && !self.reduce(wb).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// Every integer solution is `particular + Σ k_i kernel[i]`.
    Feasible {
        particular: Vec<BigInt>,
        kernel: Vec<Vec<BigInt>>,
    },
    Infeasible(DualCertificate),
}

/// Decides `A x = b` over the integers.
pub fn solve(a: &[Vec<BigInt>], cols: usize, b: &[BigInt]) -> Solution {
    assert_eq!(a.len(), b.len());
    let snf = smith_normal_form(a, cols);
    let y: Vec<BigInt> = snf
        .left
        .iter()
        .map(|row| row.iter().zip(b).map(|(u, x)| u * x).sum())
        .collect();
    let mut z = vec![BigInt::zero(); cols];
    for (i, yi) in y.iter().enumerate() {
        let modulus = if i < snf.rank {
            snf.diag[i].clone()
        } else {
            BigInt::zero()
        };
        let solvable = if modulus.is_zero() {
            yi.is_zero()
        } else {
            yi.is_multiple_of(&modulus)
        };
        if !solvable {
            return Solution::Infeasible(DualCertificate {
                weights: snf.left[i].clone(),
                modulus,
            });
        }
        if i < snf.rank {
            z[i] = yi / &snf.diag[i];
        }
    }
    let particular = snf
        .right
        .iter()
        .map(|row| row.iter().zip(&z).map(|(v, zi)| v * zi).sum())
        .collect();
    let kernel = (snf.rank..cols)
        .map(|j| snf.right.iter().map(|row| row[j].clone()).collect())
        .collect();
    Solution::Feasible { particular, kernel }
}
