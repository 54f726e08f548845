//! Square integer matrices: just enough for traces of iterates and
//! characteristic polynomials.

use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    // row-major
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// `None` unless every row has the same length as the number of rows.
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Option<Self> {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn scalar(x: i64) -> Self {
        Self {
            n: 1,
            data: vec![BigInt::from(x)],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.n.max(1)).map(<[BigInt]>::to_vec).take(self.n).collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// `self^m` by binary exponentiation.
    pub fn pow(&self, mut m: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while m > 0 {
            if m & 1 == 1 {
                acc = &acc * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `det(I - t A)` as a polynomial in `t`.
    ///
    /// Faddeev–LeVerrier: with `M_0 = 0`, `c_0 = 1`,
    /// `M_k = A M_{k-1} + c_{k-1} I` and `c_k = -tr(A M_k) / k`, the
    /// characteristic polynomial is `λ^n + c_1 λ^{n-1} + … + c_n`, so
    /// `det(I - tA) = 1 + c_1 t + … + c_n t^n`. The divisions are exact
    /// over the integers.
    pub fn reversed_charpoly(&self) -> IntPoly {
        let n = self.n;
        let mut coeffs = vec![BigInt::one()];
        let mut m = Self::zeros(n);
        let mut c_prev = BigInt::one();
        for k in 1..=n {
            m = &(self * &m) + &Self::identity(n).scaled(&c_prev);
            let am = self * &m;
            let (q, r) = (-am.trace()).div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs.push(q.clone());
            c_prev = q;
        }
        IntPoly::new(coeffs)
    }

    fn scaled(&self, s: &BigInt) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }
}

impl std::ops::Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_and_traces() {
        let a = IntMatrix::from_i64_rows(&[&[0, -1], &[1, -1]]).unwrap();
        // order-3 rotation: a^3 = I
        assert_eq!(a.pow(3), IntMatrix::identity(2));
        assert_eq!(a.trace(), BigInt::from(-1));
        assert_eq!(a.pow(0), IntMatrix::identity(2));
    }

    #[test]
    fn charpoly_of_rotation() {
        let a = IntMatrix::from_i64_rows(&[&[0, -1], &[1, -1]]).unwrap();
        // λ² + λ + 1, reversed: 1 + t + t²
        assert_eq!(a.reversed_charpoly(), IntPoly::from_i64(&[1, 1, 1]));
    }

    #[test]
    fn charpoly_matches_cofactor_determinant_3x3() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1, 0], &[-1, 3, 4], &[5, 0, -2]]).unwrap();
        // det(I - tA) by expanding the 3x3 determinant of polynomials
        let entry = |i: usize, j: usize| {
            let delta = if i == j { 1 } else { 0 };
            IntPoly::new(vec![BigInt::from(delta), -a.get(i, j).clone()])
        };
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &(&entry(r1, c1) * &entry(r2, c2)) - &(&entry(r1, c2) * &entry(r2, c1))
        };
        let det = &(&(&entry(0, 0) * &minor(1, 2, 1, 2)) - &(&entry(0, 1) * &minor(1, 2, 0, 2)))
            + &(&entry(0, 2) * &minor(1, 2, 0, 1));
        assert_eq!(a.reversed_charpoly(), det);
    }

    #[test]
    fn charpoly_of_empty_and_scalar() {
        assert!(IntMatrix::zeros(0).reversed_charpoly().is_one());
        assert_eq!(IntMatrix::scalar(-1).reversed_charpoly(), IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(IntMatrix::from_i64_rows(&[&[1, 2], &[3]]).is_none());
        assert!(IntMatrix::from_i64_rows(&[&[1, 2]]).is_none());
    }
}
