//! Truncated power series at `t = 0` with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::CycloVector;
use crate::poly::{cyclotomic, IntPoly};

/// Coefficients `a_0 ..= a_M` of a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<BigRational>,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series prefix has at least a_0");
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(iter: I) -> Self {
        Self::new(iter.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &BigRational {
        &self.coeffs[m]
    }

    /// Formal logarithm of a series with `a_0 = 1`, via `(log S)' = S'/S`:
    /// `m l_m = m a_m - Σ_{k=1}^{m-1} k l_k a_{m-k}`.
    pub fn log(&self) -> SeriesPrefix {
        assert!(self.coeffs[0].is_one(), "log needs constant term 1");
        let n = self.coeffs.len();
        let mut l = vec![BigRational::zero(); n];
        for m in 1..n {
            let mut acc = BigRational::from_integer(BigInt::from(m)) * &self.coeffs[m];
            for k in 1..m {
                acc -= BigRational::from_integer(BigInt::from(k)) * &l[k] * &self.coeffs[m - k];
            }
            l[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        SeriesPrefix::new(l)
    }

    /// Formal exponential of a series with `a_0 = 0`, via `E' = L' E`:
    /// `m e_m = Σ_{k=1}^{m} k l_k e_{m-k}`.
    pub fn exp(&self) -> SeriesPrefix {
        assert!(self.coeffs[0].is_zero(), "exp needs constant term 0");
        let n = self.coeffs.len();
        let mut e = vec![BigRational::zero(); n];
        e[0] = BigRational::one();
        for m in 1..n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                acc += BigRational::from_integer(BigInt::from(k)) * &self.coeffs[k] * &e[m - k];
            }
            e[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        SeriesPrefix::new(e)
    }
}

/// Multiplies a truncated integer series by a polynomial in place.
fn mul_poly(series: &mut [BigInt], poly: &IntPoly) {
    for m in (0..series.len()).rev() {
        let mut acc = BigInt::zero();
        for (j, c) in poly.coeffs().iter().enumerate().take(m + 1) {
            acc += c * &series[m - j];
        }
        series[m] = acc;
    }
}

/// Divides a truncated integer series by a polynomial with constant term 1.
fn div_poly(series: &mut [BigInt], poly: &IntPoly) {
    debug_assert!(poly.constant_term().is_one());
    for m in 0..series.len() {
        let mut acc = series[m].clone();
        for (j, c) in poly.coeffs().iter().enumerate().skip(1).take(m) {
            acc -= c * &series[m - j];
        }
        series[m] = acc;
    }
}

/// Taylor coefficients `a_0 ..= a_order` of `Π C_d^{e_d}` at `t = 0`.
///
/// Every `C_d` has constant term 1, so the denominators are units in the
/// power-series ring and all coefficients are integers.
pub fn expand(v: &CycloVector, order: usize) -> SeriesPrefix {
    let mut s = vec![BigInt::zero(); order + 1];
    s[0] = BigInt::one();
    for (d, e) in v.iter() {
        let c = cyclotomic(d);
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                mul_poly(&mut s, &c);
            } else {
                div_poly(&mut s, &c);
            }
        }
    }
    SeriesPrefix::from_integers(s)
}

/// `exp(Σ_{m ≤ M} L_m t^m / m)` for `L_1 ..= L_M`.
pub fn zeta_from_lefschetz_numbers(numbers: &[BigInt]) -> SeriesPrefix {
    let mut gen = vec![BigRational::zero()];
    for (i, l) in numbers.iter().enumerate() {
        gen.push(BigRational::new(l.clone(), BigInt::from(i + 1)));
    }
    SeriesPrefix::new(gen).exp()
}
