//! Rational functions written in the basis of normalized cyclotomic
//! polynomials `C_d` (constant term `+1`).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, mobius, totient};
use crate::error::{Error, Result};
use crate::poly::{cyclotomic, IntPoly};

/// Sign inside a factor `1 ± t^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// `Π_d C_d(t)^{e_d}`, stored as the sparse exponent map `d -> e_d`.
///
/// Zero exponents are never stored, so equality of vectors is equality of
/// the rational functions they denote. The empty map is the constant `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloVector {
    exponents: BTreeMap<u64, i64>,
}

impl CycloVector {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents<I: IntoIterator<Item = (u64, i64)>>(iter: I) -> Self {
        let mut v = Self::one();
        for (d, e) in iter {
            v.add_exponent(d, e);
        }
        v
    }

    /// Adds `e` to the exponent of `C_d`, dropping the entry if it cancels.
    pub fn add_exponent(&mut self, d: u64, e: i64) {
        assert!(d >= 1, "cyclotomic index must be positive");
        if e == 0 {
            return;
        }
        let slot = self.exponents.entry(d).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&d);
        }
    }

    pub fn exponent(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(&d, &e)| (d, e))
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Largest cyclotomic index in the support.
    pub fn max_index(&self) -> Option<u64> {
        self.exponents.keys().next_back().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_pow(other, 1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul_pow(other, -1)
    }

    /// `self * other^k`
    pub fn mul_pow(&self, other: &Self, k: i64) -> Self {
        let mut out = self.clone();
        for (d, e) in other.iter() {
            out.add_exponent(d, e * k);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::one().mul_pow(self, k)
    }

    /// Degree of numerator minus degree of denominator.
    pub fn total_degree(&self) -> i64 {
        self.iter().map(|(d, e)| e * totient(d) as i64).sum()
    }

    /// Exponent of `1 - t^p` in the unique expansion
    /// `Π_q (1 - t^q)^{c_q}`, namely `c_p = Σ_k μ(k) e_{kp}`.
    ///
    /// For odd `p` this is also the value of the unique linear functional
    /// (up to scale) that vanishes on every factor `1 ± t^q` with `q ≠ p`,
    /// so `c_p ≠ 0` certifies that every factorization into terms
    /// `(1 ± t^q)^{±1}` uses the period `p`.
    pub fn minus_coefficient(&self, p: u64) -> i64 {
        self.iter()
            .filter(|&(d, _)| d % p == 0)
            .map(|(d, e)| mobius(d / p) * e)
            .sum()
    }

    /// `(numerator, denominator)` with coprime cyclotomic content.
    pub fn to_fraction(&self) -> (IntPoly, IntPoly) {
        let mut num = IntPoly::one();
        let mut den = IntPoly::one();
        for (d, e) in self.iter() {
            let c = cyclotomic(d).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &c;
            } else {
                den = &den * &c;
            }
        }
        (num, den)
    }
}

/// Cyclotomic exponent vector of `1 - t^p` (`Sign::Minus`) or `1 + t^p`
/// (`Sign::Plus`).
///
/// `1 - t^p = Π_{d | p} C_d` and `1 + t^p = (1 - t^{2p}) / (1 - t^p)`, so
/// the plus factor covers the divisors of `2p` that do not divide `p`.
pub fn factor_pm(sign: Sign, p: u64) -> CycloVector {
    assert!(p >= 1, "period must be positive");
    match sign {
        Sign::Minus => CycloVector::from_exponents(divisors(p).into_iter().map(|d| (d, 1))),
        Sign::Plus => CycloVector::from_exponents(
            divisors(2 * p)
                .into_iter()
                .filter(|d| p % d != 0)
                .map(|d| (d, 1)),
        ),
    }
}

/// Factors one polynomial with constant term `1` in the `C_d` basis.
pub fn factor_cyclotomic(poly: &IntPoly) -> Result<CycloVector> {
    if poly.is_zero() || !poly.constant_term().is_one() {
        return Err(Error::NotRepresentable(format!(
            "polynomial {poly} does not have constant term 1"
        )));
    }
    let mut rem = poly.clone();
    let mut out = CycloVector::one();
    let n = rem.degree().unwrap_or(0) as u64;
    // φ(d) ≥ sqrt(d / 2), so no d beyond 2n² can have φ(d) ≤ n.
    let limit = 2 * n * n + 2;
    let mut d = 1;
    while !rem.is_one() && d <= limit {
        let remaining = rem.degree().unwrap_or(0) as u64;
        if totient(d) <= remaining {
            let c = cyclotomic(d);
            let mut count = 0;
            while let Some(q) = rem.exact_div(&c) {
                rem = q;
                count += 1;
            }
            out.add_exponent(d, count);
        }
        d += 1;
    }
    if rem.is_one() {
        Ok(out)
    } else {
        Err(Error::NotQuasiUnipotent { degree: None })
    }
}

/// Factors `Π poly_i^{k_i}` in the `C_d` basis by trial division.
pub fn poly_product_to_cyclovector(factors: &[(IntPoly, i64)]) -> Result<CycloVector> {
    let mut out = CycloVector::one();
    for (poly, k) in factors {
        out = out.mul_pow(&factor_cyclotomic(poly)?, *k);
    }
    Ok(out)
}

impl fmt::Display for CycloVector {
    /// `C_1^-2 * C_3^1`; the empty vector prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (d, e)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "C_{d}^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloVector({self})")
    }
}
