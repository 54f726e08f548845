//! Dense univariate polynomials over the integers, in the variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, mobius};

/// Integer polynomial. `coeffs[i]` is the coefficient of `t^i`; trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 - t^p`
    pub fn one_minus_t_pow(p: usize) -> Self {
        &Self::one() - &Self::monomial(BigInt::one(), p)
    }

    /// `1 + t^p`
    pub fn one_plus_t_pow(p: usize) -> Self {
        &Self::one() + &Self::monomial(BigInt::one(), p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division by a divisor whose leading coefficient is `±1`, so the
    /// quotient stays integral. Returns `(quotient, remainder)`.
    pub fn div_rem_unit(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        assert!(
            lead.abs().is_one(),
            "divisor must have leading coefficient ±1"
        );
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_unit(divisor);
        r.is_zero().then_some(q)
    }
}

/// Normalized cyclotomic polynomial `C_d` with constant term `+1`:
/// `C_1 = 1 - t` and `C_d = Φ_d` for `d ≥ 2`.
///
/// Built from `C_d = Π_{k | d} (1 - t^k)^{μ(d/k)}`, which carries the sign
/// normalization automatically.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for k in divisors(d) {
        match mobius(d / k) {
            1 => num = &num * &IntPoly::one_minus_t_pow(k as usize),
            -1 => den = &den * &IntPoly::one_minus_t_pow(k as usize),
            _ => {}
        }
    }
    num.exact_div(&den)
        .expect("Möbius product of 1 - t^k is always exact")
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::totient;

    // Independent route: Φ_d = (t^d - 1) / Π_{e | d, e < d} Φ_e, then flip the
    // sign of Φ_1 so the constant term is +1.
    fn cyclotomic_by_recursive_division(d: u64) -> IntPoly {
        fn phi(d: u64) -> IntPoly {
            let mut p = IntPoly::monomial(BigInt::one(), d as usize);
            p = &p - &IntPoly::one();
            for e in divisors(d) {
                if e < d {
                    p = p.exact_div(&phi(e)).unwrap();
                }
            }
            p
        }
        let p = phi(d);
        if p.constant_term().is_negative() {
            -&p
        } else {
            p
        }
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[1, -1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        // frozen from the recursive-division oracle
        assert_eq!(cyclotomic_by_recursive_division(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn cyclotomic_matches_recursive_division() {
        for d in 1..=60 {
            assert_eq!(cyclotomic(d), cyclotomic_by_recursive_division(d), "d = {d}");
        }
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for d in 1..=120 {
            assert_eq!(cyclotomic(d).degree(), Some(totient(d) as usize));
            assert!(cyclotomic(d).constant_term().is_one());
        }
    }

    #[test]
    fn cyclotomic_coefficients_are_small_below_105() {
        for d in 1..=104 {
            assert!(
                cyclotomic(d).coeffs().iter().all(|c| c.abs() <= BigInt::one()),
                "d = {d}"
            );
        }
        // Φ_105 has a coefficient -2
        assert!(cyclotomic(105).coeffs().iter().any(|c| c.abs() > BigInt::one()));
    }

    #[test]
    fn division_with_remainder() {
        let a = IntPoly::from_i64(&[1, 0, 0, 1]); // 1 + t^3
        let b = IntPoly::from_i64(&[1, 1]); // 1 + t
        assert_eq!(a.exact_div(&b), Some(IntPoly::from_i64(&[1, -1, 1])));
        let (q, r) = IntPoly::from_i64(&[2, 0, 1]).div_rem_unit(&b);
        assert_eq!(&(&q * &b) + &r, IntPoly::from_i64(&[2, 0, 1]));
        assert_eq!(r, IntPoly::from_i64(&[3]));
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(IntPoly::from_i64(&[0, -2]).to_string(), "-2t");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
