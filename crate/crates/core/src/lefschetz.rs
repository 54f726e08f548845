//! Lefschetz numbers of iterates and the Lefschetz zeta function, computed
//! from homology and, independently, from the periodic data of a map with
//! finitely many hyperbolic periodic orbits.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclo::{factor_pm, CycloVector, Sign};
use crate::error::{Error, Result};
use crate::homology::{validate_model, HomologyModel, ValidatedModel};
use crate::series::{expand, zeta_from_lefschetz_numbers};

/// One hyperbolic periodic orbit: period `p`, unstable dimension `u` and
/// orientation type `delta = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicDatum {
    pub p: u64,
    pub u: u32,
    pub delta: i8,
}

impl PeriodicDatum {
    pub fn new(p: u64, u: u32, delta: i8) -> Result<Self> {
        let datum = Self { p, u, delta };
        datum.check()?;
        Ok(datum)
    }

    fn check(&self) -> Result<()> {
        if self.p == 0 {
            return Err(Error::NotRepresentable("periodic orbit with period 0".into()));
        }
        if self.delta != 1 && self.delta != -1 {
            return Err(Error::NotRepresentable(format!(
                "orientation type {} is not ±1",
                self.delta
            )));
        }
        Ok(())
    }

    /// Contribution `(1 - Δ t^p)^{(-1)^{u+1}}`.
    pub fn factor(&self) -> CycloVector {
        let sign = if self.delta == 1 { Sign::Minus } else { Sign::Plus };
        let exponent = if self.u % 2 == 0 { -1 } else { 1 };
        factor_pm(sign, self.p).pow(exponent)
    }
}

/// Parses `[ {"p": 1, "u": 0, "delta": 1}, … ]`.
pub fn parse_periodic_data(text: &str) -> Result<Vec<PeriodicDatum>> {
    let data: Vec<PeriodicDatum> =
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: e.to_string(),
        })?;
    for d in &data {
        d.check()?;
    }
    Ok(data)
}

/// `L(f^m) = Σ_k (-1)^k tr(f_{*k}^m)`.
pub fn lefschetz_number(model: &HomologyModel, m: u64) -> BigInt {
    model
        .maps()
        .iter()
        .map(|(&k, a)| {
            let tr = a.pow(m).trace();
            if k % 2 == 0 {
                tr
            } else {
                -tr
            }
        })
        .sum()
}

/// `L(f^1) ..= L(f^order)`.
pub fn lefschetz_sequence(model: &HomologyModel, order: u64) -> Vec<BigInt> {
    (1..=order).map(|m| lefschetz_number(model, m)).collect()
}

/// `Π_k det(I - t f_{*k})^{(-1)^{k+1}}` in the cyclotomic basis.
pub fn zeta_of_validated(model: &ValidatedModel) -> CycloVector {
    model
        .charpolys()
        .iter()
        .fold(CycloVector::one(), |acc, (&k, c)| {
            acc.mul_pow(c, if k % 2 == 0 { -1 } else { 1 })
        })
}

pub fn zeta_from_homology(model: &HomologyModel) -> Result<CycloVector> {
    Ok(zeta_of_validated(&validate_model(model.clone())?))
}

/// `Π_{(p,u,Δ) ∈ Σ} (1 - Δ t^p)^{(-1)^{u+1}}`.
pub fn zeta_from_periodic_data(sigma: &[PeriodicDatum]) -> CycloVector {
    sigma
        .iter()
        .fold(CycloVector::one(), |acc, d| acc.mul(&d.factor()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesMismatch {
    pub m: usize,
    /// `L(f^m) / m` as `"num/den"`.
    pub expected: String,
    /// Coefficient of `t^m` in `log ζ`.
    pub found: String,
}

/// Outcome of comparing the series of `ζ` against the Lefschetz numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub order: usize,
    pub passed: bool,
    pub lefschetz_numbers: Vec<String>,
    pub first_mismatch: Option<SeriesMismatch>,
}

fn compare(zeta: &CycloVector, numbers: &[BigInt]) -> SeriesReport {
    let order = numbers.len();
    let series = expand(zeta, order);
    let log = series.log();
    let mut first_mismatch = None;
    for (i, l) in numbers.iter().enumerate() {
        let m = i + 1;
        let expected = BigRational::new(l.clone(), BigInt::from(m));
        if log.coeff(m) != &expected {
            first_mismatch = Some(SeriesMismatch {
                m,
                expected: expected.to_string(),
                found: log.coeff(m).to_string(),
            });
            break;
        }
    }
    // Second direction: exp of the Lefschetz generating series.
    if first_mismatch.is_none() && zeta_from_lefschetz_numbers(numbers) != series {
        let rebuilt = zeta_from_lefschetz_numbers(numbers);
        let m = (0..=order)
            .find(|&m| rebuilt.coeff(m) != series.coeff(m))
            .unwrap_or(0);
        first_mismatch = Some(SeriesMismatch {
            m,
            expected: series.coeff(m).to_string(),
            found: rebuilt.coeff(m).to_string(),
        });
    }
    SeriesReport {
        order,
        passed: first_mismatch.is_none(),
        lefschetz_numbers: numbers.iter().map(ToString::to_string).collect(),
        first_mismatch,
    }
}

/// Checks that the coefficient of `t^m` in `log ζ_f` equals `L(f^m)/m` for
/// every `m ≤ order`, with `ζ_f` taken from the determinant product and
/// `L(f^m)` from traces of matrix powers.
pub fn verify_series_identity(model: &ValidatedModel, order: usize) -> SeriesReport {
    let zeta = zeta_of_validated(model);
    let numbers = lefschetz_sequence(model.model(), order as u64);
    compare(&zeta, &numbers)
}

/// Reads the Lefschetz numbers `m · [t^m] log ζ` off a bare zeta function.
/// `None` if one of them is not an integer.
pub fn lefschetz_numbers_of_zeta(zeta: &CycloVector, order: usize) -> Option<Vec<BigInt>> {
    let log = expand(zeta, order).log();
    (1..=order)
        .map(|m| {
            let l = log.coeff(m) * BigRational::from_integer(BigInt::from(m));
            l.is_integer().then(|| l.to_integer())
        })
        .collect()
}

/// Series check for a zeta function given without homology: the extracted
/// Lefschetz numbers must be integers and must rebuild the same prefix.
pub fn verify_zeta_series(zeta: &CycloVector, order: usize) -> SeriesReport {
    match lefschetz_numbers_of_zeta(zeta, order) {
        Some(numbers) => compare(zeta, &numbers),
        None => {
            let log = expand(zeta, order).log();
            let m = (1..=order)
                .find(|&m| !(log.coeff(m) * BigRational::from_integer(BigInt::from(m))).is_integer())
                .unwrap_or(0);
            SeriesReport {
                order,
                passed: false,
                lefschetz_numbers: Vec::new(),
                first_mismatch: Some(SeriesMismatch {
                    m,
                    expected: "integer / m".into(),
                    found: log.coeff(m).to_string(),
                }),
            }
        }
    }
}

/// `Σ_k (-1)^{k+1} n_k`, the degree of `ζ_f` as a rational function.
pub fn expected_zeta_degree(model: &HomologyModel) -> i64 {
    -model.euler_characteristic()
}
