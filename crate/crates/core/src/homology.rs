//! Rational homology of the manifolds in the catalog together with the maps
//! a quasi-unipotent self-map induces on it, plus validation of
//! user-supplied models.
//!
//! Custom models use the JSON layout
//! `{ "dim": 2, "groups": {"0": 1, "2": 1}, "maps": {"0": [[1]], "2": [[1]]} }`
//! with row-major matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclo::{factor_cyclotomic, CycloVector};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Betti numbers and induced maps `f_{*k}` in every degree with `n_k > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyModel {
    dim: u32,
    groups: BTreeMap<usize, usize>,
    maps: BTreeMap<usize, IntMatrix>,
}

impl HomologyModel {
    /// Checks the structural invariants: degrees lie in `0..=dim`, zero
    /// Betti numbers carry no map and every other degree carries a square
    /// matrix of matching size.
    pub fn new(
        dim: u32,
        groups: BTreeMap<usize, usize>,
        maps: BTreeMap<usize, IntMatrix>,
    ) -> Result<Self> {
        let groups: BTreeMap<usize, usize> = groups.into_iter().filter(|&(_, b)| b > 0).collect();
        for &k in groups.keys().chain(maps.keys()) {
            if k > dim as usize {
                return Err(Error::MalformedModel(format!(
                    "degree {k} exceeds the dimension {dim}"
                )));
            }
        }
        for (&k, &betti) in &groups {
            match maps.get(&k) {
                None => {
                    return Err(Error::MalformedModel(format!(
                        "degree {k} has Betti number {betti} but no induced map"
                    )))
                }
                Some(m) if m.size() != betti => {
                    return Err(Error::MalformedModel(format!(
                        "degree {k} has Betti number {betti} but a {0}x{0} map",
                        m.size()
                    )))
                }
                Some(_) => {}
            }
        }
        if let Some(k) = maps.keys().find(|k| !groups.contains_key(k)) {
            return Err(Error::MalformedModel(format!(
                "degree {k} has a map but a zero homology group"
            )));
        }
        Ok(Self { dim, groups, maps })
    }

    /// Model whose homology has rank one in each listed degree, acting by
    /// the given scalar.
    fn rank_one(dim: u32, scalars: &[(usize, i64)]) -> Self {
        let mut groups = BTreeMap::new();
        let mut maps = BTreeMap::new();
        for &(k, s) in scalars {
            groups.insert(k, 1);
            maps.insert(k, IntMatrix::scalar(s));
        }
        Self::new(dim, groups, maps).expect("catalog models are well formed")
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn groups(&self) -> &BTreeMap<usize, usize> {
        &self.groups
    }

    pub fn maps(&self) -> &BTreeMap<usize, IntMatrix> {
        &self.maps
    }

    pub fn betti(&self, k: usize) -> usize {
        self.groups.get(&k).copied().unwrap_or(0)
    }

    /// `Σ_k (-1)^k n_k`
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawModel =
            serde_json::from_str(text).map_err(|e| Error::MalformedModel(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawModel::from(self)).expect("model serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct RawModel {
    dim: u32,
    groups: BTreeMap<String, usize>,
    maps: BTreeMap<String, Vec<Vec<i64>>>,
}

fn parse_degree(key: &str) -> Result<usize> {
    key.trim()
        .parse()
        .map_err(|_| Error::MalformedModel(format!("degree key {key:?} is not a non-negative integer")))
}

impl TryFrom<RawModel> for HomologyModel {
    type Error = Error;

    fn try_from(raw: RawModel) -> Result<Self> {
        let mut groups = BTreeMap::new();
        for (k, b) in raw.groups {
            groups.insert(parse_degree(&k)?, b);
        }
        let mut maps = BTreeMap::new();
        for (k, rows) in raw.maps {
            let k = parse_degree(&k)?;
            let rows: Vec<Vec<BigInt>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            let m = IntMatrix::from_rows(&rows)
                .ok_or_else(|| Error::MalformedModel(format!("map in degree {k} is not square")))?;
            maps.insert(k, m);
        }
        HomologyModel::new(raw.dim, groups, maps)
    }
}

impl From<&HomologyModel> for RawModel {
    fn from(model: &HomologyModel) -> Self {
        let groups = model.groups.iter().map(|(k, b)| (k.to_string(), *b)).collect();
        let maps = model
            .maps
            .iter()
            .map(|(k, m)| {
                let rows = m
                    .rows()
                    .into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|x| i64::try_from(x).expect("entry fits in i64"))
                            .collect()
                    })
                    .collect();
                (k.to_string(), rows)
            })
            .collect();
        RawModel {
            dim: model.dim,
            groups,
            maps,
        }
    }
}

fn check_unit(d: i64) -> Result<()> {
    if d == 1 || d == -1 {
        Ok(())
    } else {
        Err(Error::InvalidDegree(d))
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::MalformedModel("dimension must be positive".into()))
    } else {
        Ok(())
    }
}

/// `S^n` with `f_{*n} = (d)`.
pub fn sphere_model(n: u32, degree: i64) -> Result<HomologyModel> {
    check_dimension(n)?;
    check_unit(degree)?;
    Ok(HomologyModel::rank_one(n, &[(0, 1), (n as usize, degree)]))
}

/// `S^m × S^n` with `f_{*m} = (a)`, `f_{*n} = (b)` and the top degree forced
/// to `ab` by the cohomology ring.
pub fn product_model(m: u32, n: u32, a: i64, b: i64) -> Result<HomologyModel> {
    check_dimension(m)?;
    check_dimension(n)?;
    check_unit(a)?;
    check_unit(b)?;
    if m == n {
        return Err(Error::EqualDimensions(m));
    }
    Ok(HomologyModel::rank_one(
        m + n,
        &[(0, 1), (m as usize, a), (n as usize, b), ((m + n) as usize, a * b)],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProjectiveKind {
    Complex,
    Quaternion,
}

impl ProjectiveKind {
    /// Real dimension of one cell, i.e. the spacing between nonzero degrees.
    pub fn cell_dim(self) -> u32 {
        match self {
            ProjectiveKind::Complex => 2,
            ProjectiveKind::Quaternion => 4,
        }
    }
}

/// `CP^n` or `HP^n`: rank one in degrees `0, c, …, nc` acting by `d^{k/c}`.
pub fn projective_model(kind: ProjectiveKind, n: u32, degree: i64) -> Result<HomologyModel> {
    check_dimension(n)?;
    check_unit(degree)?;
    let c = kind.cell_dim();
    let scalars: Vec<(usize, i64)> = (0..=n)
        .map(|j| ((j * c) as usize, if j % 2 == 0 { 1 } else { degree }))
        .collect();
    Ok(HomologyModel::rank_one(n * c, &scalars))
}

/// A catalog manifold with the degree-like parameters of the self-map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ManifoldSpec {
    Sphere { n: u32, degree: i64 },
    /// The top degree `d = ab` is derived, never supplied.
    ProductOfSpheres { m: u32, n: u32, a: i64, b: i64 },
    Projective { kind: ProjectiveKind, n: u32, degree: i64 },
}

impl ManifoldSpec {
    pub fn model(&self) -> Result<HomologyModel> {
        match *self {
            ManifoldSpec::Sphere { n, degree } => sphere_model(n, degree),
            ManifoldSpec::ProductOfSpheres { m, n, a, b } => product_model(m, n, a, b),
            ManifoldSpec::Projective { kind, n, degree } => projective_model(kind, n, degree),
        }
    }
}

impl fmt::Display for ManifoldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ManifoldSpec::Sphere { n, degree } => write!(f, "S^{n} (d={degree})"),
            ManifoldSpec::ProductOfSpheres { m, n, a, b } => {
                write!(f, "S^{m} x S^{n} (a={a}, b={b}, d={})", a * b)
            }
            ManifoldSpec::Projective { kind, n, degree } => {
                let name = match kind {
                    ProjectiveKind::Complex => "CP",
                    ProjectiveKind::Quaternion => "HP",
                };
                write!(f, "{name}^{n} (d={degree})")
            }
        }
    }
}

/// Zeta function of a quasi-unipotent map of the 4-torus,
/// `(1-t^3)^2 (1+t^3) / ((1-t)^6 (1+t)^3)`. Only the zeta function is
/// known for it, so it is kept at that level rather than as a model.
pub fn torus_zeta_fixture() -> CycloVector {
    CycloVector::from_exponents([(1, -4), (2, -2), (3, 2), (6, 1)])
}

/// A model whose induced maps all have cyclotomic characteristic
/// polynomials, with `det(I - t f_{*k})` already factored per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedModel {
    model: HomologyModel,
    charpolys: BTreeMap<usize, CycloVector>,
}

impl ValidatedModel {
    pub fn model(&self) -> &HomologyModel {
        &self.model
    }

    /// Factored `det(I - t f_{*k})` for each nonzero degree.
    pub fn charpolys(&self) -> &BTreeMap<usize, CycloVector> {
        &self.charpolys
    }
}

pub fn validate_model(model: HomologyModel) -> Result<ValidatedModel> {
    let mut charpolys = BTreeMap::new();
    for (&k, m) in &model.maps {
        let factored = factor_cyclotomic(&m.reversed_charpoly()).map_err(|e| match e {
            Error::NotQuasiUnipotent { .. } => Error::NotQuasiUnipotent { degree: Some(k) },
            other => other,
        })?;
        charpolys.insert(k, factored);
    }
    Ok(ValidatedModel { model, charpolys })
}
