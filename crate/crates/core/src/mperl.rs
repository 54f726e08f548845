//! Representations of a zeta function as products of `(1 ± t^p)^{±1}` and
//! the minimal set of Lefschetz periods they force.
//!
//! Two descriptions of the same lattice are used side by side.
//!
//! * The decision engine writes `Σ x⁻_p col(−,p) + x⁺_p col(+,p) = ζ` over
//!   the cyclotomic exponent lattice and decides it with the Smith normal
//!   form, returning a dual certificate when no integer solution exists.
//! * The coordinates `c_q` of `ζ = Π_q (1 - t^q)^{c_q}` are unique, and in
//!   them `1 - t^p` is the unit vector at `p` while `1 + t^p` is
//!   `e_{2p} - e_p`. A representation avoiding a set of periods exists iff
//!   every `q` with `c_q ≠ 0` is allowed, or is even with `q/2` allowed.
//!   Witnesses and forced-set families are built from this description.
//!
//! For odd `p` the coordinate `c_p` vanishes on every factor `1 ± t^q` with
//! `q ≠ p`, so `c_p ≠ 0` proves that `p` is forced by every representation,
//! including those with periods beyond the search bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cyclo::{factor_pm, CycloVector, Sign};
use crate::error::{Error, Result};
use crate::homology::ManifoldSpec;
use crate::lattice::{self, Solution};
use crate::lefschetz::zeta_from_homology;

/// Largest period bound accepted by the lattice-based operations.
pub const BOUND_LIMIT: u64 = 512;

/// Largest period bound for which every exact forced set is listed.
pub const UNPRUNED_LIMIT: u64 = 16;

/// `(1 + sign·t^p)^e`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub sign: Sign,
    pub p: u64,
    pub e: i64,
}

impl Factor {
    pub fn new(sign: Sign, p: u64, e: i64) -> Self {
        Self { sign, p, e }
    }

    pub fn minus(p: u64, e: i64) -> Self {
        Self::new(Sign::Minus, p, e)
    }

    pub fn plus(p: u64, e: i64) -> Self {
        Self::new(Sign::Plus, p, e)
    }
}

/// A product of factors `(1 ± t^p)^e`, merged per `(sign, p)` with zero
/// exponents dropped and sorted by period, minus before plus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Representation {
    factors: Vec<Factor>,
}

impl Representation {
    pub fn new<I: IntoIterator<Item = Factor>>(factors: I) -> Self {
        let mut merged: BTreeMap<(u64, Sign), i64> = BTreeMap::new();
        for f in factors {
            assert!(f.p >= 1, "period must be positive");
            *merged.entry((f.p, f.sign)).or_insert(0) += f.e;
        }
        Self {
            factors: merged
                .into_iter()
                .filter(|&(_, e)| e != 0)
                .map(|((p, sign), e)| Factor { sign, p, e })
                .collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product as a cyclotomic exponent vector.
    pub fn product(&self) -> CycloVector {
        self.factors.iter().fold(CycloVector::one(), |acc, f| {
            acc.mul_pow(&factor_pm(f.sign, f.p), f.e)
        })
    }

    pub fn forced_periods(&self) -> BTreeSet<u64> {
        self.factors.iter().map(|f| f.p).collect()
    }

    /// Largest period used, 0 for the empty product.
    pub fn max_period(&self) -> u64 {
        self.factors.iter().map(|f| f.p).max().unwrap_or(0)
    }

    pub fn total_abs_exponent(&self) -> u64 {
        self.factors.iter().map(|f| f.e.unsigned_abs()).sum()
    }

    fn order_key(&self) -> (u64, u64, &[Factor]) {
        (self.max_period(), self.total_abs_exponent(), &self.factors)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_factors(&self.factors))
    }
}

/// Periods appearing in a representation.
pub fn forced_periods(rep: &Representation) -> BTreeSet<u64> {
    rep.forced_periods()
}

/// Coordinates `c_q` of `ζ = Π_q (1 - t^q)^{c_q}`, zeros omitted.
pub fn minus_coordinates(zeta: &CycloVector) -> BTreeMap<u64, i64> {
    let top = zeta.max_index().unwrap_or(0);
    (1..=top)
        .map(|q| (q, zeta.minus_coefficient(q)))
        .filter(|&(_, c)| c != 0)
        .collect()
}

/// Smallest period bound for which some representation exists: every `q`
/// with `c_q ≠ 0` must be reachable as `1 - t^q` or, for even `q`, through
/// `1 + t^{q/2}`.
pub fn required_bound(zeta: &CycloVector) -> u64 {
    minus_coordinates(zeta)
        .keys()
        .map(|&q| if q % 2 == 0 { q / 2 } else { q })
        .max()
        .unwrap_or(0)
}

/// `2 · max(largest cyclotomic index of ζ, 1)`.
pub fn default_bound(zeta: &CycloVector) -> u64 {
    2 * zeta.max_index().unwrap_or(1).max(1)
}

fn check_bound(zeta: &CycloVector, bound: u64) -> Result<()> {
    let required = required_bound(zeta);
    if bound < required {
        return Err(Error::BoundTooSmall { bound, required });
    }
    Ok(())
}

fn check_lattice_bound(zeta: &CycloVector, bound: u64) -> Result<()> {
    check_bound(zeta, bound)?;
    if bound > BOUND_LIMIT {
        return Err(Error::BoundTooLarge {
            bound,
            limit: BOUND_LIMIT,
        });
    }
    Ok(())
}

/// Exact feasibility test in the `c_q` coordinates.
pub fn admits_representation(zeta: &CycloVector, allowed: &BTreeSet<u64>) -> bool {
    minus_coordinates(zeta)
        .keys()
        .all(|&q| allowed.contains(&q) || (q % 2 == 0 && allowed.contains(&(q / 2))))
}

/// Weights on cyclotomic indices that vanish (modulo `modulus`, or exactly
/// when it is zero) on every allowed column but not on `ζ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCertificate {
    pub weights: BTreeMap<u64, BigInt>,
    pub modulus: BigInt,
}

impl LatticeCertificate {
    fn pair(&self, v: &CycloVector) -> BigInt {
        let s: BigInt = v
            .iter()
            .filter_map(|(d, e)| self.weights.get(&d).map(|w| w * e))
            .sum();
        if self.modulus.is_zero() {
            s
        } else {
            s.mod_floor(&self.modulus)
        }
    }

    /// Re-checks the certificate against freshly built factors.
    pub fn verify(&self, zeta: &CycloVector, allowed: &[u64]) -> bool {
        let columns_vanish = allowed.iter().all(|&p| {
            [Sign::Minus, Sign::Plus]
                .iter()
                .all(|&s| self.pair(&factor_pm(s, p)).is_zero())
        });
        columns_vanish && !self.pair(zeta).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Avoidance {
    Found(Representation),
    Infeasible(LatticeCertificate),
}

impl Avoidance {
    pub fn representation(&self) -> Option<&Representation> {
        match self {
            Avoidance::Found(r) => Some(r),
            Avoidance::Infeasible(_) => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Avoidance::Infeasible(_))
    }
}

/// The linear system over the allowed periods, two columns per period.
struct System {
    periods: Vec<u64>,
    rows: Vec<u64>,
    matrix: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
}

impl System {
    fn build(zeta: &CycloVector, periods: Vec<u64>) -> Self {
        let columns: Vec<CycloVector> = periods
            .iter()
            .flat_map(|&p| [factor_pm(Sign::Minus, p), factor_pm(Sign::Plus, p)])
            .collect();
        let rows: Vec<u64> = columns
            .iter()
            .chain(std::iter::once(zeta))
            .flat_map(|c| c.exponents().keys().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let matrix = rows
            .iter()
            .map(|&d| columns.iter().map(|c| BigInt::from(c.exponent(d))).collect())
            .collect();
        let rhs = rows.iter().map(|&d| BigInt::from(zeta.exponent(d))).collect();
        Self {
            periods,
            rows,
            matrix,
            rhs,
        }
    }

    fn cols(&self) -> usize {
        2 * self.periods.len()
    }

    fn solve(&self) -> Solution {
        lattice::solve(&self.matrix, self.cols(), &self.rhs)
    }

    fn representation(&self, x: &[BigInt]) -> Representation {
        let exp = |v: &BigInt| i64::try_from(v).expect("exponent fits in i64");
        Representation::new(self.periods.iter().enumerate().flat_map(|(i, &p)| {
            [
                Factor::minus(p, exp(&x[2 * i])),
                Factor::plus(p, exp(&x[2 * i + 1])),
            ]
        }))
    }

    fn certificate(&self, dual: lattice::DualCertificate) -> LatticeCertificate {
        LatticeCertificate {
            weights: self
                .rows
                .iter()
                .zip(dual.weights)
                .filter(|(_, w)| !w.is_zero())
                .map(|(&d, w)| (d, w))
                .collect(),
            modulus: dual.modulus.abs(),
        }
    }
}

fn allowed_periods(bound: u64, excluded: &BTreeSet<u64>) -> Vec<u64> {
    (1..=bound).filter(|p| !excluded.contains(p)).collect()
}

/// Finds a representation of `ζ` using only periods `p ≤ bound` outside
/// `excluded`, or proves with a lattice certificate that none exists.
pub fn find_representation_avoiding(
    zeta: &CycloVector,
    excluded: &BTreeSet<u64>,
    bound: u64,
) -> Result<Avoidance> {
    check_lattice_bound(zeta, bound)?;
    let periods = allowed_periods(bound, excluded);
    let system = System::build(zeta, periods.clone());
    match system.solve() {
        Solution::Infeasible(dual) => {
            let cert = system.certificate(dual);
            debug_assert!(cert.verify(zeta, &periods));
            Ok(Avoidance::Infeasible(cert))
        }
        Solution::Feasible { particular, .. } => {
            let allowed: BTreeSet<u64> = periods.into_iter().collect();
            let rep = best_representation(zeta, &allowed)
                .unwrap_or_else(|| system.representation(&particular));
            assert_eq!(rep.product(), *zeta, "representation must multiply back");
            Ok(Avoidance::Found(rep))
        }
    }
}

/// Solutions restricted to one chain `q, 2q, 4q, …` of a fixed odd part.
///
/// With `a_j`, `b_j` the exponents of `1 - t^{q 2^j}` and `1 + t^{q 2^j}`,
/// the coordinate at position `k` is `c_k = a_k - b_k + b_{k-1}`.
struct Chain {
    odd: u64,
    values: Vec<i64>,
}

impl Chain {
    fn split(coords: &BTreeMap<u64, i64>) -> Vec<Chain> {
        let mut chains: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
        for (&q, &c) in coords {
            let j = q.trailing_zeros() as usize;
            let values = chains.entry(q >> j).or_default();
            if values.len() <= j {
                values.resize(j + 1, 0);
            }
            values[j] = c;
        }
        chains
            .into_iter()
            .map(|(odd, values)| Chain { odd, values })
            .collect()
    }

    fn period(&self, j: usize) -> u64 {
        self.odd << j
    }

    fn value(&self, j: usize) -> i64 {
        self.values.get(j).copied().unwrap_or(0)
    }

    /// Positions that may carry a factor: allowed and no further along
    /// than the last nonzero coordinate.
    fn candidates(&self, allowed: &BTreeSet<u64>) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&j| allowed.contains(&self.period(j)))
            .collect()
    }

    /// Minimal sets of positions whose dominoes `{j, j+1}` cover every
    /// nonzero coordinate.
    fn minimal_covers(&self, allowed: &BTreeSet<u64>) -> Vec<Vec<usize>> {
        let cand = self.candidates(allowed);
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut current = Vec::new();
        self.branch(0, &cand, &mut current, &mut found);
        found.sort_by_key(Vec::len);
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for s in found {
            if !minimal.iter().any(|m| m.iter().all(|x| s.contains(x))) {
                minimal.push(s);
            }
        }
        minimal
    }

    // Hitting-set branching on the first uncovered position k, which must
    // be covered by k itself or by k - 1.
    fn branch(&self, from: usize, cand: &[usize], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let uncovered = (from..self.values.len()).find(|&k| {
            self.value(k) != 0 && !current.contains(&k) && !(k > 0 && current.contains(&(k - 1)))
        });
        let Some(k) = uncovered else {
            let mut s = current.clone();
            s.sort_unstable();
            out.push(s);
            return;
        };
        for option in [k.checked_sub(1), Some(k)].into_iter().flatten() {
            if cand.contains(&option) {
                current.push(option);
                self.branch(k + 1, cand, current, out);
                current.pop();
            }
        }
    }

    /// Exponents `(a_j, b_j)` supported on `used`, minimizing the total
    /// absolute exponent over the free plus-exponents.
    fn solve_on(&self, used: &[usize]) -> Vec<(usize, i64, i64)> {
        let free: Vec<usize> = used
            .iter()
            .copied()
            .filter(|j| used.contains(&(j + 1)))
            .collect();
        let assemble = |choice: &[i64]| -> Vec<(usize, i64, i64)> {
            let b = |j: usize| -> i64 {
                if !used.contains(&j) {
                    0
                } else if let Some(i) = free.iter().position(|&f| f == j) {
                    choice[i]
                } else {
                    self.value(j + 1)
                }
            };
            used.iter()
                .map(|&j| {
                    let prev = if j > 0 { b(j - 1) } else { 0 };
                    (j, self.value(j) + b(j) - prev, b(j))
                })
                .collect()
        };
        let cost = |sol: &[(usize, i64, i64)]| -> u64 {
            sol.iter().map(|&(_, a, b)| a.unsigned_abs() + b.unsigned_abs()).sum()
        };
        let radius = self.values.iter().map(|v| v.abs()).max().unwrap_or(0) + 2;
        let width = (2 * radius + 1) as u64;
        let mut best = assemble(&vec![0; free.len()]);
        if free.is_empty() || width.checked_pow(free.len() as u32).is_none_or(|n| n > 200_000) {
            return best;
        }
        let mut choice = vec![-radius; free.len()];
        loop {
            let sol = assemble(&choice);
            if cost(&sol) < cost(&best) {
                best = sol;
            }
            let mut i = 0;
            while i < choice.len() && choice[i] == radius {
                choice[i] = -radius;
                i += 1;
            }
            if i == choice.len() {
                return best;
            }
            choice[i] += 1;
        }
    }
}

/// A representation with the fewest periods, then the smallest largest
/// period, then the smallest total absolute exponent, chosen separately on
/// each chain of periods sharing an odd part. `None` if no representation
/// uses only allowed periods.
pub fn best_representation(zeta: &CycloVector, allowed: &BTreeSet<u64>) -> Option<Representation> {
    let mut factors = Vec::new();
    for chain in Chain::split(&minus_coordinates(zeta)) {
        let covers = chain.minimal_covers(allowed);
        let best = covers
            .iter()
            .map(|used| chain.solve_on(used))
            .min_by_key(|sol| {
                let used: Vec<_> = sol.iter().filter(|s| s.1 != 0 || s.2 != 0).collect();
                let top = used.iter().map(|s| s.0).max();
                let abs: u64 = sol.iter().map(|s| s.1.unsigned_abs() + s.2.unsigned_abs()).sum();
                (used.len(), top, abs)
            })?;
        for (j, a, b) in best {
            factors.push(Factor::minus(chain.period(j), a));
            factors.push(Factor::plus(chain.period(j), b));
        }
    }
    Some(Representation::new(factors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Proved for representations with arbitrary periods.
    Exact,
    /// Established only among representations with periods up to the bound.
    BoundedSearch(u64),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Exact => write!(f, "exact"),
            Status::BoundedSearch(p) => write!(f, "bounded:{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPerResult {
    pub zeta: CycloVector,
    pub bound: u64,
    pub periods: BTreeSet<u64>,
    pub status: Status,
    /// Representations whose forced sets intersect to `periods`, ordered
    /// by largest period and then total absolute exponent.
    pub witnesses: Vec<Representation>,
    /// Minimal forced-period families, filled in when `periods` is empty.
    pub alternatives: Vec<BTreeSet<u64>>,
    /// For each period, the proof that it cannot be avoided below the bound.
    pub certificates: BTreeMap<u64, LatticeCertificate>,
}

impl MPerResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "zeta": self.zeta.to_string(),
            "mper": self.periods,
            "status": self.status.to_string(),
            "witnesses": self.witnesses,
            "alternatives": self.alternatives,
        })
    }

    /// Intersection of the witnesses' forced sets.
    pub fn witness_intersection(&self) -> BTreeSet<u64> {
        intersect(self.witnesses.iter().map(Representation::forced_periods))
    }
}

fn intersect<I: IntoIterator<Item = BTreeSet<u64>>>(sets: I) -> BTreeSet<u64> {
    sets.into_iter()
        .reduce(|a, b| a.intersection(&b).copied().collect())
        .unwrap_or_default()
}

/// The periods forced by every representation of `ζ`.
///
/// Each odd `p ≤ bound` is tested with [`find_representation_avoiding`];
/// even periods never need testing because `1 - t^{2k} = (1 - t^k)(1 + t^k)`
/// and `1 + t^{2k} = (1 - t^{4k}) / ((1 - t^k)(1 + t^k))` rewrite them away.
pub fn minimal_lefschetz_periods(zeta: &CycloVector, bound: u64) -> Result<MPerResult> {
    check_lattice_bound(zeta, bound)?;
    if zeta.is_one() {
        return Ok(MPerResult {
            zeta: zeta.clone(),
            bound,
            periods: BTreeSet::new(),
            status: Status::Exact,
            witnesses: vec![Representation::empty()],
            alternatives: Vec::new(),
            certificates: BTreeMap::new(),
        });
    }
    let outcomes: Vec<(u64, Avoidance)> = (1..=bound)
        .into_par_iter()
        .filter(|p| p % 2 == 1)
        .map(|p| find_representation_avoiding(zeta, &BTreeSet::from([p]), bound).map(|a| (p, a)))
        .collect::<Result<_>>()?;
    let mut periods = BTreeSet::new();
    let mut certificates = BTreeMap::new();
    let mut avoiding: BTreeMap<u64, Representation> = BTreeMap::new();
    for (p, outcome) in outcomes {
        match outcome {
            Avoidance::Infeasible(cert) => {
                periods.insert(p);
                certificates.insert(p, cert);
            }
            Avoidance::Found(rep) => {
                avoiding.insert(p, rep);
            }
        }
    }

    let all: BTreeSet<u64> = (1..=bound).collect();
    let mut witnesses = vec![best_representation(zeta, &all).expect("bound already checked")];
    loop {
        let common = intersect(witnesses.iter().map(Representation::forced_periods));
        let Some(&q) = common.difference(&periods).next() else {
            break;
        };
        let rep = match avoiding.remove(&q) {
            Some(rep) => rep,
            None => match find_representation_avoiding(zeta, &BTreeSet::from([q]), bound)? {
                Avoidance::Found(rep) => rep,
                Avoidance::Infeasible(_) => break,
            },
        };
        witnesses.push(rep);
    }
    witnesses.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    witnesses.dedup();

    let lower_bound_holds = periods.iter().all(|&p| zeta.minus_coefficient(p) != 0);
    let upper_bound_holds =
        intersect(witnesses.iter().map(Representation::forced_periods)) == periods;
    let status = if lower_bound_holds && upper_bound_holds {
        Status::Exact
    } else {
        Status::BoundedSearch(bound)
    };
    let alternatives = if periods.is_empty() {
        forced_alternatives(zeta, bound)?.families
    } else {
        Vec::new()
    };
    Ok(MPerResult {
        zeta: zeta.clone(),
        bound,
        periods,
        status,
        witnesses,
        alternatives,
        certificates,
    })
}

/// Period sets such that every representation with periods up to `bound`
/// forces at least one of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedAlternatives {
    pub bound: u64,
    pub families: Vec<BTreeSet<u64>>,
}

impl ForcedAlternatives {
    /// Whether every family meets `set`, so that `set ∩ Per(f) ≠ ∅`.
    pub fn every_family_meets(&self, set: &BTreeSet<u64>) -> bool {
        !self.families.is_empty() && self.families.iter().all(|f| !f.is_disjoint(set))
    }
}

fn sort_families(families: &mut Vec<BTreeSet<u64>>) {
    families.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    families.dedup();
}

/// The inclusion-minimal forced-period sets among representations with
/// periods up to `bound`, ordered by size and then lexicographically.
///
/// Chains of periods with different odd parts are independent, so the
/// families are the unions of one minimal choice per chain.
pub fn forced_alternatives(zeta: &CycloVector, bound: u64) -> Result<ForcedAlternatives> {
    check_bound(zeta, bound)?;
    let allowed: BTreeSet<u64> = (1..=bound).collect();
    let mut families = vec![BTreeSet::new()];
    if zeta.is_one() {
        families.clear();
    }
    for chain in Chain::split(&minus_coordinates(zeta)) {
        let choices: Vec<BTreeSet<u64>> = chain
            .minimal_covers(&allowed)
            .into_iter()
            .map(|used| used.into_iter().map(|j| chain.period(j)).collect())
            .collect();
        families = families
            .iter()
            .flat_map(|f| {
                choices
                    .iter()
                    .map(move |c| f.union(c).copied().collect::<BTreeSet<u64>>())
            })
            .collect();
    }
    sort_families(&mut families);
    Ok(ForcedAlternatives { bound, families })
}

/// Recomputes [`forced_alternatives`] at `start`, `2·start`, … up to
/// `ceiling`, stopping once two consecutive bounds agree.
pub fn forced_alternatives_escalating(
    zeta: &CycloVector,
    start: u64,
    ceiling: u64,
) -> Result<ForcedAlternatives> {
    let mut current = forced_alternatives(zeta, start)?;
    let mut bound = start.max(1);
    while bound.saturating_mul(2) <= ceiling {
        bound *= 2;
        let next = forced_alternatives(zeta, bound)?;
        let stable = next.families == current.families;
        current = next;
        if stable {
            break;
        }
    }
    Ok(current)
}

/// Every set that is exactly the forced set of some representation with
/// periods up to `bound`, minimal or not.
///
/// A set `S` qualifies iff it admits a representation and each `q ∈ S` can
/// carry a nonzero exponent: either its coordinates `c_q`, `c_{2q}` are not
/// both zero, or `2q ∈ S` or `q/2 ∈ S`, which puts the relation
/// `(1 - t^k)(1 + t^k) = 1 - t^{2k}` through `q`.
pub fn exact_forced_sets(zeta: &CycloVector, bound: u64) -> Result<Vec<BTreeSet<u64>>> {
    check_bound(zeta, bound)?;
    if bound > UNPRUNED_LIMIT {
        return Err(Error::BoundTooLarge {
            bound,
            limit: UNPRUNED_LIMIT,
        });
    }
    let coords = minus_coordinates(zeta);
    let c = |q: u64| coords.get(&q).copied().unwrap_or(0);
    let mut out = Vec::new();
    for mask in 0u32..(1 << bound) {
        let set: BTreeSet<u64> = (1..=bound).filter(|p| mask & (1 << (p - 1)) != 0).collect();
        if !admits_representation(zeta, &set) {
            continue;
        }
        let all_usable = set.iter().all(|&q| {
            c(q) != 0
                || c(2 * q) != 0
                || set.contains(&(2 * q))
                || (q % 2 == 0 && set.contains(&(q / 2)))
        });
        if all_usable {
            out.push(set);
        }
    }
    sort_families(&mut out);
    Ok(out)
}

/// The catalog pipeline: homology, zeta function, then minimal periods at
/// the default bound.
pub fn classify(spec: &ManifoldSpec) -> Result<MPerResult> {
    let zeta = zeta_from_homology(&spec.model()?)?;
    minimal_lefschetz_periods(&zeta, default_bound(&zeta))
}
