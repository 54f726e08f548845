//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use mperl_core::homology::ProjectiveKind;
use mperl_core::lefschetz::verify_zeta_series;
use mperl_core::mperl::exact_forced_sets;
use mperl_core::tables::{render_markdown, PRODUCT_TABLES};
use mperl_core::{
    classify, factor_pm, find_representation_avoiding, forced_alternatives,
    minimal_lefschetz_periods, parse_representation, parse_zeta_expression, product_model,
    projective_model, sphere_model, torus_zeta_fixture, validate_model, verify_series_identity,
    zeta_from_homology, Avoidance, CycloVector, ForcedAlternatives, HomologyModel, ManifoldSpec,
    MPerResult, Sign, Status,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

type Check = Result<(), String>;

fn set(xs: &[u64]) -> BTreeSet<u64> {
    xs.iter().copied().collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The three shapes a classification clause can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Clause {
    One,
    EmptyButOneOrTwo,
    Empty,
}

fn check_clause(label: &str, r: &MPerResult, clause: Clause) -> Check {
    ensure(r.status == Status::Exact, || format!("{label}: status {}", r.status))?;
    match clause {
        Clause::One => ensure(r.periods == set(&[1]), || {
            format!("{label}: expected {{1}}, got {:?}", r.periods)
        }),
        Clause::Empty => ensure(r.periods.is_empty(), || {
            format!("{label}: expected empty, got {:?}", r.periods)
        }),
        Clause::EmptyButOneOrTwo => {
            ensure(r.periods.is_empty(), || {
                format!("{label}: expected empty, got {:?}", r.periods)
            })?;
            let alt = ForcedAlternatives {
                bound: r.bound,
                families: r.alternatives.clone(),
            };
            ensure(alt.every_family_meets(&set(&[1, 2])), || {
                format!("{label}: alternatives {:?} do not all meet {{1, 2}}", r.alternatives)
            })
        }
    }
}

fn sphere_grid() -> Check {
    for n in 1..=10u32 {
        for d in [1i64, -1] {
            let clause = match (n % 2 == 0, d) {
                (true, 1) => Clause::One,
                (true, _) => Clause::EmptyButOneOrTwo,
                (false, 1) => Clause::Empty,
                (false, _) => Clause::One,
            };
            let r = classify(&ManifoldSpec::Sphere { n, degree: d }).map_err(|e| e.to_string())?;
            check_clause(&format!("S^{n} d={d}"), &r, clause)?;
        }
    }
    Ok(())
}

fn product_grid() -> Check {
    let mut cases = 0;
    for m in 2..=8u32 {
        for n in m + 1..=8 {
            for (a, b) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let d = a * b;
                let clause = match (m % 2 == 0, n % 2 == 0) {
                    (true, true) if a == 1 && b == 1 && d == 1 => Clause::One,
                    (true, true) => Clause::EmptyButOneOrTwo,
                    (false, false) if a == -1 && b == -1 && d == 1 => Clause::One,
                    (true, false) if b == -1 && d == -1 && a == 1 => Clause::One,
                    (false, true) if a == -1 && d == -1 && b == 1 => Clause::One,
                    _ => Clause::Empty,
                };
                let spec = ManifoldSpec::ProductOfSpheres { m, n, a, b };
                let r = classify(&spec).map_err(|e| e.to_string())?;
                check_clause(&spec.to_string(), &r, clause)?;
                cases += 1;
            }
        }
    }
    ensure(cases == 84, || format!("expected 84 cases, ran {cases}"))
}

fn tables() -> Check {
    let markdown = render_markdown().map_err(|e| e.to_string())?;
    // heading -> emitted (label, zeta) rows in order
    let mut emitted: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
    let mut current = None;
    for line in markdown.lines() {
        if let Some(title) = line.strip_prefix("### S^m x S^n, ") {
            current = Some(title.to_string());
        } else if line.starts_with("| ") && !line.starts_with("| Values") {
            let cells: Vec<&str> = line.trim_matches('|').split(" | ").map(str::trim).collect();
            let title = current.clone().ok_or("row before heading")?;
            emitted
                .entry(title)
                .or_default()
                .push((cells[0].to_string(), cells[1].to_string()));
        }
    }
    ensure(emitted.len() == 4, || format!("expected 4 tables, found {}", emitted.len()))?;
    for table in &PRODUCT_TABLES {
        let rows = emitted
            .get(&table.title())
            .ok_or_else(|| format!("missing table {}", table.title()))?;
        ensure(rows.len() == table.rows.len(), || format!("{}: row count", table.title()))?;
        for ((label, zeta_text), row) in rows.iter().zip(table.rows) {
            ensure(label == row.label, || format!("row order: {label} vs {}", row.label))?;
            let parsed = parse_zeta_expression(zeta_text).map_err(|e| e.to_string())?;
            for m in 1..=8u32 {
                for n in 1..=8u32 {
                    if m == n || !table.applies_to(m, n) {
                        continue;
                    }
                    for &(a, b) in row.signs {
                        let model = product_model(m, n, a, b).map_err(|e| e.to_string())?;
                        let z = zeta_from_homology(&model).map_err(|e| e.to_string())?;
                        ensure(z == parsed, || {
                            format!("S^{m} x S^{n} a={a} b={b}: {z} vs '{zeta_text}' = {parsed}")
                        })?;
                    }
                }
            }
        }
    }
    let row = &emitted["m, n odd"][1];
    ensure(row.1 == "(1+t)^2/(1-t)^2", || format!("both-odd row 2 reads {}", row.1))
}

fn projective() -> Check {
    for kind in [ProjectiveKind::Complex, ProjectiveKind::Quaternion] {
        for n in 1..=6u32 {
            for degree in [1i64, -1] {
                let clause = if n % 2 == 1 && degree == -1 {
                    Clause::EmptyButOneOrTwo
                } else {
                    Clause::One
                };
                let spec = ManifoldSpec::Projective { kind, n, degree };
                let r = classify(&spec).map_err(|e| e.to_string())?;
                check_clause(&spec.to_string(), &r, clause)?;
            }
        }
    }
    Ok(())
}

fn torus_example() -> Check {
    let forms = [
        ("(1-t^3)^2(1+t^3)/((1-t)^6(1+t)^3)", set(&[1, 3])),
        ("(1-t^3)(1-t^6)/((1-t)^6(1+t)^3)", set(&[1, 3, 6])),
        ("(1-t^3)(1-t^6)/((1-t)^3(1-t^2)^3)", set(&[1, 2, 3, 6])),
        ("(1-t^3)^2(1+t^3)/((1-t)^3(1-t^2)^3)", set(&[1, 2, 3])),
    ];
    let fixture = torus_zeta_fixture();
    let mut common: Option<BTreeSet<u64>> = None;
    for (text, forced) in &forms {
        let rep = parse_representation(text).map_err(|e| e.to_string())?;
        ensure(rep.product() == fixture, || format!("'{text}' parses to {}", rep.product()))?;
        ensure(&rep.forced_periods() == forced, || {
            format!("'{text}' forces {:?}", rep.forced_periods())
        })?;
        common = Some(match common {
            None => forced.clone(),
            Some(c) => c.intersection(forced).copied().collect(),
        });
    }
    ensure(common == Some(set(&[1, 3])), || format!("intersection {common:?}"))?;
    let zeta = parse_zeta_expression("(1-t^3)^2*(1+t^3)/((1-t)^6*(1+t)^3)").map_err(|e| e.to_string())?;
    let r = minimal_lefschetz_periods(&zeta, 12).map_err(|e| e.to_string())?;
    ensure(r.periods == set(&[1, 3]), || format!("mper {:?}", r.periods))
}

fn one_plus_t_squared() -> Check {
    let zeta = parse_zeta_expression("(1+t^2)").map_err(|e| e.to_string())?;
    for bound in [8, 12, 16, 32] {
        let alt = forced_alternatives(&zeta, bound).map_err(|e| e.to_string())?;
        ensure(alt.families == vec![set(&[2]), set(&[1, 4])], || {
            format!("P={bound}: families {:?}", alt.families)
        })?;
    }
    let raw = exact_forced_sets(&zeta, 8).map_err(|e| e.to_string())?;
    ensure(raw.contains(&set(&[2, 4])), || "unpruned list lacks {2, 4}".into())?;
    // the expansion (1-t^8) / ((1+t)(1-t)(1+t^4)) forces {1, 4, 8}
    ensure(raw.contains(&set(&[1, 4, 8])), || "unpruned list lacks {1, 4, 8}".into())
}

fn catalog_models() -> Vec<(String, HomologyModel)> {
    let mut out = Vec::new();
    for n in 1..=6u32 {
        for d in [1i64, -1] {
            out.push((format!("S^{n} d={d}"), sphere_model(n, d).unwrap()));
            out.push((format!("CP^{n} d={d}"), projective_model(ProjectiveKind::Complex, n, d).unwrap()));
            out.push((format!("HP^{n} d={d}"), projective_model(ProjectiveKind::Quaternion, n, d).unwrap()));
        }
    }
    for m in 1..=6u32 {
        for n in 1..=6u32 {
            if m == n {
                continue;
            }
            for (a, b) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                out.push((format!("S^{m} x S^{n} a={a} b={b}"), product_model(m, n, a, b).unwrap()));
            }
        }
    }
    out
}

fn series_identity() -> Check {
    for (label, model) in catalog_models() {
        let valid = validate_model(model).map_err(|e| format!("{label}: {e}"))?;
        let report = verify_series_identity(&valid, 20);
        ensure(report.passed, || format!("{label}: {:?}", report.first_mismatch))?;
    }
    let report = verify_zeta_series(&torus_zeta_fixture(), 20);
    ensure(report.passed, || format!("torus fixture: {:?}", report.first_mismatch))
}

/// 200 random exponent vectors with support in 1..=12 and |e| ≤ 3.
fn corpus() -> Vec<CycloVector> {
    let mut rng = StdRng::seed_from_u64(0x6d70_6572);
    (0..200)
        .map(|_| {
            let mut v = CycloVector::one();
            for d in 1..=12u64 {
                if rng.gen_bool(0.3) {
                    v.add_exponent(d, rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 });
                }
            }
            v
        })
        .collect()
}

/// Exhaustive search for `Σ x_c col_c = ζ` with every `|x_c| ≤ 4`, over
/// the columns `1 - t^p` and `1 + t^p` for allowed `p`.
///
/// A column's largest cyclotomic index is `p` for `1 - t^p` and `2p` for
/// `1 + t^p`, and its support is a set of divisors of that index. Walking
/// the cyclotomic indices downwards, the residual at index `d` is only
/// touched by columns already fixed and by the (at most two) columns whose
/// largest index is `d`, so those are chosen to clear it.
struct BruteForce {
    top: usize,
    by_top: Vec<Vec<CycloVector>>,
}

const COEFF: i64 = 4;

impl BruteForce {
    fn new(allowed: &[u64]) -> Self {
        let top = 2 * allowed.iter().copied().max().unwrap_or(1) as usize;
        let mut by_top = vec![Vec::new(); top + 1];
        for &p in allowed {
            by_top[p as usize].push(factor_pm(Sign::Minus, p));
            by_top[2 * p as usize].push(factor_pm(Sign::Plus, p));
        }
        Self { top, by_top }
    }

    fn solvable(&self, zeta: &CycloVector) -> bool {
        let top = self.top.max(zeta.max_index().unwrap_or(0) as usize);
        let mut residual = vec![0i64; top + 1];
        for (d, e) in zeta.iter() {
            residual[d as usize] = e;
        }
        self.descend(top, &mut residual)
    }

    fn apply(residual: &mut [i64], col: &CycloVector, x: i64) {
        for (d, e) in col.iter() {
            residual[d as usize] -= x * e;
        }
    }

    fn descend(&self, d: usize, residual: &mut Vec<i64>) -> bool {
        if d == 0 {
            return true;
        }
        let cols: &[CycloVector] = self.by_top.get(d).map_or(&[], Vec::as_slice);
        match cols {
            [] => residual[d] == 0 && self.descend(d - 1, residual),
            [only] => {
                let x = residual[d];
                if x.abs() > COEFF {
                    return false;
                }
                Self::apply(residual, only, x);
                let ok = self.descend(d - 1, residual);
                Self::apply(residual, only, -x);
                ok
            }
            [first, second] => {
                let r = residual[d];
                for x in -COEFF..=COEFF {
                    let y = r - x;
                    if y.abs() > COEFF {
                        continue;
                    }
                    Self::apply(residual, first, x);
                    Self::apply(residual, second, y);
                    let ok = self.descend(d - 1, residual);
                    Self::apply(residual, first, -x);
                    Self::apply(residual, second, -y);
                    if ok {
                        return true;
                    }
                }
                false
            }
            _ => unreachable!("at most two columns share a largest index"),
        }
    }
}

fn oracle_equivalence(corpus: &[CycloVector]) -> Check {
    const BOUND: u64 = 12;
    let results: Vec<Check> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, zeta)| {
            let mut queries: Vec<BTreeSet<u64>> = (1..=BOUND).map(|p| set(&[p])).collect();
            queries.push(BTreeSet::new());
            queries.push(set(&[1, 2]));
            for excluded in queries {
                let out = find_representation_avoiding(zeta, &excluded, BOUND)
                    .map_err(|e| format!("#{i} {zeta}: {e}"))?;
                let allowed: Vec<u64> = (1..=BOUND).filter(|p| !excluded.contains(p)).collect();
                match out {
                    Avoidance::Found(rep) => {
                        ensure(rep.product() == *zeta, || {
                            format!("#{i} {zeta} avoiding {excluded:?}: witness multiplies to {}", rep.product())
                        })?;
                        // keeps the oracle honest: a small witness must be found by it too
                        if rep.factors().iter().all(|f| f.e.abs() <= COEFF) {
                            ensure(BruteForce::new(&allowed).solvable(zeta), || {
                                format!("#{i} {zeta} avoiding {excluded:?}: brute force missed {rep}")
                            })?;
                        }
                    }
                    Avoidance::Infeasible(_) => {
                        ensure(!BruteForce::new(&allowed).solvable(zeta), || {
                            format!("#{i} {zeta} avoiding {excluded:?}: brute force found a solution")
                        })?;
                    }
                }
            }
            Ok(())
        })
        .collect();
    results.into_iter().collect()
}

fn even_exclusion(corpus: &[CycloVector]) -> Check {
    for (i, zeta) in corpus.iter().enumerate() {
        for bound in [12, mperl_core::default_bound(zeta)] {
            let r = minimal_lefschetz_periods(zeta, bound).map_err(|e| format!("#{i}: {e}"))?;
            ensure(r.periods.iter().all(|p| p % 2 == 1), || {
                format!("#{i} {zeta} P={bound}: {:?}", r.periods)
            })?;
        }
    }
    Ok(())
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("sphere grid", Box::new(sphere_grid)),
        ("product-of-spheres grid", Box::new(product_grid)),
        ("product tables", Box::new(tables)),
        ("projective spaces", Box::new(projective)),
        ("torus worked example", Box::new(torus_example)),
        ("forced alternatives of 1+t^2", Box::new(one_plus_t_squared)),
        ("series identity", Box::new(series_identity)),
        ("oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("even exclusion", Box::new(|| even_exclusion(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  {}. {name} ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  {}. {name} ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
