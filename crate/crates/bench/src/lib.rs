//! Fixed inputs shared by the benchmarks.

use mperl_core::{zeta_from_homology, CycloVector, ManifoldSpec};

/// The zeta functions of every catalog map with dimensions up to `max_dim`.
pub fn catalog_zetas(max_dim: u32) -> Vec<CycloVector> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        for d in [1, -1] {
            out.push(ManifoldSpec::Sphere { n, degree: d });
        }
        for m in 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(ManifoldSpec::ProductOfSpheres { m, n, a, b });
            }
        }
    }
    out.iter()
        .map(|s| zeta_from_homology(&s.model().unwrap()).unwrap())
        .collect()
}

/// Deterministic mixed-sign vectors over indices `1..=max_index`.
pub fn mixed_zetas(count: usize, max_index: u64) -> Vec<CycloVector> {
    // small LCG so the corpus never changes between runs
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state >> 33
    };
    (0..count)
        .map(|_| {
            let terms = 1 + next() % 4;
            CycloVector::from_exponents((0..terms).map(|_| {
                let d = 1 + next() % max_index;
                let e = (next() % 7) as i64 - 3;
                (d, e)
            }))
        })
        .collect()
}
