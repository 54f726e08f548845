//! Exact Lefschetz numbers, Lefschetz zeta functions and minimal sets of
//! Lefschetz periods for quasi-unipotent self-maps of compact manifolds.
//!
//! Everything is computed in exact integer or rational arithmetic. A zeta
//! function is carried as a [`CycloVector`], an exponent vector over the
//! normalized cyclotomic polynomials, and the question "which periods does
//! every factorization into terms `(1 ± t^p)^{±1}` use?" becomes an integer
//! linear feasibility problem over that exponent lattice.

pub mod arith;
pub mod cyclo;
pub mod error;
pub mod expr;
pub mod homology;
pub mod lattice;
pub mod lefschetz;
pub mod matrix;
pub mod mperl;
pub mod poly;
pub mod series;
pub mod tables;

pub use cyclo::{factor_pm, poly_product_to_cyclovector, CycloVector, Sign};
pub use error::{Error, Result};
pub use homology::{
    product_model, projective_model, sphere_model, torus_zeta_fixture, validate_model, HomologyModel, ManifoldSpec,
    ProjectiveKind, ValidatedModel,
};
pub use lefschetz::{
    lefschetz_number, verify_series_identity, zeta_from_homology, zeta_from_periodic_data,
    PeriodicDatum, SeriesReport,
};
pub use expr::{format_factored, parse_representation, parse_zeta_expression};
pub use mperl::{
    classify, default_bound, find_representation_avoiding, forced_alternatives, forced_periods,
    minimal_lefschetz_periods, Avoidance, Factor, ForcedAlternatives, MPerResult, Representation,
    Status,
};
pub use poly::{cyclotomic, IntPoly};
pub use series::{expand, SeriesPrefix};
