use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A degree-like parameter is not a root of unity.
    #[error("invalid degree {0}: quasi-unipotent maps need degree 1 or -1")]
    InvalidDegree(i64),

    #[error("product of spheres needs distinct dimensions, got m = n = {0}")]
    EqualDimensions(u32),

    /// `degree` is the homology degree whose induced map failed, when known.
    #[error("{}", not_quasi_unipotent_message(*.degree))]
    NotQuasiUnipotent { degree: Option<usize> },

    #[error("not representable as a product of (1 ± t^p)^k: {0}")]
    NotRepresentable(String),

    #[error("period bound {bound} is too small, at least {required} is needed")]
    BoundTooSmall { bound: u64, required: u64 },

    #[error("period bound {bound} exceeds the enumeration limit {limit}")]
    BoundTooLarge { bound: u64, limit: u64 },

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed homology model: {0}")]
    MalformedModel(String),
}

fn not_quasi_unipotent_message(degree: Option<usize>) -> String {
    match degree {
        Some(k) => format!("induced map in degree {k} is not quasi-unipotent"),
        None => "polynomial is not a product of cyclotomic polynomials".to_string(),
    }
}
