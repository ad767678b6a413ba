use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("the zero polynomial has no weight structure")]
    ZeroPolynomial,

    #[error("polynomial is not strongly polar homogeneous")]
    NotStronglyPolarHomogeneous,

    #[error("expected a one-variable polynomial, found {n} variables")]
    NotOneVariable { n: usize },

    #[error("polynomial vanishes on the contour (|g| = {modulus:e} below {threshold:e})")]
    ZeroOnContour { modulus: f64, threshold: f64 },

    #[error("winding refinement exhausted after {samples} samples")]
    RefinementExhausted { samples: usize },

    #[error("polynomial is not monic: top radial degree {degree} attained by {count} monomials")]
    NotMonic { degree: u32, count: usize },

    #[error("root cluster near {center} (half-width {half_width:e}) could not be certified")]
    IndeterminateCluster { center: Complex64, half_width: f64 },

    #[error("subdivision exceeded the budget of {limit} boxes")]
    BoxBudgetExceeded { limit: usize },

    #[error("index sum {index_sum} disagrees with the winding at infinity {at_infinity}")]
    IndexSumMismatch { index_sum: i64, at_infinity: i64 },

    #[error("point at infinity could not be separated from the chart")]
    DegenerateAtInfinity,

    #[error("no generic line found after {rejections} consecutive rejections")]
    GenericityFailure { rejections: usize },

    #[error("2 - 2g = 3 - {chi_f}/{q} has no non-negative integral solution g")]
    NonIntegralGenus { chi_f: i64, q: i64 },

    #[error("{value} is not divisible by {divisor}")]
    Divisibility { value: i64, divisor: i64 },

    #[error("ambient dimension n = {n} is outside the supported range")]
    AmbientDimension { n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("syntax error at {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    /// Variant name, used to tally failures.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::VariableOutOfRange { .. } => "VariableOutOfRange",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotStronglyPolarHomogeneous => "NotStronglyPolarHomogeneous",
            Error::NotOneVariable { .. } => "NotOneVariable",
            Error::ZeroOnContour { .. } => "ZeroOnContour",
            Error::RefinementExhausted { .. } => "RefinementExhausted",
            Error::NotMonic { .. } => "NotMonic",
            Error::IndeterminateCluster { .. } => "IndeterminateCluster",
            Error::BoxBudgetExceeded { .. } => "BoxBudgetExceeded",
            Error::IndexSumMismatch { .. } => "IndexSumMismatch",
            Error::DegenerateAtInfinity => "DegenerateAtInfinity",
            Error::GenericityFailure { .. } => "GenericityFailure",
            Error::NonIntegralGenus { .. } => "NonIntegralGenus",
            Error::Divisibility { .. } => "Divisibility",
            Error::AmbientDimension { .. } => "AmbientDimension",
            Error::InvalidParams(_) => "InvalidParams",
            Error::Parse { .. } => "Parse",
        }
    }
}
