//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building states, schemes, or transforms.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Matrix dimensions do not fit the requested operation.
    #[error("shape mismatch: {context}")]
    Shape { context: String },

    /// A matrix required to be Hermitian is not.
    #[error("matrix is not Hermitian (max |M - M^H| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    /// A density matrix whose trace differs from one.
    #[error("density matrix trace must be 1, found {trace}")]
    TraceNotOne { trace: f64 },

    /// A density matrix with a negative eigenvalue.
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// Bloch vector outside the unit ball.
    #[error("Bloch vector norm {norm} exceeds 1")]
    BlochNormExceedsOne { norm: f64 },

    /// Polar parameters violating 0 <= a <= 1, c >= 0, c^2 <= a(1-a).
    #[error("polar parameters out of range (need 0 <= a <= 1, c >= 0, c^2 <= a(1-a)): a = {a}, c = {c}")]
    InvalidPolar { a: f64, c: f64 },

    /// Quadrature nodes counts must be at least one.
    #[error("quadrature sizes must be >= 1, got n_theta = {n_theta}, n_psi = {n_psi}")]
    QuadratureSize { n_theta: usize, n_psi: usize },

    /// Quadrature not exact to the degree an operation requires.
    #[error("quadrature exactness degree {actual} is below the required degree {required}")]
    QuadratureDegree { required: u32, actual: u32 },

    /// A quantizer/dequantizer family failing its self-consistency identity.
    #[error("scheme `{label}` self-consistency residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    SchemeInconsistent {
        label: String,
        residual: f64,
        tolerance: f64,
    },

    /// Symbols combined across different schemes.
    #[error("symbols belong to different schemes")]
    SchemeMismatch,

    /// Mean values are only defined for Hermitian observables.
    #[error("observable must be Hermitian (max |M - M^H| = {deviation:.3e})")]
    NonHermitianObservable { deviation: f64 },

    /// Wigner values that do not sum to one.
    #[error("Wigner values must sum to 1, found {sum}")]
    WignerNotNormalized { sum: f64 },
}
