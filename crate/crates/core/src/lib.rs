//! Qubit states represented three ways — density matrices, discrete Wigner
//! functions on the 2×2 phase space, and spin tomograms — together with the
//! quantizer/dequantizer machinery that maps each representation onto the
//! others.
//!
//! The building blocks:
//!
//! - [`linalg`]: small dense complex matrices and validated density matrices.
//! - [`phase_space`]: the four-point discrete phase space, its lines and
//!   striations, and the phase-point operators they generate.
//! - [`quadrature`]: product quadrature on the unit sphere, exact for
//!   band-limited integrands.
//! - [`tomography`]: spin-1/2 tomographic operators, tomograms, and the
//!   two-qubit tensor-product extension.
//! - [`star_product`]: generic quantizer/dequantizer schemes, operator
//!   symbols, reconstruction, intertwining kernels, and the star product.
//! - [`wigner`]: discrete Wigner functions in the two operator bases and the
//!   change of basis between them.
//! - [`kernels`]: the explicit kernel tables connecting tomograms and Wigner
//!   functions in both directions.

pub mod error;
pub mod kernels;
pub mod linalg;
pub mod phase_space;
pub mod quadrature;
pub mod star_product;
pub mod tomography;
pub mod wigner;

pub use error::{Error, Result};
pub use kernels::KernelTable;
pub use linalg::{Complex64, ComplexMatrix, DensityMatrix};
pub use phase_space::{Line, PhasePoint, PhasePointOperator, Striation, StriationKind, Variant};
pub use quadrature::SphereQuadrature;
pub use star_product::{IntertwiningKernel, Scheme, SchemePoint, Symbol};
pub use tomography::{Direction, SpinProjection, Subsystem, Tomogram};
pub use wigner::{StateReconstruction, WignerFunction};
