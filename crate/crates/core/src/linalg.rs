//! Small dense complex matrices and validated density matrices.
//!
//! Everything in this crate runs on 2×2 and 4×4 matrices, so the
//! representation is a plain row-major `Vec` of `Complex64` with no attempt
//! at sparsity or blocking.

use num_complex::Complex;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type Complex64 = Complex<f64>;

/// Entrywise equality tolerance for Hermiticity and trace checks.
pub const EQUALITY_TOL: f64 = 1e-12;

/// Positive-semidefiniteness tolerance: min eigenvalue must stay above `-PSD_TOL`.
pub const PSD_TOL: f64 = 1e-10;

/// Additive tolerance on Bloch-vector and polar-parameter norm checks.
pub const NORM_TOL: f64 = 1e-12;

/// Dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Create a matrix from row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape {
                context: format!(
                    "{} entries supplied for a {}x{} matrix",
                    data.len(),
                    rows,
                    cols
                ),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build a 2×2 matrix from four complex entries, row by row.
    pub fn from_2x2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self {
            rows: 2,
            cols: 2,
            data: vec![a, b, c, d],
        }
    }

    /// Build a matrix from separate real and imaginary row-major layers.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        let rows = re.len();
        if rows == 0 || im.len() != rows {
            return Err(Error::Shape {
                context: "real and imaginary layers must have the same nonzero row count".into(),
            });
        }
        let cols = re[0].len();
        let mut data = Vec::with_capacity(rows * cols);
        for (rr, ri) in re.iter().zip(im.iter()) {
            if rr.len() != cols || ri.len() != cols {
                return Err(Error::Shape {
                    context: "ragged rows in matrix layers".into(),
                });
            }
            for (x, y) in rr.iter().zip(ri.iter()) {
                data.push(Complex64::new(*x, *y));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.cols + col] = value;
    }

    /// Row-major view of the entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Transpose without conjugation.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                context: format!(
                    "cannot multiply {}x{} by {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape {
                context: format!(
                    "cannot combine {}x{} with {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| f(*a, *b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Multiply every entry by a complex factor.
    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Multiply every entry by a real factor.
    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Largest entrywise deviation from another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.rows, other.rows);
        debug_assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest deviation from Hermitian symmetry.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Whether the matrix is Hermitian within `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_deviation() <= tol
    }

    /// Pauli x matrix.
    pub fn pauli_x() -> Self {
        Self::from_2x2(
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        )
    }

    /// Pauli y matrix.
    pub fn pauli_y() -> Self {
        Self::from_2x2(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        )
    }

    /// Pauli z matrix.
    pub fn pauli_z() -> Self {
        Self::from_2x2(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
        )
    }

    /// `{I, pauli_x, pauli_y, pauli_z}` — a complete operator basis for 2×2.
    pub fn pauli_basis() -> [Self; 4] {
        [
            Self::identity(2),
            Self::pauli_x(),
            Self::pauli_y(),
            Self::pauli_z(),
        ]
    }
}

/// Tr(A·B) without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if a.cols() != b.rows() || b.cols() != a.rows() {
        return Err(Error::Shape {
            context: format!(
                "trace product needs {}x{} against {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            ),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            acc += a.get(i, k) * b.get(k, i);
        }
    }
    Ok(acc)
}

/// Kronecker product of two square matrices.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() || !b.is_square() {
        return Err(Error::Shape {
            context: "tensor product requires square factors".into(),
        });
    }
    let (na, nb) = (a.rows(), b.rows());
    let n = na * nb;
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            for k in 0..nb {
                for l in 0..nb {
                    out.set(i * nb + k, j * nb + l, aij * b.get(k, l));
                }
            }
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// 2×2 inputs are solved in closed form; larger inputs go through a cyclic
/// complex Jacobi iteration, which keeps near-zero eigenvalues of
/// rank-deficient states at machine-precision accuracy.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::Shape {
            context: format!("eigenvalues need a square matrix, got {}x{}", m.rows(), m.cols()),
        });
    }
    let dev = m.hermiticity_deviation();
    if dev > 1e-9 {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = m.rows();
    match n {
        0 => Ok(vec![]),
        1 => Ok(vec![m.get(0, 0).re]),
        2 => {
            let a = m.get(0, 0).re;
            let d = m.get(1, 1).re;
            let b = m.get(0, 1);
            let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
            let mean = 0.5 * (a + d);
            Ok(vec![mean - half_gap, mean + half_gap])
        }
        _ => Ok(jacobi_eigenvalues(m)),
    }
}

/// Cyclic Jacobi sweeps on a Hermitian matrix; returns sorted eigenvalues.
fn jacobi_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    // Symmetrize so stray rounding in the input cannot accumulate.
    let mut a = m.add(&m.adjoint()).expect("square").scale_re(0.5);
    let scale = a.max_abs().max(1.0);
    for _ in 0..60 {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let phase = apq / r;
                // Unitary plane rotation zeroing the (p, q) entry.
                let mut g = ComplexMatrix::identity(n);
                g.set(p, p, Complex64::new(c, 0.0));
                g.set(q, q, Complex64::new(c, 0.0));
                g.set(p, q, phase * s);
                g.set(q, p, -phase.conj() * s);
                a = g.adjoint().mul(&a).expect("square").mul(&g).expect("square");
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

/// Validated quantum state: Hermitian, unit trace, positive semidefinite.
///
/// A state built from Bloch coordinates remembers them so the
/// coordinate roundtrip is bitwise exact.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    bloch: Option<[f64; 3]>,
}

impl DensityMatrix {
    /// Qubit state from Bloch coordinates: ½[[1+z, x+iy], [x−iy, 1−z]].
    pub fn from_bloch(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm * norm > 1.0 + NORM_TOL {
            return Err(Error::BlochNormExceedsOne { norm });
        }
        let matrix = ComplexMatrix::from_2x2(
            Complex64::new(0.5 * (1.0 + z), 0.0),
            Complex64::new(0.5 * x, 0.5 * y),
            Complex64::new(0.5 * x, -0.5 * y),
            Complex64::new(0.5 * (1.0 - z), 0.0),
        );
        Ok(Self {
            matrix,
            bloch: Some([x, y, z]),
        })
    }

    /// Qubit state from polar parameters: [[a, c·e^{iξ}], [c·e^{−iξ}, 1−a]].
    pub fn from_polar(a: f64, c: f64, xi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) || c < 0.0 || c * c > a * (1.0 - a) + NORM_TOL {
            return Err(Error::InvalidPolar { a, c });
        }
        let off = Complex64::from_polar(c, xi);
        let matrix = ComplexMatrix::from_2x2(
            Complex64::new(a, 0.0),
            off,
            off.conj(),
            Complex64::new(1.0 - a, 0.0),
        );
        Ok(Self {
            matrix,
            bloch: None,
        })
    }

    /// Validate an arbitrary 2×2 or 4×4 matrix as a quantum state.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let n = matrix.rows();
        if !matrix.is_square() || (n != 2 && n != 4) {
            return Err(Error::Shape {
                context: format!(
                    "density matrices are 2x2 or 4x4, got {}x{}",
                    matrix.rows(),
                    matrix.cols()
                ),
            });
        }
        let deviation = matrix.hermiticity_deviation();
        if deviation > EQUALITY_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > EQUALITY_TOL || trace.im.abs() > EQUALITY_TOL {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let eigs = hermitian_eigenvalues(&matrix)?;
        let min_eigenvalue = eigs[0];
        if min_eigenvalue < -PSD_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self {
            matrix,
            bloch: None,
        })
    }

    /// Hilbert-space dimension (2 or 4).
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Bloch coordinates of a 2×2 state.
    ///
    /// Returns the stored coordinates when the state was built from them,
    /// otherwise reads them off the matrix: z = ρ00 − ρ11, x = 2·Re ρ01,
    /// y = 2·Im ρ01.
    pub fn bloch_vector(&self) -> Result<[f64; 3]> {
        if self.dim() != 2 {
            return Err(Error::Shape {
                context: format!("Bloch coordinates are defined for 2x2 states, got {}x{}", self.dim(), self.dim()),
            });
        }
        if let Some(b) = self.bloch {
            return Ok(b);
        }
        let off = self.matrix.get(0, 1);
        Ok([
            2.0 * off.re,
            2.0 * off.im,
            self.matrix.get(0, 0).re - self.matrix.get(1, 1).re,
        ])
    }

    /// Tr(ρ²) — 1 for pure states, 1/dim for maximally mixed ones.
    pub fn purity(&self) -> f64 {
        trace_product(&self.matrix, &self.matrix)
            .expect("square")
            .re
    }
}
