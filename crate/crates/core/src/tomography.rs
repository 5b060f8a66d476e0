//! Spin-1/2 tomography: measurement-axis dequantizers, their dual
//! quantizers, tomograms, state reconstruction from tomograms, and the
//! two-qubit tensor-product extension.

use crate::error::{Error, Result};
use crate::linalg::{tensor_product, trace_product, Complex64, ComplexMatrix, DensityMatrix};
use crate::quadrature::SphereQuadrature;

/// Measurement direction on the unit sphere, with an optional extra Euler
/// angle used only when building the full SU(2) rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub theta: f64,
    pub psi: f64,
    pub phi: Option<f64>,
}

impl Direction {
    pub fn new(theta: f64, psi: f64) -> Self {
        Self {
            theta,
            psi,
            phi: None,
        }
    }

    pub fn with_phi(theta: f64, psi: f64, phi: f64) -> Self {
        Self {
            theta,
            psi,
            phi: Some(phi),
        }
    }

    /// Unit vector (sinϑ·sinψ, sinϑ·cosψ, cosϑ).
    pub fn unit_vector(&self) -> [f64; 3] {
        [
            self.theta.sin() * self.psi.sin(),
            self.theta.sin() * self.psi.cos(),
            self.theta.cos(),
        ]
    }
}

/// Spin projection onto the measurement axis: m = ±1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinProjection {
    Up,
    Down,
}

impl SpinProjection {
    pub const BOTH: [SpinProjection; 2] = [SpinProjection::Up, SpinProjection::Down];

    /// The projection value ±1/2.
    pub fn value(self) -> f64 {
        match self {
            SpinProjection::Up => 0.5,
            SpinProjection::Down => -0.5,
        }
    }

    /// ±1 sign of the projection.
    pub fn sign(self) -> f64 {
        2.0 * self.value()
    }

    /// Computational-basis index of the eigenstate (|0⟩ for up).
    pub fn basis_index(self) -> usize {
        match self {
            SpinProjection::Up => 0,
            SpinProjection::Down => 1,
        }
    }
}

/// The traceless direction matrix [[cosϑ, sinϑ·e^{−iψ}], [sinϑ·e^{iψ}, −cosϑ]]
/// shared by the dequantizer and the quantizer.
fn direction_matrix(d: &Direction) -> ComplexMatrix {
    let (s, c) = (d.theta.sin(), d.theta.cos());
    let off = Complex64::from_polar(s, -d.psi);
    ComplexMatrix::from_2x2(
        Complex64::new(c, 0.0),
        off,
        off.conj(),
        Complex64::new(-c, 0.0),
    )
}

/// SU(2) rotation matrix for Euler angles (ϑ, φ, ψ).
pub fn su2_matrix(theta: f64, phi: f64, psi: f64) -> ComplexMatrix {
    let (ch, sh) = ((0.5 * theta).cos(), (0.5 * theta).sin());
    ComplexMatrix::from_2x2(
        Complex64::from_polar(ch, 0.5 * (phi + psi)),
        Complex64::from_polar(sh, 0.5 * (phi - psi)),
        -Complex64::from_polar(sh, 0.5 * (-phi + psi)),
        Complex64::from_polar(ch, -0.5 * (phi + psi)),
    )
}

/// Projector onto spin projection `m` along direction `d`:
/// ½·I + sign(m)·½·M(ϑ, ψ). Equals U†|m⟩⟨m|U for any φ.
pub fn dequantizer(m: SpinProjection, d: &Direction) -> ComplexMatrix {
    let q = ComplexMatrix::identity(2)
        .scale_re(0.5)
        .add(&direction_matrix(d).scale_re(0.5 * m.sign()))
        .expect("2x2");
    debug_assert!({
        let u = su2_matrix(d.theta, d.phi.unwrap_or(0.0), d.psi);
        let mut proj = ComplexMatrix::zeros(2, 2);
        proj.set(m.basis_index(), m.basis_index(), Complex64::new(1.0, 0.0));
        let conj = u.adjoint().mul(&proj).unwrap().mul(&u).unwrap();
        conj.max_abs_diff(&q) <= 1e-12
    });
    q
}

/// Dual operator to [`dequantizer`]: ½·I + sign(m)·(3/2)·M(ϑ, ψ).
pub fn quantizer(m: SpinProjection, d: &Direction) -> ComplexMatrix {
    ComplexMatrix::identity(2)
        .scale_re(0.5)
        .add(&direction_matrix(d).scale_re(1.5 * m.sign()))
        .expect("2x2")
}

/// Probability of measuring projection `m` along `d` in state `rho`.
pub fn tomogram(rho: &DensityMatrix, m: SpinProjection, d: &Direction) -> f64 {
    debug_assert_eq!(rho.dim(), 2);
    let w = trace_product(rho.matrix(), &dequantizer(m, d))
        .expect("2x2")
        .re;
    debug_assert!({
        // Cross-check against the closed form in Bloch coordinates.
        let [x, y, z] = rho.bloch_vector().expect("2x2");
        let g = z * d.theta.cos() + x * d.theta.sin() * d.psi.cos()
            - y * d.theta.sin() * d.psi.sin();
        (w - 0.5 * (1.0 + m.sign() * g)).abs() <= 1e-12
    });
    w
}

/// A state's tomogram viewed as an evaluable probability distribution.
#[derive(Debug, Clone)]
pub struct Tomogram {
    state: DensityMatrix,
}

impl Tomogram {
    pub fn new(state: DensityMatrix) -> Self {
        Self { state }
    }

    pub fn state(&self) -> &DensityMatrix {
        &self.state
    }

    pub fn value(&self, m: SpinProjection, d: &Direction) -> f64 {
        tomogram(&self.state, m, d)
    }
}

/// Tensor-product dequantizer for a joint two-spin measurement.
pub fn two_qubit_dequantizer(
    m1: SpinProjection,
    m2: SpinProjection,
    d1: &Direction,
    d2: &Direction,
) -> ComplexMatrix {
    tensor_product(&dequantizer(m1, d1), &dequantizer(m2, d2)).expect("2x2 factors")
}

/// Tensor-product quantizer for a joint two-spin measurement.
pub fn two_qubit_quantizer(
    m1: SpinProjection,
    m2: SpinProjection,
    d1: &Direction,
    d2: &Direction,
) -> ComplexMatrix {
    tensor_product(&quantizer(m1, d1), &quantizer(m2, d2)).expect("2x2 factors")
}

/// Both tensor-product operators at once.
pub fn two_qubit_operators(
    m1: SpinProjection,
    m2: SpinProjection,
    d1: &Direction,
    d2: &Direction,
) -> (ComplexMatrix, ComplexMatrix) {
    (
        two_qubit_dequantizer(m1, m2, d1, d2),
        two_qubit_quantizer(m1, m2, d1, d2),
    )
}

/// Joint probability of projections (m1, m2) along (d1, d2) in a two-qubit state.
pub fn two_qubit_tomogram(
    rho: &DensityMatrix,
    m1: SpinProjection,
    m2: SpinProjection,
    d1: &Direction,
    d2: &Direction,
) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::Shape {
            context: format!("two-qubit tomogram needs a 4x4 state, got {0}x{0}", rho.dim()),
        });
    }
    Ok(trace_product(rho.matrix(), &two_qubit_dequantizer(m1, m2, d1, d2))?.re)
}

/// Which tensor factor survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Partial trace of a 4×4 operator down to the chosen 2×2 factor.
pub fn partial_trace(m: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::Shape {
            context: format!("partial trace needs a 4x4 matrix, got {}x{}", m.rows(), m.cols()),
        });
    }
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..2 {
                let (row, col) = match keep {
                    Subsystem::First => (i * 2 + t, j * 2 + t),
                    Subsystem::Second => (t * 2 + i, t * 2 + j),
                };
                acc += m.get(row, col);
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Reconstruct a qubit state from its tomogram: the quantizer-weighted
/// average Σ_m ∫ w(m, n) D(m, n) dΩ/4π evaluated on the given quadrature.
pub fn density_from_tomogram<F>(tomogram: F, quadrature: &SphereQuadrature) -> Result<DensityMatrix>
where
    F: Fn(SpinProjection, &Direction) -> f64,
{
    if quadrature.exactness() < 2 {
        return Err(Error::QuadratureDegree {
            required: 2,
            actual: quadrature.exactness(),
        });
    }
    let mut acc = ComplexMatrix::zeros(2, 2);
    for m in SpinProjection::BOTH {
        for (&(theta, psi), &w) in quadrature.nodes().iter().zip(quadrature.weights().iter()) {
            let d = Direction::new(theta, psi);
            let value = tomogram(m, &d);
            acc = acc.add(&quantizer(m, &d).scale_re(w * value)).expect("2x2");
        }
    }
    DensityMatrix::from_matrix(acc)
}
