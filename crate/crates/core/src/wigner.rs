//! Discrete Wigner functions of a qubit: four quasiprobability values on
//! the phase-space points, available in the two operator-basis variants,
//! with state reconstruction and the change of basis between variants.

use crate::error::{Error, Result};
use crate::linalg::{trace_product, ComplexMatrix, DensityMatrix, PSD_TOL};
use crate::phase_space::{phase_point_operators, PhasePoint, Variant};

/// Quasiprobability quadruple indexed by phase point, in the canonical
/// order (0,0), (0,1), (1,0), (1,1). Values of a valid state sum to one and
/// may be negative, within [(1−√3)/4, (1+√3)/4].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerFunction {
    variant: Variant,
    values: [f64; 4],
}

impl WignerFunction {
    pub fn new(variant: Variant, values: [f64; 4]) -> Self {
        Self { variant, values }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn values(&self) -> [f64; 4] {
        self.values
    }

    pub fn value(&self, p: PhasePoint) -> f64 {
        self.values[p.index()]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Wigner function of a qubit state: W(j,k) = Tr(ρ·O_{j,k})/2 with O the
/// phase-point operator family of the chosen variant.
pub fn wigner(rho: &DensityMatrix, variant: Variant) -> Result<WignerFunction> {
    if rho.dim() != 2 {
        return Err(Error::Shape {
            context: format!("Wigner function needs a 2x2 state, got {0}x{0}", rho.dim()),
        });
    }
    let ops = phase_point_operators(variant);
    let mut values = [0.0; 4];
    for (v, op) in values.iter_mut().zip(ops.iter()) {
        let t = trace_product(rho.matrix(), op.matrix()).expect("2x2");
        debug_assert!(t.im.abs() <= 1e-13);
        *v = 0.5 * t.re;
    }
    Ok(WignerFunction::new(variant, values))
}

/// Outcome of rebuilding a state from a Wigner quadruple. The linear
/// reconstruction always yields a Hermitian unit-trace matrix; positivity
/// depends on the input values, so it is reported rather than enforced.
#[derive(Debug, Clone)]
pub struct StateReconstruction {
    matrix: ComplexMatrix,
    min_eigenvalue: f64,
}

impl StateReconstruction {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// Whether the reconstructed matrix is a physical state.
    pub fn is_physical(&self) -> bool {
        self.min_eigenvalue >= -PSD_TOL
    }

    /// Validate into a density matrix; fails on non-physical quadruples.
    pub fn into_density(self) -> Result<DensityMatrix> {
        DensityMatrix::from_matrix(self.matrix)
    }
}

/// Rebuild the state: ρ = Σ_{j,k} W(j,k)·O_{j,k}. Requires the values to
/// sum to one; positivity of the result is reported, not required.
pub fn density_from_wigner(w: &WignerFunction) -> Result<StateReconstruction> {
    let sum = w.sum();
    if (sum - 1.0).abs() > 1e-10 {
        return Err(Error::WignerNotNormalized { sum });
    }
    let ops = phase_point_operators(w.variant());
    let mut acc = ComplexMatrix::zeros(2, 2);
    for (value, op) in w.values().iter().zip(ops.iter()) {
        acc = acc.add(&op.matrix().scale_re(*value)).expect("2x2");
    }
    let eigs = crate::linalg::hermitian_eigenvalues(&acc)?;
    Ok(StateReconstruction {
        matrix: acc,
        min_eigenvalue: eigs[0],
    })
}

/// Change of operator basis: W_target(i,j) = ½·Σ_{l,k} W_source(l,k)·
/// Tr(O^target_{i,j}·O^source_{l,k}). Converting to the same variant is the
/// identity.
pub fn convert_basis(w: &WignerFunction, target: Variant) -> WignerFunction {
    if w.variant() == target {
        return *w;
    }
    let target_ops = phase_point_operators(target);
    let source_ops = phase_point_operators(w.variant());
    let mut values = [0.0; 4];
    for (out, t_op) in values.iter_mut().zip(target_ops.iter()) {
        let mut acc = 0.0;
        for (v, s_op) in w.values().iter().zip(source_ops.iter()) {
            let overlap = trace_product(t_op.matrix(), s_op.matrix()).expect("2x2");
            debug_assert!(overlap.im.abs() <= 1e-13);
            acc += v * overlap.re;
        }
        *out = 0.5 * acc;
    }
    WignerFunction::new(target, values)
}
