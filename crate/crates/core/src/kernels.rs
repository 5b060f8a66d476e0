//! Explicit kernels connecting spin tomograms with discrete Wigner
//! functions, and the transforms they drive in both directions.
//!
//! The plain kernel pairs a measurement dequantizer with a phase-point
//! operator, Ker(m, n; j, k) = Tr(Q(m, n)·O_{j,k}); summed against a Wigner
//! quadruple it yields the tomogram. The dual kernel pairs the quantizer,
//! K̃er(m, n; j, k) = Tr(D(m, n)·O_{j,k})/2; integrated against a tomogram
//! over the sphere it yields the Wigner function back.

use crate::error::{Error, Result};
use crate::linalg::trace_product;
use crate::phase_space::{phase_point_operator, PhasePoint, Variant};
use crate::quadrature::SphereQuadrature;
use crate::tomography::{dequantizer, quantizer, Direction, SpinProjection};
use crate::wigner::WignerFunction;

/// One of the four kernel families, selected by operator-basis variant and
/// by plain/dual role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelTable {
    variant: Variant,
    dual: bool,
}

impl KernelTable {
    pub fn new(variant: Variant, dual: bool) -> Self {
        Self { variant, dual }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// Kernel value at (m, direction; point), from the trace definition.
    pub fn value(&self, m: SpinProjection, d: &Direction, p: PhasePoint) -> f64 {
        let op = phase_point_operator(p, self.variant);
        let t = if self.dual {
            0.5 * trace_product(&quantizer(m, d), op.matrix()).expect("2x2").re
        } else {
            trace_product(&dequantizer(m, d), op.matrix()).expect("2x2").re
        };
        t
    }
}

/// Convenience lookup into the kernel family selected by the arguments.
pub fn kernel_value(
    variant: Variant,
    dual: bool,
    m: SpinProjection,
    d: &Direction,
    p: PhasePoint,
) -> f64 {
    KernelTable::new(variant, dual).value(m, d, p)
}

/// Tomogram value from a Wigner quadruple:
/// w(m, ϑ, ψ) = Σ_{j,k} Ker(m, ϑ, ψ; j, k)·W(j, k).
///
/// The kernel family follows the quadruple's variant; both variants give
/// the same tomogram for quadruples of the same state.
pub fn tomogram_from_wigner(w: &WignerFunction, m: SpinProjection, d: &Direction) -> f64 {
    let table = KernelTable::new(w.variant(), false);
    PhasePoint::ALL
        .iter()
        .map(|p| table.value(m, d, *p) * w.value(*p))
        .sum()
}

/// Wigner quadruple from a tomogram:
/// W(j,k) = Σ_m ∫ w(m, ϑ, ψ)·K̃er(m, ϑ, ψ; j, k) dΩ/4π,
/// evaluated on the given quadrature and normalized to unit sum.
///
/// The integrand has spherical degree 2, so any rule with exactness ≥ 2
/// evaluates the integral exactly.
pub fn wigner_from_tomogram<F>(
    tomogram: F,
    variant: Variant,
    quadrature: &SphereQuadrature,
) -> Result<WignerFunction>
where
    F: Fn(SpinProjection, &Direction) -> f64,
{
    if quadrature.exactness() < 2 {
        return Err(Error::QuadratureDegree {
            required: 2,
            actual: quadrature.exactness(),
        });
    }
    let ops = PhasePoint::ALL.map(|p| phase_point_operator(p, variant));
    let mut values = [0.0; 4];
    for m in SpinProjection::BOTH {
        for (&(theta, psi), &weight) in quadrature.nodes().iter().zip(quadrature.weights().iter())
        {
            let d = Direction::new(theta, psi);
            let w = tomogram(m, &d);
            let quant = quantizer(m, &d);
            for (value, op) in values.iter_mut().zip(ops.iter()) {
                let dual_kernel = 0.5 * trace_product(&quant, op.matrix()).expect("2x2").re;
                *value += weight * w * dual_kernel;
            }
        }
    }
    let sum: f64 = values.iter().sum();
    for v in &mut values {
        *v /= sum;
    }
    Ok(WignerFunction::new(variant, values))
}
