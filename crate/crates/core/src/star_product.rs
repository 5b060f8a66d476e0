//! Generic quantizer/dequantizer schemes.
//!
//! A scheme is a finite family of (dequantizer, quantizer) operator pairs
//! with a weighted index set. Operators map to scalar symbols through the
//! dequantizers; the quantizers reconstruct them back. Continuous index
//! manifolds enter as quadrature node sets, so every integral below is a
//! deterministic weighted sum in fixed point order.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{trace_product, Complex64, ComplexMatrix, DensityMatrix};
use crate::phase_space::{phase_point_operators, PhasePoint, Variant};
use crate::quadrature::SphereQuadrature;
use crate::tomography::{dequantizer, quantizer, Direction, SpinProjection};

/// One point of a scheme's index set: a discrete label, an optional
/// spherical node, and a positive measure weight.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemePoint {
    pub index: Vec<i32>,
    pub node: Option<(f64, f64)>,
    pub weight: f64,
}

impl SchemePoint {
    pub fn discrete(index: Vec<i32>, weight: f64) -> Self {
        Self {
            index,
            node: None,
            weight,
        }
    }

    pub fn with_node(index: Vec<i32>, theta: f64, psi: f64, weight: f64) -> Self {
        Self {
            index,
            node: Some((theta, psi)),
            weight,
        }
    }
}

/// An indexed family of dequantizer/quantizer pairs satisfying the
/// self-consistency identity
/// Σ_{x'} w(x')·Tr(Q(x)·D(x'))·Tr(A·Q(x')) = Tr(A·Q(x)) for every operator A.
///
/// Construction verifies the identity and rejects families whose residual
/// exceeds the stated tolerance.
#[derive(Debug)]
pub struct Scheme {
    label: String,
    dim: usize,
    tolerance: f64,
    consistency_residual: f64,
    points: Vec<SchemePoint>,
    dequantizers: Vec<ComplexMatrix>,
    quantizers: Vec<ComplexMatrix>,
    star_table: OnceLock<Vec<Complex64>>,
}

impl Scheme {
    /// Build and self-check a scheme.
    pub fn new(
        label: impl Into<String>,
        dim: usize,
        tolerance: f64,
        points: Vec<SchemePoint>,
        dequantizers: Vec<ComplexMatrix>,
        quantizers: Vec<ComplexMatrix>,
    ) -> Result<Self> {
        let label = label.into();
        if points.len() != dequantizers.len() || points.len() != quantizers.len() {
            return Err(Error::Shape {
                context: format!(
                    "scheme `{label}`: {} points, {} dequantizers, {} quantizers",
                    points.len(),
                    dequantizers.len(),
                    quantizers.len()
                ),
            });
        }
        for p in &points {
            if p.weight <= 0.0 || !p.weight.is_finite() {
                return Err(Error::Shape {
                    context: format!("scheme `{label}`: nonpositive weight {}", p.weight),
                });
            }
        }
        for m in dequantizers.iter().chain(quantizers.iter()) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape {
                    context: format!(
                        "scheme `{label}`: operator is {}x{}, expected {dim}x{dim}",
                        m.rows(),
                        m.cols()
                    ),
                });
            }
            let dev = m.hermiticity_deviation();
            if dev > 1e-12 {
                return Err(Error::NotHermitian { deviation: dev });
            }
        }
        let scheme = Self {
            label,
            dim,
            tolerance,
            consistency_residual: 0.0,
            points,
            dequantizers,
            quantizers,
            star_table: OnceLock::new(),
        };
        let residual = scheme.consistency_residual_now();
        if residual > tolerance {
            return Err(Error::SchemeInconsistent {
                label: scheme.label,
                residual,
                tolerance,
            });
        }
        Ok(Self {
            consistency_residual: residual,
            ..scheme
        })
    }

    /// Largest deviation of Σ_{x'} w'·Tr(Q(x)·D(x'))·Q(x') from Q(x);
    /// by linearity this bounds the self-consistency defect over all
    /// operators with unit-norm symbol coefficients.
    fn consistency_residual_now(&self) -> f64 {
        let mut residual: f64 = 0.0;
        for qx in &self.dequantizers {
            let mut acc = ComplexMatrix::zeros(self.dim, self.dim);
            for (point, (qp, dp)) in self
                .points
                .iter()
                .zip(self.dequantizers.iter().zip(self.quantizers.iter()))
            {
                let coeff = trace_product(qx, dp).expect("square") * point.weight;
                acc = acc.add(&qp.scale(coeff)).expect("same shape");
            }
            residual = residual.max(acc.max_abs_diff(qx));
        }
        residual
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Self-consistency residual measured at construction.
    pub fn consistency_residual(&self) -> f64 {
        self.consistency_residual
    }

    pub fn points(&self) -> &[SchemePoint] {
        &self.points
    }

    pub fn dequantizer_at(&self, i: usize) -> &ComplexMatrix {
        &self.dequantizers[i]
    }

    pub fn quantizer_at(&self, i: usize) -> &ComplexMatrix {
        &self.quantizers[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.points[i].weight
    }

    /// Symbol of an operator: Tr(A·Q(x)) at every point.
    pub fn symbol(&self, op: &ComplexMatrix) -> Result<Symbol<'_>> {
        self.symbol_impl(op, false)
    }

    /// Dual symbol of an operator: Tr(A·D(x)) at every point.
    pub fn dual_symbol(&self, op: &ComplexMatrix) -> Result<Symbol<'_>> {
        self.symbol_impl(op, true)
    }

    fn symbol_impl(&self, op: &ComplexMatrix, dual: bool) -> Result<Symbol<'_>> {
        if op.rows() != self.dim || op.cols() != self.dim {
            return Err(Error::Shape {
                context: format!(
                    "operator is {}x{}, scheme `{}` expects {}x{}",
                    op.rows(),
                    op.cols(),
                    self.label,
                    self.dim,
                    self.dim
                ),
            });
        }
        let family = if dual {
            &self.quantizers
        } else {
            &self.dequantizers
        };
        let values = family
            .iter()
            .map(|k| trace_product(op, k).expect("dims checked"))
            .collect();
        Ok(Symbol {
            scheme: self,
            values,
            dual,
        })
    }

    /// Star-product kernel Tr(D(x1)·D(x2)·Q(x3)) for three point indices.
    pub fn star_kernel(&self, x1: usize, x2: usize, x3: usize) -> Complex64 {
        let d1d2 = self.quantizers[x1]
            .mul(&self.quantizers[x2])
            .expect("square");
        trace_product(&d1d2, &self.dequantizers[x3]).expect("square")
    }

    /// Dense star-kernel table, built on first use; index order (x1, x2, x3).
    fn star_table(&self) -> &[Complex64] {
        self.star_table.get_or_init(|| {
            let n = self.len();
            let mut table = vec![Complex64::new(0.0, 0.0); n * n * n];
            for x1 in 0..n {
                for x2 in 0..n {
                    let d1d2 = self.quantizers[x1]
                        .mul(&self.quantizers[x2])
                        .expect("square");
                    for x3 in 0..n {
                        table[(x1 * n + x2) * n + x3] =
                            trace_product(&d1d2, &self.dequantizers[x3]).expect("square");
                    }
                }
            }
            table
        })
    }
}

/// Scalar representation of an operator on a scheme's index set.
#[derive(Debug, Clone)]
pub struct Symbol<'s> {
    scheme: &'s Scheme,
    values: Vec<Complex64>,
    dual: bool,
}

impl<'s> Symbol<'s> {
    /// Wrap raw symbol values for a scheme (one per point).
    pub fn from_values(scheme: &'s Scheme, values: Vec<Complex64>, dual: bool) -> Result<Self> {
        if values.len() != scheme.len() {
            return Err(Error::Shape {
                context: format!(
                    "symbol has {} values, scheme `{}` has {} points",
                    values.len(),
                    scheme.label(),
                    scheme.len()
                ),
            });
        }
        Ok(Self {
            scheme,
            values,
            dual,
        })
    }

    pub fn scheme(&self) -> &'s Scheme {
        self.scheme
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> Complex64 {
        self.values[i]
    }

    /// Whether the values came from the quantizer side.
    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// Rebuild the operator: Σ_x w(x)·f(x)·D(x) for plain symbols,
    /// Σ_x w(x)·f(x)·Q(x) for dual ones.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let family = if self.dual {
            &self.scheme.dequantizers
        } else {
            &self.scheme.quantizers
        };
        let mut acc = ComplexMatrix::zeros(self.scheme.dim, self.scheme.dim);
        for ((point, op), value) in self
            .scheme
            .points
            .iter()
            .zip(family.iter())
            .zip(self.values.iter())
        {
            acc = acc
                .add(&op.scale(value * point.weight))
                .expect("same shape");
        }
        acc
    }
}

/// The four-point scheme whose symbols are discrete Wigner functions:
/// dequantizers are the half phase-point operators, quantizers the
/// operators themselves, unit weights.
pub fn wigner_scheme(variant: Variant) -> Scheme {
    let ops = phase_point_operators(variant);
    let points = PhasePoint::ALL
        .iter()
        .map(|p| SchemePoint::discrete(vec![p.j() as i32, p.k() as i32], 1.0))
        .collect();
    let dequantizers = ops.iter().map(|op| op.matrix().scale_re(0.5)).collect();
    let quantizers = ops.iter().map(|op| op.matrix().clone()).collect();
    Scheme::new(
        format!("wigner-{variant}"),
        2,
        1e-10,
        points,
        dequantizers,
        quantizers,
    )
    .expect("phase-point operators are trace-orthogonal")
}

/// The spin-tomography scheme over {±1/2} × quadrature nodes, with the
/// normalized sphere measure per projection.
pub fn tomographic_scheme(quadrature: &SphereQuadrature) -> Result<Scheme> {
    if quadrature.exactness() < 2 {
        return Err(Error::QuadratureDegree {
            required: 2,
            actual: quadrature.exactness(),
        });
    }
    let mut points = Vec::with_capacity(2 * quadrature.len());
    let mut dequantizers = Vec::with_capacity(2 * quadrature.len());
    let mut quantizers = Vec::with_capacity(2 * quadrature.len());
    for m in SpinProjection::BOTH {
        for (&(theta, psi), &w) in quadrature.nodes().iter().zip(quadrature.weights().iter()) {
            let d = Direction::new(theta, psi);
            points.push(SchemePoint::with_node(
                vec![m.basis_index() as i32],
                theta,
                psi,
                w,
            ));
            dequantizers.push(dequantizer(m, &d));
            quantizers.push(quantizer(m, &d));
        }
    }
    Scheme::new("tomographic", 2, 1e-10, points, dequantizers, quantizers)
}

/// Kernel converting symbols of one scheme into symbols of another:
/// K(y, x) = Tr(Q_to(y)·D_from(x)).
#[derive(Debug)]
pub struct IntertwiningKernel<'a> {
    from: &'a Scheme,
    to: &'a Scheme,
    table: Vec<Complex64>,
}

/// Build the dense |to| × |from| intertwining table between two schemes of
/// equal dimension.
pub fn intertwining_kernel<'a>(
    from: &'a Scheme,
    to: &'a Scheme,
) -> Result<IntertwiningKernel<'a>> {
    if from.dim() != to.dim() {
        return Err(Error::Shape {
            context: format!(
                "cannot intertwine dimension {} with dimension {}",
                from.dim(),
                to.dim()
            ),
        });
    }
    let mut table = Vec::with_capacity(to.len() * from.len());
    for y in 0..to.len() {
        for x in 0..from.len() {
            table.push(
                trace_product(to.dequantizer_at(y), from.quantizer_at(x)).expect("dims match"),
            );
        }
    }
    Ok(IntertwiningKernel { from, to, table })
}

impl<'a> IntertwiningKernel<'a> {
    pub fn from_scheme(&self) -> &'a Scheme {
        self.from
    }

    pub fn to_scheme(&self) -> &'a Scheme {
        self.to
    }

    /// Kernel value K(y, x) by point indices.
    pub fn value(&self, y: usize, x: usize) -> Complex64 {
        self.table[y * self.from.len() + x]
    }

    /// Convert a symbol on the source scheme into the matching symbol on
    /// the target scheme: F(y) = Σ_x w(x)·K(y, x)·f(x).
    pub fn transport(&self, f: &Symbol<'_>) -> Result<Symbol<'a>> {
        if !std::ptr::eq(f.scheme(), self.from) {
            return Err(Error::SchemeMismatch);
        }
        let values = (0..self.to.len())
            .map(|y| {
                self.from
                    .points()
                    .iter()
                    .enumerate()
                    .map(|(x, p)| self.value(y, x) * f.value(x) * p.weight)
                    .sum()
            })
            .collect();
        Symbol::from_values(self.to, values, false)
    }
}

/// Star product of two symbols on the same scheme:
/// (f ⋆ g)(x) = Σ_{x1,x2} w(x1)·w(x2)·f(x1)·g(x2)·Tr(D(x1)·D(x2)·Q(x)).
pub fn star_multiply<'s>(a: &Symbol<'s>, b: &Symbol<'s>) -> Result<Symbol<'s>> {
    let scheme = a.scheme();
    if !std::ptr::eq(scheme, b.scheme()) {
        return Err(Error::SchemeMismatch);
    }
    let n = scheme.len();
    let table = scheme.star_table();
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    for x1 in 0..n {
        let fa = a.value(x1) * scheme.weight(x1);
        for x2 in 0..n {
            let coeff = fa * b.value(x2) * scheme.weight(x2);
            let row = &table[(x1 * n + x2) * n..(x1 * n + x2 + 1) * n];
            for (acc, k) in values.iter_mut().zip(row.iter()) {
                *acc += coeff * k;
            }
        }
    }
    Symbol::from_values(scheme, values, false)
}

/// Mean value of a Hermitian observable in a state, computed on the scheme:
/// Σ_x w(x)·w_ρ(x)·f_A^d(x) = Tr(ρ·A).
pub fn mean_value(rho: &DensityMatrix, observable: &ComplexMatrix, scheme: &Scheme) -> Result<f64> {
    let deviation = observable.hermiticity_deviation();
    if !observable.is_square() || deviation > 1e-12 {
        return Err(Error::NonHermitianObservable { deviation });
    }
    let state_symbol = scheme.symbol(rho.matrix())?;
    let dual = scheme.dual_symbol(observable)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, p) in scheme.points().iter().enumerate() {
        acc += state_symbol.value(i) * dual.value(i) * p.weight;
    }
    debug_assert!(acc.im.abs() <= 1e-10);
    Ok(acc.re)
}
