//! Product quadrature on the unit sphere with the normalized measure
//! dΩ/4π: Gauss–Legendre nodes in u = cosϑ crossed with a uniform grid in ψ.
//!
//! After the uniform ψ grid averages out every harmonic of order below
//! `n_psi`, the surviving integrand is a polynomial in u, which
//! Gauss–Legendre handles exactly up to degree 2·n_theta − 1. The rule is
//! therefore exact for all spherical polynomials of degree up to
//! min(2·n_theta − 1, n_psi − 1).

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Normalized quadrature rule over the sphere.
#[derive(Debug, Clone)]
pub struct SphereQuadrature {
    nodes: Vec<(f64, f64)>,
    weights: Vec<f64>,
    exactness: u32,
}

impl SphereQuadrature {
    /// Product rule with `n_theta` Gauss–Legendre colatitude nodes and
    /// `n_psi` equispaced azimuth nodes. Weights sum to one.
    pub fn product_rule(n_theta: usize, n_psi: usize) -> Result<Self> {
        if n_theta == 0 || n_psi == 0 {
            return Err(Error::QuadratureSize { n_theta, n_psi });
        }
        let (gl_nodes, gl_weights) = gauss_legendre(n_theta);
        let mut nodes = Vec::with_capacity(n_theta * n_psi);
        let mut weights = Vec::with_capacity(n_theta * n_psi);
        for (u, gw) in gl_nodes.iter().zip(gl_weights.iter()) {
            let theta = u.clamp(-1.0, 1.0).acos();
            for j in 0..n_psi {
                let psi = 2.0 * PI * j as f64 / n_psi as f64;
                nodes.push((theta, psi));
                weights.push(0.5 * gw / n_psi as f64);
            }
        }
        let exactness = ((2 * n_theta - 1).min(n_psi - 1)) as u32;
        Ok(Self {
            nodes,
            weights,
            exactness,
        })
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// (ϑ, ψ) node list in fixed order.
    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    /// Weight list matching [`SphereQuadrature::nodes`].
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Largest spherical-polynomial degree the rule integrates exactly.
    pub fn exactness(&self) -> u32 {
        self.exactness
    }

    /// Weighted sum of `f` over the nodes, in fixed node order.
    pub fn integrate(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .map(|(&(theta, psi), &w)| w * f(theta, psi))
            .sum()
    }
}

impl Default for SphereQuadrature {
    /// The (3, 8) rule: exact through degree 5, comfortably past the
    /// degree-2 integrands this crate produces.
    fn default() -> Self {
        Self::product_rule(3, 8).expect("valid sizes")
    }
}

/// Gauss–Legendre nodes (ascending) and weights on [−1, 1].
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess for the i-th largest root.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Legendre polynomial P_n and its derivative at `x`, by recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let p_next = ((2 * k + 1) as f64 * x * p - k as f64 * p_prev) / (k + 1) as f64;
        p_prev = p;
        p = p_next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}
