//! The `verify` command: a registry of identity checks spanning the whole
//! library, each tagged with the identity labels it certifies so coverage
//! is auditable from the output.

use std::f64::consts::PI;

use qstar_core::kernels::{kernel_value, tomogram_from_wigner, wigner_from_tomogram};
use qstar_core::linalg::{tensor_product, trace_product, Complex64, ComplexMatrix, DensityMatrix};
use qstar_core::phase_space::{
    lines_through, phase_point_operator, phase_point_operators, striations, PhasePoint, Variant,
};
use qstar_core::star_product::{
    intertwining_kernel, star_multiply, tomographic_scheme, wigner_scheme,
};
use qstar_core::tomography::{
    density_from_tomogram, dequantizer, partial_trace, quantizer, su2_matrix, tomogram,
    two_qubit_tomogram, Direction, SpinProjection, Subsystem, Tomogram,
};
use qstar_core::wigner::{convert_basis, density_from_wigner, wigner, WignerFunction};
use qstar_core::SphereQuadrature;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::report::{CheckResult, VerifyReport};
use crate::state::MatrixJson;

const FIXTURES: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../core/fixtures/phase_point_operators.json"
));

struct Outcome {
    residual: f64,
    tolerance: f64,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

struct Check {
    name: &'static str,
    labels: &'static [&'static str],
    run: fn() -> Outcome,
}

fn random_bloch(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let x = rng.gen_range(-1.0..=1.0);
        let y = rng.gen_range(-1.0..=1.0);
        let z = rng.gen_range(-1.0..=1.0);
        if x * x + y * y + z * z <= 1.0 {
            return [x, y, z];
        }
    }
}

fn random_state(rng: &mut impl Rng) -> DensityMatrix {
    let [x, y, z] = random_bloch(rng);
    DensityMatrix::from_bloch(x, y, z).unwrap()
}

fn random_direction(rng: &mut impl Rng) -> Direction {
    let u: f64 = rng.gen_range(-1.0..=1.0);
    Direction::new(u.acos(), rng.gen_range(0.0..2.0 * PI))
}

fn random_operator(rng: &mut impl Rng) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            m.set(
                i,
                j,
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            );
        }
    }
    m
}

fn check_operator_fixtures() -> Outcome {
    let fixtures: serde_json::Value = serde_json::from_str(FIXTURES).expect("embedded fixtures");
    let mut residual: f64 = 0.0;
    for variant in Variant::BOTH {
        for p in PhasePoint::ALL {
            let key = format!("{}{}", p.j(), p.k());
            let json: MatrixJson =
                serde_json::from_value(fixtures[variant.to_string()][&key].clone())
                    .expect("fixture entry");
            let expected = json.to_matrix().expect("fixture matrix");
            let built = phase_point_operator(p, variant);
            residual = residual.max(built.matrix().max_abs_diff(&expected));
        }
    }
    Outcome {
        residual,
        tolerance: 1e-14,
    }
}

fn check_phase_space_geometry() -> Outcome {
    let mut residual: f64 = 0.0;
    // Three lines through each point, one per striation; any two points
    // share exactly one line.
    for p in PhasePoint::ALL {
        let lines = lines_through(p);
        if lines.iter().any(|l| !l.contains(p)) {
            residual = residual.max(1.0);
        }
        for q in PhasePoint::ALL {
            if p == q {
                continue;
            }
            let shared = lines.iter().filter(|l| l.contains(q)).count();
            if shared != 1 {
                residual = residual.max(1.0);
            }
        }
    }
    // Cross-striation unbiasedness and within-striation orthonormality.
    let strs = striations();
    for s in &strs {
        for t in &strs {
            for e in s.basis() {
                for f in t.basis() {
                    let overlap = trace_product(e, f).expect("2x2");
                    let expected = if s.kind() == t.kind() {
                        if e.max_abs_diff(f) == 0.0 {
                            1.0
                        } else {
                            0.0
                        }
                    } else {
                        0.5
                    };
                    residual = residual.max((overlap.re - expected).abs());
                    residual = residual.max(overlap.im.abs());
                }
            }
        }
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_operator_algebra() -> Outcome {
    let mut residual: f64 = 0.0;
    for variant in Variant::BOTH {
        let ops = phase_point_operators(variant);
        let mut sum = ComplexMatrix::zeros(2, 2);
        for op in &ops {
            residual = residual.max((op.matrix().trace() - Complex64::new(1.0, 0.0)).norm());
            sum = sum.add(op.matrix()).expect("2x2");
        }
        residual = residual.max(sum.max_abs_diff(&ComplexMatrix::identity(2).scale_re(2.0)));
        for (i, a) in ops.iter().enumerate() {
            for (j, b) in ops.iter().enumerate() {
                let t = trace_product(a.matrix(), b.matrix()).expect("2x2");
                let expected = if i == j { 2.0 } else { 0.0 };
                residual = residual.max((t - Complex64::new(expected, 0.0)).norm());
            }
        }
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_density_parametrizations() -> Outcome {
    let mut rng = StdRng::seed_from_u64(201);
    let mut residual: f64 = 0.0;
    for _ in 0..200 {
        let [x, y, z] = random_bloch(&mut rng);
        let a = 0.5 * (1.0 + z);
        let c = 0.5 * (x * x + y * y).sqrt();
        let xi = y.atan2(x);
        let from_bloch = DensityMatrix::from_bloch(x, y, z).unwrap();
        let from_polar = DensityMatrix::from_polar(a, c, xi).unwrap();
        residual = residual.max(from_bloch.matrix().max_abs_diff(from_polar.matrix()));
        let [rx, ry, rz] = from_polar.bloch_vector().unwrap();
        residual = residual
            .max((rx - x).abs())
            .max((ry - y).abs())
            .max((rz - z).abs());
    }
    if DensityMatrix::from_polar(0.5, 0.6, 0.0).is_ok() {
        residual = residual.max(1.0);
    }
    if DensityMatrix::from_bloch(1.0, 1.0, 1.0).is_ok() {
        residual = residual.max(1.0);
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_wigner_components() -> Outcome {
    let mut rng = StdRng::seed_from_u64(202);
    let mut residual: f64 = 0.0;
    for _ in 0..200 {
        let rho = random_state(&mut rng);
        let [x, y, z] = rho.bloch_vector().unwrap();
        for variant in Variant::BOTH {
            let w = wigner(&rho, variant).unwrap();
            let closed = match variant {
                Variant::A => [
                    (1.0 + z + x - y) / 4.0,
                    (1.0 + z - x + y) / 4.0,
                    (1.0 - z + x + y) / 4.0,
                    (1.0 - z - x - y) / 4.0,
                ],
                Variant::B => [
                    (1.0 + z + x + y) / 4.0,
                    (1.0 + z - x - y) / 4.0,
                    (1.0 - z + x - y) / 4.0,
                    (1.0 - z - x + y) / 4.0,
                ],
            };
            for (got, want) in w.values().iter().zip(closed.iter()) {
                residual = residual.max((got - want).abs());
            }
            residual = residual.max((w.sum() - 1.0).abs());
        }
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_wigner_reconstruction() -> Outcome {
    let mut rng = StdRng::seed_from_u64(203);
    let mut residual: f64 = 0.0;
    for _ in 0..200 {
        let rho = random_state(&mut rng);
        for variant in Variant::BOTH {
            let w = wigner(&rho, variant).unwrap();
            let rec = density_from_wigner(&w).unwrap();
            residual = residual.max(rec.matrix().max_abs_diff(rho.matrix()));
        }
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_purity_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(204);
    let mut residual: f64 = 0.0;
    for _ in 0..200 {
        let rho = random_state(&mut rng);
        for variant in Variant::BOTH {
            let w = wigner(&rho, variant).unwrap();
            let from_wigner: f64 = 2.0 * w.values().iter().map(|v| v * v).sum::<f64>();
            residual = residual.max((from_wigner - rho.purity()).abs());
        }
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_basis_change() -> Outcome {
    let mut rng = StdRng::seed_from_u64(205);
    let mut residual: f64 = 0.0;
    for _ in 0..200 {
        let rho = random_state(&mut rng);
        let wa = wigner(&rho, Variant::A).unwrap();
        let wb = wigner(&rho, Variant::B).unwrap();
        let converted = convert_basis(&wb, Variant::A);
        for i in 0..4 {
            residual = residual.max((converted.values()[i] - wa.values()[i]).abs());
        }
    }
    let wb = WignerFunction::new(Variant::B, [0.5, 0.0, 0.0, 0.5]);
    let wa = convert_basis(&wb, Variant::A);
    for (got, want) in wa.values().iter().zip([0.0, 0.5, 0.5, 0.0]) {
        residual = residual.max((got - want).abs());
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_scheme_consistency() -> Outcome {
    let quadrature = SphereQuadrature::product_rule(3, 8).unwrap();
    let schemes = [
        wigner_scheme(Variant::A),
        wigner_scheme(Variant::B),
        tomographic_scheme(&quadrature).unwrap(),
    ];
    let mut residual: f64 = 0.0;
    for scheme in &schemes {
        residual = residual.max(scheme.consistency_residual());
        for op in ComplexMatrix::pauli_basis() {
            let f = scheme.symbol(&op).unwrap();
            for x in 0..scheme.len() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (xp, point) in scheme.points().iter().enumerate() {
                    let overlap = trace_product(scheme.dequantizer_at(x), scheme.quantizer_at(xp))
                        .expect("2x2");
                    acc += point.weight * overlap * f.value(xp);
                }
                residual = residual.max((acc - f.value(x)).norm());
            }
        }
    }
    Outcome {
        residual,
        tolerance: 1e-10,
    }
}

fn check_symbol_transport() -> Outcome {
    let mut rng = StdRng::seed_from_u64(206);
    let quadrature = SphereQuadrature::product_rule(3, 8).unwrap();
    let wig_a = wigner_scheme(Variant::A);
    let wig_b = wigner_scheme(Variant::B);
    let tomo = tomographic_scheme(&quadrature).unwrap();
    let mut residual: f64 = 0.0;

    let forward = intertwining_kernel(&wig_a, &tomo).unwrap();
    let backward = intertwining_kernel(&tomo, &wig_a).unwrap();
    let across = intertwining_kernel(&wig_a, &wig_b).unwrap();
    for _ in 0..100 {
        let rho = random_state(&mut rng);
        let fa = wig_a.symbol(rho.matrix()).unwrap();

        let transported = forward.transport(&fa).unwrap();
        let direct = tomo.symbol(rho.matrix()).unwrap();
        for i in 0..tomo.len() {
            residual = residual.max((transported.value(i) - direct.value(i)).norm());
        }

        let returned = backward.transport(&direct).unwrap();
        for i in 0..wig_a.len() {
            residual = residual.max((returned.value(i) - fa.value(i)).norm());
        }

        let sideways = across.transport(&fa).unwrap();
        let direct_b = wig_b.symbol(rho.matrix()).unwrap();
        for i in 0..wig_b.len() {
            residual = residual.max((sideways.value(i) - direct_b.value(i)).norm());
        }
    }
    Outcome {
        residual,
        tolerance: 1e-10,
    }
}

fn check_star_product() -> Outcome {
    let mut rng = StdRng::seed_from_u64(207);
    let quadrature = SphereQuadrature::product_rule(3, 8).unwrap();
    let schemes = [
        wigner_scheme(Variant::A),
        wigner_scheme(Variant::B),
        tomographic_scheme(&quadrature).unwrap(),
    ];
    let mut residual: f64 = 0.0;
    for scheme in &schemes {
        for _ in 0..20 {
            let a = random_operator(&mut rng);
            let b = random_operator(&mut rng);
            let starred =
                star_multiply(&scheme.symbol(&a).unwrap(), &scheme.symbol(&b).unwrap()).unwrap();
            let direct = scheme.symbol(&a.mul(&b).unwrap()).unwrap();
            for i in 0..scheme.len() {
                residual = residual.max((starred.value(i) - direct.value(i)).norm());
            }
        }
        for _ in 0..5 {
            let fa = scheme.symbol(&random_operator(&mut rng)).unwrap();
            let fb = scheme.symbol(&random_operator(&mut rng)).unwrap();
            let fc = scheme.symbol(&random_operator(&mut rng)).unwrap();
            let left = star_multiply(&star_multiply(&fa, &fb).unwrap(), &fc).unwrap();
            let right = star_multiply(&fa, &star_multiply(&fb, &fc).unwrap()).unwrap();
            for i in 0..scheme.len() {
                residual = residual.max((left.value(i) - right.value(i)).norm());
            }
        }
    }
    Outcome {
        residual,
        tolerance: 1e-10,
    }
}

fn check_measurement_projectors() -> Outcome {
    let mut rng = StdRng::seed_from_u64(208);
    let mut residual: f64 = 0.0;
    for _ in 0..100 {
        let theta = rng.gen_range(0.0..PI);
        let psi = rng.gen_range(0.0..2.0 * PI);
        let phi = rng.gen_range(-PI..PI);
        let u = su2_matrix(theta, phi, psi);
        residual = residual.max(
            u.adjoint()
                .mul(&u)
                .unwrap()
                .max_abs_diff(&ComplexMatrix::identity(2)),
        );
        let d = Direction::new(theta, psi);
        let mut sum = ComplexMatrix::zeros(2, 2);
        for m in SpinProjection::BOTH {
            let mut proj = ComplexMatrix::zeros(2, 2);
            proj.set(m.basis_index(), m.basis_index(), Complex64::new(1.0, 0.0));
            let rotated = u.adjoint().mul(&proj).unwrap().mul(&u).unwrap();
            let q = dequantizer(m, &d);
            residual = residual.max(rotated.max_abs_diff(&q));
            residual = residual.max(q.mul(&q).unwrap().max_abs_diff(&q));
            sum = sum.add(&q).unwrap();
        }
        residual = residual.max(sum.max_abs_diff(&ComplexMatrix::identity(2)));
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_quantizer_duality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(209);
    let mut residual: f64 = 0.0;
    let half = ComplexMatrix::identity(2).scale_re(0.5);
    for _ in 0..100 {
        let d = random_direction(&mut rng);
        for m in SpinProjection::BOTH {
            let dq = quantizer(m, &d);
            let q = dequantizer(m, &d);
            residual = residual.max((dq.trace() - Complex64::new(1.0, 0.0)).norm());
            let lhs = dq.sub(&half).unwrap();
            let rhs = q.sub(&half).unwrap().scale_re(3.0);
            residual = residual.max(lhs.max_abs_diff(&rhs));
        }
    }
    // Reconstruction through the quantizer-weighted sphere average.
    let quadrature = SphereQuadrature::product_rule(3, 8).unwrap();
    for _ in 0..100 {
        let rho = random_state(&mut rng);
        let t = Tomogram::new(rho.clone());
        let rec = density_from_tomogram(|m, d| t.value(m, d), &quadrature).unwrap();
        residual = residual.max(rec.matrix().max_abs_diff(rho.matrix()));
    }
    Outcome {
        residual,
        tolerance: 1e-10,
    }
}

fn check_tomogram_closed_form() -> Outcome {
    let mut rng = StdRng::seed_from_u64(210);
    let mut residual: f64 = 0.0;
    for _ in 0..200 {
        let rho = random_state(&mut rng);
        let [x, y, z] = rho.bloch_vector().unwrap();
        let d = random_direction(&mut rng);
        let mut total = 0.0;
        for m in SpinProjection::BOTH {
            let w = tomogram(&rho, m, &d);
            let closed = 0.5
                * (1.0
                    + m.sign()
                        * (z * d.theta.cos() + x * d.theta.sin() * d.psi.cos()
                            - y * d.theta.sin() * d.psi.sin()));
            residual = residual.max((w - closed).abs());
            residual = residual.max((-w).max(0.0));
            total += w;
        }
        residual = residual.max((total - 1.0).abs());
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_tomogram_from_wigner_kernels() -> Outcome {
    let mut rng = StdRng::seed_from_u64(211);
    let mut residual: f64 = 0.0;
    for _ in 0..100 {
        let rho = random_state(&mut rng);
        let d = random_direction(&mut rng);
        let wa = wigner(&rho, Variant::A).unwrap();
        let wb = wigner(&rho, Variant::B).unwrap();
        for m in SpinProjection::BOTH {
            let direct = tomogram(&rho, m, &d);
            residual = residual.max((tomogram_from_wigner(&wa, m, &d) - direct).abs());
            residual = residual.max((tomogram_from_wigner(&wb, m, &d) - direct).abs());
        }
        // The operator family sums to twice the identity, so each kernel
        // row sums to 2·Tr(Q) = 2.
        for m in SpinProjection::BOTH {
            for variant in Variant::BOTH {
                let row_sum: f64 = PhasePoint::ALL
                    .iter()
                    .map(|p| kernel_value(variant, false, m, &d, *p))
                    .sum();
                residual = residual.max((row_sum - 2.0).abs());
            }
        }
    }
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

fn check_wigner_from_tomogram_kernels() -> Outcome {
    let mut rng = StdRng::seed_from_u64(212);
    let q_small = SphereQuadrature::product_rule(2, 5).unwrap();
    let q_default = SphereQuadrature::product_rule(3, 8).unwrap();
    let mut residual: f64 = 0.0;
    for _ in 0..100 {
        let rho = random_state(&mut rng);
        let t = Tomogram::new(rho.clone());
        for variant in Variant::BOTH {
            let direct = wigner(&rho, variant).unwrap();
            let small = wigner_from_tomogram(|m, d| t.value(m, d), variant, &q_small).unwrap();
            let dflt = wigner_from_tomogram(|m, d| t.value(m, d), variant, &q_default).unwrap();
            for i in 0..4 {
                residual = residual.max((small.values()[i] - direct.values()[i]).abs());
                residual = residual.max((dflt.values()[i] - small.values()[i]).abs());
            }
        }
    }
    Outcome {
        residual,
        tolerance: 1e-10,
    }
}

fn check_two_qubit_tomograms() -> Outcome {
    let mut rng = StdRng::seed_from_u64(213);
    let mut residual: f64 = 0.0;
    for _ in 0..50 {
        let a = random_state(&mut rng);
        let b = random_state(&mut rng);
        let joint = DensityMatrix::from_matrix(tensor_product(a.matrix(), b.matrix()).unwrap())
            .unwrap();
        let d1 = random_direction(&mut rng);
        let d2 = random_direction(&mut rng);
        let mut total = 0.0;
        for m1 in SpinProjection::BOTH {
            let mut marginal = 0.0;
            for m2 in SpinProjection::BOTH {
                let w = two_qubit_tomogram(&joint, m1, m2, &d1, &d2).unwrap();
                residual = residual.max((w - tomogram(&a, m1, &d1) * tomogram(&b, m2, &d2)).abs());
                total += w;
                marginal += w;
            }
            let reduced = DensityMatrix::from_matrix(
                partial_trace(joint.matrix(), Subsystem::First).unwrap(),
            )
            .unwrap();
            residual = residual.max((marginal - tomogram(&reduced, m1, &d1)).abs());
        }
        residual = residual.max((total - 1.0).abs());
    }
    // Bell pair along the z axes.
    let mut bell = ComplexMatrix::zeros(4, 4);
    for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        bell.set(i, j, Complex64::new(0.5, 0.0));
    }
    let bell = DensityMatrix::from_matrix(bell).unwrap();
    let north = Direction::new(0.0, 0.0);
    let w = |m1, m2| two_qubit_tomogram(&bell, m1, m2, &north, &north).unwrap();
    residual = residual.max((w(SpinProjection::Up, SpinProjection::Up) - 0.5).abs());
    residual = residual.max(w(SpinProjection::Up, SpinProjection::Down).abs());
    residual = residual.max(w(SpinProjection::Down, SpinProjection::Up).abs());
    residual = residual.max((w(SpinProjection::Down, SpinProjection::Down) - 0.5).abs());
    Outcome {
        residual,
        tolerance: 1e-12,
    }
}

const CHECKS: &[Check] = &[
    Check {
        name: "phase-point operator fixtures",
        labels: &["J1"],
        run: check_operator_fixtures,
    },
    Check {
        name: "phase-space geometry and unbiased bases",
        labels: &["J1"],
        run: check_phase_space_geometry,
    },
    Check {
        name: "phase-point operator algebra",
        labels: &["J1"],
        run: check_operator_algebra,
    },
    Check {
        name: "density parametrizations",
        labels: &["W1", "W2"],
        run: check_density_parametrizations,
    },
    Check {
        name: "wigner components closed forms",
        labels: &["wigner", "W3", "BW3"],
        run: check_wigner_components,
    },
    Check {
        name: "state reconstruction from wigner values",
        labels: &["W5"],
        run: check_wigner_reconstruction,
    },
    Check {
        name: "purity from wigner values",
        labels: &["wigner", "W5"],
        run: check_purity_identity,
    },
    Check {
        name: "wigner basis change",
        labels: &["ABW5"],
        run: check_basis_change,
    },
    Check {
        name: "scheme self-consistency",
        labels: &["operat"],
        run: check_scheme_consistency,
    },
    Check {
        name: "symbol transport between schemes",
        labels: &["MA1", "MA2"],
        run: check_symbol_transport,
    },
    Check {
        name: "star product",
        labels: &["kernel"],
        run: check_star_product,
    },
    Check {
        name: "measurement projectors",
        labels: &["DO", "UMU", "W8"],
        run: check_measurement_projectors,
    },
    Check {
        name: "quantizer duality and reconstruction",
        labels: &["W9"],
        run: check_quantizer_duality,
    },
    Check {
        name: "tomogram closed form",
        labels: &["W14"],
        run: check_tomogram_closed_form,
    },
    Check {
        name: "tomograms from wigner values",
        labels: &["W11", "BW11", "W15"],
        run: check_tomogram_from_wigner_kernels,
    },
    Check {
        name: "wigner values from tomograms",
        labels: &["W13", "BW13", "W16"],
        run: check_wigner_from_tomogram_kernels,
    },
    Check {
        name: "two-qubit tomograms",
        labels: &["TP1", "TP2"],
        run: check_two_qubit_tomograms,
    },
];

/// Run every check; print one human line per check on stderr.
pub fn run_verify() -> VerifyReport {
    let mut checks = Vec::with_capacity(CHECKS.len());
    let mut all_passed = true;
    for check in CHECKS {
        let outcome = (check.run)();
        let passed = outcome.passed();
        all_passed &= passed;
        eprintln!(
            "{} [{}] {} (residual {:.2e}, tolerance {:.0e})",
            if passed { "PASS" } else { "FAIL" },
            check.labels.join(" "),
            check.name,
            outcome.residual,
            outcome.tolerance
        );
        checks.push(CheckResult {
            name: check.name.to_string(),
            labels: check.labels.iter().map(|s| s.to_string()).collect(),
            passed,
            residual: outcome.residual,
        });
    }
    VerifyReport {
        command: "verify".to_string(),
        checks,
        all_passed,
    }
}
