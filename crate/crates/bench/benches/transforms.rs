use criterion::{black_box, criterion_group, criterion_main, Criterion};

use qstar_bench::{random_directions, random_operators, random_states};
use qstar_core::kernels::{tomogram_from_wigner, wigner_from_tomogram};
use qstar_core::star_product::{star_multiply, tomographic_scheme, wigner_scheme};
use qstar_core::tomography::{density_from_tomogram, tomogram, SpinProjection, Tomogram};
use qstar_core::wigner::{convert_basis, density_from_wigner, wigner};
use qstar_core::{SphereQuadrature, Variant};

fn bench_wigner_transform(c: &mut Criterion) {
    let states = random_states(64, 1);
    c.bench_function("wigner_transform", |b| {
        let mut i = 0;
        b.iter(|| {
            let rho = &states[i % states.len()];
            i += 1;
            black_box(wigner(rho, Variant::A).unwrap())
        })
    });

    let quadruples: Vec<_> = states
        .iter()
        .map(|rho| wigner(rho, Variant::A).unwrap())
        .collect();
    c.bench_function("wigner_reconstruction", |b| {
        let mut i = 0;
        b.iter(|| {
            let w = &quadruples[i % quadruples.len()];
            i += 1;
            black_box(density_from_wigner(w).unwrap())
        })
    });
    c.bench_function("wigner_basis_change", |b| {
        let mut i = 0;
        b.iter(|| {
            let w = &quadruples[i % quadruples.len()];
            i += 1;
            black_box(convert_basis(w, Variant::B))
        })
    });
}

fn bench_tomograms(c: &mut Criterion) {
    let states = random_states(64, 2);
    let directions = random_directions(64, 3);
    c.bench_function("tomogram_single_direction", |b| {
        let mut i = 0;
        b.iter(|| {
            let rho = &states[i % states.len()];
            let d = &directions[i % directions.len()];
            i += 1;
            black_box(tomogram(rho, SpinProjection::Up, d))
        })
    });

    let quadrature = SphereQuadrature::default();
    c.bench_function("density_from_tomogram_3x8", |b| {
        let mut i = 0;
        b.iter(|| {
            let t = Tomogram::new(states[i % states.len()].clone());
            i += 1;
            black_box(density_from_tomogram(|m, d| t.value(m, d), &quadrature).unwrap())
        })
    });
    c.bench_function("wigner_from_tomogram_3x8", |b| {
        let mut i = 0;
        b.iter(|| {
            let t = Tomogram::new(states[i % states.len()].clone());
            i += 1;
            black_box(
                wigner_from_tomogram(|m, d| t.value(m, d), Variant::A, &quadrature).unwrap(),
            )
        })
    });

    let quadruples: Vec<_> = states
        .iter()
        .map(|rho| wigner(rho, Variant::A).unwrap())
        .collect();
    c.bench_function("tomogram_from_wigner", |b| {
        let mut i = 0;
        b.iter(|| {
            let w = &quadruples[i % quadruples.len()];
            let d = &directions[i % directions.len()];
            i += 1;
            black_box(tomogram_from_wigner(w, SpinProjection::Up, d))
        })
    });
}

fn bench_star_product(c: &mut Criterion) {
    let operators = random_operators(64, 4);

    let wig = wigner_scheme(Variant::A);
    c.bench_function("star_multiply_wigner_scheme", |b| {
        let mut i = 0;
        b.iter(|| {
            let fa = wig.symbol(&operators[i % operators.len()]).unwrap();
            let fb = wig.symbol(&operators[(i + 1) % operators.len()]).unwrap();
            i += 1;
            black_box(star_multiply(&fa, &fb).unwrap())
        })
    });

    let quadrature = SphereQuadrature::default();
    let tomo = tomographic_scheme(&quadrature).unwrap();
    // Warm the cached kernel table once so the benchmark measures products.
    {
        let f = tomo.symbol(&operators[0]).unwrap();
        let _ = star_multiply(&f, &f).unwrap();
    }
    c.bench_function("star_multiply_tomographic_scheme_48pt", |b| {
        let mut i = 0;
        b.iter(|| {
            let fa = tomo.symbol(&operators[i % operators.len()]).unwrap();
            let fb = tomo.symbol(&operators[(i + 1) % operators.len()]).unwrap();
            i += 1;
            black_box(star_multiply(&fa, &fb).unwrap())
        })
    });

    c.bench_function("tomographic_scheme_construction_3x8", |b| {
        b.iter(|| black_box(tomographic_scheme(&quadrature).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_wigner_transform,
    bench_tomograms,
    bench_star_product
);
criterion_main!(benches);
