// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use collisim::{BlochAngles, ComplexMatrix, CorrelatedPairSpec, DensityMatrix};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_angles(rng: &mut impl Rng) -> BlochAngles<f64> {
    BlochAngles::new(
        rng.gen_range(0.0..std::f64::consts::PI),
        rng.gen_range(0.0..2.0 * std::f64::consts::PI),
    )
}

pub fn random_pure(rng: &mut impl Rng) -> DensityMatrix<f64> {
    random_angles(rng).density()
}

/// Uniform in the Bloch ball.
pub fn random_mixed(rng: &mut impl Rng) -> DensityMatrix<f64> {
    let ang = random_angles(rng);
    let r = rng.gen_range(0.0f64..1.0).cbrt();
    let b = ang.bloch();
    DensityMatrix::from_bloch([r * b[0], r * b[1], r * b[2]]).unwrap()
}

/// `ε₁, ε₂ ∈ [0, 0.3]`, `q ∈ [0, 1]`: always inside the admissible region.
pub fn random_pair_spec(rng: &mut impl Rng) -> CorrelatedPairSpec<f64> {
    CorrelatedPairSpec::new(
        rng.gen_range(0.0..0.3),
        rng.gen_range(0.0..0.3),
        rng.gen_range(0.0..=1.0),
    )
    .unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix<f64> {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..n {
            let z = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn random_matrix(rng: &mut impl Rng, r: usize, c: usize) -> ComplexMatrix<f64> {
    ComplexMatrix::from_fn(r, c, |_, _| {
        Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}
