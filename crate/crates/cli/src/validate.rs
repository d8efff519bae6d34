// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Built-in invariant suite behind `collisim validate`.
//!
//! Every check reduces to a measured worst case that must not exceed its
//! tolerance.

use std::f64::consts::{FRAC_PI_2, PI};

use collisim::dynamics::{
    collide_once_exact, collide_pair_analytic, collide_pair_exact, ghz_evolve, ghz_evolve_exact,
    pair_collision_map, single_collision_map, truncated_step_map, EnvState, SingleCollision,
};
use collisim::environment::{correlated_pair_state, product_env_mixed, product_env_pure};
use collisim::{
    affine_from_channel, analyze_point, choi_from_affine, cp_test, kraus_from_choi, trace_distance,
    BlochAngles, ChannelPair, ComplexMatrix, CorrelatedPairSpec, DensityMatrix, GhzChainSpec,
    KrausChannel, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::output::{float, Table};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub worst: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.worst <= self.tolerance
    }
}

struct Draw {
    rho: DensityMatrix<f64>,
    other: DensityMatrix<f64>,
    spec: CorrelatedPairSpec<f64>,
    pair: ChannelPair<f64>,
}

fn draw(rng: &mut ChaCha8Rng) -> Result<Draw> {
    let angles = |rng: &mut ChaCha8Rng| BlochAngles::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI));
    let rho = angles(rng).density();
    let b = angles(rng).bloch();
    let r = rng.gen_range(0.0..1.0);
    let other = DensityMatrix::from_bloch([r * b[0], r * b[1], r * b[2]])?;
    let spec = CorrelatedPairSpec::new(rng.gen_range(0.0..0.3), rng.gen_range(0.0..0.3), rng.gen_range(0.0..=1.0))?;
    let pair = ChannelPair::canonical(rng.gen_range(0.0..=1.0))?;
    Ok(Draw { rho, other, spec, pair })
}

fn max(acc: &mut f64, x: f64) {
    *acc = acc.max(x);
}

fn min_eig(m: &ComplexMatrix<f64>) -> Result<f64> {
    Ok(collisim::eigen::hermitian_eigenvalues(m)?[0])
}

/// Run every check. Any library error aborts the suite.
pub fn run_checks(seed: u64, draws: usize) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (eta, tau) = (1.0, FRAC_PI_2);
    let half = ComplexMatrix::identity(2).scale(0.5);

    let mut oracle1 = 0.0;
    let mut oracle2 = 0.0;
    let mut negativity = 0.0;
    let mut unital = 0.0;
    let mut contraction = 0.0;
    let mut single_cp = 0.0;
    for _ in 0..draws {
        let d = draw(&mut rng)?;
        let sigmas = d.pair.sigmas();
        let eps = d.spec.epsilons();
        let once = single_collision_map(d.rho.matrix(), &eps, &sigmas)?;
        for env in [
            EnvState::Mixed(product_env_mixed(&eps, 3)?),
            EnvState::Pure(product_env_pure(&eps, 3)?),
        ] {
            let exact = collide_once_exact(&d.rho, &env, &sigmas, eta, tau)?;
            max(&mut oracle1, once.distance(exact.matrix()));
        }

        let analytic = collide_pair_analytic(&d.rho, &d.spec, d.pair.sigma1(), d.pair.sigma2())?;
        let env = EnvState::Pure(correlated_pair_state(&d.spec)?);
        let exact = collide_pair_exact(&d.rho, &env, &sigmas, eta, tau)?;
        max(&mut oracle2, analytic.rho1.matrix().distance(exact.rho1.matrix()));
        max(&mut oracle2, analytic.rho2.matrix().distance(exact.rho2.matrix()));

        max(&mut negativity, -min_eig(&once)?);
        max(&mut negativity, -min_eig(analytic.rho2.matrix())?);

        max(&mut unital, single_collision_map(&half, &eps, &sigmas)?.max_distance(&half));
        let twice = pair_collision_map(&half, &d.spec, d.pair.sigma1(), d.pair.sigma2())?;
        max(&mut unital, twice.max_distance(&half));

        let other1 = DensityMatrix::new(single_collision_map(d.other.matrix(), &eps, &sigmas)?)?;
        let rho1 = DensityMatrix::new(once)?;
        max(&mut contraction, trace_distance(&rho1, &other1)? - trace_distance(&d.rho, &d.other)?);

        let map = affine_from_channel(&SingleCollision { eps, sigmas })?;
        max(&mut single_cp, -cp_test(&choi_from_affine(&map)?, 1e-12)?.min_eigenvalue);
    }

    let mut composition = 0.0;
    for &a in &[0.0, 0.05, 0.5, 1.0] {
        let p = analyze_point(a, 0.0, 0.01, 0.02, 1e-12)?;
        max(&mut composition, p.full.max_distance(&p.first.compose(&p.first)));
    }

    let qs: Vec<f64> = (0..=200).map(|k| -1.0 + 2.0 * k as f64 / 200.0).collect();
    let mut kraus = 0.0;
    let mut commuting = 0.0;
    for &q in &qs {
        let p = analyze_point(0.05, q, 0.01, 0.02, 1e-12)?;
        let ch = KrausChannel { terms: kraus_from_choi(&p.choi)? };
        max(&mut kraus, affine_from_channel(&ch)?.max_distance(&p.step));
        let c = analyze_point(0.0, q, 0.01, 0.02, 1e-12)?;
        max(&mut commuting, -c.verdict.min_eigenvalue);
    }

    let mut ghz_exact = 0.0;
    let mut ghz_even = 0.0;
    let pair = ChannelPair::canonical(0.3)?;
    let rho = BlochAngles::new(1.1, 0.4).density();
    for n in 0..=4 {
        let spec = GhzChainSpec::new(vec![0.7, 0.2, 0.1], n)?;
        let closed = ghz_evolve(&rho, &spec, &pair.sigmas())?;
        let exact = ghz_evolve_exact(&rho, &spec, &pair.sigmas(), eta, tau)?;
        max(&mut ghz_exact, closed.matrix().distance(exact.matrix()));
        if n % 2 == 0 {
            max(&mut ghz_even, exact.matrix().max_distance(rho.matrix()));
        }
    }

    let eps = 1e-3;
    let mut expansion = 0.0;
    for &a in &[0.05, 0.5, 1.0] {
        for &q in &[-1.0, 0.0, 1.0] {
            let spec = CorrelatedPairSpec::with_correlation(eps, eps, q)?;
            let pair = ChannelPair::canonical(a)?;
            let out = collide_pair_analytic(&rho, &spec, pair.sigma1(), pair.sigma2())?;
            let approx = truncated_step_map(out.rho1.matrix(), a, eps, q)?;
            max(&mut expansion, out.rho2.matrix().distance(&approx));
        }
    }

    Ok(vec![
        Check { name: "oracle_single_step", worst: oracle1, tolerance: 1e-12 },
        Check { name: "oracle_two_step", worst: oracle2, tolerance: 1e-12 },
        Check { name: "output_positivity", worst: negativity, tolerance: 1e-10 },
        Check { name: "unitality", worst: unital, tolerance: 1e-12 },
        Check { name: "trace_distance_contraction", worst: contraction, tolerance: 1e-10 },
        Check { name: "single_collision_cp", worst: single_cp, tolerance: 1e-12 },
        Check { name: "uncorrelated_composition", worst: composition, tolerance: 1e-10 },
        Check { name: "kraus_round_trip", worst: kraus, tolerance: 1e-10 },
        Check { name: "commuting_channels_cp", worst: commuting, tolerance: 1e-12 },
        Check { name: "ghz_vs_exact_chain", worst: ghz_exact, tolerance: 1e-12 },
        Check { name: "ghz_even_identity", worst: ghz_even, tolerance: 1e-14 },
        Check { name: "small_eps_expansion", worst: expansion, tolerance: 10.0 * eps * eps * eps },
    ])
}

pub fn table(checks: &[Check]) -> Table {
    let mut t = Table::new(&["invariant", "status", "worst", "tolerance"]);
    for c in checks {
        t.push(vec![
            c.name.to_string(),
            if c.passed() { "PASS" } else { "FAIL" }.to_string(),
            float(c.worst + 0.0),
            float(c.tolerance),
        ]);
    }
    t
}
