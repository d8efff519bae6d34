// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use collisim::dynamics::{pair_collision_map, single_collision_map};
use collisim::infometrics::{
    entanglement_after_two, entropy_monotonicity_check, global_purity_after_two,
};
use collisim::{
    trace_distance, von_neumann_entropy, ChannelPair, CorrelatedPairSpec, DensityMatrix,
};
use proptest::prelude::*;

fn step(m: &DensityMatrix<f64>, spec: &CorrelatedPairSpec<f64>, pair: &ChannelPair<f64>) -> DensityMatrix<f64> {
    DensityMatrix::new(single_collision_map(m.matrix(), &spec.epsilons(), &pair.sigmas()).unwrap()).unwrap()
}

fn two_steps(m: &DensityMatrix<f64>, spec: &CorrelatedPairSpec<f64>, pair: &ChannelPair<f64>) -> DensityMatrix<f64> {
    DensityMatrix::new(pair_collision_map(m.matrix(), spec, pair.sigma1(), pair.sigma2()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn entropy_within_bounds(seed in any::<u64>(), e1 in 0.0f64..0.3, e2 in 0.0f64..0.3, q in 0.0f64..=1.0, a in 0.0f64..=1.0) {
        let mut rng = common::rng(seed);
        let rho = common::random_mixed(&mut rng);
        let spec = CorrelatedPairSpec::new(e1, e2, q).unwrap();
        let pair = ChannelPair::canonical(a).unwrap();
        for s in [&rho, &step(&rho, &spec, &pair), &two_steps(&rho, &spec, &pair)] {
            let h = von_neumann_entropy(s);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&h));
        }
    }

    // Φ₁₀ and Φ₂₀ are CPTP, so both contract.
    #[test]
    fn collisions_contract(seed in any::<u64>(), e1 in 0.0f64..0.3, e2 in 0.0f64..0.3, q in 0.0f64..=1.0, a in 0.0f64..=1.0) {
        let mut rng = common::rng(seed);
        let (r, s) = (common::random_pure(&mut rng), common::random_mixed(&mut rng));
        let spec = CorrelatedPairSpec::new(e1, e2, q).unwrap();
        let pair = ChannelPair::canonical(a).unwrap();
        let d0 = trace_distance(&r, &s).unwrap();
        let d1 = trace_distance(&step(&r, &spec, &pair), &step(&s, &spec, &pair)).unwrap();
        let d2 = trace_distance(&two_steps(&r, &spec, &pair), &two_steps(&s, &spec, &pair)).unwrap();
        prop_assert!(d1 <= d0 + 1e-10);
        prop_assert!(d2 <= d0 + 1e-10);
    }

    #[test]
    fn global_state_stays_pure(theta in 0.0f64..PI, phi in 0.0f64..2.0 * PI, e1 in 0.0f64..0.3, e2 in 0.0f64..0.3, q in 0.0f64..=1.0, a in 0.0f64..=1.0) {
        let spec = CorrelatedPairSpec::new(e1, e2, q).unwrap();
        let purity = global_purity_after_two(collisim::BlochAngles::new(theta, phi), &spec, a).unwrap();
        prop_assert!((purity - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn delta_e_vanishes_continuously() {
    let configs = [(1.0, 0.01, 0.01, 0.0, 0.7), (1.0, 0.01, 0.01, 0.0, 2.2), (0.0, 0.01, 0.02, 0.0, 0.8), (0.0, 0.01, 0.02, 1.0, FRAC_PI_2)];
    for &(a, e1, e2, phi, theta) in &configs {
        let ang = collisim::BlochAngles::new(theta, phi);
        for q in [0.0, 1e-6, -1e-6] {
            let spec = CorrelatedPairSpec::with_correlation(e1, e2, q).unwrap();
            let p = entanglement_after_two(ang, &spec, a).unwrap();
            if q == 0.0 {
                assert!(p.delta_e.abs() <= 1e-12);
            } else {
                assert!(p.delta_e.abs() <= 1e-6);
            }
        }
    }
}

#[test]
fn monotone_entropy_on_pure_inputs() {
    let mut rng = common::rng(21);
    for &a in &[0.0, 0.05, 0.5, 1.0] {
        for &q in &[-1.0, 0.0, 1.0] {
            let spec = CorrelatedPairSpec::with_correlation(0.01, 0.02, q).unwrap();
            for _ in 0..5 {
                let r = entropy_monotonicity_check(&common::random_pure(&mut rng), &spec, a, 6).unwrap();
                assert!(r.monotone, "{:?}", r.entropies);
                assert_eq!(r.entropies.len(), 7);
            }
        }
    }
}
