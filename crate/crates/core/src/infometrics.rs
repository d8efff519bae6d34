// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Entropy, distinguishability and system–environment entanglement.

use rayon::prelude::*;

use crate::channels::ChannelPair;
use crate::dynamics::{
    collide_pair_exact, pair_collision_map, pair_global_states, single_collision_map, EnvState,
};
use crate::eigen::hermitian_eigenvalues;
use crate::environment::{correlated_pair_state, CorrelatedPairSpec};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::state::{DensityMatrix, StateVector};

/// `S(ρ) = −Σ p log₂ p`, with `0·log 0 = 0`. Eigenvalues that are negative
/// only through rounding are treated as zero.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    let slack = T::lit(T::default_tolerances().entropy);
    // A validated state always diagonalizes; the fallback is unreachable.
    let values = hermitian_eigenvalues(rho.matrix()).unwrap_or_default();
    values
        .into_iter()
        .filter(|&p| p > T::zero() || p < -slack)
        .fold(T::zero(), |acc, p| acc - p * p.log2())
}

/// `½ Σ |λ_i(ρ₁ − ρ₂)|`.
pub fn trace_distance<T: Real>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch(format!(
            "trace distance between {}- and {}-dimensional states",
            rho1.dim(),
            rho2.dim()
        )));
    }
    let diff = rho1.matrix() - rho2.matrix();
    let values = hermitian_eigenvalues(&diff)?;
    Ok(T::lit(0.5) * values.into_iter().fold(T::zero(), |acc, l| acc + l.abs()))
}

/// Polar angles of a pure qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochAngles<T> {
    pub theta: T,
    pub phi: T,
}

impl<T: Real> BlochAngles<T> {
    pub fn new(theta: T, phi: T) -> Self {
        Self { theta, phi }
    }

    pub fn bloch(&self) -> [T; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    pub fn state_vector(&self) -> StateVector<T> {
        StateVector::from_angles(self.theta, self.phi)
    }

    pub fn density(&self) -> DensityMatrix<T> {
        self.state_vector().to_density()
    }
}

/// Entanglement after two collisions with a correlated pair, and the same
/// quantity for the uncorrelated pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementPoint<T> {
    pub e: T,
    pub e0: T,
    pub delta_e: T,
}

fn entropy_after_two<T: Real>(
    rho0: &DensityMatrix<T>,
    spec: &CorrelatedPairSpec<T>,
    pair: &ChannelPair<T>,
) -> Result<T> {
    let env = EnvState::Pure(correlated_pair_state(spec)?);
    let (eta, tau) = standard_timing::<T>();
    let out = collide_pair_exact(rho0, &env, &pair.sigmas(), eta, tau)?;
    Ok(von_neumann_entropy(&out.rho2))
}

/// `η = 1`, `τ = π/2`.
fn standard_timing<T: Real>() -> (T, T) {
    (T::one(), T::FRAC_PI_2())
}

/// With system and pair both pure, the global state stays pure and the
/// reduced entropy is the system–environment entanglement.
pub fn entanglement_after_two<T: Real>(
    angles: BlochAngles<T>,
    spec: &CorrelatedPairSpec<T>,
    a: T,
) -> Result<EntanglementPoint<T>> {
    let pair = ChannelPair::canonical(a)?;
    let rho0 = angles.density();
    let e = entropy_after_two(&rho0, spec, &pair)?;
    let e0 = entropy_after_two(&rho0, &spec.uncorrelated(), &pair)?;
    Ok(EntanglementPoint {
        e,
        e0,
        delta_e: e - e0,
    })
}

/// `Tr ρ_G²` of the 18-dimensional global state after both collisions.
pub fn global_purity_after_two<T: Real>(
    angles: BlochAngles<T>,
    spec: &CorrelatedPairSpec<T>,
    a: T,
) -> Result<T> {
    let pair = ChannelPair::canonical(a)?;
    let env = correlated_pair_state(spec)?.to_density();
    let (eta, tau) = standard_timing::<T>();
    let (_, g2) = pair_global_states(angles.density().matrix(), env.matrix(), &pair.sigmas(), eta, tau)?;
    Ok((&g2 * &g2).trace().re)
}

/// Grid for [`delta_e_sweep`]; order is θ outer, then φ, then Q.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaEConfig<T> {
    pub thetas: Vec<T>,
    pub phis: Vec<T>,
    pub correlations: Vec<T>,
    pub a: T,
    pub eps1: T,
    pub eps2: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaERecord<T> {
    pub angles: BlochAngles<T>,
    pub correlation: T,
    pub outcome: std::result::Result<EntanglementPoint<T>, Error>,
}

/// `ΔE` over the configured grid. Points run in parallel; records come back
/// in grid order with domain errors kept per point.
pub fn delta_e_sweep<T: Real>(config: &DeltaEConfig<T>) -> Vec<DeltaERecord<T>> {
    let angles: Vec<BlochAngles<T>> = config
        .thetas
        .iter()
        .flat_map(|&theta| config.phis.iter().map(move |&phi| BlochAngles::new(theta, phi)))
        .collect();

    angles
        .par_iter()
        .flat_map_iter(|&ang| {
            let pair = ChannelPair::canonical(config.a);
            let rho0 = ang.density();
            let e0 = pair.as_ref().map_err(Clone::clone).and_then(|p| {
                let base = CorrelatedPairSpec::with_correlation(config.eps1, config.eps2, T::zero())?;
                entropy_after_two(&rho0, &base, p)
            });
            config.correlations.iter().map(move |&correlation| {
                let outcome = pair.as_ref().map_err(Clone::clone).and_then(|p| {
                    let spec = CorrelatedPairSpec::with_correlation(config.eps1, config.eps2, correlation)?;
                    let e = entropy_after_two(&rho0, &spec, p)?;
                    let e0 = e0.clone()?;
                    Ok(EntanglementPoint {
                        e,
                        e0,
                        delta_e: e - e0,
                    })
                });
                DeltaERecord {
                    angles: ang,
                    correlation,
                    outcome,
                }
            })
        })
        .collect()
}

/// Per-collision entropies and whether they never decrease.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport<T> {
    pub entropies: Vec<T>,
    pub monotone: bool,
}

/// Entropy after each of `n_steps` collisions with a stream of identical
/// correlated pairs (odd steps hit the first particle of a pair, even steps
/// the second).
pub fn entropy_monotonicity_check<T: Real>(
    rho0: &DensityMatrix<T>,
    spec: &CorrelatedPairSpec<T>,
    a: T,
    n_steps: usize,
) -> Result<MonotonicityReport<T>> {
    let pair = ChannelPair::canonical(a)?;
    let sigmas = pair.sigmas();
    let eps = spec.epsilons();
    let mut entropies = vec![von_neumann_entropy(rho0)];
    let mut pair_start = rho0.clone();
    for step in 1..=n_steps {
        let next = if step % 2 == 1 {
            DensityMatrix::new(single_collision_map(pair_start.matrix(), &eps, &sigmas)?)?
        } else {
            let s = DensityMatrix::new(pair_collision_map(
                pair_start.matrix(),
                spec,
                pair.sigma1(),
                pair.sigma2(),
            )?)?;
            pair_start = s.clone();
            s
        };
        entropies.push(von_neumann_entropy(&next));
    }
    let slack = T::lit(T::default_tolerances().entropy);
    let monotone = entropies.windows(2).all(|w| w[1] >= w[0] - slack);
    Ok(MonotonicityReport { entropies, monotone })
}
