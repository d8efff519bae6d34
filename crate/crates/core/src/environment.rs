// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Environment particle states: the product state `ω` and its pure version
//! `|R⟩`, the correlated pair `|R₂⟩` with its dephased mixture, and the
//! perfectly correlated (GHZ-like) chain.
//!
//! Level `|0⟩` of a particle means "no channel acts", level `|i⟩` selects
//! the collision operator `σ_i`. Pair states use the lexicographic basis
//! `|00⟩, |01⟩, …, |22⟩` with the first particle colliding first.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Real;
use crate::state::{DensityMatrix, StateVector};

/// Per-channel probabilities `ε_i` with `0 ≤ ε_i` and `Σ ε_i ≤ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonVector<T> {
    eps: Vec<T>,
}

impl<T: Real> EpsilonVector<T> {
    pub fn new(eps: Vec<T>) -> Result<Self> {
        let slack = T::lit(T::default_tolerances().probability);
        for (i, &e) in eps.iter().enumerate() {
            if !(e >= T::zero() && e <= T::one()) {
                return Err(Error::Domain(format!("eps[{i}] = {e} outside [0, 1]")));
            }
        }
        let total = eps.iter().fold(T::zero(), |a, &b| a + b);
        if total > T::one() + slack {
            return Err(Error::Domain(format!("sum of eps = {total} exceeds 1")));
        }
        Ok(Self { eps })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.eps
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }

    pub fn sum(&self) -> T {
        self.eps.iter().fold(T::zero(), |a, &b| a + b)
    }

    /// Weight of the "nothing happens" level, `1 − Σ ε_i` (clamped at 0
    /// against rounding).
    pub fn idle(&self) -> T {
        (T::one() - self.sum()).max(T::zero())
    }

    /// Level probabilities `(1 − Σε, ε₁, …)`.
    pub fn level_probabilities(&self) -> Vec<T> {
        std::iter::once(self.idle()).chain(self.eps.iter().copied()).collect()
    }
}

/// Lindblad rates with the step length, `ε_i = γ_i Δt`.
#[derive(Debug, Clone, PartialEq)]
pub struct RateSet<T> {
    pub gamma: Vec<T>,
    pub dt: T,
}

impl<T: Real> RateSet<T> {
    pub fn to_epsilons(&self) -> Result<EpsilonVector<T>> {
        EpsilonVector::new(self.gamma.iter().map(|&g| g * self.dt).collect())
    }
}

fn check_levels<T: Real>(eps: &EpsilonVector<T>, d: usize) -> Result<()> {
    if eps.len() + 1 != d {
        return Err(Error::DimensionMismatch(format!(
            "{} channel probabilities need d = {}, got d = {d}",
            eps.len(),
            eps.len() + 1
        )));
    }
    Ok(())
}

/// `ω = (1 − Σ ε_i)|0⟩⟨0| + Σ ε_i |i⟩⟨i|`.
pub fn product_env_mixed<T: Real>(eps: &EpsilonVector<T>, d: usize) -> Result<DensityMatrix<T>> {
    check_levels(eps, d)?;
    DensityMatrix::new(ComplexMatrix::from_real_diagonal(&eps.level_probabilities()))
}

/// `|R⟩ = √(1 − Σ ε_i)|0⟩ + Σ √ε_i |i⟩`.
pub fn product_env_pure<T: Real>(eps: &EpsilonVector<T>, d: usize) -> Result<StateVector<T>> {
    check_levels(eps, d)?;
    let amps: Vec<T> = eps.level_probabilities().into_iter().map(T::sqrt).collect();
    StateVector::from_real(&amps)
}

/// Parameters of the correlated pair `|R₂⟩(ε₁, ε₂, q)`; `Q = 2q − 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelatedPairSpec<T> {
    eps1: T,
    eps2: T,
    q: T,
}

impl<T: Real> CorrelatedPairSpec<T> {
    pub fn new(eps1: T, eps2: T, q: T) -> Result<Self> {
        if !(eps1 >= T::zero() && eps2 >= T::zero()) {
            return Err(Error::Domain(format!(
                "eps must be non-negative, got ({eps1}, {eps2})"
            )));
        }
        if !(q >= T::zero() && q <= T::one()) {
            return Err(Error::Domain(format!("q must lie in [0, 1], got {q}")));
        }
        let spec = Self { eps1, eps2, q };
        let [idle, r1, r2] = spec.radicands();
        if idle < T::zero() {
            return Err(Error::Domain(format!(
                "1 - eps1 - eps2 = {idle} is negative"
            )));
        }
        if r1 < T::zero() {
            return Err(Error::Domain(format!(
                "1 - 2[q eps1 + (1-q) eps2] = {r1} is negative"
            )));
        }
        if r2 < T::zero() {
            return Err(Error::Domain(format!(
                "1 - 2[q eps2 + (1-q) eps1] = {r2} is negative"
            )));
        }
        Ok(spec)
    }

    /// Construct from the correlation factor `Q ∈ [−1, 1]`.
    pub fn with_correlation(eps1: T, eps2: T, correlation: T) -> Result<Self> {
        if !(correlation >= -T::one() && correlation <= T::one()) {
            return Err(Error::Domain(format!(
                "Q must lie in [-1, 1], got {correlation}"
            )));
        }
        Self::new(eps1, eps2, (correlation + T::one()) * T::lit(0.5))
    }

    pub fn eps1(&self) -> T {
        self.eps1
    }

    pub fn eps2(&self) -> T {
        self.eps2
    }

    pub fn q(&self) -> T {
        self.q
    }

    /// Correlation factor `Q = 2q − 1`.
    pub fn correlation(&self) -> T {
        T::lit(2.0) * self.q - T::one()
    }

    /// Same `ε₁, ε₂` with `q = 1/2` (the uncorrelated product `|R⟩|R⟩`).
    pub fn uncorrelated(&self) -> Self {
        Self {
            q: T::lit(0.5),
            ..*self
        }
    }

    pub fn epsilons(&self) -> EpsilonVector<T> {
        EpsilonVector {
            eps: vec![self.eps1, self.eps2],
        }
    }

    fn radicands(&self) -> [T; 3] {
        let (e1, e2, q) = (self.eps1, self.eps2, self.q);
        let two = T::lit(2.0);
        [
            T::one() - e1 - e2,
            T::one() - two * (q * e1 + (T::one() - q) * e2),
            T::one() - two * (q * e2 + (T::one() - q) * e1),
        ]
    }

    /// Real amplitudes of `|R₂⟩` in the basis `|00⟩ … |22⟩`.
    pub fn amplitudes(&self) -> [T; 9] {
        let (e1, e2, q) = (self.eps1, self.eps2, self.q);
        let [idle, r1, r2] = self.radicands();
        let two = T::lit(2.0);
        let cross = (two * (T::one() - q) * e1 * e2).sqrt();
        let same = (two * q).sqrt();
        [
            idle,
            idle.sqrt() * e1.sqrt(),
            idle.sqrt() * e2.sqrt(),
            e1.sqrt() * r1.sqrt(),
            same * e1,
            cross,
            e2.sqrt() * r2.sqrt(),
            cross,
            same * e2,
        ]
    }

    /// Squared amplitudes: the joint level distribution `p(j, k)`.
    pub fn probabilities(&self) -> [T; 9] {
        self.amplitudes().map(|a| a * a)
    }
}

/// `|R₂⟩` as a normalized 9-vector.
pub fn correlated_pair_state<T: Real>(spec: &CorrelatedPairSpec<T>) -> Result<StateVector<T>> {
    let amps: Vec<Complex<T>> = spec
        .amplitudes()
        .iter()
        .map(|&a| Complex::new(a, T::zero()))
        .collect();
    StateVector::with_tolerance(amps, T::lit(T::default_tolerances().pair_norm))
        .map_err(|e| Error::Domain(format!("correlated pair state: {e}")))
}

/// The diagonal (dephased) mixture of `|R₂⟩⟨R₂|`.
pub fn dephased_pair_state<T: Real>(spec: &CorrelatedPairSpec<T>) -> Result<DensityMatrix<T>> {
    correlated_pair_state(spec)?;
    DensityMatrix::new(ComplexMatrix::from_real_diagonal(&spec.probabilities()))
}

/// Perfectly correlated chain `Σ_i p_i |ii…i⟩⟨ii…i|` seen by `n` collisions.
#[derive(Debug, Clone, PartialEq)]
pub struct GhzChainSpec<T> {
    probs: Vec<T>,
    n: usize,
}

impl<T: Real> GhzChainSpec<T> {
    pub fn new(probs: Vec<T>, n: usize) -> Result<Self> {
        ghz_weights(Self { probs, n })
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn collisions(&self) -> usize {
        self.n
    }

    pub fn with_collisions(&self, n: usize) -> Self {
        Self {
            probs: self.probs.clone(),
            n,
        }
    }
}

/// Validate the chain's level probabilities.
pub fn ghz_weights<T: Real>(spec: GhzChainSpec<T>) -> Result<GhzChainSpec<T>> {
    if spec.probs.is_empty() {
        return Err(Error::Domain("GHZ chain needs at least one level".into()));
    }
    if let Some((i, p)) = spec
        .probs
        .iter()
        .enumerate()
        .find(|(_, &p)| !(p >= T::zero()))
    {
        return Err(Error::Domain(format!("p[{i}] = {p} is negative")));
    }
    let total = spec.probs.iter().fold(T::zero(), |a, &b| a + b);
    if !((total - T::one()).abs() <= T::lit(T::default_tolerances().probability)) {
        return Err(Error::Domain(format!("probabilities sum to {total}, not 1")));
    }
    Ok(spec)
}
