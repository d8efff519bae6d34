// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! System evolution through collisions.
//!
//! Two independent routes are provided. The exact route builds the
//! system–environment state, applies the collision unitaries and traces the
//! environment out. The analytic route applies the closed-form maps
//! directly on the 2×2 system state. The exact route is the oracle for the
//! analytic one.
//!
//! Time is measured in collisions (`Δt = 1`), so rates and probabilities
//! coincide: `γ_i = ε_i`.

use crate::channels::{collision_unitary, interaction_hamiltonian, pauli};
use crate::environment::{CorrelatedPairSpec, EpsilonVector, GhzChainSpec};
use crate::error::{Error, Result};
use crate::matrix::{embed_system_env, partial_trace, tensor, ComplexMatrix};
use crate::scalar::Real;
use crate::state::{DensityMatrix, StateVector};

/// A linear map on 2×2 matrices.
pub trait QubitChannel<T: Real> {
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>>;

    /// Apply to a state and re-validate the output.
    fn evolve(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        DensityMatrix::new(self.apply(rho.matrix())?)
    }
}

impl<T: Real, F> QubitChannel<T> for F
where
    F: Fn(&ComplexMatrix<T>) -> Result<ComplexMatrix<T>>,
{
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        self(m)
    }
}

/// Environment particle (or pair) state, mixed or pure.
#[derive(Debug, Clone, PartialEq)]
pub enum EnvState<T> {
    Mixed(DensityMatrix<T>),
    Pure(StateVector<T>),
}

impl<T: Real> EnvState<T> {
    pub fn dim(&self) -> usize {
        match self {
            EnvState::Mixed(m) => m.dim(),
            EnvState::Pure(v) => v.dim(),
        }
    }

    pub fn to_matrix(&self) -> ComplexMatrix<T> {
        match self {
            EnvState::Mixed(m) => m.matrix().clone(),
            EnvState::Pure(v) => v.to_density().into_matrix(),
        }
    }
}

impl<T> From<DensityMatrix<T>> for EnvState<T> {
    fn from(m: DensityMatrix<T>) -> Self {
        EnvState::Mixed(m)
    }
}

impl<T> From<StateVector<T>> for EnvState<T> {
    fn from(v: StateVector<T>) -> Self {
        EnvState::Pure(v)
    }
}

/// States after the first and second collision with a correlated pair.
#[derive(Debug, Clone)]
pub struct TwoStepResult<T> {
    pub rho1: DensityMatrix<T>,
    pub rho2: DensityMatrix<T>,
    /// `ρ₂(Q) − ρ₂(Q = 0)`: traceless, Hermitian, zero when uncorrelated.
    pub correction: ComplexMatrix<T>,
}

/// `σ M σ` for a Hermitian involution `σ`.
fn flip<T: Real>(sigma: &ComplexMatrix<T>, m: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    &(sigma * m) * sigma
}

fn check_qubit<T: Real>(m: &ComplexMatrix<T>) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "system operator must be 2x2, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_channel_count<T: Real>(eps: &EpsilonVector<T>, sigmas: &[ComplexMatrix<T>]) -> Result<()> {
    if eps.len() != sigmas.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} probabilities for {} collision operators",
            eps.len(),
            sigmas.len()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Exact route
// ---------------------------------------------------------------------------

/// `Tr_env[U (M ⊗ ω) U†]` for any 2×2 operator `M`.
pub fn exact_collision_map<T: Real>(
    m: &ComplexMatrix<T>,
    env: &ComplexMatrix<T>,
    sigmas: &[ComplexMatrix<T>],
    eta: T,
    tau: T,
) -> Result<ComplexMatrix<T>> {
    check_qubit(m)?;
    let d = sigmas.len() + 1;
    if env.rows() != d || env.cols() != d {
        return Err(Error::DimensionMismatch(format!(
            "environment is {}x{} but {} collision operators need d = {d}",
            env.rows(),
            env.cols(),
            sigmas.len()
        )));
    }
    let h = interaction_hamiltonian(sigmas, eta)?;
    let u = collision_unitary(&h, eta, tau)?;
    let global = tensor(m, env).conjugate_by(&u);
    partial_trace(&global, &[2, d], &[0])
}

pub fn collide_once_exact<T: Real>(
    rho: &DensityMatrix<T>,
    env: &EnvState<T>,
    sigmas: &[ComplexMatrix<T>],
    eta: T,
    tau: T,
) -> Result<DensityMatrix<T>> {
    DensityMatrix::new(exact_collision_map(
        rho.matrix(),
        &env.to_matrix(),
        sigmas,
        eta,
        tau,
    )?)
}

/// Global `system ⊗ particle₁ ⊗ particle₂` states after the first and after
/// the second collision. `U₁` couples the system to particle 1, `U₂` to
/// particle 2.
pub fn pair_global_states<T: Real>(
    m: &ComplexMatrix<T>,
    pair: &ComplexMatrix<T>,
    sigmas: &[ComplexMatrix<T>],
    eta: T,
    tau: T,
) -> Result<(ComplexMatrix<T>, ComplexMatrix<T>)> {
    check_qubit(m)?;
    let d = sigmas.len() + 1;
    if pair.rows() != d * d || pair.cols() != d * d {
        return Err(Error::DimensionMismatch(format!(
            "pair state is {}x{}, expected {}x{}",
            pair.rows(),
            pair.cols(),
            d * d,
            d * d
        )));
    }
    let h = interaction_hamiltonian(sigmas, eta)?;
    let u = collision_unitary(&h, eta, tau)?;
    let u1 = embed_system_env(&u, 2, &[d, d], 0)?;
    let u2 = embed_system_env(&u, 2, &[d, d], 1)?;
    let g0 = tensor(m, pair);
    let g1 = g0.conjugate_by(&u1);
    let g2 = g1.conjugate_by(&u2);
    Ok((g1, g2))
}

/// Exact two-collision evolution with a (possibly correlated) pair.
///
/// The correction is `ρ₂ − Φ_ω(Φ_ω(ρ))` where `ω` is the first particle's
/// marginal. For `|R₂⟩` that marginal is `ω` for every `q`, so this equals
/// `ρ₂(Q) − ρ₂(Q = 0)`.
pub fn collide_pair_exact<T: Real>(
    rho: &DensityMatrix<T>,
    pair: &EnvState<T>,
    sigmas: &[ComplexMatrix<T>],
    eta: T,
    tau: T,
) -> Result<TwoStepResult<T>> {
    let d = sigmas.len() + 1;
    let pair_m = pair.to_matrix();
    let (g1, g2) = pair_global_states(rho.matrix(), &pair_m, sigmas, eta, tau)?;
    let rho1 = DensityMatrix::new(partial_trace(&g1, &[2, d, d], &[0])?)?;
    let rho2 = DensityMatrix::new(partial_trace(&g2, &[2, d, d], &[0])?)?;

    let omega = partial_trace(&pair_m, &[d, d], &[0])?;
    let once = exact_collision_map(rho.matrix(), &omega, sigmas, eta, tau)?;
    let twice = exact_collision_map(&once, &omega, sigmas, eta, tau)?;
    let correction = rho2.matrix() - &twice;
    Ok(TwoStepResult {
        rho1,
        rho2,
        correction,
    })
}

/// Explicit chain evolution with `Σ_i p_i |i…i⟩⟨i…i|` over `n` particles.
/// Dimension `2·dⁿ`; meant as an oracle for small `n`.
pub fn ghz_evolve_exact<T: Real>(
    rho: &DensityMatrix<T>,
    spec: &GhzChainSpec<T>,
    sigmas: &[ComplexMatrix<T>],
    eta: T,
    tau: T,
) -> Result<DensityMatrix<T>> {
    let d = sigmas.len() + 1;
    if spec.probs().len() != d {
        return Err(Error::DimensionMismatch(format!(
            "{} level probabilities for {} collision operators",
            spec.probs().len(),
            sigmas.len()
        )));
    }
    let n = spec.collisions();
    if n == 0 {
        return Ok(rho.clone());
    }
    let env_dim = d.pow(n as u32);
    let mut diag = vec![T::zero(); env_dim];
    let repunit: usize = (0..n).fold(0, |acc, _| acc * d + 1);
    for (i, &p) in spec.probs().iter().enumerate() {
        diag[i * repunit] = p;
    }
    let env = ComplexMatrix::from_real_diagonal(&diag);

    let h = interaction_hamiltonian(sigmas, eta)?;
    let u = collision_unitary(&h, eta, tau)?;
    let env_dims = vec![d; n];
    let mut global = tensor(rho.matrix(), &env);
    for k in 0..n {
        let uk = embed_system_env(&u, 2, &env_dims, k)?;
        global = global.conjugate_by(&uk);
    }
    let mut dims = vec![2];
    dims.extend_from_slice(&env_dims);
    DensityMatrix::new(partial_trace(&global, &dims, &[0])?)
}

// ---------------------------------------------------------------------------
// Analytic route
// ---------------------------------------------------------------------------

/// `(1 − Σ ε_i) M + Σ ε_i σ_i M σ_i`.
pub fn single_collision_map<T: Real>(
    m: &ComplexMatrix<T>,
    eps: &EpsilonVector<T>,
    sigmas: &[ComplexMatrix<T>],
) -> Result<ComplexMatrix<T>> {
    check_qubit(m)?;
    check_channel_count(eps, sigmas)?;
    let mut out = m.scale(T::one() - eps.sum());
    for (&e, s) in eps.as_slice().iter().zip(sigmas) {
        out = &out + &flip(s, m).scale(e);
    }
    Ok(out)
}

pub fn collide_once_analytic<T: Real>(
    rho: &DensityMatrix<T>,
    eps: &EpsilonVector<T>,
    sigmas: &[ComplexMatrix<T>],
) -> Result<DensityMatrix<T>> {
    DensityMatrix::new(single_collision_map(rho.matrix(), eps, sigmas)?)
}

/// `n` collisions with independent particles.
pub fn evolve_product<T: Real>(
    rho: &DensityMatrix<T>,
    eps: &EpsilonVector<T>,
    sigmas: &[ComplexMatrix<T>],
    n: usize,
) -> Result<DensityMatrix<T>> {
    let mut m = rho.matrix().clone();
    for _ in 0..n {
        m = single_collision_map(&m, eps, sigmas)?;
    }
    DensityMatrix::new(m)
}

/// State after two collisions with `|R₂⟩`, expanded in the operators
/// `σ_i ρ σ_i` and `σ_iσ_j ρ σ_jσ_i`.
pub fn pair_collision_map<T: Real>(
    m: &ComplexMatrix<T>,
    spec: &CorrelatedPairSpec<T>,
    sigma1: &ComplexMatrix<T>,
    sigma2: &ComplexMatrix<T>,
) -> Result<ComplexMatrix<T>> {
    check_qubit(m)?;
    let (e1, e2, q) = (spec.eps1(), spec.eps2(), spec.q());
    let one = T::one();
    let two = T::lit(2.0);
    let idle = one - e1 - e2;

    let s1 = flip(sigma1, m);
    let s2 = flip(sigma2, m);
    let s12 = flip(sigma1, &s2); // σ₁σ₂ M σ₂σ₁
    let s21 = flip(sigma2, &s1); // σ₂σ₁ M σ₁σ₂

    let w_id = idle * idle + two * q * (e1 * e1 + e2 * e2);
    let w1 = idle * e1 + e1 * (one - two * (q * e1 + (one - q) * e2));
    let w2 = idle * e2 + e2 * (one - two * (q * e2 + (one - q) * e1));
    let w12 = two * (one - q) * e1 * e2;

    let mut out = m.scale(w_id);
    out = &out + &s1.scale(w1);
    out = &out + &s2.scale(w2);
    out = &out + &(&s12 + &s21).scale(w12);
    Ok(out)
}

/// `Q {(ε₂ − ε₁)(ε₁𝓛₁ − ε₂𝓛₂)M + ε₁ε₂[2M − σ₁σ₂Mσ₂σ₁ − σ₂σ₁Mσ₁σ₂]}` with
/// `𝓛_i M = −M + σ_i M σ_i`.
pub fn correlation_correction<T: Real>(
    m: &ComplexMatrix<T>,
    spec: &CorrelatedPairSpec<T>,
    sigma1: &ComplexMatrix<T>,
    sigma2: &ComplexMatrix<T>,
) -> Result<ComplexMatrix<T>> {
    check_qubit(m)?;
    let (e1, e2) = (spec.eps1(), spec.eps2());
    let big_q = spec.correlation();
    let l1 = &flip(sigma1, m) - m;
    let l2 = &flip(sigma2, m) - m;
    let s12 = flip(sigma1, &flip(sigma2, m));
    let s21 = flip(sigma2, &flip(sigma1, m));

    let rate_part = &l1.scale(e1) - &l2.scale(e2);
    let rate_part = rate_part.scale(e2 - e1);
    let cross = &m.scale(T::lit(2.0)) - &(&s12 + &s21);
    let brace = &rate_part + &cross.scale(e1 * e2);
    Ok(brace.scale(big_q))
}

pub fn collide_pair_analytic<T: Real>(
    rho: &DensityMatrix<T>,
    spec: &CorrelatedPairSpec<T>,
    sigma1: &ComplexMatrix<T>,
    sigma2: &ComplexMatrix<T>,
) -> Result<TwoStepResult<T>> {
    let eps = spec.epsilons();
    let sigmas = [sigma1.clone(), sigma2.clone()];
    let rho1 = DensityMatrix::new(single_collision_map(rho.matrix(), &eps, &sigmas)?)?;
    let rho2 = DensityMatrix::new(pair_collision_map(rho.matrix(), spec, sigma1, sigma2)?)?;
    let correction = correlation_correction(rho.matrix(), spec, sigma1, sigma2)?;
    Ok(TwoStepResult {
        rho1,
        rho2,
        correction,
    })
}

/// One collision with a product particle, as a [`QubitChannel`].
#[derive(Debug, Clone)]
pub struct SingleCollision<T> {
    pub eps: EpsilonVector<T>,
    pub sigmas: Vec<ComplexMatrix<T>>,
}

impl<T: Real> QubitChannel<T> for SingleCollision<T> {
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        single_collision_map(m, &self.eps, &self.sigmas)
    }
}

/// Both collisions with a correlated pair (the map `Φ₂₀`).
#[derive(Debug, Clone)]
pub struct PairCollision<T> {
    pub spec: CorrelatedPairSpec<T>,
    pub sigma1: ComplexMatrix<T>,
    pub sigma2: ComplexMatrix<T>,
}

impl<T: Real> QubitChannel<T> for PairCollision<T> {
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        pair_collision_map(m, &self.spec, &self.sigma1, &self.sigma2)
    }
}

/// Which stage of an exact pair evolution to expose as a channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairStage {
    First,
    Second,
}

/// Exact pair evolution from the initial state to `stage`.
#[derive(Debug, Clone)]
pub struct ExactPairCollision<T> {
    pub pair: ComplexMatrix<T>,
    pub sigmas: Vec<ComplexMatrix<T>>,
    pub eta: T,
    pub tau: T,
    pub stage: PairStage,
}

impl<T: Real> QubitChannel<T> for ExactPairCollision<T> {
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        let d = self.sigmas.len() + 1;
        let (g1, g2) = pair_global_states(m, &self.pair, &self.sigmas, self.eta, self.tau)?;
        let g = match self.stage {
            PairStage::First => g1,
            PairStage::Second => g2,
        };
        partial_trace(&g, &[2, d, d], &[0])
    }
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Rate of the single effective channel when `σ₁ = σ₂`:
/// `γ₁ + γ₂ − Q(γ₁ − γ₂)(ε₁ − ε₂)/[1 − 2(ε₁ + ε₂)]`.
pub fn same_channel_rate<T: Real>(gamma1: T, gamma2: T, eps1: T, eps2: T, correlation: T) -> Result<T> {
    let denom = T::one() - T::lit(2.0) * (eps1 + eps2);
    if denom.abs() < T::lit(T::default_tolerances().singular) {
        return Err(Error::Singular(format!(
            "1 - 2(eps1 + eps2) = {denom} vanishes"
        )));
    }
    Ok(gamma1 + gamma2 - correlation * (gamma1 - gamma2) * (eps1 - eps2) / denom)
}

/// Rate `−2γaεQ` of the effective `σ_y` channel for equal `ε`; negative
/// (not of Lindblad form) exactly when `Q > 0` and `a > 0`.
pub fn effective_y_rate<T: Real>(gamma: T, a: T, eps: T, correlation: T) -> T {
    -T::lit(2.0) * gamma * a * eps * correlation
}

/// Coefficients of the equal-`ε` map from the first to the second collision:
/// `ρ₂ = (1−2ε)ρ₁ + C₁[ρ₁ − σ_yρ₁σ_y] + C₂σ_zρ₁σ_z + C₃σ_xρ₁σ_x + C₄[σ_xρ₁σ_z + σ_zρ₁σ_x]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepCoefficients<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
    pub c4: T,
}

/// `C₁ … C₄` for the canonical pair with `ε₁ = ε₂ = ε`.
///
/// `C₂` is written so that `C₂ + C₃ = 2ε` (trace preservation).
pub fn step_coefficients<T: Real>(a: T, eps: T, q: T) -> Result<StepCoefficients<T>> {
    if !(a >= T::zero() && a <= T::one()) {
        return Err(Error::Domain(format!("a must lie in [0, 1], got {a}")));
    }
    let one = T::one();
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let eight = T::lit(8.0);
    let denom = one + four * eps * (a * eps - one);
    if denom.abs() < T::lit(T::default_tolerances().singular) {
        return Err(Error::Singular(format!(
            "1 + 4 eps (a eps - 1) = {denom} vanishes"
        )));
    }
    let e2 = eps * eps;
    let mix = (two * a - one) * (q - one) - q;
    let c1 = two * a * (two * q - one) * e2 * (one - two * eps) / denom;
    let c2 = eps
        * (two - a - eight * eps + four * a * eps + eight * a * e2 + four * a * e2 * mix)
        / denom;
    let c3 = a * eps * (one - four * eps - four * e2 * mix) / denom;
    let c4 = ((one - a) * a).sqrt() * eps * (one - four * eps * (two * a * (q - one) * eps + one))
        / denom;
    Ok(StepCoefficients { c1, c2, c3, c4 })
}

pub fn equal_eps_step_map<T: Real>(
    m: &ComplexMatrix<T>,
    a: T,
    eps: T,
    q: T,
) -> Result<ComplexMatrix<T>> {
    check_qubit(m)?;
    let c = step_coefficients(a, eps, q)?;
    let [x, y, z] = pauli::xyz::<T>();
    let mut out = m.scale(T::one() - T::lit(2.0) * eps);
    out = &out + &(m - &flip(&y, m)).scale(c.c1);
    out = &out + &flip(&z, m).scale(c.c2);
    out = &out + &flip(&x, m).scale(c.c3);
    let xz = &(&(&x * m) * &z) + &(&(&z * m) * &x);
    out = &out + &xz.scale(c.c4);
    Ok(out)
}

/// Second-collision state from the first-collision state for `ε₁ = ε₂ = ε`
/// and the canonical channel pair.
pub fn equal_eps_step<T: Real>(rho1: &DensityMatrix<T>, a: T, eps: T, q: T) -> Result<DensityMatrix<T>> {
    DensityMatrix::new(equal_eps_step_map(rho1.matrix(), a, eps, q)?)
}

/// Second-order expansion of [`equal_eps_step`]:
/// `(1−2ε)ρ₁ + εσ₁ρ₁σ₁ + εσ₂ρ₁σ₂ + 2aQε²[ρ₁ − σ_yρ₁σ_y]`.
pub fn truncated_step_map<T: Real>(
    m: &ComplexMatrix<T>,
    a: T,
    eps: T,
    correlation: T,
) -> Result<ComplexMatrix<T>> {
    check_qubit(m)?;
    let pair = crate::channels::ChannelPair::canonical(a)?;
    let y = pauli::y::<T>();
    let mut out = m.scale(T::one() - T::lit(2.0) * eps);
    out = &out + &flip(pair.sigma1(), m).scale(eps);
    out = &out + &flip(pair.sigma2(), m).scale(eps);
    let effective = (m - &flip(&y, m)).scale(T::lit(2.0) * a * correlation * eps * eps);
    Ok(&out + &effective)
}

/// Evolution with a perfectly correlated chain: `ρ` for even `n`, the
/// single-collision mixture `p₀ρ + Σ p_i σ_i ρ σ_i` for odd `n`.
pub fn ghz_evolve<T: Real>(
    rho: &DensityMatrix<T>,
    spec: &GhzChainSpec<T>,
    sigmas: &[ComplexMatrix<T>],
) -> Result<DensityMatrix<T>> {
    let probs = spec.probs();
    if probs.len() != sigmas.len() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{} level probabilities for {} collision operators",
            probs.len(),
            sigmas.len()
        )));
    }
    if spec.collisions().is_multiple_of(2) {
        return Ok(rho.clone());
    }
    let m = rho.matrix();
    let mut out = m.scale(probs[0]);
    for (&p, s) in probs[1..].iter().zip(sigmas) {
        out = &out + &flip(s, m).scale(p);
    }
    DensityMatrix::new(out)
}
