// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Collisional model of a qubit interacting with a stream of qutrit
//! particles.
//!
//! Each collision couples the system to one particle through
//! `H = η(𝟙⊗|0⟩⟨0| + Σ σ_i⊗|i⟩⟨i|)`; with `τ = π/(2η)` the particle in level
//! `i` applies `σ_i` to the system. The crate provides
//!
//! * an exact route (unitaries on `system ⊗ particles`, partial traces) and
//!   closed-form collision maps, which are expected to agree to rounding;
//! * correlated particle pairs `|R₂⟩(ε₁, ε₂, q)` and GHZ-correlated chains;
//! * CP-divisibility analysis of the intermediate map `Φ₂₁` via its Choi
//!   matrix;
//! * entropy, trace distance and entanglement diagnostics.
//!
//! Tensor factors are always ordered system first, then particles in
//! collision order.
//!
//! Everything is generic over [`Real`] (`f64` or `f32`); the aliases below fix
//! the precision.

// Guards are written `!(x >= lo)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod divisibility;
pub mod dynamics;
pub mod eigen;
pub mod environment;
pub mod error;
pub mod infometrics;
pub mod matrix;
pub mod scalar;
pub mod state;

pub use channels::{pauli, ChannelAxis, ChannelPair, CollisionConfig};
pub use divisibility::{
    affine_from_channel, analyze_point, choi_from_affine, cp_test, divide_maps, kraus_from_choi,
    markovianity_scan, AffineMap, ChoiMatrix, CpVerdict, KrausChannel, KrausTerm, ScanRow,
};
pub use dynamics::{QubitChannel, TwoStepResult};
pub use environment::{CorrelatedPairSpec, EpsilonVector, GhzChainSpec};
pub use error::{Error, Result};
pub use infometrics::{trace_distance, von_neumann_entropy, BlochAngles, DeltaERecord};
pub use matrix::{partial_trace, tensor, ComplexMatrix};
pub use scalar::{Real, Tolerances};
pub use state::{DensityMatrix, StateVector};

pub type Matrix64 = ComplexMatrix<f64>;
pub type Density64 = DensityMatrix<f64>;
pub type State64 = StateVector<f64>;
pub type Affine64 = AffineMap<f64>;
pub type Choi64 = ChoiMatrix<f64>;
pub type PairSpec64 = CorrelatedPairSpec<f64>;

pub type Matrix32 = ComplexMatrix<f32>;
pub type Density32 = DensityMatrix<f32>;
pub type State32 = StateVector<f32>;
pub type Affine32 = AffineMap<f32>;
pub type Choi32 = ChoiMatrix<f32>;
pub type PairSpec32 = CorrelatedPairSpec<f32>;
