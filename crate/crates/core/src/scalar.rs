// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Scalar abstraction and numerical tolerances.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar the whole crate is generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Tolerances appropriate for this precision.
    fn default_tolerances() -> Tolerances;

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal fits the scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn default_tolerances() -> Tolerances {
        Tolerances::default()
    }
}

impl Real for f32 {
    fn default_tolerances() -> Tolerances {
        Tolerances::single_precision()
    }
}

/// Every numerical threshold used by the crate, in one place.
///
/// Values are stored as `f64` and converted to the working scalar at the
/// point of use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max-entry deviation `‖M − M†‖` accepted for a density matrix.
    pub hermitian: f64,
    /// Deviation of the trace from one.
    pub trace: f64,
    /// Most negative eigenvalue accepted as positive semidefinite.
    pub psd: f64,
    /// Deviation of a state vector's 2-norm from one.
    pub norm: f64,
    /// Deviation of a channel axis length from one.
    pub axis: f64,
    /// Hermiticity accepted by the eigensolver.
    pub eigen_hermitian: f64,
    /// Jacobi stopping threshold on the off-diagonal Frobenius norm
    /// (relative to `max(1, ‖H‖_F)`).
    pub eigen_offdiag: f64,
    pub eigen_max_sweeps: usize,
    /// `σ² = I` check for collision operators.
    pub unitary: f64,
    /// `H² = η² I` check before using the closed-form unitary.
    pub hamiltonian_square: f64,
    /// Norm check on the correlated pair state.
    pub pair_norm: f64,
    /// Probability-vector checks (sum to one, non-negative).
    pub probability: f64,
    /// Magnitudes below this are treated as singular denominators.
    pub singular: f64,
    /// Smallest singular value accepted when inverting an affine map.
    pub invertible: f64,
    /// Linearity probe threshold for channel tomography.
    pub linearity: f64,
    /// Translation vector size accepted as unital.
    pub unital: f64,
    /// Default complete-positivity slack on the Choi spectrum.
    pub cp: f64,
    /// Slack for entropy monotonicity and eigenvalue clamping inside entropy.
    pub entropy: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermitian: 1e-12,
            trace: 1e-12,
            psd: 1e-10,
            norm: 1e-12,
            axis: 1e-12,
            eigen_hermitian: 1e-10,
            eigen_offdiag: 1e-13,
            eigen_max_sweeps: 100,
            unitary: 1e-12,
            hamiltonian_square: 1e-10,
            pair_norm: 1e-10,
            probability: 1e-12,
            singular: 1e-12,
            invertible: 1e-10,
            linearity: 1e-10,
            unital: 1e-12,
            cp: 1e-12,
            entropy: 1e-10,
        }
    }
}

impl Tolerances {
    /// Loosened thresholds for `f32` arithmetic.
    pub fn single_precision() -> Self {
        Self {
            hermitian: 1e-5,
            trace: 1e-5,
            psd: 1e-5,
            norm: 1e-5,
            axis: 1e-5,
            eigen_hermitian: 1e-4,
            eigen_offdiag: 1e-6,
            eigen_max_sweeps: 100,
            unitary: 1e-5,
            hamiltonian_square: 1e-4,
            pair_norm: 1e-5,
            probability: 1e-5,
            singular: 1e-6,
            invertible: 1e-5,
            linearity: 1e-4,
            unital: 1e-5,
            cp: 1e-5,
            entropy: 1e-5,
        }
    }
}
