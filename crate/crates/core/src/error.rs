// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the simulator and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace} (expected 1)")]
    TraceNotOne { trace: f64 },

    #[error("negative eigenvalue {eigenvalue:e}")]
    NegativeEigenvalue { eigenvalue: f64 },

    #[error("vector norm is {norm} (expected 1)")]
    NotNormalized { norm: f64 },

    #[error("operator is not unitary/involutory: {0}")]
    NotUnitary(String),

    #[error("Hamiltonian does not square to eta^2 I (deviation {deviation:e})")]
    HamiltonianSquare { deviation: f64 },

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("singular configuration: {0}")]
    Singular(String),

    #[error("non-invertible intermediate map (smallest singular value {sigma_min:e})")]
    NonInvertible { sigma_min: f64 },

    #[error("channel evaluator is not linear (deviation {deviation:e})")]
    Nonlinear { deviation: f64 },

    #[error("map is not unital (|t| = {norm:e})")]
    NotUnital { norm: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
