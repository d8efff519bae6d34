// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Validated quantum states.

use num_complex::Complex;
use num_traits::Zero;

use crate::eigen::hermitian_eigen_with;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{Real, Tolerances};

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
}

/// Normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

/// Check the density-matrix invariants with the default tolerances.
pub fn validate_density<T: Real>(m: ComplexMatrix<T>) -> Result<DensityMatrix<T>> {
    validate_density_with(m, &T::default_tolerances())
}

pub fn validate_density_with<T: Real>(
    m: ComplexMatrix<T>,
    tol: &Tolerances,
) -> Result<DensityMatrix<T>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "density matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let defect = m.hermiticity_defect();
    if !(defect <= T::lit(tol.hermitian)) {
        return Err(Error::NotHermitian {
            deviation: defect.to_f64_lossy(),
        });
    }
    let tr = m.trace().re;
    if !((tr - T::one()).abs() <= T::lit(tol.trace)) {
        return Err(Error::TraceNotOne {
            trace: tr.to_f64_lossy(),
        });
    }
    let eig = hermitian_eigen_with(&m, tol)?;
    if eig.min() < -T::lit(tol.psd) {
        return Err(Error::NegativeEigenvalue {
            eigenvalue: eig.min().to_f64_lossy(),
        });
    }
    Ok(DensityMatrix { matrix: m })
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(m: ComplexMatrix<T>) -> Result<Self> {
        validate_density(m)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn pure(psi: &StateVector<T>) -> Self {
        Self {
            matrix: ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()),
        }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale(T::one() / T::from_usize(dim).unwrap()),
        }
    }

    /// Qubit state `(I + r·σ)/2`; requires `|r| ≤ 1`.
    pub fn from_bloch(r: [T; 3]) -> Result<Self> {
        let len = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        let slack = T::lit(T::default_tolerances().norm);
        if len > T::one() + slack {
            return Err(Error::Domain(format!(
                "Bloch vector length {len} exceeds 1"
            )));
        }
        let half = T::lit(0.5);
        let m = ComplexMatrix::from_rows(&[
            vec![
                Complex::new(half * (T::one() + r[2]), T::zero()),
                Complex::new(half * r[0], -half * r[1]),
            ],
            vec![
                Complex::new(half * r[0], half * r[1]),
                Complex::new(half * (T::one() - r[2]), T::zero()),
            ],
        ]);
        Ok(Self { matrix: m })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> T {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Bloch vector `r_i = Tr(ρ σ_i)`; qubits only.
    pub fn bloch(&self) -> Result<[T; 3]> {
        bloch_vector(&self.matrix)
    }
}

/// Bloch components `Tr(M σ_i)` of any 2×2 matrix (real parts).
pub fn bloch_vector<T: Real>(m: &ComplexMatrix<T>) -> Result<[T; 3]> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "Bloch vector needs a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let x = m[(0, 1)].re + m[(1, 0)].re;
    let y = m[(1, 0)].im - m[(0, 1)].im;
    let z = m[(0, 0)].re - m[(1, 1)].re;
    Ok([x, y, z])
}

impl<T: Real> StateVector<T> {
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        Self::with_tolerance(amplitudes, T::lit(T::default_tolerances().norm))
    }

    pub(crate) fn with_tolerance(amplitudes: Vec<Complex<T>>, tol: T) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::DimensionMismatch("empty state vector".into()));
        }
        let norm = amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt();
        if !((norm - T::one()).abs() <= tol) {
            return Err(Error::NotNormalized {
                norm: norm.to_f64_lossy(),
            });
        }
        Ok(Self { amplitudes })
    }

    /// Real amplitudes.
    pub fn from_real(amplitudes: &[T]) -> Result<Self> {
        Self::new(
            amplitudes
                .iter()
                .map(|&a| Complex::new(a, T::zero()))
                .collect(),
        )
    }

    /// Computational basis state `|k⟩`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index out of range");
        let mut amplitudes = vec![Complex::zero(); dim];
        amplitudes[k] = Complex::new(T::one(), T::zero());
        Self { amplitudes }
    }

    /// Qubit state with Bloch vector `(sinθ cosφ, sinθ sinφ, cosθ)`.
    pub fn from_angles(theta: T, phi: T) -> Self {
        let half = T::lit(0.5) * theta;
        Self {
            amplitudes: vec![
                Complex::new(half.cos(), T::zero()),
                Complex::from_polar(half.sin(), phi),
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    pub fn to_density(&self) -> DensityMatrix<T> {
        DensityMatrix::pure(self)
    }
}
