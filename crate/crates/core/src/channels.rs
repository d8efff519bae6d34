// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Collision operators, the system–particle interaction Hamiltonian and the
//! closed-form collision unitary.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{tensor, ComplexMatrix};
use crate::scalar::Real;

/// Pauli matrices.
pub mod pauli {
    use super::*;

    pub fn identity<T: Real>() -> ComplexMatrix<T> {
        ComplexMatrix::identity(2)
    }

    pub fn x<T: Real>() -> ComplexMatrix<T> {
        let (o, l) = (Complex::zero(), Complex::new(T::one(), T::zero()));
        ComplexMatrix::from_rows(&[vec![o, l], vec![l, o]])
    }

    pub fn y<T: Real>() -> ComplexMatrix<T> {
        let o = Complex::zero();
        let i = Complex::new(T::zero(), T::one());
        ComplexMatrix::from_rows(&[vec![o, -i], vec![i, o]])
    }

    pub fn z<T: Real>() -> ComplexMatrix<T> {
        ComplexMatrix::from_real_diagonal(&[T::one(), -T::one()])
    }

    /// `[σ_x, σ_y, σ_z]`.
    pub fn xyz<T: Real>() -> [ComplexMatrix<T>; 3] {
        [x(), y(), z()]
    }

    /// `[I, σ_x, σ_y, σ_z]`.
    pub fn basis<T: Real>() -> [ComplexMatrix<T>; 4] {
        [identity(), x(), y(), z()]
    }
}

/// Unit vector `ŝ` selecting the collision operator `σ⃗·ŝ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelAxis<T> {
    axis: [T; 3],
}

impl<T: Real> ChannelAxis<T> {
    pub fn new(axis: [T; 3]) -> Result<Self> {
        let len = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if !((len - T::one()).abs() <= T::lit(T::default_tolerances().axis)) {
            return Err(Error::Domain(format!(
                "channel axis must be a unit vector, |s| = {len}"
            )));
        }
        Ok(Self { axis })
    }

    /// `(√a, 0, √(1−a))`, the xz-plane axis of the canonical first channel.
    pub fn xz_plane(a: T) -> Result<Self> {
        check_mixing(a)?;
        Self::new([a.sqrt(), T::zero(), (T::one() - a).sqrt()])
    }

    pub fn components(&self) -> [T; 3] {
        self.axis
    }
}

fn check_mixing<T: Real>(a: T) -> Result<()> {
    if !(a >= T::zero() && a <= T::one()) {
        return Err(Error::Domain(format!("a must lie in [0, 1], got {a}")));
    }
    Ok(())
}

/// `s_x σ_x + s_y σ_y + s_z σ_z`.
pub fn pauli_from_axis<T: Real>(axis: &ChannelAxis<T>) -> ComplexMatrix<T> {
    let [sx, sy, sz] = axis.components();
    let [px, py, pz] = pauli::xyz::<T>();
    let a = &px.scale(sx) + &py.scale(sy);
    &a + &pz.scale(sz)
}

/// Two collision operators; `canonical` gives `σ₁ = √a σ_x + √(1−a) σ_z`,
/// `σ₂ = σ_z`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelPair<T> {
    a: Option<T>,
    sigma1: ComplexMatrix<T>,
    sigma2: ComplexMatrix<T>,
}

impl<T: Real> ChannelPair<T> {
    pub fn canonical(a: T) -> Result<Self> {
        let sigma1 = pauli_from_axis(&ChannelAxis::xz_plane(a)?);
        Ok(Self {
            a: Some(a),
            sigma1,
            sigma2: pauli::z(),
        })
    }

    pub fn from_axes(s1: &ChannelAxis<T>, s2: &ChannelAxis<T>) -> Self {
        Self {
            a: None,
            sigma1: pauli_from_axis(s1),
            sigma2: pauli_from_axis(s2),
        }
    }

    /// Mixing parameter for the canonical form.
    pub fn a(&self) -> Option<T> {
        self.a
    }

    pub fn sigma1(&self) -> &ComplexMatrix<T> {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &ComplexMatrix<T> {
        &self.sigma2
    }

    pub fn sigmas(&self) -> Vec<ComplexMatrix<T>> {
        vec![self.sigma1.clone(), self.sigma2.clone()]
    }

    /// `[σ₁, σ₂]`.
    pub fn commutator(&self) -> ComplexMatrix<T> {
        &(&self.sigma1 * &self.sigma2) - &(&self.sigma2 * &self.sigma1)
    }
}

/// Coupling `η`, duration `τ` and the number of environment levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionConfig<T> {
    pub eta: T,
    pub tau: T,
    pub levels: usize,
}

impl<T: Real> CollisionConfig<T> {
    /// The model's collision: `τ = π/(2η)`.
    pub fn standard(eta: T, levels: usize) -> Result<Self> {
        if !(eta > T::zero()) || !eta.is_finite() {
            return Err(Error::Domain(format!("eta must be positive, got {eta}")));
        }
        if levels == 0 {
            return Err(Error::Domain("environment needs at least one level".into()));
        }
        Ok(Self {
            eta,
            tau: T::FRAC_PI_2() / eta,
            levels,
        })
    }

    pub fn is_standard(&self) -> bool {
        let expected = T::FRAC_PI_2() / self.eta;
        (self.tau - expected).abs() <= T::lit(1e-12) * T::one().max(expected)
    }
}

/// Confirm `σ = σ†` and `σ² = I`.
pub fn check_collision_operator<T: Real>(sigma: &ComplexMatrix<T>) -> Result<()> {
    if sigma.rows() != 2 || sigma.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "collision operator must be 2x2, got {}x{}",
            sigma.rows(),
            sigma.cols()
        )));
    }
    let tol = T::lit(T::default_tolerances().unitary);
    let herm = sigma.hermiticity_defect();
    let square = (sigma * sigma).max_distance(&ComplexMatrix::identity(2));
    if !(herm <= tol && square <= tol) {
        return Err(Error::NotUnitary(format!(
            "hermiticity defect {herm:e}, |σ² − I| = {square:e}"
        )));
    }
    Ok(())
}

/// `H = η(𝟙 ⊗ |0⟩⟨0| + Σ_i σ_i ⊗ |i⟩⟨i|)` on `system ⊗ particle` with
/// `len(sigmas) + 1` particle levels.
pub fn interaction_hamiltonian<T: Real>(
    sigmas: &[ComplexMatrix<T>],
    eta: T,
) -> Result<ComplexMatrix<T>> {
    for s in sigmas {
        check_collision_operator(s)?;
    }
    let d = sigmas.len() + 1;
    let projector = |k: usize| {
        ComplexMatrix::from_fn(d, d, |i, j| {
            if i == k && j == k {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::zero()
            }
        })
    };
    let mut h = tensor(&pauli::identity(), &projector(0));
    for (i, s) in sigmas.iter().enumerate() {
        h = &h + &tensor(s, &projector(i + 1));
    }
    Ok(h.scale(eta))
}

/// `U(τ) = cos(ητ) − i (H/η) sin(ητ)`, valid because `H² = η²𝟙`.
pub fn collision_unitary<T: Real>(h: &ComplexMatrix<T>, eta: T, tau: T) -> Result<ComplexMatrix<T>> {
    if !(eta > T::zero()) || !eta.is_finite() {
        return Err(Error::Domain(format!("eta must be positive, got {eta}")));
    }
    if !h.is_square() {
        return Err(Error::DimensionMismatch("Hamiltonian must be square".into()));
    }
    let n = h.rows();
    let id = ComplexMatrix::identity(n);
    let deviation = (h * h).max_distance(&id.scale(eta * eta));
    let tol = T::lit(T::default_tolerances().hamiltonian_square) * T::one().max(eta * eta);
    if !(deviation <= tol) {
        return Err(Error::HamiltonianSquare {
            deviation: deviation.to_f64_lossy(),
        });
    }
    let phase = eta * tau;
    let cos_part = id.scale(phase.cos());
    let sin_part = h.scale_complex(Complex::new(T::zero(), -phase.sin() / eta));
    Ok(&cos_part + &sin_part)
}
