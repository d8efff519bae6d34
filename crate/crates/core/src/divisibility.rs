// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! CP-divisibility of the collision dynamics.
//!
//! Qubit maps are handled in their Bloch-affine form `r ↦ Λr + t`. The
//! intermediate map `Φ₂₁ = Φ₂₀ ∘ Φ₁₀⁻¹` is obtained by dividing the 3×3
//! blocks, and its complete positivity is read off the spectrum of the
//! Choi matrix `ℋ = (𝟙 + Σ Λ_μν σ_μ ⊗ σ_ν*)/2`.

use num_complex::Complex;
use rayon::prelude::*;

use crate::channels::{pauli, ChannelPair};
use crate::dynamics::{PairCollision, QubitChannel, SingleCollision};
use crate::eigen::{hermitian_eigen, hermitian_eigenvalues};
use crate::environment::CorrelatedPairSpec;
use crate::error::{Error, Result};
use crate::matrix::{tensor, ComplexMatrix};
use crate::scalar::Real;

type Mat3<T> = [[T; 3]; 3];

/// Bloch-space action `r ↦ Λ r + t` of a trace- and Hermiticity-preserving
/// qubit map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap<T> {
    pub lambda: Mat3<T>,
    pub t: [T; 3],
}

fn mat3_mul<T: Real>(a: &Mat3<T>, b: &Mat3<T>) -> Mat3<T> {
    let mut out = [[T::zero(); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).fold(T::zero(), |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    out
}

fn mat3_vec<T: Real>(a: &Mat3<T>, v: &[T; 3]) -> [T; 3] {
    [0, 1, 2].map(|i| (0..3).fold(T::zero(), |acc, k| acc + a[i][k] * v[k]))
}

fn mat3_transpose<T: Real>(a: &Mat3<T>) -> Mat3<T> {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| a[j][i]))
}

fn mat3_det<T: Real>(a: &Mat3<T>) -> T {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Adjugate inverse; caller has checked conditioning.
fn mat3_inverse<T: Real>(a: &Mat3<T>) -> Mat3<T> {
    let det = mat3_det(a);
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    let adj = [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    adj.map(|row| row.map(|x| x / det))
}

impl<T: Real> AffineMap<T> {
    pub fn identity() -> Self {
        let mut lambda = [[T::zero(); 3]; 3];
        for (i, row) in lambda.iter_mut().enumerate() {
            row[i] = T::one();
        }
        Self {
            lambda,
            t: [T::zero(); 3],
        }
    }

    pub fn unital(lambda: Mat3<T>) -> Self {
        Self {
            lambda,
            t: [T::zero(); 3],
        }
    }

    pub fn diagonal(d: [T; 3]) -> Self {
        let mut lambda = [[T::zero(); 3]; 3];
        for i in 0..3 {
            lambda[i][i] = d[i];
        }
        Self::unital(lambda)
    }

    pub fn apply_bloch(&self, r: [T; 3]) -> [T; 3] {
        let lr = mat3_vec(&self.lambda, &r);
        [0, 1, 2].map(|i| lr[i] + self.t[i])
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let lambda = mat3_mul(&self.lambda, &inner.lambda);
        let lt = mat3_vec(&self.lambda, &inner.t);
        Self {
            lambda,
            t: [0, 1, 2].map(|i| lt[i] + self.t[i]),
        }
    }

    pub fn translation_norm(&self) -> T {
        self.t.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
    }

    /// Largest entry deviation over `Λ` and `t`.
    pub fn max_distance(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.lambda[i][j] - other.lambda[i][j]).abs());
            }
            worst = worst.max((self.t[i] - other.t[i]).abs());
        }
        worst
    }

    /// Singular values of `Λ`, ascending.
    pub fn singular_values(&self) -> Result<[T; 3]> {
        let gram = mat3_mul(&mat3_transpose(&self.lambda), &self.lambda);
        let m = ComplexMatrix::from_fn(3, 3, |i, j| Complex::new(gram[i][j], T::zero()));
        let ev = hermitian_eigenvalues(&m)?;
        Ok([0, 1, 2].map(|k| ev[k].max(T::zero()).sqrt()))
    }

    /// The inverse affine map; fails when `Λ` is (numerically) singular.
    pub fn inverse(&self) -> Result<Self> {
        let sigma_min = self.singular_values()?[0];
        if !(sigma_min >= T::lit(T::default_tolerances().invertible)) {
            return Err(Error::NonInvertible {
                sigma_min: sigma_min.to_f64_lossy(),
            });
        }
        let inv = mat3_inverse(&self.lambda);
        let it = mat3_vec(&inv, &self.t);
        Ok(Self {
            lambda: inv,
            t: it.map(|x| -x),
        })
    }
}

impl<T: Real> QubitChannel<T> for AffineMap<T> {
    /// Linear extension to arbitrary 2×2 operators.
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch("affine map acts on 2x2 operators".into()));
        }
        let basis = pauli::basis::<T>();
        let coeff: Vec<Complex<T>> = basis.iter().map(|p| (p * m).trace()).collect();
        let half = T::lit(0.5);
        let mut out = basis[0].scale_complex(coeff[0] * half);
        for mu in 0..3 {
            let mut c = coeff[0] * self.t[mu];
            for nu in 0..3 {
                c = c + coeff[nu + 1] * self.lambda[mu][nu];
            }
            out = &out + &basis[mu + 1].scale_complex(c * half);
        }
        Ok(out)
    }
}

/// Process tomography with the probes `I, σ_x, σ_y, σ_z`:
/// `Λ_μν = ½ Tr(σ_μ Φ(σ_ν))`, `t_μ = ½ Tr(σ_μ Φ(I))`.
pub fn affine_from_channel<T: Real, C: QubitChannel<T> + ?Sized>(channel: &C) -> Result<AffineMap<T>> {
    let basis = pauli::basis::<T>();
    let images: Vec<ComplexMatrix<T>> = basis
        .iter()
        .map(|p| channel.apply(p))
        .collect::<Result<_>>()?;
    for img in &images {
        if img.rows() != 2 || img.cols() != 2 {
            return Err(Error::DimensionMismatch("channel must return 2x2 operators".into()));
        }
    }

    let probes = [(1usize, 2usize), (0, 3), (1, 3)];
    let tol = T::lit(T::default_tolerances().linearity);
    for &(i, j) in &probes {
        let sum = channel.apply(&(&basis[i] + &basis[j]))?;
        let deviation = sum.max_distance(&(&images[i] + &images[j]));
        if !(deviation <= tol) {
            return Err(Error::Nonlinear {
                deviation: deviation.to_f64_lossy(),
            });
        }
    }

    let half = T::lit(0.5);
    let component = |mu: usize, img: &ComplexMatrix<T>| (&basis[mu + 1] * img).trace().re * half;
    let mut lambda = [[T::zero(); 3]; 3];
    for (mu, row) in lambda.iter_mut().enumerate() {
        for (nu, cell) in row.iter_mut().enumerate() {
            *cell = component(mu, &images[nu + 1]);
        }
    }
    let t = [0, 1, 2].map(|mu| component(mu, &images[0]));
    Ok(AffineMap { lambda, t })
}

/// `Φ₂₁ = Φ₂₀ ∘ Φ₁₀⁻¹`. A singular `Φ₁₀` is reported, never regularized.
pub fn divide_maps<T: Real>(full: &AffineMap<T>, first: &AffineMap<T>) -> Result<AffineMap<T>> {
    Ok(full.compose(&first.inverse()?))
}

/// 4×4 Choi (dynamical) matrix of a unital qubit map.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> ChoiMatrix<T> {
    /// Wrap a 4×4 matrix, checking Hermiticity and `Tr = 2`.
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::DimensionMismatch(format!(
                "Choi matrix must be 4x4, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let tol = T::default_tolerances();
        let defect = matrix.hermiticity_defect();
        if !(defect <= T::lit(tol.hermitian)) {
            return Err(Error::NotHermitian {
                deviation: defect.to_f64_lossy(),
            });
        }
        let tr = matrix.trace().re;
        if !((tr - T::lit(2.0)).abs() <= T::lit(1e2 * tol.trace)) {
            return Err(Error::Domain(format!("Choi trace is {tr}, expected 2")));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }
}

pub fn choi_from_affine<T: Real>(map: &AffineMap<T>) -> Result<ChoiMatrix<T>> {
    let norm = map.translation_norm();
    if !(norm <= T::lit(T::default_tolerances().unital)) {
        return Err(Error::NotUnital {
            norm: norm.to_f64_lossy(),
        });
    }
    let sig = pauli::xyz::<T>();
    let sig_conj: Vec<ComplexMatrix<T>> = sig.iter().map(ComplexMatrix::conj).collect();
    let mut h = ComplexMatrix::identity(4);
    for (row, s) in map.lambda.iter().zip(&sig) {
        for (&w, sc) in row.iter().zip(&sig_conj) {
            if w.is_zero() {
                continue;
            }
            h = &h + &tensor(s, sc).scale(w);
        }
    }
    ChoiMatrix::new(h.scale(T::lit(0.5)))
}

/// Outcome of the complete-positivity test.
#[derive(Debug, Clone, PartialEq)]
pub struct CpVerdict<T> {
    pub min_eigenvalue: T,
    pub is_cp: bool,
    pub tolerance: T,
    /// Full Choi spectrum, ascending.
    pub eigenvalues: Vec<T>,
}

impl<T: Real> CpVerdict<T> {
    /// Eigenvalues below `−tolerance`.
    pub fn negative_count(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&l| l < -self.tolerance)
            .count()
    }
}

/// `is_cp ⇔ λ_min(ℋ) ≥ −tol`.
pub fn cp_test<T: Real>(choi: &ChoiMatrix<T>, tol: T) -> Result<CpVerdict<T>> {
    let eigenvalues = hermitian_eigenvalues(choi.matrix())?;
    let min_eigenvalue = eigenvalues[0];
    Ok(CpVerdict {
        min_eigenvalue,
        is_cp: min_eigenvalue >= -tol,
        tolerance: tol,
        eigenvalues,
    })
}

/// One term `λ_i T_i ρ T_i†` of the Choi-spectrum decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausTerm<T> {
    pub weight: T,
    pub operator: ComplexMatrix<T>,
}

/// Eigen-decomposition of `ℋ` reshaped into operators: `T_i` has rows
/// `([u_i]₀, [u_i]₁)` and `([u_i]₂, [u_i]₃)`. Negative weights are kept; they
/// mark a non-CP map.
pub fn kraus_from_choi<T: Real>(choi: &ChoiMatrix<T>) -> Result<Vec<KrausTerm<T>>> {
    let eig = hermitian_eigen(choi.matrix())?;
    Ok((0..4)
        .map(|k| {
            let u = eig.vector(k);
            KrausTerm {
                weight: eig.values[k],
                operator: ComplexMatrix::from_rows(&[vec![u[0], u[1]], vec![u[2], u[3]]]),
            }
        })
        .collect())
}

/// `Σ λ_i T_i M T_i†`.
#[derive(Debug, Clone)]
pub struct KrausChannel<T> {
    pub terms: Vec<KrausTerm<T>>,
}

impl<T: Real> KrausChannel<T> {
    /// `Σ λ_i T_i† T_i`; the identity for a trace-preserving map.
    pub fn completeness(&self) -> ComplexMatrix<T> {
        self.terms.iter().fold(ComplexMatrix::zeros(2, 2), |acc, term| {
            &acc + &(&term.operator.dagger() * &term.operator).scale(term.weight)
        })
    }
}

impl<T: Real> QubitChannel<T> for KrausChannel<T> {
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch("Kraus channel acts on 2x2 operators".into()));
        }
        Ok(self.terms.iter().fold(ComplexMatrix::zeros(2, 2), |acc, term| {
            &acc + &m.conjugate_by(&term.operator).scale(term.weight)
        }))
    }
}

/// Everything extracted at one `(a, Q, ε₁, ε₂)` point.
#[derive(Debug, Clone)]
pub struct PointAnalysis<T> {
    pub first: AffineMap<T>,
    pub full: AffineMap<T>,
    pub step: AffineMap<T>,
    pub choi: ChoiMatrix<T>,
    pub verdict: CpVerdict<T>,
    pub kraus: Vec<KrausTerm<T>>,
}

/// Build `Φ₁₀` and `Φ₂₀` by tomography of the analytic collision maps,
/// divide, and test the intermediate map.
pub fn analyze_point<T: Real>(a: T, correlation: T, eps1: T, eps2: T, cp_tol: T) -> Result<PointAnalysis<T>> {
    let pair = ChannelPair::canonical(a)?;
    let spec = CorrelatedPairSpec::with_correlation(eps1, eps2, correlation)?;
    let first = affine_from_channel(&SingleCollision {
        eps: spec.epsilons(),
        sigmas: pair.sigmas(),
    })?;
    let full = affine_from_channel(&PairCollision {
        spec,
        sigma1: pair.sigma1().clone(),
        sigma2: pair.sigma2().clone(),
    })?;
    let step = divide_maps(&full, &first)?;
    let choi = choi_from_affine(&step)?;
    let verdict = cp_test(&choi, cp_tol)?;
    let kraus = kraus_from_choi(&choi)?;
    Ok(PointAnalysis {
        first,
        full,
        step,
        choi,
        verdict,
        kraus,
    })
}

/// Per-point result of a Markovianity scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanPoint<T> {
    pub min_eigenvalue: T,
    pub is_cp: bool,
    pub negative_count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow<T> {
    pub a: T,
    pub correlation: T,
    pub eps1: T,
    pub eps2: T,
    pub outcome: std::result::Result<ScanPoint<T>, Error>,
}

/// Scan the CP verdict of `Φ₂₁` over `a × Q` (a outer, Q inner). Points
/// are evaluated in parallel; rows come back in grid order. Domain errors
/// are recorded per row.
pub fn markovianity_scan<T: Real>(
    a_grid: &[T],
    q_grid: &[T],
    eps1: T,
    eps2: T,
    cp_tol: T,
) -> Vec<ScanRow<T>> {
    let points: Vec<(T, T)> = a_grid
        .iter()
        .flat_map(|&a| q_grid.iter().map(move |&q| (a, q)))
        .collect();
    points
        .par_iter()
        .map(|&(a, correlation)| ScanRow {
            a,
            correlation,
            eps1,
            eps2,
            outcome: analyze_point(a, correlation, eps1, eps2, cp_tol).map(|p| ScanPoint {
                min_eigenvalue: p.verdict.min_eigenvalue,
                is_cp: p.verdict.is_cp,
                negative_count: p.verdict.negative_count(),
            }),
        })
        .collect()
}
