// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies an ordinary real Jacobi rotation, so the
//! combined transform is `J = W·R`, `A ← J† A J`, `V ← V J`.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{Real, Tolerances};

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    /// Eigenvalues in ascending order.
    pub values: Vec<T>,
    /// Orthonormal eigenvectors as columns, aligned with `values`.
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    /// Column `k` as a vector.
    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }

    pub fn min(&self) -> T {
        self.values[0]
    }

    pub fn max(&self) -> T {
        self.values[self.values.len() - 1]
    }

    /// `Σ_k f(λ_k) v_k v_k†`.
    pub fn reconstruct_with(&self, f: impl Fn(T) -> T) -> ComplexMatrix<T> {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lam) in self.values.iter().enumerate() {
            let w = f(lam);
            let v = self.vector(k);
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + v[i] * v[j].conj() * w;
                }
            }
        }
        out
    }
}

/// Eigen-decomposition with the scalar's default tolerances.
pub fn hermitian_eigen<T: Real>(h: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    hermitian_eigen_with(h, &T::default_tolerances())
}

/// Eigenvalues only.
pub fn hermitian_eigenvalues<T: Real>(h: &ComplexMatrix<T>) -> Result<Vec<T>> {
    hermitian_eigen(h).map(|e| e.values)
}

pub fn hermitian_eigen_with<T: Real>(
    h: &ComplexMatrix<T>,
    tol: &Tolerances,
) -> Result<HermitianEigen<T>> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigenproblem needs a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > T::lit(tol.eigen_hermitian) || defect.is_nan() {
        return Err(Error::NotHermitian {
            deviation: defect.to_f64_lossy(),
        });
    }

    let n = h.rows();
    // Symmetrize so rounding in the input cannot drift the iteration.
    let half = T::lit(0.5);
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * half);
    let mut v = ComplexMatrix::identity(n);

    let threshold = T::lit(tol.eigen_offdiag) * T::one().max(a.frobenius_norm());
    let mut converged = off_diagonal_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < tol.eigen_max_sweeps {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g.is_zero() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / g; // e^{iφ}

    let two = T::lit(2.0);
    let tau = (aqq - app) / (two * g);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // J restricted to (p, q): [[c, s], [−s e^{−iφ}, c e^{−iφ}]]
    let cc = Complex::new(c, T::zero());
    let sc = Complex::new(s, T::zero());
    let jpp = cc;
    let jpq = sc;
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.rows();
    // A ← A J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    // A ← J† A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = ComplexMatrix<f64>;

    #[test]
    fn diagonal_input_sorted() {
        let e = hermitian_eigen(&M::from_real_diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let sx = M::from_fn(2, 2, |i, j| {
            if i != j {
                Complex::new(1.0, 0.0)
            } else {
                Complex::zero()
            }
        });
        let e = hermitian_eigen(&sx).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_y_spectrum_needs_phase_removal() {
        let sy = M::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => Complex::new(0.0, -1.0),
            (1, 0) => Complex::new(0.0, 1.0),
            _ => Complex::zero(),
        });
        let e = hermitian_eigen(&sy).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        let v = e.vector(1);
        let hv = sy.apply(&v).unwrap();
        for (x, y) in hv.iter().zip(&v) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = M::from_fn(2, 2, |i, j| Complex::new((i * 2 + j) as f64, 0.0));
        assert!(matches!(hermitian_eigen(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn rejects_non_square() {
        assert!(hermitian_eigen(&M::zeros(2, 3)).is_err());
    }

    #[test]
    fn single_precision_works() {
        let m = ComplexMatrix::<f32>::from_real_diagonal(&[0.5, -0.25]);
        let e = hermitian_eigen(&m).unwrap();
        assert_eq!(e.values, vec![-0.25f32, 0.5]);
    }
}
