// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrices: Kronecker products, partial traces and the small
//! amount of arithmetic the collision model needs.
//!
//! Tensor factors are ordered left to right, system first, then environment
//! particles in collision order. A basis index of a composite space is the
//! row-major (lexicographic) combination of the factor indices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense complex matrix stored in row-major order.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix must be at least 1x1");
        Self {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Complex::one() } else { Complex::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Square matrix from nested rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Self::from_fn(n, m, |i, j| rows[i][j])
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(diag[i], T::zero())
            } else {
                Complex::zero()
            }
        })
    }

    /// `|v⟩⟨w|`.
    pub fn outer(v: &[Complex<T>], w: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), w.len(), |i, j| v[i] * w[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_complex(&self, s: Complex<T>) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    /// `max |M − M†|` entrywise; infinite for non-square input.
    pub fn hermiticity_defect(&self) -> T {
        if !self.is_square() {
            return T::infinity();
        }
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn try_matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d = *d + a * b;
                }
            }
        }
        Ok(out)
    }

    /// `A · self · A†`.
    pub fn conjugate_by(&self, a: &Self) -> Self {
        &(a * self) * &a.dagger()
    }

    pub fn apply(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(Complex::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    /// Frobenius distance `‖self − other‖_F`.
    pub fn distance(&self, other: &Self) -> T {
        (self - other).frobenius_norm()
    }

    /// Entrywise max distance.
    pub fn max_distance(&self, other: &Self) -> T {
        (self - other).max_abs()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        tensor(self, other)
    }
}

/// Kronecker product: block `(i, j)` of the result is `a[i, j] · b`.
pub fn tensor<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let s = a[(ia, ja)];
            if s.is_zero() {
                continue;
            }
            for ib in 0..b.rows {
                for jb in 0..b.cols {
                    out[(ia * b.rows + ib, ja * b.cols + jb)] = s * b[(ib, jb)];
                }
            }
        }
    }
    out
}

/// Kronecker product of a list of factors, left to right.
pub fn tensor_all<T: Real>(factors: &[ComplexMatrix<T>]) -> Option<ComplexMatrix<T>> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, f| tensor(&acc, f)))
}

/// Kronecker product of state vectors.
pub fn tensor_vec<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Vec<Complex<T>> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| x * y))
        .collect()
}

/// Split a composite basis index into per-factor indices.
fn split_index(mut idx: usize, dims: &[usize], out: &mut [usize]) {
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = idx % d;
        idx /= d;
    }
}

/// Reduced matrix over the factors listed in `keep` (taken in ascending
/// order); all other factors are traced out.
pub fn partial_trace<T: Real>(
    m: &ComplexMatrix<T>,
    dims: &[usize],
    keep: &[usize],
) -> Result<ComplexMatrix<T>> {
    let total: usize = dims.iter().product();
    if !m.is_square() || m.rows() != total || dims.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "factor dimensions {dims:?} do not match a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if keep.is_empty() || keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::DimensionMismatch(format!(
            "kept factors {keep:?} invalid for {} factors",
            dims.len()
        )));
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();

    let kept_dims: Vec<usize> = kept.iter().map(|&k| dims[k]).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !kept.contains(k)).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&k| dims[k]).collect();
    let out_dim: usize = kept_dims.iter().product();

    // (kept index, traced index) for every composite index
    let mut parts = vec![0usize; dims.len()];
    let labels: Vec<(usize, usize)> = (0..total)
        .map(|idx| {
            split_index(idx, dims, &mut parts);
            let combine = |which: &[usize], ds: &[usize]| {
                which
                    .iter()
                    .zip(ds)
                    .fold(0usize, |acc, (&k, &d)| acc * d + parts[k])
            };
            (combine(&kept, &kept_dims), combine(&traced, &traced_dims))
        })
        .collect();

    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for (r, &(kr, tr)) in labels.iter().enumerate() {
        for (c, &(kc, tc)) in labels.iter().enumerate() {
            if tr == tc {
                out[(kr, kc)] = out[(kr, kc)] + m[(r, c)];
            }
        }
    }
    Ok(out)
}

/// Embed an operator acting on `system ⊗ env[k]` into the full space
/// `system ⊗ env[0] ⊗ … ⊗ env[n−1]`, acting as identity on every other
/// environment factor.
pub fn embed_system_env<T: Real>(
    op: &ComplexMatrix<T>,
    sys_dim: usize,
    env_dims: &[usize],
    k: usize,
) -> Result<ComplexMatrix<T>> {
    if k >= env_dims.len() || op.rows() != sys_dim * env_dims[k] || !op.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot embed {}x{} operator on factor {k} of environment {env_dims:?}",
            op.rows(),
            op.cols()
        )));
    }
    let mut dims = Vec::with_capacity(env_dims.len() + 1);
    dims.push(sys_dim);
    dims.extend_from_slice(env_dims);
    let total: usize = dims.iter().product();
    let dk = env_dims[k];

    let mut pr = vec![0usize; dims.len()];
    let mut pc = vec![0usize; dims.len()];
    let mut out = ComplexMatrix::zeros(total, total);
    for r in 0..total {
        split_index(r, &dims, &mut pr);
        for c in 0..total {
            split_index(c, &dims, &mut pc);
            let spectators_match = (1..dims.len()).all(|f| f == k + 1 || pr[f] == pc[f]);
            if spectators_match {
                let i = pr[0] * dk + pr[k + 1];
                let j = pc[0] * dk + pc[k + 1];
                out[(r, c)] = op[(i, j)];
            }
        }
    }
    Ok(out)
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T: Real> Mul<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    /// Panics on shape mismatch; use [`ComplexMatrix::try_matmul`] otherwise.
    fn mul(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.try_matmul(rhs).expect("matrix shapes must agree")
    }
}

fn zip_with<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>,
) -> ComplexMatrix<T> {
    assert!(
        a.rows == b.rows && a.cols == b.cols,
        "matrix shapes must agree ({}x{} vs {}x{})",
        a.rows,
        a.cols,
        b.rows,
        b.cols
    );
    ComplexMatrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(&x, &y)| f(x, y)).collect(),
    }
}

impl<'a, T: Real> Add<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl<'a, T: Real> Sub<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl<T: Real> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn neg(self) -> ComplexMatrix<T> {
        self.map(|z| -z)
    }
}

impl<T: fmt::Debug> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = &self.data[i * self.cols + j];
                write!(f, "({:?}, {:?}) ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
