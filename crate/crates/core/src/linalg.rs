//! Minimal dense complex linear algebra.
//!
//! The whole artifact only ever needs Hermitian eigenproblems on small dense
//! matrices (marginal density operators, slice Gram matrices, POVM residuals;
//! at most a few hundred rows). A cyclic complex Jacobi sweep is accurate,
//! deterministic and keeps the crate generic over the scalar type.

use num_complex::Complex;

use crate::scalar::{real, Scalar};

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T: Scalar> {
    pub dim: usize,
    pub data: Vec<Complex<T>>,
}

impl<T: Scalar> CMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "rows must form a square matrix");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(*d, T::zero());
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(other.data.iter()) {
            *o = *o - *b;
        }
        out
    }

    pub fn scale(&self, s: T) -> Self {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = Complex::new(v.re * s, v.im * s);
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.dim {
            t = t + self[(i, i)];
        }
        t
    }

    pub fn matvec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.dim;
        assert_eq!(x.len(), n);
        let mut y = vec![Complex::new(T::zero(), T::zero()); n];
        for i in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                acc = acc + self[(i, j)] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Maximum deviation from Hermitian symmetry.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

/// Eigendecomposition of a Hermitian matrix: `matrix = V diag(values) V^*`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Scalar> {
    /// Eigenvalues sorted nonincreasing.
    pub values: Vec<T>,
    /// Columns are the corresponding orthonormal eigenvectors.
    pub vectors: CMatrix<T>,
}

/// Cyclic Jacobi diagonalization for Hermitian matrices.
///
/// Input is symmetrized first so tiny Hermiticity defects from upstream
/// contractions cannot leak into the rotations.
pub fn hermitian_eigen<T: Scalar>(matrix: &CMatrix<T>) -> HermitianEigen<T> {
    let n = matrix.dim;
    let mut a = CMatrix::zeros(n);
    let half = real::<T>(0.5);
    for i in 0..n {
        for j in 0..n {
            let s = matrix[(i, j)] + matrix[(j, i)].conj();
            a[(i, j)] = Complex::new(s.re * half, s.im * half);
        }
    }
    let mut v = CMatrix::identity(n);

    let scale = a.frobenius_norm().max(T::one());
    let tol = scale * T::epsilon() * real::<T>(1e2);
    let max_sweeps = 60;

    for _ in 0..max_sweeps {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let apq_norm = apq.norm();
                if apq_norm <= tol * real::<T>(1e-3) {
                    continue;
                }
                // Phase that makes the off-diagonal entry real positive.
                let phase = apq / Complex::new(apq_norm, T::zero());
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                // Rotation angle for the real 2x2 block [[app, |apq|], [|apq|, aqq]].
                let theta = if app == aqq {
                    real::<T>(std::f64::consts::FRAC_PI_4)
                } else {
                    (real::<T>(2.0) * apq_norm / (app - aqq)).atan() * half
                };
                let c = theta.cos();
                let s = theta.sin();
                // Columns transform as  p' = c*p + s*phase^* *q ; q' = -s*phase*p + c*q.
                let cp = Complex::new(c, T::zero());
                let sp = phase.conj() * Complex::new(s, T::zero());
                let sm = phase * Complex::new(s, T::zero());

                // Update A = G^* A G on rows and columns p, q.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * cp + akq * sp;
                    a[(k, q)] = akq * cp - akp * sm;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * cp.conj() + aqk * sp.conj();
                    a[(q, k)] = aqk * cp.conj() - apk * sm.conj();
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * cp + vkq * sp;
                    v[(k, q)] = vkq * cp - vkp * sm;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));

    let values: Vec<T> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, new_col)] = v[(row, old_col)];
        }
    }
    HermitianEigen { values, vectors }
}

/// Eigenvalues only, sorted nonincreasing.
pub fn hermitian_eigenvalues<T: Scalar>(matrix: &CMatrix<T>) -> Vec<T> {
    hermitian_eigen(matrix).values
}

/// Operator norm (largest absolute eigenvalue) of a Hermitian matrix.
pub fn hermitian_operator_norm<T: Scalar>(matrix: &CMatrix<T>) -> T {
    hermitian_eigenvalues(matrix)
        .into_iter()
        .map(|x| x.abs())
        .fold(T::zero(), |a, b| a.max(b))
}

/// Checks `matrix >= -tol` in the positive-semidefinite order.
pub fn is_psd<T: Scalar>(matrix: &CMatrix<T>, tol: T) -> bool {
    hermitian_eigenvalues(matrix)
        .into_iter()
        .all(|x| x >= -tol)
}

/// Largest eigenvalue of a Hermitian PSD matrix by power iteration with a
/// dense fallback; used on the larger slice Gram matrices where a full
/// decomposition per sample would dominate the runtime.
pub fn largest_psd_eigenvalue<T: Scalar>(matrix: &CMatrix<T>) -> T {
    let n = matrix.dim;
    if n <= 48 {
        return hermitian_eigenvalues(matrix)[0];
    }
    // Deterministic start vector with mildly varying entries.
    let mut x: Vec<Complex<T>> = (0..n)
        .map(|i| {
            Complex::new(
                T::one() + real::<T>(0.1) * real::<T>((i % 7) as f64),
                real::<T>(0.05) * real::<T>((i % 3) as f64),
            )
        })
        .collect();
    normalize(&mut x);
    let mut lambda = T::zero();
    for it in 0..5000 {
        let mut y = matrix.matvec(&x);
        let norm = vec_norm(&y);
        if norm == T::zero() {
            return T::zero();
        }
        for v in y.iter_mut() {
            *v = Complex::new(v.re / norm, v.im / norm);
        }
        let new_lambda = rayleigh(matrix, &y);
        let done = (new_lambda - lambda).abs()
            <= real::<T>(1e-14) * new_lambda.abs().max(T::one());
        x = y;
        lambda = new_lambda;
        if done && it > 3 {
            return lambda;
        }
    }
    // Power iteration stalled (tight eigenvalue cluster); fall back.
    hermitian_eigenvalues(matrix)[0]
}

fn rayleigh<T: Scalar>(m: &CMatrix<T>, x: &[Complex<T>]) -> T {
    let mx = m.matvec(x);
    let mut acc = T::zero();
    for (a, b) in x.iter().zip(mx.iter()) {
        acc = acc + (a.conj() * *b).re;
    }
    acc
}

pub fn vec_norm<T: Scalar>(x: &[Complex<T>]) -> T {
    x.iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

fn normalize<T: Scalar>(x: &mut [Complex<T>]) {
    let n = vec_norm(x);
    if n > T::zero() {
        for v in x.iter_mut() {
            *v = Complex::new(v.re / n, v.im / n);
        }
    }
}
