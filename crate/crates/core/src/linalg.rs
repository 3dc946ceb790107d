//! Dense complex linear algebra: Hermitian eigensolver (cyclic Jacobi),
//! singular values and the trace norm.
//!
//! Matrices here are small (a two-qutrit density matrix is 9x9), so every
//! routine favours simplicity and reproducibility over asymptotic speed.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::config::Tolerances;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// Build from nested rows of real numbers; handy in tests.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data: Vec<Complex64> = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::new(r, c, data)
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

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise |a - b|; `None` when shapes differ.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Option<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    /// max |M[i][j] - conj(M[j][i])|, or `None` for a non-square matrix.
    pub fn hermitian_asymmetry(&self) -> Option<f64> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        Some(worst)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_asymmetry().is_some_and(|a| a <= tol)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            self[(i / r2, j / c2)] * other[(i % r2, j % c2)]
        })
    }

    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `<v| M |v>`.
    pub fn expectation(&self, v: &[Complex64]) -> Result<Complex64> {
        let mv = self.matvec(v)?;
        Ok(v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum())
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on incompatible shapes.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigenvalues (ascending) with matching unit eigenvectors stored as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` and then
/// applies the classical real Jacobi rotation, so the working matrix stays
/// exactly Hermitian. Iteration stops when the off-diagonal Frobenius norm
/// drops below `tol.jacobi_offdiag * ||m||_F`.
pub fn eigh(m: &ComplexMatrix, tol: &Tolerances) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let asymmetry = m.hermitian_asymmetry().unwrap_or(f64::INFINITY);
    if asymmetry > tol.hermitian {
        return Err(Error::NotHermitian {
            asymmetry,
            tolerance: tol.hermitian,
        });
    }

    let n = m.rows;
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(m[(i, i)].re, 0.0)
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(n);
    let threshold = tol.jacobi_offdiag * a.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows;
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Annihilate `a[p][q]` with `A <- V^H A V`, `V = diag(1, conj(e)) * R(c, s)`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let phase_c = phase.conj();
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.rows;

    for r in 0..n {
        let (xp, xq) = (a[(r, p)], a[(r, q)]);
        a[(r, p)] = xp * c - phase_c * xq * s;
        a[(r, q)] = xp * s + phase_c * xq * c;
    }
    for r in 0..n {
        let (xp, xq) = (a[(p, r)], a[(q, r)]);
        a[(p, r)] = xp * c - phase * xq * s;
        a[(q, r)] = xp * s + phase * xq * c;
    }
    for r in 0..n {
        let (xp, xq) = (v[(r, p)], v[(r, q)]);
        v[(r, p)] = xp * c - phase_c * xq * s;
        v[(r, q)] = xp * s + phase_c * xq * c;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}

/// Real eigenvalues of a Hermitian matrix, ascending. `tol` is the accepted
/// Hermitian asymmetry; the Jacobi settings are the defaults.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    let cfg = Tolerances {
        hermitian: tol,
        ..Tolerances::default()
    };
    eigh(m, &cfg).map(|e| e.values)
}

/// Singular values, descending, as square roots of the eigenvalues of the
/// smaller Gram matrix (`m^H m` or `m m^H`). Round-off negatives clamp to 0.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    singular_values_with(m, &Tolerances::default())
}

pub fn singular_values_with(m: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    let adj = m.adjoint();
    let gram = if m.rows >= m.cols { &adj * m } else { m * &adj };
    let mut values: Vec<f64> = eigh(&gram, tol)?
        .values
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    values.reverse();
    Ok(values)
}

/// Trace norm: sum of |eigenvalues| for Hermitian input, otherwise the sum of
/// singular values.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    trace_norm_with(m, &Tolerances::default())
}

pub fn trace_norm_with(m: &ComplexMatrix, tol: &Tolerances) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.is_hermitian(tol.hermitian) {
        Ok(eigh(m, tol)?.values.iter().map(|x| x.abs()).sum())
    } else {
        Ok(singular_values_with(m, tol)?.iter().sum())
    }
}
