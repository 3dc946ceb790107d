//! Bipartite states: pure amplitudes, Schmidt coefficients, density matrices
//! and the structural maps between them (partial transpose, reduction).

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Pure state of a `dim_a x dim_b` system; amplitude of `|i, j>` at `i * dim_b + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dim_a: usize,
    dim_b: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Stores the amplitudes as given; call [`PureState::normalize`] before
    /// handing an arbitrary vector to the measures.
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::DimensionMismatch(format!(
                "subsystem dimensions must be positive, got {dim_a}x{dim_b}"
            )));
        }
        if amplitudes.len() != dim_a * dim_b {
            return Err(Error::ShapeMismatch {
                rows: dim_a,
                cols: dim_b,
                got: amplitudes.len(),
            });
        }
        Ok(PureState {
            dim_a,
            dim_b,
            amplitudes,
        })
    }

    /// The product state `|0, 0>`.
    pub fn product_zero(dim_a: usize, dim_b: usize) -> Result<Self> {
        let mut amps = vec![Complex64::new(0.0, 0.0); dim_a * dim_b];
        if let Some(first) = amps.first_mut() {
            *first = Complex64::new(1.0, 0.0);
        }
        Self::new(dim_a, dim_b, amps)
    }

    /// `sum_i k_i |i, i>` on a `d x d` system, `d = k.len()`.
    pub fn from_schmidt(k: &SchmidtVector) -> Self {
        let d = k.len();
        let mut amps = vec![Complex64::new(0.0, 0.0); d * d];
        for (i, &ki) in k.coefficients().iter().enumerate() {
            amps[i * d + i] = Complex64::new(ki, 0.0);
        }
        PureState {
            dim_a: d,
            dim_b: d,
            amplitudes: amps,
        }
    }

    /// `(1/sqrt d) sum_i |i, i>`.
    pub fn maximally_entangled(d: usize) -> Result<Self> {
        let k = SchmidtVector::new(vec![1.0 / (d as f64).sqrt(); d])?;
        Ok(Self::from_schmidt(&k))
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amplitudes[i * self.dim_b + j]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn normalize(&self) -> Result<PureState> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 || !n2.is_finite() {
            return Err(Error::ZeroState);
        }
        let inv = 1.0 / n2.sqrt();
        Ok(PureState {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            amplitudes: self.amplitudes.iter().map(|z| z * inv).collect(),
        })
    }

    /// Amplitudes as the `dim_a x dim_b` coefficient matrix.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::new(self.dim_a, self.dim_b, self.amplitudes.clone())
            .expect("shape checked at construction")
    }

    /// `(U_A ⊗ U_B)|psi>`, i.e. coefficients `U_A C U_B^T`.
    pub fn apply_local(&self, u_a: &ComplexMatrix, u_b: &ComplexMatrix) -> Result<PureState> {
        if u_a.rows() != self.dim_a
            || u_a.cols() != self.dim_a
            || u_b.rows() != self.dim_b
            || u_b.cols() != self.dim_b
        {
            return Err(Error::DimensionMismatch(format!(
                "local operators {}x{} and {}x{} on a {}x{} state",
                u_a.rows(),
                u_a.cols(),
                u_b.rows(),
                u_b.cols(),
                self.dim_a,
                self.dim_b
            )));
        }
        let c = &(u_a * &self.coefficient_matrix()) * &u_b.transpose();
        PureState::new(self.dim_a, self.dim_b, c.as_slice().to_vec())
    }

    fn require_normalized(&self, tol: f64) -> Result<()> {
        if self.is_normalized(tol) {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                norm_sqr: self.norm_sqr(),
            })
        }
    }

    /// Parse the text amplitude format: a `dims,d_A,d_B` header followed by
    /// `i,j,re,im` lines (0-based). Unlisted amplitudes are zero; blank lines
    /// and `#` comments are ignored. The result is normalized.
    pub fn parse_amplitudes(text: &str) -> Result<PureState> {
        let mut dims: Option<(usize, usize)> = None;
        let mut amps: Vec<Option<Complex64>> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            match dims {
                None => {
                    if fields.len() != 3 || fields[0] != "dims" {
                        return Err(err(format!("expected header `dims,d_A,d_B`, got `{line}`")));
                    }
                    let da = parse_dim(fields[1]).map_err(&err)?;
                    let db = parse_dim(fields[2]).map_err(&err)?;
                    dims = Some((da, db));
                    amps = vec![None; da * db];
                }
                Some((da, db)) => {
                    if fields.len() != 4 {
                        return Err(err(format!("expected `i,j,re,im`, got `{line}`")));
                    }
                    let i: usize = fields[0]
                        .parse()
                        .map_err(|_| err(format!("bad index `{}`", fields[0])))?;
                    let j: usize = fields[1]
                        .parse()
                        .map_err(|_| err(format!("bad index `{}`", fields[1])))?;
                    if i >= da || j >= db {
                        return Err(err(format!("index ({i},{j}) outside {da}x{db}")));
                    }
                    let re = parse_real(fields[2]).map_err(&err)?;
                    let im = parse_real(fields[3]).map_err(&err)?;
                    let slot = &mut amps[i * db + j];
                    if slot.is_some() {
                        return Err(err(format!("duplicate amplitude for ({i},{j})")));
                    }
                    *slot = Some(Complex64::new(re, im));
                }
            }
        }

        let (da, db) = dims.ok_or(Error::Parse {
            line: 0,
            message: "missing `dims` header".into(),
        })?;
        let amps = amps
            .into_iter()
            .map(|a| a.unwrap_or(Complex64::new(0.0, 0.0)))
            .collect();
        PureState::new(da, db, amps)?.normalize()
    }

    /// Inverse of [`PureState::parse_amplitudes`]; zero amplitudes are omitted.
    pub fn to_amplitude_text(&self) -> String {
        let mut out = format!("dims,{},{}\n", self.dim_a, self.dim_b);
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                let z = self.amplitude(i, j);
                if z.re != 0.0 || z.im != 0.0 {
                    // `{:?}` on f64 prints the shortest round-trip representation.
                    let _ = writeln!(out, "{i},{j},{:?},{:?}", z.re, z.im);
                }
            }
        }
        out
    }
}

fn parse_dim(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("bad dimension `{s}`")),
        Ok(d) => Ok(d),
    }
}

fn parse_real(s: &str) -> std::result::Result<f64, String> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| format!("bad number `{s}`"))
}

/// Non-negative Schmidt coefficients, sorted descending, with unit sum of squares.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtVector {
    k: Vec<f64>,
}

impl SchmidtVector {
    /// Validates and sorts descending. Sum of squares must be 1 within 1e-9.
    pub fn new(k: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(k, Tolerances::default().normalization)
    }

    pub fn with_tolerance(mut k: Vec<f64>, tol: f64) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::InvalidSchmidt("empty coefficient list".into()));
        }
        if let Some(bad) = k.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::InvalidSchmidt(format!(
                "coefficient {bad} is not a finite non-negative number"
            )));
        }
        let sum_sq: f64 = k.iter().map(|x| x * x).sum();
        if (sum_sq - 1.0).abs() > tol {
            return Err(Error::InvalidSchmidt(format!(
                "sum of squares is {sum_sq}, expected 1"
            )));
        }
        k.sort_by(|a, b| b.total_cmp(a));
        Ok(SchmidtVector { k })
    }

    /// Accepts user-supplied coefficients whose sum of squares is within
    /// `tol` of 1 and rescales them onto the unit sphere.
    pub fn normalized_from(k: Vec<f64>, tol: f64) -> Result<Self> {
        let sum_sq: f64 = k.iter().map(|x| x * x).sum();
        if !sum_sq.is_finite() || (sum_sq - 1.0).abs() > tol {
            return Err(Error::InvalidSchmidt(format!(
                "sum of squares is {sum_sq}, which is not within {tol:e} of 1"
            )));
        }
        let inv = 1.0 / sum_sq.sqrt();
        Self::new(k.into_iter().map(|x| x * inv).collect())
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.k
    }

    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }
}

/// Hermitian, unit-trace, positive-semidefinite operator on `dim_a x dim_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim_a: usize,
    dim_b: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(dim_a: usize, dim_b: usize, matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerances(dim_a, dim_b, matrix, &Tolerances::default())
    }

    pub fn with_tolerances(
        dim_a: usize,
        dim_b: usize,
        matrix: ComplexMatrix,
        tol: &Tolerances,
    ) -> Result<Self> {
        let n = dim_a * dim_b;
        if n == 0 || matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a {dim_a}x{dim_b} system",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let asym = matrix.hermitian_asymmetry().unwrap_or(f64::INFINITY);
        if asym > tol.hermitian {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (asymmetry {asym:e})"
            )));
        }
        let tr = matrix.trace().re;
        if (tr - 1.0).abs() > tol.normalization {
            return Err(Error::InvalidDensity(format!("trace is {tr}")));
        }
        let min = linalg::eigh(&matrix, tol)?.values[0];
        if min < -tol.psd {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min}")));
        }
        Ok(DensityMatrix {
            dim_a,
            dim_b,
            matrix,
        })
    }

    /// `rho_A ⊗ rho_B`.
    pub fn product(a: &DensityMatrix, b: &DensityMatrix) -> Result<Self> {
        Self::new(
            a.dim_a * a.dim_b,
            b.dim_a * b.dim_b,
            a.matrix.kron(&b.matrix),
        )
    }

    /// `I / (dim_a dim_b)`.
    pub fn maximally_mixed(dim_a: usize, dim_b: usize) -> Result<Self> {
        let n = dim_a * dim_b;
        Self::new(
            dim_a,
            dim_b,
            ComplexMatrix::identity(n).scale(Complex64::new(1.0 / n as f64, 0.0)),
        )
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// `min(dim_a, dim_b)`.
    pub fn min_dim(&self) -> usize {
        self.dim_a.min(self.dim_b)
    }
}

/// Schmidt coefficients: singular values of the coefficient matrix, descending.
pub fn schmidt_decompose(s: &PureState) -> Result<SchmidtVector> {
    let tol = Tolerances::default();
    s.require_normalized(tol.normalization)?;
    let k = linalg::singular_values_with(&s.coefficient_matrix(), &tol)?;
    SchmidtVector::new(k)
}

pub fn density_from_pure(s: &PureState) -> Result<DensityMatrix> {
    s.require_normalized(Tolerances::default().normalization)?;
    let a = s.amplitudes();
    let n = a.len();
    let matrix = ComplexMatrix::from_fn(n, n, |r, c| a[r] * a[c].conj());
    Ok(DensityMatrix {
        dim_a: s.dim_a,
        dim_b: s.dim_b,
        matrix,
    })
}

/// Partial transpose of a density matrix on the chosen subsystem.
pub fn partial_transpose(r: &DensityMatrix, subsystem: Subsystem) -> ComplexMatrix {
    partial_transpose_matrix(&r.matrix, r.dim_a, r.dim_b, subsystem)
        .expect("density matrix shape checked at construction")
}

/// Partial transpose of any `(d_A d_B)`-square operator. Pure index
/// permutation: for A, `out[(i,j),(k,l)] = in[(k,j),(i,l)]`; for B,
/// `out[(i,j),(k,l)] = in[(i,l),(k,j)]`.
pub fn partial_transpose_matrix(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    subsystem: Subsystem,
) -> Result<ComplexMatrix> {
    let n = dim_a * dim_b;
    if n == 0 || m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator for a {dim_a}x{dim_b} system",
            m.rows(),
            m.cols()
        )));
    }
    Ok(ComplexMatrix::from_fn(n, n, |row, col| {
        let (i, j) = (row / dim_b, row % dim_b);
        let (k, l) = (col / dim_b, col % dim_b);
        match subsystem {
            Subsystem::A => m[(k * dim_b + j, i * dim_b + l)],
            Subsystem::B => m[(i * dim_b + l, k * dim_b + j)],
        }
    }))
}

/// Reduced density matrix of `s` on `keep`, tracing out the other party.
pub fn reduced_density(s: &PureState, keep: Subsystem) -> Result<ComplexMatrix> {
    s.require_normalized(Tolerances::default().normalization)?;
    let (da, db) = (s.dim_a, s.dim_b);
    Ok(match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, da, |i, k| {
            (0..db)
                .map(|j| s.amplitude(i, j) * s.amplitude(k, j).conj())
                .sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, db, |j, l| {
            (0..da)
                .map(|i| s.amplitude(i, j) * s.amplitude(i, l).conj())
                .sum()
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn bell_2x2() -> PureState {
        let h = 1.0 / 2f64.sqrt();
        PureState::new(2, 2, vec![re(h), re(0.0), re(0.0), re(h)]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let mut amps = vec![re(0.0); 9];
        amps[0] = re(2.0);
        let s = PureState::new(3, 3, amps).unwrap().normalize().unwrap();
        assert_eq!(s.amplitude(0, 0), re(1.0));

        let again = s.normalize().unwrap();
        for (a, b) in again.amplitudes().iter().zip(s.amplitudes()) {
            assert!((a - b).norm() <= 1e-12);
        }

        let mut diag = vec![re(0.0); 9];
        for i in 0..3 {
            diag[i * 3 + i] = re(1.0);
        }
        let s = PureState::new(3, 3, diag).unwrap().normalize().unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(s.amplitude(i, i).re, 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        }
    }

    #[test]
    fn normalize_rejects_zero_state() {
        let s = PureState::new(3, 3, vec![re(0.0); 9]).unwrap();
        assert_eq!(s.normalize(), Err(Error::ZeroState));
    }

    #[test]
    fn construction_errors() {
        assert!(PureState::new(0, 3, vec![]).is_err());
        assert!(matches!(
            PureState::new(2, 2, vec![re(1.0)]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(SchmidtVector::new(vec![]).is_err());
        assert!(SchmidtVector::new(vec![-0.1, 1.0]).is_err());
        assert!(SchmidtVector::new(vec![0.5, 0.5]).is_err());
    }

    #[test]
    fn schmidt_of_product_and_maximally_entangled() {
        let k = schmidt_decompose(&PureState::product_zero(3, 3).unwrap()).unwrap();
        assert_eq!(k.coefficients(), &[1.0, 0.0, 0.0]);

        let k = schmidt_decompose(&PureState::maximally_entangled(3).unwrap()).unwrap();
        for &x in k.coefficients() {
            assert_abs_diff_eq!(x, 1.0 / 3f64.sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn schmidt_requires_normalized_input() {
        let s = PureState::new(2, 2, vec![re(1.0), re(1.0), re(0.0), re(0.0)]).unwrap();
        assert!(matches!(
            schmidt_decompose(&s),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn schmidt_vector_sorts_descending() {
        let k = SchmidtVector::new(vec![0.0, 0.6, 0.8]).unwrap();
        assert_eq!(k.coefficients(), &[0.8, 0.6, 0.0]);
    }

    #[test]
    fn inline_normalization_window() {
        let k = SchmidtVector::normalized_from(vec![0.577350269, 0.577350269, 0.577350269], 1e-6)
            .unwrap();
        let s: f64 = k.coefficients().iter().map(|x| x * x).sum();
        assert_abs_diff_eq!(s, 1.0, epsilon = 1e-15);
        assert!(SchmidtVector::normalized_from(vec![0.5, 0.5, 0.5], 1e-6).is_err());
    }

    #[test]
    fn density_from_pure_examples() {
        let rho = density_from_pure(&PureState::product_zero(3, 3).unwrap()).unwrap();
        assert_eq!(rho.matrix()[(0, 0)], re(1.0));
        assert_eq!(rho.matrix().frobenius_norm(), 1.0);

        // (|00> + |11>)/sqrt2 inside a 3x3 system: composite indices 0 and 4.
        let h = 1.0 / 2f64.sqrt();
        let mut amps = vec![re(0.0); 9];
        amps[0] = re(h);
        amps[4] = re(h);
        let rho = density_from_pure(&PureState::new(3, 3, amps).unwrap()).unwrap();
        for &(r, c) in &[(0, 0), (0, 4), (4, 0), (4, 4)] {
            assert_abs_diff_eq!(rho.matrix()[(r, c)].re, 0.5, epsilon = 1e-15);
        }
        let nonzero = rho
            .matrix()
            .as_slice()
            .iter()
            .filter(|z| z.norm() > 0.0)
            .count();
        assert_eq!(nonzero, 4);

        let ev = linalg::hermitian_eigenvalues(rho.matrix(), 1e-10).unwrap();
        assert_abs_diff_eq!(ev[8], 1.0, epsilon = 1e-12);
        for &x in &ev[..8] {
            assert_abs_diff_eq!(x, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn density_validation() {
        let bad_trace = ComplexMatrix::from_real_diag(&[0.5, 0.6, 0.0, 0.0]);
        assert!(matches!(
            DensityMatrix::new(2, 2, bad_trace),
            Err(Error::InvalidDensity(_))
        ));
        let not_psd = ComplexMatrix::from_real_diag(&[1.5, -0.5, 0.0, 0.0]);
        assert!(matches!(
            DensityMatrix::new(2, 2, not_psd),
            Err(Error::InvalidDensity(_))
        ));
        assert!(matches!(
            DensityMatrix::new(2, 3, ComplexMatrix::identity(4)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn partial_transpose_of_product_state() {
        let sa = ComplexMatrix::new(
            2,
            2,
            vec![
                re(0.7),
                Complex64::new(0.1, 0.2),
                Complex64::new(0.1, -0.2),
                re(0.3),
            ],
        )
        .unwrap();
        let sb = ComplexMatrix::from_real_diag(&[0.2, 0.5, 0.3]);
        let a = DensityMatrix::new(1, 2, sa.clone()).unwrap();
        let b = DensityMatrix::new(3, 1, sb.clone()).unwrap();
        let rho = DensityMatrix::new(2, 3, sa.kron(&sb)).unwrap();
        let _ = DensityMatrix::product(&a, &b).unwrap();
        let pt = partial_transpose(&rho, Subsystem::A);
        let expected = sa.transpose().kron(&sb);
        assert_eq!(pt.max_abs_diff(&expected), Some(0.0));
        let ev = linalg::hermitian_eigenvalues(&pt, 1e-10).unwrap();
        assert!(ev[0] >= -1e-12);
        assert_abs_diff_eq!(linalg::trace_norm(&pt).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn partial_transpose_of_bell_state() {
        let rho = density_from_pure(&bell_2x2()).unwrap();
        let pt = partial_transpose(&rho, Subsystem::A);
        let ev = linalg::hermitian_eigenvalues(&pt, 1e-10).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (x, e) in ev.iter().zip(expected) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn partial_transpose_of_maximally_entangled_qutrits() {
        let rho = density_from_pure(&PureState::maximally_entangled(3).unwrap()).unwrap();
        let pt = partial_transpose(&rho, Subsystem::A);
        let ev = linalg::hermitian_eigenvalues(&pt, 1e-10).unwrap();
        let third = 1.0 / 3.0;
        for (idx, x) in ev.iter().enumerate() {
            let e = if idx < 3 { -third } else { third };
            assert_abs_diff_eq!(*x, e, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(linalg::trace_norm(&pt).unwrap(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn partial_transpose_dimension_mismatch() {
        assert!(matches!(
            partial_transpose_matrix(&ComplexMatrix::identity(5), 2, 2, Subsystem::A),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn reduced_density_examples() {
        let r = reduced_density(&PureState::product_zero(3, 3).unwrap(), Subsystem::A).unwrap();
        assert_eq!(r, ComplexMatrix::from_real_diag(&[1.0, 0.0, 0.0]));

        let s = PureState::maximally_entangled(3).unwrap();
        for sub in [Subsystem::A, Subsystem::B] {
            let r = reduced_density(&s, sub).unwrap();
            let third = ComplexMatrix::identity(3).scale(re(1.0 / 3.0));
            assert!(r.max_abs_diff(&third).unwrap() <= 1e-15);
        }
    }

    #[test]
    fn reduced_density_of_rectangular_state() {
        // (|0,1> + |1,2>)/sqrt2 on 2x3.
        let h = 1.0 / 2f64.sqrt();
        let mut amps = vec![re(0.0); 6];
        amps[1] = re(h);
        amps[5] = re(h);
        let s = PureState::new(2, 3, amps).unwrap();
        let ra = reduced_density(&s, Subsystem::A).unwrap();
        let rb = reduced_density(&s, Subsystem::B).unwrap();
        assert_eq!(ra.rows(), 2);
        assert_eq!(rb.rows(), 3);
        assert_abs_diff_eq!(ra[(0, 0)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rb[(0, 0)].re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rb[(2, 2)].re, 0.5, epsilon = 1e-15);
        let k = schmidt_decompose(&s).unwrap();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn amplitude_file_parsing() {
        let text = "dims,2,2\n0,0,1,0\n# comment\n\n1,1,1.0,0\n";
        let s = PureState::parse_amplitudes(text).unwrap();
        assert_eq!((s.dim_a(), s.dim_b()), (2, 2));
        for (a, b) in s.amplitudes().iter().zip(bell_2x2().amplitudes()) {
            assert!((a - b).norm() <= 1e-15);
        }
    }

    #[test]
    fn amplitude_file_errors() {
        let cases = [
            ("", 0),
            ("0,0,1,0\n", 1),
            ("dims,0,3\n", 1),
            ("dims,2,2\n0,0,1\n", 2),
            ("dims,2,2\n2,0,1,0\n", 2),
            ("dims,2,2\n0,0,x,0\n", 2),
            ("dims,2,2\n0,0,1,0\n0,0,1,0\n", 3),
            ("dims,2,2\n0,0,NaN,0\n", 2),
        ];
        for (text, line) in cases {
            match PureState::parse_amplitudes(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(
            PureState::parse_amplitudes("dims,2,2\n0,0,0,0\n"),
            Err(Error::ZeroState)
        );
    }
}
