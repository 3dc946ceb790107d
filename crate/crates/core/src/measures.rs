//! Entanglement measures and their cross-checks.
//!
//! Negativity is available on two independent routes: spectrally from the
//! trace norm of the partial transpose (works for mixed states), and in
//! closed form from Schmidt coefficients (pure states only). The two are
//! compared in [`full_report`].

use num_complex::Complex64;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::states::{self, DensityMatrix, PureState, SchmidtVector, Subsystem};

/// Which operator realizes the ladder expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderVariant {
    /// `X|i,i> = |i+1,i+1>` (mod d); expectation `sum_i k_i k_{i+1 mod d}`.
    Cyclic,
    /// Every pair `i < j`; expectation `sum_{i<j} k_i k_j`.
    AllPairs,
}

/// Every measure computed for one pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub dim_a: usize,
    pub dim_b: usize,
    pub schmidt: Vec<f64>,
    /// `(||rho^T_A||_1 - 1) / (d - 1)`, in [0, 1].
    pub negativity: f64,
    /// Unnormalized `(||rho^T_A||_1 - 1) / 2`.
    pub negativity_vidal: f64,
    /// `log2 ||rho^T_A||_1`, in bits.
    pub log_negativity: f64,
    /// Two-qutrit concurrence; `None` unless the Schmidt rank dimension is 3.
    pub concurrence: Option<f64>,
    /// Cyclic ladder operator expectation.
    pub ladder_expectation: f64,
    /// All-pairs ladder operator expectation.
    pub ladder_all_pairs: f64,
    /// Entropy of the reduced state, in bits.
    pub entropy: f64,
    /// Residual of the negativity/concurrence relation; `None` unless d = 3.
    pub relation_residual: Option<f64>,
    pub ppt: bool,
}

impl MeasureReport {
    pub fn min_dim(&self) -> usize {
        self.dim_a.min(self.dim_b)
    }

    /// True when every field sits in its declared range (with `slack`).
    pub fn in_range(&self, slack: f64) -> bool {
        let d = self.min_dim() as f64;
        let unit = |x: f64| x.is_finite() && x >= -slack && x <= 1.0 + slack;
        unit(self.negativity)
            && self.concurrence.is_none_or(unit)
            && self.log_negativity.is_finite()
            && self.log_negativity >= -slack
            && self.log_negativity <= d.log2() + slack
            && self.entropy >= -slack
            && self.entropy <= d.log2() + slack
            && self.ladder_expectation.is_finite()
            && self.ladder_all_pairs.is_finite()
            && self.relation_residual.is_none_or(f64::is_finite)
            && self
                .concurrence
                .is_none_or(|c| self.negativity <= c + slack)
    }
}

fn pt_trace_norm(r: &DensityMatrix, tol: &Tolerances) -> Result<f64> {
    linalg::trace_norm_with(&states::partial_transpose(r, Subsystem::A), tol)
}

fn clamp_small_negative(x: f64, clamp: f64) -> f64 {
    if x < 0.0 && x > -clamp {
        0.0
    } else {
        x
    }
}

/// `(||rho^T_A||_1 - 1) / (d - 1)` with `d = min(d_A, d_B)`.
pub fn negativity_spectral(r: &DensityMatrix) -> Result<f64> {
    negativity_spectral_with(r, &Tolerances::default())
}

pub fn negativity_spectral_with(r: &DensityMatrix, tol: &Tolerances) -> Result<f64> {
    let d = r.min_dim();
    if d < 2 {
        return Err(Error::DegenerateDimension);
    }
    let tn = pt_trace_norm(r, tol)?;
    Ok(clamp_small_negative(
        (tn - 1.0) / (d - 1) as f64,
        tol.negativity_clamp,
    ))
}

/// `(||rho^T_A||_1 - 1) / 2`, the absolute sum of negative PT eigenvalues.
pub fn negativity_vidal(r: &DensityMatrix) -> Result<f64> {
    let tol = Tolerances::default();
    let tn = pt_trace_norm(r, &tol)?;
    Ok(clamp_small_negative((tn - 1.0) / 2.0, tol.negativity_clamp))
}

fn pair_sum(k: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..k.len() {
        for j in i + 1..k.len() {
            acc += k[i] * k[j];
        }
    }
    acc
}

/// `2 sum_{i<j} k_i k_j / (d - 1)`; at d = 3 this is `k1 k2 + k2 k3 + k3 k1`.
pub fn negativity_schmidt(k: &SchmidtVector, d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::DegenerateDimension);
    }
    if k.len() != d {
        return Err(Error::WrongDimension {
            expected: d,
            got: k.len(),
        });
    }
    Ok(2.0 * pair_sum(k.coefficients()) / (d - 1) as f64)
}

pub fn log_negativity(r: &DensityMatrix) -> Result<f64> {
    Ok(pt_trace_norm(r, &Tolerances::default())?.log2())
}

pub fn ladder_expectation(k: &SchmidtVector, variant: LadderVariant) -> Result<f64> {
    let k = k.coefficients();
    let d = k.len();
    if d < 2 {
        return Err(Error::DegenerateDimension);
    }
    Ok(match variant {
        LadderVariant::Cyclic => (0..d).map(|i| k[i] * k[(i + 1) % d]).sum(),
        LadderVariant::AllPairs => pair_sum(k),
    })
}

/// Ladder operator on the `d x d` composite space (`d^2 x d^2`).
///
/// Cyclic: `|i,i> -> |i+1,i+1>` (mod d), every `|i,j>` with `i != j` is
/// annihilated. All-pairs: `(sum_{i<j} |jj><ii| + h.c.) / 2`.
pub fn ladder_matrix(d: usize, variant: LadderVariant) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::DegenerateDimension);
    }
    let diag = |i: usize| i * d + i;
    let mut x = ComplexMatrix::zeros(d * d, d * d);
    match variant {
        LadderVariant::Cyclic => {
            for i in 0..d {
                x[(diag((i + 1) % d), diag(i))] += Complex64::new(1.0, 0.0);
            }
        }
        LadderVariant::AllPairs => {
            for i in 0..d {
                for j in i + 1..d {
                    x[(diag(j), diag(i))] += Complex64::new(0.5, 0.0);
                    x[(diag(i), diag(j))] += Complex64::new(0.5, 0.0);
                }
            }
        }
    }
    Ok(x)
}

/// `sqrt(3 (k1^2 k2^2 + k2^2 k3^2 + k3^2 k1^2))` for two qutrits.
pub fn concurrence_schmidt(k: &SchmidtVector) -> Result<f64> {
    let k = three(k)?;
    let sq = [k[0] * k[0], k[1] * k[1], k[2] * k[2]];
    Ok((3.0 * (sq[0] * sq[1] + sq[1] * sq[2] + sq[2] * sq[0])).sqrt())
}

/// Concurrence from the purity of the reduced state:
/// `sqrt((3/2)(1 - tr rho_A^2))`, no Schmidt decomposition involved.
pub fn concurrence_purity(s: &PureState) -> Result<f64> {
    if s.dim_a() != 3 || s.dim_b() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            got: s.dim_a().min(s.dim_b()),
        });
    }
    let rho_a = states::reduced_density(s, Subsystem::A)?;
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    let purity: f64 = rho_a.as_slice().iter().map(|z| z.norm_sqr()).sum();
    Ok((1.5 * (1.0 - purity)).max(0.0).sqrt())
}

/// `-sum k_i^2 log2 k_i^2`, with `0 log 0 = 0`.
pub fn entanglement_entropy(k: &SchmidtVector) -> f64 {
    let h: f64 = k
        .coefficients()
        .iter()
        .map(|&x| x * x)
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum();
    h.max(0.0)
}

/// `N^2 - C^2/3 - 2 k1 k2 k3 sqrt(1 + 2N)`; vanishes for every valid triple.
pub fn relation_residual(k: &SchmidtVector) -> Result<f64> {
    let kk = three(k)?;
    let n = negativity_schmidt(k, 3)?;
    let c = concurrence_schmidt(k)?;
    Ok(n * n - c * c / 3.0 - 2.0 * kk[0] * kk[1] * kk[2] * (1.0 + 2.0 * n).sqrt())
}

fn three(k: &SchmidtVector) -> Result<[f64; 3]> {
    k.coefficients()
        .try_into()
        .map_err(|_| Error::WrongDimension {
            expected: 3,
            got: k.len(),
        })
}

/// Peres test: every eigenvalue of `rho^T_A` is at least `-1e-9`.
pub fn is_ppt(r: &DensityMatrix) -> Result<bool> {
    is_ppt_with(r, &Tolerances::default())
}

pub fn is_ppt_with(r: &DensityMatrix, tol: &Tolerances) -> Result<bool> {
    let pt = states::partial_transpose(r, Subsystem::A);
    let ev = linalg::eigh(&pt, tol)?.values;
    Ok(ev[0] >= -tol.ppt)
}

pub fn full_report(s: &PureState) -> Result<MeasureReport> {
    full_report_with(s, &Tolerances::default())
}

/// All measures for one pure state. Negativity comes from the spectral
/// route; a disagreement with the Schmidt route beyond `tol.consistency`
/// is an [`Error::InternalInconsistency`].
pub fn full_report_with(s: &PureState, tol: &Tolerances) -> Result<MeasureReport> {
    let d = s.dim_a().min(s.dim_b());
    if d < 2 {
        return Err(Error::DegenerateDimension);
    }
    let rho = states::density_from_pure(s)?;
    let k = states::schmidt_decompose(s)?;

    let negativity = negativity_spectral_with(&rho, tol)?;
    let schmidt_n = negativity_schmidt(&k, d)?;
    if (negativity - schmidt_n).abs() > tol.consistency {
        return Err(Error::InternalInconsistency {
            spectral: negativity,
            schmidt: schmidt_n,
        });
    }

    let (concurrence, relation) = if k.len() == 3 {
        (Some(concurrence_schmidt(&k)?), Some(relation_residual(&k)?))
    } else {
        (None, None)
    };

    Ok(MeasureReport {
        dim_a: s.dim_a(),
        dim_b: s.dim_b(),
        schmidt: k.coefficients().to_vec(),
        negativity,
        negativity_vidal: negativity_vidal(&rho)?,
        log_negativity: log_negativity(&rho)?,
        concurrence,
        ladder_expectation: ladder_expectation(&k, LadderVariant::Cyclic)?,
        ladder_all_pairs: ladder_expectation(&k, LadderVariant::AllPairs)?,
        entropy: entanglement_entropy(&k),
        relation_residual: relation,
        ppt: is_ppt_with(&rho, tol)?,
    })
}
