//! Numerical tolerances shared by every module.

/// All thresholds in one place so callers can tighten or loosen them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max |M[i][j] - conj(M[j][i])| accepted as Hermitian.
    pub hermitian: f64,
    /// Jacobi stops once the off-diagonal Frobenius norm is below this times ||M||_F.
    pub jacobi_offdiag: f64,
    /// Jacobi sweep cap.
    pub max_sweeps: usize,
    /// Unit-norm / unit-trace / unit Schmidt sum-of-squares.
    pub normalization: f64,
    /// Smallest eigenvalue allowed for a density matrix.
    pub psd: f64,
    /// Smallest partial-transpose eigenvalue still counted as PPT.
    pub ppt: f64,
    /// Spectral negativity in (-clamp, 0) is reported as 0.
    pub negativity_clamp: f64,
    /// Spectral vs Schmidt negativity disagreement that signals a bug.
    pub consistency: f64,
    /// Deviation allowed in the randomized property suites.
    pub property: f64,
    /// Inline Schmidt input is renormalized when sum k^2 is within this of 1.
    pub schmidt_input: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            hermitian: 1e-10,
            jacobi_offdiag: 1e-12,
            max_sweeps: 100,
            normalization: 1e-9,
            psd: 1e-9,
            ppt: 1e-9,
            negativity_clamp: 1e-12,
            consistency: 1e-6,
            property: 1e-9,
            schmidt_input: 1e-6,
        }
    }
}

impl Tolerances {
    /// `key=value` pairs, stable order, for embedding in tool output.
    pub fn describe(&self) -> String {
        format!(
            "hermitian={:e} jacobi_offdiag={:e} max_sweeps={} normalization={:e} psd={:e} \
             ppt={:e} negativity_clamp={:e} consistency={:e} property={:e} schmidt_input={:e}",
            self.hermitian,
            self.jacobi_offdiag,
            self.max_sweeps,
            self.normalization,
            self.psd,
            self.ppt,
            self.negativity_clamp,
            self.consistency,
            self.property,
            self.schmidt_input
        )
    }
}
