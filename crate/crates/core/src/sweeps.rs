//! Parametrized families of two-qutrit Schmidt triples.

use std::f64::consts::FRAC_PI_2;

use crate::error::Result;
use crate::measures;
use crate::states::SchmidtVector;

pub const DEFAULT_STEPS: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepParams {
    Line { x: f64 },
    Sphere { theta: f64, phi: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub params: SweepParams,
    /// Coefficients in parametrization order (not sorted).
    pub k: [f64; 3],
    pub negativity: f64,
    pub concurrence: f64,
}

impl SweepRow {
    fn evaluate(params: SweepParams, k: [f64; 3]) -> Result<Self> {
        let sv = SchmidtVector::new(k.to_vec())?;
        Ok(SweepRow {
            params,
            k,
            negativity: measures::negativity_schmidt(&sv, 3)?,
            concurrence: measures::concurrence_schmidt(&sv)?,
        })
    }

    pub fn schmidt(&self) -> SchmidtVector {
        SchmidtVector::new(self.k.to_vec()).expect("validated when the row was built")
    }
}

/// `steps` evenly spaced points on [0, 1], endpoints exact.
fn grid(steps: usize, hi: f64) -> impl Iterator<Item = f64> {
    let last = (steps - 1) as f64;
    (0..steps).map(move |i| {
        if i + 1 == steps {
            hi
        } else {
            hi * (i as f64 / last)
        }
    })
}

/// `k1 = k2 = sqrt(x/2)`, `k3 = sqrt(1 - x)` for `x` on a closed grid over [0, 1].
///
/// Panics if `steps < 2`.
pub fn sweep_x(steps: usize) -> Result<Vec<SweepRow>> {
    assert!(steps >= 2, "sweep needs at least two grid points");
    grid(steps, 1.0)
        .map(|x| {
            let a = (x / 2.0).sqrt();
            SweepRow::evaluate(SweepParams::Line { x }, [a, a, (1.0 - x).sqrt()])
        })
        .collect()
}

/// `k = (sin t cos p, sin t sin p, cos t)` on a `steps x steps` grid over the
/// first octant; rows ordered theta-major.
///
/// Panics if `steps < 2`.
pub fn sweep_sphere(steps: usize) -> Result<Vec<SweepRow>> {
    assert!(steps >= 2, "sweep needs at least two grid points");
    let mut rows = Vec::with_capacity(steps * steps);
    for theta in grid(steps, FRAC_PI_2) {
        for phi in grid(steps, FRAC_PI_2) {
            let (st, ct) = theta.sin_cos();
            let (sp, cp) = phi.sin_cos();
            let k = [st * cp, st * sp, ct];
            rows.push(SweepRow::evaluate(SweepParams::Sphere { theta, phi }, k)?);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn line_endpoints() {
        let rows = sweep_x(3).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].k, [0.0, 0.0, 1.0]);
        assert_eq!(rows[0].negativity, 0.0);
        assert_eq!(rows[0].concurrence, 0.0);
        assert_eq!(rows[1].params, SweepParams::Line { x: 0.5 });
        let last = &rows[2];
        assert_eq!(last.params, SweepParams::Line { x: 1.0 });
        assert_eq!(last.k[2], 0.0);
        assert_abs_diff_eq!(last.negativity, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(last.concurrence, 3f64.sqrt() / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn line_passes_maximal_point() {
        // x = 2/3 is on the grid when steps - 1 is a multiple of 3.
        let rows = sweep_x(4).unwrap();
        assert_abs_diff_eq!(rows[2].negativity, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rows[2].concurrence, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn sphere_corners() {
        let rows = sweep_sphere(2).unwrap();
        assert_eq!(rows.len(), 4);
        for r in &rows[..2] {
            assert_eq!(r.k, [0.0, 0.0, 1.0]);
            assert_eq!(r.negativity, 0.0);
            assert_eq!(r.concurrence, 0.0);
        }
    }

    #[test]
    #[should_panic]
    fn single_step_panics() {
        let _ = sweep_x(1);
    }
}
