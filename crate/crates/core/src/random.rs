//! Seeded random states and unitaries for property checks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::ComplexMatrix;
use crate::states::{PureState, SchmidtVector};

/// Generator for sample `index` of a run seeded with `seed`. Each index gets
/// its own ChaCha stream, so samples can be regenerated individually.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Unitarily invariant random pure state: i.i.d. complex Gaussian
/// amplitudes, normalized.
pub fn random_pure_state<R: Rng + ?Sized>(rng: &mut R, dim_a: usize, dim_b: usize) -> PureState {
    loop {
        let amps = (0..dim_a * dim_b).map(|_| complex_gaussian(rng)).collect();
        let s = PureState::new(dim_a, dim_b, amps).expect("dimensions are positive");
        if let Ok(n) = s.normalize() {
            return n;
        }
    }
}

/// Haar-random unitary: Gram-Schmidt on the columns of a complex Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| complex_gaussian(rng));
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut v = g.column(j);
        // Two passes keep the basis orthonormal to round-off.
        for _ in 0..2 {
            for q in &cols {
                let overlap: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= overlap * qi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for vi in &mut v {
            *vi /= norm;
        }
        cols.push(v);
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Uniform point on the positive octant of the unit 2-sphere.
pub fn random_schmidt_triple<R: Rng + ?Sized>(rng: &mut R) -> SchmidtVector {
    loop {
        let k: Vec<f64> = (0..3)
            .map(|_| rng.sample::<f64, _>(StandardNormal).abs())
            .collect();
        let n = k.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return SchmidtVector::new(k.into_iter().map(|x| x / n).collect())
                .expect("normalized by construction");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = sample_rng(3, 0);
        for d in 1..=4 {
            let u = random_unitary(&mut rng, d);
            let prod = &u.adjoint() * &u;
            assert!(prod.max_abs_diff(&ComplexMatrix::identity(d)).unwrap() < 1e-12);
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = random_pure_state(&mut sample_rng(42, 5), 3, 3);
        let b = random_pure_state(&mut sample_rng(42, 5), 3, 3);
        let c = random_pure_state(&mut sample_rng(42, 6), 3, 3);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.is_normalized(1e-12));
    }

    #[test]
    fn schmidt_triples_are_valid() {
        let mut rng = sample_rng(1, 0);
        for _ in 0..100 {
            let k = random_schmidt_triple(&mut rng);
            assert_eq!(k.len(), 3);
            assert!(k.coefficients().iter().all(|&x| x >= 0.0));
        }
    }
}
