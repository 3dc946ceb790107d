//! Randomized property suites over seeded two-qutrit states.
//!
//! Sample `i` of a run draws everything it needs from
//! [`random::sample_rng(seed, i)`](crate::random::sample_rng), so a failure
//! can be replayed from its `(seed, index)` pair alone.

use crate::config::Tolerances;
use crate::error::Result;
use crate::measures::{self, LadderVariant};
use crate::random;
use crate::states::{self, PureState, SchmidtVector};
use crate::sweeps;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_deviation: f64,
    /// Index of the first case whose deviation exceeded the tolerance.
    pub first_failure: Option<usize>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            max_deviation: 0.0,
            first_failure: None,
        }
    }

    fn record(&mut self, index: usize, deviation: f64, tol: f64) {
        self.cases += 1;
        if deviation > self.max_deviation || deviation.is_nan() {
            self.max_deviation = deviation;
        }
        let within = deviation.is_finite() && deviation <= tol;
        if !within && self.first_failure.is_none() {
            self.first_failure = Some(index);
        }
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckSummary {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub suites: Vec<SuiteResult>,
    /// d = 4 uniform Schmidt vector: (cyclic, all-pairs) ladder expectations.
    pub ladder_d4: (f64, f64),
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// `(cyclic, all_pairs)` ladder expectation for `k = (1/2, 1/2, 1/2, 1/2)`;
/// the two operators disagree once d exceeds 3.
pub fn ladder_divergence_d4() -> (f64, f64) {
    let k = SchmidtVector::new(vec![0.5; 4]).expect("unit vector");
    (
        measures::ladder_expectation(&k, LadderVariant::Cyclic).expect("d >= 2"),
        measures::ladder_expectation(&k, LadderVariant::AllPairs).expect("d >= 2"),
    )
}

/// Draws the random state and Schmidt triple for sample `index`.
pub fn sample(seed: u64, index: usize) -> (PureState, SchmidtVector) {
    let mut rng = random::sample_rng(seed, index as u64);
    let state = random::random_pure_state(&mut rng, 3, 3);
    let triple = random::random_schmidt_triple(&mut rng);
    (state, triple)
}

/// Runs every suite. `tol.property` bounds each per-case deviation.
pub fn run_checks(samples: usize, seed: u64, tol: &Tolerances) -> Result<CheckSummary> {
    let t = tol.property;
    let mut oracle = SuiteResult::new("oracle_equivalence");
    let mut relation = SuiteResult::new("relation_identity");
    let mut c_ge_n = SuiteResult::new("concurrence_bounds_negativity");
    let mut en_ge_s = SuiteResult::new("log_negativity_bounds_entropy");
    let mut fig1 = SuiteResult::new("line_family_ordering");
    let mut en_eq = SuiteResult::new("log_negativity_equals_entropy_at_max");

    for i in 0..samples {
        let (state, triple) = sample(seed, i);
        let rho = states::density_from_pure(&state)?;
        let k = states::schmidt_decompose(&state)?;

        let spectral = measures::negativity_spectral_with(&rho, tol)?;
        let schmidt = measures::negativity_schmidt(&k, 3)?;
        oracle.record(i, (spectral - schmidt).abs(), t);

        relation.record(i, measures::relation_residual(&triple)?.abs(), t);

        let c = measures::concurrence_schmidt(&k)?;
        c_ge_n.record(i, (spectral - c).max(0.0), t);

        let en = measures::log_negativity(&rho)?;
        let entropy = measures::entanglement_entropy(&k);
        en_ge_s.record(i, (entropy - en).max(0.0), t);
    }

    for (i, row) in sweeps::sweep_x(sweeps::DEFAULT_STEPS)?.iter().enumerate() {
        fig1.record(i, (row.negativity - row.concurrence).max(0.0), t);
    }

    let max = states::density_from_pure(&PureState::maximally_entangled(3)?)?;
    let max_k = SchmidtVector::new(vec![1.0 / 3f64.sqrt(); 3])?;
    en_eq.record(
        0,
        (measures::log_negativity(&max)? - measures::entanglement_entropy(&max_k)).abs(),
        t,
    );

    Ok(CheckSummary {
        seed,
        samples,
        tolerance: t,
        suites: vec![oracle, relation, c_ge_n, en_ge_s, fig1, en_eq],
        ladder_d4: ladder_divergence_d4(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let s = run_checks(20, 7, &Tolerances::default()).unwrap();
        assert!(s.passed(), "{s:?}");
        assert_eq!(s.suites[0].cases, 20);
        assert_eq!(s.ladder_d4, (1.0, 1.5));
    }

    #[test]
    fn nan_deviation_fails() {
        let mut r = SuiteResult::new("x");
        r.record(3, f64::NAN, 1.0);
        assert_eq!(r.first_failure, Some(3));
    }

    #[test]
    fn runs_are_deterministic() {
        let tol = Tolerances::default();
        assert_eq!(
            run_checks(5, 99, &tol).unwrap(),
            run_checks(5, 99, &tol).unwrap()
        );
    }
}
