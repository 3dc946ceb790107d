//! Entanglement measures for bipartite pure and mixed qudit states.
//!
//! The crate computes negativity two independent ways (spectrally, via the
//! partial transpose and trace norm, and in closed form from Schmidt
//! coefficients), together with logarithmic negativity, the two-qutrit
//! concurrence, the ladder-operator expectation, entanglement entropy and
//! the algebraic negativity/concurrence relation for two qutrits.
//!
//! Composite basis index convention: `|i, j>` maps to `i * dim_b + j`
//! (subsystem A major).

pub mod config;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod random;
pub mod states;
pub mod sweeps;
pub mod verify;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use measures::{LadderVariant, MeasureReport};
pub use states::{DensityMatrix, PureState, SchmidtVector, Subsystem};
pub use sweeps::SweepRow;

pub use num_complex::Complex64;
