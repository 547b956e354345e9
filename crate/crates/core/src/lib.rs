//! Exact entanglement dynamics of three non-interacting qubits dephasing
//! through a transverse-field spin-chain bath.
//!
//! The model is pure dephasing: every system operator in the coupling is
//! diagonal in the computational basis, so populations are frozen and each
//! coherence of the reduced 8×8 density matrix is multiplied by a
//! time-dependent bath-overlap amplitude (a *decoherence factor*). Those
//! factors have a closed trigonometric form per bath site, and the total
//! factor for a bath of `n` sites is the product of per-site factors.
//!
//! Entanglement across the three one-vs-two bipartitions (A|BC, B|CA, C|AB)
//! is measured by negativity: the absolute sum of the negative eigenvalues
//! of the partially transposed state.
//!
//! Everything closed-form in here is cross-checked against brute-force
//! propagator oracles in [`oracle`]; see the `validate` subcommand of the
//! companion CLI crate for the full comparison report.
//!
//! Core math is generic over the scalar type through [`Real`]; the
//! `*64` aliases below fix the working precision used by the CLI and the
//! test suites.
//!
//! # Example
//!
//! ```
//! use spinbath::bath::BathParams;
//! use spinbath::evolve::evolve_density;
//! use spinbath::negativity::{negativity, Bipartition};
//! use spinbath::qstate::ghz_state;
//!
//! let bath = BathParams::<f64>::uniform(0.1, 0.2, 0.5, 1.0, 100).unwrap();
//! let factors = bath.decoherence_matrix(2.0);
//! let rho = evolve_density(&ghz_state(), &factors).unwrap();
//! let n = negativity(&rho, Bipartition::AVsBc).unwrap();
//! assert!((0.0..=0.5).contains(&n));
//! ```

// fixed 8x8 matrix code indexes rows and columns under permutations; the
// iterator forms clippy suggests obscure that
#![allow(clippy::needless_range_loop)]

pub mod bath;
pub mod error;
pub mod evolve;
pub mod negativity;
pub mod oracle;
pub mod qstate;
mod scalar;

pub use error::Error;
pub use scalar::Real;

/// Library-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex scalar at the default working precision.
pub type C64 = num_complex::Complex<f64>;

/// 8×8 complex matrix at the default working precision.
pub type Matrix64 = negativity::Matrix8<f64>;

/// Three-qubit pure state at the default working precision.
pub type PureState64 = qstate::PureState3Q<f64>;

/// Reduced three-qubit density matrix at the default working precision.
pub type Density64 = qstate::DensityMatrix8<f64>;

/// Bath parameter set at the default working precision.
pub type BathParams64 = bath::BathParams<f64>;

/// Decoherence-factor matrix at the default working precision.
pub type Decoherence64 = bath::DecoherenceMatrix<f64>;
