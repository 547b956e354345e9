use thiserror::Error;

/// Everything that can go wrong constructing states or evaluating dynamics.
///
/// Diagnostic payloads are carried as `f64` regardless of the working
/// precision so the error type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input amplitude was NaN or infinite.
    #[error("state amplitudes must be finite")]
    NonFinite,

    /// Input amplitudes were too small to renormalize meaningfully.
    #[error("squared norm {norm_sq:e} is below the zero threshold")]
    ZeroNorm { norm_sq: f64 },

    /// Input amplitudes were so far off unit norm that silent
    /// renormalization would likely mask a caller bug.
    #[error("squared norm {norm_sq} deviates from 1 beyond the renormalization threshold")]
    NormDeviation { norm_sq: f64 },

    /// The weight parameter of the phase-weighted W family must be ≥ 1.
    #[error("xi must be a natural number >= 1")]
    InvalidXi,

    /// A bath needs at least one site.
    #[error("bath must contain at least one site")]
    EmptyBath,

    /// A site's amplitude pair (γ, η) was not normalized.
    #[error("site {site}: |gamma|^2 + |eta|^2 = {norm_sq} is not 1")]
    AmplitudeNorm { site: usize, norm_sq: f64 },

    /// An evolved state came out with a meaningfully negative eigenvalue,
    /// which signals a corrupted decoherence matrix.
    #[error("density matrix eigenvalue {eigenvalue:e} violates positive semidefiniteness")]
    PsdViolation { eigenvalue: f64 },

    /// The eigensolver did not reach its tolerance within the sweep budget.
    #[error("eigensolver failed to converge (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { off_diagonal: f64 },

    /// The brute-force joint oracle is capped to keep it instant.
    #[error("joint oracle supports at most {max} bath spins, got {got}")]
    BathTooLarge { max: usize, got: usize },
}
