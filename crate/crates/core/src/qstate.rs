//! Three-qubit pure states, canonical initial states, and density matrices.
//!
//! Basis convention, fixed once for the whole crate: computational basis
//! states are indexed `0..=7` with qubit A as the most significant bit,
//! `index = 4a + 2b + c`. Index 0 is `|000⟩`, index 7 is `|111⟩`.

use num_complex::Complex;

use crate::negativity::Matrix8;
use crate::{Error, Real, Result};

/// Squared-norm threshold below which input amplitudes are rejected as zero.
pub const ZERO_NORM_THRESHOLD: f64 = 1e-12;

/// Allowed deviation of an input's squared norm from 1 before construction
/// refuses to renormalize silently.
pub const NORM_DEVIATION_THRESHOLD: f64 = 1e-6;

/// Pack three qubit values (each 0 or 1) into a basis index.
#[inline]
pub const fn basis_index(a: u8, b: u8, c: u8) -> usize {
    (4 * a + 2 * b + c) as usize
}

/// Unpack a basis index into the three qubit values (a, b, c).
#[inline]
pub const fn basis_bits(index: usize) -> (u8, u8, u8) {
    (
        ((index >> 2) & 1) as u8,
        ((index >> 1) & 1) as u8,
        (index & 1) as u8,
    )
}

/// A normalized three-qubit pure state: eight complex amplitudes in the
/// computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState3Q<F: Real> {
    amps: [Complex<F>; 8],
}

impl<F: Real> PureState3Q<F> {
    /// Amplitudes in basis order.
    #[inline]
    pub fn amps(&self) -> &[Complex<F>; 8] {
        &self.amps
    }

    /// Amplitude of basis state `index`.
    #[inline]
    pub fn amp(&self, index: usize) -> Complex<F> {
        self.amps[index]
    }

    /// Squared norm Σ|amps|².
    pub fn norm_sq(&self) -> F {
        self.amps
            .iter()
            .fold(F::zero(), |acc, a| acc + a.norm_sqr())
    }
}

/// Parameters of the phase-weighted W family: integer weight `xi ≥ 1` and
/// two phases (radians) on the first two excitation branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WXiParams<F: Real> {
    pub xi: u32,
    pub delta: F,
    pub phi: F,
}

impl<F: Real> WXiParams<F> {
    pub fn new(xi: u32, delta: F, phi: F) -> Self {
        Self { xi, delta, phi }
    }
}

/// Build a normalized state from raw amplitudes.
///
/// Inputs within [`NORM_DEVIATION_THRESHOLD`] of unit norm are renormalized
/// silently; anything further off is rejected so that unnormalized data is
/// caught at the boundary instead of skewing every later result.
pub fn make_pure_state<F: Real>(amps: [Complex<F>; 8]) -> Result<PureState3Q<F>> {
    if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm_sq = amps
        .iter()
        .fold(F::zero(), |acc, a| acc + a.norm_sqr());
    let norm_sq_f64 = norm_sq.to_f64().unwrap_or(f64::NAN);
    if norm_sq < F::of(ZERO_NORM_THRESHOLD) {
        return Err(Error::ZeroNorm {
            norm_sq: norm_sq_f64,
        });
    }
    if (norm_sq - F::one()).abs() > F::of(NORM_DEVIATION_THRESHOLD) {
        return Err(Error::NormDeviation {
            norm_sq: norm_sq_f64,
        });
    }
    let inv = norm_sq.sqrt().recip();
    Ok(PureState3Q {
        amps: amps.map(|a| a.scale(inv)),
    })
}

/// `(|000⟩ + |111⟩)/√2`.
pub fn ghz_state<F: Real>() -> PureState3Q<F> {
    let mut amps = [Complex::new(F::zero(), F::zero()); 8];
    let r = F::of(0.5).sqrt();
    amps[0] = Complex::new(r, F::zero());
    amps[7] = Complex::new(r, F::zero());
    PureState3Q { amps }
}

/// `(|001⟩ + |010⟩ + |100⟩)/√3`.
pub fn w_state<F: Real>() -> PureState3Q<F> {
    let mut amps = [Complex::new(F::zero(), F::zero()); 8];
    let r = (F::one() / F::of(3.0)).sqrt();
    amps[basis_index(0, 0, 1)] = Complex::new(r, F::zero());
    amps[basis_index(0, 1, 0)] = Complex::new(r, F::zero());
    amps[basis_index(1, 0, 0)] = Complex::new(r, F::zero());
    PureState3Q { amps }
}

/// Phase-weighted W state
/// `(e^{iδ}√(ξ+1)|001⟩ + e^{iφ}√ξ|010⟩ + |100⟩)/√(2ξ+2)`.
///
/// The weights satisfy `(ξ+1) + ξ + 1 = 2ξ+2`, so the state is normalized
/// for every valid ξ without renormalization.
pub fn w_xi_state<F: Real>(p: WXiParams<F>) -> Result<PureState3Q<F>> {
    if p.xi < 1 {
        return Err(Error::InvalidXi);
    }
    let xi = F::from_u32(p.xi).expect("xi fits in every Real type");
    let denom = (F::of(2.0) * xi + F::of(2.0)).sqrt();
    let mut amps = [Complex::new(F::zero(), F::zero()); 8];
    amps[basis_index(0, 0, 1)] =
        Complex::from_polar((xi + F::one()).sqrt() / denom, p.delta);
    amps[basis_index(0, 1, 0)] = Complex::from_polar(xi.sqrt() / denom, p.phi);
    amps[basis_index(1, 0, 0)] = Complex::new(denom.recip(), F::zero());
    Ok(PureState3Q { amps })
}

/// An 8×8 Hermitian, unit-trace, positive-semidefinite reduced state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix8<F: Real> {
    entries: Matrix8<F>,
}

impl<F: Real> DensityMatrix8<F> {
    /// Wrap raw entries. The caller asserts Hermiticity, unit trace, and
    /// positive semidefiniteness; use [`DensityMatrix8::validate`] to check.
    pub fn from_entries(entries: Matrix8<F>) -> Self {
        Self { entries }
    }

    #[inline]
    pub fn entries(&self) -> &Matrix8<F> {
        &self.entries
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex<F> {
        self.entries[row][col]
    }

    /// Real part of the trace (the imaginary part is zero for Hermitian
    /// entries by construction).
    pub fn trace(&self) -> F {
        (0..8).fold(F::zero(), |acc, i| acc + self.entries[i][i].re)
    }

    /// Check Hermiticity, unit trace, and PSD within the scalar's slack.
    /// Returns the smallest eigenvalue on success.
    pub fn validate(&self) -> Result<F> {
        let tol = F::of(1e-12).max(F::epsilon() * F::of(64.0));
        for i in 0..8 {
            for j in 0..8 {
                let d = self.entries[i][j] - self.entries[j][i].conj();
                if d.norm_sqr().sqrt() > tol {
                    return Err(Error::PsdViolation {
                        eigenvalue: f64::NAN,
                    });
                }
            }
        }
        if (self.trace() - F::one()).abs() > tol {
            return Err(Error::NormDeviation {
                norm_sq: self.trace().to_f64().unwrap_or(f64::NAN),
            });
        }
        let eigs = crate::negativity::hermitian_eigenvalues(&self.entries)?;
        let min = eigs[0];
        if min < -F::PSD_SLACK {
            return Err(Error::PsdViolation {
                eigenvalue: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(min)
    }
}

/// Rank-1 projector `|ψ⟩⟨ψ|` of a pure state.
pub fn density_from_pure<F: Real>(s: &PureState3Q<F>) -> DensityMatrix8<F> {
    let mut entries = [[Complex::new(F::zero(), F::zero()); 8]; 8];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = s.amps[i] * s.amps[j].conj();
        }
    }
    DensityMatrix8 { entries }
}
