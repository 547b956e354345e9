//! Reduced-state evolution: attach decoherence factors to the initial
//! coherences.
//!
//! Because the dynamics are pure dephasing, the reduced state at time t is
//! obtained elementwise — no time stepping, no state carried between time
//! points:
//!
//! ```text
//! ρ_αβ(t) = C_α C_β* f_αβ(t)
//! ```
//!
//! The diagonal factors are exactly one, so populations are conserved.

use crate::bath::DecoherenceMatrix;
use crate::qstate::{DensityMatrix8, PureState3Q};
use crate::{Error, Real, Result};

/// Build `ρ(t)` from the initial amplitudes and the factor matrix.
///
/// A valid factor matrix always yields a physical state; a meaningfully
/// negative eigenvalue therefore signals a corrupted input and is reported
/// as [`Error::PsdViolation`].
pub fn evolve_density<F: Real>(
    initial: &PureState3Q<F>,
    factors: &DecoherenceMatrix<F>,
) -> Result<DensityMatrix8<F>> {
    let amps = initial.amps();
    let mut entries = [[num_complex::Complex::new(F::zero(), F::zero()); 8]; 8];
    for (alpha, row) in entries.iter_mut().enumerate() {
        for (beta, e) in row.iter_mut().enumerate() {
            *e = amps[alpha] * amps[beta].conj() * factors.factor(alpha, beta);
        }
    }
    let rho = DensityMatrix8::from_entries(entries);

    let eigs = crate::negativity::hermitian_eigenvalues(rho.entries())?;
    if eigs[0] < -F::PSD_SLACK {
        return Err(Error::PsdViolation {
            eigenvalue: eigs[0].to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::BathParams;
    use crate::qstate::{density_from_pure, ghz_state, w_state, w_xi_state, WXiParams};
    use num_complex::Complex;

    type C = Complex<f64>;

    #[test]
    fn all_ones_factors_reproduce_pure_density() {
        let s = w_state::<f64>();
        let rho = evolve_density(&s, &DecoherenceMatrix::all_ones()).unwrap();
        let expect = density_from_pure(&s);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(rho.entry(i, j), expect.entry(i, j));
            }
        }
    }

    #[test]
    fn ghz_evolution_places_factor_on_outer_coherence() {
        let p = BathParams::uniform(0.1, 0.2, 0.5, 1.0, 3).unwrap();
        let m = p.decoherence_matrix(1.7);
        let rho = evolve_density(&ghz_state(), &m).unwrap();
        assert!((rho.entry(0, 0) - C::new(0.5, 0.0)).norm() < 1e-15);
        assert!((rho.entry(7, 7) - C::new(0.5, 0.0)).norm() < 1e-15);
        let f = m.factor(0, 7);
        assert!((rho.entry(0, 7) - f.scale(0.5)).norm() < 1e-15);
        assert!((rho.entry(7, 0) - f.conj().scale(0.5)).norm() < 1e-15);
        for i in 0..8 {
            for j in 0..8 {
                if (i == 0 || i == 7) && (j == 0 || j == 7) {
                    continue;
                }
                assert_eq!(rho.entry(i, j), C::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn w_evolution_places_factors_on_single_excitation_block() {
        let p = BathParams::uniform(0.1, 0.2, 0.5, 1.0, 2).unwrap();
        let m = p.decoherence_matrix(0.9);
        let rho = evolve_density(&w_state(), &m).unwrap();
        let third = 1.0 / 3.0;
        for &i in &[1usize, 2, 4] {
            assert!((rho.entry(i, i) - C::new(third, 0.0)).norm() < 1e-15);
        }
        for (i, j) in [(1usize, 2usize), (1, 4), (2, 4)] {
            let expect = m.factor(i, j).scale(third);
            assert!((rho.entry(i, j) - expect).norm() < 1e-15);
            assert!((rho.entry(j, i) - expect.conj()).norm() < 1e-15);
        }
        assert_eq!(rho.entry(0, 0), C::new(0.0, 0.0));
        assert_eq!(rho.entry(3, 5), C::new(0.0, 0.0));
    }

    #[test]
    fn populations_are_time_independent() {
        let s = w_xi_state(WXiParams::new(4, 0.3, -0.8)).unwrap();
        let p = BathParams::uniform(0.4, -0.2, 0.9, 1.5, 11).unwrap();
        let diag0: Vec<f64> = (0..8).map(|i| s.amps()[i].norm_sqr()).collect();
        for t in [0.0, 0.6, 3.1, 12.0] {
            let rho = evolve_density(&s, &p.decoherence_matrix(t)).unwrap();
            for i in 0..8 {
                assert!((rho.entry(i, i).re - diag0[i]).abs() < 1e-14);
                assert!(rho.entry(i, i).im.abs() < 1e-15);
            }
            assert!((rho.trace() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hermitian_by_construction() {
        let s = w_xi_state(WXiParams::new(2, 1.1, 0.2)).unwrap();
        let p = BathParams::uniform(0.3, 0.7, -0.5, 0.8, 5).unwrap();
        let rho = evolve_density(&s, &p.decoherence_matrix(2.2)).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert!((rho.entry(i, j) - rho.entry(j, i).conj()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn w_xi_nonzero_elements_match_weight_table() {
        let xi = 5u32;
        let (delta, phi) = (0.7, -0.4);
        let s = w_xi_state(WXiParams::new(xi, delta, phi)).unwrap();
        let p = BathParams::uniform(0.1, 0.2, 0.5, 1.0, 4).unwrap();
        let m = p.decoherence_matrix(1.3);
        let rho = evolve_density(&s, &m).unwrap();

        let x = xi as f64;
        let d = 2.0 * x + 2.0;
        assert!((rho.entry(1, 1) - C::new(0.5, 0.0)).norm() < 1e-12);
        assert!((rho.entry(2, 2) - C::new(x / d, 0.0)).norm() < 1e-12);
        assert!((rho.entry(4, 4) - C::new(1.0 / d, 0.0)).norm() < 1e-12);

        let e23 = m.factor(1, 2) * C::from_polar((x * (x + 1.0)).sqrt() / d, delta - phi);
        assert!((rho.entry(1, 2) - e23).norm() < 1e-12);
        let e25 = m.factor(1, 4) * C::from_polar(1.0 / (2.0 * (x + 1.0).sqrt()), delta);
        assert!((rho.entry(1, 4) - e25).norm() < 1e-12);
        let e35 = m.factor(2, 4) * C::from_polar(x.sqrt() / d, phi);
        assert!((rho.entry(2, 4) - e35).norm() < 1e-12);
    }

    #[test]
    fn corrupted_factors_are_rejected() {
        // a factor matrix with |f| > 1 in one coherence pushes GHZ negative
        let mut f = [[C::new(1.0, 0.0); 8]; 8];
        f[0][7] = C::new(3.0, 0.0);
        f[7][0] = C::new(3.0, 0.0);
        let bad = DecoherenceMatrix::from_factors(f);
        assert!(matches!(
            evolve_density(&ghz_state(), &bad),
            Err(Error::PsdViolation { .. })
        ));
    }
}
