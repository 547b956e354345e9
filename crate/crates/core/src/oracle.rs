//! Brute-force ground truth for the closed-form dynamics.
//!
//! Two oracles, sharing no code with the trigonometric factor assembly in
//! [`crate::bath`] beyond the ζ table:
//!
//! * [`site_factor_oracle`] exponentiates the two conditional 2×2
//!   Hamiltonians through their analytic eigendecompositions, multiplies the
//!   propagators out as matrices, and sandwiches the site state.
//! * [`joint_evolution_oracle`] evolves the full system ⊗ bath vector. The
//!   coupling is diagonal on the system side, so the joint propagator is
//!   block-diagonal over the 8 basis labels and each block is a tensor
//!   product of per-site 2×2 propagators; the bath is then traced out by the
//!   literal sum over bath indices. Capped at 8 bath spins, which keeps the
//!   joint dimension at 2048 and the check instant.
//!
//! Qubit-side operators enter with spin-1/2 eigenvalues ±1/2 (that is what
//! produces the half-sums in the ζ table); bath-side operators are full
//! Pauli matrices, the convention under which the closed form's
//! `cos(tΛ)` with `Λ = √(ζ² + h²)` is consistent.

use num_complex::Complex;

use crate::bath::{BathParams, CouplingSpectrum};
use crate::qstate::{DensityMatrix8, PureState3Q};
use crate::{Error, Real, Result};

/// Largest bath the joint oracle accepts.
pub const MAX_ORACLE_SPINS: usize = 8;

/// 2×2 complex matrix in row-major order.
pub type SpinOperator2<F> = [[Complex<F>; 2]; 2];

/// `exp(-i (ζ σ_z + h σ_x) t)` through the analytic eigendecomposition of
/// the 2×2 conditional Hamiltonian (eigenvalues ±Λ, real rotation by half
/// the field angle).
fn conditional_propagator<F: Real>(zeta: F, h: F, t: F) -> SpinOperator2<F> {
    let lambda = zeta.hypot(h);
    let zero = Complex::new(F::zero(), F::zero());
    if lambda == F::zero() {
        let one = Complex::new(F::one(), F::zero());
        return [[one, zero], [zero, one]];
    }
    let half_angle = h.atan2(zeta) * F::of(0.5);
    let (sn, cs) = half_angle.sin_cos();
    let e_minus = Complex::from_polar(F::one(), -lambda * t);
    let e_plus = Complex::from_polar(F::one(), lambda * t);

    // V diag(e^{-iΛt}, e^{+iΛt}) V^T with V the real eigenvector rotation
    let v = [[cs, -sn], [sn, cs]];
    let mut u = [[zero; 2]; 2];
    for (i, vi) in v.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            u[i][j] = e_minus.scale(vi[0] * vj[0]) + e_plus.scale(vi[1] * vj[1]);
        }
    }
    u
}

fn mat2_adjoint<F: Real>(m: &SpinOperator2<F>) -> SpinOperator2<F> {
    [
        [m[0][0].conj(), m[1][0].conj()],
        [m[0][1].conj(), m[1][1].conj()],
    ]
}

fn mat2_mul<F: Real>(a: &SpinOperator2<F>, b: &SpinOperator2<F>) -> SpinOperator2<F> {
    let zero = Complex::new(F::zero(), F::zero());
    let mut out = [[zero; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Single-site decoherence factor from raw propagator algebra:
/// `⟨ψ| U_β† U_α |ψ⟩`.
pub fn site_factor_oracle<F: Real>(
    alpha: usize,
    beta: usize,
    zetas: &CouplingSpectrum<F>,
    hk: F,
    gamma_k: Complex<F>,
    eta_k: Complex<F>,
    t: F,
) -> Complex<F> {
    let u_alpha = conditional_propagator(zetas.zeta(alpha), hk, t);
    let u_beta = conditional_propagator(zetas.zeta(beta), hk, t);
    let m = mat2_mul(&mat2_adjoint(&u_beta), &u_alpha);
    let psi = [gamma_k, eta_k];
    let mut acc = Complex::new(F::zero(), F::zero());
    for i in 0..2 {
        for j in 0..2 {
            acc += psi[i].conj() * m[i][j] * psi[j];
        }
    }
    acc
}

/// Exact joint evolution of system ⊗ bath followed by a literal partial
/// trace over the bath.
pub fn joint_evolution_oracle<F: Real>(
    initial: &PureState3Q<F>,
    p: &BathParams<F>,
    t: F,
) -> Result<DensityMatrix8<F>> {
    let n = p.n_spins();
    if n > MAX_ORACLE_SPINS {
        return Err(Error::BathTooLarge {
            max: MAX_ORACLE_SPINS,
            got: n,
        });
    }
    let dim = 1usize << n;
    let zero = Complex::new(F::zero(), F::zero());

    // |E(0)⟩ = ⊗_k (γ_k|0⟩ + η_k|1⟩), site 0 most significant
    let mut bath0: Vec<Complex<F>> = vec![Complex::new(F::one(), F::zero())];
    for s in p.sites() {
        let mut next = Vec::with_capacity(bath0.len() * 2);
        for &amp in &bath0 {
            next.push(amp * s.gamma);
            next.push(amp * s.eta);
        }
        bath0 = next;
    }

    let zetas = p.zetas();
    // evolved bath branch for each system label: (⊗_k u_{α,k}) |E(0)⟩,
    // built by expanding the Kronecker product into a dense matrix
    let mut branches: Vec<Vec<Complex<F>>> = Vec::with_capacity(8);
    for alpha in 0..8 {
        let mut u: Vec<Vec<Complex<F>>> = vec![vec![Complex::new(F::one(), F::zero())]];
        for s in p.sites() {
            let site_u = conditional_propagator(zetas.zeta(alpha), s.h, t);
            let old_dim = u.len();
            let mut next = vec![vec![zero; old_dim * 2]; old_dim * 2];
            for (i, row) in u.iter().enumerate() {
                for (j, &val) in row.iter().enumerate() {
                    for bi in 0..2 {
                        for bj in 0..2 {
                            next[2 * i + bi][2 * j + bj] = val * site_u[bi][bj];
                        }
                    }
                }
            }
            u = next;
        }
        let mut evolved = vec![zero; dim];
        for (i, out) in evolved.iter_mut().enumerate() {
            for (j, &b) in bath0.iter().enumerate() {
                *out += u[i][j] * b;
            }
        }
        branches.push(evolved);
    }

    // ρ_s[α][β] = Σ_e Ψ[α,e] Ψ[β,e]*, with Ψ[α,e] = C_α branch_α[e]
    let amps = initial.amps();
    let mut entries = [[zero; 8]; 8];
    for alpha in 0..8 {
        for beta in 0..8 {
            let mut acc = zero;
            for e in 0..dim {
                acc += branches[alpha][e] * branches[beta][e].conj();
            }
            entries[alpha][beta] = amps[alpha] * amps[beta].conj() * acc;
        }
    }
    Ok(DensityMatrix8::from_entries(entries))
}
