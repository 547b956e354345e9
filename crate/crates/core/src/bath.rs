//! Conditional-bath eigenvalue tables and decoherence factors.
//!
//! Conditioning the coupling Hamiltonian on a computational basis state
//! `|abc⟩` leaves each bath site with its own 2×2 Hamiltonian
//! `H_α = ζ_α σ_z + h_k σ_x`, where `ζ_α = (±g^A ± g^B ± g^C)/2` picks the
//! sign of each coupling from the corresponding qubit bit (0 → +, 1 → −).
//! The decoherence factor attached to the (α, β) coherence of the reduced
//! state is the bath overlap
//!
//! ```text
//! f_αβ(t) = ⟨ψ_k| e^{+iH_β t} e^{−iH_α t} |ψ_k⟩,   |ψ_k⟩ = γ_k|0⟩ + η_k|1⟩,
//! ```
//!
//! which has a closed trigonometric form in `Λ_μ = √(ζ_μ² + h_k²)`. For a
//! bath of `n` sites the total factor is the product of per-site factors;
//! identical sites collapse the product to a single complex power, evaluated
//! in log-magnitude form so that `n` in the hundreds of thousands does not
//! underflow prematurely.
//!
//! The closed form is verified term-by-term against the independent 2×2
//! propagator oracle in [`crate::oracle`].

use num_complex::Complex;

use crate::negativity::Matrix8;
use crate::{Error, Real, Result};

/// The 8 conditional-bath eigenvalue combinations ζ_0..ζ_7, aligned with the
/// basis convention of [`crate::qstate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingSpectrum<F: Real> {
    zeta: [F; 8],
}

impl<F: Real> CouplingSpectrum<F> {
    #[inline]
    pub fn zeta(&self, alpha: usize) -> F {
        self.zeta[alpha]
    }

    #[inline]
    pub fn as_array(&self) -> &[F; 8] {
        &self.zeta
    }
}

/// Signed half-sum `ζ_α = (±g^A ± g^B ± g^C)/2` for every basis label.
pub fn zeta_table<F: Real>(g_a: F, g_b: F, g_c: F) -> CouplingSpectrum<F> {
    let half = F::of(0.5);
    let mut zeta = [F::zero(); 8];
    for (alpha, z) in zeta.iter_mut().enumerate() {
        let sa = if alpha & 4 == 0 { g_a } else { -g_a };
        let sb = if alpha & 2 == 0 { g_b } else { -g_b };
        let sc = if alpha & 1 == 0 { g_c } else { -g_c };
        *z = half * (sa + sb + sc);
    }
    CouplingSpectrum { zeta }
}

/// Per-site precession frequency `Λ = √(ζ² + h²)`.
#[inline]
pub fn lambda_coeff<F: Real>(zeta: F, hk: F) -> F {
    zeta.hypot(hk)
}

/// Parameters of one bath site: transverse field and initial amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiteParams<F: Real> {
    pub h: F,
    pub gamma: Complex<F>,
    pub eta: Complex<F>,
}

impl<F: Real> SiteParams<F> {
    /// Site with the default equal-superposition amplitudes γ = η = 1/√2.
    pub fn symmetric(h: F) -> Self {
        let r = F::of(0.5).sqrt();
        Self {
            h,
            gamma: Complex::new(r, F::zero()),
            eta: Complex::new(r, F::zero()),
        }
    }
}

/// Couplings, per-site fields, and per-site initial amplitudes of the bath.
#[derive(Debug, Clone, PartialEq)]
pub struct BathParams<F: Real> {
    pub g_a: F,
    pub g_b: F,
    pub g_c: F,
    sites: Vec<SiteParams<F>>,
}

impl<F: Real> BathParams<F> {
    /// Uniform bath: `n_spins` identical sites with field `h` and the
    /// default amplitudes γ = η = 1/√2.
    pub fn uniform(g_a: F, g_b: F, g_c: F, h: F, n_spins: usize) -> Result<Self> {
        Self::from_sites(g_a, g_b, g_c, vec![SiteParams::symmetric(h); n_spins])
    }

    /// Uniform bath with explicit amplitudes shared by every site.
    pub fn uniform_with_amplitudes(
        g_a: F,
        g_b: F,
        g_c: F,
        h: F,
        n_spins: usize,
        gamma: Complex<F>,
        eta: Complex<F>,
    ) -> Result<Self> {
        Self::from_sites(g_a, g_b, g_c, vec![SiteParams { h, gamma, eta }; n_spins])
    }

    /// General bath with per-site parameters. Each site's amplitude pair
    /// must be normalized.
    pub fn from_sites(g_a: F, g_b: F, g_c: F, sites: Vec<SiteParams<F>>) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::EmptyBath);
        }
        for (k, s) in sites.iter().enumerate() {
            let norm_sq = s.gamma.norm_sqr() + s.eta.norm_sqr();
            if (norm_sq - F::one()).abs() > F::AMP_TOL {
                return Err(Error::AmplitudeNorm {
                    site: k,
                    norm_sq: norm_sq.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { g_a, g_b, g_c, sites })
    }

    #[inline]
    pub fn n_spins(&self) -> usize {
        self.sites.len()
    }

    #[inline]
    pub fn sites(&self) -> &[SiteParams<F>] {
        &self.sites
    }

    pub fn zetas(&self) -> CouplingSpectrum<F> {
        zeta_table(self.g_a, self.g_b, self.g_c)
    }

    fn is_uniform(&self) -> bool {
        self.sites.windows(2).all(|w| w[0] == w[1])
    }

    /// Total decoherence factors for every coherence at time `t`.
    ///
    /// Identical sites are composed as a single complex power; otherwise the
    /// per-site factors are multiplied out explicitly.
    pub fn decoherence_matrix(&self, t: F) -> DecoherenceMatrix<F> {
        let zetas = self.zetas();
        let one = Complex::new(F::one(), F::zero());
        let mut f = [[one; 8]; 8];
        let uniform = self.is_uniform();
        for alpha in 0..8 {
            for beta in (alpha + 1)..8 {
                let total = if uniform {
                    let s = &self.sites[0];
                    let z = site_factor(alpha, beta, &zetas, s.h, s.gamma, s.eta, t);
                    complex_pow(z, self.sites.len())
                } else {
                    self.sites.iter().fold(one, |acc, s| {
                        acc * site_factor(alpha, beta, &zetas, s.h, s.gamma, s.eta, t)
                    })
                };
                f[alpha][beta] = total;
                f[beta][alpha] = total.conj(); // Hermitian symmetry is exact
            }
        }
        DecoherenceMatrix { f }
    }
}

/// `z^n` through polar form: magnitude `exp(n·ln|z|)`, phase `n·arg(z)`.
///
/// Magnitudes that fall below [`Real::MAG_UNDERFLOW`] are flushed to exactly
/// zero, which keeps powered factors meaningful out to n ~ 10^6.
fn complex_pow<F: Real>(z: Complex<F>, n: usize) -> Complex<F> {
    if n == 1 {
        return z;
    }
    let mag = z.norm();
    if mag == F::zero() {
        return Complex::new(F::zero(), F::zero());
    }
    let nf = F::from_usize(n).expect("site count representable");
    let ln_mag = mag.ln() * nf;
    if ln_mag < F::MAG_UNDERFLOW.ln() {
        return Complex::new(F::zero(), F::zero());
    }
    Complex::from_polar(ln_mag.exp(), z.arg() * nf)
}

/// Single-site decoherence factor `⟨ψ_k|e^{+iH_β t}e^{−iH_α t}|ψ_k⟩` in its
/// closed trigonometric form.
///
/// Writing `c_μ = cos(tΛ_μ)` and `s_μ = sin(tΛ_μ)/Λ_μ` (with `s_μ → t` as
/// `Λ_μ → 0`), the overlap decomposes into the four amplitude channels plus
/// a field-induced term:
///
/// ```text
///   γ*η · ih(s_β(c_α + iζ_α s_α) − s_α(c_β + iζ_β s_β))
/// + γη* · ih(s_β(c_α − iζ_α s_α) − s_α(c_β − iζ_β s_β))
/// + |γ|² (c_α − iζ_α s_α)(c_β + iζ_β s_β)
/// + |η|² (c_α + iζ_α s_α)(c_β − iζ_β s_β)
/// + h² s_α s_β
/// ```
pub fn site_factor<F: Real>(
    alpha: usize,
    beta: usize,
    zetas: &CouplingSpectrum<F>,
    hk: F,
    gamma_k: Complex<F>,
    eta_k: Complex<F>,
    t: F,
) -> Complex<F> {
    site_factor_with_axis(alpha, beta, zetas, hk, gamma_k, eta_k, t, AxialCoeff::Zeta)
}

/// Which coefficient multiplies the `i·sin(tΛ)/Λ` terms of the closed form.
///
/// [`AxialCoeff::Zeta`] is the physical reading (the σ_z weight of the
/// conditional Hamiltonian) and the only one that matches the propagator
/// oracle. [`AxialCoeff::Lambda`] substitutes the full precession frequency
/// instead; it is retained purely as a diagnostic so the mismatch can be
/// demonstrated rather than asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxialCoeff {
    Zeta,
    Lambda,
}

/// Closed-form site factor with a selectable axial coefficient. Only
/// [`AxialCoeff::Zeta`] is physical; see [`AxialCoeff`].
#[allow(clippy::too_many_arguments)]
pub fn site_factor_with_axis<F: Real>(
    alpha: usize,
    beta: usize,
    zetas: &CouplingSpectrum<F>,
    hk: F,
    gamma_k: Complex<F>,
    eta_k: Complex<F>,
    t: F,
    axis: AxialCoeff,
) -> Complex<F> {
    let z_a = zetas.zeta(alpha);
    let z_b = zetas.zeta(beta);
    let lam_a = lambda_coeff(z_a, hk);
    let lam_b = lambda_coeff(z_b, hk);

    let (c_a, s_a) = cos_sinc(t, lam_a);
    let (c_b, s_b) = cos_sinc(t, lam_b);

    let (ax_a, ax_b) = match axis {
        AxialCoeff::Zeta => (z_a, z_b),
        AxialCoeff::Lambda => (lam_a, lam_b),
    };

    let i = Complex::new(F::zero(), F::one());
    // u_μ∓ = c_μ ∓ iζ_μ s_μ are the diagonal entries of the conditional
    // propagators; the field couples through the ih s_μ off-diagonals.
    let up_a = Complex::new(c_a, ax_a * s_a); // c_α + iζ_α s_α
    let dn_a = up_a.conj();
    let up_b = Complex::new(c_b, ax_b * s_b);
    let dn_b = up_b.conj();
    let ih = i.scale(hk);

    let cross_ge = gamma_k.conj() * eta_k * ih * (up_a.scale(s_b) - up_b.scale(s_a));
    let cross_eg = gamma_k * eta_k.conj() * ih * (dn_a.scale(s_b) - dn_b.scale(s_a));
    let diag_g = dn_a * up_b.scale(gamma_k.norm_sqr());
    let diag_e = up_a * dn_b.scale(eta_k.norm_sqr());
    let field = Complex::new(hk * hk * s_a * s_b, F::zero());

    cross_ge + cross_eg + diag_g + diag_e + field
}

/// `(cos(tΛ), sin(tΛ)/Λ)` with the removable singularity at Λ = 0 filled in.
#[inline]
fn cos_sinc<F: Real>(t: F, lambda: F) -> (F, F) {
    if lambda == F::zero() {
        (F::one(), t)
    } else {
        let x = t * lambda;
        (x.cos(), x.sin() / lambda)
    }
}

/// 8×8 matrix of total decoherence factors at a fixed time.
///
/// The diagonal is exactly one (conditional evolution is unitary) and the
/// matrix is exactly Hermitian by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoherenceMatrix<F: Real> {
    f: Matrix8<F>,
}

impl<F: Real> DecoherenceMatrix<F> {
    /// The all-ones matrix: no dephasing, as at t = 0.
    pub fn all_ones() -> Self {
        Self {
            f: [[Complex::new(F::one(), F::zero()); 8]; 8],
        }
    }

    /// Wrap raw factors. The caller asserts unit diagonal and Hermiticity.
    pub fn from_factors(f: Matrix8<F>) -> Self {
        Self { f }
    }

    #[inline]
    pub fn factor(&self, alpha: usize, beta: usize) -> Complex<F> {
        self.f[alpha][beta]
    }

    #[inline]
    pub fn factors(&self) -> &Matrix8<F> {
        &self.f
    }

    /// |f_αβ|, the powered magnitude the closed-form negativity expressions
    /// consume.
    #[inline]
    pub fn magnitude(&self, alpha: usize, beta: usize) -> F {
        self.f[alpha][beta].norm()
    }
}
