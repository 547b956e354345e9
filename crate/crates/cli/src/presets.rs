//! Canned parameter sets behind the fig1..fig10 data files.
//!
//! Grids are fixed here and recorded in each file's `#` header line: 400 uniform
//! time points over [0, 20] for line figures, and a 60×60 (ξ, t) grid for
//! the surfaces.

use std::fs;
use std::path::{Path, PathBuf};

use spinbath::bath::BathParams;
use spinbath::evolve::evolve_density;
use spinbath::negativity::{negativity, Bipartition};
use spinbath::qstate::{w_xi_state, WXiParams};

use crate::sweep::{run_sweep, Method, StateSelector, SweepSpec};
use crate::{fmt_float, CliError};

const LINE_POINTS: usize = 400;
const LINE_T_MAX: f64 = 20.0;
const SURFACE_XI_MAX: u32 = 60;
const SURFACE_T_POINTS: usize = 60;

const G: (f64, f64, f64) = (0.1, 0.2, 0.5);
const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

fn fig_bath(h: f64, n_spins: usize) -> BathParams<f64> {
    BathParams::uniform(G.0, G.1, G.2, h, n_spins).expect("preset bath parameters are valid")
}

fn line_grid_note() -> String {
    format!("grid: {LINE_POINTS} points, t in [0,{LINE_T_MAX}]")
}

/// The recognized preset names.
pub const PRESET_NAMES: [&str; 10] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10",
];

/// Generate every CSV belonging to `name` under `out_dir`; returns the
/// written paths in emission order.
pub fn run_preset(name: &str, out_dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let jobs: Vec<(String, String)> = match name {
        "fig1" => [100usize, 300, 500]
            .into_iter()
            .map(|n| {
                let comment = format!(
                    "preset fig1: ghz, gA={} gB={} gC={}, h=1, n_spins={n}, gamma=eta=1/sqrt(2); {}",
                    G.0, G.1, G.2, line_grid_note()
                );
                (format!("fig1_N{n}.csv"), line_csv(StateSelector::Ghz, 1.0, n, comment))
            })
            .collect::<Vec<_>>(),
        "fig2" => [0.5f64, 3.0, 5.0]
            .into_iter()
            .map(|h| {
                let comment = format!(
                    "preset fig2: ghz, gA={} gB={} gC={}, h={h}, n_spins=300, gamma=eta=1/sqrt(2); {}",
                    G.0, G.1, G.2, line_grid_note()
                );
                let label = if h == 0.5 { "0.5".to_string() } else { format!("{h:.0}") };
                (format!("fig2_h{label}.csv"), line_csv(StateSelector::Ghz, h, 300, comment))
            })
            .collect(),
        "fig3" => vec![(
            "fig3.csv".to_string(),
            line_csv(
                StateSelector::W,
                1.0,
                300,
                format!(
                    "preset fig3: w, gA={} gB={} gC={}, h=1, n_spins=300, gamma=eta=1/sqrt(2); {}",
                    G.0, G.1, G.2, line_grid_note()
                ),
            ),
        )],
        "fig4" => vec![wxi_line_job("fig4", 2, 0.0, 0.0)],
        "fig5" => vec![wxi_line_job("fig5", 20, 0.0, 0.0)],
        "fig6" => vec![wxi_line_job("fig6", 200, FRAC_PI_4, FRAC_PI_4)],
        "fig7" => vec![wxi_line_job("fig7", 2000, FRAC_PI_4, FRAC_PI_4)],
        "fig8" => vec![surface_job("fig8", Bipartition::AVsBc)?],
        "fig9" => vec![surface_job("fig9", Bipartition::BVsCa)?],
        "fig10" => vec![surface_job("fig10", Bipartition::CVsAb)?],
        other => {
            return Err(CliError::Args(format!(
                "unknown preset '{other}' (expected one of {})",
                PRESET_NAMES.join(", ")
            )))
        }
    };

    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", out_dir.display())))?;
    let mut written = Vec::new();
    for (filename, content) in jobs {
        let path = out_dir.join(&filename);
        fs::write(&path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}

fn line_csv(state: StateSelector, h: f64, n_spins: usize, comment: String) -> String {
    let spec = SweepSpec {
        state,
        bath: fig_bath(h, n_spins),
        t_max: LINE_T_MAX,
        t_steps: LINE_POINTS,
        method: Method::Generic,
        comment: Some(comment),
    };
    run_sweep(&spec).expect("preset sweeps are valid by construction")
}

fn wxi_line_job(fig: &str, xi: u32, delta: f64, phi: f64) -> (String, String) {
    let comment = format!(
        "preset {fig}: wxi, xi={xi}, delta={delta}, phi={phi}, gA={} gB={} gC={}, h=1, n_spins=300, gamma=eta=1/sqrt(2); {}",
        G.0, G.1, G.2, line_grid_note()
    );
    (
        format!("{fig}.csv"),
        line_csv(StateSelector::WXi(WXiParams::new(xi, delta, phi)), 1.0, 300, comment),
    )
}

/// Negativity of one bipartition over the (ξ, t) grid, row-major in ξ.
fn surface_job(fig: &str, part: Bipartition) -> Result<(String, String), CliError> {
    let column = match part {
        Bipartition::AVsBc => "N_A_BC",
        Bipartition::BVsCa => "N_B_CA",
        Bipartition::CVsAb => "N_C_AB",
    };
    let bath = fig_bath(1.0, 300);
    let mut out = format!(
        "# preset {fig}: wxi surface {column}, delta=phi=pi/4, gA={} gB={} gC={}, h=1, n_spins=300; grid: xi in 1..={SURFACE_XI_MAX}, {SURFACE_T_POINTS} t points in [0,{LINE_T_MAX}]\n",
        G.0, G.1, G.2
    );
    out.push_str(&format!("xi,t,{column}\n"));
    for xi in 1..=SURFACE_XI_MAX {
        let state = w_xi_state(WXiParams::new(xi, FRAC_PI_4, FRAC_PI_4))
            .expect("xi >= 1 by construction");
        for j in 0..SURFACE_T_POINTS {
            let t = j as f64 * LINE_T_MAX / (SURFACE_T_POINTS - 1) as f64;
            let rho = evolve_density(&state, &bath.decoherence_matrix(t))
                .map_err(|e| CliError::Args(format!("surface evaluation failed: {e}")))?;
            let n = negativity(&rho, part)
                .map_err(|_| CliError::NonConvergence { t })?;
            out.push_str(&format!("{xi},{},{}\n", fmt_float(t), fmt_float(n)));
        }
    }
    Ok((format!("{fig}_surface.csv"), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_preset_is_an_argument_error() {
        let err = run_preset("fig11", Path::new("/tmp/unused")).unwrap_err();
        assert!(matches!(err, CliError::Args(_)));
    }

    #[test]
    fn preset_names_cover_all_figures() {
        assert_eq!(PRESET_NAMES.len(), 10);
    }
}
