//! Time sweeps of negativity, rendered as CSV.

use spinbath::bath::{BathParams, DecoherenceMatrix};
use spinbath::evolve::evolve_density;
use spinbath::negativity::{
    ghz_negativity_closed, w_negativity_closed, w_xi_negativity_closed, Bipartition,
    NegativityReport,
};
use spinbath::qstate::{ghz_state, make_pure_state, w_state, w_xi_state, PureState3Q, WXiParams};
use spinbath::{C64, Error};

use crate::{fmt_float, CliError};

/// Which initial state a sweep evolves.
#[derive(Debug, Clone)]
pub enum StateSelector {
    Ghz,
    W,
    WXi(WXiParams<f64>),
    Custom([C64; 8]),
}

impl StateSelector {
    fn build(&self) -> Result<PureState3Q<f64>, CliError> {
        match self {
            StateSelector::Ghz => Ok(ghz_state()),
            StateSelector::W => Ok(w_state()),
            StateSelector::WXi(p) => {
                w_xi_state(*p).map_err(|e| CliError::Args(format!("invalid wxi state: {e}")))
            }
            StateSelector::Custom(amps) => make_pure_state(*amps)
                .map_err(|e| CliError::Args(format!("invalid custom amplitudes: {e}"))),
        }
    }

    /// Closed-form negativity for the canonical states; `None` for custom
    /// amplitudes, which only have the generic path.
    fn closed_form(&self, factors: &DecoherenceMatrix<f64>, part: Bipartition) -> Option<f64> {
        match self {
            StateSelector::Ghz => Some(ghz_negativity_closed(factors.magnitude(0, 7))),
            StateSelector::W => Some(w_negativity_closed(
                part,
                factors.magnitude(1, 2),
                factors.magnitude(1, 4),
                factors.magnitude(2, 4),
            )),
            StateSelector::WXi(p) => Some(w_xi_negativity_closed(
                part,
                *p,
                factors.magnitude(1, 2),
                factors.magnitude(1, 4),
                factors.magnitude(2, 4),
            )),
            StateSelector::Custom(_) => None,
        }
    }
}

/// How the negativity columns are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Generic,
    Closed,
    Both,
}

/// Full description of one sweep.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub state: StateSelector,
    pub bath: BathParams<f64>,
    pub t_max: f64,
    pub t_steps: usize,
    pub method: Method,
    /// Optional `#` comment emitted above the column header.
    pub comment: Option<String>,
}

/// Evaluate the sweep and render the CSV document.
///
/// Rows are evaluated and emitted in grid order `t_j = j·t_max/(t_steps−1)`;
/// with [`Method::Both`] the closed-form columns are appended and a
/// `# max_deviation` footer records the largest |generic − closed| seen.
pub fn run_sweep(spec: &SweepSpec) -> Result<String, CliError> {
    if spec.t_steps < 2 {
        return Err(CliError::Args(format!(
            "--t-steps must be at least 2, got {}",
            spec.t_steps
        )));
    }
    if spec.t_max <= 0.0 || !spec.t_max.is_finite() {
        return Err(CliError::Args(format!(
            "--t-max must be a positive finite number, got {}",
            spec.t_max
        )));
    }
    if matches!(spec.state, StateSelector::Custom(_)) && spec.method != Method::Generic {
        return Err(CliError::Args(
            "custom amplitudes have no closed form; use --method generic".into(),
        ));
    }

    let initial = spec.state.build()?;
    let mut out = String::new();
    if let Some(comment) = &spec.comment {
        out.push_str(&format!("# {comment}\n"));
    }
    out.push_str("t,N_A_BC,N_B_CA,N_C_AB");
    if spec.method == Method::Both {
        out.push_str(",N_A_BC_closed,N_B_CA_closed,N_C_AB_closed");
    }
    out.push('\n');

    let mut max_deviation = 0.0f64;
    for j in 0..spec.t_steps {
        let t = j as f64 * spec.t_max / (spec.t_steps - 1) as f64;
        let factors = spec.bath.decoherence_matrix(t);

        let closed = |part| {
            spec.state
                .closed_form(&factors, part)
                .expect("closed form exists for non-custom states")
        };
        let row: [f64; 3] = match spec.method {
            Method::Closed => [
                closed(Bipartition::AVsBc),
                closed(Bipartition::BVsCa),
                closed(Bipartition::CVsAb),
            ],
            Method::Generic | Method::Both => {
                let map_err = |e: Error| match e {
                    Error::NoConvergence { .. } => CliError::NonConvergence { t },
                    other => CliError::Args(format!("evaluation failed at t = {t}: {other}")),
                };
                let rho = evolve_density(&initial, &factors).map_err(map_err)?;
                let report = NegativityReport::compute(&rho, t).map_err(map_err)?;
                [report.n_a, report.n_b, report.n_c]
            }
        };

        out.push_str(&fmt_float(t));
        for v in row {
            out.push(',');
            out.push_str(&fmt_float(v));
        }
        if spec.method == Method::Both {
            for part in Bipartition::ALL {
                let c = closed(part);
                max_deviation = max_deviation.max((c - row[part_index(part)]).abs());
                out.push(',');
                out.push_str(&fmt_float(c));
            }
        }
        out.push('\n');
    }

    if spec.method == Method::Both {
        out.push_str(&format!("# max_deviation = {}\n", fmt_float(max_deviation)));
    }
    Ok(out)
}

fn part_index(part: Bipartition) -> usize {
    match part {
        Bipartition::AVsBc => 0,
        Bipartition::BVsCa => 1,
        Bipartition::CVsAb => 2,
    }
}
