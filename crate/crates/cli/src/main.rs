use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spinbath::bath::{zeta_table, BathParams, SiteParams};
use spinbath::qstate::WXiParams;
use spinbath::C64;
use spinbath_cli::presets::run_preset;
use spinbath_cli::sweep::{run_sweep, Method, StateSelector, SweepSpec};
use spinbath_cli::validate::{report, run_validate, ValidateOptions};
use spinbath_cli::{fmt_float, CliError};

/// Negativity dynamics of three qubits dephasing through a spin-chain bath.
#[derive(Parser)]
#[command(name = "spinbath", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep negativity over a time grid and write a CSV file.
    Simulate(SimulateArgs),
    /// Regenerate the CSV data for one of the bundled figure presets.
    Preset {
        /// Preset name: fig1 .. fig10.
        name: String,
        /// Directory the CSV files are written into.
        #[arg(long, default_value = "presets")]
        out_dir: PathBuf,
    },
    /// Run every oracle and invariant check and print a report table.
    Validate {
        /// Print the worst-case sample behind each measurement.
        #[arg(long)]
        verbose: bool,
        /// Evaluate the closed-form site factor with the alternative axial
        /// coefficient; exists to demonstrate that the oracle check catches
        /// the wrong reading.
        #[arg(long, hide = true)]
        debug_alt_axial_coeff: bool,
    },
    /// Print the 8-entry conditional-coupling table for given couplings.
    Zeta {
        #[arg(long = "gA", allow_hyphen_values = true)]
        g_a: f64,
        #[arg(long = "gB", allow_hyphen_values = true)]
        g_b: f64,
        #[arg(long = "gC", allow_hyphen_values = true)]
        g_c: f64,
    },
}

#[derive(Args)]
struct SimulateArgs {
    /// Initial state.
    #[arg(long, value_enum)]
    state: StateKind,

    /// Coupling of qubit A to every bath site.
    #[arg(long = "gA", default_value_t = 0.1, allow_hyphen_values = true)]
    g_a: f64,
    /// Coupling of qubit B to every bath site.
    #[arg(long = "gB", default_value_t = 0.2, allow_hyphen_values = true)]
    g_b: f64,
    /// Coupling of qubit C to every bath site.
    #[arg(long = "gC", default_value_t = 0.5, allow_hyphen_values = true)]
    g_c: f64,

    /// Transverse field applied to every bath site.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    h: f64,
    /// Number of bath sites.
    #[arg(long, default_value_t = 300)]
    n_spins: usize,
    /// Initial site amplitude gamma as "re,im" for every site; eta is fixed
    /// to the real nonnegative root of 1 - |gamma|^2. Defaults to
    /// gamma = eta = 1/sqrt(2).
    #[arg(long)]
    gamma_all: Option<String>,
    /// Per-site bath spec: one "h,gamma_re,gamma_im,eta_re,eta_im" line per
    /// site. Overrides --h, --n-spins, and --gamma-all.
    #[arg(long)]
    bath_file: Option<PathBuf>,

    /// Weight parameter of the wxi state (natural number >= 1).
    #[arg(long)]
    xi: Option<u32>,
    /// Phase delta (radians) of the wxi state.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    delta: f64,
    /// Phase phi (radians) of the wxi state.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    phi: f64,

    /// Custom amplitudes as exactly 8 semicolon-separated "re,im" pairs.
    #[arg(long)]
    amps: Option<String>,

    /// End of the time grid.
    #[arg(long, default_value_t = 20.0)]
    t_max: f64,
    /// Number of grid points (>= 2), including t = 0 and t = t_max.
    #[arg(long, default_value_t = 400)]
    t_steps: usize,
    /// Negativity evaluation route.
    #[arg(long, value_enum, default_value_t = MethodKind::Generic)]
    method: MethodKind,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum StateKind {
    Ghz,
    W,
    Wxi,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodKind {
    Generic,
    Closed,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Simulate(args) => {
            let spec = build_spec(&args)?;
            let csv = run_sweep(&spec)?;
            fs::write(&args.out, csv)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", args.out.display())))?;
            Ok(0)
        }
        Command::Preset { name, out_dir } => {
            let written = run_preset(&name, &out_dir)?;
            for path in written {
                println!("{}", path.display());
            }
            Ok(0)
        }
        Command::Validate {
            verbose,
            debug_alt_axial_coeff,
        } => {
            let results = run_validate(ValidateOptions {
                verbose,
                alt_axial_coeff: debug_alt_axial_coeff,
            });
            // 1 on fatal-check failure; report() already explained it
            Ok(report(&results, verbose) as u8)
        }
        Command::Zeta { g_a, g_b, g_c } => {
            let table = zeta_table(g_a, g_b, g_c);
            println!("alpha,basis,zeta");
            for alpha in 0..8 {
                println!("{alpha},{alpha:03b},{}", fmt_float(table.zeta(alpha)));
            }
            Ok(0)
        }
    }
}

fn build_spec(args: &SimulateArgs) -> Result<SweepSpec, CliError> {
    let state = match args.state {
        StateKind::Ghz => StateSelector::Ghz,
        StateKind::W => StateSelector::W,
        StateKind::Wxi => {
            let xi = args
                .xi
                .ok_or_else(|| CliError::Args("--state wxi requires --xi".into()))?;
            StateSelector::WXi(WXiParams::new(xi, args.delta, args.phi))
        }
        StateKind::Custom => {
            let raw = args
                .amps
                .as_ref()
                .ok_or_else(|| CliError::Args("--state custom requires --amps".into()))?;
            StateSelector::Custom(parse_amps(raw)?)
        }
    };

    let bath = match &args.bath_file {
        Some(path) => parse_bath_file(path, args)?,
        None => match &args.gamma_all {
            Some(raw) => {
                let gamma = parse_complex(raw)
                    .ok_or_else(|| CliError::Args(format!("bad --gamma-all value '{raw}'")))?;
                let rest = 1.0 - gamma.norm_sqr();
                if rest < -1e-12 {
                    return Err(CliError::Args(format!(
                        "--gamma-all magnitude {} exceeds 1",
                        gamma.norm()
                    )));
                }
                let eta = C64::new(rest.max(0.0).sqrt(), 0.0);
                BathParams::uniform_with_amplitudes(
                    args.g_a, args.g_b, args.g_c, args.h, args.n_spins, gamma, eta,
                )
                .map_err(|e| CliError::Args(format!("invalid bath: {e}")))?
            }
            None => BathParams::uniform(args.g_a, args.g_b, args.g_c, args.h, args.n_spins)
                .map_err(|e| CliError::Args(format!("invalid bath: {e}")))?,
        },
    };

    Ok(SweepSpec {
        state,
        bath,
        t_max: args.t_max,
        t_steps: args.t_steps,
        method: match args.method {
            MethodKind::Generic => Method::Generic,
            MethodKind::Closed => Method::Closed,
            MethodKind::Both => Method::Both,
        },
        comment: None,
    })
}

fn parse_complex(raw: &str) -> Option<C64> {
    let (re, im) = raw.split_once(',')?;
    Some(C64::new(
        re.trim().parse().ok()?,
        im.trim().parse().ok()?,
    ))
}

fn parse_amps(raw: &str) -> Result<[C64; 8], CliError> {
    let parts: Vec<&str> = raw.split(';').collect();
    if parts.len() != 8 {
        return Err(CliError::Args(format!(
            "--amps needs exactly 8 're,im' pairs separated by ';', got {}",
            parts.len()
        )));
    }
    let mut amps = [C64::new(0.0, 0.0); 8];
    for (i, part) in parts.iter().enumerate() {
        amps[i] = parse_complex(part)
            .ok_or_else(|| CliError::Args(format!("bad amplitude pair '{part}'")))?;
    }
    Ok(amps)
}

fn parse_bath_file(path: &PathBuf, args: &SimulateArgs) -> Result<BathParams<f64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let mut sites = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(CliError::Args(format!(
                "{}:{}: expected 'h,gamma_re,gamma_im,eta_re,eta_im'",
                path.display(),
                lineno + 1
            )));
        }
        let mut vals = [0.0f64; 5];
        for (slot, f) in fields.iter().enumerate() {
            vals[slot] = f.parse().map_err(|_| {
                CliError::Args(format!(
                    "{}:{}: bad number '{f}'",
                    path.display(),
                    lineno + 1
                ))
            })?;
        }
        sites.push(SiteParams {
            h: vals[0],
            gamma: C64::new(vals[1], vals[2]),
            eta: C64::new(vals[3], vals[4]),
        });
    }
    BathParams::from_sites(args.g_a, args.g_b, args.g_c, sites)
        .map_err(|e| CliError::Args(format!("invalid bath file: {e}")))
}
