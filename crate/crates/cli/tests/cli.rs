//! End-to-end tests of the compiled binary: exit codes, file outputs, and
//! the documented CSV shapes.

use std::path::Path;
use std::process::{Command, Output};

fn spinbath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinbath"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn bad_arguments_exit_with_code_two() {
    let out = spinbath(&["simulate", "--state", "nope", "--out", "/tmp/x.csv"]);
    assert_eq!(out.status.code(), Some(2));

    // wxi without --xi
    let out = spinbath(&["simulate", "--state", "wxi", "--out", "/tmp/x.csv"]);
    assert_eq!(out.status.code(), Some(2));

    // custom with a malformed amplitude list
    let out = spinbath(&[
        "simulate", "--state", "custom", "--amps", "1,0;0,0", "--out", "/tmp/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // closed method has no meaning for custom amplitudes
    let out = spinbath(&[
        "simulate",
        "--state",
        "custom",
        "--amps",
        "1,0;0,0;0,0;0,0;0,0;0,0;0,0;0,0",
        "--method",
        "closed",
        "--out",
        "/tmp/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = spinbath(&["preset", "fig99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_with_code_three() {
    let out = spinbath(&[
        "simulate",
        "--state",
        "ghz",
        "--t-steps",
        "2",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn custom_state_sweep_works() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("custom.csv");
    let r = 0.5f64.sqrt();
    let amps = format!("{r},0;0,0;0,0;0,0;0,0;0,0;0,{r};0,0");
    let out = spinbath(&[
        "simulate",
        "--state",
        "custom",
        "--amps",
        &amps,
        "--n-spins",
        "10",
        "--t-steps",
        "5",
        "--t-max",
        "2",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("t,N_A_BC,N_B_CA,N_C_AB\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn bath_file_supports_per_site_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let bath_path = dir.path().join("bath.csv");
    let r = 0.5f64.sqrt();
    std::fs::write(
        &bath_path,
        format!("# three distinct sites\n1.0,{r},0,{r},0\n0.5,{r},0,{r},0\n2.0,1,0,0,0\n"),
    )
    .unwrap();
    let out_path = dir.path().join("out.csv");
    let out = spinbath(&[
        "simulate",
        "--state",
        "w",
        "--bath-file",
        bath_path.to_str().unwrap(),
        "--t-steps",
        "4",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // a site with |gamma|^2 + |eta|^2 != 1 is an argument error
    std::fs::write(&bath_path, "1.0,0.9,0,0.9,0\n").unwrap();
    let out = spinbath(&[
        "simulate",
        "--state",
        "w",
        "--bath-file",
        bath_path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zeta_prints_the_eight_entry_table() {
    let out = spinbath(&["zeta", "--gA", "0.1", "--gB", "0.2", "--gC", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "alpha,basis,zeta");
    assert_eq!(lines.len(), 9);
    assert!(lines[1].starts_with("0,000,4.0000000000000002e-1"));
    assert!(lines[8].starts_with("7,111,-4.0000000000000002e-1"));
}

#[test]
fn preset_fig1_emits_three_files_with_grid_headers() {
    let dir = tempfile::tempdir().unwrap();
    let out = spinbath(&["preset", "fig1", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["fig1_N100.csv", "fig1_N300.csv", "fig1_N500.csv"] {
        let path = dir.path().join(name);
        assert!(path.exists(), "{name} missing");
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("# preset fig1:"));
        assert_eq!(lines.next().unwrap(), "t,N_A_BC,N_B_CA,N_C_AB");
    }
}

#[test]
fn preset_surfaces_use_xi_t_grid_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = spinbath(&["preset", "fig8", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("fig8_surface.csv")).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# preset fig8:"));
    assert_eq!(lines.next().unwrap(), "xi,t,N_A_BC");
    let data: Vec<&str> = lines.collect();
    assert_eq!(data.len(), 60 * 60);
    assert!(data[0].starts_with("1,0.0000000000000000e0,"));
    assert!(data.last().unwrap().starts_with("60,"));
}

#[test]
fn fig2_files_show_the_shorter_period_at_larger_field() {
    // file-level weak local minima: the h=5 dip comes well before h=0.5's
    let dir = tempfile::tempdir().unwrap();
    spinbath_cli::presets::run_preset("fig2", dir.path()).unwrap();
    let read = |name: &str| -> Vec<(f64, f64)> {
        std::fs::read_to_string(Path::new(dir.path()).join(name))
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with('t'))
            .map(|l| {
                let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
                (v[0], v[1])
            })
            .collect()
    };
    let weak_min_time = |rows: &[(f64, f64)]| -> f64 {
        for i in 1..rows.len() - 1 {
            if rows[i].1 < rows[i - 1].1 && rows[i].1 <= rows[i + 1].1 {
                return rows[i].0;
            }
        }
        panic!("no minimum found");
    };
    let t_h05 = weak_min_time(&read("fig2_h0.5.csv"));
    let t_h5 = weak_min_time(&read("fig2_h5.csv"));
    assert!(t_h5 < t_h05, "h=5 minimum at {t_h5}, h=0.5 at {t_h05}");
}

#[test]
fn validate_verbose_prints_details() {
    let out = spinbath(&["validate", "--verbose"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("site_factor_vs_propagator_oracle"));
    assert!(text.contains("worst at"));
    assert!(text.contains("validation passed"));
}

#[test]
fn validate_with_mutated_site_factor_exits_one() {
    let out = spinbath(&["validate", "--debug-alt-axial-coeff"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
}
