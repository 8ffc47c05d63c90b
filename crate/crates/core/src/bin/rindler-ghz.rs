//! Command-line front end: state inspection, sweeps, verification, sudden
//! death search and figure data.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 numerical failure,
//! 3 strict verification failure.

use std::f64::consts::FRAC_PI_4;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rindler_ghz::analysis::{
    self, find_esd_with, p_grid, sweep, unit_grid, verify, CouplingMode, SweepSpec, TangleSelector, VerifyGrid,
};
use rindler_ghz::channels::ChannelKind;
use rindler_ghz::closedform::ClosedForm;
use rindler_ghz::output::{self, write_atomic};
use rindler_ghz::rindler::{ghz_rindler_density, AccelParam};

#[derive(Parser)]
#[command(
    name = "rindler-ghz",
    version,
    about = "GHZ entanglement of accelerated observers under dephasing noise"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the traced 8x8 density matrix at r (rb = rc = r).
    State {
        #[arg(long)]
        r: f64,
        #[arg(long, value_enum, default_value_t = StateFormat::Text)]
        format: StateFormat,
    },
    /// Tangles over an (r, p) grid, numeric and closed form side by side.
    Sweep {
        #[arg(long, value_enum)]
        channel: Channel,
        #[arg(long, value_enum, default_value_t = Coupling::Collective)]
        coupling: Coupling,
        /// Comma-separated r values in radians.
        #[arg(long, default_value = DEFAULT_R)]
        r: String,
        #[arg(long, default_value_t = analysis::DEFAULT_P_STEP)]
        p_step: f64,
        /// Output file; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
    },
    /// Compare every closed form with the density-matrix pipeline.
    Verify {
        #[arg(long, default_value = DEFAULT_R)]
        r: String,
        #[arg(long, default_value_t = analysis::DEFAULT_P_STEP)]
        p_step: f64,
        /// Exit with status 3 if any closed form deviates by more than 1e-9.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
        /// Scale the phase-damping N_A(BC) closed form by this factor.
        #[arg(long, hide = true)]
        inject_fault: Option<f64>,
    },
    /// Locate entanglement sudden death and rebirth in p.
    Esd {
        #[arg(long, value_enum)]
        channel: Channel,
        #[arg(long, value_enum, default_value_t = Coupling::Collective)]
        coupling: Coupling,
        #[arg(long)]
        r: String,
        #[arg(long, value_enum, default_value_t = Tangle::OneA)]
        tangle: Tangle,
        #[arg(long, default_value_t = analysis::DEFAULT_P_STEP)]
        p_step: f64,
    },
    /// Write the CSV grids behind figure 1, 2 or 3.
    Figure {
        id: u32,
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
    },
}

const DEFAULT_R: &str = "0,0.39269908169872414,0.5235987755982988,0.7853981633974483";

#[derive(Clone, Copy, ValueEnum)]
enum StateFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Channel {
    PhaseDamping,
    PhaseFlip,
}

impl From<Channel> for ChannelKind {
    fn from(c: Channel) -> Self {
        match c {
            Channel::PhaseDamping => ChannelKind::PhaseDamping,
            Channel::PhaseFlip => ChannelKind::PhaseFlip,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Coupling {
    LocalAlice,
    Collective,
}

impl From<Coupling> for CouplingMode {
    fn from(c: Coupling) -> Self {
        match c {
            Coupling::LocalAlice => CouplingMode::LocalAlice,
            Coupling::Collective => CouplingMode::Collective,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Tangle {
    OneA,
    OneB,
    OneC,
    Pi,
}

impl From<Tangle> for TangleSelector {
    fn from(t: Tangle) -> Self {
        match t {
            Tangle::OneA => TangleSelector::OneA,
            Tangle::OneB => TangleSelector::OneB,
            Tangle::OneC => TangleSelector::OneC,
            Tangle::Pi => TangleSelector::Pi,
        }
    }
}

enum Failure {
    Usage(String),
    Numerical(String),
    Strict,
}

impl From<rindler_ghz::Error> for Failure {
    fn from(e: rindler_ghz::Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CmdResult = Result<(), Failure>;

fn parse_r_list(s: &str) -> Result<Vec<f64>, Failure> {
    let values = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("invalid r value '{t}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(Failure::Usage("empty r list".into()));
    }
    for &r in &values {
        check_r(r)?;
    }
    Ok(values)
}

fn check_r(r: f64) -> Result<AccelParam, Failure> {
    AccelParam::new(r).map_err(|_| Failure::Usage("r out of range [0, pi/4]".into()))
}

/// `x` with `digits` significant digits, trailing zeros trimmed.
fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{:.*e}", digits - 1, x)
    }
}

fn cmd_state(r: f64, format: StateFormat) -> CmdResult {
    let accel = check_r(r)?;
    let rho = ghz_rindler_density(accel, accel);
    let m = rho.matrix();
    let trace = m.trace();
    match format {
        StateFormat::Text => {
            println!("rho(r = {}), basis |ABC>, A most significant", fmt_sig(r, 12));
            for i in 0..8 {
                let row: Vec<String> = (0..8)
                    .map(|j| {
                        let z = m.get(i, j);
                        if z.im == 0.0 {
                            format!("{:>16}", fmt_sig(z.re, 12))
                        } else {
                            format!("{:>16}{:+}i", fmt_sig(z.re, 12), fmt_sig(z.im, 12))
                        }
                    })
                    .collect();
                println!("{}", row.join(" "));
            }
            println!("trace = {}", fmt_sig(trace.re, 12));
        }
        StateFormat::Json => {
            let grid = |f: fn(&num_complex::Complex64) -> f64| -> Vec<Vec<f64>> {
                (0..8).map(|i| (0..8).map(|j| f(&m.get(i, j))).collect()).collect()
            };
            let doc = serde_json::json!({
                "r": r,
                "dim": 8,
                "re": grid(|z| z.re),
                "im": grid(|z| z.im),
                "trace": trace.re,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("plain JSON"));
        }
    }
    Ok(())
}

fn emit(path: Option<&Path>, contents: &str) -> CmdResult {
    match path {
        Some(p) => write_atomic(p, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn p_values(step: f64) -> Result<Vec<f64>, Failure> {
    Ok(p_grid(step)?)
}

fn cmd_sweep(
    channel: Channel,
    coupling: Coupling,
    r: &str,
    p_step: f64,
    out: Option<&Path>,
    format: SweepFormat,
) -> CmdResult {
    let spec = SweepSpec::new(channel.into(), coupling.into())
        .with_r_values(parse_r_list(r)?)
        .with_p_values(p_values(p_step)?);
    let recs = output::records(&sweep(&spec)?);
    let text = match format {
        SweepFormat::Csv => output::to_csv(&recs),
        SweepFormat::Json => output::to_json(&recs).map_err(|e| Failure::Usage(e.to_string()))?,
    };
    emit(out, &text)
}

fn cmd_verify(r: &str, p_step: f64, strict: bool, json: bool, fault: Option<f64>) -> CmdResult {
    let grid = VerifyGrid {
        r_values: parse_r_list(r)?,
        p_values: p_values(p_step)?,
        fault: fault.map(|s| (ClosedForm::PdOneTangleA, s)),
        ..VerifyGrid::default()
    };
    let report = verify(&grid)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
    } else {
        print!("{report}");
    }
    if strict && !report.all_passed() {
        return Err(Failure::Strict);
    }
    Ok(())
}

fn cmd_esd(channel: Channel, coupling: Coupling, r: &str, tangle: Tangle, p_step: f64) -> CmdResult {
    let rs = parse_r_list(r)?;
    println!(
        "{:<14} {:<12} {:<10} {:>20} {:>6} {:>8} {:>20} {:>12} {:>14}",
        "channel", "coupling", "tangle", "r", "found", "rebound", "p_star", "onset", "death_center"
    );
    for r in rs {
        let res = find_esd_with(channel.into(), coupling.into(), r, tangle.into(), p_step)?;
        let onset = res.rebound.map_or("-".to_string(), |rb| format!("{:.9}", rb.onset));
        let center = res.death_center().map_or("-".to_string(), |c| format!("{c:.9}"));
        println!(
            "{:<14} {:<12} {:<10} {:>20} {:>6} {:>8} {:>20.9} {:>12} {:>14}",
            res.kind.label(),
            res.coupling.label(),
            res.selector.label(),
            fmt_sig(r, 17),
            res.found,
            res.rebound.is_some(),
            res.p_star,
            onset,
            center,
        );
    }
    Ok(())
}

fn write_sweep_csv(dir: &Path, name: &str, spec: &SweepSpec) -> CmdResult {
    let recs = output::records(&sweep(spec)?);
    let path = dir.join(name);
    emit(Some(&path), &output::to_csv(&recs))?;
    println!("{}", path.display());
    Ok(())
}

fn cmd_figure(id: u32, dir: &Path) -> CmdResult {
    if !dir.is_dir() {
        return Err(Failure::Usage(format!(
            "output directory {} does not exist",
            dir.display()
        )));
    }
    match id {
        1 | 2 => {
            let kind = if id == 1 {
                ChannelKind::PhaseDamping
            } else {
                ChannelKind::PhaseFlip
            };
            for (mode, suffix) in [
                (CouplingMode::LocalAlice, "local_alice"),
                (CouplingMode::Collective, "collective"),
            ] {
                write_sweep_csv(dir, &format!("fig{id}_{suffix}.csv"), &SweepSpec::new(kind, mode))?;
            }
            Ok(())
        }
        3 => {
            let r_values = unit_grid(FRAC_PI_4 / 40.0, FRAC_PI_4)?;
            let p_values = p_grid(0.025)?;
            for kind in ChannelKind::ALL {
                let spec = SweepSpec::new(kind, CouplingMode::Collective)
                    .with_r_values(r_values.clone())
                    .with_p_values(p_values.clone());
                write_sweep_csv(dir, &format!("fig3_{}.csv", kind.label().replace('-', "_")), &spec)?;
            }
            Ok(())
        }
        _ => Err(Failure::Usage(format!("unknown figure {id}; expected 1, 2 or 3"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::State { r, format } => cmd_state(r, format),
        Command::Sweep {
            channel,
            coupling,
            r,
            p_step,
            output,
            format,
        } => cmd_sweep(channel, coupling, &r, p_step, output.as_deref(), format),
        Command::Verify {
            r,
            p_step,
            strict,
            json,
            inject_fault,
        } => cmd_verify(&r, p_step, strict, json, inject_fault),
        Command::Esd {
            channel,
            coupling,
            r,
            tangle,
            p_step,
        } => cmd_esd(channel, coupling, &r, tangle, p_step),
        Command::Figure { id, output_dir } => cmd_figure(id, &output_dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Strict) => {
            eprintln!(
                "strict verification failed: a closed form deviates by more than {:e}",
                analysis::VERIFY_TOL
            );
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.5, 12), "0.5");
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(fmt_sig(-0.125, 12), "-0.125");
        assert_eq!(fmt_sig(1e-7, 12), "1.00000000000e-7");
    }

    #[test]
    fn r_list_parsing() {
        assert_eq!(parse_r_list("0, 0.5").ok(), Some(vec![0.0, 0.5]));
        assert!(parse_r_list("").is_err());
        assert!(parse_r_list("abc").is_err());
        assert!(parse_r_list("2").is_err());
    }
}
