//! `qstar` — compute discrete Wigner functions, spin tomograms, and the
//! kernels connecting them, from the command line.

mod report;
mod state;
mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qstar_core::kernels::{kernel_value, wigner_from_tomogram};
use qstar_core::tomography::{tomogram, Direction, SpinProjection, Tomogram};
use qstar_core::wigner::{density_from_wigner, wigner};
use qstar_core::{Error as CoreError, SphereQuadrature, Variant};

use report::{
    selected_variants, KernelRow, KernelsReport, RoundtripReport, TomogramReport, TomogramRow,
    WignerEntry, WignerReport,
};

/// Errors with their process exit codes: 1 usage, 2 physicality, 3
/// verification failure.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Physical(CoreError),
    Internal(CoreError),
    VerifyFailed { failed: usize },
    Io(std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::NotHermitian { .. }
            | CoreError::TraceNotOne { .. }
            | CoreError::NotPositiveSemidefinite { .. }
            | CoreError::BlochNormExceedsOne { .. }
            | CoreError::InvalidPolar { .. }
            | CoreError::WignerNotNormalized { .. } => CliError::Physical(err),
            other => CliError::Internal(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Physical(err) => write!(f, "{err}"),
            CliError::Internal(err) => write!(f, "{err}"),
            CliError::VerifyFailed { failed } => write!(f, "{failed} verification check(s) failed"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Internal(_) => 1,
            CliError::Physical(_) => 2,
            CliError::VerifyFailed { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum VariantArg {
    #[value(alias = "a")]
    A,
    #[value(alias = "b")]
    B,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::A => Variant::A,
            VariantArg::B => Variant::B,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "qstar",
    about = "Discrete Wigner functions and spin tomograms for qubit states",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the discrete Wigner function of a state
    Wigner {
        /// State: bloch:x,y,z | polar:a,c,xi | matrix:@file.json
        state: String,
        /// Operator-basis variant; both when omitted
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Print the spin tomogram of a state over a direction grid
    Tomogram {
        state: String,
        /// Colatitude nodes of the direction grid
        #[arg(long, default_value_t = 3)]
        ntheta: usize,
        /// Azimuth nodes of the direction grid
        #[arg(long, default_value_t = 8)]
        npsi: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Dump the tomogram/Wigner kernel tables over a direction grid
    Kernels {
        /// Operator-basis variant; both when omitted
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, default_value_t = 3)]
        ntheta: usize,
        #[arg(long, default_value_t = 8)]
        npsi: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Send a state through tomogram → Wigner → state and report the residual
    Roundtrip {
        state: String,
        /// Operator-basis variant used for the intermediate Wigner function
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, default_value_t = 3)]
        ntheta: usize,
        #[arg(long, default_value_t = 8)]
        npsi: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run the full identity-check suite; exit 0 only if everything passes
    Verify {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if err.use_stderr() {
                eprint!("{err}");
                std::process::exit(1);
            }
            // --help / --version
            print!("{err}");
            std::process::exit(0);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable report");
    text.push('\n');
    text
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Wigner {
            state,
            variant,
            out,
            format,
        } => {
            let rho = state::parse_state(&state)?;
            let entries: Vec<WignerEntry> = selected_variants(variant.map(Into::into))
                .into_iter()
                .map(|v| wigner(&rho, v).map(|w| WignerEntry::from(&w)))
                .collect::<Result<_, _>>()
                .map_err(CliError::from)?;
            let report = WignerReport {
                command: "wigner".to_string(),
                state,
                wigner: entries,
            };
            let text = match format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => report.to_csv(),
            };
            emit(text, out.as_ref())
        }
        Command::Tomogram {
            state,
            ntheta,
            npsi,
            out,
            format,
        } => {
            let rho = state::parse_state(&state)?;
            let quadrature = SphereQuadrature::product_rule(ntheta, npsi)?;
            let mut rows = Vec::with_capacity(2 * quadrature.len());
            for m in SpinProjection::BOTH {
                for &(theta, psi) in quadrature.nodes() {
                    let w = tomogram(&rho, m, &Direction::new(theta, psi));
                    rows.push(TomogramRow {
                        m: m.value(),
                        theta,
                        psi,
                        w,
                    });
                }
            }
            let report = TomogramReport {
                command: "tomogram".to_string(),
                state,
                ntheta,
                npsi,
                rows,
            };
            let text = match format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => report.to_csv(),
            };
            emit(text, out.as_ref())
        }
        Command::Kernels {
            variant,
            ntheta,
            npsi,
            out,
            format,
        } => {
            let quadrature = SphereQuadrature::product_rule(ntheta, npsi)?;
            let variants = selected_variants(variant.map(Into::into));
            let mut rows = Vec::new();
            for v in &variants {
                for dual in [false, true] {
                    for m in SpinProjection::BOTH {
                        for &(theta, psi) in quadrature.nodes() {
                            let d = Direction::new(theta, psi);
                            for p in qstar_core::PhasePoint::ALL {
                                rows.push(KernelRow {
                                    variant: v.to_string(),
                                    dual: dual as u8,
                                    m: m.value(),
                                    theta,
                                    psi,
                                    j: p.j(),
                                    k: p.k(),
                                    value: kernel_value(*v, dual, m, &d, p),
                                });
                            }
                        }
                    }
                }
            }
            let report = KernelsReport {
                command: "kernels".to_string(),
                ntheta,
                npsi,
                rows,
            };
            let text = match format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => report.to_csv(),
            };
            emit(text, out.as_ref())
        }
        Command::Roundtrip {
            state,
            variant,
            ntheta,
            npsi,
            out,
            format,
        } => {
            let rho = state::parse_state(&state)?;
            let v: Variant = variant.map(Into::into).unwrap_or(Variant::A);
            let quadrature = SphereQuadrature::product_rule(ntheta, npsi)?;
            let t = Tomogram::new(rho.clone());
            let w = wigner_from_tomogram(|m, d| t.value(m, d), v, &quadrature)?;
            let reconstruction = density_from_wigner(&w)?;
            let max_residual = reconstruction.matrix().max_abs_diff(rho.matrix());
            let report = RoundtripReport {
                command: "roundtrip".to_string(),
                state,
                variant: v.to_string(),
                ntheta,
                npsi,
                wigner: WignerEntry::from(&w),
                reconstructed: state::MatrixJson::from_matrix(reconstruction.matrix()),
                max_residual,
            };
            let text = match format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => report.to_csv(),
            };
            emit(text, out.as_ref())
        }
        Command::Verify { out, format } => {
            let report = verify::run_verify();
            let text = match format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => report.to_csv(),
            };
            emit(text, out.as_ref())?;
            if report.all_passed {
                Ok(())
            } else {
                let failed = report.checks.iter().filter(|c| !c.passed).count();
                Err(CliError::VerifyFailed { failed })
            }
        }
    }
}
