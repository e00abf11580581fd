use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bineg::commands;
use bineg::state_file;
use bineg::sweep::{unit_grid, SweepGrid};
use bineg_core::channels::{ChannelKind, Formulas, Sidedness};
use bineg_core::verify::VerifyOptions;
use bineg_core::Complex64;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bineg", version, about = "Two-qubit concurrence, negativity and binegativity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Channel {
    Ad,
    Pd,
    Dp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sided {
    /// Channel on qubit A only.
    One,
    /// Channel on qubit B only.
    OneB,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print C, N and N2 for a state file (JSON family spec or 4x4 complex matrix).
    Measures { file: PathBuf },
    /// Write a (p, eta) grid of closed-form and oracle measures to CSV.
    Sweep {
        #[arg(long, value_enum)]
        channel: Channel,
        #[arg(long, value_enum)]
        sided: Sided,
        /// Amplitude of |01>, e.g. `0.4` or `0.3+0.2i`.
        #[arg(long, default_value = "0.4", value_parser = parse_complex)]
        alpha: Complex64,
        /// Points per axis on [0, 1].
        #[arg(long, default_value_t = 51)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
        /// Use the formulas exactly as printed instead of the corrected ones.
        #[arg(long)]
        paper_literal: bool,
    },
    /// Monte Carlo twirl monotonicity experiment; exits nonzero on any violation.
    Twirl {
        #[arg(long)]
        states: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, env = "BINEG_SEED", default_value_t = 1)]
        seed: u64,
    },
    /// Run the internal verification suites.
    Verify {
        #[arg(long)]
        paper_literal: bool,
        /// Override the eigensolver tolerance of the reconstruction suite.
        #[arg(long, hide = true)]
        fault_eig_tolerance: Option<f64>,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let z: Complex64 = s.trim().parse().map_err(|e| format!("invalid complex number `{s}`: {e:?}"))?;
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(format!("non-finite amplitude `{s}`"));
    }
    Ok(z)
}

fn formulas(paper_literal: bool) -> Formulas {
    if paper_literal {
        Formulas::PaperLiteral
    } else {
        Formulas::Corrected
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Measures { file } => {
            let state = state_file::load(&file)?;
            print!("{}", commands::measures_report(&state)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            channel,
            sided,
            alpha,
            grid,
            out,
            paper_literal,
        } => {
            if grid < 2 {
                bail!("--grid must be at least 2");
            }
            let kind = match channel {
                Channel::Ad => ChannelKind::AmplitudeDamping,
                Channel::Pd => ChannelKind::PhaseDamping,
                Channel::Dp => ChannelKind::Depolarizing,
            };
            let sidedness = match sided {
                Sided::One => Sidedness::OneSidedA,
                Sided::OneB => Sidedness::OneSidedB,
                Sided::Both => Sidedness::BothSided,
            };
            let file = File::create(&out).with_context(|| format!("cannot write {}", out.display()))?;
            let result = SweepGrid::run(
                kind,
                sidedness,
                alpha,
                unit_grid(grid),
                unit_grid(grid),
                formulas(paper_literal),
            )?;
            result
                .write_csv(BufWriter::new(file))
                .with_context(|| format!("cannot write {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Twirl {
            states,
            samples,
            seed,
        } => {
            if samples == 0 && states > 0 {
                bail!("--samples must be positive");
            }
            let report = commands::twirl_experiment(states, samples, seed)?;
            print!("{}", commands::twirl_report(&report, seed));
            Ok(if report.violations() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Verify {
            paper_literal,
            fault_eig_tolerance,
        } => {
            let mut opts = VerifyOptions {
                formulas: formulas(paper_literal),
                ..Default::default()
            };
            if let Some(tol) = fault_eig_tolerance {
                opts.eig_tolerance = tol;
            }
            let outcomes = commands::verify(&opts);
            print!("{}", commands::verify_report(&outcomes));
            let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
            if failed.is_empty() {
                println!("all {} suites passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("failing suites: {}", failed.join(", "));
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
