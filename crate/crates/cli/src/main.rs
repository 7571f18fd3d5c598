use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use switchlogic::analysis::AlphaSelection;
use switchlogic::logic::SubsetClass;
use switchlogic::realization::Duration;
use switchlogic::Property;
use switchlogic_cli::commands::{parse_alphas, parse_class, parse_property};
use switchlogic_cli::description::{digest, parse};
use switchlogic_cli::{run, CliError, Command, Report};

#[derive(Debug, Clone, Copy)]
struct Target(Option<Property>);

fn parse_target(s: &str) -> Result<Target, String> {
    parse_property(s).map(Target)
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Analyze switched linear systems whose switching is driven by a logical control network.
#[derive(Debug, Parser)]
#[command(name = "switchlogic", version)]
struct Cli {
    /// System description file (TOML).
    file: PathBuf,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Leave the generation time and elapsed time out of the report.
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check reachability, controllability, observability, reconstructibility, or all.
    Analyze {
        /// A property name or `all`.
        #[arg(value_parser = parse_target)]
        property: Target,
        /// Initial logical states: `attractors`, `all`, or a list like `1,4`.
        #[arg(long, default_value = "attractors", value_parser = parse_alphas)]
        alphas: AlphaSelection,
        /// Same as `--alphas all`.
        #[arg(long, conflicts_with = "alphas")]
        strict: bool,
        #[arg(long)]
        t_max: Option<usize>,
        /// Largest number of candidate sequences to try.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Control fixed points, cycles, basins and representatives.
    Attractors,
    /// ℓ-step input-state set reachability.
    Setreach {
        #[arg(long = "l")]
        ell: usize,
        /// Source subsets, e.g. `4,6;1,2`.
        #[arg(long, value_parser = parse_class)]
        omega0: SubsetClass,
        /// Target subsets.
        #[arg(long, value_parser = parse_class)]
        omegad: SubsetClass,
        /// Count paths instead of Boolean reachability.
        #[arg(long)]
        quantitative: bool,
    },
    /// Switching-signal realization.
    Realize {
        #[command(subcommand)]
        kind: RealizeCmd,
    },
    /// Track a reference switching signal from an initial logical state.
    Track {
        #[arg(long)]
        theta0: usize,
        #[arg(long = "ref", value_delimiter = ',', required = true)]
        reference: Vec<usize>,
    },
    /// Write the input-state graph as DOT.
    Graph {
        #[arg(long)]
        out: PathBuf,
    },
    /// Brute-force cross-checks.
    Oracle {
        #[command(subcommand)]
        kind: OracleCmd,
    },
}

#[derive(Debug, Subcommand)]
enum RealizeCmd {
    /// Finite operating times, one per signal value (`inf` allowed).
    Fot {
        #[arg(long, value_delimiter = ',', required = true)]
        durations: Vec<Duration>,
    },
    /// Minimum dwell times, one per signal value.
    Dwell {
        #[arg(long = "min", value_delimiter = ',', required = true)]
        min_dwell: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCmd {
    /// Exhaustive switching-sequence enumeration with rank tests.
    Kalman {
        /// A property name or `all`.
        #[arg(value_parser = parse_target)]
        property: Target,
        #[arg(long, default_value = "attractors", value_parser = parse_alphas)]
        alphas: AlphaSelection,
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Count input-state paths one at a time.
    Paths {
        #[arg(long, value_delimiter = ',', required = true)]
        from: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        to: Vec<usize>,
        #[arg(long = "l")]
        ell: usize,
    },
    /// Leave/stay failures per signal by successor enumeration.
    Fot,
    /// Tracking by enumerating input sequences.
    Track {
        #[arg(long)]
        theta0: usize,
        #[arg(long = "ref", value_delimiter = ',', required = true)]
        reference: Vec<usize>,
    },
}

impl Cmd {
    fn into_command(self) -> Command {
        match self {
            Cmd::Analyze {
                property,
                alphas,
                strict,
                t_max,
                budget,
            } => Command::Analyze {
                property: property.0,
                alphas: if strict { AlphaSelection::All } else { alphas },
                t_max,
                budget,
            },
            Cmd::Attractors => Command::Attractors,
            Cmd::Setreach {
                ell,
                omega0,
                omegad,
                quantitative,
            } => Command::SetReach {
                ell,
                omega0,
                omega_d: omegad,
                quantitative,
            },
            Cmd::Realize { kind } => match kind {
                RealizeCmd::Fot { durations } => Command::RealizeFot { durations },
                RealizeCmd::Dwell { min_dwell } => Command::RealizeDwell { min_dwell },
            },
            Cmd::Track { theta0, reference } => Command::Track { theta0, reference },
            Cmd::Graph { out } => Command::Graph { out },
            Cmd::Oracle { kind } => match kind {
                OracleCmd::Kalman {
                    property,
                    alphas,
                    t_max,
                } => Command::OracleKalman {
                    property: property.0,
                    alphas,
                    t_max,
                },
                OracleCmd::Paths { from, to, ell } => Command::OraclePaths { from, to, ell },
                OracleCmd::Fot => Command::OracleFot,
                OracleCmd::Track { theta0, reference } => Command::OracleTrack { theta0, reference },
            },
        }
    }
}

fn execute(cli: Cli) -> Result<Report, CliError> {
    let bytes = std::fs::read(&cli.file).map_err(|source| CliError::Io {
        path: cli.file.display().to_string(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::input("description is not UTF-8"))?;
    let description = parse(&text)?;
    let start = Instant::now();
    let (findings, outcome) = run(&cli.command.into_command(), &description)?;
    let elapsed = start.elapsed();
    let input = cli
        .file
        .file_name()
        .map_or_else(|| cli.file.display().to_string(), |n| n.to_string_lossy().into_owned());
    Ok(Report {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        input,
        input_sha256: digest(&bytes),
        numeric: description.options.numeric_mode(),
        generated_unix: (!cli.no_timestamp)
            .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())),
        elapsed_ms: (!cli.no_timestamp).then_some(elapsed.as_secs_f64() * 1e3),
        outcome,
        findings,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match execute(cli) {
        Ok(report) => {
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            print!("{text}");
            ExitCode::from(report.outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
