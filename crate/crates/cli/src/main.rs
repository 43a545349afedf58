use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kharibound::{BandSpec, Quantity, VertexIndexTuple};
use kharibound_cli::commands::{self, SprMode, SweepOptions, VerifyAnalysis, VerifyOptions};
use kharibound_cli::spec::env_tolerance_file;
use kharibound_cli::{exit, CliError, Context};

/// Vertex-based robustness analysis of interval transfer functions.
///
/// Exit codes: 0 success or verdict true, 1 verdict false, 2 input error,
/// 3 zero inclusion, 4 denominator not Hurwitz, 5 oracle violation.
/// KHARIBOUND_TOLERANCES may name a JSON file overriding the spec-file tolerances.
#[derive(Debug, Parser)]
#[command(name = "kharibound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QuantityArg {
    MinRe,
    MaxRe,
    MinIm,
    MaxIm,
}

impl From<QuantityArg> for Quantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::MinRe => Quantity::MinRe,
            QuantityArg::MaxRe => Quantity::MaxRe,
            QuantityArg::MinIm => Quantity::MinIm,
            QuantityArg::MaxIm => Quantity::MaxIm,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AnalysisArg {
    Pointwise,
    Band,
    Gamma,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the Kharitonov vertices and the index-set pairings.
    Vertices {
        /// Family spec JSON file
        spec: PathBuf,
    },
    /// Extremum of a frequency-response quantity over the family at one frequency.
    Pointwise {
        /// Family spec JSON file
        spec: PathBuf,
        /// Frequency ω in rad/s
        #[arg(long, allow_negative_numbers = true)]
        omega: f64,
        #[arg(long, value_enum, default_value = "min-re")]
        quantity: QuantityArg,
    },
    /// SPR index and the absolute-stability sector it implies.
    GammaIndex {
        /// Family spec JSON file
        spec: PathBuf,
    },
    /// Strict positive realness of the family, a band, or the closed loops.
    Spr {
        /// Family spec JSON file
        spec: PathBuf,
        /// Check every closed loop g/(f + γg) instead of the open loop
        #[arg(long, requires = "gamma", conflicts_with = "band")]
        closed_loop: bool,
        /// Loop gain γ > 0 for --closed-loop
        #[arg(long, allow_negative_numbers = true)]
        gamma: Option<f64>,
        /// Restrict to the frequency band [W1, W2] in rad/s
        #[arg(long, num_args = 2, value_names = ["W1", "W2"], allow_negative_numbers = true)]
        band: Option<Vec<f64>>,
    },
    /// Pointwise extrema over a frequency grid, as CSV.
    Sweep {
        /// Family spec JSON file
        spec: PathBuf,
        /// Lowest frequency of the grid
        #[arg(long, allow_negative_numbers = true)]
        wmin: f64,
        /// Highest frequency of the grid
        #[arg(long, allow_negative_numbers = true)]
        wmax: f64,
        /// Number of grid points
        #[arg(long)]
        points: usize,
        /// Logarithmic instead of linear spacing.
        #[arg(long)]
        log: bool,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a vertex result against the brute-force oracle.
    Verify {
        /// Family spec JSON file
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "pointwise")]
        analysis: AnalysisArg,
        /// Random members to sample; 0 enumerates corners only.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Seed for the random sampler
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use a coefficient grid with this many points per interval instead of random samples.
        #[arg(long)]
        grid: Option<usize>,
        /// Frequency ω in rad/s
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        omega: f64,
        #[arg(long, value_enum, default_value = "min-re")]
        quantity: QuantityArg,
        /// Restrict to the frequency band [W1, W2] in rad/s
        #[arg(long, num_args = 2, value_names = ["W1", "W2"], allow_negative_numbers = true)]
        band: Option<Vec<f64>>,
        #[arg(long, hide = true)]
        drop_tuple: Option<VertexIndexTuple>,
    },
}

fn band(v: Option<Vec<f64>>) -> Result<Option<BandSpec>, CliError> {
    v.map(|v| BandSpec::new(v[0], v[1]).map_err(CliError::from)).transpose()
}

fn run(cli: Cli) -> Result<commands::Outcome, CliError> {
    let env = env_tolerance_file();
    match cli.command {
        Command::Vertices { spec } => commands::vertices(&Context::load(&spec, env)?),
        Command::Pointwise { spec, omega, quantity } => {
            commands::pointwise(&Context::load(&spec, env)?, omega, quantity.into())
        }
        Command::GammaIndex { spec } => commands::gamma_index(&Context::load(&spec, env)?),
        Command::Spr { spec, closed_loop, gamma, band: b } => {
            let ctx = Context::load(&spec, env)?;
            let mode = match (closed_loop, gamma, band(b)?) {
                (true, Some(gamma), _) => SprMode::ClosedLoop { gamma },
                (false, Some(_), _) => return Err(CliError::Argument("--gamma needs --closed-loop".into())),
                (_, _, Some(b)) => SprMode::Band(b),
                _ => SprMode::Family,
            };
            commands::spr(&ctx, mode)
        }
        Command::Sweep { spec, wmin, wmax, points, log, out } => {
            commands::sweep(&Context::load(&spec, env)?, &SweepOptions { wmin, wmax, points, log }, out.as_deref())
        }
        Command::Verify { spec, analysis, samples, seed, grid, omega, quantity, band: b, drop_tuple } => {
            let ctx = Context::load(&spec, env)?;
            let analysis = match analysis {
                AnalysisArg::Pointwise => VerifyAnalysis::Pointwise,
                AnalysisArg::Band => VerifyAnalysis::Band,
                AnalysisArg::Gamma => VerifyAnalysis::Gamma,
            };
            let options = VerifyOptions {
                analysis,
                omega,
                quantity: quantity.into(),
                band: band(b)?,
                samples,
                seed,
                grid,
                drop_tuple,
            };
            commands::verify(&ctx, &options)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprintln!("{}", out.summary);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
