//! Command-line parsing for the `netmorph` binary.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::{run, Algorithm, Command, Format, HopChoice, RunConfig, RunReport, Source};
use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::metrics::{FitMethod, XminPolicy};

#[derive(Debug, Parser)]
#[command(name = "netmorph", version, about = "Generate and analyze complex networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Generate a graph and write it as a canonical edge list.
    Generate {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Degree exponent, effective diameter and community summary in one report.
    Stats(AnalysisArgs),
    /// Degree distribution, its CCDF and a power-law fit.
    DegreeDist(AnalysisArgs),
    /// Hop plot and effective diameter.
    Hopplot(AnalysisArgs),
    /// Community detection with size distribution and resolution advisory.
    Communities {
        #[command(flatten)]
        analysis: AnalysisArgs,
        #[arg(long, value_enum, default_value_t = AlgoArg::Louvain)]
        algo: AlgoArg,
        /// Run Girvan-Newman even above its edge limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Re-run the configuration echoed in a report.json.
    Replay {
        report: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    Er,
    Ws,
    Nws,
    Ba,
    Hk,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AlgoArg {
    Louvain,
    Gn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FitArg {
    Mle,
    Ccdf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum HopArg {
    Auto,
    Exact,
    Sample,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelArg>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Triad formation probability (hk).
    #[arg(long)]
    pub pt: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Directory for the run's artifacts.
    #[arg(long, default_value = "netmorph-out")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Record wall-clock timings in report.json.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    /// SNAP-style edge list.
    #[arg(long, conflicts_with = "model")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub directed: bool,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.9)]
    pub q: f64,
    #[arg(long, value_enum, default_value_t = FitArg::Mle)]
    pub fit: FitArg,
    /// Fixed lower cutoff, or `scan` to choose it by KS distance.
    #[arg(long, default_value = "scan", value_parser = parse_xmin)]
    pub xmin: XminPolicy,
    #[arg(long, value_enum, default_value_t = HopArg::Auto)]
    pub hop_mode: HopArg,
    /// BFS sources for sampled hop plots.
    #[arg(long)]
    pub sources: Option<usize>,
    #[arg(long, default_value_t = crate::community::DEFAULT_MIN_GAIN)]
    pub min_gain: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_xmin(s: &str) -> std::result::Result<XminPolicy, String> {
    if s == "scan" {
        return Ok(XminPolicy::KsScan);
    }
    match s.parse::<usize>() {
        Ok(x) if x > 0 => Ok(XminPolicy::Fixed(x)),
        _ => Err(format!("expected `scan` or a positive integer, got {s:?}")),
    }
}

fn missing(model: &str, flag: &str) -> Error {
    Error::argument(format!("model {model} needs --{flag}"))
}

impl ModelArgs {
    fn spec(&self, seed: u64) -> Result<Option<GenSpec>> {
        let Some(model) = self.model else {
            return Ok(None);
        };
        let n = self.n.ok_or_else(|| Error::argument("--model needs --n"))?;
        let spec = match model {
            ModelArg::Er => GenSpec::erdos_renyi(n, self.p.ok_or_else(|| missing("er", "p"))?, seed),
            ModelArg::Ws => GenSpec::watts_strogatz(
                n,
                self.k.ok_or_else(|| missing("ws", "k"))?,
                self.p.ok_or_else(|| missing("ws", "p"))?,
                seed,
            ),
            ModelArg::Nws => GenSpec::newman_watts_strogatz(
                n,
                self.k.ok_or_else(|| missing("nws", "k"))?,
                self.p.ok_or_else(|| missing("nws", "p"))?,
                seed,
            ),
            ModelArg::Ba => GenSpec::barabasi_albert(n, self.m.ok_or_else(|| missing("ba", "m"))?, seed),
            ModelArg::Hk => GenSpec::holme_kim(
                n,
                self.m.ok_or_else(|| missing("hk", "m"))?,
                self.pt.ok_or_else(|| missing("hk", "pt"))?,
                seed,
            ),
        };
        Ok(Some(spec))
    }
}

impl OutputArgs {
    fn apply(&self, config: &mut RunConfig) {
        config.format = match self.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        };
        config.timings = self.timings;
    }
}

impl AnalysisArgs {
    fn config(&self, command: Command) -> Result<RunConfig> {
        let source = match (&self.input, self.model.spec(self.seed)?) {
            (Some(path), None) => Source::Path(path.clone()),
            (None, Some(spec)) => Source::Generate(spec),
            (None, None) => return Err(Error::argument("one of --input or --model is required")),
            (Some(_), Some(_)) => return Err(Error::argument("--input and --model are mutually exclusive")),
        };
        let mut config = RunConfig::new(command, source, &self.output.out);
        config.directed = self.directed;
        config.seed = self.seed;
        config.q = self.q;
        config.fit_method = match self.fit {
            FitArg::Mle => FitMethod::Mle,
            FitArg::Ccdf => FitMethod::CcdfRegression,
        };
        config.xmin = self.xmin;
        config.hop_plot = match (self.hop_mode, self.sources) {
            (HopArg::Auto, None) => HopChoice::Auto,
            (HopArg::Exact, None) => HopChoice::Exact,
            (HopArg::Sample, s) | (HopArg::Auto, s @ Some(_)) => HopChoice::Sample { sources: s },
            (HopArg::Exact, Some(_)) => return Err(Error::argument("--sources only applies to sampled hop plots")),
        };
        config.min_gain = self.min_gain;
        self.output.apply(&mut config);
        Ok(config)
    }
}

impl Cli {
    /// Resolves the parsed arguments into a run configuration.
    pub fn config(&self) -> Result<RunConfig> {
        match &self.command {
            Sub::Generate { model, seed, output } => {
                let spec = model.spec(*seed)?.ok_or_else(|| Error::argument("generate needs --model"))?;
                let mut config = RunConfig::new(Command::Generate, Source::Generate(spec), &output.out);
                config.seed = *seed;
                output.apply(&mut config);
                Ok(config)
            }
            Sub::Stats(a) => a.config(Command::Stats),
            Sub::DegreeDist(a) => a.config(Command::DegreeDist),
            Sub::Hopplot(a) => a.config(Command::Hopplot),
            Sub::Communities { analysis, algo, allow_large } => {
                let mut config = analysis.config(Command::Communities)?;
                config.algorithm = match algo {
                    AlgoArg::Louvain => Algorithm::Louvain,
                    AlgoArg::Gn => Algorithm::Gn,
                };
                config.allow_large = *allow_large;
                Ok(config)
            }
            Sub::Replay { report, out } => RunConfig::from_report(report, out),
        }
    }
}

/// Parses arguments; `Err` carries clap's own help or usage error.
pub fn parse_args<I, T>(args: I) -> std::result::Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args)
}

fn execute(cli: &Cli) -> Result<RunReport> {
    super::configure_threads()?;
    run(&cli.config()?)
}

/// Entry point of the binary. Prints the report to stdout and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli).and_then(|r| Ok(serde_json::to_string_pretty(&r)?)) {
        Ok(text) => {
            println!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
