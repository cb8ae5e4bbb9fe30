//! Reproducible command runs: configuration, execution and artifact output.
//!
//! Every command computes all of its outputs in memory first and only then
//! writes them, each through a temporary file that is renamed into place.
//! A failed run therefore leaves no partial artifacts behind.

mod args;
mod table;

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use args::{main_with_args, parse_args, Cli};
use table::{Cell, Table};

use crate::community::{
    community_sizes_with, girvan_newman, louvain, modularity, resolution_advisory, GnOptions, GnStep, GnTarget,
    Partition, ResolutionAdvisory, DEFAULT_EDGE_LIMIT, DEFAULT_MIN_GAIN,
};
use crate::error::{Error, Result};
use crate::generators::{generate, GenSpec, GenStats};
use crate::graph::{load_edge_list, DegreeMode, Graph, LoadReport, NodeIdMap};
use crate::metrics::{
    ccdf, degree_histogram, fit_power_law, hop_plot, FitMethod, HopPlot, HopPlotMode, PowerLawFit, XminPolicy,
    DEFAULT_SAMPLE_SOURCES,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Graphs up to this many nodes get an exact hop plot under [`HopChoice::Auto`].
pub const AUTO_EXACT_MAX_NODES: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Generate,
    Stats,
    DegreeDist,
    Hopplot,
    Communities,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Generate => "generate",
            Command::Stats => "stats",
            Command::DegreeDist => "degree-dist",
            Command::Hopplot => "hopplot",
            Command::Communities => "communities",
        }
    }
}

/// Where the graph comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// SNAP-style edge list on disk.
    Path(PathBuf),
    /// A generated graph.
    Generate(GenSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum HopChoice {
    /// Exact up to [`AUTO_EXACT_MAX_NODES`] nodes, sampled beyond.
    #[default]
    Auto,
    Exact,
    /// `sources` defaults to `min(node_count, 256)`.
    Sample { sources: Option<usize> },
}

impl HopChoice {
    fn resolve(self, node_count: usize, seed: u64) -> HopPlotMode {
        let sampled = |s: Option<usize>| HopPlotMode::Sample {
            sources: s.unwrap_or(DEFAULT_SAMPLE_SOURCES).min(node_count),
            seed,
        };
        match self {
            HopChoice::Auto if node_count <= AUTO_EXACT_MAX_NODES => HopPlotMode::Exact,
            HopChoice::Auto => sampled(None),
            HopChoice::Exact => HopPlotMode::Exact,
            HopChoice::Sample { sources } => sampled(sources),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    #[default]
    Louvain,
    Gn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Everything that determines a run's outputs.
///
/// The output directory is not serialized, so the config echoed in a report
/// can be replayed into any directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub source: Source,
    #[serde(default)]
    pub directed: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_q")]
    pub q: f64,
    #[serde(default)]
    pub fit_method: FitMethod,
    #[serde(default)]
    pub xmin: XminPolicy,
    #[serde(default)]
    pub hop_plot: HopChoice,
    #[serde(default)]
    pub algorithm: Algorithm,
    /// Lift the Girvan–Newman edge limit.
    #[serde(default)]
    pub allow_large: bool,
    #[serde(default = "default_min_gain")]
    pub min_gain: f64,
    #[serde(default)]
    pub format: Format,
    /// Include wall-clock timings in the report (makes it non-reproducible).
    #[serde(default)]
    pub timings: bool,
    #[serde(skip)]
    pub out_dir: PathBuf,
}

fn default_q() -> f64 {
    0.9
}

fn default_min_gain() -> f64 {
    DEFAULT_MIN_GAIN
}

impl RunConfig {
    pub fn new(command: Command, source: Source, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            command,
            source,
            directed: false,
            seed: 0,
            q: default_q(),
            fit_method: FitMethod::default(),
            xmin: XminPolicy::default(),
            hop_plot: HopChoice::default(),
            algorithm: Algorithm::default(),
            allow_large: false,
            min_gain: default_min_gain(),
            format: Format::default(),
            timings: false,
            out_dir: out_dir.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.q > 0.0 && self.q <= 1.0) {
            return Err(Error::argument(format!("q must be in (0, 1], got {}", self.q)));
        }
        if self.min_gain.is_nan() || self.min_gain < 0.0 {
            return Err(Error::argument("min_gain must be non-negative"));
        }
        match &self.source {
            Source::Generate(_) if self.directed => return Err(Error::argument("generated graphs are undirected")),
            Source::Generate(spec) => spec.validate()?,
            Source::Path(_) if self.command == Command::Generate => {
                return Err(Error::argument("generate needs a model, not an input file"))
            }
            Source::Path(_) => {}
        }
        if let HopChoice::Sample { sources: Some(0) } = self.hop_plot {
            return Err(Error::argument("sample mode needs at least one source"));
        }
        Ok(())
    }

    /// Reads the config echoed in a previously written `report.json`.
    pub fn from_report(path: &Path, out_dir: impl Into<PathBuf>) -> Result<RunConfig> {
        #[derive(Deserialize)]
        struct Echo {
            schema_version: u32,
            config: RunConfig,
        }
        let echo: Echo = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        if echo.schema_version != SCHEMA_VERSION {
            return Err(Error::argument(format!("unsupported report schema version {}", echo.schema_version)));
        }
        Ok(RunConfig { out_dir: out_dir.into(), ..echo.config })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeResult {
    pub mode: DegreeMode,
    pub max_degree: Option<usize>,
    /// Exponent of the fitted power law, `P(k) ~ k^-gamma`.
    pub gamma: Option<f64>,
    pub fit: Option<PowerLawFit>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HopResult {
    pub q: f64,
    pub effective_diameter: Option<f64>,
    pub h_max: Option<usize>,
    /// BFS sources actually used.
    pub sources: Option<usize>,
    pub exact: Option<bool>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommunityResult {
    pub algorithm: Algorithm,
    pub modularity: Option<f64>,
    pub communities: Option<usize>,
    /// Community-size exponent. Null when the fit failed or the partition
    /// is flagged as biased.
    pub sigma: Option<f64>,
    pub sigma_fit: Option<PowerLawFit>,
    pub sigma_note: Option<String>,
    pub advisory: Option<ResolutionAdvisory>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub note: Option<String>,
    pub graph: Option<GraphSummary>,
    pub load: Option<LoadReport>,
    pub generation: Option<GenStats>,
    pub degree: Option<DegreeResult>,
    pub hop_plot: Option<HopResult>,
    pub community: Option<CommunityResult>,
    /// Files written next to the report, in write order.
    pub outputs: Vec<String>,
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

struct Input {
    graph: Graph,
    ids: NodeIdMap,
    load: Option<LoadReport>,
    generation: Option<GenStats>,
}

fn read_input(config: &RunConfig) -> Result<Input> {
    match &config.source {
        Source::Path(path) => {
            let wrap = |e: Error| Error::Input { path: path.display().to_string(), source: Box::new(e) };
            let file = File::open(path).map_err(|e| wrap(e.into()))?;
            let loaded = load_edge_list(BufReader::new(file), config.directed).map_err(wrap)?;
            Ok(Input { graph: loaded.graph, ids: loaded.ids, load: Some(loaded.report), generation: None })
        }
        Source::Generate(spec) => {
            let generated = generate(spec)?;
            let graph = generated.graph;
            let ids = NodeIdMap::identity(graph.node_count());
            Ok(Input { graph, ids, load: None, generation: Some(generated.stats) })
        }
    }
}

struct Timer {
    enabled: bool,
    start: Instant,
    phases: BTreeMap<String, f64>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer { enabled, start: Instant::now(), phases: BTreeMap::new() }
    }

    fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.phases.insert(name.to_string(), (now - self.start).as_secs_f64() * 1e3);
        self.start = now;
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.phases)
    }
}

/// Artifacts of one run, written together at the end.
struct Artifacts {
    files: Vec<(String, Vec<u8>)>,
}

impl Artifacts {
    fn new() -> Self {
        Artifacts { files: Vec::new() }
    }

    fn add(&mut self, name: impl Into<String>, bytes: Vec<u8>) {
        self.files.push((name.into(), bytes));
    }

    fn add_table(&mut self, stem: &str, table: &Table, format: Format) {
        match format {
            Format::Csv => self.add(format!("{stem}.csv"), table.to_csv()),
            Format::Json => self.add(format!("{stem}.json"), table.to_json()),
        }
    }

    fn add_json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<()> {
        self.add(name, json_bytes(value)?);
        Ok(())
    }

    fn names(&self) -> Vec<String> {
        self.files.iter().map(|(n, _)| n.clone()).collect()
    }

    fn write(self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let mut staged = Vec::with_capacity(self.files.len());
        for (name, bytes) in &self.files {
            let tmp = dir.join(format!(".{name}.tmp"));
            let mut f = File::create(&tmp)?;
            f.write_all(bytes)?;
            f.sync_all()?;
            staged.push((tmp, dir.join(name)));
        }
        for (tmp, dest) in staged {
            fs::rename(tmp, dest)?;
        }
        Ok(())
    }
}

fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn degree_mode(g: &Graph) -> DegreeMode {
    if g.is_directed() {
        DegreeMode::Out
    } else {
        DegreeMode::Total
    }
}

fn degree_result(g: &Graph, config: &RunConfig) -> DegreeResult {
    let mode = degree_mode(g);
    let hist = degree_histogram(g, mode);
    let (fit, error) = match fit_power_law(&hist, config.fit_method, config.xmin) {
        Ok(f) => (Some(f), None),
        Err(Error::Fit(msg)) => (None, Some(msg)),
        Err(e) => (None, Some(e.to_string())),
    };
    DegreeResult { mode, max_degree: hist.max_degree(), gamma: fit.map(|f| f.gamma), fit, error }
}

fn hop_result(g: &Graph, config: &RunConfig) -> (HopResult, Option<HopPlot>) {
    let empty = |error: String| HopResult {
        q: config.q,
        effective_diameter: None,
        h_max: None,
        sources: None,
        exact: None,
        error: Some(error),
    };
    if g.node_count() < 2 {
        return (empty("fewer than 2 nodes".into()), None);
    }
    match hop_plot(g, config.q, config.hop_plot.resolve(g.node_count(), config.seed)) {
        Ok(hp) => (
            HopResult {
                q: config.q,
                effective_diameter: Some(hp.effective_diameter),
                h_max: Some(hp.h_max),
                sources: Some(hp.sources),
                exact: Some(hp.exact),
                error: None,
            },
            Some(hp),
        ),
        Err(e) => (empty(e.to_string()), None),
    }
}

struct Detected {
    result: CommunityResult,
    partition: Partition,
    dendrogram: Option<Vec<GnStep>>,
}

fn detect_communities(g: &Graph, config: &RunConfig) -> Result<Detected> {
    let (partition, dendrogram) = match config.algorithm {
        Algorithm::Louvain => (louvain(g, config.seed, config.min_gain)?, None),
        Algorithm::Gn => {
            let options = GnOptions { edge_limit: (!config.allow_large).then_some(DEFAULT_EDGE_LIMIT) };
            let r = girvan_newman(g, GnTarget::MaxQ, options)?;
            (r.partition, Some(r.dendrogram))
        }
    };
    let q = modularity(g, &partition)?;
    let advisory = resolution_advisory(g, &partition);
    let sizes = community_sizes_with(&partition, config.fit_method, config.xmin);
    let (sigma, sigma_note) = if advisory.biased {
        (None, Some("suppressed: partition is biased by a giant community".to_string()))
    } else {
        (sizes.sigma(), sizes.fit_error.clone())
    };
    let result = CommunityResult {
        algorithm: config.algorithm,
        modularity: Some(q),
        communities: Some(partition.community_count()),
        sigma,
        sigma_fit: sizes.fit,
        sigma_note,
        advisory: Some(advisory),
        error: None,
    };
    Ok(Detected { result, partition, dendrogram })
}

fn float(x: f64) -> Cell {
    Cell::Float(x)
}

fn int(x: usize) -> Cell {
    Cell::Int(x as u64)
}

/// Runs one command, writes its artifacts into `config.out_dir` and returns
/// the report (also written as `report.json`).
pub fn run(config: &RunConfig) -> Result<RunReport> {
    config.validate()?;
    let mut timer = Timer::new(config.timings);
    let input = read_input(config)?;
    timer.lap("input");
    let g = &input.graph;

    let mut report = RunReport {
        schema_version: SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        note: (g.node_count() == 0).then(|| "empty graph".to_string()),
        graph: Some(GraphSummary { nodes: g.node_count(), edges: g.edge_count(), directed: g.is_directed() }),
        load: input.load.clone(),
        generation: input.generation,
        degree: None,
        hop_plot: None,
        community: None,
        outputs: Vec::new(),
        timings_ms: None,
    };
    let mut out = Artifacts::new();

    match config.command {
        Command::Generate => {
            out.add("graph.edges", g.to_canonical_string().into_bytes());
        }
        Command::Stats => {
            if g.node_count() > 0 {
                report.degree = Some(degree_result(g, config));
                timer.lap("degree");
                report.hop_plot = Some(hop_result(g, config).0);
                timer.lap("hop_plot");
                report.community = Some(match detect_communities(g, config) {
                    Ok(d) => d.result,
                    Err(e) => CommunityResult {
                        algorithm: config.algorithm,
                        modularity: None,
                        communities: None,
                        sigma: None,
                        sigma_fit: None,
                        sigma_note: None,
                        advisory: None,
                        error: Some(e.to_string()),
                    },
                });
                timer.lap("communities");
            }
        }
        Command::DegreeDist => {
            let hist = degree_histogram(g, degree_mode(g));
            let pdf = Table::new(["k", "pk"], hist.pdf().into_iter().map(|(k, p)| vec![int(k), float(p)]));
            let tail = if hist.n() == 0 { Vec::new() } else { ccdf(&hist)? };
            let ccdf_table = Table::new(["k", "ccdf"], tail.into_iter().map(|(k, c)| vec![int(k), float(c)]));
            let degree = degree_result(g, config);
            timer.lap("degree");
            out.add_table("pdf", &pdf, config.format);
            out.add_table("ccdf", &ccdf_table, config.format);
            out.add_json("fit.json", &FitFile::new(&degree))?;
            report.degree = Some(degree);
        }
        Command::Hopplot => {
            if g.node_count() < 2 {
                return Err(Error::argument("hop plot needs at least 2 nodes"));
            }
            let hp = hop_plot(g, config.q, config.hop_plot.resolve(g.node_count(), config.seed))?;
            timer.lap("hop_plot");
            let total = hp.total_pairs();
            let rows = hp.pairs.iter().enumerate().skip(1).map(|(h, &p)| vec![int(h), float(p / 2.0), float(p / total)]);
            out.add_table("hopplot", &Table::new(["h", "g_h", "cumulative_fraction"], rows), config.format);
            report.hop_plot = Some(hop_result_from(&hp));
        }
        Command::Communities => {
            let detected = detect_communities(g, config)?;
            timer.lap("communities");
            let partition = Table::new(
                ["node_id", "community_id"],
                (0..g.node_count()).map(|v| {
                    vec![Cell::Int(input.ids.external(v).expect("id map covers graph")), int(detected.partition.community_of(v))]
                }),
            );
            let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
            for &s in detected.partition.sizes() {
                *hist.entry(s).or_default() += 1;
            }
            let sizes = Table::new(["size", "count"], hist.into_iter().map(|(s, c)| vec![int(s), int(c)]));
            out.add_table("partition", &partition, config.format);
            out.add_table("sizes", &sizes, config.format);
            out.add_json("advisory.json", &detected.result.advisory)?;
            if let Some(dendrogram) = &detected.dendrogram {
                out.add_json("dendrogram.json", dendrogram)?;
            }
            report.community = Some(detected.result);
        }
    }

    let mut names = out.names();
    names.push("report.json".into());
    report.outputs = names;
    report.timings_ms = timer.finish();
    out.add_json("report.json", &report)?;
    out.write(&config.out_dir)?;
    Ok(report)
}

fn hop_result_from(hp: &HopPlot) -> HopResult {
    HopResult {
        q: hp.q,
        effective_diameter: Some(hp.effective_diameter),
        h_max: Some(hp.h_max),
        sources: Some(hp.sources),
        exact: Some(hp.exact),
        error: None,
    }
}

/// Contents of `fit.json`.
#[derive(Serialize)]
struct FitFile {
    schema_version: u32,
    degree_mode: DegreeMode,
    gamma: Option<f64>,
    xmin: Option<usize>,
    ks: Option<f64>,
    method: Option<FitMethod>,
    n_tail: Option<usize>,
    error: Option<String>,
}

impl FitFile {
    fn new(d: &DegreeResult) -> Self {
        FitFile {
            schema_version: SCHEMA_VERSION,
            degree_mode: d.mode,
            gamma: d.fit.map(|f| f.gamma),
            xmin: d.fit.map(|f| f.xmin),
            ks: d.fit.map(|f| f.ks_stat),
            method: d.fit.map(|f| f.method),
            n_tail: d.fit.map(|f| f.n_tail),
            error: d.error.clone(),
        }
    }
}

/// Caps the global worker pool from `NETMORPH_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("NETMORPH_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::argument(format!("NETMORPH_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::argument(format!("cannot configure worker pool: {e}")))
}
