//! Command-line front end: flag parsing into a [`RunConfig`] and the pipelines
//! behind each subcommand.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use coreviz::layout::{
    DEFAULT_DELTA, DEFAULT_EDGE_FRACTION, DEFAULT_EPSILON, DEFAULT_GAMMA, DEFAULT_SEED,
};
use coreviz::metrics::fingerprint_with;
use coreviz::render::render_svg;
use coreviz::{
    parse_edge_list, Analysis, ConfigError, GeneratorError, GeneratorSpec, Graph, GraphError,
    HubThresholds, LayoutConfig, RenderOptions,
};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(#[from] clap::Error),
    #[error("{0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Generator(#[from] GeneratorError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Parse(#[from] GraphError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            // --help and --version travel as clap errors but are not failures.
            CliError::Usage(e) if !e.use_stderr() => EXIT_OK,
            CliError::Usage(_) | CliError::Config(_) | CliError::Generator(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Parse(_) => EXIT_PARSE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Render,
    Analyze,
    Generate,
    Fingerprint,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Stdin,
    File(PathBuf),
    Generator(GeneratorSpec),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outputs {
    /// Main artifact; stdout when absent.
    pub out: Option<PathBuf>,
    pub coords: Option<PathBuf>,
    pub tree: Option<PathBuf>,
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub source: Source,
    pub largest_component: bool,
    pub outputs: Outputs,
    pub layout: LayoutConfig,
    pub render: RenderOptions,
    pub hubs: HubThresholds,
}

#[derive(Parser)]
#[command(
    name = "coreviz",
    version,
    about = "k-core decomposition layouts for large graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Draw a graph as an SVG and dump vertex coordinates.
    Render(RenderArgs),
    /// Dump coreness, shell cluster and component node per vertex.
    Analyze(AnalyzeArgs),
    /// Write a random graph as an edge list.
    Generate(GenerateArgs),
    /// Summarize the shell structure as JSON.
    Fingerprint(FingerprintArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Er,
    Ba,
}

#[derive(Args)]
struct ModelArgs {
    /// Random graph model.
    #[arg(long, value_enum)]
    model: Option<Model>,
    /// Number of vertices.
    #[arg(long = "n")]
    n: Option<usize>,
    /// Edges added per new vertex (ba).
    #[arg(long = "m")]
    m: Option<usize>,
    /// Expected mean degree (er).
    #[arg(long)]
    mean_degree: Option<f64>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct SourceArgs {
    /// Edge-list file; stdin when neither this nor --model is given.
    #[arg(long, conflicts_with = "model")]
    input: Option<PathBuf>,
    #[command(flatten)]
    model: ModelArgs,
    /// Keep only the largest connected component.
    #[arg(long)]
    largest_component: bool,
    /// Write the `id<TAB>token` map of dense vertex ids.
    #[arg(long)]
    labels_out: Option<PathBuf>,
}

#[derive(Args)]
struct LayoutArgs {
    /// Ring overlap, in (0, 1).
    #[arg(long, default_value_t = DEFAULT_EPSILON, value_parser = open_unit)]
    epsilon: f64,
    /// Distance scale between sibling components.
    #[arg(long, default_value_t = DEFAULT_DELTA, value_parser = positive)]
    delta: f64,
    /// Component diameter scale.
    #[arg(long, default_value_t = DEFAULT_GAMMA, value_parser = positive)]
    gamma: f64,
    /// Fraction of edges drawn, in [0, 1].
    #[arg(long, default_value_t = DEFAULT_EDGE_FRACTION, value_parser = closed_unit)]
    edge_fraction: f64,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    layout: LayoutArgs,
    /// SVG output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Coordinate dump; defaults to `<out>.coords.txt` when --out is given.
    #[arg(long)]
    coords_out: Option<PathBuf>,
    /// Omit the color and size legend.
    #[arg(long)]
    no_legend: bool,
    /// Canvas width and height in pixels.
    #[arg(long, default_value_t = 800, value_parser = clap::value_parser!(u32).range(1..))]
    canvas: u32,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Vertex dump; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Component tree as JSON.
    #[arg(long)]
    tree_out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Edge list output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FingerprintArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    layout: LayoutArgs,
    /// JSON output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Hubs have degree above this.
    #[arg(long, default_value_t = HubThresholds::default().degree_min)]
    hub_degree: usize,
    /// Hubs are anomalous below this coreness.
    #[arg(long, default_value_t = HubThresholds::default().coreness_max)]
    hub_coreness: u32,
}

fn parse_f64(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|e| e.to_string())
}

fn open_unit(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 1)"))
    }
}

fn closed_unit(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{v} is not a positive number"))
    }
}

fn usage(kind: ErrorKind, message: impl std::fmt::Display) -> CliError {
    CliError::Usage(Cli::command().error(kind, message))
}

impl ModelArgs {
    fn spec(&self) -> Result<Option<GeneratorSpec>, CliError> {
        let Some(model) = self.model else {
            for (flag, set) in [
                ("--n", self.n.is_some()),
                ("--m", self.m.is_some()),
                ("--mean-degree", self.mean_degree.is_some()),
            ] {
                if set {
                    return Err(usage(
                        ErrorKind::MissingRequiredArgument,
                        format!("{flag} requires --model"),
                    ));
                }
            }
            return Ok(None);
        };
        let n = self
            .n
            .ok_or_else(|| usage(ErrorKind::MissingRequiredArgument, "--model requires --n"))?;
        let spec = match model {
            Model::Er => {
                if self.m.is_some() {
                    return Err(usage(
                        ErrorKind::ArgumentConflict,
                        "--m applies to --model ba only",
                    ));
                }
                let mean_degree = self.mean_degree.ok_or_else(|| {
                    usage(
                        ErrorKind::MissingRequiredArgument,
                        "--model er requires --mean-degree",
                    )
                })?;
                GeneratorSpec::Er {
                    n,
                    mean_degree,
                    seed: self.seed,
                }
            }
            Model::Ba => {
                if self.mean_degree.is_some() {
                    return Err(usage(
                        ErrorKind::ArgumentConflict,
                        "--mean-degree applies to --model er only",
                    ));
                }
                let m = self.m.ok_or_else(|| {
                    usage(
                        ErrorKind::MissingRequiredArgument,
                        "--model ba requires --m",
                    )
                })?;
                GeneratorSpec::Ba {
                    n,
                    m,
                    seed: self.seed,
                }
            }
        };
        Ok(Some(spec))
    }
}

impl SourceArgs {
    fn source(&self) -> Result<Source, CliError> {
        Ok(match (&self.input, self.model.spec()?) {
            (Some(path), _) => Source::File(path.clone()),
            (None, Some(spec)) => Source::Generator(spec),
            (None, None) => Source::Stdin,
        })
    }
}

impl LayoutArgs {
    fn config(&self, seed: u64) -> Result<LayoutConfig, CliError> {
        let cfg = LayoutConfig {
            epsilon: self.epsilon,
            delta: self.delta,
            gamma: self.gamma,
            edge_fraction: self.edge_fraction,
            seed,
            ..LayoutConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn default_coords_path(svg: &Path) -> PathBuf {
    svg.with_extension("coords.txt")
}

/// Parses `argv` (program name first) into a validated configuration.
pub fn parse_flags<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let mut config = RunConfig {
        command: Command::Render,
        source: Source::Stdin,
        largest_component: false,
        outputs: Outputs::default(),
        layout: LayoutConfig::default(),
        render: RenderOptions::default(),
        hubs: HubThresholds::default(),
    };
    match cli.command {
        Commands::Render(args) => {
            config.command = Command::Render;
            config.source = args.source.source()?;
            config.largest_component = args.source.largest_component;
            config.layout = args.layout.config(args.source.model.seed)?;
            config.render.legend = !args.no_legend;
            config.render.canvas = args.canvas;
            config.outputs = Outputs {
                coords: args
                    .coords_out
                    .or_else(|| args.out.as_deref().map(default_coords_path)),
                out: args.out,
                tree: None,
                labels: args.source.labels_out,
            };
        }
        Commands::Analyze(args) => {
            config.command = Command::Analyze;
            config.source = args.source.source()?;
            config.largest_component = args.source.largest_component;
            config.layout.seed = args.source.model.seed;
            config.outputs = Outputs {
                out: args.out,
                coords: None,
                tree: args.tree_out,
                labels: args.source.labels_out,
            };
        }
        Commands::Generate(args) => {
            config.command = Command::Generate;
            config.source = match args.model.spec()? {
                Some(spec) => Source::Generator(spec),
                None => {
                    return Err(usage(
                        ErrorKind::MissingRequiredArgument,
                        "generate requires --model",
                    ))
                }
            };
            config.layout.seed = args.model.seed;
            config.outputs.out = args.out;
        }
        Commands::Fingerprint(args) => {
            config.command = Command::Fingerprint;
            config.source = args.source.source()?;
            config.largest_component = args.source.largest_component;
            config.layout = args.layout.config(args.source.model.seed)?;
            config.hubs = HubThresholds {
                degree_min: args.hub_degree,
                coreness_max: args.hub_coreness,
            };
            config.outputs = Outputs {
                out: args.out,
                coords: None,
                tree: None,
                labels: args.source.labels_out,
            };
        }
    }
    Ok(config)
}

struct Loaded {
    graph: Graph,
    labels: Option<Vec<String>>,
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn load(config: &RunConfig, stdin: &mut dyn Read) -> Result<Loaded, CliError> {
    let text = match &config.source {
        Source::Generator(spec) => {
            let graph = spec.generate()?;
            return Ok(restrict(config, graph, None));
        }
        Source::File(path) => fs::read_to_string(path).map_err(io_error(path))?,
        Source::Stdin => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(io_error(Path::new("<stdin>")))?;
            text
        }
    };
    let parsed = parse_edge_list(&text)?;
    if parsed.dropped_self_loops > 0 || parsed.dropped_duplicates > 0 {
        eprintln!(
            "warning: dropped {} self-loop(s) and {} duplicate edge(s)",
            parsed.dropped_self_loops, parsed.dropped_duplicates
        );
    }
    Ok(restrict(config, parsed.graph, Some(parsed.labels)))
}

fn restrict(config: &RunConfig, graph: Graph, labels: Option<Vec<String>>) -> Loaded {
    if !config.largest_component {
        return Loaded { graph, labels };
    }
    let (lcc, ids) = graph.largest_connected_component();
    let labels = ids
        .iter()
        .map(|&v| {
            labels
                .as_ref()
                .map_or_else(|| v.to_string(), |l| l[v].clone())
        })
        .collect();
    Loaded {
        graph: lcc,
        labels: Some(labels),
    }
}

fn emit(path: Option<&Path>, content: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, content).map_err(io_error(path)),
        None => stdout
            .write_all(content.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(io_error(Path::new("<stdout>"))),
    }
}

fn label_map(loaded: &Loaded) -> String {
    let n = loaded.graph.vertex_count();
    let mut out = String::new();
    for v in 0..n {
        let token = loaded
            .labels
            .as_ref()
            .map_or_else(|| v.to_string(), |l| l[v].clone());
        out.push_str(&format!("{v}\t{token}\n"));
    }
    out
}

/// Executes one pipeline. The main artifact goes to `stdout` when no output
/// path is configured.
pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let outputs = &config.outputs;
    let loaded = load(config, stdin)?;
    let g = &loaded.graph;
    let labels = loaded.labels.as_deref();
    if let Some(path) = &outputs.labels {
        emit(Some(path), &label_map(&loaded), stdout)?;
    }

    match config.command {
        Command::Generate => emit(outputs.out.as_deref(), &g.to_edge_list(labels), stdout),
        Command::Analyze => {
            let analysis = Analysis::new(g);
            if let Some(path) = &outputs.tree {
                emit(Some(path), &analysis.tree_json(), stdout)?;
            }
            emit(
                outputs.out.as_deref(),
                &analysis.vertex_dump(labels),
                stdout,
            )
        }
        Command::Render => {
            let analysis = Analysis::new(g);
            let layout = analysis.layout(g, &config.layout);
            if let Some(path) = &outputs.coords {
                emit(Some(path), &layout.coordinate_dump(labels), stdout)?;
            }
            emit(
                outputs.out.as_deref(),
                &render_svg(&layout, &config.render),
                stdout,
            )
        }
        Command::Fingerprint => {
            let mut json = fingerprint_with(g, &config.layout, config.hubs).to_json();
            json.push('\n');
            emit(outputs.out.as_deref(), &json, stdout)
        }
    }
}
