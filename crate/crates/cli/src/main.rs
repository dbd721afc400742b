//! Command-line front end: generate two-mode networks from one-mode inputs,
//! compute their statistics, extract backbones, and run the two built-in
//! experiments. Machine-readable data goes to files, summaries to stdout,
//! errors to stderr; exit code 2 flags bad invocations, 1 runtime failures.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::Rng;

use bigraph::{
    characteristics_csv, characteristics_summary_csv, degrees, extract_backbone,
    four_cycle_ratio, generate_two_mode_with_stats, karate_club, load_edge_list,
    read_incidence, recovery_csv, run_characteristics_experiment, run_recovery_experiment,
    skewness, watts_strogatz, write_edge_list, write_incidence, CharacteristicsConfig,
    CliqueMethod, Model, ModelConfig, OneModeNetwork, OutsideProbMode, RecoveryConfig,
};

#[derive(Parser)]
#[command(
    name = "bigraph",
    about = "Generate two-mode group-membership networks from one-mode social networks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a two-mode network and write it as incidence CSV
    Generate(GenerateArgs),
    /// Print degree skewness and the four-cycle null ratio of an incidence CSV
    Stats(StatsArgs),
    /// Extract the projection backbone of an incidence CSV as an edge list
    Backbone(BackboneArgs),
    /// Run the characteristics sweep (models x p-grid x replicates)
    ExperimentCharacteristics(ExperimentCharacteristicsArgs),
    /// Run the recovery experiment against the karate club network
    ExperimentRecovery(ExperimentRecoveryArgs),
    /// Export bundled datasets
    Datasets(DatasetsArgs),
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct InputSource {
    /// Edge-list file (whitespace/comma separated labels, # comments)
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Use the bundled karate club network
    #[arg(long, group = "source")]
    karate: bool,
    /// Generate a Watts-Strogatz substrate: n,k,beta (e.g. 50,6,0.1)
    #[arg(long, group = "source", value_name = "N,K,BETA", value_parser = parse_ws_spec)]
    ws: Option<WsSpec>,
}

#[derive(Clone, Copy, Debug)]
struct WsSpec {
    n: usize,
    k: usize,
    beta: f64,
}

fn parse_ws_spec(text: &str) -> Result<WsSpec, String> {
    let parts: Vec<&str> = text.split(',').collect();
    let [n, k, beta] = parts.as_slice() else {
        return Err("expected three comma-separated values: n,k,beta".into());
    };
    Ok(WsSpec {
        n: n.trim().parse().map_err(|e| format!("bad n: {e}"))?,
        k: k.trim().parse().map_err(|e| format!("bad k: {e}"))?,
        beta: beta.trim().parse().map_err(|e| format!("bad beta: {e}"))?,
    })
}

fn parse_model(text: &str) -> Result<Model, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn parse_outside_mode(text: &str) -> Result<OutsideProbMode, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn parse_clique_method(text: &str) -> Result<CliqueMethod, String> {
    match text {
        "greedy" => Ok(CliqueMethod::Greedy),
        "uniform" => Ok(CliqueMethod::Uniform),
        other => Err(format!("unknown clique method {other:?} (greedy|uniform)")),
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: InputSource,
    /// Group-formation model: teams, clubs or organizations
    #[arg(long, value_parser = parse_model)]
    model: Model,
    /// Tuning parameter in [0, 1]
    #[arg(long)]
    p: f64,
    /// Number of groups to generate
    #[arg(long)]
    groups: u32,
    /// Blau-space dimensionality (organizations only)
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Outside-niche success probability: one-minus-p or p (organizations only)
    #[arg(long = "outside-mode", value_parser = parse_outside_mode, default_value = "one-minus-p")]
    outside_mode: OutsideProbMode,
    /// Maximal-clique sampler: greedy or uniform
    #[arg(long = "clique-method", value_parser = parse_clique_method, default_value = "greedy")]
    clique_method: CliqueMethod,
    /// RNG seed; drawn from OS entropy and printed when omitted
    #[arg(long)]
    seed: Option<u64>,
    /// Output incidence CSV path
    #[arg(long)]
    output: PathBuf,
    /// Also dump the embedding coordinates (agent,x1..xd) to this CSV
    /// (organizations only)
    #[arg(long = "blau-csv")]
    blau_csv: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Incidence CSV to analyze
    #[arg(long)]
    incidence: PathBuf,
    /// Curveball replicates behind the four-cycle ratio
    #[arg(long = "null-replicates", default_value_t = 25)]
    null_replicates: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BackboneArgs {
    /// Incidence CSV to extract from
    #[arg(long)]
    incidence: PathBuf,
    /// Significance level of the one-tailed upper test
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Curveball replicates behind the null quantiles (>= 20)
    #[arg(long, default_value_t = 100)]
    replicates: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Output edge-list path
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct ExperimentCharacteristicsArgs {
    #[arg(long)]
    seed: Option<u64>,
    /// Directory for characteristics.csv and characteristics_summary.csv
    #[arg(long = "output-dir")]
    output_dir: PathBuf,
    /// Replicates per (model, p) cell
    #[arg(long, default_value_t = 25)]
    replicates: u32,
    /// Curveball replicates behind each cell's four-cycle ratio
    #[arg(long = "null-replicates", default_value_t = 25)]
    null_replicates: usize,
    /// Groups generated per cell
    #[arg(long, default_value_t = 50)]
    groups: u32,
}

#[derive(Args)]
struct ExperimentRecoveryArgs {
    #[arg(long)]
    seed: Option<u64>,
    /// Directory for recovery.csv
    #[arg(long = "output-dir")]
    output_dir: PathBuf,
    /// Groups generated per model
    #[arg(long, default_value_t = 1000)]
    groups: u32,
    /// Curveball replicates behind the backbone (>= 20)
    #[arg(long, default_value_t = 100)]
    replicates: usize,
}

#[derive(Args)]
struct DatasetsArgs {
    /// Export the karate club edge list
    #[arg(long, required = true)]
    karate: bool,
    /// Output edge-list path
    #[arg(long)]
    output: PathBuf,
}

fn main() {
    let cli = Cli::parse();
    configure_thread_pool();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn configure_thread_pool() {
    if let Ok(value) = std::env::var("BIGRAPH_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

/// Resolve the seed, drawing from OS entropy (and saying so) when absent.
fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s: u64 = rand::rng().random();
            println!("seed: {s} (drawn from OS entropy; pass --seed {s} to reproduce)");
            s
        }
    }
}

/// Write via a temp file in the target directory plus rename, so interrupted
/// runs never leave partial output behind.
fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
        .context("creating temporary file")?;
    tmp.write_all(contents.as_bytes())
        .context("writing temporary file")?;
    tmp.persist(path)
        .with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn load_source(source: &InputSource, seed: u64) -> Result<OneModeNetwork> {
    if let Some(path) = &source.input {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        return Ok(load_edge_list(&text)?);
    }
    if source.karate {
        return Ok(karate_club());
    }
    if let Some(ws) = source.ws {
        let mut rng = bigraph::seed::rng_for(seed, &[bigraph::seed::stream::NETWORK]);
        return Ok(watts_strogatz(ws.n, ws.k, ws.beta, &mut rng)?);
    }
    bail!("no input source given");
}

fn degree_summary(name: &str, values: &[usize]) -> String {
    if values.is_empty() {
        return format!("{name} degrees: none");
    }
    let min = values.iter().min().unwrap();
    let max = values.iter().max().unwrap();
    let mean = values.iter().sum::<usize>() as f64 / values.len() as f64;
    format!("{name} degrees: min {min}, mean {mean:.3}, max {max}")
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Generate(args) => {
            let seed = resolve_seed(args.seed);
            let net = load_source(&args.source, seed)?;
            let mut cfg = ModelConfig::new(args.model, args.p, args.groups, seed);
            cfg.d = args.d;
            cfg.outside_prob_mode = args.outside_mode;
            cfg.clique_method = args.clique_method;
            let (bip, stats) = generate_two_mode_with_stats(&net, &cfg)?;
            write_atomically(&args.output, &write_incidence(&bip)?)?;
            if let Some(blau_path) = &args.blau_csv {
                if args.model != Model::Organizations {
                    bail!("--blau-csv only applies to the organizations model");
                }
                let blau = bigraph::embed_classical_mds(
                    &bigraph::geodesic_distances(&net),
                    args.d,
                )?;
                let labels: Vec<String> =
                    (0..net.node_count()).map(|i| net.label(i).into_owned()).collect();
                write_atomically(blau_path, &blau.coordinates_csv(&labels))?;
                println!("embedding coordinates -> {}", blau_path.display());
            }
            let (agent_deg, group_deg) = degrees(&bip);
            println!(
                "generated {} agents x {} groups ({} memberships) -> {}",
                bip.agent_count(),
                bip.group_count(),
                bip.membership_count(),
                args.output.display()
            );
            println!("{}", degree_summary("agent", &agent_deg));
            println!("{}", degree_summary("group", &group_deg));
            if stats.newcomer_fallbacks > 0 {
                println!(
                    "warning: newcomer pool exhausted {} time(s); incumbents filled in",
                    stats.newcomer_fallbacks
                );
            }
            if let Some(fill) = stats.mean_fill_rate {
                println!("mean niche fill rate: {fill:.3}");
            }
            Ok(())
        }
        Command::Stats(args) => {
            let seed = resolve_seed(args.seed);
            let text = std::fs::read_to_string(&args.incidence)
                .with_context(|| format!("reading {}", args.incidence.display()))?;
            let bip = read_incidence(&text)?;
            let (agent_deg, group_deg) = degrees(&bip);
            println!(
                "agents: {}, groups: {}, memberships: {}",
                bip.agent_count(),
                bip.group_count(),
                bip.membership_count()
            );
            let agent_values: Vec<f64> = agent_deg.iter().map(|&d| d as f64).collect();
            let group_values: Vec<f64> = group_deg.iter().map(|&d| d as f64).collect();
            println!("agent degree skewness: {:.6}", skewness(&agent_values)?);
            println!("group degree skewness: {:.6}", skewness(&group_values)?);
            let mut rng = bigraph::seed::rng_for(seed, &[bigraph::seed::stream::NULL_REPLICATE]);
            let stats = four_cycle_ratio(
                &bip,
                args.null_replicates,
                bigraph::default_curveball_iterations(&bip),
                &mut rng,
            )?;
            if stats.degenerate_null {
                println!(
                    "four-cycle ratio: undefined (observed {}, null mean 0 over {} replicates)",
                    stats.observed, args.null_replicates
                );
            } else {
                println!(
                    "four-cycle ratio: {:.6} (observed {}, null mean {:.3} over {} replicates)",
                    stats.ratio,
                    stats.observed,
                    stats.null_mean(),
                    args.null_replicates
                );
            }
            Ok(())
        }
        Command::Backbone(args) => {
            let seed = resolve_seed(args.seed);
            let text = std::fs::read_to_string(&args.incidence)
                .with_context(|| format!("reading {}", args.incidence.display()))?;
            let bip = read_incidence(&text)?;
            let mut rng = bigraph::seed::rng_for(seed, &[bigraph::seed::stream::BACKBONE]);
            let backbone = extract_backbone(&bip, args.alpha, args.replicates, &mut rng)?;
            write_atomically(&args.output, &write_edge_list(&backbone))?;
            println!(
                "backbone: {} nodes, {} edges (alpha {}, {} replicates) -> {}",
                backbone.node_count(),
                backbone.edge_count(),
                args.alpha,
                args.replicates,
                args.output.display()
            );
            println!("isolates in source memberships: {}", bip.isolate_count());
            Ok(())
        }
        Command::ExperimentCharacteristics(args) => {
            let seed = resolve_seed(args.seed);
            let mut cfg = CharacteristicsConfig::standard(seed);
            cfg.replicates = args.replicates;
            cfg.null_replicates = args.null_replicates;
            cfg.groups = args.groups;
            let report = run_characteristics_experiment(&cfg)?;
            std::fs::create_dir_all(&args.output_dir)
                .with_context(|| format!("creating {}", args.output_dir.display()))?;
            let rows_path = args.output_dir.join("characteristics.csv");
            let summary_path = args.output_dir.join("characteristics_summary.csv");
            write_atomically(&rows_path, &characteristics_csv(&report))?;
            write_atomically(&summary_path, &characteristics_summary_csv(&report))?;
            println!(
                "characteristics sweep: {} rows over {} cells -> {}",
                report.rows.len(),
                report.summaries.len(),
                rows_path.display()
            );
            for s in report.summaries.iter().filter(|s| s.group_skewness_flagged) {
                println!(
                    "flagged: {} at p={:.3} has non-positive mean group skewness ({:.3})",
                    s.model.name(),
                    s.p,
                    s.mean_group_skewness
                );
            }
            Ok(())
        }
        Command::ExperimentRecovery(args) => {
            let seed = resolve_seed(args.seed);
            let mut cfg = RecoveryConfig::standard(seed);
            cfg.groups = args.groups;
            cfg.backbone_replicates = args.replicates;
            let source = karate_club();
            let rows = run_recovery_experiment(&source, &cfg)?;
            std::fs::create_dir_all(&args.output_dir)
                .with_context(|| format!("creating {}", args.output_dir.display()))?;
            let path = args.output_dir.join("recovery.csv");
            write_atomically(&path, &recovery_csv(&rows))?;
            for row in &rows {
                println!(
                    "{}: simple matching {:.3}, correlation {:.3}, jaccard {:.3}, isolates {}",
                    row.model.name(),
                    row.similarity.simple_matching,
                    row.similarity.correlation,
                    row.similarity.jaccard,
                    row.isolates
                );
            }
            println!("recovery rows -> {}", path.display());
            Ok(())
        }
        Command::Datasets(args) => {
            let net = karate_club();
            write_atomically(&args.output, &write_edge_list(&net))?;
            println!(
                "karate club: {} nodes, {} edges -> {}",
                net.node_count(),
                net.edge_count(),
                args.output.display()
            );
            Ok(())
        }
    }
}
