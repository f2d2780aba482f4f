//! `pebbling` — bounds on graph pebbling numbers.
//!
//! Generates the bundled graph families, prints ring-counting floors and
//! basic bounds, builds weighted-subtree certificates automatically, checks
//! certificate files, solves small graphs exactly, audits certificates
//! against unsolvable configurations, and reproduces the bundled
//! certificate tables. Every printed number is recomputed at invocation;
//! embedded expected values are consulted only by `tables --check`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};

use pebbling::bounds::{basic_bounds, ratio_floor, ratio_floor_graph, ratio_floor_report};
use pebbling::certificate::{
    parse_certificate, parse_certificate_for_graph, serialize_certificate_as, Certificate,
    Configuration,
};
use pebbling::exact::{
    pebbling_number_target, weight_lemma_check, AuditMode, ExactError, SolveLimits,
};
use pebbling::families::{by_name, FamilyError, FamilyGraph};
use pebbling::heuristic::{reference_certificate, run_heuristic, HeuristicError, HeuristicOptions};
use pebbling::{Graph, Rational, VertexId};

mod output;
mod tables;

use output::{Block, Format, KeyValues, Notes, Table};

/// Pebbling-number bounds from weighted-subtree certificates, with an exact
/// solver for small graphs.
#[derive(Parser)]
#[command(name = "pebbling", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Shorthand for `--format tsv`.
    #[arg(long, global = true, conflicts_with = "format")]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

impl Cli {
    fn effective_format(&self) -> Format {
        if self.tsv {
            Format::Tsv
        } else {
            self.format
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a bundled family graph (or re-serialize a graph file).
    Gen(GenArgs),
    /// Ring profile, certificate-ratio floor, and basic bounds per target.
    Bounds(BoundsArgs),
    /// Build a certificate automatically and report its ratio.
    Heuristic(HeuristicArgs),
    /// Check a certificate file and report its numbers.
    Validate(ValidateArgs),
    /// Exact pebbling numbers by exhaustive search.
    Exact(ExactArgs),
    /// Audit a certificate against unsolvable configurations.
    LemmaCheck(LemmaCheckArgs),
    /// Evaluate the bundled certificates for one family, next to
    /// previously published bounds.
    Tables(TablesArgs),
    /// Full report: basic bounds, floor, certificates, and exact value.
    Pipeline(PipelineArgs),
}

/// `--graph` accepts a family name or a path to a graph file.
#[derive(Args)]
struct GraphArg {
    /// Family name (petersen, blanusa1, blanusa2, flower<m>, cube<d>) or
    /// path to a graph file.
    #[arg(long)]
    graph: String,
}

/// A loaded graph, remembering family metadata when there is any.
enum LoadedGraph {
    Family(FamilyGraph),
    File(Graph),
}

impl LoadedGraph {
    fn graph(&self) -> &Graph {
        match self {
            LoadedGraph::Family(fam) => &fam.graph,
            LoadedGraph::File(g) => g,
        }
    }

    fn family(&self) -> Option<&FamilyGraph> {
        match self {
            LoadedGraph::Family(fam) => Some(fam),
            LoadedGraph::File(_) => None,
        }
    }
}

fn load_graph(spec: &str) -> Result<LoadedGraph> {
    match by_name(spec) {
        Ok(fam) => Ok(LoadedGraph::Family(fam)),
        Err(FamilyError::UnknownFamily(_)) => {
            let text = fs::read_to_string(spec).with_context(|| {
                format!("{spec:?} is neither a family name nor a readable graph file")
            })?;
            let g = Graph::parse(&text).with_context(|| format!("parsing graph file {spec:?}"))?;
            Ok(LoadedGraph::File(g))
        }
        Err(e) => Err(e.into()),
    }
}

/// Target selection shared by the per-target subcommands.
#[derive(Args)]
struct TargetSelect {
    /// Target vertex label.
    #[arg(long)]
    target: Option<String>,

    /// Run every vertex as target.
    #[arg(long, conflicts_with = "target")]
    all_targets: bool,

    /// Run one representative target per vertex class (bundled families
    /// only). The default for family graphs.
    #[arg(long, conflicts_with_all = ["target", "all_targets"])]
    class_targets: bool,
}

impl TargetSelect {
    /// The targets to run. Defaults to class representatives for bundled
    /// families and to every vertex otherwise.
    fn resolve(&self, loaded: &LoadedGraph) -> Result<Vec<VertexId>> {
        let g = loaded.graph();
        if let Some(label) = &self.target {
            return Ok(vec![g.require_vertex(label)?]);
        }
        if self.all_targets {
            return Ok(g.vertices().collect());
        }
        match loaded.family() {
            Some(fam) => fam
                .target_classes
                .iter()
                .map(|label| Ok(g.require_vertex(label)?))
                .collect(),
            None if self.class_targets => {
                bail!("--class-targets requires a bundled family graph")
            }
            None => Ok(g.vertices().collect()),
        }
    }
}

/// Exact-solver limits shared by `exact`, `lemma-check`, and `pipeline`.
#[derive(Args)]
struct LimitArgs {
    /// State-expansion budget for the exhaustive solver.
    #[arg(long, default_value_t = SolveLimits::default().max_states)]
    max_states: u64,

    /// Largest configuration size the solver will attempt.
    #[arg(long, default_value_t = SolveLimits::default().max_total_pebbles)]
    max_pebbles: u64,

    /// Worker threads for configuration enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl LimitArgs {
    fn to_limits(&self) -> SolveLimits {
        SolveLimits {
            max_states: self.max_states,
            max_total_pebbles: self.max_pebbles,
            jobs: self.jobs.max(1),
            ..SolveLimits::default()
        }
    }
}

/// Heuristic tuning knobs shared by `heuristic` and `pipeline`.
#[derive(Args)]
struct HeuristicKnobs {
    /// Exhaustive trunk-combination budget before the greedy fallback.
    #[arg(long, default_value_t = HeuristicOptions::default().path_combination_cap)]
    cap: usize,

    /// Extra length allowed when re-routing a trunk path.
    #[arg(long, default_value_t = HeuristicOptions::default().extra_path_length)]
    extra_path_length: u32,

    /// Skip both refinement passes.
    #[arg(long)]
    no_refine: bool,
}

impl HeuristicKnobs {
    fn to_options(&self) -> HeuristicOptions {
        HeuristicOptions {
            path_combination_cap: self.cap,
            extra_path_length: self.extra_path_length,
            enable_weight_reduction: !self.no_refine,
            enable_path_replacement: !self.no_refine,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    graph: GraphArg,

    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    graph: GraphArg,

    #[command(flatten)]
    targets: TargetSelect,
}

#[derive(Args)]
struct HeuristicArgs {
    #[command(flatten)]
    graph: GraphArg,

    #[command(flatten)]
    targets: TargetSelect,

    #[command(flatten)]
    knobs: HeuristicKnobs,

    /// Write the resulting certificate to a file (single target only).
    #[arg(long)]
    emit: Option<PathBuf>,

    /// Print the pipeline's decision log.
    #[arg(long)]
    log_decisions: bool,
}

#[derive(Args)]
struct ValidateArgs {
    /// Certificate file; its `graph` line names a family or a graph file.
    certificate: PathBuf,

    /// Resolve the certificate against this graph instead of the one its
    /// `graph` line names.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    graph: GraphArg,

    #[command(flatten)]
    targets: TargetSelect,

    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "samples"])))]
struct LemmaCheckArgs {
    #[command(flatten)]
    graph: GraphArg,

    /// Certificate file to audit.
    #[arg(long)]
    certificate: PathBuf,

    /// Check every unsolvable configuration of size up to π(G, r) − 1.
    #[arg(long)]
    exhaustive: bool,

    /// Check a seeded random sample of configurations instead.
    #[arg(long, requires = "rng_seed")]
    samples: Option<u64>,

    /// RNG seed for --samples.
    #[arg(long)]
    rng_seed: Option<u64>,

    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct TablesArgs {
    /// Which table: petersen | b1 | b2 | flower:<m> | cube:<d>.
    selector: String,

    /// Compare the recomputed ratios against the embedded expected values
    /// and fail on any mismatch.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct PipelineArgs {
    #[command(flatten)]
    graph: GraphArg,

    #[command(flatten)]
    targets: TargetSelect,

    #[command(flatten)]
    knobs: HeuristicKnobs,

    #[command(flatten)]
    limits: LimitArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.effective_format();
    match run(cli.command, format) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// 3 for budget/limit exhaustion, 1 for everything else. Usage errors exit
/// with 2 from the parser before this is reached.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<ExactError>() {
            if matches!(
                e,
                ExactError::BudgetExceeded { .. }
                    | ExactError::TooManyVertices { .. }
                    | ExactError::TooManyPebbles { .. }
            ) {
                return 3;
            }
        }
        if let Some(HeuristicError::ResourceLimit(_)) = cause.downcast_ref::<HeuristicError>() {
            return 3;
        }
    }
    1
}

fn run(command: Command, format: Format) -> Result<u8> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Bounds(args) => cmd_bounds(args, format),
        Command::Heuristic(args) => cmd_heuristic(args, format),
        Command::Validate(args) => cmd_validate(args, format),
        Command::Exact(args) => cmd_exact(args, format),
        Command::LemmaCheck(args) => cmd_lemma_check(args, format),
        Command::Tables(args) => cmd_tables(args, format),
        Command::Pipeline(args) => cmd_pipeline(args, format),
    }
}

fn print_blocks(blocks: &[Block], format: Format) {
    print!("{}", output::render(blocks, format));
}

fn disp(r: Rational) -> String {
    r.to_display_string()
}

fn join_u32(values: &[u32], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Nonzero counts as `label:count`, space-separated.
fn config_summary(config: &Configuration, g: &Graph) -> String {
    let pairs = config.to_pairs(g);
    if pairs.is_empty() {
        return "(empty)".to_string();
    }
    pairs
        .iter()
        .map(|(label, count)| format!("{label}:{count}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Graph-level summary block shared by `bounds` and `pipeline`.
fn graph_block(g: &Graph) -> Result<KeyValues> {
    let bb = basic_bounds(g);
    Ok(KeyValues {
        kind: "graph",
        pairs: vec![
            ("graph", g.name().to_string()),
            ("vertices", g.vertex_count().to_string()),
            ("edges", g.edge_count().to_string()),
            ("diameter", g.diameter().to_string()),
            ("pi_lower_basic", bb.lower.to_string()),
            ("pi_upper_basic", bb.upper.to_string()),
            ("ratio_floor_graph", ratio_floor_graph(g)?.to_string()),
        ],
    })
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let loaded = load_graph(&args.graph.graph)?;
    let text = loaded.graph().to_text();
    match &args.out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_bounds(args: BoundsArgs, format: Format) -> Result<u8> {
    let loaded = load_graph(&args.graph.graph)?;
    let g = loaded.graph();
    let targets = args.targets.resolve(&loaded)?;

    let mut table = Table::new(
        "bound",
        vec![
            "target",
            "ecc",
            "ring_sizes",
            "sparse_rings",
            "crowded_rings",
            "ratio_floor",
        ],
    );
    for &r in &targets {
        let report = ratio_floor_report(g, r)?;
        let rings: Vec<u32> = report.ring_sizes.iter().map(|&s| s as u32).collect();
        table.push(vec![
            g.label(r).to_string(),
            report.eccentricity.to_string(),
            join_u32(&rings, ","),
            join_u32(&report.sparse_indices, ","),
            join_u32(&report.crowded_indices, ","),
            report.floor.to_string(),
        ]);
    }

    let blocks = vec![Block::KeyValues(graph_block(g)?), Block::Table(table)];
    print_blocks(&blocks, format);
    Ok(0)
}

fn cmd_heuristic(args: HeuristicArgs, format: Format) -> Result<u8> {
    let loaded = load_graph(&args.graph.graph)?;
    let g = loaded.graph();
    let targets = args.targets.resolve(&loaded)?;
    if args.emit.is_some() && targets.len() != 1 {
        eprintln!("error: --emit requires exactly one target (use --target)");
        return Ok(2);
    }
    let opts = args.knobs.to_options();

    let mut table = Table::new(
        "heuristic",
        vec![
            "target",
            "lambda",
            "pi_bound",
            "total_weight",
            "omega_min",
            "strategies",
        ],
    );
    let mut logs: Vec<Block> = Vec::new();
    for &r in &targets {
        let report = run_heuristic(g, r, &opts)
            .with_context(|| format!("heuristic failed at target {}", g.label(r)))?;
        let cert = &report.certificate;
        table.push(vec![
            g.label(r).to_string(),
            disp(report.lambda),
            cert.pebbling_upper_bound(g)?.to_string(),
            disp(cert.total_weight()),
            disp(cert.min_combined_weight(g)),
            cert.strategies().len().to_string(),
        ]);
        if args.log_decisions {
            let mut lines = vec![format!("# decisions for target {}", g.label(r))];
            lines.extend(report.decisions.iter().cloned());
            logs.push(Block::Notes(Notes {
                kind: "decision",
                lines,
            }));
        }
        if let Some(path) = &args.emit {
            // Certificates on file-backed graphs reference the file so that
            // `validate` can resolve them without a --graph override.
            let graph_ref = match &loaded {
                LoadedGraph::Family(_) => g.name(),
                LoadedGraph::File(_) => args.graph.graph.as_str(),
            };
            let text = serialize_certificate_as(cert, g, graph_ref);
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote certificate to {}", path.display());
        }
    }

    let mut blocks = vec![Block::Table(table)];
    blocks.extend(logs);
    print_blocks(&blocks, format);
    Ok(0)
}

fn cmd_validate(args: ValidateArgs, format: Format) -> Result<u8> {
    let text = fs::read_to_string(&args.certificate)
        .with_context(|| format!("reading {}", args.certificate.display()))?;
    let (g, cert): (Graph, Certificate) = match &args.graph {
        Some(spec) => {
            let loaded = load_graph(spec)?;
            let cert = parse_certificate_for_graph(&text, loaded.graph())?;
            match loaded {
                LoadedGraph::Family(fam) => (fam.graph, cert),
                LoadedGraph::File(g) => (g, cert),
            }
        }
        None => parse_certificate(&text)?,
    };

    let violations = cert.validate(&g);
    let mut blocks = vec![Block::KeyValues(KeyValues {
        kind: "certificate",
        pairs: vec![
            ("file", args.certificate.display().to_string()),
            ("graph", g.name().to_string()),
            ("root", g.label(cert.root()).to_string()),
            ("strategies", cert.strategies().len().to_string()),
            ("total_weight", disp(cert.total_weight())),
        ],
    })];

    if !violations.is_empty() {
        let lines = violations.iter().map(|v| v.to_string()).collect();
        blocks.push(Block::Notes(Notes {
            kind: "violation",
            lines,
        }));
        print_blocks(&blocks, format);
        eprintln!(
            "certificate INVALID: {} violation(s)",
            violations.len()
        );
        return Ok(1);
    }

    let lambda = cert.wfl_ratio(&g)?;
    let floor = ratio_floor(&g, cert.root())?;
    let surplus = cert.surplus_report(&g)?;
    blocks.push(Block::KeyValues(KeyValues {
        kind: "evaluation",
        pairs: vec![
            ("omega_min", disp(surplus.omega_min)),
            ("lambda", disp(lambda)),
            ("pi_bound", cert.pebbling_upper_bound(&g)?.to_string()),
            ("ratio_floor", floor.to_string()),
        ],
    }));
    if lambda < Rational::from_int(floor as i64) {
        blocks.push(Block::Notes(Notes {
            kind: "warning",
            lines: vec![format!(
                "lambda {} fell below the ring-counting floor {floor}; this indicates a bug",
                disp(lambda)
            )],
        }));
    }

    let mut table = Table::new("surplus", vec!["vertex", "combined_weight", "surplus"]);
    for &(v, s) in &surplus.per_vertex_surplus {
        table.push(vec![
            g.label(v).to_string(),
            disp(s + surplus.omega_min),
            disp(s),
        ]);
    }
    blocks.push(Block::Table(table));
    print_blocks(&blocks, format);
    Ok(0)
}

fn cmd_exact(args: ExactArgs, format: Format) -> Result<u8> {
    let loaded = load_graph(&args.graph.graph)?;
    let g = loaded.graph();
    let targets = args.targets.resolve(&loaded)?;
    let limits = args.limits.to_limits();

    let mut table = Table::new(
        "exact",
        vec!["target", "pi", "witness_size", "witness", "exhaustive"],
    );
    let mut pi_max = 0u64;
    for &r in &targets {
        let result = pebbling_number_target(g, r, &limits)
            .with_context(|| format!("exact solve failed at target {}", g.label(r)))?;
        pi_max = pi_max.max(result.pi);
        table.push(vec![
            g.label(r).to_string(),
            result.pi.to_string(),
            result.witness_unsolvable.total().to_string(),
            config_summary(&result.witness_unsolvable, g),
            result.exhaustive.to_string(),
        ]);
    }

    let mut blocks = vec![Block::Table(table)];
    if targets.len() > 1 {
        blocks.push(Block::KeyValues(KeyValues {
            kind: "summary",
            pairs: vec![
                ("targets", targets.len().to_string()),
                ("pi_max_over_targets", pi_max.to_string()),
            ],
        }));
    }
    print_blocks(&blocks, format);
    Ok(0)
}

fn cmd_lemma_check(args: LemmaCheckArgs, format: Format) -> Result<u8> {
    let loaded = load_graph(&args.graph.graph)?;
    let g = loaded.graph();
    let text = fs::read_to_string(&args.certificate)
        .with_context(|| format!("reading {}", args.certificate.display()))?;
    let cert = parse_certificate_for_graph(&text, g)?;
    let limits = args.limits.to_limits();

    let (mode, mode_name) = if args.exhaustive {
        (AuditMode::Exhaustive, "exhaustive".to_string())
    } else {
        let count = args.samples.expect("clap group guarantees --samples");
        let seed = args.rng_seed.expect("clap requires --rng-seed");
        (
            AuditMode::Sample { count, seed },
            format!("sample (count {count}, seed {seed})"),
        )
    };

    let report = weight_lemma_check(g, &cert, &limits, mode)?;
    let mut pairs = vec![
        ("graph", g.name().to_string()),
        ("root", g.label(cert.root()).to_string()),
        ("mode", mode_name),
        (
            "pi",
            report.pi.map_or("-".to_string(), |p| p.to_string()),
        ),
        ("size_cap", report.size_cap.to_string()),
        ("exhaustive", report.exhaustive.to_string()),
        (
            "configurations_tested",
            report.configurations_tested.to_string(),
        ),
        ("unsolvable_count", report.unsolvable_count.to_string()),
        ("violations", report.violations.to_string()),
    ];
    match report.tightest_ratio {
        Some(ratio) => {
            pairs.push(("tightest_ratio", disp(ratio)));
            if let Some((config, idx)) = &report.tightest_example {
                pairs.push(("tightest_strategy", (idx + 1).to_string()));
                pairs.push(("tightest_config", config_summary(config, g)));
            }
        }
        None => pairs.push(("tightest_ratio", "-".to_string())),
    }

    let mut blocks = vec![Block::KeyValues(KeyValues {
        kind: "audit",
        pairs,
    })];
    if !report.violation_examples.is_empty() {
        let lines = report
            .violation_examples
            .iter()
            .map(|(config, idx)| {
                format!(
                    "strategy {} exceeded by configuration {}",
                    idx + 1,
                    config_summary(config, g)
                )
            })
            .collect();
        blocks.push(Block::Notes(Notes {
            kind: "violation",
            lines,
        }));
    }
    print_blocks(&blocks, format);

    if report.violations > 0 {
        eprintln!(
            "audit FAILED: {} violation(s) of the weight inequality",
            report.violations
        );
        return Ok(1);
    }
    Ok(0)
}

fn parse_table_selector(selector: &str) -> Result<FamilyGraph> {
    let normalized = selector.to_ascii_lowercase().replace(':', "");
    let name = match normalized.as_str() {
        "b1" => "blanusa1",
        "b2" => "blanusa2",
        other => other,
    };
    match by_name(name) {
        Ok(fam) => Ok(fam),
        Err(FamilyError::UnknownFamily(_)) => bail!(
            "unknown table selector {selector:?} (expected petersen | b1 | b2 | flower:<m> | cube:<d>)"
        ),
        Err(e) => Err(e.into()),
    }
}

fn cmd_tables(args: TablesArgs, format: Format) -> Result<u8> {
    let fam = parse_table_selector(&args.selector)?;
    let g = &fam.graph;

    let mut table = Table::new(
        "row",
        vec![
            "graph",
            "target",
            "lambda",
            "prior_lambda",
            "ratio_floor",
            "pi_upper",
        ],
    );
    let mut lambda_max: Option<Rational> = None;
    let mut mismatches: Vec<String> = Vec::new();

    for label in &fam.target_classes {
        let r = g.require_vertex(label)?;
        let cert = reference_certificate(&fam, label)
            .with_context(|| format!("no bundled certificate for target {label}"))?;
        let lambda = cert.wfl_ratio(g)?;
        let floor = ratio_floor(g, r)?;
        let prior = tables::prior_lambda(&fam.family, label);
        table.push(vec![
            g.name().to_string(),
            label.clone(),
            disp(lambda),
            prior.map_or("-".to_string(), disp),
            floor.to_string(),
            cert.pebbling_upper_bound(g)?.to_string(),
        ]);
        if args.check {
            match tables::expected_lambda(&fam.family, label) {
                Some(expected) if expected == lambda => {}
                Some(expected) => mismatches.push(format!(
                    "target {label}: recomputed lambda {} != expected {}",
                    disp(lambda),
                    disp(expected)
                )),
                None => mismatches.push(format!("target {label}: no expected value embedded")),
            }
        }
        lambda_max = Some(match lambda_max {
            Some(best) if best >= lambda => best,
            _ => lambda,
        });
    }

    let lambda_max = lambda_max.ok_or_else(|| anyhow!("family has no target classes"))?;
    table.push(vec![
        g.name().to_string(),
        "(graph)".to_string(),
        disp(lambda_max),
        tables::prior_lambda_graph(&fam.family).map_or("-".to_string(), disp),
        ratio_floor_graph(g)?.to_string(),
        (lambda_max.floor() + 1).to_string(),
    ]);

    let mut blocks = vec![
        Block::KeyValues(KeyValues {
            kind: "table",
            pairs: vec![
                ("table", fam.family.name()),
                (
                    "prior_lambda",
                    "previously published bounds, shown for comparison (not computed here)"
                        .to_string(),
                ),
            ],
        }),
        Block::Table(table),
    ];

    let failed = !mismatches.is_empty();
    if args.check {
        if failed {
            blocks.push(Block::Notes(Notes {
                kind: "mismatch",
                lines: mismatches,
            }));
        } else {
            blocks.push(Block::KeyValues(KeyValues {
                kind: "check",
                pairs: vec![("check", "ok".to_string())],
            }));
        }
    }
    print_blocks(&blocks, format);
    if failed {
        eprintln!("table check FAILED");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_pipeline(args: PipelineArgs, format: Format) -> Result<u8> {
    let loaded = load_graph(&args.graph.graph)?;
    let g = loaded.graph();
    let targets = args.targets.resolve(&loaded)?;
    let opts = args.knobs.to_options();
    let limits = args.limits.to_limits();
    let exact_in_reach = g.vertex_count() <= limits.max_vertices;

    let mut table = Table::new(
        "pipeline",
        vec![
            "target",
            "pi_lower",
            "ratio_floor",
            "heuristic_lambda",
            "bundled_lambda",
            "pi_bound",
            "exact_pi",
            "sandwich",
        ],
    );
    let mut notes: Vec<String> = Vec::new();
    let mut sandwich_violations: Vec<String> = Vec::new();
    let mut pi_bound_max = 0u64;
    let mut exact_max: Option<u64> = Some(0);

    for &r in &targets {
        let label = g.label(r).to_string();
        // Single-target lower bound: n pebbles spread thin, or a short
        // stack at eccentricity distance.
        let pi_lower = (g.vertex_count() as u64).max(1 << g.eccentricity(r));
        let floor = ratio_floor(g, r)?;

        let heur = run_heuristic(g, r, &opts)
            .with_context(|| format!("heuristic failed at target {label}"))?;
        let heur_lambda = heur.lambda;
        let mut best_cert = heur.certificate;

        let bundled = match loaded.family() {
            Some(fam) => match reference_certificate(fam, &label) {
                Ok(cert) => {
                    let lambda = cert.wfl_ratio(g)?;
                    if lambda < heur_lambda {
                        best_cert = cert;
                    }
                    Some(lambda)
                }
                Err(HeuristicError::UnsupportedTarget { .. }) => None,
                Err(HeuristicError::ResourceLimit(reason)) => {
                    notes.push(format!(
                        "bundled certificate for {label} skipped: {reason}"
                    ));
                    None
                }
                Err(e) => return Err(e.into()),
            },
            None => None,
        };

        let pi_bound = best_cert.pebbling_upper_bound(g)?;
        pi_bound_max = pi_bound_max.max(pi_bound);

        let (exact_text, sandwich) = if exact_in_reach {
            let result = pebbling_number_target(g, r, &limits)
                .with_context(|| format!("exact solve failed at target {label}"))?;
            let pi = result.pi;
            exact_max = exact_max.map(|m| m.max(pi));
            let ok = pi_lower <= pi && pi <= pi_bound;
            if !ok {
                sandwich_violations.push(format!(
                    "target {label}: expected {pi_lower} <= pi <= {pi_bound}, got pi = {pi}"
                ));
            }
            (
                pi.to_string(),
                if ok { "ok" } else { "VIOLATED" }.to_string(),
            )
        } else {
            exact_max = None;
            ("-".to_string(), "-".to_string())
        };

        table.push(vec![
            label,
            pi_lower.to_string(),
            floor.to_string(),
            disp(heur_lambda),
            bundled.map_or("-".to_string(), disp),
            pi_bound.to_string(),
            exact_text,
            sandwich,
        ]);
    }

    if !exact_in_reach {
        notes.push(format!(
            "exact solve skipped: {} vertices exceeds the {}-vertex solver limit",
            g.vertex_count(),
            limits.max_vertices
        ));
    }

    let mut summary = vec![("pi_bound_max_over_targets", pi_bound_max.to_string())];
    if let Some(pi) = exact_max {
        summary.push(("exact_pi_max_over_targets", pi.to_string()));
    }

    let mut blocks = vec![Block::KeyValues(graph_block(g)?), Block::Table(table)];
    if !notes.is_empty() {
        blocks.push(Block::Notes(Notes {
            kind: "note",
            lines: notes,
        }));
    }
    blocks.push(Block::KeyValues(KeyValues {
        kind: "summary",
        pairs: summary,
    }));
    print_blocks(&blocks, format);

    if !sandwich_violations.is_empty() {
        for v in &sandwich_violations {
            eprintln!("sandwich check FAILED: {v}");
        }
        return Ok(1);
    }
    Ok(0)
}
