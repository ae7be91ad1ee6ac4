//! Command-line front end: argument definitions and the four subcommands.
//!
//! Exit codes: 0 for success, 1 for an invalid coloring or a failed
//! campaign, 2 for usage and input errors.

use std::collections::HashMap;
use std::io::{Read as _, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::colorer::{color_connected_subcubic_with, lift_to_subdivision, CaseLog, ColorError};
use crate::coloring::{
    verify_feasible, verify_good, verify_packing, verify_s_coloring, Coloring, Conflict, GoodColor, SSpec, SixColor,
};
use crate::fuzz::{cubic_repair_campaign, lemma_campaign, pipeline_campaign, Family, LemmaKind, PipelineReport};
use crate::graph::Graph;
use crate::lemmas::LemmaOptions;
use crate::oracle::{chi_p_exact, ChiP, DEFAULT_BUDGET};
use crate::{gen, io};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "subcubic-pack", version, about = "Packing colorings of subdivided subcubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a connected subcubic graph and lift the coloring to its subdivision.
    Color(ColorArgs),
    /// Check a coloring file against a graph.
    Verify(VerifyArgs),
    /// Exact packing chromatic number by exhaustive search.
    ChiP(ChiPArgs),
    /// Seeded random campaign with verification of every result.
    Fuzz(FuzzArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyLevel {
    Final,
    EveryStep,
}

#[derive(Debug, Clone, Args)]
pub struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(required_unless_present = "named", conflicts_with = "named")]
    pub input: Option<PathBuf>,
    /// Built-in graph: k4, petersen, prism_K, cycle_K, path_K.
    #[arg(long)]
    pub named: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Output prefix; writes PREFIX.good, PREFIX.packing and PREFIX.subdivision.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "final")]
    pub verify_level: VerifyLevel,
    /// Color each component separately instead of rejecting disconnected input.
    #[arg(long)]
    pub per_component: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    SSpec,
    Feasible,
    Good,
    Packing,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Coloring file with lines `vertexid colorname`.
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Separation sequence for `s-spec` mode, e.g. `1,1,2,2,3,3`.
    #[arg(long)]
    pub spec: Option<SSpec>,
}

#[derive(Debug, Args)]
pub struct ChiPArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Compute the value for the subdivision of the input.
    #[arg(long)]
    pub subdivide: bool,
    #[arg(long, default_value_t = 8)]
    pub max_k: u32,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Campaign {
    /// Generate, color, lift and verify.
    Pipeline,
    /// Cubic repair step from planted conflicting colorings.
    Repair,
    /// Lemma on two vertices sharing a level-2 color.
    LemmaPair,
    /// Lemma on a vertex at level 3.
    LemmaThree,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value = "cubic")]
    pub family: Family,
    #[arg(long, value_enum, default_value = "pipeline")]
    pub campaign: Campaign,
    /// Inclusive vertex count range `A..B`.
    #[arg(long, value_parser = parse_range, default_value = "4..16")]
    pub n_range: (usize, usize),
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Hill-climbing steps per lemma instance.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long, value_enum, default_value = "final")]
    pub verify_level: VerifyLevel,
    /// Also write the report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| format!("bad lower bound {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad upper bound {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Error carrying the exit code and a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub msg: String,
}

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, msg: msg.to_string() }
    }

    fn invalid(msg: impl ToString) -> Self {
        Failure { code: EXIT_INVALID, msg: msg.to_string() }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(Failure::usage)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

pub fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(name) = &input.named {
        return gen::named(name).map_err(Failure::usage);
    }
    let path = input.input.as_deref().expect("clap requires input or --named");
    let text = read_text(path)?;
    match input.format {
        Format::Edgelist => io::read_edge_list(&text).map_err(Failure::usage),
        Format::Graph6 => {
            let mut graphs = io::read_graph6_stream(&text).map_err(Failure::usage)?;
            if graphs.len() != 1 {
                return Err(Failure::usage(format!("expected one graph6 record, found {}", graphs.len())));
            }
            Ok(graphs.remove(0))
        }
    }
}

fn lemma_options(level: VerifyLevel) -> LemmaOptions {
    LemmaOptions { verify_every_step: level == VerifyLevel::EveryStep, ..LemmaOptions::default() }
}

fn color_error(e: ColorError) -> Failure {
    match e {
        ColorError::InternalCaseExhaustion { .. } | ColorError::InvalidInputColoring(_) => Failure::invalid(e),
        _ => Failure::usage(e),
    }
}

/// Good coloring and packing coloring of the subdivision, component by
/// component. Color 4 (and hence 8) may appear once in each component.
fn color_components(
    g: &Graph,
    opts: &LemmaOptions,
    log: &mut CaseLog,
) -> Result<(Coloring<GoodColor>, Coloring<u32>), Failure> {
    let edge_index: HashMap<(usize, usize), usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let mut good = vec![GoodColor::Six(SixColor::OneA); g.n()];
    let mut packing = vec![1u32; g.n() + g.edge_count()];
    for comp in g.components() {
        let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> =
            g.edges().filter(|(a, _)| local.contains_key(a)).map(|(a, b)| (local[&a], local[&b])).collect();
        let h = Graph::new(comp.len(), &edges).expect("induced subgraph is simple");
        let f = color_connected_subcubic_with(&h, opts, log).map_err(color_error)?;
        let p = lift_to_subdivision(&h, &f).map_err(color_error)?;
        for (i, &v) in comp.iter().enumerate() {
            good[v] = f[i];
            packing[v] = p.coloring[i];
        }
        for (j, (a, b)) in h.edges().enumerate() {
            let global = edge_index[&(comp[a].min(comp[b]), comp[a].max(comp[b]))];
            packing[g.n() + global] = p.coloring[h.n() + j];
        }
    }
    Ok((Coloring::new(good), Coloring::new(packing)))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

pub fn cmd_color(args: &ColorArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&args.graph)?;
    let opts = lemma_options(args.verify_level);
    let mut log = CaseLog::default();
    let (good, packing) = if args.per_component {
        color_components(&g, &opts, &mut log)?
    } else {
        let f = color_connected_subcubic_with(&g, &opts, &mut log).map_err(color_error)?;
        let p = lift_to_subdivision(&g, &f).map_err(color_error)?;
        (f, p.coloring)
    };
    let d = g.subdivide().dgraph;
    let conflicts = verify_packing(&d, &packing).map_err(Failure::invalid)?;
    let max_color = packing.iter().max().unwrap_or(0);
    let eights = packing.iter().filter(|&c| c == 8).count();
    if let Some(prefix) = &args.out {
        write_file(&with_ext(prefix, "good"), &io::write_coloring(&good))?;
        write_file(&with_ext(prefix, "packing"), &io::write_coloring(&packing))?;
        write_file(&with_ext(prefix, "subdivision"), &io::write_edge_list(&d))?;
    }
    let valid = conflicts.is_empty();
    let status = if valid { "VALID" } else { "INVALID" };
    let _ = writeln!(
        out,
        "{status} n={} subdivision_n={} max_color={max_color} color8_count={eights} conflicts={}",
        g.n(),
        d.n(),
        conflicts.len()
    );
    for c in conflicts.iter().take(20) {
        let _ = writeln!(out, "  {c}");
    }
    Ok(if valid { EXIT_OK } else { EXIT_INVALID })
}

fn report_conflicts(out: &mut dyn Write, conflicts: &[Conflict], extra: Option<String>) -> i32 {
    if conflicts.is_empty() && extra.is_none() {
        let _ = writeln!(out, "VALID");
        return EXIT_OK;
    }
    let _ = writeln!(out, "INVALID conflicts={}", conflicts.len());
    if let Some(e) = extra {
        let _ = writeln!(out, "  {e}");
    }
    for c in conflicts {
        let _ = writeln!(out, "  {c}");
    }
    EXIT_INVALID
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&args.graph)?;
    let text = read_text(&args.coloring)?;
    let n = g.n();
    let bad_input = |e: crate::coloring::ColoringError| Failure::usage(e);
    let code = match args.mode {
        Mode::Feasible => {
            let f: Coloring<SixColor> = io::read_coloring(&text, n).map_err(Failure::usage)?;
            report_conflicts(out, &verify_feasible(&g, &f).map_err(bad_input)?, None)
        }
        Mode::Good => {
            let f: Coloring<GoodColor> = io::read_coloring(&text, n).map_err(Failure::usage)?;
            let r = verify_good(&g, &f).map_err(bad_input)?;
            let extra = (r.four_count > 1).then(|| format!("color 4 used {} times", r.four_count));
            report_conflicts(out, &r.conflicts, extra)
        }
        Mode::Packing => {
            let f: Coloring<u32> = io::read_coloring(&text, n).map_err(Failure::usage)?;
            report_conflicts(out, &verify_packing(&g, &f).map_err(bad_input)?, None)
        }
        Mode::SSpec => {
            let spec = args.spec.clone().ok_or_else(|| Failure::usage("--spec is required for s-spec mode"))?;
            let f: Coloring<usize> = io::read_coloring(&text, n).map_err(Failure::usage)?;
            report_conflicts(out, &verify_s_coloring(&g, &spec, &f).map_err(bad_input)?, None)
        }
    };
    Ok(code)
}

pub fn cmd_chi_p(args: &ChiPArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut g = load_graph(&args.graph)?;
    if args.subdivide {
        g = g.subdivide().dgraph;
    }
    let r = chi_p_exact(&g, args.max_k, args.budget);
    let code = match r.chi {
        ChiP::Value { k, .. } => {
            let _ = writeln!(out, "chi_p={k} nodes={}", r.nodes_explored);
            EXIT_OK
        }
        ChiP::AboveBound(k) => {
            let _ = writeln!(out, "chi_p>{k} nodes={}", r.nodes_explored);
            EXIT_OK
        }
        ChiP::Aborted { k } => {
            let _ = writeln!(out, "ABORTED at k={k} nodes={}", r.nodes_explored);
            EXIT_INVALID
        }
    };
    Ok(code)
}

fn format_report(name: &str, r: &PipelineReport) -> String {
    let mut s = format!("{name}: instances={} failures={}\n", r.instances, r.failed);
    for (label, k) in &r.coverage {
        s += &format!("  {label} {k}\n");
    }
    for f in &r.failures {
        s += &format!("--- failure\n{f}\n");
    }
    s
}

pub fn cmd_fuzz(args: &FuzzArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = lemma_options(args.verify_level);
    let (n_lo, n_hi) = args.n_range;
    let report = match args.campaign {
        Campaign::Pipeline => format_report(
            &format!("pipeline {:?}", args.family),
            &pipeline_campaign(args.family, (n_lo, n_hi), args.count, args.seed, &opts),
        ),
        Campaign::Repair => format_report("repair", &cubic_repair_campaign((n_lo, n_hi), args.count, args.seed, &opts)),
        Campaign::LemmaPair | Campaign::LemmaThree => {
            let kind = if args.campaign == Campaign::LemmaPair { LemmaKind::Pair } else { LemmaKind::Three };
            let r = lemma_campaign(kind, args.count, args.seed, args.steps);
            let as_pipeline = PipelineReport {
                instances: r.instances,
                failed: r.stuck + r.invalid,
                coverage: r.coverage,
                failures: r.failures,
            };
            format_report(&format!("lemma {kind:?}"), &as_pipeline)
        }
    };
    let failed = !report.lines().next().is_some_and(|l| l.ends_with("failures=0"));
    let _ = out.write_all(report.as_bytes());
    if let Some(path) = &args.out {
        write_file(path, &report)?;
    }
    Ok(if failed { EXIT_INVALID } else { EXIT_OK })
}

/// Parses `args` (program name first) and runs the subcommand, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Color(a) => cmd_color(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::ChiP(a) => cmd_chi_p(a, out),
        Command::Fuzz(a) => cmd_fuzz(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("subcubic-pack").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..16"), Ok((4, 16)));
        assert_eq!(parse_range("1..=50"), Ok((1, 50)));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn color_petersen_and_k4() {
        let (code, out, _) = run_args(&["color", "--named", "petersen"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("VALID n=10 subdivision_n=25 max_color="), "{out}");
        let (code, out, _) = run_args(&["color", "--named", "k4"]);
        assert_eq!(code, 0);
        assert!(out.contains("color8_count=0") || out.contains("color8_count=1"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["color"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["color", "--named", "nosuch"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn chi_p_values() {
        assert_eq!(run_args(&["chi-p", "--named", "k4"]).1.lines().next().unwrap().split(' ').next(), Some("chi_p=4"));
        assert!(run_args(&["chi-p", "--named", "path_1"]).1.starts_with("chi_p=1 "));
        let (code, out, _) = run_args(&["chi-p", "--named", "petersen", "--max-k", "8", "--budget", "3"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("ABORTED"));
    }

    #[test]
    fn small_fuzz_runs() {
        let (code, out, _) =
            run_args(&["fuzz", "--family", "2deg", "--n-range", "1..20", "--count", "30", "--seed", "4"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("T2-"));
    }
}
