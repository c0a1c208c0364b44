use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphtile::lab::{
    bottleneck_graph, edit_distance_to_bottleneck, ess_checker, finite_komlos_check,
    komlos_threshold, search_counterexamples, verify_tightness, BottleneckGraphSpec, EditMode,
    InternalRule,
};
use graphtile::{
    bottleneck_graphon, fcov_graph, fcov_graphon, format_rational, ftil_graph, parse_rational,
    til_graph, til_graphon, verify_duality, ChromaticProfile, Error, Graph, Rational, StepGraphon,
};
use serde_json::json;

use crate::report::Report;
use crate::Output;

#[derive(Parser)]
#[command(
    name = "graphtile",
    version,
    about = "Exact tiling numbers, fractional covers and extremal constructions"
)]
pub struct Cli {
    /// Print the report as JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Chromatic number, smallest colour class and critical chromatic number.
    ChiCr(PatternArg),
    /// Maximum number of vertex-disjoint copies of a pattern in a host.
    Til(PatternHost),
    /// Fractional tiling number of a host.
    Ftil(PatternHost),
    /// Fractional cover number of a host.
    Fcov(PatternHost),
    /// Tiling number of a step graphon.
    TilGraphon(PatternGraphon),
    /// Fractional cover number of a step graphon.
    FcovGraphon(PatternGraphon),
    /// Solves both graphon LPs and checks that their values agree.
    VerifyDuality(PatternGraphon),
    /// Minimum-degree threshold for a target fraction x.
    Threshold(PatternX),
    /// Writes the bottleneck graphon, or with --n the bottleneck graph.
    Bottleneck(BottleneckArgs),
    /// Checks that the bottleneck graphon is tight at the threshold.
    Tightness(PatternX),
    /// Random search for graphons above the threshold with small fcov.
    Search(SearchArgs),
    /// Exact tiling number of the n-vertex bottleneck graph.
    FiniteCheck(FiniteArgs),
    /// Tests the Turán structure statement on one graphon.
    EssCheck(PatternGraphon),
    /// Edge edits separating a host from the bottleneck class.
    EditDistance(EditArgs),
}

#[derive(Args)]
pub struct PatternArg {
    /// Pattern graph file.
    #[arg(long)]
    pattern: PathBuf,
}

#[derive(Args)]
pub struct PatternHost {
    #[arg(long)]
    pattern: PathBuf,
    /// Host graph file.
    #[arg(long)]
    host: PathBuf,
}

#[derive(Args)]
pub struct PatternGraphon {
    #[arg(long)]
    pattern: PathBuf,
    /// Step graphon file.
    #[arg(long)]
    graphon: PathBuf,
}

#[derive(Args)]
pub struct PatternX {
    #[arg(long)]
    pattern: PathBuf,
    /// Target fraction, as an integer or p/q.
    #[arg(long, value_parser = exact)]
    x: Rational,
}

#[derive(Args)]
pub struct BottleneckArgs {
    /// Pattern whose critical chromatic number is used.
    #[arg(long, required_unless_present = "chi_cr", conflicts_with = "chi_cr")]
    pattern: Option<PathBuf>,
    /// Critical chromatic number given directly.
    #[arg(long, value_parser = exact)]
    chi_cr: Option<Rational>,
    #[arg(long, value_parser = exact)]
    x: Rational,
    /// Vertex count; emits a graph instead of a graphon.
    #[arg(long)]
    n: Option<usize>,
    /// Inside the bottleneck class: none, clique, a density p/q (graphon),
    /// or an edge list such as 0-1,1-2 (graph).
    #[arg(long, default_value = "none")]
    internal: String,
}

#[derive(Args)]
pub struct SearchArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long, value_parser = exact)]
    x: Rational,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest part count sampled.
    #[arg(long, default_value_t = 6)]
    k_max: usize,
}

#[derive(Args)]
pub struct FiniteArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long, value_parser = exact)]
    x: Rational,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Local,
}

#[derive(Args)]
pub struct EditArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long, value_parser = exact)]
    x: Rational,
    #[arg(long, required_unless_present = "chi_cr", conflicts_with = "chi_cr")]
    pattern: Option<PathBuf>,
    #[arg(long, value_parser = exact)]
    chi_cr: Option<Rational>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    /// Local-search restarts.
    #[arg(long, default_value_t = 32)]
    restarts: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn exact(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|_| format!("expected an integer or p/q, got '{s}'"))
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DualityDiscrepancy { .. } | Error::Certificate(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load<T: FromStr<Err = Error>>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    text.parse().map_err(|e: Error| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn chi_cr_of(pattern: &Option<PathBuf>, given: &Option<Rational>) -> Result<Rational, Failure> {
    match (pattern, given) {
        (_, Some(c)) => Ok(c.clone()),
        (Some(p), None) => Ok(ChromaticProfile::of(&load::<Graph>(p)?)?.chi_cr),
        (None, None) => unreachable!("clap requires one of --pattern and --chi-cr"),
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

pub fn run(command: &Command, json: bool) -> Result<Output, Failure> {
    let report = match command {
        Command::ChiCr(a) => {
            let h: Graph = load(&a.pattern)?;
            let p = ChromaticProfile::of(&h)?;
            Report::new("chi-cr")
                .field("chi", p.chi)
                .field("ell", p.ell)
                .field("order", p.order)
                .field("chi_cr", format_rational(&p.chi_cr))
                .field("coloring", p.witness.classes())
        }
        Command::Til(a) => {
            let (h, g): (Graph, Graph) = (load(&a.pattern)?, load(&a.host)?);
            Report::new("til").merge(til_graph(&h, &g)?)
        }
        Command::Ftil(a) => {
            let (h, g): (Graph, Graph) = (load(&a.pattern)?, load(&a.host)?);
            Report::new("ftil").merge(ftil_graph(&h, &g)?)
        }
        Command::Fcov(a) => {
            let (h, g): (Graph, Graph) = (load(&a.pattern)?, load(&a.host)?);
            Report::new("fcov").merge(fcov_graph(&h, &g)?)
        }
        Command::TilGraphon(a) => {
            let (f, w): (Graph, StepGraphon) = (load(&a.pattern)?, load(&a.graphon)?);
            let (value, tiling) = til_graphon(&f, &w)?;
            Report::new("til-graphon")
                .field("value", format_rational(&value))
                .field("tiling", tiling)
        }
        Command::FcovGraphon(a) => {
            let (f, w): (Graph, StepGraphon) = (load(&a.pattern)?, load(&a.graphon)?);
            let (value, cover) = fcov_graphon(&f, &w)?;
            Report::new("fcov-graphon")
                .field("value", format_rational(&value))
                .merge(cover)
        }
        Command::VerifyDuality(a) => {
            let (f, w): (Graph, StepGraphon) = (load(&a.pattern)?, load(&a.graphon)?);
            Report::new("verify-duality")
                .merge(verify_duality(&f, &w)?)
                .field("equal", true)
        }
        Command::Threshold(a) => {
            let h: Graph = load(&a.pattern)?;
            Report::new("threshold").merge(komlos_threshold(&h, &a.x)?)
        }
        Command::Bottleneck(a) => return bottleneck(a, json),
        Command::Tightness(a) => {
            let h: Graph = load(&a.pattern)?;
            let t = verify_tightness(&h, &a.x)?;
            let ok = t.passed();
            Report::new("tightness")
                .field("x", format_rational(&a.x))
                .merge(t)
                .require(ok)
        }
        Command::Search(a) => {
            let h: Graph = load(&a.pattern)?;
            let s = search_counterexamples(&h, &a.x, a.trials, a.seed, a.k_max)?;
            let ok = s.passed();
            let min = s.min_fcov().map(format_rational);
            Report::new("search")
                .field("x", format_rational(&a.x))
                .field("violation_count", s.violations.len())
                .field("min_fcov", min)
                .merge(s)
                .require(ok)
        }
        Command::FiniteCheck(a) => {
            let h: Graph = load(&a.pattern)?;
            let f = finite_komlos_check(&h, &a.x, a.n)?;
            let ok = f.meets_floor();
            Report::new("finite-check")
                .field("x", format_rational(&a.x))
                .merge(f)
                .require(ok)
        }
        Command::EssCheck(a) => {
            let (h, w): (Graph, StepGraphon) = (load(&a.pattern)?, load(&a.graphon)?);
            let v = ess_checker(&h, &w)?;
            let ok = !v.is_violation();
            Report::new("ess-check")
                .merge(v)
                .field("conclusion_holds", ok)
                .require(ok)
        }
        Command::EditDistance(a) => {
            let g: Graph = load(&a.host)?;
            let chi_cr = chi_cr_of(&a.pattern, &a.chi_cr)?;
            let mode = match a.mode {
                Mode::Exact => EditMode::Exact,
                Mode::Local => EditMode::LocalSearch {
                    restarts: a.restarts,
                    seed: a.seed,
                },
            };
            let mut r = Report::new("edit-distance")
                .field("x", format_rational(&a.x))
                .field("chi_cr", format_rational(&chi_cr));
            if let Mode::Local = a.mode {
                r = r.field("seed", a.seed).field("restarts", a.restarts);
            }
            r.merge(edit_distance_to_bottleneck(&g, &a.x, &chi_cr, mode)?)
        }
    };
    Ok(Output::Report(report))
}

fn bottleneck(a: &BottleneckArgs, json: bool) -> Result<Output, Failure> {
    let chi_cr = chi_cr_of(&a.pattern, &a.chi_cr)?;
    let (kind, text, spec) = match a.n {
        None => {
            let internal = match a.internal.as_str() {
                "none" => graphtile::rational::zero(),
                "clique" => graphtile::rational::one(),
                s => exact(s).map_err(|e| usage(format!("--internal: {e}")))?,
            };
            let w = bottleneck_graphon(&a.x, &chi_cr, &internal)?;
            let spec = json!({
                "x": format_rational(&a.x),
                "chi_cr": format_rational(&chi_cr),
                "internal": format_rational(&internal),
            });
            ("graphon", w.to_text(), spec)
        }
        Some(n) => {
            let internal = match a.internal.as_str() {
                "none" => InternalRule::None,
                "clique" => InternalRule::Clique,
                s => InternalRule::Edges(parse_edges(s)?),
            };
            let spec = BottleneckGraphSpec::new(n, a.x.clone(), chi_cr, internal)?;
            let g = bottleneck_graph(&spec)?;
            let sizes = spec.class_sizes()?;
            let mut v = serde_json::to_value(&spec).expect("spec serialises");
            v["class_sizes"] = json!(sizes);
            ("graph", g.to_text(), v)
        }
    };
    if !json {
        return Ok(Output::Text(text));
    }
    Ok(Output::Report(
        Report::new("bottleneck")
            .field("kind", kind)
            .merge(spec)
            .field(kind, text),
    ))
}

fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>, Failure> {
    let bad = || {
        usage(format!(
            "--internal: expected none, clique or an edge list like 0-1,1-2, got '{s}'"
        ))
    };
    s.split(',')
        .map(|pair| {
            let (u, v) = pair.split_once('-').ok_or_else(bad)?;
            Ok((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?))
        })
        .collect()
}
