use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mptg::builder::Construction;
use mptg::families::{
    default_epsilon, fixture, gen_caterpillar_proper_mptg, gen_kmn_mptg, gen_kn_proper_mptg, FIXTURE_NAMES,
};
use mptg::graph::{make_caterpillar, make_complete, make_complete_bipartite, AugmentedMatrix};
use mptg::orderings::{check, Condition};
use mptg::recognition::{
    find_imperfect_subgraph, find_ordering, is_at_free, OrderingClass, RecognitionResult, SearchConfig,
    DEFAULT_PERFECTION_BOUND, DEFAULT_SEARCH_BOUND,
};
use mptg::repr::parse_rational;
use mptg::svg::render_svg;
use mptg::verify::{certify, is_proper, is_unit, CertifyError, Representation};
use mptg::{AnyRep, Execution, Graph, VertexOrdering};

/// Recognize, build and verify max-point-tolerance graph representations.
///
/// Graph files use the edge-list format: a header `n <count>` followed by
/// one `u v` pair of 0-based vertex indices per line; `#` starts a comment.
/// Vertices are printed 1-based (v1..vn).
#[derive(Parser)]
#[command(name = "mptg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every class verdict for a graph.
    Classify {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide one class; exit 0 for member, 1 for non-member.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check ordering conditions; exit 0 if all pass, 1 otherwise.
    CheckOrdering {
        graph: PathBuf,
        /// 1-based vertex labels, comma or space separated; identity if omitted.
        #[arg(long)]
        order: Option<String>,
        /// A condition name, or `all`.
        #[arg(long, default_value = "4point")]
        condition: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a certified proper representation as JSON.
    BuildRep {
        graph: PathBuf,
        /// Proper MPTG ordering as 1-based labels; searched for if omitted.
        #[arg(long)]
        order: Option<String>,
        /// Give every interval the same length.
        #[arg(long)]
        unit: bool,
        /// Interval length for --unit.
        #[arg(long, default_value = "1")]
        length: String,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: usize,
        /// Also print the canonical sequence to stderr.
        #[arg(long)]
        verbose: bool,
    },
    /// Check that a representation induces a graph; exit 0 on match, 1 on mismatch.
    VerifyRep {
        rep: PathBuf,
        graph: PathBuf,
        /// Defaults to the kind of the document (`p` fields or `t` fields).
        #[arg(long, value_enum)]
        semantics: Option<Semantics>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a representation from one of the explicit constructions.
    Gen {
        /// kn, kmn, caterpillar or fixture:<name>
        #[arg(long)]
        family: String,
        /// Size for kn; second side for kmn.
        #[arg(long)]
        n: Option<usize>,
        /// First side for kmn.
        #[arg(long)]
        m: Option<usize>,
        /// Epsilon for kmn, strictly between 0 and 1.
        #[arg(long)]
        eps: Option<String>,
        /// Leg counts for caterpillar, e.g. 2,0,1.
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
        /// Print the target graph as an edge list instead of the representation.
        #[arg(long)]
        emit_graph: bool,
    },
    /// Draw a representation as SVG.
    RenderSvg {
        rep: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Mptg,
    ProperMptg,
    ProperMaxtolCond,
    AtFree,
    Perfect,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Semantics {
    Mptg,
    Maxtol,
}

// stdout writes are fallible so a closed pipe ends the run instead of panicking
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*)?
    };
}

macro_rules! out_raw {
    ($($arg:tt)*) => {
        write!(io::stdout().lock(), $($arg)*)?
    };
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read_input(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

fn read_rep(path: &Path) -> Result<AnyRep> {
    AnyRep::from_json(&read_input(path)?).with_context(|| format!("parsing representation {}", path.display()))
}

fn ordering_for(g: &Graph, order: Option<&str>) -> Result<VertexOrdering> {
    let sigma = match order {
        Some(text) => VertexOrdering::parse_one_based(text)?,
        None => VertexOrdering::identity(g.n()),
    };
    if sigma.len() != g.n() {
        bail!("ordering has {} labels but the graph has {} vertices", sigma.len(), g.n());
    }
    Ok(sigma)
}

fn search(g: &Graph, class: OrderingClass, bound: usize) -> Result<RecognitionResult> {
    let config = SearchConfig {
        bound,
        execution: Execution::default(),
    };
    Ok(find_ordering(g, class, &config)?)
}

fn verdict_word(member: bool) -> &'static str {
    if member {
        "member"
    } else {
        "non-member"
    }
}

fn search_json(r: &RecognitionResult) -> Value {
    json!({
        "verdict": r.verdict,
        "witness": r.witness.as_ref().map(|w| w.as_slice().iter().map(|v| v + 1).collect::<Vec<_>>()),
        "nodes": r.stats.nodes,
        "prunes": r.stats.prunes,
        "necessary_only": r.necessary_only,
    })
}

fn search_text(label: &str, r: &RecognitionResult) -> String {
    match (&r.witness, r.necessary_only) {
        (Some(w), true) => format!("{label}: satisfiable, necessary condition only (ordering {})", w.to_one_based()),
        (Some(w), false) => format!("{label}: member (ordering {})", w.to_one_based()),
        (None, _) => format!("{label}: non-member (no ordering satisfies the conditions)"),
    }
}

fn classify(g: &Graph, bound: usize, as_json: bool) -> Result<ExitCode> {
    let mptg = search(g, OrderingClass::Mptg, bound)?;
    let proper = search(g, OrderingClass::ProperMptg, bound)?;
    let maxtol = search(g, OrderingClass::ProperMaxTolNecessary, bound)?;
    let at = is_at_free(g);
    let perfect = if g.n() <= DEFAULT_PERFECTION_BOUND {
        Some(find_imperfect_subgraph(g, DEFAULT_PERFECTION_BOUND)?)
    } else {
        None
    };
    // proper and unit MPTG coincide; a member gets a certified unit witness
    let unit_ok = match &proper.witness {
        Some(w) => {
            let rep = Construction::new(g, w)?.unit_rep(&parse_rational("1")?)?;
            certify(&rep, g).is_ok() && is_unit(&rep).is_ok()
        }
        None => false,
    };
    if as_json {
        let report = json!({
            "n": g.n(),
            "mptg": search_json(&mptg),
            "proper_mptg": search_json(&proper),
            "unit_mptg": { "verdict": verdict_word(unit_ok) },
            "at_free": match &at {
                Ok(()) => json!({ "verdict": "member" }),
                Err(t) => json!({ "verdict": "non-member", "triple": t.0.iter().map(|v| v + 1).collect::<Vec<_>>() }),
            },
            "perfect": match &perfect {
                None => json!({ "verdict": "unknown", "reason": format!("n > {DEFAULT_PERFECTION_BOUND}") }),
                Some(None) => json!({ "verdict": "member" }),
                Some(Some(w)) => json!({
                    "verdict": "non-member",
                    "subgraph": w.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "chromatic": w.chromatic,
                    "clique": w.clique,
                }),
            },
            "proper_maxtol_necessary": search_json(&maxtol),
        });
        out!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        out!("{}", search_text("mptg", &mptg));
        out!("{}", search_text("proper-mptg", &proper));
        out!("unit-mptg: {}", verdict_word(unit_ok));
        match &at {
            Ok(()) => out!("at-free: member"),
            Err(t) => out!("at-free: non-member ({t})"),
        }
        match &perfect {
            None => out!("perfect: unknown (n > {DEFAULT_PERFECTION_BOUND})"),
            Some(None) => out!("perfect: member"),
            Some(Some(w)) => out!(
                "perfect: non-member (chromatic {} > clique {} on {})",
                w.chromatic,
                w.clique,
                labels(&w.vertices)
            ),
        }
        out!("{}", search_text("proper-maxtol-necessary", &maxtol));
    }
    Ok(ExitCode::SUCCESS)
}

fn labels(vs: &[usize]) -> String {
    vs.iter().map(|v| format!("v{}", v + 1)).collect::<Vec<_>>().join(" ")
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn recognize(g: &Graph, class: ClassArg, bound: usize, as_json: bool) -> Result<ExitCode> {
    let (member, text, value) = match class {
        ClassArg::Mptg | ClassArg::ProperMptg | ClassArg::ProperMaxtolCond => {
            let (label, oc) = match class {
                ClassArg::Mptg => ("mptg", OrderingClass::Mptg),
                ClassArg::ProperMptg => ("proper-mptg", OrderingClass::ProperMptg),
                _ => ("proper-maxtol-cond", OrderingClass::ProperMaxTolNecessary),
            };
            let r = search(g, oc, bound)?;
            eprintln!("searched {} nodes, {} prunes", r.stats.nodes, r.stats.prunes);
            (r.is_member(), search_text(label, &r), search_json(&r))
        }
        ClassArg::AtFree => match is_at_free(g) {
            Ok(()) => (true, "at-free: member".to_string(), json!({ "verdict": "member" })),
            Err(t) => (
                false,
                format!("at-free: non-member ({t})"),
                json!({ "verdict": "non-member", "triple": t.0.iter().map(|v| v + 1).collect::<Vec<_>>() }),
            ),
        },
        ClassArg::Perfect => match find_imperfect_subgraph(g, bound.min(DEFAULT_PERFECTION_BOUND))? {
            None => (true, "perfect: member".to_string(), json!({ "verdict": "member" })),
            Some(w) => (
                false,
                format!(
                    "perfect: non-member (chromatic {} > clique {} on {})",
                    w.chromatic,
                    w.clique,
                    labels(&w.vertices)
                ),
                json!({
                    "verdict": "non-member",
                    "subgraph": w.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "chromatic": w.chromatic,
                    "clique": w.clique,
                }),
            ),
        },
    };
    if as_json {
        out!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        out!("{text}");
    }
    Ok(exit_for(member))
}

fn check_ordering(g: &Graph, order: Option<&str>, condition: &str, as_json: bool) -> Result<ExitCode> {
    let sigma = ordering_for(g, order)?;
    let conditions: Vec<Condition> = if condition == "all" {
        Condition::ALL.to_vec()
    } else {
        vec![condition.parse::<Condition>().map_err(anyhow::Error::msg)?]
    };
    let a = AugmentedMatrix::new(g, &sigma)?;
    let results: Vec<(Condition, Result<(), _>)> = conditions.iter().map(|&c| (c, check(c, &a))).collect();
    let all_pass = results.iter().all(|(_, r)| r.is_ok());
    if as_json {
        let list: Vec<Value> = results
            .iter()
            .map(|(c, r)| match r {
                Ok(()) => json!({ "condition": c, "pass": true }),
                Err(w) => json!({
                    "condition": c,
                    "pass": false,
                    "positions": w.positions.iter().map(|p| p + 1).collect::<Vec<_>>(),
                    "vertices": w.positions.iter().map(|&p| sigma.as_slice()[p] + 1).collect::<Vec<_>>(),
                }),
            })
            .collect();
        out!("{}", serde_json::to_string_pretty(&json!({ "ordering": sigma.as_slice().iter().map(|v| v + 1).collect::<Vec<_>>(), "results": list }))?);
    } else {
        for (c, r) in &results {
            match r {
                Ok(()) => out!("{c}: pass"),
                Err(w) => {
                    let vs: Vec<usize> = w.positions.iter().map(|&p| sigma.as_slice()[p]).collect();
                    out!("{c}: fail, {w} (vertices {})", labels(&vs));
                }
            }
        }
    }
    Ok(exit_for(all_pass))
}

fn build_rep(g: &Graph, order: Option<&str>, unit: Option<&str>, bound: usize, verbose: bool) -> Result<ExitCode> {
    let sigma = match order {
        Some(_) => ordering_for(g, order)?,
        None => match search(g, OrderingClass::ProperMptg, bound)?.witness {
            Some(w) => w,
            None => bail!("graph has no proper MPTG ordering, so no proper representation exists"),
        },
    };
    let c = Construction::new(g, &sigma)?;
    if verbose {
        eprintln!("ordering: {}", sigma.to_one_based());
        eprintln!("P1: {}", c.precedence.order().iter().map(|p| format!("b{}", p + 1)).collect::<Vec<_>>().join(" "));
        eprintln!("P: {}", c.sequence);
    }
    let rep = match unit {
        Some(l) => c.unit_rep(&parse_rational(l)?)?,
        None => c.integer_rep(),
    };
    certify(&rep, g).map_err(|e| anyhow::anyhow!("constructed representation failed certification: {e}"))?;
    out!("{}", rep.to_json());
    Ok(ExitCode::SUCCESS)
}

fn verify_rep(rep: &AnyRep, g: &Graph, semantics: Option<Semantics>, as_json: bool) -> Result<ExitCode> {
    let kind = match rep {
        AnyRep::Point(_) => Semantics::Mptg,
        AnyRep::Tolerance(_) => Semantics::Maxtol,
    };
    if let Some(s) = semantics {
        if s != kind {
            bail!(
                "representation carries {} but --semantics asks for {}",
                if kind == Semantics::Mptg { "points" } else { "tolerances" },
                if s == Semantics::Mptg { "mptg" } else { "maxtol" }
            );
        }
    }
    let r: &dyn Representation = match rep {
        AnyRep::Point(r) => r,
        AnyRep::Tolerance(r) => r,
    };
    let outcome = certify(r, g);
    let proper = is_proper(r);
    let unit = is_unit(r);
    let warnings = match rep {
        AnyRep::Tolerance(t) => t.warnings(),
        AnyRep::Point(_) => Vec::new(),
    };
    for v in &warnings {
        eprintln!("warning: v{} has tolerance above its interval length and can only be isolated", v + 1);
    }
    if as_json {
        let mismatches: Vec<Value> = match &outcome {
            Err(CertifyError::Edges(list)) => list
                .iter()
                .map(|m| json!({ "u": m.u + 1, "v": m.v + 1, "expected": m.expected, "got": m.got }))
                .collect(),
            _ => Vec::new(),
        };
        let report = json!({
            "pass": outcome.is_ok(),
            "error": outcome.as_ref().err().map(|e| e.to_string()),
            "mismatches": mismatches,
            "proper": proper.is_ok(),
            "unit": unit.is_ok(),
        });
        out!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        match &outcome {
            Ok(()) => out!("pass: representation induces the graph"),
            Err(e) => out!("fail: {e}"),
        }
        match proper {
            Ok(()) => out!("proper: yes"),
            Err(c) => out!("proper: no ({c})"),
        }
        match unit {
            Ok(()) => out!("unit: yes"),
            Err(m) => out!("unit: no ({m})"),
        }
    }
    Ok(exit_for(outcome.is_ok()))
}

fn generate(
    family: &str,
    m: Option<usize>,
    n: Option<usize>,
    eps: Option<&str>,
    legs: &[usize],
    emit_graph: bool,
) -> Result<ExitCode> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--family {family} needs --{flag}"));
    let (rep, graph) = if let Some(name) = family.strip_prefix("fixture:") {
        let f = fixture(name).map_err(|e| anyhow::anyhow!("{e}; available: {}", FIXTURE_NAMES.join(", ")))?;
        (f.representation, f.graph)
    } else {
        match family {
            "kn" => {
                let n = need(n, "n")?;
                (AnyRep::Point(gen_kn_proper_mptg(n)?), make_complete(n)?)
            }
            "kmn" => {
                let (m, n) = (need(m, "m")?, need(n, "n")?);
                let eps = match eps {
                    Some(text) => parse_rational(text)?,
                    None => default_epsilon(),
                };
                (AnyRep::Point(gen_kmn_mptg(m, n, &eps)?), make_complete_bipartite(m, n)?)
            }
            "caterpillar" => {
                if legs.is_empty() {
                    bail!("--family caterpillar needs --legs, e.g. --legs 2,0,1");
                }
                (AnyRep::Point(gen_caterpillar_proper_mptg(legs)?), make_caterpillar(legs)?)
            }
            other => bail!("unknown family `{other}`; expected kn, kmn, caterpillar or fixture:<name>"),
        }
    };
    if emit_graph {
        out_raw!("{}", graph.to_edge_list());
    } else {
        out!("{}", rep.to_json());
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { graph, bound, json } => classify(&read_graph(&graph)?, bound, json),
        Command::Recognize {
            graph,
            class,
            bound,
            json,
        } => recognize(&read_graph(&graph)?, class, bound, json),
        Command::CheckOrdering {
            graph,
            order,
            condition,
            json,
        } => check_ordering(&read_graph(&graph)?, order.as_deref(), &condition, json),
        Command::BuildRep {
            graph,
            order,
            unit,
            length,
            bound,
            verbose,
        } => build_rep(
            &read_graph(&graph)?,
            order.as_deref(),
            unit.then_some(length.as_str()),
            bound,
            verbose,
        ),
        Command::VerifyRep {
            rep,
            graph,
            semantics,
            json,
        } => verify_rep(&read_rep(&rep)?, &read_graph(&graph)?, semantics, json),
        Command::Gen {
            family,
            n,
            m,
            eps,
            legs,
            emit_graph,
        } => generate(&family, m, n, eps.as_deref(), &legs, emit_graph),
        Command::RenderSvg { rep, output } => {
            let svg = render_svg(&read_rep(&rep)?);
            match output {
                Some(path) => fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?,
                None => out_raw!("{svg}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
