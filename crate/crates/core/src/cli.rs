//! Command-line front end. Exit codes: 0 success, 1 property false, 2 usage or data error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::enrich::{check_distributive_law, vp_roundtrip, LabeledPath, VGraph, VPCategory, Vertical};
use crate::error::{Error, Result};
use crate::globop::{
    interchange_check, q_apply, q_cells, q_count, q_is_contractible_exact, q_is_contractible_lifting, QCell,
};
use crate::gset::GlobularSet;
use crate::operads::{
    build_operad, check_operad_axioms, operad_is_contractible, GOperad, OperadSeries, OperadSpec, DEFAULT_MAX_ARITY,
};
use crate::pd::{enumerate_pds, substitute, PastingDiagram, SubstLabeling};

#[derive(Parser, Debug)]
#[command(name = "iterop", version, about = "Iterative operadic theories on finite data")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pasting diagrams.
    #[command(subcommand)]
    Pd(PdCmd),
    /// Classical and globular operads.
    #[command(subcommand)]
    Operad(OperadCmd),
    /// The globular operad compiled from an operad series.
    #[command(subcommand)]
    Q(QCmd),
    /// Weakly enriched categories.
    #[command(subcommand)]
    E(ECmd),
}

#[derive(Args, Debug)]
struct PdArg {
    /// A diagram such as `dim=2:[[oo][o]]`.
    #[arg(long)]
    pd: String,
}

#[derive(Subcommand, Debug)]
enum PdCmd {
    Dim(PdArg),
    Boundary(PdArg),
    Nodes(PdArg),
    /// Substitute a labeling given as `[[diagram, …], …]` indexed by dimension and cell.
    Subst {
        #[arg(long)]
        pd: String,
        #[arg(long)]
        labels: String,
    },
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
    },
}

#[derive(Args, Debug)]
struct OperadArg {
    /// Operad spec as inline JSON or a file path.
    #[arg(long)]
    operad: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ARITY)]
    max_arity: usize,
}

#[derive(Subcommand, Debug)]
enum OperadCmd {
    Check {
        #[command(flatten)]
        operad: OperadArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest number of instances checked exhaustively before sampling.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    Contractible(OperadArg),
}

#[derive(Args, Debug)]
struct SeriesArg {
    /// Series `{"operads": [...]}` as inline JSON or a file path.
    #[arg(long)]
    series: String,
    #[arg(long)]
    max_arity: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum QCmd {
    Count {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long)]
        pd: String,
    },
    Enumerate {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long)]
        pd: String,
    },
    Contractible {
        #[command(flatten)]
        series: SeriesArg,
        /// Also run the bounded lifting search up to this many vertices.
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Check the parametrised interchange law, for one pair or all pairs.
    Interchange {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long, requires = "g")]
        f: Option<usize>,
        #[arg(long, requires = "f")]
        g: Option<usize>,
    },
    /// Cell counts of the free algebra on a globular set.
    Apply {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long)]
        gset: String,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ECmd {
    /// Evaluate a composite in a (V,P)-category.
    Compose {
        #[arg(long)]
        category: String,
        /// `{"objects": [...], "label": l, "cells": [...]}`.
        #[arg(long)]
        path: String,
        #[arg(long, default_value_t = 0)]
        dim: usize,
    },
    /// Validate a category and its algebra round trip, or check the distributive law
    /// on a graph.
    Check {
        #[arg(long, conflicts_with_all = ["graph", "operad"])]
        category: Option<String>,
        #[arg(long, requires = "operad")]
        graph: Option<String>,
        #[arg(long, requires = "graph")]
        operad: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Use the free category monad vertically instead of the identity.
        #[arg(long)]
        free_vertical: bool,
    },
}

/// Outcome of a command before it is printed.
struct Outcome {
    code: i32,
    text: String,
    json: serde_json::Value,
}

fn ok(text: impl Into<String>, json: serde_json::Value) -> Result<Outcome> {
    Ok(Outcome { code: 0, text: text.into(), json })
}

fn verdict(holds: bool, text: String, json: serde_json::Value) -> Result<Outcome> {
    Ok(Outcome { code: if holds { 0 } else { 1 }, text, json })
}

/// Inline JSON if the argument starts with `{` or `[`, otherwise a file path.
fn load(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Json(format!("cannot read {arg}: {e}")))
    }
}

fn load_operad(a: &OperadArg) -> Result<GOperad> {
    let spec: OperadSpec = serde_json::from_str(&load(&a.operad)?)?;
    Ok(build_operad(&spec)?.into_globular().with_cap(a.max_arity))
}

fn load_series(a: &SeriesArg) -> Result<OperadSeries> {
    let s = OperadSeries::from_json(&load(&a.series)?)?;
    match a.max_arity {
        Some(cap) => OperadSeries::new(s.operads().iter().map(|p| p.with_cap(cap)).collect()),
        None => Ok(s),
    }
}

/// Run with the given arguments, writing the report to `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let body = if cli.json { o.json.to_string() } else { o.text };
            let _ = writeln!(out, "{body}");
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary; honours `GW_THREADS`.
pub fn main_entry() -> i32 {
    if let Some(n) = std::env::var("GW_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Pd(c) => pd_cmd(c),
        Command::Operad(c) => operad_cmd(c),
        Command::Q(c) => q_cmd(c),
        Command::E(c) => e_cmd(c),
    }
}

fn pd_cmd(cmd: &PdCmd) -> Result<Outcome> {
    match cmd {
        PdCmd::Dim(a) => {
            let p: PastingDiagram = a.pd.parse()?;
            ok(p.dim().to_string(), json!(p.dim()))
        }
        PdCmd::Boundary(a) => {
            let b = a.pd.parse::<PastingDiagram>()?.boundary()?;
            ok(b.to_string(), json!(b.to_string()))
        }
        PdCmd::Nodes(a) => {
            let nodes = a.pd.parse::<PastingDiagram>()?.nodes();
            let text = nodes.iter().map(|n| format!("({}, {})", n.height, n.arity)).collect::<Vec<_>>().join(" ");
            ok(text, json!(nodes.iter().map(|n| json!({"height": n.height, "arity": n.arity})).collect::<Vec<_>>()))
        }
        PdCmd::Subst { pd, labels } => {
            let p: PastingDiagram = pd.parse()?;
            let raw: Vec<Vec<String>> = serde_json::from_str(&load(labels)?)?;
            let labels = raw
                .iter()
                .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<PastingDiagram>>>())
                .collect::<Result<Vec<_>>>()?;
            let r = substitute(&p, &SubstLabeling::new(labels))?;
            ok(r.to_string(), json!(r.to_string()))
        }
        PdCmd::Enumerate { dim, max_vertices } => {
            let pds = enumerate_pds(*dim, *max_vertices);
            let strs: Vec<String> = pds.iter().map(|p| p.to_string()).collect();
            ok(strs.join("\n"), json!(strs))
        }
    }
}

fn operad_cmd(cmd: &OperadCmd) -> Result<Outcome> {
    match cmd {
        OperadCmd::Check { operad, seed, budget } => {
            let p = load_operad(operad)?;
            let r = check_operad_axioms(&p, operad.max_arity, *budget, *seed);
            let mode = if r.exhaustive { "exhaustive" } else { "sampled" };
            let text = match &r.failure {
                None => format!("{p}: operad laws hold ({} instances, {mode})", r.checked),
                Some(w) => format!("{p}: {w}"),
            };
            verdict(r.passed, text, serde_json::to_value(&r)?)
        }
        OperadCmd::Contractible(a) => {
            let p = load_operad(a)?;
            let r = operad_is_contractible(&p, a.max_arity);
            let text = match &r.witness {
                None => format!("{p}: contractible"),
                Some(w) => format!("{p}: not contractible: {w}"),
            };
            verdict(r.contractible, text, serde_json::to_value(&r)?)
        }
    }
}

fn q_cmd(cmd: &QCmd) -> Result<Outcome> {
    match cmd {
        QCmd::Count { series, pd } => {
            let s = load_series(series)?;
            let c = q_count(&s, &pd.parse()?)?;
            ok(c.to_string(), json!(c.to_string()))
        }
        QCmd::Enumerate { series, pd } => {
            let s = load_series(series)?;
            let cells = q_cells(&s, &pd.parse()?)?;
            let text = cells.iter().map(QCell::to_json).collect::<Vec<_>>().join("\n");
            let js = cells.iter().map(|c| serde_json::from_str(&c.to_json())).collect::<std::result::Result<Vec<serde_json::Value>, _>>()?;
            ok(text, json!(js))
        }
        QCmd::Contractible { series, max_vertices } => {
            let s = load_series(series)?;
            let exact = q_is_contractible_exact(&s);
            let mut text = match &exact.witness {
                None => "contractible".to_string(),
                Some(w) => format!("not contractible: {w}"),
            };
            let mut js = json!({"contractible": exact.contractible, "witness": exact.witness});
            let mut holds = exact.contractible;
            if let Some(b) = max_vertices {
                let lift = q_is_contractible_lifting(&s, *b)?;
                text.push_str(&format!(
                    "\nlifting search up to {b} vertices: {} ({} pairs)",
                    if lift.contractible { "all lifts exist" } else { "missing lifts" },
                    lift.pairs_checked
                ));
                if let Some(f) = lift.failures.first() {
                    text.push_str(&format!("\nfirst failure: {f}"));
                }
                js["lifting"] = serde_json::to_value(&lift)?;
                holds &= lift.contractible;
            }
            verdict(holds, text, js)
        }
        QCmd::Interchange { series, f, g } => {
            let s = load_series(series)?;
            if s.n() != 2 {
                return Err(Error::Unsupported(format!("interchange needs n = 2, got {}", s.n())));
            }
            let p = s.get(1);
            let pairs: Vec<(usize, usize)> = match (f, g) {
                (Some(f), Some(g)) => vec![(*f, *g)],
                _ => {
                    let c = p.count(2, 1);
                    (0..c)
                        .flat_map(|f| (0..c).map(move |g| (f, g)))
                        .filter(|&(f, g)| p.tgt(2, 1, f) == p.src(2, 1, g))
                        .collect()
                }
            };
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut holds = true;
            for (f, g) in pairs {
                let r = interchange_check(&s, f, g)?;
                holds &= r.passed;
                lines.push(format!(
                    "f={f} g={g}: {} (both sides {}, g∘f = {})",
                    if r.passed { "pass" } else { "FAIL" },
                    r.lhs,
                    r.composite
                ));
                rows.push(json!({"f": f, "g": g, "passed": r.passed, "composite": r.composite,
                    "lhs": serde_json::from_str::<serde_json::Value>(&r.lhs.to_json())?,
                    "rhs": serde_json::from_str::<serde_json::Value>(&r.rhs.to_json())?}));
            }
            verdict(holds, lines.join("\n"), json!(rows))
        }
        QCmd::Apply { series, gset, max_vertices } => {
            let s = load_series(series)?;
            let x = GlobularSet::from_json(&load(gset)?)?;
            let a = q_apply(&s, &x, *max_vertices)?;
            let counts = a.set.counts().to_vec();
            ok(format!("cells per dimension: {counts:?}"), json!({"counts": counts}))
        }
    }
}

fn e_cmd(cmd: &ECmd) -> Result<Outcome> {
    match cmd {
        ECmd::Compose { category, path, dim } => {
            let c = VPCategory::from_json(&load(category)?)?;
            let x: LabeledPath = serde_json::from_str(&load(path)?)?;
            let r = c.compose(*dim, &x).ok_or_else(|| {
                Error::InvalidCategory(format!("no composite for {x:?} in dimension {dim}"))
            })?;
            ok(r.to_string(), json!(r))
        }
        ECmd::Check { category: Some(c), .. } => {
            let c = match VPCategory::from_json(&load(c)?) {
                Ok(c) => c,
                Err(Error::InvalidCategory(w)) => {
                    return verdict(false, format!("invalid: {w}"), json!({"valid": false, "witness": w}))
                }
                Err(e) => return Err(e),
            };
            let r = vp_roundtrip(&c)?;
            let text = format!(
                "valid; round trip {} ({} cells compared)",
                if r.passed() { "passes" } else { "FAILS" },
                r.cells_compared
            );
            verdict(r.passed(), text, serde_json::to_value(&r)?)
        }
        ECmd::Check { graph: Some(g), operad: Some(p), max_len, free_vertical, .. } => {
            let a = VGraph::from_json(&load(g)?)?;
            let spec: OperadSpec = serde_json::from_str(&load(p)?)?;
            let p = build_operad(&spec)?.into_globular();
            let t = if *free_vertical { Vertical::FreeCategory { max_len: *max_len } } else { Vertical::Identity };
            let r = check_distributive_law(&a, t, &p, *max_len)?;
            let text = match &r.failure {
                None => format!("distributive law holds (checked {:?})", r.checked),
                Some(w) => format!("distributive law fails: {w}"),
            };
            verdict(r.passed(), text, serde_json::to_value(&r)?)
        }
        ECmd::Check { .. } => Err(Error::Unsupported("pass --category, or --graph with --operad".into())),
    }
}
