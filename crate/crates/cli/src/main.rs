// SPDX-License-Identifier: Apache-2.0

//! `edcolor`: generate family graphs, take line graphs, build and check
//! equitable dominator colorings, and export the results.
//!
//! Every command reads JSON from `--input` and writes to `--output`, both
//! defaulting to the standard streams, so commands compose in a pipeline:
//!
//! ```text
//! edcolor gen --family wheel --t 5 | edcolor linegraph | edcolor construct | edcolor verify
//! ```
//!
//! Exit status: 0 on success, 1 on any error, 2 when a validation or theorem
//! check fails, 3 when the search budget runs out, 4 when a scheme hits
//! contradictory index arithmetic in `--strict` mode. Errors are written to
//! standard error as a JSON object with `error` and `message` fields.

mod config;
mod export;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edcolor::constructive::{desk_sweep, theorem_min, verify_theorem_with, VerifyOptions};
use edcolor::solver::edcn_exact_with;
use edcolor::{
    chromatic_number, construct, validate_edc, Coloring, Family, FamilyInstance, Graph, Scheme,
    SchemeId, SolverBudget, TheoremVerdict,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{BudgetArgs, Config};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] edcolor::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(edcolor::Error::BudgetExceeded { .. }) => 3,
            CliError::Core(edcolor::Error::SchemeAmbiguous { .. }) => 4,
            _ => 1,
        }
    }

    fn to_json(&self) -> Value {
        let kind = match self {
            CliError::Core(e) => e.kind(),
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
        };
        let mut v = json!({ "error": kind, "message": self.to_string() });
        if let CliError::Core(edcolor::Error::BudgetExceeded { lower, upper }) = self {
            v["lower"] = json!(lower);
            v["upper"] = json!(upper);
        }
        v
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "edcolor",
    version,
    about = "Equitable dominator colorings of line graphs"
)]
struct Cli {
    /// Defaults file with `key = value` lines (max_nodes, max_time, jobs,
    /// dominator_pruning, oracle_max_vertices)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Input file, or - for standard input
    #[arg(short, long, default_value = "-")]
    input: String,
}

#[derive(Args)]
struct OutputArg {
    /// Output file, or - for standard output
    #[arg(short, long, default_value = "-")]
    output: String,
}

#[derive(Args, Default)]
struct FamilyArgs {
    /// Graph family: path, cycle, star, bistar, kab, wheel, helm, gear,
    /// sunlet, friendship, flower, doublewheel
    #[arg(long)]
    family: Option<Family>,
    /// Size parameter of single-parameter families
    #[arg(long)]
    t: Option<usize>,
    /// First side of bistar and kab
    #[arg(long)]
    a: Option<usize>,
    /// Second side of bistar and kab
    #[arg(long)]
    b: Option<usize>,
}

impl FamilyArgs {
    fn instance(&self) -> Result<Option<FamilyInstance>> {
        let Some(family) = self.family else {
            if self.t.is_some() || self.a.is_some() || self.b.is_some() {
                return Err(CliError::Usage("--t, --a and --b need --family".into()));
            }
            return Ok(None);
        };
        let inst = if family.is_two_parameter() {
            match (self.a, self.b, self.t) {
                (Some(a), Some(b), None) => FamilyInstance::pair(family, a, b)?,
                _ => return Err(CliError::Usage(format!("{family} takes --a and --b"))),
            }
        } else {
            match (self.t, self.a, self.b) {
                (Some(t), None, None) => FamilyInstance::single(family, t)?,
                _ => return Err(CliError::Usage(format!("{family} takes --t"))),
            }
        };
        Ok(Some(inst))
    }

    fn require(&self) -> Result<FamilyInstance> {
        self.instance()?
            .ok_or_else(|| CliError::Usage("--family is required".into()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph of a family instance
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write the labeled line graph instead of the base graph
        #[arg(long)]
        line: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Read a graph and write its line graph
    Linegraph {
        #[command(flatten)]
        inp: InputArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check a coloring; exits 2 unless it is an equitable dominator coloring
    Verify {
        /// Graph file; without it the input holds the graph or a
        /// {"graph","coloring"} bundle
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Coloring file; without it the input holds the coloring or a bundle
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        inp: InputArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Compute the exact equitable dominator chromatic number
    Solve {
        /// Compute the chromatic number instead
        #[arg(long)]
        chi: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        inp: InputArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Color a family line graph with one of the explicit schemes
    Construct {
        /// Family instance; without it the input line graph is matched
        /// against the families
        #[command(flatten)]
        family: FamilyArgs,
        /// main, alt1 or alt2
        #[arg(long, default_value = "main")]
        scheme: Scheme,
        /// Subcase name, checked against the one the parameters select
        #[arg(long)]
        subcase: Option<String>,
        /// Fail with exit 4 instead of resolving contradictory index
        /// arithmetic
        #[arg(long)]
        strict: bool,
        /// Write only the coloring instead of the graph and coloring bundle
        #[arg(long)]
        coloring_only: bool,
        #[command(flatten)]
        inp: InputArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Compare formula, construction and solver over a parameter sweep
    Check {
        /// Restrict to one family
        #[arg(long)]
        family: Option<Family>,
        /// Smallest parameter (both sides for bistar and kab)
        #[arg(long)]
        t_min: Option<usize>,
        /// Largest parameter (both sides for bistar and kab)
        #[arg(long)]
        t_max: Option<usize>,
        /// Run the full desk-scale sweep
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        /// Skip the solver on line graphs with more vertices
        #[arg(long)]
        oracle_max_vertices: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutputArg,
    },
    /// CSV of formula, construction and solver values over the full sweep
    Table {
        /// Restrict to one family
        #[arg(long)]
        family: Option<Family>,
        /// Skip the solver on line graphs with more vertices
        #[arg(long)]
        oracle_max_vertices: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write a graph, optionally colored, as DOT, JSON or CSV
    Export {
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
        /// Coloring file; a bundle on the input also supplies one
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        inp: InputArg,
        #[command(flatten)]
        out: OutputArg,
    },
}

/// Node budget used by `check` and `table` when nothing else is set. Without
/// a time limit their output depends only on the inputs.
const SWEEP_NODES: u64 = 20_000_000;
const SWEEP_ORACLE_MAX_VERTICES: usize = 16;

fn sweep_fallback() -> SolverBudget {
    SolverBudget {
        max_nodes: SWEEP_NODES,
        max_time: Duration::MAX,
    }
}

fn read_text(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn read_file(path: &std::path::Path) -> Result<String> {
    read_text(&path.to_string_lossy())
}

fn write_text(path: &str, text: &str) -> Result<()> {
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| CliError::Io(format!("stdout: {e}")))
    } else {
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

fn write_json<T: Serialize>(path: &str, value: &T) -> Result<()> {
    let mut text = serde_json::to_string(value).map_err(edcolor::Error::from)?;
    text.push('\n');
    write_text(path, &text)
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text).map_err(edcolor::Error::from)?)
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    Ok(serde_json::from_value(v).map_err(edcolor::Error::from)?)
}

/// Graph and optional coloring from a document that is either a bare graph
/// or an object with `graph` and `coloring` members.
fn parse_graph_doc(text: &str) -> Result<(Graph, Option<Coloring>)> {
    let mut v: Value = parse(text)?;
    match v.get_mut("graph").map(Value::take) {
        Some(graph) => {
            let coloring = match v.get_mut("coloring").map(Value::take) {
                Some(c) => Some(from_value(c)?),
                None => None,
            };
            Ok((from_value(graph)?, coloring))
        }
        None => Ok((from_value(v)?, None)),
    }
}

fn check_sizes(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(edcolor::Error::SizeMismatch {
            coloring: c.len(),
            graph: g.n(),
        }
        .into());
    }
    Ok(())
}

/// The family instance whose labeled line graph has exactly the edges of
/// `g` in the same vertex order, if any.
fn identify_line_graph(g: &Graph) -> Option<FamilyInstance> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let matches = |inst: &FamilyInstance| {
        inst.line_order() == n && {
            let line = inst.generate_line();
            line.edge_count() == edges.len() && line.edges().eq(edges.iter().copied())
        }
    };
    for family in Family::ALL {
        let Some(min) = theorem_min(family) else {
            continue;
        };
        let found = if family.is_two_parameter() {
            (min..=n.max(min))
                .flat_map(|a| (min..=n.max(min)).map(move |b| (a, b)))
                .filter_map(|(a, b)| FamilyInstance::pair(family, a, b).ok())
                .find(|inst| matches(inst))
        } else {
            (min..=n.max(min))
                .filter_map(|t| FamilyInstance::single(family, t).ok())
                .find(|inst| matches(inst))
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

fn sweep_instances(
    family: Option<Family>,
    t_min: Option<usize>,
    t_max: Option<usize>,
    all: bool,
) -> Result<Vec<FamilyInstance>> {
    let in_family = |i: &FamilyInstance| family.is_none_or(|f| i.family() == f);
    if t_min.is_none() && t_max.is_none() {
        if family.is_none() && !all {
            return Err(CliError::Usage("pass --family or --all".into()));
        }
        let out: Vec<_> = desk_sweep().into_iter().filter(in_family).collect();
        if out.is_empty() {
            return Err(CliError::Usage("no closed form for this family".into()));
        }
        return Ok(out);
    }
    let Some(family) = family else {
        return Err(CliError::Usage("--t-min and --t-max need --family".into()));
    };
    let min = theorem_min(family)
        .ok_or_else(|| CliError::Usage(format!("no closed form for {family}")))?;
    let lo = t_min.unwrap_or(min);
    let hi = match t_max {
        Some(hi) => hi,
        None => desk_sweep()
            .into_iter()
            .filter(|i| i.family() == family)
            .map(|i| {
                if family.is_two_parameter() {
                    i.ab().0
                } else {
                    i.t()
                }
            })
            .max()
            .unwrap_or(lo),
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty range {lo}..={hi}")));
    }
    let mut out = Vec::new();
    for x in lo..=hi {
        if family.is_two_parameter() {
            for y in lo..=hi {
                out.push(FamilyInstance::pair(family, x, y)?);
            }
        } else {
            out.push(FamilyInstance::single(family, x)?);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct TableRow {
    family: String,
    params: String,
    formula: usize,
    construction_k: Option<usize>,
    oracle_value: Option<usize>,
    status: String,
}

fn verdict_csv(verdicts: &[TheoremVerdict]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for v in verdicts {
        w.serialize(TableRow {
            family: v.family.name().to_string(),
            params: v.params.clone(),
            formula: v.formula_value,
            construction_k: v.construction_k,
            oracle_value: v.oracle_value,
            status: v.status(),
        })
        .map_err(export::csv_error)?;
    }
    if verdicts.is_empty() {
        w.write_record([
            "family",
            "params",
            "formula",
            "construction_k",
            "oracle_value",
            "status",
        ])
        .map_err(export::csv_error)?;
    }
    export::finish_csv(w)
}

fn run_sweep(
    instances: &[FamilyInstance],
    oracle_max_vertices: Option<usize>,
    budget: &BudgetArgs,
    config: &Config,
) -> Result<Vec<TheoremVerdict>> {
    let (budget, solver) = config::resolve(budget, config, sweep_fallback())?;
    let opts = VerifyOptions {
        budget,
        solver,
        oracle_max_vertices: oracle_max_vertices
            .or(config.oracle_max_vertices)
            .unwrap_or(SWEEP_ORACLE_MAX_VERTICES),
    };
    instances
        .iter()
        .map(|i| Ok(verify_theorem_with(i, &opts)?))
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Gen { family, line, out } => {
            let inst = family.require()?;
            let g = if line {
                inst.generate_line()
            } else {
                inst.generate()
            };
            write_json(&out.output, &g)?;
        }
        Command::Linegraph { inp, out } => {
            let (g, _) = parse_graph_doc(&read_text(&inp.input)?)?;
            write_json(&out.output, &g.line_graph())?;
        }
        Command::Verify {
            graph,
            coloring,
            inp,
            out,
        } => {
            let (g, c) = match (graph, coloring) {
                (Some(gp), Some(cp)) => (parse(&read_file(&gp)?)?, parse(&read_file(&cp)?)?),
                (Some(gp), None) => (parse(&read_file(&gp)?)?, parse(&read_text(&inp.input)?)?),
                (None, Some(cp)) => {
                    let (g, _) = parse_graph_doc(&read_text(&inp.input)?)?;
                    (g, parse(&read_file(&cp)?)?)
                }
                (None, None) => match parse_graph_doc(&read_text(&inp.input)?)? {
                    (g, Some(c)) => (g, c),
                    (_, None) => {
                        return Err(CliError::Usage(
                            "no coloring: pass --coloring or a {\"graph\",\"coloring\"} bundle"
                                .into(),
                        ))
                    }
                },
            };
            let report = validate_edc(&g, &c)?;
            write_json(&out.output, &report)?;
            if !report.overall {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Solve {
            chi,
            budget,
            inp,
            out,
        } => {
            let (g, _) = parse_graph_doc(&read_text(&inp.input)?)?;
            let (budget, opts) = config::resolve(&budget, &config, SolverBudget::default())?;
            let result = if chi {
                chromatic_number(&g, budget)?
            } else {
                edcn_exact_with(&g, budget, opts)?
            };
            write_json(&out.output, &result)?;
        }
        Command::Construct {
            family,
            scheme,
            subcase,
            strict,
            coloring_only,
            inp,
            out,
        } => {
            let (inst, graph) = match family.instance()? {
                Some(inst) => (inst, inst.generate_line()),
                None => {
                    let (g, _) = parse_graph_doc(&read_text(&inp.input)?)?;
                    let inst = identify_line_graph(&g).ok_or_else(|| {
                        CliError::Usage(
                            "input is not a family line graph in generated vertex order; \
                             pass --family or pipe through linegraph"
                                .into(),
                        )
                    })?;
                    (inst, g)
                }
            };
            let id = SchemeId::new(inst.family(), scheme, subcase.as_deref());
            let built = construct(&inst, &id)?;
            if strict {
                if let Some(a) = built.ambiguities.first() {
                    return Err(edcolor::Error::SchemeAmbiguous {
                        location: a.to_string(),
                    }
                    .into());
                }
            }
            if coloring_only {
                write_json(&out.output, &built.coloring)?;
            } else {
                let doc = json!({
                    "family": inst.family(),
                    "params": inst.params_string(),
                    "scheme": built.scheme.to_string(),
                    "ambiguities": built.ambiguities,
                    "graph": graph,
                    "coloring": built.coloring,
                });
                write_json(&out.output, &doc)?;
            }
        }
        Command::Check {
            family,
            t_min,
            t_max,
            all,
            format,
            oracle_max_vertices,
            budget,
            out,
        } => {
            let instances = sweep_instances(family, t_min, t_max, all)?;
            let verdicts = run_sweep(&instances, oracle_max_vertices, &budget, &config)?;
            let text = match format {
                TableFormat::Csv => verdict_csv(&verdicts)?,
                TableFormat::Json => {
                    let mut s = String::new();
                    for v in &verdicts {
                        s.push_str(&serde_json::to_string(v).map_err(edcolor::Error::from)?);
                        s.push('\n');
                    }
                    s
                }
            };
            write_text(&out.output, &text)?;
            if !verdicts.iter().all(TheoremVerdict::passed) {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Table {
            family,
            oracle_max_vertices,
            budget,
            out,
        } => {
            let instances = sweep_instances(family, None, None, true)?;
            let verdicts = run_sweep(&instances, oracle_max_vertices, &budget, &config)?;
            write_text(&out.output, &verdict_csv(&verdicts)?)?;
        }
        Command::Export {
            format,
            coloring,
            inp,
            out,
        } => {
            let (g, mut c) = parse_graph_doc(&read_text(&inp.input)?)?;
            if let Some(path) = coloring {
                c = Some(parse(&read_file(&path)?)?);
            }
            if let Some(c) = &c {
                check_sizes(&g, c)?;
            }
            match format {
                ExportFormat::Dot => write_text(&out.output, &export::to_dot(&g, c.as_ref()))?,
                ExportFormat::Csv => write_text(&out.output, &export::to_csv(&g, c.as_ref())?)?,
                ExportFormat::Json => match c {
                    Some(c) => write_json(&out.output, &json!({ "graph": g, "coloring": c }))?,
                    None => write_json(&out.output, &g)?,
                },
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            return report(&CliError::Usage(
                e.render().to_string().trim_end().to_string(),
            ))
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => report(&e),
    }
}
