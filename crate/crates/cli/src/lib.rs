//! The `convdiff` command line.
//!
//! Exit status is 0 on success, 1 for user errors and 2 when two independent
//! computations of the same quantity disagree. Errors are printed to stderr
//! as a single line `error[<code>]: <message>`.

pub mod dot;
pub mod suite;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use convdiff::boolean::{
    boolean_differentials_at_with_limits, hypercube_with_limits, leibniz_probe, scalar_differentiability_census,
    solve_matrix_equation, BoolFunction, BoolPoint, GF2Matrix, LeibnizReport,
};
use convdiff::cayley::{diff_space_with_limits, CayleyGraph, DiffSpace};
use convdiff::differential::{
    differential_oracle_with_limits, differentials_at, differentials_by_theorem, DifferentialQuery, OracleMode,
};
use convdiff::group::{FiniteGroup, GroupKind};
use convdiff::io::{parse_digraph_json, parse_generators, parse_map_json, read_file, GroupFile, GroupSpec};
use convdiff::space::{is_continuous_at, pentacle, space_properties, FiniteMap, ReflexiveDigraph, SpaceProperties};
use convdiff::{Error, Limits};

pub use dot::emit_dot;

/// Prefix of the environment variables that override size guards, e.g.
/// `CONVDIFF_MAX_GROUP_ORDER=4096`.
pub const ENV_PREFIX: &str = "CONVDIFF_MAX_";

#[derive(Debug, Parser)]
#[command(name = "convdiff", version, about = "Differentials on finite convergence spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a group and print its table and element orders.
    Group {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the Cayley graph of a group.
    Cayley {
        #[arg(long)]
        group: String,
        /// Comma-separated generators, by name or index.
        #[arg(long)]
        gens: Option<String>,
        #[arg(value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Inspect a reflexive digraph.
    Space(SpaceArgs),
    /// Enumerate the continuous homomorphisms between two Cayley graphs.
    Diffspace {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Differentials of a function between Cayley graphs at a point.
    Diff(DiffArgs),
    /// Boolean differential calculus.
    Bool {
        #[command(subcommand)]
        command: BoolCommand,
    },
    /// Run a suite of reproduced examples and print a PASS/FAIL table.
    Examples {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Debug, Args)]
struct SpaceArgs {
    #[arg(long, conflicts_with_all = ["digraph", "cayley"])]
    pentacle: bool,
    /// Digraph JSON file.
    #[arg(long)]
    digraph: Option<String>,
    /// Group whose Cayley graph to inspect.
    #[arg(long)]
    cayley: Option<String>,
    #[arg(long, requires = "cayley")]
    gens: Option<String>,
    /// Print T0, T1, discrete and topological.
    #[arg(long)]
    props: bool,
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    dom: String,
    #[arg(long)]
    cod: String,
    #[arg(long)]
    dom_gens: Option<String>,
    #[arg(long)]
    cod_gens: Option<String>,
}

#[derive(Debug, Args)]
struct DiffArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Polynomial over GF(2); domain and codomain must be `z2^m`, `z2^n`.
    #[arg(long, group = "function")]
    f: Option<String>,
    /// Value-table JSON `{"values": [...]}`, written `file:path` or `path`.
    #[arg(long = "fn", group = "function")]
    function_file: Option<String>,
    /// identity, zero or diagonal.
    #[arg(long, group = "function")]
    builtin: Option<String>,
    /// Element index, or a Boolean point such as `(1,1)` for `z2^m`.
    #[arg(long)]
    at: String,
    /// Cross-check against the case classification and the filter oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum BoolCommand {
    /// Differentials of `f: B^m -> B^n` at a point.
    Diff {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        f: String,
        #[arg(long)]
        at: String,
        /// Cross-check against the generic criterion and the matrix equation.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Differentiability of a scalar function at every point.
    Census {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// Tests `g(b) L_f + f(b) L_g` against the differentials of `fg`.
    Leibniz {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        at: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    User(Error),
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::User(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Reads guard overrides from `lookup`, which maps a variable name to its
/// value (normally `std::env::var`).
pub fn limits_from_env(lookup: impl Fn(&str) -> Option<String>) -> std::result::Result<Limits, String> {
    let mut limits = Limits::default();
    let parse = |name: &str| -> std::result::Result<Option<u128>, String> {
        let key = format!("{ENV_PREFIX}{name}");
        match lookup(&key) {
            None => Ok(None),
            Some(v) => v
                .trim()
                .parse::<u128>()
                .map(Some)
                .map_err(|_| format!("{key} must be a non-negative integer, got {v:?}")),
        }
    };
    let to_usize = |v: u128| usize::try_from(v).unwrap_or(usize::MAX);
    if let Some(v) = parse("GROUP_ORDER")? {
        limits.group_order = to_usize(v);
    }
    if let Some(v) = parse("HOM_CANDIDATES")? {
        limits.hom_candidates = v;
    }
    if let Some(v) = parse("MAP_CANDIDATES")? {
        limits.map_candidates = v;
    }
    if let Some(v) = parse("PRODUCT_VERTICES")? {
        limits.product_vertices = to_usize(v);
    }
    if let Some(v) = parse("ORACLE_WORK")? {
        limits.oracle_work = v;
    }
    if let Some(v) = parse("CUBE_DIM")? {
        limits.cube_dim = to_usize(v);
    }
    Ok(limits)
}

/// Runs the command line with guards taken from the process environment.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_env(argv, |k| std::env::var(k).ok(), out, err)
}

pub fn run_with_env<I, T>(
    argv: I,
    lookup: impl Fn(&str) -> Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let first = e
                        .to_string()
                        .lines()
                        .next()
                        .unwrap_or("")
                        .trim_start_matches("error: ")
                        .to_string();
                    let _ = writeln!(err, "error[usage]: {first}");
                    1
                }
            };
        }
    };
    let limits = match limits_from_env(lookup) {
        Ok(l) => l,
        Err(msg) => {
            let _ = writeln!(err, "error[env]: {msg}");
            return 1;
        }
    };
    let mut buf = Vec::new();
    let result = dispatch(cli.command, &limits, &mut buf);
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => 0,
        Err(Failure::User(e)) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error[usage]: {msg}");
            1
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Group { group, json } => cmd_group(&group, json, limits, out),
        Command::Cayley { group, gens, format } => cmd_cayley(&group, gens.as_deref(), format, limits, out),
        Command::Space(args) => cmd_space(&args, limits, out),
        Command::Diffspace { pair } => cmd_diffspace(&pair, limits, out),
        Command::Diff(args) => cmd_diff(&args, limits, out),
        Command::Bool { command } => cmd_bool(command, limits, out),
        Command::Examples { suite, json } => cmd_examples(&suite, json, limits, out),
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure::User(Error::Invalid(format!("write failed: {e}")))
}

fn emit_json<T: Serialize>(value: &T, out: &mut Vec<u8>) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::User(Error::Invalid(e.to_string())))?;
    out.push(b'\n');
    Ok(())
}

fn build_group(spec: &str, limits: &Limits) -> std::result::Result<(GroupSpec, FiniteGroup), Failure> {
    let spec = GroupSpec::parse(spec)?;
    let group = spec.build(limits)?;
    Ok((spec, group))
}

fn build_cayley(
    spec: &str,
    gens: Option<&str>,
    limits: &Limits,
) -> std::result::Result<(GroupSpec, CayleyGraph), Failure> {
    let (spec, group) = build_group(spec, limits)?;
    let gens = match gens {
        Some(src) => parse_generators(&group, src)?,
        None => spec.default_generators(&group),
    };
    let graph = CayleyGraph::from_generators(group, &gens)?;
    Ok((spec, graph))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    #[serde(flatten)]
    pub file: GroupFile,
    pub element_orders: Vec<usize>,
    pub abelian: bool,
    pub default_generators: Vec<usize>,
}

fn cmd_group(spec: &str, json: bool, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    let (spec, group) = build_group(spec, limits)?;
    let report = GroupReport {
        file: GroupFile::from_group(&group),
        element_orders: (0..group.order()).map(|g| group.element_order(g)).collect(),
        abelian: group.is_abelian(),
        default_generators: spec.default_generators(&group),
    };
    if json {
        return emit_json(&report, out);
    }
    let w = |out: &mut Vec<u8>, s: String| writeln!(out, "{s}").map_err(io_fail);
    w(out, format!("order: {}", group.order()))?;
    w(out, format!("abelian: {}", report.abelian))?;
    let gens: Vec<String> = report.default_generators.iter().map(|&g| group.name(g)).collect();
    w(out, format!("generators: {}", gens.join(",")))?;
    w(out, "elements:".into())?;
    for g in 0..group.order() {
        w(
            out,
            format!("  {} {} order {}", g, group.name(g), report.element_orders[g]),
        )?;
    }
    w(out, "table:".into())?;
    for row in group.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        w(out, format!("  {}", cells.join(" ")))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyReport {
    pub generators: Vec<usize>,
    pub names: Vec<String>,
    pub nbhd: Vec<Vec<usize>>,
    pub left_multiplication_automorphisms: bool,
}

fn names_of(group: &FiniteGroup) -> Vec<String> {
    (0..group.order()).map(|g| group.name(g)).collect()
}

fn cmd_cayley(spec: &str, gens: Option<&str>, format: Format, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    let (_, graph) = build_cayley(spec, gens, limits)?;
    let names = names_of(graph.group());
    let check = graph.left_mult_automorphism_check();
    if !check.holds {
        return Err(Failure::Mismatch(format!(
            "left multiplication is not an automorphism: {:?}",
            check.witness
        )));
    }
    match format {
        Format::Dot => out.extend_from_slice(emit_dot(graph.digraph(), Some(&names)).as_bytes()),
        Format::Json => emit_json(
            &CayleyReport {
                generators: graph.generators().elements().to_vec(),
                names,
                nbhd: graph.digraph().neighborhoods().to_vec(),
                left_multiplication_automorphisms: check.holds,
            },
            out,
        )?,
        Format::Text => {
            let gens: Vec<&str> = graph
                .generators()
                .elements()
                .iter()
                .map(|&g| names[g].as_str())
                .collect();
            writeln!(out, "generators: {}", gens.join(",")).map_err(io_fail)?;
            write_nbhds(graph.digraph(), &names, out)?;
        }
    }
    Ok(())
}

fn write_nbhds(x: &ReflexiveDigraph, names: &[String], out: &mut Vec<u8>) -> Outcome {
    for v in 0..x.size() {
        let set: Vec<&str> = x.nbhd(v).iter().map(|&u| names[u].as_str()).collect();
        writeln!(out, "N({}) = {{{}}}", names[v], set.join(", ")).map_err(io_fail)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub size: usize,
    pub nbhd: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<SpaceProperties>,
}

fn cmd_space(args: &SpaceArgs, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    let (x, names): (ReflexiveDigraph, Option<Vec<String>>) = if args.pentacle {
        (pentacle(), None)
    } else if let Some(path) = &args.digraph {
        let path = path.strip_prefix("file:").unwrap_or(path);
        (parse_digraph_json(&read_file(path)?)?, None)
    } else if let Some(spec) = &args.cayley {
        let (_, graph) = build_cayley(spec, args.gens.as_deref(), limits)?;
        let names = names_of(graph.group());
        (graph.digraph().clone(), Some(names))
    } else {
        return Err(Failure::Usage(
            "one of --pentacle, --digraph, --cayley is required".into(),
        ));
    };
    let props = args.props.then(|| space_properties(&x));
    if args.json {
        return emit_json(
            &SpaceReport {
                size: x.size(),
                nbhd: x.neighborhoods().to_vec(),
                properties: props,
            },
            out,
        );
    }
    if args.dot {
        out.extend_from_slice(emit_dot(&x, names.as_deref()).as_bytes());
        return Ok(());
    }
    if let Some(p) = props {
        writeln!(
            out,
            "T0={}\nT1={}\ndiscrete={}\ntopological={}",
            p.is_t0, p.is_t1, p.is_discrete, p.is_topological
        )
        .map_err(io_fail)?;
        return Ok(());
    }
    let names = names.unwrap_or_else(|| (0..x.size()).map(|v| v.to_string()).collect());
    write_nbhds(&x, &names, out)
}

struct Pair {
    dom_spec: GroupSpec,
    cod_spec: GroupSpec,
    ds: DiffSpace,
}

fn build_pair(pair: &PairArgs, limits: &Limits) -> std::result::Result<Pair, Failure> {
    let (dom_spec, dom) = build_cayley(&pair.dom, pair.dom_gens.as_deref(), limits)?;
    let (cod_spec, cod) = build_cayley(&pair.cod, pair.cod_gens.as_deref(), limits)?;
    let ds = diff_space_with_limits(&dom, &cod, limits)?;
    Ok(Pair { dom_spec, cod_spec, ds })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffSpaceReport {
    pub domain_order: usize,
    pub codomain_order: usize,
    pub maps: Vec<Vec<usize>>,
    pub adjacency: Vec<Vec<usize>>,
    pub isolated: Vec<usize>,
}

fn cmd_diffspace(pair: &PairArgs, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    let Pair { ds, .. } = build_pair(pair, limits)?;
    if let Some((i, j)) = ds.cross_check()? {
        return Err(Failure::Mismatch(format!(
            "order-two criterion and exponential structure disagree at maps {i}, {j}"
        )));
    }
    emit_json(
        &DiffSpaceReport {
            domain_order: ds.domain().order(),
            codomain_order: ds.codomain().order(),
            maps: ds.maps().iter().map(|m| m.values().to_vec()).collect(),
            adjacency: ds.space().neighborhoods().to_vec(),
            isolated: (0..ds.len()).filter(|&i| ds.is_isolated(i)).collect(),
        },
        out,
    )
}

fn z2_dim(spec: &GroupSpec) -> Option<usize> {
    match spec {
        GroupSpec::Builtin(GroupKind::Z2Power(n)) => Some(*n),
        _ => None,
    }
}

fn parse_point(src: &str, spec: &GroupSpec, order: usize) -> std::result::Result<usize, Failure> {
    let trimmed = src.trim();
    let index = if trimmed.starts_with('(') {
        let point = BoolPoint::parse(trimmed)?;
        match z2_dim(spec) {
            Some(m) if m == point.dim() => point.index(),
            Some(m) => {
                return Err(Error::DimMismatch {
                    expected: m,
                    got: point.dim(),
                }
                .into())
            }
            None => return Err(Failure::Usage("Boolean points need a z2^m domain".into())),
        }
    } else {
        trimmed.parse::<usize>().map_err(|_| {
            Failure::User(Error::Parse {
                pos: 0,
                msg: format!("bad point {src:?}"),
            })
        })?
    };
    if index >= order {
        return Err(Error::OutOfRange(index, order).into());
    }
    Ok(index)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialEntry {
    pub index: usize,
    pub values: Vec<usize>,
    pub isolated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub point: usize,
    pub continuous_at: bool,
    pub differentials: Vec<DifferentialEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_checked: Option<Vec<String>>,
}

fn diff_function(args: &DiffArgs, pair: &Pair) -> std::result::Result<FiniteMap, Failure> {
    let (n, m) = (pair.ds.domain().order(), pair.ds.codomain().order());
    if let Some(src) = &args.f {
        let (Some(dm), Some(cn)) = (z2_dim(&pair.dom_spec), z2_dim(&pair.cod_spec)) else {
            return Err(Failure::Usage("--f needs z2^m domain and z2^n codomain".into()));
        };
        let f = BoolFunction::from_poly(src, dm)?;
        if f.output_dim() != cn {
            return Err(Error::DimMismatch {
                expected: cn,
                got: f.output_dim(),
            }
            .into());
        }
        return Ok(f.to_finite_map());
    }
    if let Some(src) = &args.function_file {
        let path = src.strip_prefix("file:").unwrap_or(src);
        let file = parse_map_json(&read_file(path)?)?;
        if file.values.len() != n {
            return Err(Error::DimMismatch {
                expected: n,
                got: file.values.len(),
            }
            .into());
        }
        return Ok(file.into_map(m)?);
    }
    match args.builtin.as_deref() {
        Some("identity") => {
            if n != m {
                return Err(Error::DimMismatch { expected: n, got: m }.into());
            }
            Ok(FiniteMap::identity(n))
        }
        Some("zero") => Ok(FiniteMap::constant(n, m, 0)?),
        Some("diagonal") => {
            if m != n * n {
                return Err(Error::DimMismatch {
                    expected: n * n,
                    got: m,
                }
                .into());
            }
            Ok(FiniteMap::diagonal(n))
        }
        Some(other) => Err(Failure::Usage(format!(
            "unknown builtin {other:?}; expected identity, zero or diagonal"
        ))),
        None => Err(Failure::Usage("one of --f, --fn, --builtin is required".into())),
    }
}

fn cmd_diff(args: &DiffArgs, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    let pair = build_pair(&args.pair, limits)?;
    let f = diff_function(args, &pair)?;
    let ds = &pair.ds;
    let a = parse_point(&args.at, &pair.dom_spec, ds.domain().order())?;
    let q = DifferentialQuery::new(ds, &f, a)?;
    let diffs = differentials_at(&q);

    let mut cross_checked = None;
    if args.oracle {
        let mut routes = Vec::new();
        let by_theorem = differentials_by_theorem(&q)?;
        if by_theorem != diffs {
            return Err(Failure::Mismatch(format!(
                "criterion {diffs:?} != classification {by_theorem:?}"
            )));
        }
        routes.push("classification".to_string());
        for mode in [OracleMode::SmallestNeighborhoods, OracleMode::FilterSweep] {
            let oracle = differential_oracle_with_limits(&q, mode, limits)?;
            if oracle != diffs {
                return Err(Failure::Mismatch(format!(
                    "criterion {diffs:?} != oracle {mode:?} {oracle:?}"
                )));
            }
            routes.push(format!("{mode:?}"));
        }
        cross_checked = Some(routes);
    }

    let dims = z2_dim(&pair.dom_spec).zip(z2_dim(&pair.cod_spec));
    let entries: Vec<DifferentialEntry> = diffs
        .iter()
        .map(|&i| {
            let map = ds.space().map(i);
            let matrix = dims.and_then(|(m, n)| GF2Matrix::from_finite_map(m, n, map));
            DifferentialEntry {
                index: i,
                values: map.values().to_vec(),
                isolated: ds.is_isolated(i),
                matrix: matrix.as_ref().map(GF2Matrix::to_rows),
                formula: matrix.as_ref().map(GF2Matrix::formula),
            }
        })
        .collect();
    let report = DiffReport {
        point: a,
        continuous_at: is_continuous_at(ds.domain().digraph(), ds.codomain().digraph(), &f, a),
        differentials: entries,
        cross_checked,
    };
    if args.json {
        return emit_json(&report, out);
    }
    writeln!(out, "point: {a}").map_err(io_fail)?;
    writeln!(out, "continuous at point: {}", report.continuous_at).map_err(io_fail)?;
    writeln!(out, "differentials: {}", report.differentials.len()).map_err(io_fail)?;
    for e in &report.differentials {
        let values: Vec<String> = e.values.iter().map(usize::to_string).collect();
        let iso = if e.isolated { " isolated" } else { "" };
        match &e.formula {
            Some(formula) => writeln!(out, "  #{} {formula}{iso}", e.index),
            None => writeln!(out, "  #{} [{}]{iso}", e.index, values.join(",")),
        }
        .map_err(io_fail)?;
    }
    if let Some(routes) = &report.cross_checked {
        writeln!(out, "cross-checked: {}", routes.join(", ")).map_err(io_fail)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoolDiffReport {
    pub point: String,
    pub value: String,
    pub continuous_at: bool,
    pub differentials: Vec<BoolDifferential>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoolDifferential {
    pub matrix: Vec<Vec<u8>>,
    pub formula: String,
    pub isolated: bool,
}

fn parse_bool_point(src: &str, m: usize) -> std::result::Result<BoolPoint, Failure> {
    let point = BoolPoint::parse(src)?;
    if point.dim() != m {
        return Err(Error::DimMismatch {
            expected: m,
            got: point.dim(),
        }
        .into());
    }
    Ok(point)
}

fn cmd_bool(command: BoolCommand, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    match command {
        BoolCommand::Diff {
            m,
            n,
            f,
            at,
            oracle,
            json,
        } => {
            let f = BoolFunction::from_poly(&f, m)?;
            if let Some(n) = n {
                if n != f.output_dim() {
                    return Err(Error::DimMismatch {
                        expected: n,
                        got: f.output_dim(),
                    }
                    .into());
                }
            }
            let b = parse_bool_point(&at, m)?;
            let diffs = boolean_differentials_at_with_limits(&f, b, limits)?;
            let (x, y) = (
                hypercube_with_limits(m, limits).ok(),
                hypercube_with_limits(f.output_dim(), limits).ok(),
            );
            let continuous_at = match (&x, &y) {
                (Some(x), Some(y)) => is_continuous_at(x.digraph(), y.digraph(), &f.to_finite_map(), b.index()),
                _ => f_continuous_at(&f, b),
            };
            if oracle {
                bool_cross_check(&f, b, &diffs, limits)?;
            }
            let report = BoolDiffReport {
                point: b.to_string(),
                value: f.apply(b)?.to_string(),
                continuous_at,
                differentials: diffs
                    .iter()
                    .map(|d| BoolDifferential {
                        matrix: d.to_rows(),
                        formula: d.formula(),
                        isolated: convdiff::boolean::is_isolated_linear(d),
                    })
                    .collect(),
            };
            if json {
                return emit_json(&report, out);
            }
            writeln!(out, "f{} = {}", report.point, report.value).map_err(io_fail)?;
            writeln!(out, "continuous at point: {continuous_at}").map_err(io_fail)?;
            writeln!(out, "differentials: {}", diffs.len()).map_err(io_fail)?;
            for d in &diffs {
                writeln!(out, "  {}  {}", d, d.formula()).map_err(io_fail)?;
            }
            if oracle {
                writeln!(out, "cross-checked: generic criterion, matrix equation").map_err(io_fail)?;
            }
            Ok(())
        }
        BoolCommand::Census { m, f, json } => {
            let f = BoolFunction::from_poly(&f, m)?;
            let report = scalar_differentiability_census(&f)?;
            if json {
                emit_json(&report, out)?;
            } else {
                for (x, (&d, &p)) in report.differentiable.iter().zip(&report.predicted).enumerate() {
                    let point = BoolPoint::new(m, x as u32)?;
                    writeln!(out, "{point} differentiable={d} predicted={p}").map_err(io_fail)?;
                }
                let verdict = if report.matches { "PASS" } else { "FAIL" };
                writeln!(out, "corollary: {verdict}").map_err(io_fail)?;
            }
            if !report.matches {
                return Err(Failure::Mismatch(format!(
                    "census disagrees with the predicted pattern at {:?}",
                    report.mismatches
                )));
            }
            Ok(())
        }
        BoolCommand::Leibniz { m, f, g, at, json } => {
            let f = BoolFunction::from_poly(&f, m)?;
            let g = BoolFunction::from_poly(&g, m)?;
            let b = parse_bool_point(&at, m)?;
            let report: LeibnizReport = leibniz_probe(&f, &g, b)?;
            if json {
                return emit_json(&report, out);
            }
            writeln!(
                out,
                "differentials: f {}, g {}, fg {}",
                report.f_differentials, report.g_differentials, report.product_differentials
            )
            .map_err(io_fail)?;
            writeln!(
                out,
                "pairs satisfying the product rule: {}/{}",
                report.satisfied, report.pairs
            )
            .map_err(io_fail)?;
            for (lf, lg) in &report.failures {
                writeln!(out, "  fails: L_f {}  L_g {}", lf.formula(), lg.formula()).map_err(io_fail)?;
            }
            Ok(())
        }
    }
}

fn f_continuous_at(f: &BoolFunction, b: BoolPoint) -> bool {
    let m = f.input_dim();
    let fb = f.apply_bits(b.bits());
    (0..m).all(|j| (f.apply_bits(b.bits() ^ convdiff::boolean::unit(m, j)) ^ fb).count_ones() <= 1)
}

fn bool_cross_check(f: &BoolFunction, b: BoolPoint, diffs: &[GF2Matrix], limits: &Limits) -> Outcome {
    let isolated: Vec<GF2Matrix> = diffs
        .iter()
        .filter(|d| convdiff::boolean::is_isolated_linear(d))
        .cloned()
        .collect();
    let solved: Vec<GF2Matrix> = solve_matrix_equation(f, b)?
        .into_iter()
        .filter(convdiff::boolean::is_isolated_linear)
        .collect();
    if solved != isolated {
        return Err(Failure::Mismatch(format!(
            "matrix equation gives {} isolated solution(s), classification {}",
            solved.len(),
            isolated.len()
        )));
    }
    let x = hypercube_with_limits(f.input_dim(), limits)?;
    let y = hypercube_with_limits(f.output_dim(), limits)?;
    let ds = diff_space_with_limits(&x, &y, limits)?;
    let fm = f.to_finite_map();
    let q = DifferentialQuery::new(&ds, &fm, b.index())?;
    let mut generic: Vec<GF2Matrix> = differentials_at(&q)
        .into_iter()
        .filter_map(|i| GF2Matrix::from_finite_map(f.input_dim(), f.output_dim(), ds.space().map(i)))
        .collect();
    generic.sort();
    if generic != diffs {
        return Err(Failure::Mismatch(format!(
            "generic criterion gives {} differential(s), classification {}",
            generic.len(),
            diffs.len()
        )));
    }
    Ok(())
}

fn cmd_examples(name: &str, json: bool, limits: &Limits, out: &mut Vec<u8>) -> Outcome {
    let Some(results) = suite::run_suite(name, limits) else {
        return Err(Failure::Usage(format!(
            "unknown suite {name:?}; available: {}",
            suite::suite_names().join(", ")
        )));
    };
    if json {
        emit_json(&results, out)?;
    } else {
        let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &results {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict}  {:width$}  {}", r.name, r.detail).map_err(io_fail)?;
        }
        let passed = results.iter().filter(|r| r.passed).count();
        writeln!(out, "{passed}/{} passed", results.len()).map_err(io_fail)?;
    }
    if results.iter().any(|r| !r.passed) {
        return Err(Failure::Mismatch("reproduced example failed".into()));
    }
    Ok(())
}
