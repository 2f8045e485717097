//! Command-line front end. Every subcommand is a thin wrapper around one
//! library call; output is canonical JSON on standard output.
//!
//! Graph files use a line grammar: `#` starts a comment line, `n <count>`
//! comes first, then `e <u> <v>` per edge and optional `A <v> ...` lines
//! naming bipartite class A. Formulas and set families are JSON, e.g.
//! `{"vars":4,"clauses":[[1,2,3]]}` and `{"n":4,"sets":[[1],[1,2],[3,4]]}`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::count::BigCount;
use crate::enumerate::{
    self, count_dominating_sets, count_independent_sets, count_nae_sat, count_vertex_covers, NaeFormula,
    SeparatorKind, Witness,
};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeSet, Multigraph, SimpleGraph, Vertex, VertexSet};
use crate::reductions::{reduce, Instance, ReduceOptions, ReductionCertificate, ReductionKind, SCHEMA};
use crate::setfamily::{self, SetFamily, Subset};
use crate::verify::{verify_all, verify_certificate, Budget, Outcome};

/// Parser strictness for graph files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphMode {
    /// Repeated edges are an error; `A` lines make the graph bipartite.
    #[default]
    Simple,
    /// Repeated edges become labeled parallel edges in read order.
    Multi,
    /// `A` lines are required and every edge must cross the classes.
    Bipartite,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Graph(SimpleGraph),
    Bipartite(BipartiteGraph),
    Multigraph(Multigraph),
    Formula(NaeFormula),
    Family(SetFamily),
}

impl InstanceFile {
    pub fn into_instance(self) -> Instance {
        match self {
            InstanceFile::Graph(g) => Instance::Graph(g),
            InstanceFile::Bipartite(b) => Instance::Bipartite(b),
            InstanceFile::Multigraph(m) => Instance::Multigraph(m),
            InstanceFile::Formula(f) => Instance::Formula(f),
            InstanceFile::Family(f) => Instance::Family(f),
        }
    }
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number(line: usize, word: &str) -> Result<usize> {
    word.parse()
        .map_err(|_| parse_error(line, format!("expected a non-negative integer, got {word:?}")))
}

/// Parses the graph line grammar.
pub fn parse_graph(text: &str, mode: GraphMode) -> Result<InstanceFile> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, Vertex, Vertex)> = Vec::new();
    let mut class_a: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let words: Vec<&str> = raw.split_whitespace().collect();
        let Some(&head) = words.first() else { continue };
        if head.starts_with('#') {
            continue;
        }
        let in_range = |v: usize, n: usize| -> Result<usize> {
            if v == 0 || v > n {
                Err(parse_error(line, format!("vertex {v} is outside 1..={n}")))
            } else {
                Ok(v)
            }
        };
        match (head, n) {
            ("n", None) => {
                if words.len() != 2 {
                    return Err(parse_error(line, "expected `n <count>`"));
                }
                n = Some(number(line, words[1])?);
            }
            ("n", Some(_)) => return Err(parse_error(line, "vertex count given twice")),
            (_, None) => return Err(parse_error(line, "the first line must be `n <count>`")),
            ("e", Some(n)) => {
                if words.len() != 3 {
                    return Err(parse_error(line, "expected `e <u> <v>`"));
                }
                let u = in_range(number(line, words[1])?, n)?;
                let v = in_range(number(line, words[2])?, n)?;
                if u == v {
                    return Err(parse_error(line, format!("loop on vertex {u}")));
                }
                let (a, b) = (u.min(v), u.max(v));
                if mode != GraphMode::Multi && edges.iter().any(|&(_, x, y)| (x.min(y), x.max(y)) == (a, b)) {
                    return Err(parse_error(line, format!("duplicate edge {{{a},{b}}}")));
                }
                edges.push((line, u, v));
            }
            ("A", Some(n)) => {
                if mode == GraphMode::Multi {
                    return Err(parse_error(line, "class lines are not allowed for multigraphs"));
                }
                for w in &words[1..] {
                    class_a.insert(in_range(number(line, w)?, n)?, line);
                }
            }
            (other, Some(_)) => return Err(parse_error(line, format!("unknown directive {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(text.lines().count().max(1), "missing `n <count>` line"))?;
    let pairs = edges.iter().map(|&(_, u, v)| (u, v));
    if mode == GraphMode::Multi {
        return Ok(InstanceFile::Multigraph(Multigraph::new(n, pairs)?));
    }
    let g = SimpleGraph::new(n, pairs)?;
    if class_a.is_empty() {
        if mode == GraphMode::Bipartite {
            return Err(parse_error(1, "bipartite mode needs an `A` line"));
        }
        return Ok(InstanceFile::Graph(g));
    }
    if let Some(&(line, u, v)) = edges
        .iter()
        .find(|(_, u, v)| class_a.contains_key(u) == class_a.contains_key(v))
    {
        return Err(parse_error(line, format!("edge {{{u},{v}}} lies inside one class")));
    }
    Ok(InstanceFile::Bipartite(BipartiteGraph::new(g, class_a.into_keys().collect())?))
}

/// Inverse of [`parse_graph`]; multigraphs list parallel edges in label
/// order.
pub fn render_graph(inst: &InstanceFile) -> Option<String> {
    let mut out = String::new();
    let (n, edges, class_a): (usize, Vec<(Vertex, Vertex)>, Option<&VertexSet>) = match inst {
        InstanceFile::Graph(g) => (g.vertex_count(), g.edges().collect(), None),
        InstanceFile::Bipartite(b) => (b.graph().vertex_count(), b.graph().edges().collect(), Some(b.class_a())),
        InstanceFile::Multigraph(m) => (m.vertex_count(), m.edges().iter().map(|e| e.endpoints()).collect(), None),
        _ => return None,
    };
    if matches!(inst, InstanceFile::Multigraph(_)) {
        out.push_str("# multigraph\n");
    }
    out.push_str(&format!("n {n}\n"));
    if let Some(a) = class_a {
        let list: Vec<String> = a.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("A {}\n", list.join(" ")));
    }
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    Some(out)
}

/// Reads a graph file, or JSON for formulas, families and tagged instances.
pub fn parse_instance(text: &str, mode: GraphMode) -> Result<InstanceFile> {
    if !text.trim_start().starts_with('{') {
        return parse_graph(text, mode);
    }
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Input(format!("bad JSON: {e}")))?;
    let fail = |e: serde_json::Error| Error::Input(e.to_string());
    if value.get("kind").is_some() {
        let inst: Instance = serde_json::from_value(value).map_err(fail)?;
        return Ok(match inst {
            Instance::Graph(g) => InstanceFile::Graph(g),
            Instance::Bipartite(b) => InstanceFile::Bipartite(b),
            Instance::Multigraph(m) => InstanceFile::Multigraph(m),
            Instance::Formula(f) => InstanceFile::Formula(f),
            Instance::Family(f) => InstanceFile::Family(f),
        });
    }
    if value.get("vars").is_some() {
        return Ok(InstanceFile::Formula(serde_json::from_value(value).map_err(fail)?));
    }
    if value.get("sets").is_some() {
        return Ok(InstanceFile::Family(serde_json::from_value(value).map_err(fail)?));
    }
    Err(Error::Input("JSON input must be a formula (vars, clauses) or a family (n, sets)".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    IndependentSets,
    VertexCovers,
    DominatingSets,
    MaximalIs,
    MinimalSeparators,
    MinimalStSeparators,
    InclusionMinimalSeparators,
    TwoComponentSeparators,
    TwoComponentStSeparators,
    EdgeSeparators,
    EdgeStSeparators,
    LargestEdgeSeparators,
    NaeSat,
    UnionClosure,
    UnionRepresentations,
}

#[derive(Debug, Parser)]
#[command(name = "locopt", version, about = "Count locally optimal graph structures and check counting reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, conflicts_with_all = ["multi", "bipartite"])]
    simple: bool,
    #[arg(long, conflicts_with = "bipartite")]
    multi: bool,
    #[arg(long)]
    bipartite: bool,
}

impl InputArgs {
    fn mode(&self) -> GraphMode {
        if self.multi {
            GraphMode::Multi
        } else if self.bipartite {
            GraphMode::Bipartite
        } else {
            GraphMode::Simple
        }
    }

    fn read(&self) -> Result<InstanceFile> {
        parse_instance(&read_file(&self.input)?, self.mode())
    }
}

#[derive(Debug, Args)]
struct StructureArgs {
    structure: Structure,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, requires = "t")]
    s: Option<Vertex>,
    #[arg(long, requires = "s")]
    t: Option<Vertex>,
    /// Comma-separated target union; defaults to the whole ground set.
    #[arg(long, value_delimiter = ',')]
    target: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the structures of an instance.
    Count(StructureArgs),
    /// List the structures of an instance, sorted.
    Enumerate(StructureArgs),
    /// Run a reduction; prints the target instance or, with --emit-cert,
    /// the certificate.
    Reduce {
        name: String,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        /// Terminals `S,T` of the stretch gadgets.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        st: Option<Vec<Vertex>>,
        /// Keep one member per vertex in the union-representation family.
        #[arg(long)]
        indexed: bool,
        #[arg(long)]
        emit_cert: bool,
    },
    /// Check a certificate, or the built-in suite with --all.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        cert: Option<PathBuf>,
        #[arg(long)]
        all: bool,
        /// `default` or a witness count.
        #[arg(long, default_value = "default")]
        budget: String,
    },
    /// Write the built-in instances and certificates to a directory.
    SeedCatalog {
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn graph_of(inst: &InstanceFile) -> Result<&SimpleGraph> {
    match inst {
        InstanceFile::Graph(g) => Ok(g),
        InstanceFile::Bipartite(b) => Ok(b.graph()),
        _ => Err(Error::Input("this structure needs a simple graph".into())),
    }
}

fn multigraph_of(inst: &InstanceFile) -> Result<Multigraph> {
    match inst {
        InstanceFile::Multigraph(m) => Ok(m.clone()),
        other => Ok(graph_of(other)
            .map_err(|_| Error::Input("this structure needs a graph or multigraph".into()))?
            .to_multigraph()),
    }
}

fn family_of(inst: &InstanceFile) -> Result<&SetFamily> {
    match inst {
        InstanceFile::Family(f) => Ok(f),
        _ => Err(Error::Input("this structure needs a set family".into())),
    }
}

fn terminals(args: &StructureArgs, needed: bool) -> Result<Option<(Vertex, Vertex)>> {
    let st = args.s.zip(args.t);
    if needed && st.is_none() {
        return Err(Error::Input("this structure needs --s and --t".into()));
    }
    Ok(st)
}

fn separator_kind(s: Structure) -> Option<SeparatorKind> {
    Some(match s {
        Structure::MinimalSeparators => SeparatorKind::MinimalAny,
        Structure::MinimalStSeparators => SeparatorKind::MinimalSt,
        Structure::InclusionMinimalSeparators => SeparatorKind::InclusionMinimal,
        Structure::TwoComponentSeparators => SeparatorKind::TwoComponentAny,
        Structure::TwoComponentStSeparators => SeparatorKind::TwoComponentSt,
        _ => return None,
    })
}

fn structure_name(s: Structure) -> String {
    s.to_possible_value().expect("named variant").get_name().to_string()
}

fn edge_separators(args: &StructureArgs, inst: &InstanceFile) -> Result<Vec<EdgeSet>> {
    let g = multigraph_of(inst)?;
    let st = terminals(args, args.structure == Structure::EdgeStSeparators)?;
    let all = enumerate::minimal_edge_separators(&g, st)?;
    if args.structure != Structure::LargestEdgeSeparators {
        return Ok(all);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let top = all.iter().map(|f| f.len()).max().unwrap_or(0);
    Ok(all.into_iter().filter(|f| f.len() == top).collect())
}

/// Witnesses of the structure, or `None` for structures that are only
/// counted.
fn witnesses(args: &StructureArgs, inst: &InstanceFile) -> Result<Option<Vec<Witness>>> {
    let s = args.structure;
    if let Some(kind) = separator_kind(s) {
        let st = terminals(args, kind.needs_terminals())?;
        let seps = enumerate::separators(graph_of(inst)?, kind, st)?;
        return Ok(Some(seps.into_iter().map(Witness::Vertices).collect()));
    }
    Ok(Some(match s {
        Structure::MaximalIs => {
            let sets = match inst {
                InstanceFile::Bipartite(b) => enumerate::maximal_independent_sets_bipartite(b),
                other => enumerate::maximal_independent_sets(graph_of(other)?),
            };
            sets.into_iter().map(Witness::Vertices).collect()
        }
        Structure::EdgeSeparators | Structure::EdgeStSeparators | Structure::LargestEdgeSeparators => {
            edge_separators(args, inst)?.into_iter().map(Witness::EdgeLabels).collect()
        }
        Structure::UnionClosure => setfamily::union_closure(family_of(inst)?)?
            .into_iter()
            .map(Witness::Vertices)
            .collect(),
        _ => return Ok(None),
    }))
}

fn count(args: &StructureArgs, inst: &InstanceFile) -> Result<BigCount> {
    Ok(match args.structure {
        Structure::IndependentSets => count_independent_sets(graph_of(inst)?),
        Structure::VertexCovers => count_vertex_covers(graph_of(inst)?),
        Structure::DominatingSets => count_dominating_sets(graph_of(inst)?)?,
        Structure::MaximalIs => match inst {
            InstanceFile::Bipartite(b) => enumerate::count_maximal_independent_sets_bipartite(b),
            other => enumerate::count_maximal_independent_sets(graph_of(other)?),
        },
        Structure::NaeSat => match inst {
            InstanceFile::Formula(f) => count_nae_sat(f),
            _ => return Err(Error::Input("nae-sat needs a formula".into())),
        },
        Structure::UnionClosure => setfamily::count_union_closure(family_of(inst)?)?,
        Structure::UnionRepresentations => {
            let f = family_of(inst)?;
            let target: Subset = match &args.target {
                Some(t) => t.iter().copied().collect(),
                None => (1..=f.n()).collect(),
            };
            setfamily::count_union_representations(f, &target)?
        }
        _ => BigCount::from(witnesses(args, inst)?.expect("enumerable").len()),
    })
}

fn envelope(mut body: serde_json::Map<String, Value>) -> String {
    body.insert("schema".into(), json!(SCHEMA));
    crate::canonical_json(&Value::Object(body))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn structure_body(args: &StructureArgs, listing: bool) -> Result<serde_json::Map<String, Value>> {
    let inst = args.input.read()?;
    let mut body = serde_json::Map::new();
    body.insert("structure".into(), json!(structure_name(args.structure)));
    if listing {
        let list = witnesses(args, &inst)?.ok_or_else(|| {
            Error::Input(format!(
                "{} can only be counted; use `count`",
                structure_name(args.structure)
            ))
        })?;
        body.insert("count".into(), to_value(&BigCount::from(list.len())));
        body.insert("witnesses".into(), to_value(&list));
    } else {
        body.insert("count".into(), to_value(&count(args, &inst)?));
    }
    Ok(body)
}

fn seed_catalog(out: &Path) -> Result<serde_json::Map<String, Value>> {
    let certs_dir = out.join("certificates");
    fs::create_dir_all(&certs_dir).map_err(|e| Error::Input(format!("{}: {e}", certs_dir.display())))?;
    let mut written = Vec::new();
    for (name, inst) in catalog::seed_instances() {
        let file = match inst {
            Instance::Graph(g) => (format!("{name}.graph"), render_graph(&InstanceFile::Graph(g))),
            Instance::Bipartite(b) => (format!("{name}.graph"), render_graph(&InstanceFile::Bipartite(b))),
            Instance::Multigraph(m) => (format!("{name}.graph"), render_graph(&InstanceFile::Multigraph(m))),
            Instance::Formula(f) => (format!("{name}.json"), Some(crate::canonical_json(&f))),
            Instance::Family(f) => (format!("{name}.json"), Some(crate::canonical_json(&f))),
        };
        let (file, text) = (file.0, file.1.expect("renderable"));
        write_file(&out.join(&file), &text)?;
        written.push(file);
    }
    for (i, cert) in catalog::verify_suite().iter().enumerate() {
        let file = format!("certificates/{:02}-{}.json", i + 1, cert.reduction.name());
        write_file(&out.join(&file), &cert.to_json())?;
        written.push(file);
    }
    written.sort();
    let mut body = serde_json::Map::new();
    body.insert("written".into(), json!(written));
    Ok(body)
}

fn dispatch(cli: Cli) -> Result<(i32, String)> {
    match cli.command {
        Command::Count(args) => Ok((0, envelope(structure_body(&args, false)?))),
        Command::Enumerate(args) => Ok((0, envelope(structure_body(&args, true)?))),
        Command::Reduce {
            name,
            input,
            t,
            k,
            st,
            indexed,
            emit_cert,
        } => {
            let kind: ReductionKind = name.parse()?;
            let st = match st.as_deref() {
                None => None,
                Some(&[s, t]) => Some((s, t)),
                Some(_) => return Err(Error::Input("--st takes two vertices S,T".into())),
            };
            let source = input.read()?.into_instance();
            let cert = reduce(kind, &source, &ReduceOptions { t, k, st, indexed })?;
            if emit_cert {
                Ok((0, cert.to_json()))
            } else {
                let mut body = serde_json::Map::new();
                body.insert("reduction".into(), json!(kind.name()));
                body.insert("target".into(), to_value(&cert.target));
                body.insert("parameters".into(), to_value(&cert.parameters));
                Ok((0, envelope(body)))
            }
        }
        Command::Verify { cert, all, budget } => {
            let budget: Budget = budget.parse()?;
            if all {
                let results = verify_all(&catalog::verify_suite(), budget);
                let failed = results.iter().any(|r| !r.passed());
                let mut body = serde_json::Map::new();
                body.insert("result".into(), to_value(if failed { &Outcome::Fail } else { &Outcome::Pass }));
                body.insert("results".into(), to_value(&results));
                return Ok((failed as i32, envelope(body)));
            }
            let path = cert.expect("clap requires --cert without --all");
            let cert: ReductionCertificate = serde_json::from_str(&read_file(&path)?)
                .map_err(|e| Error::Input(format!("bad certificate: {e}")))?;
            let r = verify_certificate(&cert, budget);
            Ok((if r.passed() { 0 } else { 1 }, r.to_json()))
        }
        Command::SeedCatalog { out } => Ok((0, envelope(seed_catalog(&out)?))),
    }
}

/// Runs one command line (program name first). Returns the exit status and
/// the text for standard output: 0 on success, 1 when verification fails,
/// 2 on bad input.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return (0, e.to_string()),
        Err(e) => return (2, e.to_string()),
    };
    match dispatch(cli) {
        Ok(done) => done,
        Err(e) => {
            let mut body = serde_json::Map::new();
            body.insert("error".into(), json!(e.to_string()));
            (2, envelope(body))
        }
    }
}
