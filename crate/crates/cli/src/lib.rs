//! Command-line front end for the `graphflag` library.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Number, Value};

use graphflag::acceptance::{run_all, AcceptanceConfig};
use graphflag::flagvec::{
    basis_graph, complement_transform, concise_flag_vector, edge_flag_vector, subgraph_flag_vector,
    total_flag_vector, verbose_flag_vector, average_coefficient, ConciseVector, VerboseMethod,
    VerboseVector,
};
use graphflag::graphcore::{enumerate_graphs, partition_count};
use graphflag::polytope::{hull_report, nullspace_report, span_dimension, HullReport};
use graphflag::{parse_graph, FlagError, OptionalGraph, Partition, Word};

#[derive(Parser, Debug)]
#[command(name = "graphflag", version, about = "Flag vectors of graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Verbose,
    Concise,
    Subgraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    Shelling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HullMode {
    Vertices,
    Facets,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Flag vector of a graph; optional edges are written `?i-j`.
    Flagvec {
        #[arg(long, value_enum, default_value_t = Form::Verbose)]
        form: Form,
        #[arg(long, conflicts_with = "graph_file", required_unless_present = "graph_file")]
        graph: Option<String>,
        /// One graph per line; `#` starts a comment.
        #[arg(long)]
        graph_file: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Complement of a graph, or with `--transform` the verbose vector of
    /// the complement obtained by transforming the graph's vector.
    Complement {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        transform: bool,
    },
    /// Dimension of the span of the flag vectors on `n` vertices.
    Rank {
        #[arg(long = "n")]
        n: usize,
    },
    /// Vertices or facets of the convex hull of the flag vectors.
    Hull {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = HullMode::Vertices)]
        mode: HullMode,
    },
    /// Kernel of the flag vector map against the optional-cycle relations.
    Nullspace {
        #[arg(long = "n")]
        n: usize,
    },
    /// Sum and mean of flag vector coefficients over all labelled graphs.
    Average {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        word: Option<String>,
    },
    /// Isomorphism classes of graphs on `n` vertices.
    Enumerate {
        #[arg(long = "n")]
        n: usize,
    },
    /// Basis element of a partition, e.g. `[3+1]`.
    Basis {
        #[arg(long)]
        partition: String,
    },
    /// Edge flag vector of a graph.
    Edgeflag {
        #[arg(long)]
        graph: String,
    },
    /// Runs the acceptance suite.
    Selftest,
}

/// Text and json renderings of one result.
struct Output {
    text: String,
    json: Value,
    /// Exit code when the command itself ran.
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 success, 1 usage error, 2 size limit refused.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json values serialise")
                ),
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                FlagError::SizeLimit { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn execute(cmd: &Command) -> Result<Output, FlagError> {
    match cmd {
        Command::Flagvec {
            form,
            graph,
            graph_file,
            method,
        } => {
            let graphs = match (graph, graph_file) {
                (Some(s), _) => vec![parse_graph(s)?],
                (None, Some(path)) => read_graph_file(path)?,
                (None, None) => unreachable!("clap requires one of the graph inputs"),
            };
            let method = match method {
                Method::Recursion => VerboseMethod::Recursion,
                Method::Shelling => VerboseMethod::ShellingSum,
            };
            let mut text = String::new();
            let mut items = Vec::new();
            for og in &graphs {
                let (t, j) = match form {
                    Form::Verbose => {
                        let v = verbose_flag_vector(og, method)?;
                        (v.to_text_map(), verbose_json(&v))
                    }
                    Form::Concise => {
                        let v = concise_flag_vector(og)?;
                        (v.to_text_map(), concise_json(&v))
                    }
                    Form::Subgraph => {
                        let v = subgraph_flag_vector(og)?;
                        (v.to_text_map(), concise_json(&v))
                    }
                };
                if graph_file.is_some() {
                    let _ = writeln!(text, "{og}\t{t}");
                } else {
                    let _ = writeln!(text, "{t}");
                }
                let mut m = Map::new();
                m.insert("graph".into(), json!(og.to_string()));
                m.insert("form".into(), json!(form_name(*form)));
                m.insert("vector".into(), j);
                items.push(Value::Object(m));
            }
            let json = if graph_file.is_some() {
                json!({ "results": items })
            } else {
                items.pop().expect("one graph")
            };
            Ok(Output::ok(text, json))
        }
        Command::Complement { graph, transform } => {
            let og = parse_graph(graph)?;
            let g = ordinary(&og)?;
            if *transform {
                let v = complement_transform(&verbose_flag_vector(&g, VerboseMethod::Recursion)?)?;
                Ok(Output::ok(
                    format!("{}\n", v.to_text_map()),
                    json!({ "graph": g.to_string(), "complement_vector": verbose_json(&v) }),
                ))
            } else {
                let c = g.complement();
                Ok(Output::ok(
                    format!("{c}\n"),
                    json!({ "graph": g.to_string(), "complement": c.to_string() }),
                ))
            }
        }
        Command::Rank { n } => {
            let r = span_dimension(*n)?;
            let p = partition_count(*n);
            Ok(Output::ok(
                format!("rank: {r}\npartitions: {p}\n"),
                json!({ "n": n, "rank": r, "partitions": p }),
            ))
        }
        Command::Hull { n, mode } => {
            let r = hull_report(*n, *mode == HullMode::Facets)?;
            Ok(Output::ok(hull_text(&r, *mode), hull_json(&r, *mode)))
        }
        Command::Nullspace { n } => {
            let r = nullspace_report(*n)?;
            Ok(Output::ok(
                r.to_text(),
                json!({
                    "n": r.n,
                    "class_count": r.class_count,
                    "kernel_dim": r.kernel_dim,
                    "cycle_span_dim": r.cycle_span_dim,
                    "spans": r.spans,
                }),
            ))
        }
        Command::Average { n, word } => average(*n, word.as_deref()),
        Command::Enumerate { n } => {
            let classes = enumerate_graphs(*n)?;
            let text: String = classes.iter().map(|g| format!("{g}\n")).collect();
            let list: Vec<Value> = classes.iter().map(|g| json!(g.to_string())).collect();
            Ok(Output::ok(text, json!({ "n": n, "count": classes.len(), "graphs": list })))
        }
        Command::Basis { partition } => {
            let p: Partition = partition.parse()?;
            let sum = basis_graph(&p)?;
            let terms: Vec<Value> = sum
                .terms()
                .map(|(g, c)| json!({ "graph": g.to_string(), "coeff": big(c) }))
                .collect();
            let anchor = p.anchor_word();
            Ok(Output::ok(
                format!("basis: {sum}\nanchor: {anchor}\n"),
                json!({ "partition": p.parts(), "basis": terms, "anchor": anchor.to_string() }),
            ))
        }
        Command::Edgeflag { graph } => {
            let g = ordinary(&parse_graph(graph)?)?;
            let v = edge_flag_vector(&g)?;
            let mut m = Map::new();
            for (w, c) in v.iter() {
                m.insert(w.clone(), big(c));
            }
            Ok(Output::ok(
                format!("{}\n", v.to_text_map()),
                json!({ "graph": g.to_string(), "vector": m }),
            ))
        }
        Command::Selftest => {
            let results = run_all(&AcceptanceConfig::default());
            let all = results.iter().all(|r| r.passed);
            let text: String = results.iter().map(|r| format!("{}\n", r.line())).collect();
            let list: Vec<Value> = results
                .iter()
                .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            Ok(Output {
                text,
                json: json!({ "passed": all, "criteria": list }),
                code: if all { 0 } else { 1 },
            })
        }
    }
}

fn form_name(f: Form) -> &'static str {
    match f {
        Form::Verbose => "verbose",
        Form::Concise => "concise",
        Form::Subgraph => "subgraph",
    }
}

fn ordinary(og: &OptionalGraph) -> Result<graphflag::Graph, FlagError> {
    if og.is_ordinary() {
        Ok(og.regular())
    } else {
        Err(FlagError::Invariant("optional edges are not allowed here".into()))
    }
}

fn read_graph_file(path: &std::path::Path) -> Result<Vec<OptionalGraph>, FlagError> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| FlagError::Invariant(format!("cannot read {}: {e}", path.display())))?;
    content
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_graph)
        .collect()
}

fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

/// Integers as numbers, other rationals as `"p/q"` strings.
fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        big(x.numer())
    } else {
        json!(x.to_string())
    }
}

fn verbose_json(v: &VerboseVector) -> Value {
    let mut m = Map::new();
    for (w, c) in v.iter() {
        m.insert(w.to_string(), big(c));
    }
    Value::Object(m)
}

fn concise_json(v: &ConciseVector) -> Value {
    Value::Array(
        v.iter()
            .map(|(p, c)| json!({ "partition": p.parts(), "coeff": big(c) }))
            .collect(),
    )
}

fn hull_text(r: &HullReport, mode: HullMode) -> String {
    match mode {
        HullMode::Vertices => r.to_text(),
        HullMode::Facets => r
            .facets
            .as_deref()
            .unwrap_or_default()
            .iter()
            .map(|f| format!("{}\n", f.display_with(&r.partitions)))
            .collect(),
    }
}

fn hull_json(r: &HullReport, mode: HullMode) -> Value {
    let coords: Vec<Value> = r.partitions.iter().map(|p| json!(p.parts())).collect();
    match mode {
        HullMode::Vertices => {
            let points: Vec<Value> = r
                .points
                .iter()
                .map(|(g, v)| {
                    let dense: Vec<Value> = v.to_dense(&r.partitions).iter().map(big).collect();
                    json!({ "graph": g.to_string(), "vertex": r.vertex_flags[g], "point": dense })
                })
                .collect();
            json!({
                "n": r.n,
                "coordinates": coords,
                "distinct": r.all_distinct(),
                "vertex_count": r.vertex_count(),
                "points": points,
            })
        }
        HullMode::Facets => {
            let facets: Vec<Value> = r
                .facets
                .as_deref()
                .unwrap_or_default()
                .iter()
                .map(|f| {
                    let normal: Vec<Value> = f.normal.iter().map(big).collect();
                    json!({ "normal": normal, "offset": big(&f.offset) })
                })
                .collect();
            json!({ "n": r.n, "coordinates": coords, "facet_count": facets.len(), "facets": facets })
        }
    }
}

fn average(n: usize, word: Option<&str>) -> Result<Output, FlagError> {
    let graphs = BigInt::one() << graphflag::graphcore::pair_count(n);
    match word {
        Some(w) => {
            let w: Word = w.parse()?;
            if w.len() != n {
                return Err(FlagError::Invariant(format!("word {w} does not have length {n}")));
            }
            let (total, graphs) = average_coefficient(n, &w)?;
            let mean = BigRational::new(total.clone(), graphs.clone());
            Ok(Output::ok(
                format!("total: {total}\ngraphs: {graphs}\nmean: {mean}\n"),
                json!({ "n": n, "word": w.to_string(), "total": big(&total), "graphs": big(&graphs), "mean": rational(&mean) }),
            ))
        }
        None => {
            let total = total_flag_vector(n)?;
            let mut text = format!("graphs: {graphs}\n");
            let mut rows = Map::new();
            for (w, c) in total.iter() {
                let mean = BigRational::new(c.clone(), graphs.clone());
                let _ = writeln!(text, "{w}: total {c}, mean {mean}");
                rows.insert(w.to_string(), json!({ "total": big(c), "mean": rational(&mean) }));
            }
            Ok(Output::ok(text, json!({ "n": n, "graphs": big(&graphs), "words": rows })))
        }
    }
}
