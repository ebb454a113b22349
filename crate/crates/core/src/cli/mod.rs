//! The `gaddr` command-line front end.
//!
//! Every subcommand prints line-oriented text, or one JSON document with
//! `--json`. Exit codes: 0 success, 1 verification failure, 2 usage or input
//! error, 3 search budget exhausted.
//!
//! Graph arguments are generator specs (`triangular:5`, `hamming:2,3`,
//! `product:complete:3□path:4`), paths to edge-list files, or `-` for stdin.

mod reproduce;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::addressing::{
    addressing_to_bicliques, constructive_addressing, parse_bicliques, render_bicliques, verify_addressing,
    verify_biclique_partition, Addressing, Biclique, Verification,
};
use crate::graph::{parse_graph_text, parse_spec, render_graph_text, Graph, Multigraph};
use crate::linalg::{
    hamming_distance_spectrum, johnson_distance_spectrum, triangular_adjacency_spectrum, triangular_distance_spectrum,
    witsenhausen_bound, Inertia, IntSymMatrix, Rational, SpectrumTable,
};
use crate::search::{bp_report, family_lower_bound, min_biclique_partition, SearchConfig, SearchResult, DEFAULT_NODE_BUDGET};
use crate::{Error, Result, SearchStatus};

pub use reproduce::{reproduce, Claim, ClaimStatus, ReproduceOptions, REPRODUCE_IDS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gaddr", version, about = "Graph addressings, distance spectra and biclique partitions")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Budget {
    /// Search node budget.
    #[arg(long, env = "GADDR_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Search wall-clock budget in seconds.
    #[arg(long, env = "GADDR_TIME_BUDGET_SECS")]
    time_budget: Option<u64>,
    /// Never try partition sizes above this.
    #[arg(long)]
    upper: Option<usize>,
    /// Recompute the residual eigenvalue bound every this many levels.
    #[arg(long, default_value_t = 1)]
    bound_interval: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl Budget {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            node_budget: self.node_budget,
            time_budget: self.time_budget.map(Duration::from_secs),
            initial_upper: self.upper,
            bound_interval: self.bound_interval,
            threads: self.threads,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph in edge-list format.
    Gen { graph: String },
    /// Print the distance matrix.
    Distances { graph: String },
    /// Closed-form spectrum of `hamming:N,Q`, `triangular:N` or `johnson:N,M`.
    Spectrum {
        family: String,
        /// Adjacency spectrum instead of distance spectrum (triangular only).
        #[arg(long)]
        adjacency: bool,
        /// Confirm every multiplicity against the actual matrix.
        #[arg(long)]
        check: bool,
    },
    /// Inertia of the distance matrix of a graph, or of a matrix file.
    Inertia {
        #[arg(required_unless_present = "matrix")]
        graph: Option<String>,
        /// Symmetric integer matrix file (`n` header, then rows).
        #[arg(long, conflicts_with = "graph")]
        matrix: Option<String>,
        /// Inertia of `M - λI` for a rational `λ` such as `-3/2`.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Lower and upper bounds on the addressing length.
    Bound { graph: String },
    /// Explicit addressing for complete, Hamming, tree and product graphs.
    Address {
        graph: String,
        /// Print the equivalent biclique list instead.
        #[arg(long)]
        bicliques: bool,
    },
    /// Check an addressing or a biclique list against a graph.
    #[command(group(ArgGroup::new("certificate").required(true).args(["addressing", "bicliques"])))]
    Verify {
        graph: String,
        /// Addressing file, or `-` for stdin.
        #[arg(long)]
        addressing: Option<String>,
        /// Biclique list file, or `-` for stdin.
        #[arg(long)]
        bicliques: Option<String>,
    },
    /// Minimum biclique partition of the distance multigraph.
    Search {
        #[arg(required_unless_present = "multigraph")]
        graph: Option<String>,
        /// Search this multiplicity matrix file instead.
        #[arg(long, conflicts_with = "graph")]
        multigraph: Option<String>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Bounds, construction and search together.
    Report {
        graph: String,
        #[command(flatten)]
        budget: Budget,
    },
    /// Recompute a stored claim: an id, `all`, or `list`.
    Reproduce {
        id: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        /// Also run the slower searches.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "GADDR_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
}

struct Outcome {
    text: String,
    json: Value,
    code: i32,
    /// Timing and other run-dependent lines, sent to stderr.
    note: Option<String>,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: EXIT_OK, note: None }
    }
}

/// Parse `args` (program name first) and run the command against the given
/// streams. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(o) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("plain data"))
            } else {
                write!(out, "{}", o.text)
            };
            if let Some(note) = o.note {
                let _ = writeln!(err, "{note}");
            }
            if written.is_err() {
                return EXIT_USAGE;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary: runs against the process streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(args, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock())
}

fn read_source(src: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if src == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Error::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(src).map_err(|e| Error::Io(format!("{src}: {e}")))?;
    }
    Ok(text)
}

fn load_graph(src: &str, stdin: &mut dyn Read) -> Result<Graph> {
    if src == "-" || Path::new(src).is_file() {
        parse_graph_text(&read_source(src, stdin)?)
    } else {
        parse_spec(src)
    }
}

fn inertia_json(i: Inertia) -> Value {
    json!({ "n_plus": i.n_plus, "n_zero": i.n_zero, "n_minus": i.n_minus })
}

fn bicliques_json(parts: &[Biclique]) -> Value {
    Value::Array(parts.iter().map(|b| json!({ "left": b.left(), "right": b.right() })).collect())
}

fn verification_outcome(v: Verification) -> Outcome {
    match v {
        Verification::Ok => Outcome::ok("ok\n".into(), json!({ "result": "ok" })),
        Verification::Violation { u, v, got, want } => Outcome {
            text: format!("violation: pair ({u}, {v}) has {got}, needs {want}\n"),
            json: json!({ "result": "violation", "u": u, "v": v, "got": got, "want": want }),
            code: EXIT_VIOLATION,
            note: None,
        },
    }
}

fn opt_text(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |x| x.to_string())
}

fn search_fields(r: &SearchResult) -> (String, Value) {
    let mut text = format!(
        "status: {}\nbest_size: {}\nproven_lower: {}\nspectral_lower: {}\nnodes_explored: {}\n",
        r.status.as_str(),
        r.best_size,
        r.proven_lower,
        r.spectral_lower,
        r.nodes_explored
    );
    if let Some(c) = &r.certificate {
        text += "certificate:\n";
        text += &render_bicliques(c);
    }
    let json = json!({
        "status": r.status.as_str(),
        "best_size": r.best_size,
        "proven_lower": r.proven_lower,
        "spectral_lower": r.spectral_lower,
        "nodes_explored": r.nodes_explored,
        "certificate": r.certificate.as_deref().map(bicliques_json),
    });
    (text, json)
}

fn search_code(r: &SearchResult) -> i32 {
    match r.status {
        SearchStatus::Optimal => EXIT_OK,
        _ => EXIT_BUDGET,
    }
}

fn numbers(s: Option<&str>) -> Result<Vec<u32>> {
    s.unwrap_or("")
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad number `{t}`"))))
        .collect()
}

/// Closed-form table for a family spec, and the matrix it describes.
fn family_spectrum(family: &str, adjacency: bool) -> Result<(SpectrumTable, Box<dyn Fn() -> Result<IntSymMatrix>>)> {
    let (name, args) = match family.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (family, None),
    };
    let spec = family.to_string();
    let distances: Box<dyn Fn() -> Result<IntSymMatrix>> = Box::new(move || parse_spec(&spec)?.all_pairs_distances());
    if adjacency && name != "triangular" {
        return Err(Error::InvalidParameter("adjacency spectrum is available for triangular graphs only".into()));
    }
    match (name, numbers(args)?.as_slice()) {
        ("hamming", &[n, q]) => Ok((hamming_distance_spectrum(n, q)?, distances)),
        ("johnson", &[n, m]) => Ok((johnson_distance_spectrum(n, m)?, distances)),
        ("triangular", &[n]) if adjacency => {
            let spec = family.to_string();
            Ok((triangular_adjacency_spectrum(n)?, Box::new(move || Ok(parse_spec(&spec)?.adjacency_matrix()))))
        }
        ("triangular", &[n]) => Ok((triangular_distance_spectrum(n)?, distances)),
        _ => Err(Error::Parse(format!("no closed-form spectrum for `{family}`"))),
    }
}

/// First eigenvalue whose multiplicity in `m` disagrees with the table, or
/// an inertia disagreement.
fn spectrum_mismatch(table: &SpectrumTable, m: &IntSymMatrix) -> Option<String> {
    if table.order() != m.order() {
        return Some(format!("table covers {} eigenvalues, matrix has order {}", table.order(), m.order()));
    }
    for (lambda, mult) in table.entries() {
        let got = m.eigenvalue_multiplicity(lambda);
        if got != *mult {
            return Some(format!("eigenvalue {lambda} has multiplicity {got}, table says {mult}"));
        }
    }
    let (got, want) = (m.inertia(), table.inertia());
    (got != want).then(|| format!("inertia {got}, table says {want}"))
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> Result<Outcome> {
    match cmd {
        Command::Gen { graph } => {
            let g = load_graph(&graph, stdin)?;
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
            Ok(Outcome::ok(render_graph_text(&g), json!({ "n": g.order(), "edges": edges })))
        }
        Command::Distances { graph } => {
            let d = load_graph(&graph, stdin)?.all_pairs_distances()?;
            let rows: Vec<&[i64]> = (0..d.order()).map(|i| d.row(i)).collect();
            Ok(Outcome::ok(d.render_text(), json!({ "n": d.order(), "rows": rows })))
        }
        Command::Spectrum { family, adjacency, check } => {
            let (table, matrix) = family_spectrum(&family, adjacency)?;
            let inertia = table.inertia();
            let mut text = format!("{}inertia: {inertia}\n", table.render_text());
            let mut json = json!({ "spectrum": table.to_json(), "inertia": inertia_json(inertia) });
            let mut code = EXIT_OK;
            if check {
                let mismatch = spectrum_mismatch(&table, &matrix()?);
                text += &format!("check: {}\n", mismatch.as_deref().unwrap_or("ok"));
                json["check"] = json!(mismatch.as_deref().unwrap_or("ok"));
                if mismatch.is_some() {
                    code = EXIT_VIOLATION;
                }
            }
            Ok(Outcome { text, json, code, note: None })
        }
        Command::Inertia { graph, matrix, shift } => {
            let m = match (graph, matrix) {
                (_, Some(path)) => IntSymMatrix::parse_text(&read_source(&path, stdin)?)?,
                (Some(g), None) => load_graph(&g, stdin)?.all_pairs_distances()?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let inertia = match shift {
                Some(s) => {
                    let lambda: Rational = s.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                    m.shifted_inertia(&lambda)
                }
                None => m.inertia(),
            };
            let text = format!("inertia: {inertia}\nbound: {}\n", inertia.max_signed());
            Ok(Outcome::ok(text, json!({ "inertia": inertia_json(inertia), "bound": inertia.max_signed() })))
        }
        Command::Bound { graph } => {
            let g = load_graph(&graph, stdin)?;
            let inertia = g.all_pairs_distances()?.inertia();
            let improved = family_lower_bound(&g).filter(|&b| b > inertia.max_signed());
            let upper = constructive_addressing(&g).map(|a| a.length());
            let text = format!(
                "order: {}\ninertia: {inertia}\nspectral_lower: {}\nimproved_lower: {}\nconstructive_upper: {}\n",
                g.order(),
                inertia.max_signed(),
                opt_text(improved),
                opt_text(upper)
            );
            let json = json!({
                "order": g.order(),
                "inertia": inertia_json(inertia),
                "spectral_lower": inertia.max_signed(),
                "improved_lower": improved,
                "constructive_upper": upper,
            });
            Ok(Outcome::ok(text, json))
        }
        Command::Address { graph, bicliques } => {
            let g = load_graph(&graph, stdin)?;
            let a = constructive_addressing(&g)
                .ok_or_else(|| Error::InvalidParameter("no explicit construction for this graph".into()))?;
            if bicliques {
                let parts = addressing_to_bicliques(&a);
                Ok(Outcome::ok(render_bicliques(&parts), json!({ "bicliques": bicliques_json(&parts) })))
            } else {
                let rows: Vec<String> = (0..a.order()).map(|v| a.row_string(v)).collect();
                Ok(Outcome::ok(a.render_text(), json!({ "n": a.order(), "t": a.length(), "rows": rows })))
            }
        }
        Command::Verify { graph, addressing, bicliques } => {
            let g = load_graph(&graph, stdin)?;
            if let Some(src) = addressing {
                let a = Addressing::parse_text(&read_source(&src, stdin)?)?;
                Ok(verification_outcome(verify_addressing(&g, &a)?))
            } else {
                let src = bicliques.expect("clap requires one certificate");
                let parts = parse_bicliques(&read_source(&src, stdin)?)?;
                Ok(verification_outcome(verify_biclique_partition(&g.distance_multigraph()?, &parts)?))
            }
        }
        Command::Search { graph, multigraph, budget } => {
            let h = match (graph, multigraph) {
                (_, Some(path)) => Multigraph::from_matrix(&IntSymMatrix::parse_text(&read_source(&path, stdin)?)?)?,
                (Some(g), None) => load_graph(&g, stdin)?.distance_multigraph()?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let r = min_biclique_partition(&h, &budget.config())?;
            let (text, json) = search_fields(&r);
            Ok(Outcome { text, json, code: search_code(&r), note: Some(format!("elapsed: {:?}", r.elapsed)) })
        }
        Command::Report { graph, budget } => {
            let g = load_graph(&graph, stdin)?;
            let inertia = g.all_pairs_distances()?.inertia();
            let rep = bp_report(&g, &budget.config())?;
            debug_assert_eq!(rep.spectral_lower, witsenhausen_bound(&g.distance_multigraph()?));
            let (search_text, search_json) = search_fields(&rep.search);
            let text = format!(
                "order: {}\ninertia: {inertia}\nfamily_lower: {}\nconstructive_upper: {}\n{search_text}",
                g.order(),
                opt_text(rep.family_lower),
                opt_text(rep.constructive_upper)
            );
            let json = json!({
                "order": g.order(),
                "inertia": inertia_json(inertia),
                "family_lower": rep.family_lower,
                "constructive_upper": rep.constructive_upper,
                "search": search_json,
            });
            let note = Some(format!("elapsed: {:?}", rep.search.elapsed));
            Ok(Outcome { text, json, code: search_code(&rep.search), note })
        }
        Command::Reproduce { id, n, q, m, search, seed, node_budget } => {
            if id == "list" {
                let text: String = REPRODUCE_IDS.iter().map(|i| format!("{i}\n")).collect();
                return Ok(Outcome::ok(text, json!(REPRODUCE_IDS)));
            }
            let opts = ReproduceOptions { n, q, m, search, seed, node_budget };
            let claims = if id == "all" {
                let mut all = Vec::new();
                for i in REPRODUCE_IDS {
                    all.extend(reproduce(i, &ReproduceOptions { n: None, q: None, m: None, ..opts.clone() })?);
                }
                all
            } else {
                reproduce(&id, &opts)?
            };
            let text: String = claims.iter().map(|c| c.render() + "\n").collect();
            let code = if claims.iter().any(|c| c.status == ClaimStatus::Fail) { EXIT_VIOLATION } else { EXIT_OK };
            let json = serde_json::to_value(&claims).expect("plain data");
            Ok(Outcome { text, json, code, note: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gaddr").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&[], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["bound", "nonsense:3"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["reproduce", "no-such-claim"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn bound_triangular_six() {
        let (code, out, _) = run_str(&["bound", "triangular:6"], "");
        assert_eq!(code, 0);
        assert!(out.contains("spectral_lower: 5\n"), "{out}");
        assert!(out.contains("improved_lower: 6\n"), "{out}");
    }

    #[test]
    fn address_then_verify_via_stdin() {
        let (code, addr, _) = run_str(&["address", "hamming:2,3"], "");
        assert_eq!(code, 0);
        assert!(addr.starts_with("9 4\n"));
        let (code, out, _) = run_str(&["verify", "hamming:2,3", "--addressing", "-"], &addr);
        assert_eq!((code, out.as_str()), (0, "ok\n"));
    }

    #[test]
    fn verify_violation_exits_one() {
        let (code, out, _) = run_str(&["verify", "complete:3", "--bicliques", "-"], "0 | 1\n0 | 2\n");
        assert_eq!(code, EXIT_VIOLATION);
        assert_eq!(out, "violation: pair (1, 2) has 0, needs 1\n");
    }

    #[test]
    fn search_budget_exit_three() {
        let (code, out, _) = run_str(&["search", "petersen", "--node-budget", "5"], "");
        assert_eq!(code, EXIT_BUDGET, "{out}");
        let (code, out, _) = run_str(&["search", "complete:5"], "");
        assert_eq!(code, 0);
        assert!(out.contains("best_size: 4\n") && out.contains("certificate:\n"));
    }

    #[test]
    fn spectrum_check_and_json() {
        let (code, out, _) = run_str(&["spectrum", "hamming:3,2", "--check"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "12/1 1\n-4/1 3\n0/1 4\ninertia: (1, 4, 3)\ncheck: ok\n");
        let (code, out, _) = run_str(&["--json", "inertia", "petersen"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["bound"], 5);
    }
}
