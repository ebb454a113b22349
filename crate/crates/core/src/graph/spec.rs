//! Named generator strings such as `hamming:3,2` and the edge-list text
//! format (`n m` header, then `u v` per line, 0-indexed).

use super::*;
use crate::{Error, Result};

fn numbers(args: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number `{t}`"))))
        .collect()
}

fn exactly<const K: usize>(name: &str, args: Option<&str>) -> Result<[usize; K]> {
    let v = numbers(args.ok_or_else(|| Error::Parse(format!("`{name}` needs {K} argument(s)")))?)?;
    v.try_into().map_err(|_| Error::Parse(format!("`{name}` needs {K} argument(s)")))
}

/// Parse a generator name. Products join factor specs with `□` (or `*`):
/// `product:complete:3□complete:2`.
pub fn parse_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("product:") {
        let factors = rest
            .split(['□', '*'])
            .map(parse_spec)
            .collect::<Result<Vec<_>>>()?;
        return cartesian_product(&factors);
    }
    let (name, args) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    match name {
        "complete" => gen_complete(exactly::<1>(name, args)?[0]),
        "hamming" => {
            let [n, q] = exactly::<2>(name, args)?;
            gen_hamming(n, q)
        }
        "triangular" => gen_triangular(exactly::<1>(name, args)?[0]),
        "johnson" => {
            let [n, m] = exactly::<2>(name, args)?;
            gen_johnson(n, m)
        }
        "petersen" => gen_petersen(),
        "clebsch" => gen_clebsch(),
        "multipartite" => gen_complete_multipartite(&numbers(args.unwrap_or(""))?),
        "bipartite+edge" => {
            let [a, b] = exactly::<2>(name, args)?;
            gen_bipartite_plus_edge(a, b)
        }
        "path" => gen_path(exactly::<1>(name, args)?[0]),
        "star" => gen_star(exactly::<1>(name, args)?[0]),
        "cycle" => gen_cycle(exactly::<1>(name, args)?[0]),
        "tree" => {
            let parents = args
                .unwrap_or("")
                .split(',')
                .map(|t| match t.trim() {
                    "-" => Ok(None),
                    t => t.parse().map(Some).map_err(|_| Error::Parse(format!("bad parent `{t}`"))),
                })
                .collect::<Result<Vec<_>>>()?;
            gen_tree(&parents)
        }
        _ => Err(Error::Parse(format!("unknown graph family `{name}`"))),
    }
}

/// Parse the edge-list text format.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let pair = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
        }
    };
    let (n, m) = pair(header)?;
    let edges = lines.map(pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::SizeMismatch { expected: m, got: edges.len() });
    }
    Graph::new(n, edges)
}

pub fn render_graph_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
