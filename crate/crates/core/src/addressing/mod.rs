//! Addressings over `{0, a, b}` and their biclique form.
//!
//! Column `j` of an addressing is the biclique whose left side holds the
//! vertices with `a` in column `j` and whose right side holds those with `b`.
//! An addressing of `G` is exactly a biclique partition of the distance
//! multigraph of `G`.

mod constructions;
mod eigensharp;
mod known;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{Graph, Multigraph};
use crate::{Error, Result};

pub use constructions::*;
pub use eigensharp::*;
pub use known::{four_vertex_example, triangular5_six_bicliques};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    A,
    B,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::A => 'a',
            Symbol::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '0' => Ok(Symbol::Zero),
            'a' => Ok(Symbol::A),
            'b' => Ok(Symbol::B),
            _ => Err(Error::Parse(format!("unexpected address symbol `{c}`"))),
        }
    }
}

/// Number of positions where one word has `a` and the other `b`.
pub fn address_distance(u: &[Symbol], v: &[Symbol]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch { expected: u.len(), got: v.len() });
    }
    Ok(u.iter()
        .zip(v)
        .filter(|(x, y)| matches!((x, y), (Symbol::A, Symbol::B) | (Symbol::B, Symbol::A)))
        .count())
}

/// An `n × t` matrix of symbols; row `v` is the address of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Addressing {
    n: usize,
    t: usize,
    cells: Vec<Symbol>,
}

impl Addressing {
    pub fn new(n: usize, t: usize, cells: Vec<Symbol>) -> Result<Self> {
        if cells.len() != n * t {
            return Err(Error::SizeMismatch { expected: n * t, got: cells.len() });
        }
        Ok(Addressing { n, t, cells })
    }

    /// Rows written over `0`, `a`, `b`, e.g. `["aa0", "ab0"]`.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let t = rows.first().map_or(0, |r| r.as_ref().chars().count());
        let mut cells = Vec::with_capacity(rows.len() * t);
        for r in rows {
            let before = cells.len();
            for c in r.as_ref().chars() {
                cells.push(Symbol::from_char(c)?);
            }
            if cells.len() - before != t {
                return Err(Error::SizeMismatch { expected: t, got: cells.len() - before });
            }
        }
        Self::new(rows.len(), t, cells)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.t
    }

    pub fn row(&self, v: usize) -> &[Symbol] {
        &self.cells[v * self.t..(v + 1) * self.t]
    }

    pub fn get(&self, v: usize, j: usize) -> Symbol {
        self.cells[v * self.t + j]
    }

    pub fn column(&self, j: usize) -> Vec<Symbol> {
        (0..self.n).map(|v| self.get(v, j)).collect()
    }

    pub fn row_string(&self, v: usize) -> String {
        self.row(v).iter().map(|s| s.as_char()).collect()
    }

    /// Header `n t` then one row per line.
    pub fn render_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.t);
        for v in 0..self.n {
            out.push_str(&self.row_string(v));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty addressing file".into()))?;
        let mut it = header.split_whitespace().map(str::parse::<usize>);
        let (n, t) = match (it.next(), it.next(), it.next()) {
            (Some(Ok(n)), Some(Ok(t)), None) => (n, t),
            _ => return Err(Error::Parse(format!("bad addressing header `{header}`"))),
        };
        // rows of an addressing with t = 0 are empty lines, which were skipped
        let rows: Vec<&str> = lines.collect();
        if t == 0 && rows.is_empty() {
            return Self::new(n, 0, Vec::new());
        }
        if rows.len() != n {
            return Err(Error::SizeMismatch { expected: n, got: rows.len() });
        }
        let a = Self::from_strs(&rows)?;
        if a.t != t {
            return Err(Error::SizeMismatch { expected: t, got: a.t });
        }
        Ok(a)
    }
}

impl fmt::Display for Addressing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Outcome of a verification; a violation names the lexicographically
/// smallest failing pair with the value found and the value required.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Verification {
    Ok,
    Violation { u: usize, v: usize, got: u64, want: u64 },
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verification::Ok)
    }
}

fn first_violation(n: usize, pair: impl Fn(usize, usize) -> Option<(u64, u64)> + Sync) -> Verification {
    (0..n)
        .into_par_iter()
        .find_map_first(|u| {
            (u + 1..n).find_map(|v| pair(u, v).map(|(got, want)| Verification::Violation { u, v, got, want }))
        })
        .unwrap_or(Verification::Ok)
}

/// Check that address distance equals graph distance for every pair.
pub fn verify_addressing(g: &Graph, addr: &Addressing) -> Result<Verification> {
    if addr.order() != g.order() {
        return Err(Error::SizeMismatch { expected: g.order(), got: addr.order() });
    }
    let d = g.all_pairs_distances()?;
    Ok(first_violation(g.order(), |u, v| {
        let got = address_distance(addr.row(u), addr.row(v)).expect("rows share a length") as u64;
        let want = d.get(u, v) as u64;
        (got != want).then_some((got, want))
    }))
}

/// Two disjoint nonempty vertex sets, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Biclique {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Biclique {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        right.sort_unstable();
        if left.windows(2).any(|w| w[0] == w[1]) || right.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedBiclique("repeated vertex".into()));
        }
        if left.is_empty() || right.is_empty() {
            return Err(Error::MalformedBiclique("empty side".into()));
        }
        if let Some(v) = left.iter().find(|v| right.binary_search(v).is_ok()) {
            return Err(Error::MalformedBiclique(format!("vertex {v} on both sides")));
        }
        Ok(Biclique { left, right })
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// Whether the pair lies across the biclique.
    pub fn covers(&self, u: usize, v: usize) -> bool {
        let (l, r) = (&self.left, &self.right);
        (l.binary_search(&u).is_ok() && r.binary_search(&v).is_ok()) || (l.binary_search(&v).is_ok() && r.binary_search(&u).is_ok())
    }

    pub fn max_vertex(&self) -> usize {
        (*self.left.last().unwrap()).max(*self.right.last().unwrap())
    }

    /// `left | right` with space-separated vertices.
    pub fn render(&self) -> String {
        let side = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        format!("{} | {}", side(&self.left), side(&self.right))
    }

    pub fn parse(line: &str) -> Result<Self> {
        let (l, r) = line.split_once('|').ok_or_else(|| Error::Parse(format!("missing `|` in `{line}`")))?;
        let side = |s: &str| -> Result<Vec<usize>> {
            s.split_whitespace().map(|t| t.parse().map_err(|_| Error::Parse(format!("bad vertex `{t}`")))).collect()
        };
        Self::new(side(l)?, side(r)?)
    }
}

pub fn render_bicliques(parts: &[Biclique]) -> String {
    parts.iter().map(|b| b.render() + "\n").collect()
}

pub fn parse_bicliques(text: &str) -> Result<Vec<Biclique>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(Biclique::parse).collect()
}

/// One biclique per column that has both an `a` and a `b`; other columns
/// carry no distance and are dropped.
pub fn addressing_to_bicliques(addr: &Addressing) -> Vec<Biclique> {
    (0..addr.length())
        .filter_map(|j| {
            let col = addr.column(j);
            let pick = |s| col.iter().enumerate().filter(|(_, c)| **c == s).map(|(v, _)| v).collect::<Vec<_>>();
            Biclique::new(pick(Symbol::A), pick(Symbol::B)).ok()
        })
        .collect()
}

pub fn bicliques_to_addressing(n: usize, parts: &[Biclique]) -> Result<Addressing> {
    let t = parts.len();
    let mut cells = vec![Symbol::Zero; n * t];
    for (j, b) in parts.iter().enumerate() {
        if b.max_vertex() >= n {
            return Err(Error::VertexOutOfRange { vertex: b.max_vertex(), n });
        }
        for &v in b.left() {
            cells[v * t + j] = Symbol::A;
        }
        for &v in b.right() {
            cells[v * t + j] = Symbol::B;
        }
    }
    Addressing::new(n, t, cells)
}

/// Per-pair coverage counts of a biclique list, row-major `n × n`.
pub fn coverage(n: usize, parts: &[Biclique]) -> Result<Vec<u64>> {
    let mut cover = vec![0u64; n * n];
    for b in parts {
        if b.max_vertex() >= n {
            return Err(Error::VertexOutOfRange { vertex: b.max_vertex(), n });
        }
        for &u in b.left() {
            for &v in b.right() {
                cover[u * n + v] += 1;
                cover[v * n + u] += 1;
            }
        }
    }
    Ok(cover)
}

/// Check that every pair lies across exactly as many bicliques as its
/// multiplicity in `h`.
pub fn verify_biclique_partition(h: &Multigraph, parts: &[Biclique]) -> Result<Verification> {
    let n = h.order();
    let cover = coverage(n, parts)?;
    Ok(first_violation(n, |u, v| {
        let (got, want) = (cover[u * n + v], h.mult(u, v) as u64);
        (got != want).then_some((got, want))
    }))
}
