//! Simple undirected graphs, distance multigraphs and all-pairs distances.
//!
//! Vertices are dense integers `0..n`. Family generators publish a fixed
//! lexicographic labeling so that certificates stay stable across runs.

mod generators;
mod spec;

use std::collections::{BTreeSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::linalg::IntSymMatrix;
use crate::{Error, Result};

pub use generators::*;
pub use spec::{parse_graph_text, parse_spec, render_graph_text};

/// Default cap on the order of any generated graph or product.
pub const DEFAULT_VERTEX_CAP: usize = 5_000;

static VERTEX_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_VERTEX_CAP);

/// Current cap on generator and product output.
pub fn vertex_cap() -> usize {
    VERTEX_CAP.load(Ordering::Relaxed)
}

/// Replace the global vertex cap. Exceeding the cap is an error, never a
/// truncation.
pub fn set_vertex_cap(cap: usize) {
    VERTEX_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_cap(requested: u128) -> Result<usize> {
    let cap = vertex_cap();
    if requested > cap as u128 {
        return Err(Error::SizeCap { requested, cap });
    }
    Ok(requested as usize)
}

/// Which named family a graph was generated from, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Hamming { n: usize, q: usize },
    Triangular(usize),
    Johnson { n: usize, m: usize },
    Petersen,
    Clebsch,
    Tree,
    Cycle(usize),
    /// Cartesian product; the factors are kept so constructions can recurse.
    Product(Vec<Graph>),
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    family: Family,
}

impl Graph {
    /// Build a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("repeated edge {u} {v}")));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect(), Family::Other))
    }

    /// `edges` must already be normalized (`u < v`), sorted and unique.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>, family: Family) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, family }
    }

    pub(crate) fn from_unsorted(n: usize, mut edges: Vec<(usize, usize)>, family: Family) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(n, edges, family)
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// BFS distances from `source`; unreachable vertices are `None`.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Largest distance, or an error naming a disconnected pair.
    pub fn diameter(&self) -> Result<u32> {
        let d = self.all_pairs_distances()?;
        Ok(d.max_entry().max(0) as u32)
    }

    /// All-pairs BFS distances. Sources are processed in parallel; the
    /// result does not depend on scheduling.
    pub fn all_pairs_distances(&self) -> Result<IntSymMatrix> {
        let rows: Vec<Vec<Option<u32>>> = (0..self.n).into_par_iter().map(|s| self.bfs(s)).collect();
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (u, row) in rows.iter().enumerate() {
            for (v, d) in row.iter().enumerate() {
                match d {
                    Some(d) => entries.push(*d as i64),
                    None => return Err(Error::Disconnected(u.min(v), u.max(v))),
                }
            }
        }
        Ok(IntSymMatrix::from_entries_unchecked(self.n, entries))
    }

    /// The multigraph whose edge `uv` has multiplicity `d(u, v)`.
    pub fn distance_multigraph(&self) -> Result<Multigraph> {
        let d = self.all_pairs_distances()?;
        Ok(Multigraph {
            n: self.n,
            mult: d.entries().iter().map(|&x| x as u32).collect(),
        })
    }

    /// The 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntSymMatrix {
        let mut entries = vec![0i64; self.n * self.n];
        for &(u, v) in &self.edges {
            entries[u * self.n + v] = 1;
            entries[v * self.n + u] = 1;
        }
        IntSymMatrix::from_entries_unchecked(self.n, entries)
    }
}

/// Symmetric multiplicity matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

impl Multigraph {
    /// `mult` is row-major `n * n`.
    pub fn new(n: usize, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, got: mult.len() });
        }
        for u in 0..n {
            if mult[u * n + u] != 0 {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at {u}")));
            }
            for v in u + 1..n {
                if mult[u * n + v] != mult[v * n + u] {
                    return Err(Error::NotSymmetric(u, v));
                }
            }
        }
        Ok(Multigraph { n, mult })
    }

    /// Reads a nonnegative integer matrix as a multiplicity matrix.
    pub fn from_matrix(m: &IntSymMatrix) -> Result<Self> {
        let mult = m
            .entries()
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::InvalidParameter(format!("negative multiplicity {x}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m.order(), mult)
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph { n, mult: vec![0; n * n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn entries(&self) -> &[u32] {
        &self.mult
    }

    /// Sum of multiplicities over unordered pairs.
    pub fn total_multiplicity(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum::<u64>() / 2
    }

    pub fn to_matrix(&self) -> IntSymMatrix {
        IntSymMatrix::from_entries_unchecked(self.n, self.mult.iter().map(|&m| m as i64).collect())
    }
}
