//! Exact minimum biclique partition of small multigraphs.
//!
//! Each bound `k` from the eigenvalue lower bound upward is decided by a
//! depth-first search: take the first pair (lexicographic) with residual
//! multiplicity, branch over every biclique of the residual support that
//! contains it, and prune when `used + max(n₊, n₋)(residual) > k`. Bicliques
//! sharing an anchor pair are taken in nonincreasing order of their vertex
//! masks, so each partition is reached once up to that symmetry. Refuting `k`
//! proves the lower bound `k + 1`; the first `k` that admits a partition is
//! the optimum.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::addressing::{constructive_addressing, addressing_to_bicliques, verify_biclique_partition, Biclique};
use crate::graph::{Family, Graph, Multigraph};
use crate::linalg::{triangular_lower_bound, witsenhausen_bound, Inertia};
use crate::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Largest multigraph order the search accepts (vertex sets are `u64` masks).
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Cap on the partition sizes tried; bounds above it are never searched.
    pub initial_upper: Option<usize>,
    /// Recompute the residual eigenvalue bound every this many levels.
    pub bound_interval: usize,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: DEFAULT_NODE_BUDGET, time_budget: None, initial_upper: None, bound_interval: 1, threads: 1 }
    }
}

impl SearchConfig {
    pub fn with_node_budget(node_budget: u64) -> Self {
        SearchConfig { node_budget, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == 0 || self.bound_interval == 0 || self.threads == 0 {
            return Err(Error::InvalidParameter("budgets, bound interval and threads must be positive".into()));
        }
        if self.time_budget == Some(Duration::ZERO) {
            return Err(Error::InvalidParameter("time budget must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// `best_size` is proven minimal.
    Optimal,
    /// The budget ran out after raising the lower bound above the
    /// eigenvalue bound.
    LowerBoundOnly,
    /// The budget ran out before any bound beyond the eigenvalue bound was
    /// settled.
    BudgetExhausted,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::Optimal => "optimal",
            SearchStatus::LowerBoundOnly => "lower_bound_only",
            SearchStatus::BudgetExhausted => "budget_exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub best_size: usize,
    pub certificate: Option<Vec<Biclique>>,
    pub proven_lower: usize,
    /// Eigenvalue bound of the input, before any search.
    pub spectral_lower: usize,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

type Mask = u64;

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

fn to_biclique(l: Mask, r: Mask) -> Biclique {
    Biclique::new(bits(l).collect(), bits(r).collect()).expect("nonempty disjoint masks")
}

/// Residual multiplicities with support masks.
#[derive(Clone)]
struct Residual {
    n: usize,
    res: Vec<u32>,
    nbr: Vec<Mask>,
}

impl Residual {
    fn new(h: &Multigraph) -> Self {
        let n = h.order();
        let res = h.entries().to_vec();
        let nbr = (0..n).map(|u| (0..n).filter(|&v| res[u * n + v] > 0).fold(0, |m, v| m | 1 << v)).collect();
        Residual { n, res, nbr }
    }

    fn first_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| {
            let above = self.nbr[u] & !(2u64 << u).wrapping_sub(1);
            (above != 0).then(|| (u, above.trailing_zeros() as usize))
        })
    }

    fn get(&self, u: usize, v: usize) -> u32 {
        self.res[u * self.n + v]
    }

    fn apply(&mut self, l: Mask, r: Mask) {
        for a in bits(l) {
            for b in bits(r) {
                let n = self.n;
                self.res[a * n + b] -= 1;
                self.res[b * n + a] -= 1;
                if self.res[a * n + b] == 0 {
                    self.nbr[a] &= !(1 << b);
                    self.nbr[b] &= !(1 << a);
                }
            }
        }
    }

    fn undo(&mut self, l: Mask, r: Mask) {
        for a in bits(l) {
            for b in bits(r) {
                let n = self.n;
                self.res[a * n + b] += 1;
                self.res[b * n + a] += 1;
                self.nbr[a] |= 1 << b;
                self.nbr[b] |= 1 << a;
            }
        }
    }

    fn bound(&self) -> usize {
        let inertia: Inertia =
            crate::linalg::IntSymMatrix::from_entries_unchecked(self.n, self.res.iter().map(|&x| x as i64).collect()).inertia();
        inertia.max_signed()
    }
}

struct Shared {
    nodes: AtomicU64,
    budget: u64,
    deadline: Option<Instant>,
    stop: AtomicBool,
    exhausted: AtomicBool,
}

impl Shared {
    /// Count one node; false once the budget is gone.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_time = count % 1024 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d);
        if count > self.budget || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Found,
    Refuted,
    Stopped,
}

#[derive(Clone, Copy)]
struct Chosen {
    left: Mask,
    right: Mask,
    anchor: (usize, usize),
}

impl Chosen {
    fn code(&self) -> u128 {
        (self.left as u128) << 64 | self.right as u128
    }
}

fn code(l: Mask, r: Mask) -> u128 {
    (l as u128) << 64 | r as u128
}

struct Dfs<'a> {
    k: usize,
    residual: Residual,
    chosen: Vec<Chosen>,
    solution: Option<Vec<Chosen>>,
    shared: &'a Shared,
    interval: usize,
}

impl<'a> Dfs<'a> {
    fn dfs(&mut self) -> Outcome {
        let used = self.chosen.len();
        let Some((u, v)) = self.residual.first_pair() else {
            self.solution = Some(self.chosen.clone());
            return Outcome::Found;
        };
        let remaining = self.k - used;
        if remaining == 0 || self.residual.get(u, v) as usize > remaining {
            return Outcome::Refuted;
        }
        if remaining == 1 {
            return self.close_last(u, v);
        }
        let candidates: Vec<usize> = bits((self.residual.nbr[u] | self.residual.nbr[v]) & !(1 << u | 1 << v)).collect();
        self.extend(&candidates, 0, 1 << u, 1 << v, (u, v))
    }

    /// With one biclique left, the residual itself must be a simple biclique.
    fn close_last(&mut self, u: usize, v: usize) -> Outcome {
        if !self.shared.tick() {
            return Outcome::Stopped;
        }
        let r = &self.residual;
        let (left, right) = (r.nbr[v], r.nbr[u]);
        if left & right != 0 {
            return Outcome::Refuted;
        }
        for w in 0..r.n {
            let want = if left >> w & 1 == 1 {
                right
            } else if right >> w & 1 == 1 {
                left
            } else {
                0
            };
            if r.nbr[w] != want {
                return Outcome::Refuted;
            }
        }
        if bits(left).any(|a| bits(right).any(|b| r.get(a, b) != 1)) || !self.order_ok((u, v), left, right) {
            return Outcome::Refuted;
        }
        self.chosen.push(Chosen { left, right, anchor: (u, v) });
        self.solution = Some(self.chosen.clone());
        self.chosen.pop();
        Outcome::Found
    }

    fn order_ok(&self, anchor: (usize, usize), l: Mask, r: Mask) -> bool {
        match self.chosen.last() {
            Some(last) if last.anchor == anchor => code(l, r) <= last.code(),
            _ => true,
        }
    }

    fn extend(&mut self, cands: &[usize], idx: usize, l: Mask, r: Mask, anchor: (usize, usize)) -> Outcome {
        if idx == cands.len() {
            return self.try_child(l, r, anchor);
        }
        let w = cands[idx];
        let nw = self.residual.nbr[w];
        let bit = 1 << w;
        if nw & r == r {
            match self.extend(cands, idx + 1, l | bit, r, anchor) {
                Outcome::Refuted => {}
                other => return other,
            }
        }
        if nw & l == l {
            match self.extend(cands, idx + 1, l, r | bit, anchor) {
                Outcome::Refuted => {}
                other => return other,
            }
        }
        self.extend(cands, idx + 1, l, r, anchor)
    }

    fn try_child(&mut self, l: Mask, r: Mask, anchor: (usize, usize)) -> Outcome {
        if !self.order_ok(anchor, l, r) {
            return Outcome::Refuted;
        }
        if !self.shared.tick() {
            return Outcome::Stopped;
        }
        let used = self.chosen.len() + 1;
        self.residual.apply(l, r);
        if used % self.interval == 0 && used + self.residual.bound() > self.k {
            self.residual.undo(l, r);
            return Outcome::Refuted;
        }
        self.chosen.push(Chosen { left: l, right: r, anchor });
        let out = self.dfs();
        self.chosen.pop();
        self.residual.undo(l, r);
        out
    }

    /// Every biclique of the residual support containing the first pair.
    fn root_children(&self) -> Option<((usize, usize), Vec<(Mask, Mask)>)> {
        let (u, v) = self.residual.first_pair()?;
        let r = &self.residual;
        let cands: Vec<usize> = bits((r.nbr[u] | r.nbr[v]) & !(1 << u | 1 << v)).collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 1u64 << u, 1u64 << v)];
        while let Some((idx, l, rr)) = stack.pop() {
            if idx == cands.len() {
                out.push((l, rr));
                continue;
            }
            let w = cands[idx];
            let nw = r.nbr[w];
            stack.push((idx + 1, l, rr));
            if nw & l == l {
                stack.push((idx + 1, l, rr | 1 << w));
            }
            if nw & rr == rr {
                stack.push((idx + 1, l | 1 << w, rr));
            }
        }
        Some(((u, v), out))
    }
}

fn interpret(shared: &Shared, found: bool) -> Outcome {
    if found {
        Outcome::Found
    } else if shared.exhausted.load(Ordering::Relaxed) {
        Outcome::Stopped
    } else {
        Outcome::Refuted
    }
}

/// Decide whether `h` has a partition into at most `k` bicliques.
fn decide(h: &Multigraph, k: usize, cfg: &SearchConfig, shared: &Shared) -> (Outcome, Option<Vec<Biclique>>) {
    let mut root = Dfs { k, residual: Residual::new(h), chosen: Vec::new(), solution: None, shared, interval: cfg.bound_interval };
    let materialize = |sol: Vec<Chosen>| sol.iter().map(|c| to_biclique(c.left, c.right)).collect::<Vec<_>>();
    if k < 2 || cfg.threads == 1 || root.residual.bound() > k {
        let out = if root.residual.bound() > k { Outcome::Refuted } else { root.dfs() };
        return (out, root.solution.take().map(materialize));
    }
    let Some((anchor, children)) = root.root_children() else {
        return (Outcome::Found, Some(Vec::new()));
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build().expect("thread pool");
    let base = root.residual.clone();
    let solution = pool.install(|| {
        children.par_iter().find_map_any(|&(l, r)| {
            let mut dfs = Dfs { k, residual: base.clone(), chosen: Vec::new(), solution: None, shared, interval: cfg.bound_interval };
            match dfs.try_child(l, r, anchor) {
                Outcome::Found => {
                    shared.stop.store(true, Ordering::Relaxed);
                    dfs.solution
                }
                _ => None,
            }
        })
    });
    let out = interpret(shared, solution.is_some());
    (out, solution.map(materialize))
}

/// A valid partition by greedy peeling: take the first residual pair
/// `(u, v)`, use `u` against all of its residual neighbors, and add to `u`'s
/// side every further vertex that sees all of them.
pub fn greedy_upper(h: &Multigraph) -> Vec<Biclique> {
    let mut residual = Residual::new(h);
    let mut parts = Vec::new();
    while let Some((u, v)) = residual.first_pair() {
        let right = residual.nbr[u];
        let mut left: Mask = 1 << u;
        for w in bits(residual.nbr[v] & !right & !(1 << u)) {
            if residual.nbr[w] & right == right {
                left |= 1 << w;
            }
        }
        residual.apply(left, right);
        parts.push(to_biclique(left, right));
    }
    parts
}

pub fn min_biclique_partition(h: &Multigraph, cfg: &SearchConfig) -> Result<SearchResult> {
    min_biclique_partition_seeded(h, cfg, None)
}

/// As [`min_biclique_partition`], starting from `seed` when it is a valid
/// partition smaller than the greedy one.
pub fn min_biclique_partition_seeded(h: &Multigraph, cfg: &SearchConfig, seed: Option<Vec<Biclique>>) -> Result<SearchResult> {
    cfg.validate()?;
    if h.order() > MAX_SEARCH_ORDER {
        return Err(Error::InvalidParameter(format!("search supports at most {MAX_SEARCH_ORDER} vertices")));
    }
    let start = Instant::now();
    let mut best = greedy_upper(h);
    if let Some(seed) = seed {
        if seed.len() < best.len() && verify_biclique_partition(h, &seed)?.is_ok() {
            best = seed;
        }
    }
    let spectral_lower = witsenhausen_bound(h);
    let max_mult = h.entries().iter().copied().max().unwrap_or(0) as usize;
    let mut proven_lower = spectral_lower.max(max_mult);
    let upper = cfg.initial_upper.map_or(best.len(), |u| u.min(best.len()));

    let shared = Shared {
        nodes: AtomicU64::new(0),
        budget: cfg.node_budget,
        deadline: cfg.time_budget.map(|d| start + d),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
    };

    let mut exhausted = false;
    // bounds below `upper`, then `upper` itself only if its certificate is missing
    while proven_lower < best.len() {
        let k = proven_lower;
        if k > upper {
            break;
        }
        let (out, sol) = decide(h, k, cfg, &shared);
        match out {
            Outcome::Found => {
                best = sol.expect("found outcome carries a solution");
                break;
            }
            Outcome::Refuted => proven_lower = k + 1,
            Outcome::Stopped => {
                exhausted = true;
                break;
            }
        }
        shared.stop.store(false, Ordering::Relaxed);
    }

    let status = if !exhausted && proven_lower >= best.len() {
        SearchStatus::Optimal
    } else if proven_lower > spectral_lower {
        SearchStatus::LowerBoundOnly
    } else {
        SearchStatus::BudgetExhausted
    };
    let proven_lower = if status == SearchStatus::Optimal { best.len() } else { proven_lower };
    Ok(SearchResult {
        status,
        best_size: best.len(),
        certificate: Some(best),
        proven_lower,
        spectral_lower,
        nodes_explored: shared.nodes.load(Ordering::Relaxed).min(cfg.node_budget),
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpReport {
    /// `max(n₊, n₋)` of the distance matrix.
    pub spectral_lower: usize,
    /// A sharper lower bound known for the family, if any.
    pub family_lower: Option<usize>,
    /// Length of the explicit construction for the family, if any.
    pub constructive_upper: Option<usize>,
    pub search: SearchResult,
}

/// A lower bound on the addressing length known for the family of `g`
/// beyond the eigenvalue bound: `n` for `T_n` (`n >= 4`) and 4 for
/// `K_{2,2,2}`.
pub fn family_lower_bound(g: &Graph) -> Option<usize> {
    match g.family() {
        Family::Triangular(n) => triangular_lower_bound(*n).ok(),
        Family::CompleteMultipartite(s) if s.len() == 3 && s.iter().all(|&c| c == 2) => Some(4),
        _ => None,
    }
}

/// Eigenvalue bound, family construction and search for the addressing
/// length of `g`.
pub fn bp_report(g: &Graph, cfg: &SearchConfig) -> Result<BpReport> {
    let h = g.distance_multigraph()?;
    let spectral_lower = witsenhausen_bound(&h);
    let family_lower = family_lower_bound(g);
    let construction = constructive_addressing(g);
    let constructive_upper = construction.as_ref().map(|a| a.length());
    let seed = construction.map(|a| addressing_to_bicliques(&a));
    let search = min_biclique_partition_seeded(&h, cfg, seed)?;
    Ok(BpReport { spectral_lower, family_lower, constructive_upper, search })
}
