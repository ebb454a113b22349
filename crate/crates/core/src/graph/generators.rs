//! Named graph families and the Cartesian product.

use super::{check_cap, Family, Graph};
use crate::{Error, Result};

/// The complete graph `K_n`.
pub fn gen_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let n = check_cap(n as u128)?;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_sorted(n, edges, Family::Complete(n)))
}

/// Complete multipartite graph with the given class sizes. Vertices are
/// numbered class by class.
pub fn gen_complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidParameter("multipartite classes must be nonempty".into()));
    }
    let total: u128 = sizes.iter().map(|&s| s as u128).sum();
    if total < 2 {
        return Err(Error::InvalidParameter("multipartite graph needs at least 2 vertices".into()));
    }
    let n = check_cap(total)?;
    let mut class = Vec::with_capacity(n);
    for (c, &s) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat(c).take(s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(n, edges, Family::CompleteMultipartite(sizes.to_vec())))
}

/// `K_{a,b}` with one extra edge joining vertices 0 and 1 of the first part.
pub fn gen_bipartite_plus_edge(a: usize, b: usize) -> Result<Graph> {
    if a < 2 || b < 1 {
        return Err(Error::InvalidParameter("need a >= 2 and b >= 1".into()));
    }
    let base = gen_complete_multipartite(&[a, b])?;
    let mut edges = base.edges().to_vec();
    edges.push((0, 1));
    Ok(Graph::from_unsorted(base.order(), edges, Family::Other))
}

/// Hamming graph `H(n, q)`: words of length `n` over `0..q`, with the first
/// letter most significant, adjacent at Hamming distance 1.
pub fn gen_hamming(n: usize, q: usize) -> Result<Graph> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameter("hamming graph needs n >= 1 and q >= 2".into()));
    }
    let order = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let order = check_cap(order)?;
    let mut edges = Vec::with_capacity(order * n * (q - 1) / 2);
    for v in 0..order {
        let mut place = 1;
        let mut rest = v;
        for _ in 0..n {
            let digit = rest % q;
            rest /= q;
            for other in digit + 1..q {
                edges.push((v, v + (other - digit) * place));
            }
            place *= q;
        }
    }
    let g = Graph::from_unsorted(order, edges, Family::Hamming { n, q });
    Ok(g)
}

/// All `m`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - m + i {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..m {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

fn subset_graph(n: usize, m: usize, adjacent: impl Fn(usize) -> bool, family: Family) -> Result<Graph> {
    check_cap(binomial_u128(n, m))?;
    let verts = subsets(n, m);
    let mut edges = Vec::new();
    for u in 0..verts.len() {
        for v in u + 1..verts.len() {
            if adjacent(intersection_size(&verts[u], &verts[v])) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(verts.len(), edges, family))
}

/// Johnson graph `J(n, m)`: `m`-subsets in lexicographic order, adjacent
/// when they share `m - 1` elements.
pub fn gen_johnson(n: usize, m: usize) -> Result<Graph> {
    if m < 2 || n < m {
        return Err(Error::InvalidParameter("johnson graph needs n >= m >= 2".into()));
    }
    subset_graph(n, m, |common| common + 1 == m, Family::Johnson { n, m })
}

/// Triangular graph `T_n`, the line graph of `K_n`; vertex `i` is the
/// `i`-th 2-subset of `0..n` in lexicographic order.
pub fn gen_triangular(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter("triangular graph needs n >= 4".into()));
    }
    subset_graph(n, 2, |common| common == 1, Family::Triangular(n))
}

/// Index of the 2-subset `{a, b}` among the vertices of `T_n`.
pub fn triangular_vertex(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    // pairs starting below a, then the offset inside row a
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// The Petersen graph as the Kneser graph on 2-subsets of a 5-set.
pub fn gen_petersen() -> Result<Graph> {
    subset_graph(5, 2, |common| common == 0, Family::Petersen)
}

/// The Clebsch graph: the 5-cube with antipodal vertices identified. Vertices
/// are 4-bit words; the fifth coordinate is folded into the all-ones shift.
pub fn gen_clebsch() -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..16usize {
        for v in u + 1..16 {
            let x = u ^ v;
            if x.count_ones() == 1 || x == 0b1111 {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(16, edges, Family::Clebsch))
}

/// Tree from a parent list: exactly one entry is `None` (the root), every
/// other vertex names its parent.
pub fn gen_tree(parent: &[Option<usize>]) -> Result<Graph> {
    let n = parent.len();
    if n == 0 {
        return Err(Error::NotATree("empty parent list".into()));
    }
    check_cap(n as u128)?;
    let roots = parent.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(Error::NotATree(format!("expected one root, found {roots}")));
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            if p >= n {
                return Err(Error::NotATree(format!("parent {p} of {v} out of range")));
            }
            if p == v {
                return Err(Error::NotATree(format!("vertex {v} is its own parent")));
            }
            edges.push((v, p));
        }
    }
    let g = Graph::from_unsorted(n, edges, Family::Tree);
    if g.size() != n - 1 || !g.is_connected() {
        return Err(Error::NotATree("parent list contains a cycle".into()));
    }
    Ok(g)
}

pub fn gen_path(n: usize) -> Result<Graph> {
    let parent: Vec<Option<usize>> = (0..n).map(|v| v.checked_sub(1)).collect();
    gen_tree(&parent)
}

/// The star `K_{1,n-1}` centred at vertex 0.
pub fn gen_star(n: usize) -> Result<Graph> {
    let parent: Vec<Option<usize>> = (0..n).map(|v| (v > 0).then_some(0)).collect();
    gen_tree(&parent)
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let n = check_cap(n as u128)?;
    let edges = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(Graph::from_unsorted(n, edges, Family::Cycle(n)))
}

/// Cartesian product. Vertex `(x_1, ..., x_k)` gets the mixed-radix index
/// with `x_1` most significant.
pub fn cartesian_product(factors: &[Graph]) -> Result<Graph> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("product needs at least one factor".into()));
    }
    let order = factors
        .iter()
        .try_fold(1u128, |acc, g| acc.checked_mul(g.order() as u128))
        .unwrap_or(u128::MAX);
    let order = check_cap(order)?;
    // stride[j] = product of the orders after factor j
    let mut stride = vec![1usize; factors.len()];
    for j in (0..factors.len().saturating_sub(1)).rev() {
        stride[j] = stride[j + 1] * factors[j + 1].order();
    }
    let mut edges = Vec::new();
    for v in 0..order {
        for (j, g) in factors.iter().enumerate() {
            let digit = (v / stride[j]) % g.order();
            for &w in g.neighbors(digit) {
                if w > digit {
                    edges.push((v, v + (w - digit) * stride[j]));
                }
            }
        }
    }
    Ok(Graph::from_unsorted(order, edges, Family::Product(factors.to_vec())))
}
