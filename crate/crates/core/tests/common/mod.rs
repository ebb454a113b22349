//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use graph_addressing::graph::{Graph, Multigraph};
use graph_addressing::linalg::{Inertia, IntSymMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Smallest number of bicliques partitioning `h`, by plain exact cover over
/// every biclique. No bounds, no symmetry breaking. Only for `n <= 7`.
pub fn brute_bp(h: &Multigraph) -> usize {
    let n = h.order();
    assert!(n <= 7);
    let mut all = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let (mut l, mut r, mut c) = (0u64, 0u64, code);
        for i in 0..n {
            match c % 3 {
                1 => l |= 1 << i,
                2 => r |= 1 << i,
                _ => {}
            }
            c /= 3;
        }
        if l != 0 && r != 0 && l < r {
            all.push((l, r));
        }
    }
    let mut res: Vec<u32> = h.entries().to_vec();
    let mut k = 0;
    while !cover(n, &mut res, &all, k) {
        k += 1;
    }
    k
}

fn cover(n: usize, res: &mut [u32], all: &[(u64, u64)], k: usize) -> bool {
    let first = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| res[u * n + v] > 0);
    let Some((u, v)) = first else { return true };
    if k == 0 {
        return false;
    }
    let cross = |l: u64, r: u64| {
        (0..n).filter(move |a| l >> a & 1 == 1).flat_map(move |a| (0..n).filter(move |b| r >> b & 1 == 1).map(move |b| (a, b)))
    };
    for &(l, r) in all {
        let contains = (l >> u & 1 == 1 && r >> v & 1 == 1) || (l >> v & 1 == 1 && r >> u & 1 == 1);
        if !contains || cross(l, r).any(|(a, b)| res[a * n + b] == 0) {
            continue;
        }
        for (a, b) in cross(l, r) {
            res[a * n + b] -= 1;
            res[b * n + a] -= 1;
        }
        let found = cover(n, res, all, k - 1);
        for (a, b) in cross(l, r) {
            res[a * n + b] += 1;
            res[b * n + a] += 1;
        }
        if found {
            return true;
        }
    }
    false
}

/// Characteristic polynomial `det(xI - M)`, coefficients from `x^0` up, by
/// Faddeev–LeVerrier over the rationals.
pub fn char_poly(m: &IntSymMatrix) -> Vec<BigInt> {
    let n = m.order();
    let a: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(m.get(i, j).into())).collect()).collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |s, k| s + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::from_integer(1.into());
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &mk);
        for i in 0..n {
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let tr = (0..n).fold(BigRational::zero(), |s, i| s + &am[i][i]);
        coeffs[n - k] = -tr / BigRational::from_integer((k as i64).into());
    }
    coeffs.into_iter().map(|c| c.to_integer()).collect()
}

fn sign_changes(c: impl Iterator<Item = BigInt>) -> usize {
    let signs: Vec<bool> = c.filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial by Descartes' rule, which is
/// exact because every root is real.
pub fn descartes_inertia(m: &IntSymMatrix) -> Inertia {
    let p = char_poly(m);
    let zero = p.iter().take_while(|c| c.is_zero()).count();
    let plus = sign_changes(p.iter().cloned());
    let minus = sign_changes(p.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }));
    Inertia::new(plus, zero, minus)
}

/// Whether two small graphs are isomorphic, by degree-pruned backtracking.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) || (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges).unwrap()
}

pub fn random_multigraph(rng: &mut impl Rng, n: usize, max_mult: u32) -> Multigraph {
    let mut m = vec![0u32; n * n];
    for u in 0..n {
        for v in u + 1..n {
            let x = rng.gen_range(0..=max_mult);
            m[u * n + v] = x;
            m[v * n + u] = x;
        }
    }
    Multigraph::new(n, m).unwrap()
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> IntSymMatrix {
    let mut e = vec![0i64; n * n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-bound..=bound);
            e[i * n + j] = x;
            e[j * n + i] = x;
        }
    }
    IntSymMatrix::new(n, e).unwrap()
}

/// Symmetric regular matrix with positive row sum, as a weighted sum of
/// symmetrized permutation matrices `P + Pᵀ` (row sum 2 each) and `J`.
pub fn random_regular_by_permutations(rng: &mut impl Rng, n: usize) -> IntSymMatrix {
    let mut e = vec![0i64; n * n];
    let mut total = 0i64;
    for _ in 0..rng.gen_range(1..=4) {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        let c = rng.gen_range(-3i64..=3);
        total += 2 * c;
        for i in 0..n {
            e[i * n + p[i]] += c;
            e[p[i] * n + i] += c;
        }
    }
    // Shift by a multiple of J so the row sum is positive.
    let lift = if total <= 0 { (-total) / n as i64 + 1 } else { 0 } + rng.gen_range(0..=1);
    for x in e.iter_mut() {
        *x += lift;
    }
    let m = IntSymMatrix::new(n, e).unwrap();
    assert!(m.row_sum_regular().unwrap() > 0);
    m
}

/// Random unimodular integer matrix (row-major), a product of elementary
/// row operations and a signed permutation.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n * n];
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    for i in 0..n {
        p[i * n + perm[i]] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c = rng.gen_range(-2..=2);
        for k in 0..n {
            p[i * n + k] += c * p[j * n + k];
        }
    }
    p
}
