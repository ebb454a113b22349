//! Explicit addressings for Hamming graphs, Cartesian products and trees.

use super::{Addressing, Symbol};
use crate::graph::{check_cap, Family, Graph};
use crate::{Error, Result};

/// Addressing of `H(n, q)` of length `n(q-1)`. Column `(i, t)` (position
/// `i`, threshold `t = 0..q-1`) holds `a` on words with `x_i = t` and `b` on
/// words with `x_i > t`.
pub fn hamming_addressing(n: usize, q: usize) -> Result<Addressing> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameter("need n >= 1 and q >= 2".into()));
    }
    let order = check_cap((q as u128).checked_pow(n as u32).unwrap_or(u128::MAX))?;
    let t = n * (q - 1);
    let mut cells = vec![Symbol::Zero; order * t];
    for v in 0..order {
        // digits of v, first position most significant
        let mut rest = v;
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            digits[i] = rest % q;
            rest /= q;
        }
        for (i, &x) in digits.iter().enumerate() {
            for th in 0..q - 1 {
                cells[v * t + i * (q - 1) + th] = match x.cmp(&th) {
                    std::cmp::Ordering::Equal => Symbol::A,
                    std::cmp::Ordering::Greater => Symbol::B,
                    std::cmp::Ordering::Less => Symbol::Zero,
                };
            }
        }
    }
    Addressing::new(order, t, cells)
}

/// Addressing of a Cartesian product by concatenating factor addresses,
/// using the product's mixed-radix vertex order.
pub fn concat_addressing(parts: &[Addressing], orders: &[usize]) -> Result<Addressing> {
    if parts.is_empty() || parts.len() != orders.len() {
        return Err(Error::SizeMismatch { expected: orders.len(), got: parts.len() });
    }
    for (p, &o) in parts.iter().zip(orders) {
        if p.order() != o {
            return Err(Error::SizeMismatch { expected: o, got: p.order() });
        }
    }
    let order = check_cap(orders.iter().map(|&o| o as u128).product())?;
    let t: usize = parts.iter().map(Addressing::length).sum();
    let mut cells = Vec::with_capacity(order * t);
    for v in 0..order {
        let mut rest = v;
        let mut digits = vec![0; parts.len()];
        for j in (0..parts.len()).rev() {
            digits[j] = rest % orders[j];
            rest /= orders[j];
        }
        for (p, &d) in parts.iter().zip(&digits) {
            cells.extend_from_slice(p.row(d));
        }
    }
    Addressing::new(order, t, cells)
}

/// Addressing of a tree with one column per edge: removing edge `uv`
/// (`u < v`) splits the tree, and the side containing `u` gets `a`.
pub fn tree_addressing(tree: &Graph) -> Result<Addressing> {
    if !tree.is_tree() {
        return Err(Error::NotATree("graph is not a tree".into()));
    }
    let n = tree.order();
    let t = n - 1;
    let mut cells = vec![Symbol::B; n * t];
    for (j, &(u, v)) in tree.edges().iter().enumerate() {
        let mut stack = vec![u];
        cells[u * t + j] = Symbol::A;
        while let Some(x) = stack.pop() {
            for &y in tree.neighbors(x) {
                if !(x == u && y == v) && cells[y * t + j] == Symbol::B {
                    cells[y * t + j] = Symbol::A;
                    stack.push(y);
                }
            }
        }
    }
    Addressing::new(n, t, cells)
}

/// An addressing built from the graph's known structure (complete,
/// Hamming, tree, or a product of such), if one applies.
pub fn constructive_addressing(g: &Graph) -> Option<Addressing> {
    if g.is_tree() {
        return tree_addressing(g).ok();
    }
    match g.family() {
        Family::Complete(n) => hamming_addressing(1, *n).ok(),
        Family::Hamming { n, q } => hamming_addressing(*n, *q).ok(),
        Family::Product(factors) => {
            let parts = factors.iter().map(constructive_addressing).collect::<Option<Vec<_>>>()?;
            let orders: Vec<usize> = factors.iter().map(Graph::order).collect();
            concat_addressing(&parts, &orders).ok()
        }
        _ => None,
    }
}
