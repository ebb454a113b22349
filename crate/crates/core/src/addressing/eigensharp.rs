//! Necessary conditions for an addressing to meet the eigenvalue bound, and
//! explicit null vectors of triangular distance matrices.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{verify_addressing, Addressing, Symbol};
use crate::graph::{gen_triangular, triangular_vertex, Graph};
use crate::linalg::{nullspace, to_rational_rows};
use crate::{Error, Result};

/// `M(a, b) = aX + bY`: `X` marks the `a` cells and `Y` the `b` cells.
pub fn addressing_matrix_split(addr: &Addressing) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mark = |s: Symbol| -> Vec<Vec<i64>> {
        (0..addr.order()).map(|v| addr.row(v).iter().map(|&c| i64::from(c == s)).collect()).collect()
    };
    (mark(Symbol::A), mark(Symbol::B))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigensharpWitness {
    /// Nonzero `c` with `X c = 0`.
    XDependency(Vec<BigInt>),
    /// Nonzero `c` with `Y c = 0`.
    YDependency(Vec<BigInt>),
    /// A null vector of `D(G)` with nonzero inner product against column
    /// `column` of `X` (or of `Y` when `in_y`).
    NotOrthogonal { column: usize, in_y: bool, null_vector: Vec<BigInt> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigensharpReport {
    pub cols_x_independent: bool,
    pub cols_y_independent: bool,
    pub null_orthogonal: bool,
    /// Length equals `max(n₊, n₋)` of `D(G)`.
    pub meets_eigenvalue_bound: bool,
    /// The addressing meets the bound yet violates a necessary condition,
    /// which is impossible for a correct addressing.
    pub inconsistent: bool,
    pub witnesses: Vec<EigensharpWitness>,
}

impl EigensharpReport {
    pub fn all_pass(&self) -> bool {
        self.cols_x_independent && self.cols_y_independent && self.null_orthogonal
    }
}

fn column_dependency(m: &[Vec<i64>], t: usize) -> Option<Vec<BigInt>> {
    nullspace(to_rational_rows(m), t).into_iter().next()
}

/// Checks that the columns of `X` and of `Y` are each linearly independent
/// and that every column of `M(a, b)` is orthogonal to the null space of
/// `D(G)`. All three hold for any addressing of length `max(n₊, n₋)`.
pub fn eigensharp_necessary_check(g: &Graph, addr: &Addressing) -> Result<EigensharpReport> {
    if !verify_addressing(g, addr)?.is_ok() {
        return Err(Error::InvalidParameter("addressing does not verify".into()));
    }
    let t = addr.length();
    let (x, y) = addressing_matrix_split(addr);
    let d = g.all_pairs_distances()?;
    let mut witnesses = Vec::new();

    let x_dep = column_dependency(&x, t);
    let y_dep = column_dependency(&y, t);
    let (cols_x_independent, cols_y_independent) = (x_dep.is_none(), y_dep.is_none());
    witnesses.extend(x_dep.map(EigensharpWitness::XDependency));
    witnesses.extend(y_dep.map(EigensharpWitness::YDependency));

    let rows: Vec<Vec<i64>> = (0..d.order()).map(|i| d.row(i).to_vec()).collect();
    let null = nullspace(to_rational_rows(&rows), d.order());
    let mut null_orthogonal = true;
    'outer: for z in &null {
        for (in_y, m) in [(false, &x), (true, &y)] {
            for column in 0..t {
                let dot: BigInt = (0..addr.order()).map(|v| &z[v] * m[v][column]).sum();
                if !dot.is_zero() {
                    null_orthogonal = false;
                    witnesses.push(EigensharpWitness::NotOrthogonal { column, in_y, null_vector: z.clone() });
                    break 'outer;
                }
            }
        }
    }

    let meets = t == d.inertia().max_signed();
    let report = EigensharpReport {
        cols_x_independent,
        cols_y_independent,
        null_orthogonal,
        meets_eigenvalue_bound: meets,
        inconsistent: false,
        witnesses,
    };
    Ok(EigensharpReport { inconsistent: meets && !report.all_pass(), ..report })
}

/// Null vector of `D(T_n)` supported on the copy of `T_4` spanned by
/// `pair1 ∪ pair2`: zero on the two given vertices, `±1` around the
/// remaining 4-cycle (`+1` on `{a,c}`, `{b,d}` and `-1` on `{a,d}`, `{b,c}`
/// for `pair1 = {a,b}`, `pair2 = {c,d}`), zero elsewhere.
pub fn triangular_null_vector(n: usize, pair1: (usize, usize), pair2: (usize, usize)) -> Result<Vec<i64>> {
    let (a, b) = pair1;
    let (c, d) = pair2;
    let all = [a, b, c, d];
    if n < 4 || all.iter().any(|&v| v >= n) {
        return Err(Error::InvalidParameter("pairs must lie in 0..n with n >= 4".into()));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if all[i] == all[j] {
                return Err(Error::InvalidParameter("pairs must be disjoint 2-subsets".into()));
            }
        }
    }
    let order = n * (n - 1) / 2;
    let mut y = vec![0i64; order];
    y[triangular_vertex(n, a, c)] = 1;
    y[triangular_vertex(n, b, d)] = 1;
    y[triangular_vertex(n, a, d)] = -1;
    y[triangular_vertex(n, b, c)] = -1;
    Ok(y)
}

/// `D(T_n) y`, for checking null vectors.
pub fn triangular_distance_apply(n: usize, y: &[i64]) -> Result<Vec<BigInt>> {
    let d = gen_triangular(n)?.all_pairs_distances()?;
    let y: Vec<BigInt> = y.iter().map(|&v| BigInt::from(v)).collect();
    Ok(d.mul_vec(&y))
}
