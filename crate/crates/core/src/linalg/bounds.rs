use num_integer::Roots;

use super::Inertia;
use crate::graph::Multigraph;
use crate::{Error, Result};

/// `max(n₊, n₋)` of the multiplicity matrix; every biclique partition of
/// `h` has at least this many parts.
pub fn witsenhausen_bound(h: &Multigraph) -> usize {
    h.to_matrix().inertia().max_signed()
}

/// Inertia of `A ◇ B` for symmetric regular `A`, `B` with positive row sums,
/// from the inertias and orders of the factors alone.
pub fn diamond_inertia_predict(a: Inertia, b: Inertia, order_a: usize, order_b: usize) -> Inertia {
    Inertia {
        n_plus: a.n_plus + b.n_plus - 1,
        n_zero: (order_a - 1) * (order_b - 1) + a.n_zero + b.n_zero,
        n_minus: a.n_minus + b.n_minus,
    }
}

/// Known `(lower, upper)` bounds on the addressing length of the cocktail
/// party graph `K_{2,...,2}` with `m` classes:
/// `m + ⌊√(2m)⌋ - 1` and `3m/2 - 1` (even `m`) or `(3m-1)/2` (odd `m`).
///
/// At `m = 2` the lower formula gives 3 although `C_4` has a 2-addressing;
/// both numbers are returned as computed.
pub fn hoffman_zaks_bounds(m: usize) -> Result<(usize, usize)> {
    if m < 2 {
        return Err(Error::InvalidParameter("need m >= 2".into()));
    }
    let lower = m + (2 * m).sqrt() - 1;
    let upper = if m % 2 == 0 { 3 * m / 2 - 1 } else { (3 * m - 1) / 2 };
    Ok((lower, upper))
}

/// Lower bound on the addressing length of `T_n` that improves the
/// eigenvalue bound `n - 1` by one, valid for `n >= 4`.
pub fn triangular_lower_bound(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::InvalidParameter("triangular graph needs n >= 4".into()));
    }
    Ok(n)
}
