//! Signature of a symmetric integer matrix by fraction-free symmetric
//! congruence elimination.
//!
//! The trailing block after eliminating an index set `K` holds the bordered
//! minors `det M[K∪i, K∪j]`; each update divides exactly by the previous
//! pivot, so entries stay integral and bounded by the Hadamard bound. The
//! `k`-th pivot of the rational LDLᵀ factorization is `pivot_k / pivot_{k-1}`,
//! which is all the signature needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Inertia { n_plus, n_zero, n_minus }
    }

    pub fn order(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    /// Inertia of the negated matrix.
    pub fn negated(&self) -> Self {
        Inertia { n_plus: self.n_minus, n_zero: self.n_zero, n_minus: self.n_plus }
    }

    /// `max(n₊, n₋)`, the eigenvalue lower bound on biclique partitions.
    pub fn max_signed(&self) -> usize {
        self.n_plus.max(self.n_minus)
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

trait Scalar: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn sign(&self) -> i32;
    /// `(a*b - c*d) / e`, exact.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn sign(&self) -> i32 {
        self.signum() as i32
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(x % e, 0);
        Some(x / e)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
}

impl Scalar for BigInt {
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sign(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&x % e)));
        Some(x / e)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}

fn swap_index<T>(a: &mut [T], n: usize, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..n {
        a.swap(i * n + c, j * n + c);
    }
    for r in 0..n {
        a.swap(r * n + i, r * n + j);
    }
}

fn eliminate<T: Scalar>(n: usize, mut a: Vec<T>) -> Option<Inertia> {
    let mut prev = T::one();
    let (mut plus, mut minus) = (0, 0);
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i * n + i].is_zero()) {
            Some(i) => i,
            None => {
                // zero diagonal: fold a nonzero off-diagonal entry into a
                // diagonal one via row/col j += into row/col i
                let hit = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i * n + j].is_zero());
                let Some((i, j)) = hit else {
                    break;
                };
                for c in k..n {
                    a[i * n + c] = a[i * n + c].add(&a[j * n + c])?;
                }
                for r in k..n {
                    a[r * n + i] = a[r * n + i].add(&a[r * n + j])?;
                }
                i
            }
        };
        swap_index(&mut a, n, k, pivot);
        let p = a[k * n + k].clone();
        if p.sign() * prev.sign() > 0 {
            plus += 1;
        } else {
            minus += 1;
        }
        for i in k + 1..n {
            for j in i..n {
                let v = T::cross_div(&p, &a[i * n + j], &a[i * n + k], &a[k * n + j], &prev)?;
                a[j * n + i] = v.clone();
                a[i * n + j] = v;
            }
        }
        prev = p;
    }
    Some(Inertia::new(plus, n - plus - minus, minus))
}

/// Inertia of the symmetric matrix with the given row-major entries. Runs in
/// `i128` and restarts in arbitrary precision on overflow.
pub(crate) fn congruence_inertia(n: usize, entries: Vec<i128>) -> Inertia {
    match eliminate(n, entries.clone()) {
        Some(i) => i,
        None => congruence_inertia_big(n, entries.into_iter().map(BigInt::from).collect()),
    }
}

pub(crate) fn congruence_inertia_big(n: usize, entries: Vec<BigInt>) -> Inertia {
    eliminate(n, entries).expect("arbitrary precision never overflows")
}
