//! Closed-form spectra as exact tables, and the Krawtchouk eigenvalues of
//! the Hamming scheme.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{Inertia, Rational};
use crate::{Error, Result};

/// Distinct eigenvalues with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumTable {
    entries: Vec<(Rational, usize)>,
}

#[derive(Serialize)]
struct SpectrumEntryJson {
    eigenvalue: String,
    multiplicity: usize,
}

impl SpectrumTable {
    /// Zero-multiplicity rows are dropped; repeated eigenvalues are an error.
    pub fn new(entries: impl IntoIterator<Item = (Rational, usize)>) -> Result<Self> {
        let entries: Vec<_> = entries.into_iter().filter(|(_, m)| *m > 0).collect();
        for (i, (a, _)) in entries.iter().enumerate() {
            if entries[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::InvalidParameter(format!("repeated eigenvalue {a}")));
            }
        }
        Ok(SpectrumTable { entries })
    }

    pub fn entries(&self) -> &[(Rational, usize)] {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, lambda: &Rational) -> usize {
        self.entries.iter().find(|(l, _)| l == lambda).map_or(0, |(_, m)| *m)
    }

    pub fn inertia(&self) -> Inertia {
        let mut i = Inertia::new(0, 0, 0);
        for (l, m) in &self.entries {
            if l.is_positive() {
                i.n_plus += m;
            } else if l.is_negative() {
                i.n_minus += m;
            } else {
                i.n_zero += m;
            }
        }
        i
    }

    /// One `p/q multiplicity` line per eigenvalue.
    pub fn render_text(&self) -> String {
        self.entries.iter().map(|(l, m)| format!("{}/{} {}\n", l.numer(), l.denom(), m)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<SpectrumEntryJson> = self
            .entries
            .iter()
            .map(|(l, m)| SpectrumEntryJson { eigenvalue: format!("{}/{}", l.numer(), l.denom()), multiplicity: *m })
            .collect();
        serde_json::to_value(rows).expect("plain data")
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn int(x: impl Into<BigInt>) -> Rational {
    Rational::from_integer(x.into())
}

fn count(x: &BigInt) -> Result<usize> {
    x.to_usize().ok_or_else(|| Error::InvalidParameter(format!("multiplicity {x} out of range")))
}

/// Distance spectrum of `H(n, q)`:
/// `n q^(n-1) (q-1)` once, `-q^(n-1)` with multiplicity `n(q-1)`, and `0`
/// with multiplicity `q^n - 1 - n(q-1)`.
pub fn hamming_distance_spectrum(n: u32, q: u32) -> Result<SpectrumTable> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameter("need n >= 1 and q >= 2".into()));
    }
    let qn1 = BigInt::from(q).pow(n - 1);
    let perron = &qn1 * n * (q - 1);
    let neg_mult = n as usize * (q - 1) as usize;
    let zero_mult = BigInt::from(q).pow(n) - 1 - BigInt::from(neg_mult);
    SpectrumTable::new([(int(perron), 1), (int(-qn1), neg_mult), (int(0), count(&zero_mult)?)])
}

/// Eigenvalue of the distance-`k` matrix of `H(n, q)` on the `x`-th
/// eigenspace: `Σ_i (-q)^i (q-1)^(k-i) C(n-i, k-i) C(x, i)`.
pub fn krawtchouk_eigenvalue(k: u32, x: u32, n: u32, q: u32) -> Result<BigInt> {
    if k > n || x > n {
        return Err(Error::InvalidParameter("need 0 <= k, x <= n".into()));
    }
    let mut total = BigInt::zero();
    for i in 0..=k {
        let term = BigInt::from(-(q as i64)).pow(i)
            * BigInt::from(q - 1).pow(k - i)
            * binomial((n - i) as u64, (k - i) as u64)
            * binomial(x as u64, i as u64);
        total += term;
    }
    Ok(total)
}

/// Multiplicity `C(n, x) (q-1)^x` of the `x`-th eigenspace of the Hamming scheme.
pub fn krawtchouk_multiplicity(x: u32, n: u32, q: u32) -> BigInt {
    binomial(n as u64, x as u64) * BigInt::from(q - 1).pow(x)
}

fn check_triangular(n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidParameter("triangular graph needs n >= 4".into()));
    }
    Ok(())
}

/// Distance spectrum of `T_n`: `(n-1)(n-2)` once, `2-n` with multiplicity
/// `n-1`, `0` with multiplicity `C(n,2) - n`.
pub fn triangular_distance_spectrum(n: u32) -> Result<SpectrumTable> {
    check_triangular(n)?;
    let n = n as i64;
    let v = (n * (n - 1) / 2) as usize;
    SpectrumTable::new([(int((n - 1) * (n - 2)), 1), (int(2 - n), (n - 1) as usize), (int(0), v - n as usize)])
}

/// Adjacency spectrum of `T_n`: `2(n-2)` once, `n-4` with multiplicity
/// `n-1`, `-2` with multiplicity `C(n,2) - n`.
pub fn triangular_adjacency_spectrum(n: u32) -> Result<SpectrumTable> {
    check_triangular(n)?;
    let n = n as i64;
    let v = (n * (n - 1) / 2) as usize;
    SpectrumTable::new([(int(2 * (n - 2)), 1), (int(n - 4), (n - 1) as usize), (int(-2), v - n as usize)])
}

/// `s = Σ_{j=1..m} j C(m,j) C(n-m,j)`, the row sum of `D(J(n,m))`.
pub fn johnson_row_sum(n: u32, m: u32) -> BigInt {
    (1..=m as u64).map(|j| binomial(m as u64, j) * binomial((n - m) as u64, j) * j).sum()
}

/// Distance spectrum of `J(n, m)`: `s` once, `0` with multiplicity
/// `C(n,m) - n`, and `-s/(n-1)` with multiplicity `n-1`.
pub fn johnson_distance_spectrum(n: u32, m: u32) -> Result<SpectrumTable> {
    if m < 2 || n <= m {
        return Err(Error::InvalidParameter("johnson spectrum needs n > m >= 2".into()));
    }
    let s = johnson_row_sum(n, m);
    let zero = binomial(n as u64, m as u64) - n;
    let neg = Rational::new(-s.clone(), BigInt::from(n - 1));
    SpectrumTable::new([(int(s), 1), (int(0), count(&zero)?), (neg, (n - 1) as usize)])
}
