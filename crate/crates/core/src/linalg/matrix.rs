use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::inertia::{congruence_inertia, Inertia};
use super::Rational;
use crate::graph::check_cap;
use crate::{Error, Result};

/// Dense symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntSymMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, got: entries.len() });
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(IntSymMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch { expected: n, got: bad.len() });
        }
        Self::new(n, rows.concat())
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        IntSymMatrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        IntSymMatrix { n, entries: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        IntSymMatrix { n, entries: vec![1; n * n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn max_entry(&self) -> i64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        IntSymMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    /// Entrywise `a * self + b * other`.
    pub fn combine(&self, a: i64, other: &Self, b: i64) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::SizeMismatch { expected: self.n, got: other.n });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| a * x + b * y).collect();
        Ok(IntSymMatrix { n: self.n, entries })
    }

    /// Matrix-vector product over the integers.
    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, b)| BigInt::from(a) * b).sum())
            .collect()
    }

    /// Congruence `Pᵀ M P` for a square integer `P` given row-major. The
    /// result is symmetric by construction.
    pub fn congruent(&self, p: &[i64]) -> Self {
        let n = self.n;
        let mut mp = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        mp[i * n + j] += a * p[k * n + j];
                    }
                }
            }
        }
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = p[k * n + i];
                if a != 0 {
                    for j in 0..n {
                        out[i * n + j] += a * mp[k * n + j];
                    }
                }
            }
        }
        IntSymMatrix { n, entries: out }
    }

    /// Constant row sum, if there is one.
    pub fn row_sum_regular(&self) -> Option<i64> {
        let mut sums = (0..self.n).map(|i| self.row(i).iter().sum::<i64>());
        let first = sums.next()?;
        sums.all(|s| s == first).then_some(first)
    }

    /// Exact inertia by symmetric congruence elimination.
    pub fn inertia(&self) -> Inertia {
        congruence_inertia(self.n, self.entries.iter().map(|&x| x as i128).collect())
    }

    /// Inertia of `self - λI`, computed on the integer matrix `q·self - p·I`
    /// where `λ = p/q` with `q > 0`.
    pub fn shifted_inertia(&self, lambda: &Rational) -> Inertia {
        let (p, q) = (lambda.numer(), lambda.denom());
        match (p.to_i128(), q.to_i128()) {
            (Some(p), Some(q)) if p.abs() < 1 << 60 && q < 1 << 60 => {
                let mut a: Vec<i128> = self.entries.iter().map(|&x| q * x as i128).collect();
                for i in 0..self.n {
                    a[i * self.n + i] -= p;
                }
                congruence_inertia(self.n, a)
            }
            _ => {
                let mut a: Vec<BigInt> = self.entries.iter().map(|&x| q * BigInt::from(x)).collect();
                for i in 0..self.n {
                    a[i * self.n + i] -= p;
                }
                super::inertia::congruence_inertia_big(self.n, a)
            }
        }
    }

    /// Multiplicity of `λ` as an eigenvalue: the nullity of `self - λI`.
    pub fn eigenvalue_multiplicity(&self, lambda: &Rational) -> usize {
        self.shifted_inertia(lambda).n_zero
    }

    /// Kronecker product `A ⊗ B`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.n, other.n);
        let order = check_cap(n as u128 * m as u128)?;
        let mut entries = vec![0i64; order * order];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                for k in 0..m {
                    for l in 0..m {
                        entries[(i * m + k) * order + j * m + l] = a * other.get(k, l);
                    }
                }
            }
        }
        Ok(IntSymMatrix { n: order, entries })
    }

    /// Diamond product `A ◇ B = A ⊗ J_m + J_n ⊗ B`: block `(i, j)` is
    /// `a_ij + B`.
    pub fn diamond(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.n, other.n);
        let order = check_cap(n as u128 * m as u128)?;
        let mut entries = vec![0i64; order * order];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                for k in 0..m {
                    for l in 0..m {
                        entries[(i * m + k) * order + j * m + l] = a + other.get(k, l);
                    }
                }
            }
        }
        Ok(IntSymMatrix { n: order, entries })
    }

    /// Parse `n` followed by `n` rows of `n` integers.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad matrix order".into()))?;
        let entries = tokens
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}
