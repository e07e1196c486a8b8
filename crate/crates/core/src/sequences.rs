//! Lah numbers and signed/unsigned Stirling triangles.
//!
//! `lah` is evaluated from its closed form `n!/k! * C(n-1, k-1)`. The Stirling
//! numbers come from their row recurrences and are memoized in process-wide
//! triangles that grow on demand.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, parity_sign, BigInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Lah,
    StirlingFirstSigned,
    StirlingSecond,
}

/// Rows `0..=nmax` of an integer triangle; row `n` holds entries `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    kind: TriangleKind,
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    pub fn new(kind: TriangleKind) -> Self {
        Triangle {
            kind,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn build(kind: TriangleKind, nmax: usize) -> Self {
        let mut t = Triangle::new(kind);
        t.extend_to(nmax);
        t
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Highest row currently stored.
    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn extend_to(&mut self, nmax: usize) {
        while self.rows.len() <= nmax {
            let n = self.rows.len();
            let row = match self.kind {
                TriangleKind::Lah => (0..=n).map(|k| lah(n, k)).collect(),
                TriangleKind::StirlingFirstSigned => {
                    let prev = &self.rows[n - 1];
                    (0..=n)
                        .map(|k| {
                            // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
                            let left = if k > 0 {
                                prev[k - 1].clone()
                            } else {
                                BigInt::zero()
                            };
                            let up = prev.get(k).cloned().unwrap_or_default();
                            left - BigInt::from(n - 1) * up
                        })
                        .collect()
                }
                TriangleKind::StirlingSecond => {
                    let prev = &self.rows[n - 1];
                    (0..=n)
                        .map(|k| {
                            // S(n,k) = k S(n-1,k) + S(n-1,k-1)
                            let left = if k > 0 {
                                prev[k - 1].clone()
                            } else {
                                BigInt::zero()
                            };
                            let up = prev.get(k).cloned().unwrap_or_default();
                            BigInt::from(k) * up + left
                        })
                        .collect()
                }
            };
            self.rows.push(row);
        }
    }

    /// Row `n`. Panics if `n` has not been built.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Entry `(n, k)`, zero for `k > n`. Panics if row `n` has not been built.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    /// Overwrites a single entry. Used to build corrupted fixtures.
    pub fn set(&mut self, n: usize, k: usize, value: BigInt) {
        self.extend_to(n);
        self.rows[n][k] = value;
    }
}

/// Thread-safe, grow-only triangle. Row construction happens under the write
/// lock so concurrent readers always see fully built rows.
struct MemoTriangle {
    inner: RwLock<Triangle>,
}

impl MemoTriangle {
    fn new(kind: TriangleKind) -> Self {
        MemoTriangle {
            inner: RwLock::new(Triangle::new(kind)),
        }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        {
            let t = self.inner.read().expect("triangle lock poisoned");
            if t.nmax() >= n {
                return t.get(n, k);
            }
        }
        let mut t = self.inner.write().expect("triangle lock poisoned");
        t.extend_to(n);
        t.get(n, k)
    }

    fn row(&self, n: usize) -> Vec<BigInt> {
        self.get(n, 0);
        self.inner
            .read()
            .expect("triangle lock poisoned")
            .row(n)
            .to_vec()
    }
}

fn stirling1_memo() -> &'static MemoTriangle {
    static MEMO: OnceLock<MemoTriangle> = OnceLock::new();
    MEMO.get_or_init(|| MemoTriangle::new(TriangleKind::StirlingFirstSigned))
}

fn stirling2_memo() -> &'static MemoTriangle {
    static MEMO: OnceLock<MemoTriangle> = OnceLock::new();
    MEMO.get_or_init(|| MemoTriangle::new(TriangleKind::StirlingSecond))
}

/// `L(n, k) = n!/k! * C(n-1, k-1)` for `1 <= k <= n`, `L(0, 0) = 1`, else 0.
pub fn lah(n: usize, k: usize) -> BigInt {
    if n == 0 && k == 0 {
        return BigInt::one();
    }
    if k == 0 || k > n {
        return BigInt::zero();
    }
    factorial(n) / factorial(k) * binomial(n - 1, k as i64 - 1)
}

/// Signed Stirling number of the first kind: coefficient of `x^k` in the
/// falling factorial `x (x-1) ... (x-n+1)`.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_memo().get(n, k)
}

pub fn stirling_first_row(n: usize) -> Vec<BigInt> {
    stirling1_memo().row(n)
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// nonempty blocks.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_memo().get(n, k)
}

pub fn stirling_second_row(n: usize) -> Vec<BigInt> {
    stirling2_memo().row(n)
}

/// The three triangles side by side, built to a fixed row. Identity checks
/// read from a `Tables` value so that a deliberately corrupted copy can be
/// fed through them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub lah: Triangle,
    pub stirling_first: Triangle,
    pub stirling_second: Triangle,
}

impl Tables {
    pub fn new(nmax: usize) -> Self {
        Tables {
            lah: Triangle::build(TriangleKind::Lah, nmax),
            stirling_first: Triangle::build(TriangleKind::StirlingFirstSigned, nmax),
            stirling_second: Triangle::build(TriangleKind::StirlingSecond, nmax),
        }
    }

    pub fn nmax(&self) -> usize {
        self.lah
            .nmax()
            .min(self.stirling_first.nmax())
            .min(self.stirling_second.nmax())
    }

    /// Adds one to `L(n, k)`.
    pub fn corrupt_lah(&mut self, n: usize, k: usize) {
        let v = self.lah.get(n, k) + 1;
        self.lah.set(n, k, v);
    }

    /// `sum_k s(n,k) S(k,m)`, which is 1 for `m = n` and 0 otherwise.
    pub fn stirling_orthogonality(&self, n: usize, m: usize) -> BigInt {
        (0..=n)
            .map(|k| self.stirling_first.get(n, k) * self.stirling_second.get(k, m))
            .sum()
    }

    /// `(-1)^n sum_k s(n,k) S(k,m) (-1)^k`, the Stirling route to `L(n, m)`.
    pub fn lah_from_stirling(&self, n: usize, m: usize) -> BigInt {
        let total: BigInt = (0..=n)
            .map(|k| {
                self.stirling_first.get(n, k) * self.stirling_second.get(k, m) * parity_sign(k)
            })
            .sum();
        total * parity_sign(n)
    }
}

pub fn stirling_orthogonality_check(n: usize, m: usize) -> BigInt {
    (0..=n)
        .map(|k| stirling_first(n, k) * stirling_second(k, m))
        .sum()
}

pub fn lah_from_stirling(n: usize, m: usize) -> BigInt {
    let total: BigInt = (0..=n)
        .map(|k| stirling_first(n, k) * stirling_second(k, m) * parity_sign(k))
        .sum();
    total * parity_sign(n)
}
