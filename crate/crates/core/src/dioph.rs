//! Small Diophantine classifications used by the projection-length
//! arguments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{q, qq, Rational};

/// Positive integers with `2 = m/(m+1) + (l-k)(k+1)/(l+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DSolution {
    pub m: u64,
    pub l: u64,
    pub k: u64,
}

impl DSolution {
    pub fn new(m: u64, l: u64, k: u64) -> Self {
        Self { m, l, k }
    }

    /// Exact check of the defining identity.
    pub fn verify(&self) -> bool {
        satisfies_d(self.m, self.l, self.k)
    }
}

impl fmt::Display for DSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m,l,k)=({},{},{})", self.m, self.l, self.k)
    }
}

/// `(l-k)(k+1)/(l+1)`, the squared projection length in `A_l` with `k`
/// zero coordinates.
pub fn projection_term(l: u64, k: u64) -> Rational {
    qq((l as i128 - k as i128) * (k as i128 + 1), l as i128 + 1)
}

pub fn satisfies_d(m: u64, l: u64, k: u64) -> bool {
    m >= 1 && l >= 1 && k >= 1 && qq(m as i128, m as i128 + 1) + projection_term(l, k) == q(2)
}

/// Solves for `m` given `a = l - k` and `b = k + 1`.
fn m_for(a: u64, b: u64) -> Option<u64> {
    let term = qq((a * b) as i128, (a + b) as i128);
    let x = q(2) - term;
    // x = m / (m + 1)  <=>  m = x / (1 - x), needing 1/2 <= x < 1.
    if x >= q(1) || x < qq(1, 2) {
        return None;
    }
    let m = x / (q(1) - x);
    m.is_integer().then(|| m.to_integer() as u64)
}

/// All solutions, via the case split on `a = l - k`, `b = k + 1 >= 2`.
///
/// The term `ab/(a+b)` must lie in `(1, 3/2]`. For `a <= 1` it is below 1.
/// For `a, b >= 3` the bound `ab/(a+b) <= 3/2` gives
/// `(a-2)(b-2) <= 4 - ab/3 <= 1`, so only finitely many pairs remain to
/// check (we scan the looser region `(a-2)(b-2) <= 3`). When `a = 2` the
/// equation becomes `m(b-2) = 4`, and when `b = 2` it becomes `m(a-2) = 4`.
pub fn solve_d() -> BTreeSet<DSolution> {
    let mut out = BTreeSet::new();
    let mut push = |a: u64, b: u64| {
        if let Some(m) = m_for(a, b) {
            let sol = DSolution::new(m, a + b - 1, b - 1);
            debug_assert!(sol.verify());
            out.insert(sol);
        }
    };
    for a in 3..=5 {
        for b in 3..=5 {
            if (a - 2) * (b - 2) <= 3 {
                push(a, b);
            }
        }
    }
    for d in [1, 2, 4] {
        push(2, d + 2);
        push(d + 2, 2);
    }
    out
}

/// Solutions `(n, k)` of `k(n - k - 1) = 1` with `0 < k < n`: both factors
/// must equal 1, so `k = 1` and `n = 3`.
pub fn solve_k_equation() -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    let k = 1u64;
    let n = k + 1 + 1;
    if k * (n - k - 1) == 1 {
        out.insert((n, k));
    }
    out
}

/// A value of `N` for which `K^2 - N K + 2N = 0` has positive integer roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixtySolution {
    pub n: u64,
    /// Discriminant `N^2 - 8N`.
    pub discriminant: u64,
    pub roots: Vec<u64>,
}

/// `N >= 2` with `K^2 - N K + 2N = 0` solvable in positive integers.
///
/// The discriminant `N^2 - 8N = s^2` rewrites as
/// `(N - 4 - s)(N - 4 + s) = 16`, so `N` comes from a factor pair of 16 of
/// equal parity.
pub fn solve_60_equation() -> BTreeMap<u64, SixtySolution> {
    let mut out = BTreeMap::new();
    for p in [-16i64, -8, -4, -2, -1, 1, 2, 4, 8, 16] {
        let r = 16 / p;
        if p > r || (p - r) % 2 != 0 {
            continue;
        }
        let n = (p + r) / 2 + 4;
        let s = (r - p) / 2;
        if n < 2 {
            continue;
        }
        let mut roots: Vec<u64> = [n + s, n - s]
            .into_iter()
            .filter(|x| x % 2 == 0 && *x > 0)
            .map(|x| (x / 2) as u64)
            .filter(|&k| (k * k) as i64 - n * k as i64 + 2 * n == 0)
            .collect();
        roots.sort();
        roots.dedup();
        if !roots.is_empty() {
            out.insert(
                n as u64,
                SixtySolution {
                    n: n as u64,
                    discriminant: (n * n - 8 * n) as u64,
                    roots,
                },
            );
        }
    }
    out
}
