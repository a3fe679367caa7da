//! Self-describing sequences: A079000 ("n is a term iff c(n) is odd") and
//! Golomb's sequence A001462.

use crate::oeis::{OeisId, Sequence};

pub const A079000_ID: OeisId = OeisId::from_number(79000);
pub const GOLOMB_ID: OeisId = OeisId::from_number(1462);

/// Increasing sequence with value membership answered in O(1).
#[derive(Debug, Clone, Default)]
pub struct SelfRefState {
    c: Vec<u64>,
    membership: Vec<bool>,
}

impl SelfRefState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[u64] {
        &self.c
    }

    /// Largest value whose membership is settled (every term so far).
    pub fn frontier(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    /// Whether `v` is a term; `None` while `v` lies beyond the frontier.
    pub fn contains(&self, v: u64) -> Option<bool> {
        if v > self.frontier() {
            return None;
        }
        Some(self.membership[v as usize])
    }

    fn push(&mut self, v: u64) {
        let i = v as usize;
        if i >= self.membership.len() {
            self.membership.resize((i + 1).next_power_of_two(), false);
        }
        self.membership[i] = true;
        self.c.push(v);
    }

    /// Appends the next term: seeds 1, 4, then `c(n-1) + ε` where ε is 1 when
    /// the membership of `n` matches the parity already carried by `c(n-1)`
    /// and 2 otherwise.
    pub fn next_term(&mut self) -> u64 {
        let n = self.c.len() as u64 + 1;
        let v = match n {
            1 => 1,
            2 => 4,
            _ => {
                let prev = self.frontier();
                let member = self.contains(n).expect("c(n-1) > n once past the seeds");
                let prev_odd = prev % 2 == 1;
                // member needs odd c(n); non-member needs even
                if member != prev_odd {
                    prev + 1
                } else {
                    prev + 2
                }
            }
        };
        self.push(v);
        v
    }
}

pub fn a079000_greedy(n: usize) -> Vec<u64> {
    let mut s = SelfRefState::new();
    for _ in 0..n {
        s.next_term();
    }
    s.c
}

/// `c(9·2^k − 3 + j) = 12·2^k − 3 + (3j + |j|)/2` for `−3·2^k <= j < 3·2^k`.
pub fn a079000_closed(n: u64) -> u64 {
    assert!(n >= 1, "A079000 is indexed from 1");
    match n {
        1 => 1,
        2 => 4,
        _ => {
            // largest k with 6·2^k − 3 <= n
            let mut p = 1u64;
            while 6 * (2 * p) - 3 <= n {
                p *= 2;
            }
            let j = n as i128 - (9 * p as i128 - 3);
            let v = 12 * p as i128 - 3 + (3 * j + j.abs()) / 2;
            v as u64
        }
    }
}

pub fn a079000_sequence(n: usize) -> Sequence {
    Sequence::from_u64s(Some(A079000_ID), 1, &a079000_greedy(n))
}

/// Run-length encoding `(difference, run length)` of the first differences.
pub fn difference_runs(seq: &[u64]) -> Vec<(i64, usize)> {
    let mut runs: Vec<(i64, usize)> = Vec::new();
    for w in seq.windows(2) {
        let d = w[1] as i64 - w[0] as i64;
        match runs.last_mut() {
            Some((v, len)) if *v == d => *len += 1,
            _ => runs.push((d, 1)),
        }
    }
    runs
}

/// First `n` (1-based) with `(n is a term) != (c(n) is odd)`, if any.
pub fn self_consistency_violation(c: &[u64]) -> Option<usize> {
    let max = c.last().copied().unwrap_or(0) as usize;
    let mut member = vec![false; max + 1];
    for &v in c {
        member[v as usize] = true;
    }
    (1..=c.len()).find(|&n| {
        let is_member = n <= max && member[n];
        is_member != (c[n - 1] % 2 == 1)
    })
}

/// Golomb's sequence via `g(1) = 1`, `g(n) = 1 + g(n − g(g(n − 1)))`.
pub fn golomb(n: usize) -> Vec<u64> {
    let mut g: Vec<u64> = Vec::with_capacity(n + 1);
    g.push(0);
    for i in 1..=n {
        let v = if i == 1 {
            1
        } else {
            let inner = g[g[i - 1] as usize] as usize;
            1 + g[i - inner]
        };
        g.push(v);
    }
    g.remove(0);
    g
}

pub fn golomb_sequence(n: usize) -> Sequence {
    Sequence::from_u64s(Some(GOLOMB_ID), 1, &golomb(n))
}

const PHI: f64 = 1.618_033_988_749_895;

/// `φ^(2−φ) n^(φ−1)` in double precision.
pub fn golomb_formula_value(n: u64) -> f64 {
    PHI.powf(2.0 - PHI) * (n as f64).powf(PHI - 1.0)
}

/// Nearest integer to [`golomb_formula_value`].
pub fn golomb_formula(n: u64) -> u64 {
    golomb_formula_value(n).round() as u64
}

#[derive(Debug, Clone, PartialEq)]
pub struct FormulaDeviation {
    pub n: u64,
    pub actual: u64,
    pub formula: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FormulaReport {
    pub checked: usize,
    /// Indices where the rounded formula differs from g(n).
    pub deviations: Vec<FormulaDeviation>,
    pub max_abs_error: f64,
}

/// Compares `g(n)` with the closed-form approximation over a prefix. This is
/// an observation, not an invariant: deviations are collected, never raised.
pub fn golomb_formula_report(g: &[u64]) -> FormulaReport {
    let mut r = FormulaReport::default();
    for (i, &actual) in g.iter().enumerate() {
        let n = i as u64 + 1;
        let f = golomb_formula_value(n);
        r.checked += 1;
        r.max_abs_error = r.max_abs_error.max((f - actual as f64).abs());
        if f.round() as u64 != actual {
            r.deviations.push(FormulaDeviation {
                n,
                actual,
                formula: f,
            });
        }
    }
    r
}
