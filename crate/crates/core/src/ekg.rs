//! The EKG sequence (A064413): a(1) = 1, a(2) = 2, and each later term is the
//! smallest unused positive integer sharing a factor with its predecessor.
//!
//! Generation keeps, for every prime seen so far, a cursor at the smallest
//! multiple of that prime not yet known to be used. Cursors are advanced
//! lazily past used values, so producing N terms costs roughly
//! `N log log N` cursor steps instead of the quadratic rescan.

use std::fmt;

use crate::error::{Error, Result};
use crate::oeis::{OeisId, Sequence};
use crate::primes::Sieve;

pub const OEIS_ID: OeisId = OeisId::from_number(64413);

/// Default cap on generated terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

/// Growable bitmap of used values.
#[derive(Debug, Clone, Default)]
struct Bitmap {
    words: Vec<u64>,
}

impl Bitmap {
    fn get(&self, i: u64) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    fn set(&mut self, i: u64) {
        let (w, b) = ((i / 64) as usize, i % 64);
        if w >= self.words.len() {
            self.words.resize((w + 1).next_power_of_two(), 0);
        }
        self.words[w] |= 1 << b;
    }
}

/// Generator state: the terms so far, the used-set and per-prime cursors.
#[derive(Debug, Clone)]
pub struct EkgState {
    produced: Vec<u64>,
    used: Bitmap,
    /// `cursors[p]` is the smallest multiple of `p` not confirmed used, or 0
    /// if `p` has not been seen.
    cursors: Vec<u64>,
    sieve: Sieve,
    factors: Vec<u64>,
}

impl Default for EkgState {
    fn default() -> Self {
        Self::new()
    }
}

impl EkgState {
    /// State holding the seed terms 1, 2.
    pub fn new() -> Self {
        let mut s = EkgState {
            produced: Vec::new(),
            used: Bitmap::default(),
            cursors: Vec::new(),
            sieve: Sieve::new(1 << 12),
            factors: Vec::new(),
        };
        for seed in [1, 2] {
            s.used.set(seed);
            s.produced.push(seed);
        }
        s
    }

    pub fn terms(&self) -> &[u64] {
        &self.produced
    }

    pub fn last(&self) -> u64 {
        *self.produced.last().expect("seeded")
    }

    pub fn into_terms(self) -> Vec<u64> {
        self.produced
    }

    fn cursor(&mut self, p: u64) -> u64 {
        let i = p as usize;
        if i >= self.cursors.len() {
            self.cursors.resize((i + 1).next_power_of_two(), 0);
        }
        let mut c = if self.cursors[i] == 0 {
            p
        } else {
            self.cursors[i]
        };
        while self.used.get(c) {
            c += p;
        }
        self.cursors[i] = c;
        c
    }

    /// Appends and returns the next term.
    pub fn next_term(&mut self) -> u64 {
        let last = self.last();
        let mut factors = std::mem::take(&mut self.factors);
        self.sieve.distinct_factors_into(last, &mut factors);
        let next = factors
            .iter()
            .map(|&p| self.cursor(p))
            .min()
            .expect("last term > 1 after the seeds");
        self.factors = factors;
        self.used.set(next);
        self.produced.push(next);
        next
    }
}

/// First `n` terms, subject to [`DEFAULT_MAX_TERMS`].
pub fn generate(n: usize) -> Result<Vec<u64>> {
    generate_capped(n, DEFAULT_MAX_TERMS)
}

pub fn generate_capped(n: usize, max_terms: usize) -> Result<Vec<u64>> {
    if n > max_terms {
        return Err(Error::ResourceLimit {
            what: "EKG terms",
            limit: max_terms as u64,
        });
    }
    let mut state = EkgState::new();
    while state.terms().len() < n {
        state.next_term();
    }
    let mut terms = state.into_terms();
    terms.truncate(n);
    Ok(terms)
}

pub fn sequence(n: usize) -> Result<Sequence> {
    Ok(Sequence::from_u64s(Some(OEIS_ID), 1, &generate(n)?))
}

/// An odd prime whose neighbours are not `2p` before and `3p` after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborViolation {
    /// 1-based position of the prime.
    pub position: usize,
    pub prime: u64,
    pub predecessor: u64,
    pub successor: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NeighborReport {
    /// Odd primes found at interior positions.
    pub primes_checked: usize,
    pub violations: Vec<NeighborViolation>,
}

/// Checks every odd prime at an interior position for the `2p, p, 3p` pattern.
pub fn prime_neighbor_report(terms: &[u64]) -> NeighborReport {
    let mut report = NeighborReport::default();
    let Some(&max) = terms.iter().max() else {
        return report;
    };
    let mut sieve = Sieve::new(max);
    for i in 1..terms.len().saturating_sub(1) {
        let p = terms[i];
        if p % 2 == 0 || !sieve.is_prime(p) {
            continue;
        }
        report.primes_checked += 1;
        let (pred, succ) = (terms[i - 1], terms[i + 1]);
        if pred != 2 * p || succ != 3 * p {
            report.violations.push(NeighborViolation {
                position: i + 1,
                prime: p,
                predecessor: pred,
                successor: succ,
            });
        }
    }
    report
}

/// Which of the three visual lines a term sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    /// a(n) is prime.
    Lower,
    /// a(n) = 3p immediately after a(n-1) = p.
    Upper,
    Central,
}

impl Line {
    pub fn as_str(self) -> &'static str {
        match self {
            Line::Lower => "lower_line",
            Line::Upper => "upper_line",
            Line::Central => "central",
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify(terms: &[u64]) -> Vec<Line> {
    let max = terms.iter().copied().max().unwrap_or(2);
    let mut sieve = Sieve::new(max);
    let mut labels = Vec::with_capacity(terms.len());
    for (i, &a) in terms.iter().enumerate() {
        let label = if sieve.is_prime(a) {
            Line::Lower
        } else if i > 0 && a % 3 == 0 && terms[i - 1] * 3 == a && sieve.is_prime(terms[i - 1]) {
            Line::Upper
        } else {
            Line::Central
        };
        labels.push(label);
    }
    labels
}

/// One row of plot data.
#[derive(Debug, Clone, PartialEq)]
pub struct LinePoint {
    pub n: usize,
    pub value: u64,
    pub line: Line,
    /// a(n) / n
    pub ratio: f64,
    /// The central-line curve 1 + 1/(3 ln n); undefined at n = 1.
    pub central_curve: Option<f64>,
}

pub fn central_curve(n: usize) -> Option<f64> {
    (n >= 2).then(|| 1.0 + 1.0 / (3.0 * (n as f64).ln()))
}

pub fn line_points(terms: &[u64]) -> Vec<LinePoint> {
    classify(terms)
        .into_iter()
        .zip(terms)
        .enumerate()
        .map(|(i, (line, &value))| {
            let n = i + 1;
            LinePoint {
                n,
                value,
                line,
                ratio: value as f64 / n as f64,
                central_curve: central_curve(n),
            }
        })
        .collect()
}
