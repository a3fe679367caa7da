//! Gijswijt's sequence (A090822) and its higher-order relatives.
//!
//! The curling number of a string is the largest `k` such that the string
//! can be written as `X Y^k` with `Y` nonempty. Gijswijt's sequence starts
//! with 1 and appends the curling number of everything so far; the order-`m`
//! variant starts with `m` and appends `max(k, m)`.

use crate::error::{Error, Result};
use crate::oeis::{OeisId, Sequence};

pub const OEIS_ID: OeisId = OeisId::from_number(90822);
pub const SECOND_ORDER_ID: OeisId = OeisId::from_number(91787);

/// Generation is quadratic in the length; this keeps runs bounded.
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

/// A witness `X Y^k` for a curling number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurlingDecomposition {
    pub x_len: usize,
    pub y_len: usize,
    pub k: usize,
}

/// Curling number of `seq` with the smallest `Y` among maximal-`k` witnesses.
/// Returns `None` for an empty string.
pub fn curling_number(seq: &[u64]) -> Option<CurlingDecomposition> {
    let n = seq.len();
    if n == 0 {
        return None;
    }
    let (mut best_k, mut best_y) = (1, 1);
    for y in 1..=n / 2 {
        if n / y <= best_k {
            break;
        }
        let tail = &seq[n - y..];
        let mut k = 1;
        while (k + 1) * y <= n && &seq[n - (k + 1) * y..n - k * y] == tail {
            k += 1;
        }
        if k > best_k {
            best_k = k;
            best_y = y;
        }
    }
    Some(CurlingDecomposition {
        x_len: n - best_k * best_y,
        y_len: best_y,
        k: best_k,
    })
}

/// Curling numbers of a growing string, maintained across appends.
///
/// For each period `y` we keep the length of the longest suffix agreeing with
/// the string shifted by `y`; the suffix then repeats `1 + common / y` times.
/// An append updates every period in one pass.
#[derive(Debug, Clone, Default)]
pub struct CurlingTracker {
    seq: Vec<u64>,
    /// `common[y]`, index 0 unused.
    common: Vec<u32>,
}

impl CurlingTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_slice(init: &[u64]) -> Self {
        let mut t = Self::new();
        for &v in init {
            t.push(v);
        }
        t
    }

    pub fn terms(&self) -> &[u64] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn push(&mut self, v: u64) {
        let n = self.seq.len();
        if self.common.is_empty() {
            self.common.push(0);
        }
        self.common.push(0);
        for y in 1..=n {
            let c = &mut self.common[y];
            *c = if self.seq[n - y] == v { *c + 1 } else { 0 };
        }
        self.seq.push(v);
    }

    pub fn decomposition(&self) -> Option<CurlingDecomposition> {
        let n = self.seq.len();
        if n == 0 {
            return None;
        }
        let (mut best_k, mut best_y) = (1, 1);
        for y in 1..=n / 2 {
            if n / y <= best_k {
                break;
            }
            let k = 1 + self.common[y] as usize / y;
            if k > best_k {
                best_k = k;
                best_y = y;
            }
        }
        Some(CurlingDecomposition {
            x_len: n - best_k * best_y,
            y_len: best_y,
            k: best_k,
        })
    }

    pub fn curling(&self) -> usize {
        self.decomposition().map_or(0, |d| d.k)
    }

    pub fn into_terms(self) -> Vec<u64> {
        self.seq
    }
}

/// The order-`floor` sequence: seed `floor`, then `max(k, floor)`.
#[derive(Debug, Clone)]
pub struct Generator {
    floor: u64,
    tracker: CurlingTracker,
    max_terms: usize,
}

impl Generator {
    pub fn new(floor: u64) -> Result<Self> {
        Self::with_cap(floor, DEFAULT_MAX_TERMS)
    }

    pub fn with_cap(floor: u64, max_terms: usize) -> Result<Self> {
        if floor == 0 {
            return Err(Error::Domain("floor must be at least 1".into()));
        }
        Ok(Generator {
            floor,
            tracker: CurlingTracker::from_slice(&[floor]),
            max_terms,
        })
    }

    pub fn floor(&self) -> u64 {
        self.floor
    }

    pub fn terms(&self) -> &[u64] {
        self.tracker.terms()
    }

    /// Extends to at least `n` terms.
    pub fn extend_to(&mut self, n: usize) -> Result<&[u64]> {
        if n > self.max_terms {
            return Err(Error::ResourceLimit {
                what: "Gijswijt terms",
                limit: self.max_terms as u64,
            });
        }
        while self.tracker.len() < n {
            let k = self.tracker.curling() as u64;
            self.tracker.push(k.max(self.floor));
        }
        Ok(self.tracker.terms())
    }
}

/// First `n` terms of the order-`floor` sequence (`floor = 1` is A090822).
pub fn generate(n: usize, floor: u64) -> Result<Vec<u64>> {
    let mut g = Generator::new(floor)?;
    g.extend_to(n)?;
    let mut t = g.tracker.into_terms();
    t.truncate(n);
    Ok(t)
}

pub fn sequence(n: usize, floor: u64) -> Result<Sequence> {
    let id = match floor {
        1 => Some(OEIS_ID),
        2 => Some(SECOND_ORDER_ID),
        _ => None,
    };
    Ok(Sequence::from_u64s(id, 1, &generate(n, floor)?))
}

/// One level of the recursive structure: the sequence begins with
/// `block^(floor+1) glue`, which is the next level's block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGlue {
    /// Order of the sequence being decomposed (the `floor` of the rule).
    pub floor: u64,
    /// 1-based level `m` of `B_m`, `S_m`.
    pub level: usize,
    pub block: Vec<u64>,
    pub glue: Vec<u64>,
}

impl BlockGlue {
    pub fn repetitions(&self) -> usize {
        self.floor as usize + 1
    }

    /// `B_m^(floor+1) S_m`, i.e. `B_{m+1}`.
    pub fn next_block(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.block.len() * self.repetitions() + self.glue.len());
        for _ in 0..self.repetitions() {
            out.extend_from_slice(&self.block);
        }
        out.extend_from_slice(&self.glue);
        out
    }
}

/// Walks the block/glue structure of a generator, asking for more terms as
/// needed, until `done` is satisfied.
fn decompose_until(
    gen: &mut Generator,
    mut done: impl FnMut(&[BlockGlue]) -> bool,
) -> Result<Vec<BlockGlue>> {
    let floor = gen.floor();
    let reps = floor as usize + 1;
    let mut out: Vec<BlockGlue> = Vec::new();
    let mut block = vec![floor];
    while !done(&out) {
        let level = out.len() + 1;
        let start = block.len() * reps;
        let terms = gen.extend_to(start + 1)?;
        for r in 0..reps {
            let copy = &terms[r * block.len()..(r + 1) * block.len()];
            if copy != block.as_slice() {
                return Err(Error::StructureViolation {
                    level,
                    detail: format!("copy {} of B_{level} differs from the block", r + 1),
                });
            }
        }
        let mut end = start;
        loop {
            let terms = gen.extend_to(end + 1)?;
            let v = terms[end];
            if v == floor {
                break;
            }
            if v < floor {
                return Err(Error::StructureViolation {
                    level,
                    detail: format!("glue term {v} below the floor"),
                });
            }
            end += 1;
        }
        if end == start {
            return Err(Error::StructureViolation {
                level,
                detail: "empty glue string".into(),
            });
        }
        let terms = gen.terms();
        let glue = terms[start..end].to_vec();
        let next = terms[..end].to_vec();
        out.push(BlockGlue {
            floor,
            level,
            block: std::mem::replace(&mut block, next),
            glue,
        });
    }
    Ok(out)
}

/// The first `count` (block, glue) pairs of the order-`floor` sequence.
///
/// Fails with [`Error::StructureViolation`] if the sequence does not begin
/// with `floor + 1` copies of each block.
pub fn block_decomposition(count: usize, floor: u64) -> Result<Vec<BlockGlue>> {
    let mut gen = Generator::new(floor)?;
    decompose_until(&mut gen, |b| b.len() >= count)
}

/// Default cap on the prefix length built by [`glue_concatenation`].
pub const DEFAULT_MAX_PREFIX: usize = 10_000_000;

/// Concatenation of the order-`floor` glue strings, cut to `n_terms`.
/// This reproduces the order-`floor + 1` sequence.
pub fn glue_concatenation(floor: u64, n_terms: usize) -> Result<Vec<u64>> {
    glue_concatenation_capped(floor, n_terms, DEFAULT_MAX_PREFIX)
}

/// Builds `B_{m+1} = B_m^(floor+1) S_m` level by level and evaluates the
/// curling rule only at glue positions. The glue grows logarithmically in the
/// prefix length, so `max_prefix` bounds the memory spent.
pub fn glue_concatenation_capped(
    floor: u64,
    n_terms: usize,
    max_prefix: usize,
) -> Result<Vec<u64>> {
    if floor == 0 {
        return Err(Error::Domain("floor must be at least 1".into()));
    }
    let reps = floor as usize + 1;
    let mut out = Vec::with_capacity(n_terms);
    let mut prefix = vec![floor];
    while out.len() < n_terms {
        if prefix.len() * reps > max_prefix {
            return Err(Error::ResourceLimit {
                what: "glue prefix length",
                limit: max_prefix as u64,
            });
        }
        prefix = prefix.repeat(reps);
        loop {
            let k = curling_number(&prefix).map_or(1, |d| d.k as u64);
            let v = k.max(floor);
            if v == floor {
                break;
            }
            prefix.push(v);
            out.push(v);
            if prefix.len() > max_prefix {
                return Err(Error::ResourceLimit {
                    what: "glue prefix length",
                    limit: max_prefix as u64,
                });
            }
        }
    }
    out.truncate(n_terms);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinitenessOutcome {
    /// Number of appended terms before (and including) the first 1; 0 if the
    /// initial string already contains a 1.
    FoundOne {
        position: usize,
    },
    Timeout {
        steps: usize,
    },
}

/// Extends `initial` by the plain curling rule until a 1 appears.
pub fn finiteness_experiment(initial: &[u64], max_steps: usize) -> Result<FinitenessOutcome> {
    if initial.is_empty() || initial.contains(&0) {
        return Err(Error::Domain(
            "initial string must be nonempty with entries >= 1".into(),
        ));
    }
    if initial.contains(&1) {
        return Ok(FinitenessOutcome::FoundOne { position: 0 });
    }
    let mut t = CurlingTracker::from_slice(initial);
    for step in 1..=max_steps {
        let k = t.curling() as u64;
        if k == 1 {
            return Ok(FinitenessOutcome::FoundOne { position: step });
        }
        t.push(k);
    }
    Ok(FinitenessOutcome::Timeout { steps: max_steps })
}
