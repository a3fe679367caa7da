//! OEIS-style sequences: identifiers, b-file I/O, bundled fixtures, an
//! optional cached fetcher, and term-by-term comparison.

mod bfile;
mod compare;
mod fetch;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub use bfile::{parse_bfile, to_bfile_string, write_bfile};
pub use compare::{compare, Comparison};
pub use fetch::{BfileStore, HttpTransport, Transport, CACHE_DIR_ENV};

/// An OEIS A-number such as `A064413`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OeisId(u32);

impl OeisId {
    pub const fn from_number(n: u32) -> Self {
        assert!(n <= 999_999, "OEIS numbers have six digits");
        OeisId(n)
    }

    pub fn number(self) -> u32 {
        self.0
    }

    /// Name of the b-file on the OEIS host, e.g. `b064413.txt`.
    pub fn bfile_name(self) -> String {
        format!("b{:06}.txt", self.0)
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("malformed OEIS id {s:?}"));
        let digits = s.strip_prefix('A').ok_or_else(bad)?;
        if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(OeisId(digits.parse().map_err(|_| bad())?))
    }
}

/// A finite run of arbitrary-precision terms indexed contiguously from `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    pub id: Option<OeisId>,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl Sequence {
    pub fn new(id: Option<OeisId>, offset: i64, terms: Vec<BigInt>) -> Self {
        Sequence { id, offset, terms }
    }

    pub fn from_u64s(id: Option<OeisId>, offset: i64, terms: &[u64]) -> Self {
        Sequence::new(id, offset, terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Index of the last term, or `offset - 1` when empty.
    pub fn last_index(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }

    /// Term at OEIS index `index`.
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let pos = index.checked_sub(self.offset)?;
        usize::try_from(pos).ok().and_then(|p| self.terms.get(p))
    }

    /// Keeps at most the first `n` terms.
    pub fn truncated(mut self, n: usize) -> Self {
        self.terms.truncate(n);
        self
    }

    /// All terms as `u64`, or `None` if any is negative or too large.
    pub fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.terms.iter().map(ToPrimitive::to_u64).collect()
    }

    /// `(index, term)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        (self.offset..).zip(self.terms.iter())
    }
}
