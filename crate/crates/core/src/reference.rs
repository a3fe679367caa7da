//! Tabulated kissing numbers and dissection counts, with each entry flagged
//! as exact or as a one-sided bound.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Exact,
    /// The true value is at least this.
    LowerBound,
    /// The true value is at most this.
    UpperBound,
}

impl Status {
    pub fn is_exact(self) -> bool {
        self == Status::Exact
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower_bound",
            Status::UpperBound => "upper_bound",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub n: u32,
    pub value: u64,
    pub status: Status,
    /// Lattice whose theta series realizes the value, if one is built in.
    pub lattice: Option<&'static str>,
}

const fn entry(n: u32, value: u64, status: Status, lattice: Option<&'static str>) -> Entry {
    Entry {
        n,
        value,
        status,
        lattice,
    }
}

use Status::*;

/// Kissing numbers by dimension.
pub const KISSING: &[Entry] = &[
    entry(1, 2, Exact, Some("Z1")),
    entry(2, 6, Exact, Some("A2")),
    entry(3, 12, Exact, None),
    entry(4, 24, Exact, Some("D4")),
    entry(5, 40, LowerBound, None),
    entry(6, 72, LowerBound, None),
    entry(7, 126, LowerBound, None),
    entry(8, 240, Exact, Some("E8")),
    entry(9, 306, LowerBound, None),
    entry(10, 500, LowerBound, None),
    entry(24, 196_560, Exact, Some("leech")),
];

/// Fewest pieces cutting a regular n-gon into a square, `n >= 3`.
pub const DISSECTION: &[Entry] = &[
    entry(3, 4, UpperBound, None),
    entry(4, 1, Exact, None),
    entry(5, 6, UpperBound, None),
    entry(6, 5, UpperBound, None),
    entry(7, 7, UpperBound, None),
    entry(8, 5, UpperBound, None),
    entry(9, 9, UpperBound, None),
    entry(10, 7, UpperBound, None),
];

pub fn kissing(dimension: u32) -> Option<&'static Entry> {
    KISSING.iter().find(|e| e.n == dimension)
}

pub fn dissection(sides: u32) -> Option<&'static Entry> {
    DISSECTION.iter().find(|e| e.n == sides)
}
