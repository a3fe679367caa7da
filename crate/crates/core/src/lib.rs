//! Generators, structure checks and exact-arithmetic experiments for a set of
//! "staggering" integer sequences: the EKG sequence, Gijswijt's sequence and
//! its higher-order relatives, numerical Aronson-type sequences, approximate
//! squaring of rationals, integer k-th roots of power series, and lattice
//! theta series with kissing-number read-off.
//!
//! Every generator is paired with an OEIS reference fixture (see [`oeis`]) so
//! results can be checked term by term.

pub mod approxsq;
pub mod ekg;
pub mod error;
pub mod gijswijt;
pub mod oeis;
pub mod powerseries;
pub mod primes;
pub mod reference;
pub mod selfref;
pub mod theta;

pub use error::{Error, Result};
pub use oeis::{OeisId, Sequence};
pub use powerseries::IntPowerSeries;
