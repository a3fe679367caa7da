//! Approximate squaring: iterate `x -> x * ceil(x)` on exact rationals `x > 1`
//! until an integer is reached.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_STEPS: usize = 30;
pub const DEFAULT_MAX_DIGITS: u64 = 1_000_000;

/// Exact ceiling: floor division, plus one when there is a remainder.
pub fn ceil_exact(x: &BigRational) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// One step `x * ceil(x)`. Requires `x > 1`.
pub fn approx_square_step(x: &BigRational) -> Result<BigRational> {
    if *x <= BigRational::one() {
        return Err(Error::Domain(format!(
            "approximate squaring needs x > 1, got {x}"
        )));
    }
    let c = ceil_exact(x);
    Ok(BigRational::new(x.numer() * c, x.denom().clone()))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Domain(format!("cannot parse {s:?} as a fraction"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Number of decimal digits of `|n|` (1 for zero).
pub fn decimal_digits(n: &BigInt) -> usize {
    n.abs().to_str_radix(10).len()
}

/// First `k` decimal digits of `|n|`.
pub fn leading_digits(n: &BigInt, k: usize) -> String {
    n.abs().to_str_radix(10).chars().take(k).collect()
}

/// Cheap upper estimate of the decimal length, used for the size guard.
fn estimated_digits(n: &BigInt) -> u64 {
    (n.bits() as f64 * std::f64::consts::LOG10_2).ceil() as u64 + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: usize,
    pub max_digits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: DEFAULT_MAX_STEPS,
            max_digits: DEFAULT_MAX_DIGITS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// The last element is the first integer reached.
    Integer,
    StepLimit,
    /// The numerator outgrew the digit budget.
    DigitLimit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub start: BigRational,
    /// Iterates after the start; empty for integer starts.
    pub steps: Vec<BigRational>,
    pub outcome: Outcome,
}

impl Trajectory {
    pub fn terminated(&self) -> bool {
        self.outcome == Outcome::Integer
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn last(&self) -> &BigRational {
        self.steps.last().unwrap_or(&self.start)
    }

    /// The integer reached, if the run terminated.
    pub fn final_integer(&self) -> Option<&BigInt> {
        self.terminated().then(|| self.last().numer())
    }

    pub fn final_integer_digits(&self) -> Option<usize> {
        self.final_integer().map(decimal_digits)
    }
}

pub fn trajectory(x0: &BigRational, limits: Limits) -> Result<Trajectory> {
    if *x0 <= BigRational::one() {
        return Err(Error::Domain(format!(
            "trajectory needs a start > 1, got {x0}"
        )));
    }
    let mut t = Trajectory {
        start: x0.clone(),
        steps: Vec::new(),
        outcome: Outcome::StepLimit,
    };
    if x0.is_integer() {
        t.outcome = Outcome::Integer;
        return Ok(t);
    }
    let mut x = x0.clone();
    for _ in 0..limits.max_steps {
        x = approx_square_step(&x)?;
        let integral = x.is_integer();
        let big = estimated_digits(x.numer()) > limits.max_digits;
        t.steps.push(x.clone());
        if integral {
            t.outcome = Outcome::Integer;
            return Ok(t);
        }
        if big {
            t.outcome = Outcome::DigitLimit;
            return Ok(t);
        }
    }
    Ok(t)
}

/// Steps needed from `(2l+1)/2`: `m + 1` where `2^m` exactly divides `l`.
pub fn denominator2_predicted_steps(l: u64) -> u32 {
    assert!(l >= 1, "l must be positive");
    l.trailing_zeros() + 1
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub numerator: u64,
    pub denominator: u64,
    pub trajectory: Trajectory,
}

/// Runs `n/denominator` for `n` in `from..=to`, skipping starts below 1.
/// Starts that reduce to an integer (including 1) are recorded as reached in
/// zero steps.
pub fn table(denominator: u64, from: u64, to: u64, limits: Limits) -> Result<Vec<TableRow>> {
    if denominator == 0 {
        return Err(Error::Domain("denominator must be positive".into()));
    }
    (from.max(denominator)..=to)
        .map(|n| {
            let x = BigRational::new(n.into(), denominator.into());
            let trajectory = if x.is_integer() {
                Trajectory {
                    start: x,
                    steps: Vec::new(),
                    outcome: Outcome::Integer,
                }
            } else {
                trajectory(&x, limits)?
            };
            Ok(TableRow {
                numerator: n,
                denominator,
                trajectory,
            })
        })
        .collect()
}
