//! Truncated formal power series with arbitrary-precision integer
//! coefficients: products, powers, integral k-th roots, and the decision
//! whether a series is a k-th power by looking only at residues mod `μ_k`.
//!
//! A series of order `N` stands for the infinite series known up to `x^N`;
//! binary operations truncate to the smaller order.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default node budget for [`is_kth_power_mod`].
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPowerSeries {
    coeffs: Vec<BigInt>,
}

impl IntPowerSeries {
    /// Series with the given coefficients; an empty list means the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPowerSeries { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// The constant 1 known to order `order`.
    pub fn one(order: usize) -> Self {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        Self::new(c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// Keeps every `step`-th coefficient: `Σ a_{step·i} y^i`.
    pub fn decimate(&self, step: usize) -> Self {
        Self::new(self.coeffs.iter().step_by(step).cloned().collect())
    }

    /// Substitutes `x -> x^step`.
    pub fn dilate(&self, step: usize) -> Self {
        let mut c = vec![BigInt::zero(); self.order() * step + 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i * step] = v.clone();
        }
        Self::new(c)
    }

    /// Zeroes the odd-index coefficients.
    pub fn even_part(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if i % 2 == 0 {
                    v.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        Self::new(c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut c = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Self::new(c)
    }

    /// `self^k` by repeated squaring; `k = 0` gives 1 at the same order.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The unique `g` with `g(0) = 1` and `g^k = self` to this order.
    ///
    /// Coefficients come from the power-series exponent recurrence
    /// `n·k·g_n = Σ_{j=1..n} ((k+1)j − nk) f_j g_{n−j}`; the right side is
    /// always divisible by `n` (it equals `n (f_n − P_n)` with `P_n` the
    /// `x^n` coefficient of the truncated root raised to the k-th power),
    /// and `g_n` is integral exactly when the quotient is divisible by `k`.
    pub fn kth_root(&self, k: u32) -> Result<Self> {
        check_unit_constant(self)?;
        if k == 0 {
            return Err(Error::Domain("root index must be at least 1".into()));
        }
        let big_k = BigInt::from(k);
        let mut g = Vec::with_capacity(self.coeffs.len());
        g.push(BigInt::one());
        for n in 1..=self.order() {
            let mut s = BigInt::zero();
            let nk = BigInt::from(n) * &big_k;
            for j in 1..=n {
                let f = &self.coeffs[j];
                if f.is_zero() || g[n - j].is_zero() {
                    continue;
                }
                let w = BigInt::from(j) * (&big_k + 1u32) - &nk;
                s += w * f * &g[n - j];
            }
            let (kg, rem) = s.div_rem(&BigInt::from(n));
            debug_assert!(rem.is_zero(), "exact division by n");
            let (gn, rem) = kg.div_rem(&big_k);
            if !rem.is_zero() {
                return Err(Error::NonIntegerRoot { index: n });
            }
            g.push(gn);
        }
        Ok(Self::new(g))
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn residues(&self, m: u64) -> Vec<u64> {
        let bm = BigInt::from(m);
        self.coeffs
            .iter()
            .map(|c| c.mod_floor(&bm).to_u64().expect("residue below modulus"))
            .collect()
    }

    /// Parses one integer per line, index 0 first; `#` comments and blank
    /// lines are skipped.
    pub fn parse_coeffs(text: &str) -> Result<Self> {
        let mut c = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            // either `value` or `index value`, the b-file layout from offset 0
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let value = match tokens[..] {
                [v] => v,
                [n, v] => {
                    let expected = c.len() as i64;
                    let found = n
                        .parse::<i64>()
                        .map_err(|_| bad(format!("bad index {n:?}")))?;
                    if found != expected {
                        return Err(Error::Contiguity {
                            line: i + 1,
                            expected,
                            found,
                        });
                    }
                    v
                }
                _ => return Err(bad(format!("bad coefficient line {line:?}"))),
            };
            c.push(
                value
                    .parse::<BigInt>()
                    .map_err(|_| bad(format!("bad coefficient {value:?}")))?,
            );
        }
        if c.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no coefficients".into(),
            });
        }
        Ok(Self::new(c))
    }
}

impl Mul for &IntPowerSeries {
    type Output = IntPowerSeries;

    fn mul(self, rhs: Self) -> IntPowerSeries {
        IntPowerSeries::mul(self, rhs)
    }
}

impl fmt::Display for IntPowerSeries {
    /// `1 + 6x^2 - 48x^4 + O(x^5)` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

fn check_unit_constant(f: &IntPowerSeries) -> Result<()> {
    if !f.coeffs[0].is_one() {
        return Err(Error::Domain(format!(
            "constant term must be 1, got {}",
            f.coeffs[0]
        )));
    }
    Ok(())
}

fn distinct_primes(mut k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            out.push(p);
            while k % p == 0 {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// Product of the distinct primes dividing `k`.
pub fn radical(k: u64) -> u64 {
    distinct_primes(k).into_iter().product()
}

/// `μ_k = k · rad(k)`.
pub fn mu(k: u64) -> u64 {
    assert!(k >= 1, "μ_k needs k >= 1");
    k * radical(k)
}

/// Whether `f` is a k-th power, decided from its residues mod `μ_k`.
pub fn is_kth_power_mod(f: &IntPowerSeries, k: u32) -> Result<bool> {
    is_kth_power_mod_with_limit(f, k, DEFAULT_NODE_LIMIT)
}

/// Depth-first search for `g` over `Z/μ_k` with `g(0) = 1` and
/// `g^k ≡ f (mod μ_k)` to the order of `f`.
///
/// `g^k mod μ_k` depends only on `g mod rad(k)`, since
/// `(g + rad(k)·h)^k ≡ g^k (mod k·rad(k))`. Candidates at each depth are
/// therefore taken from `[0, rad(k))`; the coefficient equation at depth `n`
/// reads `k·g_n ≡ f_n − P_n`, which pins `g_n mod rad(k)` or rules the
/// branch out. The node budget is kept as a guard and reported as
/// [`Error::Inconclusive`] when exhausted.
pub fn is_kth_power_mod_with_limit(f: &IntPowerSeries, k: u32, node_limit: u64) -> Result<bool> {
    check_unit_constant(f)?;
    if k == 0 {
        return Err(Error::Domain("root index must be at least 1".into()));
    }
    let k64 = k as u64;
    let m = mu(k64);
    let rad = m / k64;
    let target = f.residues(m);
    if target[1..].iter().all(|&r| r == 0) {
        return Ok(true);
    }
    let n_max = f.order();
    let kk = k as usize;
    let mm = m as u128;

    // powers[i][t] = [x^t] g^(i+1) mod m, for the coefficients fixed so far
    let mut powers: Vec<Vec<u64>> = vec![vec![1]; kk];
    let mut g: Vec<u64> = vec![1];
    // candidate stacks, one per depth
    let mut stack: Vec<Vec<u64>> = Vec::new();
    let mut nodes: u64 = 0;

    let provisional = |g: &[u64], powers: &[Vec<u64>], n: usize| -> Vec<u64> {
        // column n of every power with g_n = 0
        let mut col = vec![0u64; kk];
        for i in 1..kk {
            let prev = &powers[i - 1];
            let mut acc: u128 = col[i - 1] as u128; // g_0 · [x^n] g^i
            for j in 1..n {
                acc += g[j] as u128 * prev[n - j] as u128;
            }
            col[i] = (acc % mm) as u64;
        }
        col
    };

    let candidates = |col: &[u64], n: usize| -> Vec<u64> {
        let p = col[kk - 1];
        let t = (target[n] + m - p) % m;
        (0..rad).filter(|&r| (k64 * r) % m == t).collect()
    };

    if n_max == 0 {
        return Ok(true);
    }
    let col = provisional(&g, &powers, 1);
    stack.push(candidates(&col, 1));
    let mut cols: Vec<Vec<u64>> = vec![col];

    loop {
        let depth = g.len(); // coefficient index being chosen
        let Some(r) = stack.last_mut().and_then(Vec::pop) else {
            // exhausted this depth: backtrack
            stack.pop();
            cols.pop();
            if g.len() == 1 {
                return Ok(false);
            }
            g.pop();
            for p in &mut powers {
                p.pop();
            }
            continue;
        };
        nodes += 1;
        if nodes > node_limit {
            return Err(Error::Inconclusive { nodes: node_limit });
        }
        let col = cols.last().expect("column for current depth");
        g.push(r);
        for (i, p) in powers.iter_mut().enumerate() {
            let v = (col[i] as u128 + (i as u128 + 1) * r as u128) % mm;
            p.push(v as u64);
        }
        if depth == n_max {
            return Ok(true);
        }
        let next = provisional(&g, &powers, depth + 1);
        stack.push(candidates(&next, depth + 1));
        cols.push(next);
    }
}
