//! Theta series of integral lattices by exact short-vector enumeration, and
//! kissing numbers read off as the first nonzero coefficient after 1.
//!
//! The quadratic form is decomposed as `Q(v) = Σ q_ii (v_i + Σ_{j>i} q_ij v_j)^2`
//! over the rationals, then every quantity is rescaled by one common
//! denominator so the enumeration runs on `i128` with exact bounds.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::oeis::fixtures;
use crate::powerseries::IntPowerSeries;

/// Default budget on visited enumeration nodes.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A lattice given by a symmetric positive-definite integer Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    name: String,
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(name: impl Into<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 {
            return Err(Error::InvalidGram("empty matrix".into()));
        }
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGram("matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidGram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        let lat = Lattice {
            name: name.into(),
            gram,
        };
        for (i, d) in lat.decomposition().0.iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::InvalidGram(format!(
                    "leading principal minor {} is not positive",
                    i + 1
                )));
            }
        }
        Ok(lat)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn dimension(&self) -> usize {
        self.gram.len()
    }

    pub fn norm(&self, v: &[i64]) -> i64 {
        let n = self.dimension();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += v[i] * self.gram[i][j] * v[j];
            }
        }
        s
    }

    /// Even lattice: every diagonal entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.dimension()).all(|i| self.gram[i][i] % 2 == 0)
    }

    /// `(q_ii, q_ij)` of the square-completion; stops at the first
    /// non-positive pivot.
    fn decomposition(&self) -> (Vec<BigRational>, Vec<Vec<BigRational>>) {
        let n = self.dimension();
        let mut q: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let mut diag = Vec::with_capacity(n);
        for i in 0..n {
            let pivot = q[i][i].clone();
            diag.push(pivot.clone());
            if !pivot.is_positive() {
                break;
            }
            for j in i + 1..n {
                q[j][i] = q[i][j].clone();
                q[i][j] = &q[i][j] / &pivot;
            }
            for k in i + 1..n {
                for l in k..n {
                    let t = &q[k][i] * &q[i][l];
                    q[k][l] -= t;
                }
            }
        }
        (diag, q)
    }

    pub fn determinant(&self) -> BigRational {
        self.decomposition()
            .0
            .into_iter()
            .fold(BigRational::one(), |a, b| a * b)
    }
}

/// Parses `n` whitespace-separated rows of `n` integers.
pub fn parse_gram(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("bad entry {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// `Z^n`, `A2`, `D4` or `E8`. `Z^n` is also accepted as `Zn`.
pub fn builtin_lattice(name: &str) -> Result<Lattice> {
    let upper = name.trim().to_ascii_uppercase();
    let gram = match upper.as_str() {
        "A2" => vec![vec![2, 1], vec![1, 2]],
        // (1,1,0,0), (1,-1,0,0), (0,1,-1,0), (0,0,1,-1): the even-sum vectors of Z^4
        "D4" => gram_of(&[[1, 1, 0, 0], [1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]]),
        "E8" => e8_gram(),
        _ => {
            let dim = upper
                .strip_prefix("Z^")
                .or_else(|| upper.strip_prefix('Z'))
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| (1..=64).contains(&d))
                .ok_or_else(|| Error::UnknownLattice(name.to_string()))?;
            (0..dim)
                .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
                .collect()
        }
    };
    Lattice::new(upper, gram)
}

fn gram_of<const N: usize>(basis: &[[i64; N]]) -> Vec<Vec<i64>> {
    basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

/// Cartan matrix of E8: a chain of seven nodes with the eighth attached to
/// the fifth.
fn e8_gram() -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for (a, b) in edges {
        g[a][b] = -1;
        g[b][a] = -1;
    }
    g
}

/// `Σ M_d x^d` for `d <= max_norm`, where `M_d` counts vectors of norm `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSeries {
    pub series: IntPowerSeries,
    pub max_norm: usize,
}

impl ThetaSeries {
    pub fn coeff(&self, d: usize) -> &BigInt {
        self.series.coeff(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KissingNumber {
    pub tau: BigInt,
    /// Norm of the minimal vectors.
    pub norm: usize,
}

/// First nonzero coefficient beyond the constant term.
pub fn kissing_number(theta: &ThetaSeries) -> Result<KissingNumber> {
    theta
        .series
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, c)| !c.is_zero())
        .map(|(norm, tau)| KissingNumber {
            tau: tau.clone(),
            norm,
        })
        .ok_or(Error::NoMinimalVectors {
            max_norm: theta.max_norm,
        })
}

/// Loads a bundled theta series (`leech` or `nebe24`), indexed by norm.
pub fn fixture_theta(name: &str) -> Result<ThetaSeries> {
    let series = IntPowerSeries::parse_coeffs(fixtures::theta_text(name)?)?;
    Ok(ThetaSeries {
        max_norm: series.order(),
        series,
    })
}

fn overflow() -> Error {
    Error::InvalidGram("entries too large for exact i128 enumeration".into())
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(overflow)
}

/// Integer form of the decomposition at a fixed scale.
struct Scaled {
    /// `den_i`
    den: Vec<i128>,
    /// `den_i · q_ij` for `j > i`
    mix: Vec<Vec<i128>>,
    /// `a_i · w_i`: weight of `(den_i v_i + C_i)^2` in scaled units
    weight: Vec<i128>,
    /// common scale `L`
    scale: i128,
}

impl Scaled {
    fn new(lat: &Lattice) -> Result<Self> {
        let n = lat.dimension();
        let (diag, q) = lat.decomposition();
        let mut den = Vec::with_capacity(n);
        for i in 0..n {
            let d = (i + 1..n).fold(BigInt::one(), |acc, j| acc.lcm(q[i][j].denom()));
            den.push(d);
        }
        // L = lcm_i(b_i · den_i^2)
        let mut scale = BigInt::one();
        for i in 0..n {
            scale = scale.lcm(&(diag[i].denom() * &den[i] * &den[i]));
        }
        let mut weight = Vec::with_capacity(n);
        let mut mix = Vec::with_capacity(n);
        for i in 0..n {
            let w = &scale / (diag[i].denom() * &den[i] * &den[i]);
            weight.push(to_i128(&(diag[i].numer() * w))?);
            let row = (0..n)
                .map(|j| {
                    if j > i {
                        to_i128(
                            &(&q[i][j] * BigRational::from_integer(den[i].clone())).to_integer(),
                        )
                    } else {
                        Ok(0)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            mix.push(row);
        }
        Ok(Scaled {
            den: den.iter().map(to_i128).collect::<Result<_>>()?,
            mix,
            weight,
            scale: to_i128(&scale)?,
        })
    }
}

struct Enumerator<'a> {
    s: &'a Scaled,
    v: Vec<i128>,
    counts: Vec<u64>,
    max_norm: i128,
    nodes: u64,
    budget: u64,
}

impl Enumerator<'_> {
    fn run(&mut self, level: usize, budget_left: i128) -> Result<()> {
        let s = self.s;
        let c: i128 = (level + 1..self.v.len())
            .map(|j| s.mix[level][j] * self.v[j])
            .sum();
        let m = budget_left / s.weight[level];
        let r = m.sqrt();
        let den = s.den[level];
        let lo = Integer::div_ceil(&(-r - c), &den);
        let hi = Integer::div_floor(&(r - c), &den);
        for x in lo..=hi {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceLimit {
                    what: "theta enumeration nodes",
                    limit: self.budget,
                });
            }
            let z = den * x + c;
            let rest = budget_left - s.weight[level] * z * z;
            if rest < 0 {
                continue;
            }
            self.v[level] = x;
            if level == 0 {
                let used = s.scale * self.max_norm - rest;
                debug_assert_eq!(used % s.scale, 0);
                self.counts[(used / s.scale) as usize] += 1;
            } else {
                self.run(level - 1, rest)?;
            }
        }
        self.v[level] = 0;
        Ok(())
    }
}

/// Gaussian-heuristic estimate of the number of vectors of norm `<= max_norm`.
pub fn estimated_count(lat: &Lattice, max_norm: usize) -> f64 {
    let n = lat.dimension() as f64;
    let det = lat.determinant().to_f64().unwrap_or(f64::INFINITY);
    let ball = std::f64::consts::PI.powf(n / 2.0) / gamma_half_plus_one(lat.dimension());
    ball * (max_norm as f64).powf(n / 2.0) / det.sqrt()
}

/// `Γ(n/2 + 1)`
fn gamma_half_plus_one(n: usize) -> f64 {
    if n % 2 == 0 {
        (1..=n / 2).map(|i| i as f64).product()
    } else {
        // Γ(k + 1/2 + 1) = (k + 1/2)(k − 1/2)…(1/2)·√π
        let k = n / 2;
        (0..=k).map(|i| i as f64 + 0.5).product::<f64>() * std::f64::consts::PI.sqrt()
    }
}

pub fn theta_series(lat: &Lattice, max_norm: usize) -> Result<ThetaSeries> {
    theta_series_with_budget(lat, max_norm, DEFAULT_BUDGET)
}

pub fn theta_series_with_budget(
    lat: &Lattice,
    max_norm: usize,
    budget: u64,
) -> Result<ThetaSeries> {
    if estimated_count(lat, max_norm) > budget as f64 {
        return Err(Error::ResourceLimit {
            what: "estimated theta enumeration size",
            limit: budget,
        });
    }
    let scaled = Scaled::new(lat)?;
    let total = scaled
        .scale
        .checked_mul(max_norm as i128)
        .ok_or_else(overflow)?;
    let n = lat.dimension();
    let mut e = Enumerator {
        s: &scaled,
        v: vec![0; n],
        counts: vec![0; max_norm + 1],
        max_norm: max_norm as i128,
        nodes: 0,
        budget,
    };
    e.run(n - 1, total)?;
    let series = IntPowerSeries::new(e.counts.into_iter().map(BigInt::from).collect());
    Ok(ThetaSeries { series, max_norm })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(t: &ThetaSeries) -> Vec<u64> {
        t.series
            .coeffs()
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn integers() {
        let t = theta_series(&builtin_lattice("Z^1").unwrap(), 25).unwrap();
        let c = coeffs(&t);
        for (d, &m) in c.iter().enumerate() {
            let want = match d {
                0 => 1,
                1 | 4 | 9 | 16 | 25 => 2,
                _ => 0,
            };
            assert_eq!(m, want, "norm {d}");
        }
    }

    #[test]
    fn hexagonal() {
        let t = theta_series(&builtin_lattice("A2").unwrap(), 2).unwrap();
        assert_eq!(coeffs(&t), [1, 0, 6]);
        assert_eq!(kissing_number(&t).unwrap().tau, 6.into());
    }

    #[test]
    fn d4_prefix() {
        let t = theta_series(&builtin_lattice("D4").unwrap(), 10).unwrap();
        assert_eq!(coeffs(&t), [1, 0, 24, 0, 24, 0, 96, 0, 24, 0, 144]);
        let k = kissing_number(&t).unwrap();
        assert_eq!((k.tau, k.norm), (24.into(), 2));
    }

    #[test]
    fn e8_is_unimodular_and_even() {
        let e8 = builtin_lattice("E8").unwrap();
        assert!(e8.determinant().is_one());
        assert!(e8.is_even());
        let t = theta_series(&e8, 4).unwrap();
        assert_eq!(coeffs(&t), [1, 0, 240, 0, 2160]);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(Lattice::new("x", vec![]).is_err());
        assert!(Lattice::new("x", vec![vec![1, 2]]).is_err());
        assert!(Lattice::new("x", vec![vec![1, 2], vec![3, 1]]).is_err());
        // indefinite
        assert!(Lattice::new("x", vec![vec![1, 2], vec![2, 1]]).is_err());
        assert!(Lattice::new("x", vec![vec![0]]).is_err());
        assert!(matches!(
            builtin_lattice("K12"),
            Err(Error::UnknownLattice(_))
        ));
        assert!(builtin_lattice("Z0").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(builtin_lattice("z4").unwrap().dimension(), 4);
        assert_eq!(builtin_lattice("Z^3").unwrap().dimension(), 3);
        assert_eq!(builtin_lattice("e8").unwrap().name(), "E8");
    }

    #[test]
    fn gram_file() {
        let g = parse_gram("# A2\n2 1\n1 2\n").unwrap();
        assert_eq!(g, vec![vec![2, 1], vec![1, 2]]);
        assert!(parse_gram("2 x\n").is_err());
    }

    #[test]
    fn budget_guard() {
        let z8 = builtin_lattice("Z8").unwrap();
        assert!(matches!(
            theta_series_with_budget(&z8, 30, 1000),
            Err(Error::ResourceLimit { .. })
        ));
        // estimate passes but the node count does not
        let a2 = builtin_lattice("A2").unwrap();
        assert!(matches!(
            theta_series_with_budget(&a2, 40, 80),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn no_minimal_vectors_within_cutoff() {
        let t = theta_series(&builtin_lattice("E8").unwrap(), 1).unwrap();
        assert!(matches!(
            kissing_number(&t),
            Err(Error::NoMinimalVectors { .. })
        ));
    }

    #[test]
    fn fixtures_load() {
        let l = fixture_theta("leech").unwrap();
        assert_eq!(l.coeff(0), &BigInt::one());
        assert!(fixture_theta("Leech").is_ok());
        assert!(matches!(
            fixture_theta("K12"),
            Err(Error::MissingFixture(_))
        ));
    }
}
