//! A growable Eratosthenes sieve with trial-division factorisation.

/// Sieve of primes up to `limit`, regrown (doubled) on demand.
#[derive(Debug, Clone)]
pub struct Sieve {
    limit: u64,
    composite: Vec<bool>,
    primes: Vec<u64>,
}

impl Default for Sieve {
    fn default() -> Self {
        Self::new(1024)
    }
}

impl Sieve {
    pub fn new(limit: u64) -> Self {
        let mut s = Sieve {
            limit: 0,
            composite: Vec::new(),
            primes: Vec::new(),
        };
        s.rebuild(limit.max(16));
        s
    }

    fn rebuild(&mut self, limit: u64) {
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        composite[0] = true;
        if n >= 1 {
            composite[1] = true;
        }
        let mut i = 2;
        while i * i <= n {
            if !composite[i] {
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        self.primes = (2..=n)
            .filter(|&i| !composite[i])
            .map(|i| i as u64)
            .collect();
        self.composite = composite;
        self.limit = limit;
    }

    /// Makes sure every integer up to `n` is covered.
    pub fn ensure(&mut self, n: u64) {
        if n > self.limit {
            let mut limit = self.limit.max(16);
            while limit < n {
                limit *= 2;
            }
            self.rebuild(limit);
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&mut self, n: u64) -> bool {
        self.ensure(n);
        !self.composite[n as usize]
    }

    /// Primality lookup without growing; `n` must not exceed [`Sieve::limit`].
    pub fn is_prime_cached(&self, n: u64) -> bool {
        !self.composite[n as usize]
    }

    /// Writes the distinct prime factors of `n` (ascending) into `out`.
    pub fn distinct_factors_into(&mut self, mut n: u64, out: &mut Vec<u64>) {
        out.clear();
        if n < 2 {
            return;
        }
        self.ensure(isqrt(n) + 1);
        for &p in &self.primes {
            if p * p > n {
                break;
            }
            if n % p == 0 {
                out.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
        }
        if n > 1 {
            out.push(n);
        }
    }

    pub fn distinct_factors(&mut self, n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.distinct_factors_into(n, &mut out);
        out
    }
}

pub fn isqrt(n: u64) -> u64 {
    num_integer::Roots::sqrt(&n)
}
