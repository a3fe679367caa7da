use num_integer::Integer;
use seqlab::ekg::{self, Line};
use seqlab::oeis::{compare, fixtures};

/// Quadratic scan: from the smallest unused value upwards, take the first
/// one sharing a factor with the previous term.
fn naive(n: usize) -> Vec<u64> {
    let mut out = vec![1u64, 2];
    let mut used = vec![false; 8];
    used[1] = true;
    used[2] = true;
    let mut low = 3;
    while out.len() < n {
        let last = *out.last().unwrap();
        while used[low] {
            low += 1;
        }
        let mut c = low;
        loop {
            if c >= used.len() {
                used.resize(2 * c, false);
            }
            if !used[c] && (c as u64).gcd(&last) > 1 {
                break;
            }
            c += 1;
        }
        used[c] = true;
        out.push(c as u64);
    }
    out.truncate(n);
    out
}

#[test]
fn matches_naive_generator() {
    let n = 10_000;
    assert_eq!(ekg::generate(n).unwrap(), naive(n));
}

#[test]
fn matches_bundled_bfile() {
    let reference = fixtures::load(ekg::OEIS_ID).unwrap();
    let computed = ekg::sequence(reference.len()).unwrap();
    let c = compare(&computed, &reference).unwrap();
    assert!(c.is_agreement(), "{c:?}");
}

#[test]
fn smallest_unused_with_common_factor() {
    let terms = ekg::generate(3000).unwrap();
    let mut used = std::collections::HashSet::new();
    used.insert(terms[0]);
    used.insert(terms[1]);
    for w in terms[1..].windows(2) {
        let (prev, cur) = (w[0], w[1]);
        assert!(cur.gcd(&prev) > 1);
        for m in 2..cur {
            assert!(
                used.contains(&m) || m.gcd(&prev) == 1,
                "{m} skipped before {cur}"
            );
        }
        assert!(used.insert(cur), "{cur} repeated");
    }
}

#[test]
fn large_prefix_properties() {
    let n = 1_000_000;
    let terms = ekg::generate(n).unwrap();
    for (i, &v) in terms.iter().enumerate().skip(99) {
        let ratio = v as f64 / (i + 1) as f64;
        assert!(ratio > 0.25 && ratio < 3.25, "a({}) = {v}", i + 1);
    }
    for w in terms[1..].windows(2) {
        assert!(w[0].gcd(&w[1]) > 1);
    }
    for big_n in [1000, 10_000, 100_000, n] {
        let mut seen = vec![false; big_n / 3 + 1];
        for &v in &terms[..big_n] {
            if let Some(s) = seen.get_mut(v as usize) {
                *s = true;
            }
        }
        let missing = (1..seen.len()).find(|&m| !seen[m]);
        assert_eq!(missing, None, "first {big_n} terms");
    }
    let report = ekg::prime_neighbor_report(&terms[..100_000]);
    assert!(
        report.violations.is_empty(),
        "{:?}",
        &report.violations[..1]
    );
    assert!(report.primes_checked > 4000, "{}", report.primes_checked);
}

#[test]
fn three_lines() {
    let terms = ekg::generate(2000).unwrap();
    let lines = ekg::classify(&terms);
    let lower = lines.iter().filter(|&&l| l == Line::Lower).count();
    let upper = lines.iter().filter(|&&l| l == Line::Upper).count();
    // every prime p >= 3 reached so far sits on the lower line, 3p right after it
    assert!(lower > 100);
    assert!(upper >= lower - 2);
    for p in ekg::line_points(&terms)
        .iter()
        .filter(|p| p.line == Line::Lower)
    {
        assert!(p.ratio < 1.0 || p.n < 10);
    }
}
