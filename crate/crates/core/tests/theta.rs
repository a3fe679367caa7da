use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqlab::powerseries::IntPowerSeries;
use seqlab::reference::{self, Status};
use seqlab::theta::{builtin_lattice, fixture_theta, kissing_number, theta_series, Lattice};

fn theta3(order: usize) -> IntPowerSeries {
    let c = (0..=order)
        .map(|i| {
            let r = (i as f64).sqrt().round() as usize;
            BigInt::from(match (i, r * r == i) {
                (0, _) => 1,
                (_, true) => 2,
                _ => 0,
            })
        })
        .collect();
    IntPowerSeries::new(c)
}

fn det3(g: &[Vec<i64>]) -> i64 {
    match g.len() {
        1 => g[0][0],
        2 => g[0][0] * g[1][1] - g[0][1] * g[1][0],
        _ => {
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        }
    }
}

fn minor(g: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    g.iter()
        .enumerate()
        .filter(|&(r, _)| r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != i)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Counts every vector in the box `|v_i| <= sqrt(N · (G⁻¹)_ii)`, which holds
/// all vectors of norm at most `N`.
fn box_scan(g: &[Vec<i64>], max_norm: usize) -> Vec<u64> {
    let n = g.len();
    let det = det3(g) as f64;
    let bounds: Vec<i64> = (0..n)
        .map(|i| {
            let cof = if n == 1 {
                1.0
            } else {
                det3(&minor(g, i)) as f64
            };
            (max_norm as f64 * cof / det).sqrt() as i64 + 1
        })
        .collect();
    let mut counts = vec![0u64; max_norm + 1];
    let mut v = vec![0i64; n];
    fn rec(g: &[Vec<i64>], b: &[i64], v: &mut Vec<i64>, i: usize, out: &mut [u64]) {
        if i == v.len() {
            let mut s = 0;
            for a in 0..v.len() {
                for c in 0..v.len() {
                    s += v[a] * g[a][c] * v[c];
                }
            }
            if (s as usize) < out.len() {
                out[s as usize] += 1;
            }
            return;
        }
        for x in -b[i]..=b[i] {
            v[i] = x;
            rec(g, b, v, i + 1, out);
        }
    }
    rec(g, &bounds, &mut v, 0, &mut counts);
    counts
}

fn counts(lat: &Lattice, max_norm: usize) -> Vec<u64> {
    theta_series(lat, max_norm)
        .unwrap()
        .series
        .coeffs()
        .iter()
        .map(|c| c.to_u64().unwrap())
        .collect()
}

fn gram(basis: &[Vec<i64>]) -> Vec<Vec<i64>> {
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

fn transform(g: &[Vec<i64>], u: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                for b in 0..n {
                    out[i][j] += u[a][i] * g[a][b] * u[b][j];
                }
            }
        }
    }
    out
}

#[test]
fn integers_give_theta3() {
    let z1 = theta_series(&builtin_lattice("Z^1").unwrap(), 25).unwrap();
    assert_eq!(z1.series, theta3(25));
    let k = kissing_number(&z1).unwrap();
    assert_eq!((k.tau, k.norm), (2.into(), 1));
    let z4 = theta_series(&builtin_lattice("Z^4").unwrap(), 30).unwrap();
    assert_eq!(z4.series, theta3(30).pow(4));
}

#[test]
fn d4_is_even_part_of_four_squares() {
    let d4 = theta_series(&builtin_lattice("D4").unwrap(), 40).unwrap();
    let r = theta3(40).pow(4);
    assert_eq!(d4.series, r.even_part());
    assert!((1..=40).step_by(2).any(|i| !r.coeff(i).is_zero()));
    assert_eq!(
        &counts(&builtin_lattice("D4").unwrap(), 10),
        &[1, 0, 24, 0, 24, 0, 96, 0, 24, 0, 144]
    );
}

#[test]
fn e8() {
    let t = theta_series(&builtin_lattice("E8").unwrap(), 20).unwrap();
    let k = kissing_number(&t).unwrap();
    assert_eq!((k.tau, k.norm), (240.into(), 2));
    assert!(t.series.kth_root(8).is_ok());
    for i in (1..=20).step_by(2) {
        assert!(t.coeff(i).is_zero());
    }
    // 240 σ3(m) vectors of norm 2m
    for m in 1..=10u64 {
        let sigma3: u64 = (1..=m).filter(|d| m % d == 0).map(|d| d * d * d).sum();
        assert_eq!(
            t.coeff(2 * m as usize),
            &BigInt::from(240 * sigma3),
            "norm {}",
            2 * m
        );
    }
}

#[test]
fn twenty_four_dimensional_fixtures() {
    let leech = fixture_theta("leech").unwrap();
    let k = kissing_number(&leech).unwrap();
    assert_eq!((k.tau, k.norm), (196_560.into(), 4));
    assert!(leech.series.kth_root(24).is_ok());
    let nebe = fixture_theta("nebe24").unwrap();
    assert!(nebe.series.kth_root(12).is_ok());
    assert!(nebe.series.order() >= 100);
}

#[test]
fn kissing_prefix() {
    let computed: Vec<(u32, u64)> = [("Z1", 1), ("A2", 2), ("D4", 4), ("E8", 8)]
        .iter()
        .map(|&(name, dim)| {
            let lat = builtin_lattice(name).unwrap();
            assert_eq!(lat.dimension(), dim as usize);
            let t = theta_series(&lat, 4).unwrap();
            (dim, kissing_number(&t).unwrap().tau.to_u64().unwrap())
        })
        .collect();
    for (dim, tau) in &computed {
        let e = reference::kissing(*dim).unwrap();
        assert_eq!((e.value, e.status), (*tau, Status::Exact));
    }
    let prefix: Vec<u64> = (1..=4)
        .chain([8])
        .map(|d| reference::kissing(d).unwrap().value)
        .collect();
    assert_eq!(prefix, [2, 6, 12, 24, 240]);
    for d in [5, 6, 7, 9, 10] {
        assert_eq!(reference::kissing(d).unwrap().status, Status::LowerBound);
    }
}

#[test]
fn basis_change_keeps_d4_theta() {
    let d4 = builtin_lattice("D4").unwrap();
    let want = counts(&d4, 12);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let mut u: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| i64::from(i == j)).collect())
            .collect();
        for _ in 0..6 {
            let (a, b) = (rng.gen_range(0..4), rng.gen_range(0..4));
            if a == b {
                continue;
            }
            let c = rng.gen_range(-2..=2);
            for row in u.iter_mut() {
                row[a] += c * row[b];
            }
        }
        let g = transform(d4.gram(), &u);
        let lat = Lattice::new("D4'", g).unwrap();
        assert_eq!(counts(&lat, 12), want);
    }
}

proptest! {
    #[test]
    fn small_lattices_match_box_scan(
        dim in 1usize..=3,
        entries in proptest::collection::vec(-3i64..=3, 9),
        max_norm in 0usize..30,
    ) {
        let basis: Vec<Vec<i64>> = (0..dim).map(|i| entries[i * 3..i * 3 + dim].to_vec()).collect();
        let g = gram(&basis);
        prop_assume!(det3(&g) != 0);
        let lat = Lattice::new("random", g.clone()).unwrap();
        prop_assert_eq!(counts(&lat, max_norm), box_scan(&g, max_norm));
    }
}
