use proptest::prelude::*;
use seqlab::gijswijt::{self, curling_number, CurlingTracker};
use seqlab::oeis::{compare, fixtures};

/// Tries every split `X Y^k` and keeps the largest `k`.
fn oracle_k(s: &[u64]) -> usize {
    let n = s.len();
    let mut best = 1;
    for y in 1..=n {
        for k in 1..=n / y {
            let tail = &s[n - k * y..];
            if tail.chunks(y).all(|c| c == &s[n - y..]) {
                best = best.max(k);
            }
        }
    }
    best
}

fn walk(prefix: &mut Vec<u64>, tracker: &CurlingTracker, max_len: usize, checked: &mut usize) {
    for a in 1..=3 {
        prefix.push(a);
        let mut t = tracker.clone();
        t.push(a);
        let want = oracle_k(prefix);
        let d = curling_number(prefix).unwrap();
        assert_eq!(d.k, want, "{prefix:?}");
        assert_eq!(t.curling(), want, "{prefix:?}");
        assert_eq!(t.decomposition(), Some(d));
        assert_eq!(d.x_len + d.k * d.y_len, prefix.len());
        *checked += 1;
        if prefix.len() < max_len {
            walk(prefix, &t, max_len, checked);
        }
        prefix.pop();
    }
}

#[test]
fn curling_matches_exhaustive_splits() {
    let mut checked = 0;
    walk(&mut Vec::new(), &CurlingTracker::new(), 12, &mut checked);
    assert_eq!(checked, (1..=12).map(|l| 3usize.pow(l)).sum::<usize>());
}

#[test]
fn listing_and_first_occurrences() {
    let s = gijswijt::generate(220, 1).unwrap();
    let listing = [
        1, 1, 2, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1, 1, 2, 2, 2, 3, 2, 1, 1, 2,
    ];
    assert_eq!(&s[..22], &listing);
    let first = |v: u64| s.iter().position(|&x| x == v).map(|p| p + 1);
    assert_eq!(first(2), Some(3));
    assert_eq!(first(3), Some(9));
    assert_eq!(first(4), Some(220));
}

#[test]
fn matches_bundled_bfiles() {
    for (id, floor) in [(gijswijt::OEIS_ID, 1), (gijswijt::SECOND_ORDER_ID, 2)] {
        let reference = fixtures::load(id).unwrap();
        let computed = gijswijt::sequence(reference.len(), floor).unwrap();
        assert!(
            compare(&computed, &reference).unwrap().is_agreement(),
            "{id}"
        );
    }
}

#[test]
fn glue_strings_build_the_next_order() {
    // glue grows logarithmically: 170 terms need a 1.8M-term order-1 prefix,
    // 26 terms a 0.8M-term order-2 prefix
    for (m, n) in [(1, 170), (2, 26)] {
        let glued = gijswijt::glue_concatenation(m, n).unwrap();
        assert_eq!(glued, gijswijt::generate(n, m + 1).unwrap(), "order {m}");
    }
    let second = fixtures::load(gijswijt::SECOND_ORDER_ID).unwrap();
    let glued = gijswijt::glue_concatenation(1, 100).unwrap();
    assert_eq!(second.truncated(100).to_u64_vec().unwrap(), glued);
}

#[test]
fn structural_glue_matches_generated_blocks() {
    for floor in [1, 2] {
        let levels = gijswijt::block_decomposition(8, floor).unwrap();
        let glue: Vec<u64> = levels.iter().flat_map(|b| b.glue.clone()).collect();
        assert_eq!(
            gijswijt::glue_concatenation(floor, glue.len()).unwrap(),
            glue
        );
    }
}

#[test]
fn glue_prefix_cap() {
    assert!(matches!(
        gijswijt::glue_concatenation_capped(2, 200, 100_000),
        Err(seqlab::Error::ResourceLimit { .. })
    ));
}

#[test]
fn block_recursion() {
    let levels = gijswijt::block_decomposition(9, 1).unwrap();
    for w in levels.windows(2) {
        let (b, next) = (&w[0], &w[1]);
        let mut doubled = b.block.repeat(2);
        doubled.extend_from_slice(&b.glue);
        assert_eq!(next.block, doubled, "level {}", b.level);
        assert!(b.glue.iter().all(|&v| v >= 2));
    }
    assert_eq!(levels.len(), 9);
}

proptest! {
    #[test]
    fn tracker_agrees_with_direct_computation(s in proptest::collection::vec(1u64..5, 1..60)) {
        let t = CurlingTracker::from_slice(&s);
        prop_assert_eq!(t.decomposition(), curling_number(&s));
    }

    #[test]
    fn curling_witness_is_valid(s in proptest::collection::vec(1u64..4, 1..40)) {
        let d = curling_number(&s).unwrap();
        let y = &s[s.len() - d.y_len..];
        for c in s[d.x_len..].chunks(d.y_len) {
            prop_assert_eq!(c, y);
        }
    }
}
