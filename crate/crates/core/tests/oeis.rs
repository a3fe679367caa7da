use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use seqlab::oeis::{
    compare, fixtures, parse_bfile, to_bfile_string, BfileStore, Comparison, OeisId, Transport,
};
use seqlab::{ekg, gijswijt, Error, Result};

/// Serves bundled b-files and counts requests.
struct Replay(Arc<AtomicUsize>);

impl Transport for Replay {
    fn get(&self, id: OeisId) -> Result<String> {
        self.0.fetch_add(1, Ordering::SeqCst);
        fixtures::bfile_text(id)
            .map(str::to_string)
            .ok_or_else(|| Error::NotFound(id.to_string()))
    }
}

#[test]
fn fixture_listing() {
    let s = parse_bfile(fixtures::bfile_text(ekg::OEIS_ID).unwrap()).unwrap();
    let want = ekg::generate(18).unwrap();
    assert_eq!(&s.to_u64_vec().unwrap()[..18], &want[..]);
}

#[test]
fn every_fixture_round_trips() {
    for id in fixtures::available() {
        let s = fixtures::load(id).unwrap();
        let again = parse_bfile(&to_bfile_string(&s)).unwrap();
        assert_eq!(again.terms, s.terms, "{id}");
        assert_eq!(again.offset, s.offset, "{id}");
    }
}

#[test]
fn cached_store_reaches_the_network_once() {
    let dir = tempfile::tempdir().unwrap();
    let calls = Arc::new(AtomicUsize::new(0));
    let store = BfileStore::with_transport(dir.path(), true, Box::new(Replay(calls.clone())));
    let a = store.fetch(gijswijt::OEIS_ID).unwrap();
    let b = store.fetch(gijswijt::OEIS_ID).unwrap();
    assert_eq!(a.terms, b.terms);
    assert_eq!(calls.load(Ordering::SeqCst), 1);
    assert!(dir.path().join("b090822.txt").exists());
    assert!(matches!(
        store.fetch(OeisId::from_number(45)),
        Err(Error::NotFound(_))
    ));
}

#[test]
fn concurrent_fetches_share_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let calls = Arc::new(AtomicUsize::new(0));
    let store = BfileStore::with_transport(dir.path(), true, Box::new(Replay(calls)));
    std::thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| {
                let seq = store.fetch(ekg::OEIS_ID).unwrap();
                assert_eq!(seq.len(), 10_000);
            });
        }
    });
    let cached = std::fs::read_to_string(dir.path().join("b064413.txt")).unwrap();
    assert_eq!(parse_bfile(&cached).unwrap().len(), 10_000);
}

#[test]
fn offline_store_uses_fixtures_only() {
    let dir = tempfile::tempdir().unwrap();
    let store = BfileStore::new(dir.path(), false);
    assert_eq!(store.fetch(ekg::OEIS_ID).unwrap().len(), 10_000);
    assert!(matches!(
        store.fetch(OeisId::from_number(45)),
        Err(Error::MissingFixture(_))
    ));
}

#[test]
fn corrupted_term_is_located() {
    let reference = fixtures::load(ekg::OEIS_ID).unwrap();
    let mut computed = ekg::sequence(2000).unwrap();
    computed.terms[1233] += 1;
    match compare(&computed, &reference).unwrap() {
        Comparison::Mismatch {
            index,
            computed: c,
            reference: r,
        } => {
            assert_eq!(index, 1234);
            assert_eq!(c, &r + BigInt::from(1));
        }
        other => panic!("{other:?}"),
    }
}

/// Live cross-check against the OEIS host; runs only with SEQLAB_ONLINE_TESTS=1.
#[test]
fn online_gijswijt() {
    if std::env::var("SEQLAB_ONLINE_TESTS").as_deref() != Ok("1") {
        eprintln!("skipped: set SEQLAB_ONLINE_TESTS=1 to fetch from the OEIS host");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let reference = BfileStore::new(dir.path(), true)
        .fetch(gijswijt::OEIS_ID)
        .unwrap();
    let computed = gijswijt::sequence(reference.len().min(5000), 1).unwrap();
    assert!(compare(&computed, &reference).unwrap().is_agreement());
}
