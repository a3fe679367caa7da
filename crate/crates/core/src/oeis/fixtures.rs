//! Reference data compiled into the library so every check runs offline.
//! Regenerate with `scripts/gen_fixtures.py`.

use super::{parse_bfile, OeisId, Sequence};
use crate::error::{Error, Result};

const BFILES: &[(&str, &str)] = &[
    ("A001116", include_str!("../../fixtures/A001116.txt")),
    ("A001462", include_str!("../../fixtures/A001462.txt")),
    ("A004046", include_str!("../../fixtures/A004046.txt")),
    ("A008408", include_str!("../../fixtures/A008408.txt")),
    ("A064413", include_str!("../../fixtures/A064413.txt")),
    ("A072340", include_str!("../../fixtures/A072340.txt")),
    ("A079000", include_str!("../../fixtures/A079000.txt")),
    ("A085276", include_str!("../../fixtures/A085276.txt")),
    ("A090822", include_str!("../../fixtures/A090822.txt")),
    ("A091787", include_str!("../../fixtures/A091787.txt")),
    ("A108092", include_str!("../../fixtures/A108092.txt")),
    ("A110312", include_str!("../../fixtures/A110312.txt")),
    ("A117596", include_str!("../../fixtures/A117596.txt")),
];

/// Coefficient-per-line theta series indexed by norm.
const THETA: &[(&str, &str)] = &[
    ("leech", include_str!("../../fixtures/leech.coeffs")),
    ("nebe24", include_str!("../../fixtures/nebe24.coeffs")),
];

pub fn available() -> impl Iterator<Item = OeisId> {
    BFILES
        .iter()
        .map(|(id, _)| id.parse().expect("fixture ids are well formed"))
}

pub fn bfile_text(id: OeisId) -> Option<&'static str> {
    let key = id.to_string();
    BFILES.iter().find(|(k, _)| *k == key).map(|(_, t)| *t)
}

/// Loads a bundled b-file fixture.
pub fn load(id: OeisId) -> Result<Sequence> {
    let text = bfile_text(id).ok_or_else(|| Error::MissingFixture(id.to_string()))?;
    let mut seq = parse_bfile(text)?;
    seq.id = Some(id);
    Ok(seq)
}

pub fn theta_text(name: &str) -> Result<&'static str> {
    let key = name.to_ascii_lowercase();
    THETA
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::MissingFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for id in available() {
            let s = load(id).unwrap();
            assert!(!s.is_empty(), "{id}");
            assert_eq!(s.id, Some(id));
        }
    }

    #[test]
    fn ekg_fixture_starts_with_listing() {
        let s = load("A064413".parse().unwrap()).unwrap();
        let want = [
            1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15, 18, 14, 7, 21, 24, 16, 20,
        ];
        assert_eq!(s.offset, 1);
        assert_eq!(&s.to_u64_vec().unwrap()[..18], &want);
        assert_eq!(s.len(), 10_000);
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(
            load("A000045".parse().unwrap()),
            Err(Error::MissingFixture(_))
        ));
        assert!(theta_text("nope").is_err());
    }
}
