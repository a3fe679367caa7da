use num_bigint::BigInt;

use super::Sequence;
use crate::error::{Error, Result};

/// Outcome of comparing a computed sequence with a reference over the
/// indices both of them cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Agree {
        first_index: i64,
        last_index: i64,
        overlap: usize,
    },
    Mismatch {
        index: i64,
        computed: BigInt,
        reference: BigInt,
    },
}

impl Comparison {
    pub fn is_agreement(&self) -> bool {
        matches!(self, Comparison::Agree { .. })
    }
}

pub fn compare(computed: &Sequence, reference: &Sequence) -> Result<Comparison> {
    let lo = computed.offset.max(reference.offset);
    let hi = computed.last_index().min(reference.last_index());
    if hi < lo {
        return Err(Error::EmptyOverlap);
    }
    for index in lo..=hi {
        let (a, b) = (computed.get(index).unwrap(), reference.get(index).unwrap());
        if a != b {
            return Ok(Comparison::Mismatch {
                index,
                computed: a.clone(),
                reference: b.clone(),
            });
        }
    }
    Ok(Comparison::Agree {
        first_index: lo,
        last_index: hi,
        overlap: (hi - lo + 1) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(offset: i64, v: &[u64]) -> Sequence {
        Sequence::from_u64s(None, offset, v)
    }

    #[test]
    fn identical_prefixes_agree() {
        let a = seq(1, &[1, 2, 4, 6, 3]);
        let b = seq(1, &[1, 2, 4]);
        assert_eq!(
            compare(&a, &b).unwrap(),
            Comparison::Agree {
                first_index: 1,
                last_index: 3,
                overlap: 3
            }
        );
    }

    #[test]
    fn corrupted_term_is_located() {
        let a = seq(1, &[1, 2, 4, 7, 3]);
        let b = seq(1, &[1, 2, 4, 6, 3]);
        assert_eq!(
            compare(&a, &b).unwrap(),
            Comparison::Mismatch {
                index: 4,
                computed: 7.into(),
                reference: 6.into()
            }
        );
    }

    #[test]
    fn offsets_are_aligned() {
        let a = seq(0, &[9, 1, 2, 3]);
        let b = seq(1, &[1, 2, 3, 4]);
        assert!(compare(&a, &b).unwrap().is_agreement());
    }

    #[test]
    fn disjoint_ranges_error() {
        let a = seq(1, &[1, 2]);
        let b = seq(5, &[1, 2]);
        assert!(matches!(compare(&a, &b), Err(Error::EmptyOverlap)));
    }

    proptest! {
        #[test]
        fn mismatch_detection_is_symmetric(
            base in prop::collection::vec(0u64..50, 1..30),
            flip in any::<prop::sample::Index>(),
            delta in 1u64..5,
        ) {
            let mut other = base.clone();
            let i = flip.index(other.len());
            other[i] += delta;
            let (a, b) = (seq(1, &base), seq(1, &other));
            let ab = compare(&a, &b).unwrap();
            let ba = compare(&b, &a).unwrap();
            match (ab, ba) {
                (Comparison::Mismatch { index: i1, .. }, Comparison::Mismatch { index: i2, .. }) => {
                    prop_assert_eq!(i1, i2);
                    prop_assert_eq!(i1, i as i64 + 1);
                }
                other => prop_assert!(false, "expected mismatches, got {:?}", other),
            }
        }
    }
}
