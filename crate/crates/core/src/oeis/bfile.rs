use std::io::{self, Write};

use num_bigint::BigInt;

use super::Sequence;
use crate::error::{Error, Result};

/// Parses OEIS b-file text: `index value` per line, `#` comments and blank
/// lines skipped. The offset is taken from the first data line and indices
/// must then increase by exactly one.
pub fn parse_bfile(text: &str) -> Result<Sequence> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `index value`, got {line:?}"),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad index {idx:?}"),
        })?;
        let val: BigInt = val.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad value {val:?}"),
        })?;
        let start = *offset.get_or_insert(idx);
        let expected = start + terms.len() as i64;
        if idx != expected {
            return Err(Error::Contiguity {
                line: line_no,
                expected,
                found: idx,
            });
        }
        terms.push(val);
    }
    Ok(Sequence::new(None, offset.unwrap_or(1), terms))
}

/// Writes the canonical b-file form: one `index value` line per term, `\n`
/// terminated, no comments.
pub fn write_bfile<W: Write>(seq: &Sequence, out: &mut W) -> io::Result<()> {
    for (n, t) in seq.indexed() {
        writeln!(out, "{n} {t}")?;
    }
    Ok(())
}

pub fn to_bfile_string(seq: &Sequence) -> String {
    let mut buf = Vec::new();
    write_bfile(seq, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("b-file output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_simple() {
        let s = parse_bfile("1 1\n2 2\n3 4").unwrap();
        assert_eq!(s.offset, 1);
        assert_eq!(s.terms, vec![1.into(), 2.into(), 4.into()]);
    }

    #[test]
    fn skips_comments_and_blanks() {
        let s = parse_bfile("# comment\n\n0 5\n  # another\n1 -7\n").unwrap();
        assert_eq!(s.offset, 0);
        assert_eq!(s.terms, vec![5.into(), (-7).into()]);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_bfile("1 1\n2 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_bfile("1 1\n2 2 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_gaps() {
        match parse_bfile("1 1\n2 2\n4 4\n") {
            Err(Error::Contiguity {
                line,
                expected,
                found,
            }) => assert_eq!((line, expected, found), (3, 3, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn huge_values_survive() {
        let big = "1484710602474311520".repeat(5);
        let s = parse_bfile(&format!("7 {big}\n")).unwrap();
        assert_eq!(s.terms[0].to_string(), big);
    }

    proptest! {
        #[test]
        fn canonical_text_roundtrips(offset in -5i64..100, vals in prop::collection::vec(any::<i128>(), 1..40)) {
            let text: String = vals
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{} {}\n", offset + i as i64, v))
                .collect();
            let parsed = parse_bfile(&text).unwrap();
            prop_assert_eq!(to_bfile_string(&parsed), text);
        }
    }
}
