use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An OEIS identifier: `A` followed by exactly six digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ANumber(String);

impl ANumber {
    pub fn new(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.len() == 7 && bytes[0] == b'A' && bytes[1..].iter().all(u8::is_ascii_digit) {
            Ok(ANumber(s.to_owned()))
        } else {
            Err(Error::InvalidANumber(s.to_owned()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The six digits, as used in b-file names.
    pub fn digits(&self) -> &str {
        &self.0[1..]
    }

    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", self.digits())
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ANumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ANumber::new(s)
    }
}

impl Serialize for ANumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// A contiguous run of sequence terms starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub anumber: ANumber,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl SequenceRecord {
    /// Term at sequence index `index`, if the record covers it.
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let pos = index.checked_sub(self.offset)?;
        usize::try_from(pos).ok().and_then(|p| self.terms.get(p))
    }

    /// Indices covered by the record.
    pub fn indices(&self) -> std::ops::Range<i64> {
        self.offset..self.offset + self.terms.len() as i64
    }

    /// Serializes back to the b-file format.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            out.push_str(&format!("{} {}\n", self.offset + i as i64, t));
        }
        out
    }
}

/// Parses an OEIS b-file: `<index> <value>` per line, `#` comments and blank
/// lines allowed, LF or CRLF endings, indices consecutive and ascending.
pub fn parse_bfile(anumber: ANumber, text: &[u8]) -> Result<SequenceRecord> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let line = text[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        Error::Malformed {
            line,
            message: "invalid UTF-8".into(),
        }
    })?;

    let mut offset = None;
    let mut terms = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Malformed {
                line: line_no,
                message: format!("expected '<index> <value>', got {line:?}"),
            });
        };
        let index: i64 = index.parse().map_err(|_| Error::Malformed {
            line: line_no,
            message: format!("bad index {index:?}"),
        })?;
        let value: BigInt = value.parse().map_err(|_| Error::Malformed {
            line: line_no,
            message: format!("bad value {value:?}"),
        })?;
        match offset {
            None => offset = Some(index),
            Some(start) => {
                let expected = start + terms.len() as i64;
                if index != expected {
                    return Err(Error::NonConsecutive {
                        line: line_no,
                        expected,
                        found: index,
                    });
                }
            }
        }
        terms.push(value);
    }

    match offset {
        Some(offset) => Ok(SequenceRecord {
            anumber,
            offset,
            terms,
        }),
        None => Err(Error::EmptyPayload),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn anum() -> ANumber {
        ANumber::new("A000045").unwrap()
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parses_examples() {
        let r = parse_bfile(anum(), b"0 0\n1 1\n2 1\n3 2\n").unwrap();
        assert_eq!(r.offset, 0);
        assert_eq!(r.terms, bigs(&[0, 1, 1, 2]));

        let r = parse_bfile(anum(), b"# comment\n5 5\n6 8\n").unwrap();
        assert_eq!(r.offset, 5);
        assert_eq!(r.terms, bigs(&[5, 8]));
        assert_eq!(r.get(6), Some(&BigInt::from(8)));
        assert_eq!(r.get(4), None);
        assert_eq!(r.get(7), None);
    }

    #[test]
    fn crlf_blank_lines_and_big_values() {
        let text = b"# A\r\n\r\n-1  1\r\n0\t0\r\n1 123456789012345678901234567890\r\n";
        let r = parse_bfile(anum(), text).unwrap();
        assert_eq!(r.offset, -1);
        assert_eq!(r.terms[2].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_bfile(anum(), b"0 0\n2 1\n"),
            Err(Error::NonConsecutive {
                line: 2,
                expected: 1,
                found: 2
            })
        ));
        assert!(matches!(
            parse_bfile(anum(), b"0 0\n1 x\n"),
            Err(Error::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile(anum(), b"0 0 0\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile(anum(), b"# only comments\n\n"),
            Err(Error::EmptyPayload)
        ));
        assert!(matches!(
            parse_bfile(anum(), b"0 0\n1 \xff\n"),
            Err(Error::Malformed { line: 2, .. })
        ));
    }

    #[test]
    fn anumber_validation() {
        assert!(ANumber::new("A000045").is_ok());
        for bad in ["A00045", "B000045", "A0000450", "a000045", "A00004x", ""] {
            assert!(ANumber::new(bad).is_err(), "{bad}");
        }
        assert_eq!(anum().bfile_name(), "b000045.txt");
    }

    proptest! {
        #[test]
        fn reserialize_is_idempotent(
            offset in -50i64..50,
            values in prop::collection::vec(any::<i128>(), 1..40),
        ) {
            let terms: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
            let rec = SequenceRecord { anumber: anum(), offset, terms };
            let once = parse_bfile(anum(), rec.to_bfile().as_bytes()).unwrap();
            prop_assert_eq!(&once, &rec);
            let twice = parse_bfile(anum(), once.to_bfile().as_bytes()).unwrap();
            prop_assert_eq!(twice, once);
        }
    }
}
