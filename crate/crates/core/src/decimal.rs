//! Serde helper writing big integers as decimal strings.

use num_bigint::BigInt;
use serde::Serializer;

pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}
