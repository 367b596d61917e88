//! JSON encoding of big integers.
//!
//! Values with `|x| < 2^53` are written as plain JSON numbers, larger ones as
//! decimal strings. Readers accept either form for any value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserializer, Serializer};

/// Prefix used on integer literal failures so that the parser can report them
/// as syntax errors rather than schema violations.
pub(crate) const BAD_LITERAL: &str = "invalid integer literal";

const SAFE_BITS: u64 = 53;

fn fits_number(x: &BigInt) -> bool {
    x.magnitude().bits() <= SAFE_BITS
}

pub(crate) fn write_int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if fits_number(x) {
        s.serialize_i64(x.to_i64().expect("bounded by 2^53"))
    } else {
        s.serialize_str(&x.to_string())
    }
}

struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<BigInt, E> {
        Err(E::custom(format!("{BAD_LITERAL}: {v} is not an integer")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        let t = v.trim();
        let digits = t
            .strip_prefix('-')
            .or_else(|| t.strip_prefix('+'))
            .unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(E::custom(format!("{BAD_LITERAL}: {v:?}")));
        }
        t.parse()
            .map_err(|_| E::custom(format!("{BAD_LITERAL}: {v:?}")))
    }
}

pub(crate) struct IntSeed;

impl<'de> de::DeserializeSeed<'de> for IntSeed {
    type Value = BigInt;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

pub mod one {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        write_int(x, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

pub mod vec {
    use super::*;

    struct Item<'a>(&'a BigInt);

    impl serde::Serialize for Item<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            write_int(self.0, s)
        }
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&Item(x))?;
        }
        seq.end()
    }

    struct VecVisitor;

    impl<'de> Visitor<'de> for VecVisitor {
        type Value = Vec<BigInt>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a list of integers")
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<BigInt>, A::Error> {
            let mut out = Vec::with_capacity(seq.size_hint().unwrap_or(0));
            while let Some(x) = seq.next_element_seed(IntSeed)? {
                out.push(x);
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        d.deserialize_seq(VecVisitor)
    }
}

pub mod vec_vec {
    use super::*;

    #[derive(serde::Serialize, serde::Deserialize)]
    #[serde(transparent)]
    struct Row(#[serde(with = "super::vec")] Vec<BigInt>);

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&Row(r.clone()))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let rows: Vec<Row> = serde::Deserialize::deserialize(d)?;
        Ok(rows.into_iter().map(|r| r.0).collect())
    }
}
