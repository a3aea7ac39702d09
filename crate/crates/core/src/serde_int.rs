//! Arbitrary-precision integers as bare JSON numbers.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

fn to_number(v: &BigInt) -> Result<serde_json::Number, String> {
    v.to_string().parse().map_err(|e: serde_json::Error| e.to_string())
}

fn from_number(n: serde_json::Number) -> Result<BigInt, String> {
    let text = n.to_string();
    text.parse().map_err(|_| format!("expected an integer, found {text}"))
}

/// A `BigInt` that (de)serializes as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JsonInt(#[serde(with = "crate::serde_int")] pub BigInt);

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_number(v).map_err(S::Error::custom)?.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    from_number(serde_json::Number::deserialize(d)?).map_err(D::Error::custom)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let numbers = v.iter().map(to_number).collect::<Result<Vec<_>, _>>().map_err(S::Error::custom)?;
        numbers.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?
            .into_iter()
            .map(from_number)
            .collect::<Result<_, _>>()
            .map_err(D::Error::custom)
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&to_number(v).map_err(S::Error::custom)?),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<serde_json::Number>::deserialize(d)?
            .map(from_number)
            .transpose()
            .map_err(D::Error::custom)
    }
}
