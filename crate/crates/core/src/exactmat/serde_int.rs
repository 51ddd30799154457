//! JSON encoding for [`ExactInt`]: a plain number when it fits in `i64`,
//! otherwise a decimal string. Decoding accepts either form.

use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

use super::ExactInt;

pub fn serialize<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(i) => s.serialize_i64(i),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactInt, D::Error> {
    d.deserialize_any(IntVisitor)
}

pub fn to_json(v: &ExactInt) -> serde_json::Value {
    match v.to_i64() {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(v.to_string()),
    }
}

pub fn from_json(v: &serde_json::Value) -> Option<ExactInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(ExactInt::from)
            .or_else(|| n.as_u64().map(ExactInt::from)),
        serde_json::Value::String(s) => ExactInt::from_str(s.trim()).ok(),
        _ => None,
    }
}

struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = ExactInt;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactInt, E> {
        ExactInt::from_str(v.trim()).map_err(E::custom)
    }
}

pub mod option {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::ExactInt;

    pub fn serialize<S: Serializer>(v: &Option<ExactInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<ExactInt>, D::Error> {
        let v = Option::<serde_json::Value>::deserialize(d)?;
        match v {
            None | Some(serde_json::Value::Null) => Ok(None),
            Some(v) => super::from_json(&v)
                .map(Some)
                .ok_or_else(|| serde::de::Error::custom("expected an integer")),
        }
    }
}
