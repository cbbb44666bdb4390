//! JSON interchange: divisor files and rational coordinates.
//!
//! A divisor file is `{ "datum": "SL:3", "chars": { "<cone-id>": [1, 0, -1], ... } }`
//! with one entry per maximal cone, keyed by the ids emitted by
//! `fan-dump`. Coordinates are JSON integers when integral and exact
//! "p/q" strings otherwise; floats are never used.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::divisor::OrthogonalSet;
use crate::error::Error;
use crate::fan::Variety;
use crate::linalg::Rat;
use crate::root_system::{parse_datum, Character};

pub fn rat_to_json(r: &Rat) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn rat_from_json(v: &Value) -> Result<Rat, Error> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Rat::from_integer)
            .ok_or_else(|| Error::DivisorFile(format!("non-integer number {n}"))),
        Value::String(s) => {
            let (p, q) = s
                .split_once('/')
                .ok_or_else(|| Error::DivisorFile(format!("bad rational `{s}`")))?;
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::DivisorFile(format!("bad rational `{s}`")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| Error::DivisorFile(format!("bad rational `{s}`")))?;
            if q == 0 {
                return Err(Error::DivisorFile(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(p, q))
        }
        other => Err(Error::DivisorFile(format!(
            "expected a coordinate, got {other}"
        ))),
    }
}

pub fn coords_to_json(c: &Character) -> Value {
    Value::Array(c.coords().iter().map(rat_to_json).collect())
}

/// Serialize an orthogonal set in the divisor-file schema, cones in fan
/// order.
pub fn divisor_to_json(os: &OrthogonalSet) -> Value {
    let mut chars = Map::new();
    for (cone, ch) in os.variety().fan.cones.iter().zip(os.chars()) {
        chars.insert(cone.id.to_string(), coords_to_json(ch));
    }
    json!({
        "datum": os.variety().name(),
        "chars": Value::Object(chars),
    })
}

/// Parse a divisor file. Reports unknown or missing cone ids by name.
pub fn divisor_from_json(value: &Value) -> Result<OrthogonalSet, Error> {
    let datum = value
        .get("datum")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::DivisorFile("missing \"datum\" field".into()))?;
    let (kind, n) = parse_datum(datum)?;
    let variety = Arc::new(Variety::new(kind, n)?);
    let chars_obj = value
        .get("chars")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::DivisorFile("missing \"chars\" object".into()))?;

    let mut chars: Vec<Option<Character>> = vec![None; variety.fan.cones.len()];
    for (key, coords) in chars_obj {
        let idx = variety
            .fan
            .cones
            .iter()
            .position(|c| c.id.to_string() == *key)
            .ok_or_else(|| Error::UnknownConeId(key.clone()))?;
        let arr = coords
            .as_array()
            .ok_or_else(|| Error::DivisorFile(format!("cone {key}: expected an array")))?;
        if arr.len() != variety.datum.n() {
            return Err(Error::DivisorFile(format!(
                "cone {key}: expected {} coordinates, got {}",
                variety.datum.n(),
                arr.len()
            )));
        }
        let coords = arr
            .iter()
            .map(rat_from_json)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::DivisorFile(format!("cone {key}: {e}")))?;
        chars[idx] = Some(Character::new(kind, coords));
    }
    let mut out = Vec::with_capacity(chars.len());
    for (i, c) in chars.into_iter().enumerate() {
        match c {
            Some(c) => out.push(c),
            None => {
                return Err(Error::DivisorFile(format!(
                    "missing character for cone {}",
                    variety.fan.cones[i].id
                )))
            }
        }
    }
    OrthogonalSet::from_chars(variety, out)
}
