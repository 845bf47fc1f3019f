//! JSON forms of the exact types.
//!
//! Rationals are strings (`"p/q"`, or `"p"` for integers); a `GScalar` is an
//! array of rationals indexed by g-power (zero renders as `["0"]`); an `XPoly`
//! is an array of `GScalar` arrays indexed by x-power; a `MomentValue` is an
//! object with keys `one`, `sqrt_pi`, `gamma_g_half`.

use std::str::FromStr;

use serde_json::{json, Value};

use super::{GScalar, MomentValue, Rational, XPoly};
use crate::error::{Error, Result};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for GScalar {
    fn to_json(&self) -> Value {
        if self.is_zero() {
            return json!(["0"]);
        }
        Value::Array(self.coeffs().iter().map(ToJson::to_json).collect())
    }
}

impl ToJson for XPoly {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(ToJson::to_json).collect())
    }
}

impl ToJson for MomentValue {
    fn to_json(&self) -> Value {
        json!({
            "one": self.one.to_json(),
            "sqrt_pi": self.sqrt_pi.to_json(),
            "gamma_g_half": self.gamma_g_half.to_json(),
        })
    }
}

impl<T: ToJson> ToJson for [T] {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(ToJson::to_json).collect())
    }
}

impl<T: ToJson> ToJson for Vec<T> {
    fn to_json(&self) -> Value {
        self.as_slice().to_json()
    }
}

fn malformed(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(malformed("rational", v)),
    }
}

pub fn gscalar_from_json(v: &Value) -> Result<GScalar> {
    let items = v.as_array().ok_or_else(|| malformed("GScalar array", v))?;
    Ok(GScalar::new(
        items
            .iter()
            .map(rational_from_json)
            .collect::<Result<_>>()?,
    ))
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly> {
    let items = v.as_array().ok_or_else(|| malformed("XPoly array", v))?;
    Ok(XPoly::new(
        items.iter().map(gscalar_from_json).collect::<Result<_>>()?,
    ))
}

pub fn moment_from_json(v: &Value) -> Result<MomentValue> {
    let obj = v
        .as_object()
        .ok_or_else(|| malformed("MomentValue object", v))?;
    if let Some(k) = obj
        .keys()
        .find(|k| !matches!(k.as_str(), "one" | "sqrt_pi" | "gamma_g_half"))
    {
        return Err(Error::Parse(format!("unknown MomentValue key {k:?}")));
    }
    let field = |k: &str| {
        obj.get(k)
            .map(gscalar_from_json)
            .unwrap_or_else(|| Ok(GScalar::zero()))
    };
    Ok(MomentValue {
        one: field("one")?,
        sqrt_pi: field("sqrt_pi")?,
        gamma_g_half: field("gamma_g_half")?,
    })
}

/// Row-major matrix of moment values.
pub fn moment_matrix_from_json(v: &Value) -> Result<Vec<Vec<MomentValue>>> {
    let rows = v.as_array().ok_or_else(|| malformed("matrix", v))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| malformed("matrix row", r))?
                .iter()
                .map(moment_from_json)
                .collect()
        })
        .collect()
}
