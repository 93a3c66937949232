//! Serde adapter for exact rationals.
//!
//! Accepted inputs: `{"num": int, "den": int}`, strings such as `"3/8"`,
//! `"0.375"` or `"1e-3"`, and JSON numbers. Non-integer JSON numbers are read
//! through their shortest decimal representation, so `0.1` means `1/10`.
//! Output is always `{"num": int, "den": int}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserializer, Serializer};

use crate::scalar::{parse_rational, Rational};

pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    let mut st = serializer.serialize_struct("Rational", 2)?;
    match (value.numer().to_i64(), value.denom().to_i64()) {
        (Some(n), Some(d)) => {
            st.serialize_field("num", &n)?;
            st.serialize_field("den", &d)?;
        }
        _ => {
            st.serialize_field("num", &value.numer().to_string())?;
            st.serialize_field("den", &value.denom().to_string())?;
        }
    }
    st.end()
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
    deserializer.deserialize_any(RationalVisitor)
}

struct RationalVisitor;

fn big_from_json<E: de::Error>(v: serde_json::Value) -> Result<BigInt, E> {
    match v {
        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n
            .to_string()
            .parse()
            .map_err(|_| E::custom(format!("bad integer {n}"))),
        serde_json::Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| E::custom(format!("bad integer {s:?}"))),
        other => Err(E::custom(format!("expected an integer, found {other}"))),
    }
}

impl<'de> Visitor<'de> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            "a rational as {\"num\": int, \"den\": int}, a string like \"3/8\" or \"0.375\", or a number",
        )
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(Rational::from_integer(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        Ok(Rational::from_integer(v.into()))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rational, E> {
        if !v.is_finite() {
            return Err(E::custom("non-finite number"));
        }
        parse_rational(&format!("{v:e}")).map_err(E::custom)
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        parse_rational(v).map_err(E::custom)
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Rational, A::Error> {
        let mut num = None;
        let mut den = None;
        while let Some(key) = map.next_key::<String>()? {
            let value: serde_json::Value = map.next_value()?;
            match key.as_str() {
                "num" => num = Some(big_from_json::<A::Error>(value)?),
                "den" => den = Some(big_from_json::<A::Error>(value)?),
                other => return Err(de::Error::unknown_field(other, &["num", "den"])),
            }
        }
        let num = num.ok_or_else(|| de::Error::missing_field("num"))?;
        let den = den.ok_or_else(|| de::Error::missing_field("den"))?;
        if den.is_zero() {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}
