//! Conversions between scalars and JSON numbers that never round.

use std::fmt::Display;
use std::str::FromStr;

use serde_json::{Number, Value};

use crate::error::{Error, Result};

/// Writes an integer as a bare JSON number, however many digits it has.
pub fn int_value<T: Display>(v: &T) -> Value {
    let s = v.to_string();
    Value::Number(Number::from_str(&s).expect("integer display is a valid JSON number"))
}

pub fn int_from_value<T: FromStr>(v: &Value) -> Result<T> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            s.parse::<T>()
                .map_err(|_| Error::Malformed(format!("expected an integer, found {s}")))
        }
        other => Err(Error::Malformed(format!("expected an integer, found {other}"))),
    }
}

pub fn usize_field(obj: &Value, key: &str) -> Result<usize> {
    obj.get(key)
        .ok_or_else(|| Error::Malformed(format!("missing field \"{key}\"")))
        .and_then(int_from_value::<usize>)
}

pub fn array_field<'a>(obj: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    obj.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed(format!("field \"{key}\" must be an array")))
}
