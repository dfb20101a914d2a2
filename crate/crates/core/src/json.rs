//! JSON helpers for arbitrary-precision integers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serializer;
use serde_json::{Number, Value};

/// An integer JSON number carrying every digit of `x`.
pub fn bigint(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integer is a JSON number"))
}

pub(crate) fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&bigint(x), s)
}

pub(crate) fn serialize_bigint_opt<S: Serializer>(
    x: &Option<BigInt>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => serialize_bigint(x, s),
        None => s.serialize_none(),
    }
}
