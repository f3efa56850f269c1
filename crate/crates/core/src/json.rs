//! Small helpers for moving arbitrary-precision integers in and out of
//! `serde_json::Value` without losing exactness: values that fit in an `i64`
//! become JSON numbers, anything larger becomes a decimal string.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

pub fn bigint_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Json(format!("non-integer number {n}")))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| Error::Json(format!("bad integer string {s:?}: {e}"))),
        other => Err(Error::Json(format!("expected integer, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_small_and_large() {
        let small = BigInt::from(-42);
        assert_eq!(bigint_from_json(&bigint_to_json(&small)).unwrap(), small);
        let large: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = bigint_to_json(&large);
        assert!(v.is_string());
        assert_eq!(bigint_from_json(&v).unwrap(), large);
    }

    #[test]
    fn rejects_non_integers() {
        assert!(bigint_from_json(&Value::from(1.5)).is_err());
        assert!(bigint_from_json(&Value::from("xyz")).is_err());
        assert!(bigint_from_json(&Value::Null).is_err());
    }
}
