//! JSON encodings shared by the CLI and the property reports.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypercomplex::Coefficient;
use crate::numeric::Field;
use crate::polyadization::{DenseMatrix, ZMatrix};
use crate::vectoralg::PolyVector;

pub fn zmatrix_to_json<A: Coefficient>(z: &ZMatrix<A>) -> Value {
    json!({
        "arity": z.arity(),
        "algebra": z.algebra_name(),
        "entries": z.entries().iter().map(Coefficient::to_json).collect::<Vec<_>>(),
    })
}

/// Accepts `{"arity", "algebra", "entries"}` or a bare entry array.
pub fn zmatrix_from_json<A: Coefficient>(v: &Value, kind: A::Kind) -> Result<ZMatrix<A>> {
    let (entries, arity) = match v {
        Value::Array(items) => (items, None),
        Value::Object(map) => {
            let entries = map
                .get("entries")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("matrix needs an \"entries\" array".into()))?;
            if let Some(alg) = map.get("algebra").and_then(Value::as_str) {
                let expected = A::name_of(kind);
                if alg != expected {
                    return Err(Error::Malformed(format!("algebra {alg:?} given where {expected:?} expected")));
                }
            }
            (entries, map.get("arity").and_then(Value::as_u64).map(|n| n as usize))
        }
        other => return Err(Error::Malformed(format!("expected a matrix, got {other}"))),
    };
    if let Some(n) = arity {
        if n != entries.len() + 1 {
            return Err(Error::Malformed(format!("arity {n} needs {} entries, got {}", n - 1, entries.len())));
        }
    }
    let entries = entries.iter().map(|e| A::from_json(kind, e)).collect::<Result<Vec<_>>>()?;
    if entries.len() < 2 {
        return Err(Error::Malformed(format!("a matrix needs at least 2 entries, got {}", entries.len())));
    }
    ZMatrix::new(entries)
}

pub fn dense_to_json<A: Coefficient>(d: &DenseMatrix<A>) -> Value {
    Value::Array(d.rows().map(|r| Value::Array(r.iter().map(Coefficient::to_json).collect())).collect())
}

pub fn vector_to_json<S: Field>(v: &PolyVector<S>) -> Value {
    json!({ "coords": v.coords().iter().map(Field::to_json).collect::<Vec<_>>() })
}

/// Accepts `{"dim", "coords"}` or a bare coordinate array.
pub fn vector_from_json<S: Field>(v: &Value) -> Result<PolyVector<S>> {
    let (coords, dim) = match v {
        Value::Array(items) => (items, None),
        Value::Object(map) => (
            map.get("coords")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("vector needs a \"coords\" array".into()))?,
            map.get("dim").and_then(Value::as_u64).map(|m| m as usize),
        ),
        other => return Err(Error::Malformed(format!("expected a vector, got {other}"))),
    };
    if let Some(m) = dim {
        if m != coords.len() {
            return Err(Error::Malformed(format!("dim {m} but {} coordinates", coords.len())));
        }
    }
    let coords = coords.iter().map(S::from_json).collect::<Result<Vec<_>>>()?;
    PolyVector::new(coords).map_err(|e| Error::Malformed(e.to_string()))
}

pub fn scalars_to_json<S: Field>(xs: &[S]) -> Value {
    Value::Array(xs.iter().map(Field::to_json).collect())
}
