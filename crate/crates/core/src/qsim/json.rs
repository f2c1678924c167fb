//! Circuit files:
//! `{"n", "K", "T", "field": "float"|"qsqrt2", "unitaries": [...], "measurement": {"type", "E1"}}`.

use num_complex::Complex64;
use serde_json::{json, Value};

use super::{Circuit, Measurement, MeasurementKind};
use crate::error::{Error, Result};
use crate::field::{FieldKind, QComplex, Scalar};
use crate::matrix::Matrix;

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|u| u as usize)
        .ok_or_else(|| Error::Json(format!("missing or invalid {key:?}")))
}

impl<S: Scalar> Circuit<S> {
    pub fn to_json(&self) -> Result<Value> {
        let unitaries = self
            .unitaries
            .iter()
            .map(Matrix::to_json)
            .collect::<Result<Vec<_>>>()?;
        let kind = match self.measurement.kind {
            MeasurementKind::Projective => "projective",
            MeasurementKind::Povm => "povm",
        };
        Ok(json!({
            "n": self.n(),
            "K": self.k(),
            "T": self.queries(),
            "field": S::KIND.tag(),
            "unitaries": unitaries,
            "measurement": { "type": kind, "E1": self.measurement.e1.to_json()? },
        }))
    }

    /// Parses and validates a circuit whose `field` tag must match `S`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let field = v.get("field").and_then(Value::as_str).unwrap_or("");
        if field != S::KIND.tag() {
            return Err(Error::Json(format!(
                "expected field {:?}, got {field:?}",
                S::KIND.tag()
            )));
        }
        let n = usize_field(v, "n")?;
        let k = usize_field(v, "K")?;
        let t = usize_field(v, "T")?;
        let unitaries = v
            .get("unitaries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing \"unitaries\"".into()))?
            .iter()
            .map(Matrix::from_json)
            .collect::<Result<Vec<_>>>()?;
        if unitaries.len() != t + 1 {
            return Err(Error::Json(format!(
                "T = {t} requires {} unitaries, found {}",
                t + 1,
                unitaries.len()
            )));
        }
        let m = v
            .get("measurement")
            .ok_or_else(|| Error::Json("missing \"measurement\"".into()))?;
        let kind = match m.get("type").and_then(Value::as_str) {
            Some("projective") => MeasurementKind::Projective,
            Some("povm") => MeasurementKind::Povm,
            other => return Err(Error::Json(format!("unknown measurement type {other:?}"))),
        };
        let e1 = Matrix::from_json(
            m.get("E1")
                .ok_or_else(|| Error::Json("missing measurement \"E1\"".into()))?,
        )?;
        Circuit::new(n, k, unitaries, Measurement { kind, e1 })
    }
}

/// A circuit over either number field, as read from a file.
#[derive(Clone, Debug)]
pub enum AnyCircuit {
    Float(Circuit<Complex64>),
    Exact(Circuit<QComplex>),
}

impl AnyCircuit {
    pub fn from_json(v: &Value) -> Result<Self> {
        match v.get("field").and_then(Value::as_str) {
            Some("float") => Ok(AnyCircuit::Float(Circuit::from_json(v)?)),
            Some("qsqrt2") => Ok(AnyCircuit::Exact(Circuit::from_json(v)?)),
            other => Err(Error::Json(format!("unknown field {other:?}"))),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> Result<Value> {
        match self {
            AnyCircuit::Float(c) => c.to_json(),
            AnyCircuit::Exact(c) => c.to_json(),
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            AnyCircuit::Float(_) => FieldKind::Float,
            AnyCircuit::Exact(_) => FieldKind::QSqrt2,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyCircuit::Float(c) => c.n(),
            AnyCircuit::Exact(c) => c.n(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::random::random_circuit;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn float_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = random_circuit(2, 1, 1, &mut rng);
        let v = c.to_json().unwrap();
        let back = Circuit::<Complex64>::from_json(&v).unwrap();
        assert_eq!(back, c);
        assert!(matches!(
            AnyCircuit::from_json(&v).unwrap(),
            AnyCircuit::Float(_)
        ));
    }

    #[test]
    fn rejects_wrong_field_and_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let c = random_circuit(1, 1, 1, &mut rng);
        let mut v = c.to_json().unwrap();
        assert!(Circuit::<QComplex>::from_json(&v).is_err());
        v["T"] = json!(2);
        assert!(AnyCircuit::from_json(&v).is_err());
        v["T"] = json!(1);
        v["field"] = json!("reals");
        assert!(AnyCircuit::from_json(&v).is_err());
    }

    #[test]
    fn rejects_non_unitary_file() {
        let v = json!({
            "n": 1, "K": 1, "T": 0, "field": "float",
            "unitaries": [[[[1.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]],
            "measurement": {"type": "projective", "E1": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}
        });
        assert_eq!(AnyCircuit::from_json(&v).unwrap_err(), Error::NotUnitary(0));
    }
}
