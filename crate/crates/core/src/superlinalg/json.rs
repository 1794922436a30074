use serde_json::{json, Value};

use super::index::{digits, from_digits, IndexSet};
use super::operator::GradedOperator;
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

pub const SCHEMA: &str = "qwalled/v1";

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl GradedOperator<Scalar> {
    /// `{"schema","n","factors","entries":[[row labels, col labels, "scalar"], …]}`
    pub fn to_json(&self) -> Result<Value> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "only square operators serialize".into(),
            ));
        }
        let idx = IndexSet::new(self.n());
        let base = 2 * self.n();
        let m = self.out_factors();
        let labels = |k: usize| -> Vec<i64> {
            digits(k, base, m)
                .into_iter()
                .map(|p| idx.label(p))
                .collect()
        };
        let entries: Vec<Value> = self
            .iter()
            .map(|(i, j, v)| json!([labels(i), labels(j), v.to_string()]))
            .collect();
        Ok(json!({"schema": SCHEMA, "n": self.n(), "factors": m, "entries": entries}))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(s) = v.get("schema") {
            if s != SCHEMA {
                return Err(bad(format!("unsupported schema {s}")));
            }
        }
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing n"))? as usize;
        let m = v
            .get("factors")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing factors"))? as usize;
        if n == 0 {
            return Err(bad("n must be positive"));
        }
        let idx = IndexSet::new(n);
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing entries"))?;
        let tuple = |t: &Value| -> Result<usize> {
            let arr = t
                .as_array()
                .ok_or_else(|| bad("index tuple must be an array"))?;
            if arr.len() != m {
                return Err(bad("index tuple length differs from factors"));
            }
            let pos = arr
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| bad("index must be an integer"))
                        .and_then(|l| idx.pos(l))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(from_digits(&pos, 2 * n))
        };
        let mut trip = Vec::with_capacity(entries.len());
        for e in entries {
            let a = e
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| bad("entry must be [row, col, scalar]"))?;
            let s = a[2]
                .as_str()
                .ok_or_else(|| bad("scalar must be a string"))?;
            trip.push((tuple(&a[0])?, tuple(&a[1])?, parse_scalar(s)?));
        }
        Ok(Self::from_triplets(n, m, m, trip))
    }
}
