//! `{"kind", "d", "s", "entries"}` certificate files. Each entry is the
//! string `"zero"` or a `d x d` array of `{"num", "den"}` objects; numerators
//! and denominators are JSON integers, or decimal strings when they do not
//! fit in 64 bits.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{CertKind, Certificate, RatMat, Rational};
use crate::error::{Error, Result};

fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("expected integer, found {other}"))),
    }
}

fn entry_to_json(m: &RatMat) -> Value {
    if m.is_zero() {
        return json!("zero");
    }
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| json!({"num": int_to_json(x.numer()), "den": int_to_json(x.denom())}))
                .collect()
        })
        .collect();
    Value::Array(rows)
}

fn entry_from_json(v: &Value, d: usize) -> Result<RatMat> {
    if v.as_str() == Some("zero") {
        return Ok(RatMat::zeros(d, d));
    }
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("entry must be \"zero\" or a matrix".into()))?;
    if rows.len() != d {
        return Err(Error::Parse(format!("matrix has {} rows, expected {d}", rows.len())));
    }
    let mut out = Vec::with_capacity(d);
    for row in rows {
        let cells = row.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        if cells.len() != d {
            return Err(Error::Parse(format!("matrix row has {} entries, expected {d}", cells.len())));
        }
        let mut r = Vec::with_capacity(d);
        for c in cells {
            let num = int_from_json(c.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
            let den = match c.get("den") {
                Some(x) => int_from_json(x)?,
                None => BigInt::from(1),
            };
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            r.push(Rational::new(num, den));
        }
        out.push(r);
    }
    Ok(RatMat::from_rows(out))
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let entries: Vec<Value> = self
            .grid
            .iter()
            .map(|row| Value::Array(row.iter().map(entry_to_json).collect()))
            .collect();
        json!({
            "kind": self.kind,
            "d": self.d,
            "s": self.s(),
            "entries": entries,
        })
        .to_string()
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let kind: CertKind = serde_json::from_value(v.get("kind").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("kind: {e}")))?;
        let field = |k: &str| {
            v.get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("missing or invalid {k:?}")))
        };
        let d = field("d")?;
        let s = field("s")?;
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"entries\"".into()))?;
        let mut grid = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Parse(format!("row {i} must be an array")))?;
            if cells.len() != s {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {s}", cells.len())));
            }
            grid.push(cells.iter().map(|c| entry_from_json(c, d)).collect::<Result<Vec<_>>>()?);
        }
        Certificate::new(kind, d, grid)
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use crate::embed::{gp_table_partition, piovesan_vectors};

    #[test]
    fn round_trip() {
        let c = certificate_from_clique_partition(&piovesan_vectors(), &gp_table_partition()).unwrap();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn small_file() {
        let c = classical_certificate(&Graph::complete(2), &[1]).unwrap();
        assert_eq!(
            c.to_json(),
            r#"{"d":1,"entries":[["zero"],[[[{"den":1,"num":1}]]]],"kind":"coclique","s":1}"#
        );
    }

    #[test]
    fn malformed() {
        assert!(Certificate::from_json("{").is_err());
        assert!(Certificate::from_json(r#"{"kind":"other","d":1,"s":0,"entries":[]}"#).is_err());
        assert!(Certificate::from_json(r#"{"kind":"coclique","d":1,"s":1,"entries":[["zero","zero"]]}"#).is_err());
        assert!(
            Certificate::from_json(r#"{"kind":"coclique","d":1,"s":1,"entries":[[[[{"num":1,"den":0}]]]]}"#)
                .is_err()
        );
        let big = r#"{"kind":"coclique","d":1,"s":1,"entries":[[[[{"num":"100000000000000000000","den":"100000000000000000000"}]]]]}"#;
        assert!(Certificate::from_json(big).unwrap().entry(0, 0).is_identity());
    }
}
