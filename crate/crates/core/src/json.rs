//! JSON encodings shared by the command line and the browser demo.
//!
//! * `QLaurent`: `[[exp, "num/den"], ...]`, ascending exponents, nonzero terms.
//! * `Partition`: `[3, 2]`.
//! * `SymFunc`: `{"basis": "schur", "degree": n, "terms": [{"mu": [...], "coeff": ...}]}`,
//!   terms in descending lexicographic order of `mu`.
//! * `BiSymFunc`: as above with `"ydegree"`, `"xdegree"` and terms keyed by `"ynu"`, `"xmu"`.
//! * `OrderedSetPartition`: `[[2, 7], [1, 3, 5], [4, 6]]`.
//! * `QRatFunc`: `{"num": ..., "den": ...}`.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypergeo::QRatFunc;
use crate::osp::OrderedSetPartition;
use crate::partitions::Partition;
use crate::qarith::{QLaurent, Rational};
use crate::symfun::{BiSymFunc, SymFunc};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    let parse = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse(n)?, d))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

impl ToJson for QLaurent {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| json!([e, rational_to_string(c)]))
                .collect(),
        )
    }
}

impl FromJson for QLaurent {
    fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| bad("coefficient list", v))?;
        let mut out = QLaurent::zero();
        for t in arr {
            let pair = t
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| bad("[exp, \"num/den\"]", t))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| bad("integer exponent", &pair[0]))?;
            let c = match &pair[1] {
                Value::String(s) => rational_from_str(s)?,
                Value::Number(n) => Rational::from_integer(
                    n.as_i64()
                        .ok_or_else(|| bad("integer coefficient", &pair[1]))?
                        .into(),
                ),
                other => return Err(bad("coefficient string", other)),
            };
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl ToJson for Partition {
    fn to_json(&self) -> Value {
        json!(self.parts())
    }
}

impl FromJson for Partition {
    fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| bad("partition array", v))?;
        let parts = arr
            .iter()
            .map(|x| x.as_u64().map(|p| p as usize).ok_or_else(|| bad("part", x)))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl ToJson for SymFunc {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(mu, c)| json!({"mu": mu.to_json(), "coeff": c.to_json()}))
            .collect();
        json!({"basis": "schur", "degree": self.degree(), "terms": terms})
    }
}

fn check_basis(v: &Value) -> Result<()> {
    match v.get("basis").and_then(Value::as_str) {
        Some("schur") => Ok(()),
        _ => Err(bad("\"basis\": \"schur\"", v)),
    }
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|d| d as usize)
        .ok_or_else(|| Error::Parse(format!("missing integer field {key:?}")))
}

fn get_terms(v: &Value) -> Result<&Vec<Value>> {
    v.get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"terms\" array".into()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

impl FromJson for SymFunc {
    fn from_json(v: &Value) -> Result<Self> {
        check_basis(v)?;
        let degree = get_usize(v, "degree")?;
        let mut out = SymFunc::zero(degree);
        for t in get_terms(v)? {
            let mu = Partition::from_json(field(t, "mu")?)?;
            if mu.size() != degree {
                return Err(Error::SizeMismatch {
                    left: mu.size(),
                    right: degree,
                });
            }
            out.add_term(mu, QLaurent::from_json(field(t, "coeff")?)?);
        }
        Ok(out)
    }
}

impl ToJson for BiSymFunc {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(
                |((y, x), c)| json!({"ynu": y.to_json(), "xmu": x.to_json(), "coeff": c.to_json()}),
            )
            .collect();
        json!({
            "basis": "schur",
            "ydegree": self.ydegree(),
            "xdegree": self.xdegree(),
            "terms": terms,
        })
    }
}

impl FromJson for BiSymFunc {
    fn from_json(v: &Value) -> Result<Self> {
        check_basis(v)?;
        let (yd, xd) = (get_usize(v, "ydegree")?, get_usize(v, "xdegree")?);
        let mut out = BiSymFunc::zero(yd, xd);
        for t in get_terms(v)? {
            let y = Partition::from_json(field(t, "ynu")?)?;
            let x = Partition::from_json(field(t, "xmu")?)?;
            if y.size() != yd || x.size() != xd {
                return Err(Error::Parse(format!(
                    "term sizes ({}, {}) do not match degrees",
                    y.size(),
                    x.size()
                )));
            }
            out.add_term(y, x, QLaurent::from_json(field(t, "coeff")?)?);
        }
        Ok(out)
    }
}

impl ToJson for OrderedSetPartition {
    fn to_json(&self) -> Value {
        json!(self.blocks())
    }
}

impl FromJson for OrderedSetPartition {
    fn from_json(v: &Value) -> Result<Self> {
        let blocks: Vec<Vec<usize>> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        OrderedSetPartition::new(blocks)
    }
}

impl ToJson for QRatFunc {
    fn to_json(&self) -> Value {
        json!({"num": self.num().to_json(), "den": self.den().to_json()})
    }
}

impl FromJson for QRatFunc {
    fn from_json(v: &Value) -> Result<Self> {
        QRatFunc::new(
            QLaurent::from_json(field(v, "num")?)?,
            QLaurent::from_json(field(v, "den")?)?,
        )
    }
}
