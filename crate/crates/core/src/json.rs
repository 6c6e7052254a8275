//! Deterministic JSON encodings. Object keys are emitted in sorted order and
//! arrays of chain entries follow the lexicographic key order of the chain.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::cocycles::Perturbation;
use crate::error::{Error, Result};
use crate::homology::{Plaquette, PlaquetteSum};
use crate::lattice::{EdgeFlow, PathEvaluation};
use crate::metabelian::{FoxImage, MetabelianElem};
use crate::nilpotent::HeisenbergElem;
use crate::point::Point;
use crate::satellite::SatelliteElem;

pub fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer is a JSON number"))
}

pub fn point(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(int).collect())
}

pub fn edge_flow(f: &EdgeFlow) -> Value {
    Value::Array(
        f.iter()
            .map(|(k, m)| json!({"base": point(&k.base), "axis": k.axis, "mult": int(m)}))
            .collect(),
    )
}

pub fn path_evaluation(pe: &PathEvaluation) -> Value {
    json!({"endpoint": point(&pe.endpoint), "flow": edge_flow(&pe.flow)})
}

pub fn metabelian(e: &MetabelianElem) -> Value {
    json!({"endpoint": point(&e.endpoint), "flow": edge_flow(&e.flow)})
}

pub fn plaquette_sum(s: &PlaquetteSum) -> Value {
    Value::Array(
        s.iter()
            .map(|(p, k)| json!({"base": point(&p.base), "i": p.i, "j": p.j, "mult": int(k)}))
            .collect(),
    )
}

pub fn heisenberg(h: &HeisenbergElem) -> Value {
    let areas: Vec<Value> = h
        .areas()
        .map(|(i, j, a)| json!({"i": i, "j": j, "value": int(a)}))
        .collect();
    json!({"endpoint": point(&h.endpoint), "areas": areas})
}

pub fn fox(f: &FoxImage) -> Value {
    let derivatives: Vec<Value> = f
        .derivatives
        .iter()
        .map(|d| {
            Value::Array(
                d.iter()
                    .map(|(p, c)| json!({"point": point(p), "coeff": int(c)}))
                    .collect(),
            )
        })
        .collect();
    json!({"monomial": point(&f.monomial), "derivatives": derivatives})
}

pub fn satellite(s: &SatelliteElem) -> Value {
    json!({"k": s.k, "vec": point(&s.vec), "cycle": edge_flow(&s.cycle)})
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad(format!("not an integer: {n}"))),
        other => Err(bad(format!("expected integer, got {other}"))),
    }
}

fn parse_axis(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|a| a as usize)
        .ok_or_else(|| bad(format!("expected axis index, got {v}")))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| bad(format!("missing field {name:?}")))
}

pub fn parse_point(v: &Value) -> Result<Point> {
    let arr = v.as_array().ok_or_else(|| bad(format!("expected vector, got {v}")))?;
    Ok(Point::from_coords(
        arr.iter().map(parse_int).collect::<Result<Vec<_>>>()?,
    ))
}

/// Inverse of [`plaquette_sum`].
pub fn parse_plaquette_sum(v: &Value, rank: usize) -> Result<PlaquetteSum> {
    let arr = v.as_array().ok_or_else(|| bad("plaquette sum must be an array"))?;
    let mut entries = Vec::with_capacity(arr.len());
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| bad("plaquette entry must be an object"))?;
        let base = parse_point(field(obj, "base")?)?;
        let p = Plaquette::new(base, parse_axis(field(obj, "i")?)?, parse_axis(field(obj, "j")?)?)?;
        entries.push((p, parse_int(field(obj, "mult")?)?));
    }
    PlaquetteSum::from_entries(rank, entries)
}

/// Inverse of [`edge_flow`].
pub fn parse_edge_flow(v: &Value, rank: usize) -> Result<EdgeFlow> {
    let arr = v.as_array().ok_or_else(|| bad("edge flow must be an array"))?;
    let mut entries = Vec::with_capacity(arr.len());
    for item in arr {
        let obj = item.as_object().ok_or_else(|| bad("edge entry must be an object"))?;
        let key = crate::lattice::EdgeKey::new(parse_point(field(obj, "base")?)?, parse_axis(field(obj, "axis")?)?);
        entries.push((key, parse_int(field(obj, "mult")?)?));
    }
    EdgeFlow::from_entries(rank, entries)
}

/// Reads a perturbation file: an array of `{"vertex": [..], "value": <plaquette sum>}`.
pub fn parse_perturbation(text: &str, rank: usize) -> Result<Perturbation> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let arr = v.as_array().ok_or_else(|| bad("perturbation must be an array"))?;
    let mut pairs = Vec::with_capacity(arr.len());
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| bad("perturbation entry must be an object"))?;
        let vertex = parse_point(field(obj, "vertex")?)?;
        let value = parse_plaquette_sum(field(obj, "value")?, rank)?;
        pairs.push((vertex, value));
    }
    Perturbation::from_plaquette_sums(rank, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::evaluate_path;
    use crate::words::Word;

    #[test]
    fn flow_encoding_is_sorted_and_keyed() {
        let pe = evaluate_path(&Word::parse("x1 x2 x1^-1 x2^-1", 2).unwrap());
        let s = serde_json::to_string(&path_evaluation(&pe)).unwrap();
        assert_eq!(
            s,
            r#"{"endpoint":[0,0],"flow":[{"axis":1,"base":[0,0],"mult":1},{"axis":2,"base":[0,0],"mult":-1},{"axis":1,"base":[0,1],"mult":-1},{"axis":2,"base":[1,0],"mult":1}]}"#
        );
        assert_eq!(parse_edge_flow(&edge_flow(&pe.flow), 2).unwrap(), pe.flow);
    }

    #[test]
    fn big_integers_survive() {
        let n: BigInt = "-98765432109876543210987654321".parse().unwrap();
        assert_eq!(serde_json::to_string(&int(&n)).unwrap(), n.to_string());
        assert_eq!(parse_int(&int(&n)).unwrap(), n);
    }

    #[test]
    fn perturbation_file() {
        let text = r#"[{"vertex":[1,0],"value":[{"base":[0,0],"i":1,"j":2,"mult":2}]}]"#;
        let u = parse_perturbation(text, 2).unwrap();
        assert_eq!(u.iter().count(), 1);
        assert!(parse_perturbation(
            "[{\"vertex\":[0,0],\"value\":[{\"base\":[0,0],\"i\":1,\"j\":2,\"mult\":1}]}]",
            2
        )
        .is_err());
        assert!(parse_perturbation("{}", 2).is_err());
        assert!(parse_perturbation("[{\"vertex\":[1,0]}]", 2).is_err());
        assert!(parse_perturbation("not json", 2).is_err());
    }
}
