//! StringRep JSON.
//!
//! ```text
//! {"curves": {"0": [[x_num, x_den, y_num, y_den], ...], ...},
//!  "witness": {"circle": {"center": [x_num, x_den, y_num, y_den], "r2": [num, den]}}
//!           | {"polyline": [[x_num, x_den, y_num, y_den], ...]}
//!           | null}
//! ```
//! Integers that do not fit in an `i64` are written as decimal strings.

use std::collections::BTreeMap;

use num::{BigInt, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::{ContourWitness, Curve, GeomError, Pt, Rat, StringRep};

const MAX_DIGITS: usize = 4096;

fn int_value(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(x) => json!(x),
        None => Value::String(i.to_string()),
    }
}

fn rat_values(r: &Rat) -> [Value; 2] {
    [int_value(r.numer()), int_value(r.denom())]
}

fn point_value(p: &Pt) -> Value {
    let [a, b] = rat_values(&p.x);
    let [c, d] = rat_values(&p.y);
    Value::Array(vec![a, b, c, d])
}

pub fn rep_to_value(rep: &StringRep) -> Value {
    let mut curves = Map::new();
    let mut sorted: Vec<&Curve> = rep.curves.iter().collect();
    sorted.sort_by_key(|c| c.vertex);
    for c in sorted {
        curves.insert(c.vertex.to_string(), Value::Array(c.points.iter().map(point_value).collect()));
    }
    let witness = match &rep.witness {
        None => Value::Null,
        Some(ContourWitness::Circle { center, r2 }) => {
            json!({"circle": {"center": point_value(center), "r2": rat_values(r2)}})
        }
        Some(ContourWitness::Polyline(ps)) => {
            json!({"polyline": ps.iter().map(point_value).collect::<Vec<_>>()})
        }
    };
    json!({"curves": Value::Object(curves), "witness": witness})
}

pub fn rep_to_json(rep: &StringRep) -> String {
    serde_json::to_string(&rep_to_value(rep)).expect("serializable")
}

fn err<T>(m: impl Into<String>) -> Result<T, GeomError> {
    Err(GeomError::Parse(m.into()))
}

fn parse_int(v: &Value) -> Result<BigInt, GeomError> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(x) => Ok(BigInt::from(x)),
            None => err(format!("non-integer number {n}")),
        },
        Value::String(s) => {
            if s.len() > MAX_DIGITS {
                return err("integer string too long");
            }
            s.parse::<BigInt>().or_else(|_| err(format!("bad integer {s:?}")))
        }
        _ => err("expected an integer"),
    }
}

fn parse_rat(num: &Value, den: &Value) -> Result<Rat, GeomError> {
    let d = parse_int(den)?;
    if d.is_zero() {
        return err("zero denominator");
    }
    Ok(Rat::new(parse_int(num)?, d))
}

fn parse_point(v: &Value) -> Result<Pt, GeomError> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b, c, d]) => Ok(Pt::new(parse_rat(a, b)?, parse_rat(c, d)?)),
        _ => err("a point is [x_num, x_den, y_num, y_den]"),
    }
}

fn parse_points(v: &Value) -> Result<Vec<Pt>, GeomError> {
    v.as_array().ok_or_else(|| GeomError::Parse("expected a point list".into()))?.iter().map(parse_point).collect()
}

pub fn rep_from_value(v: &Value) -> Result<StringRep, GeomError> {
    let obj = v.as_object().ok_or_else(|| GeomError::Parse("expected an object".into()))?;
    if let Some(k) = obj.keys().find(|k| *k != "curves" && *k != "witness") {
        return err(format!("unknown field {k:?}"));
    }
    let cs = obj
        .get("curves")
        .and_then(Value::as_object)
        .ok_or_else(|| GeomError::Parse("missing curves object".into()))?;
    let mut curves = BTreeMap::new();
    for (k, pts) in cs {
        let vtx: usize = k.parse().or_else(|_| err(format!("bad vertex key {k:?}")))?;
        curves.insert(vtx, Curve::new(vtx, parse_points(pts)?));
    }
    let witness = match obj.get("witness") {
        None | Some(Value::Null) => None,
        Some(Value::Object(w)) if w.len() == 1 => {
            if let Some(c) = w.get("circle") {
                let center = parse_point(c.get("center").unwrap_or(&Value::Null))?;
                let r2 = match c.get("r2").and_then(Value::as_array).map(Vec::as_slice) {
                    Some([n, d]) => parse_rat(n, d)?,
                    _ => return err("circle needs r2 = [num, den]"),
                };
                Some(ContourWitness::Circle { center, r2 })
            } else if let Some(p) = w.get("polyline") {
                Some(ContourWitness::Polyline(parse_points(p)?))
            } else {
                return err("witness must be circle or polyline");
            }
        }
        Some(_) => return err("malformed witness"),
    };
    Ok(StringRep { curves: curves.into_values().collect(), witness })
}

pub fn rep_from_json(text: &str) -> Result<StringRep, GeomError> {
    let v: Value = serde_json::from_str(text).map_err(|e| GeomError::Parse(e.to_string()))?;
    rep_from_value(&v)
}
