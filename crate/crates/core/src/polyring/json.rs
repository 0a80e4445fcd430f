//! `{"terms":[{"c":"<int>","m":[["y",5,3,1],...]}]}` — coefficients as
//! strings so that big integers survive, each factor as
//! `[family, i, j, exponent]` (`j = 0` for `z`).

use serde_json::{json, Value};

use super::integer::Integer;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::var::{Family, VarId};
use crate::error::{Error, Result};

pub fn monomial_to_json(m: &Monomial) -> Value {
    Value::Array(
        m.vars()
            .iter()
            .map(|&(v, e)| json!([v.family().name(), v.i(), v.j(), e]))
            .collect(),
    )
}

pub fn monomial_from_json(v: &Value) -> Result<Monomial> {
    let bad = || Error::Parse(format!("bad monomial JSON {v}"));
    let factors = v.as_array().ok_or_else(bad)?;
    let mut pairs = Vec::with_capacity(factors.len());
    for f in factors {
        let f = f.as_array().filter(|f| f.len() == 4).ok_or_else(bad)?;
        let fam = Family::from_name(f[0].as_str().ok_or_else(bad)?)?;
        let num = |x: &Value| x.as_u64().map(|n| n as usize).ok_or_else(bad);
        let (i, j, e) = (num(&f[1])?, num(&f[2])?, num(&f[3])?);
        pairs.push((VarId::new(fam, i, j), e as u32));
    }
    Ok(Monomial::from_pairs(pairs))
}

pub fn to_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| json!({"c": c.to_string(), "m": monomial_to_json(m)}))
        .collect();
    json!({ "terms": terms })
}

pub fn from_json(v: &Value) -> Result<Polynomial> {
    let bad = || Error::Parse("polynomial JSON must be {\"terms\":[...]}".into());
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(bad)?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c = match t.get("c") {
            Some(Value::String(s)) => s.parse::<Integer>()?,
            Some(Value::Number(n)) => n
                .as_i64()
                .map(Integer::from)
                .ok_or_else(bad)?,
            _ => return Err(bad()),
        };
        let m = monomial_from_json(t.get("m").ok_or_else(bad)?)?;
        out.push((m, c));
    }
    Ok(Polynomial::from_terms(out))
}
