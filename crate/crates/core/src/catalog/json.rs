//! JSON schema for tower specifications.
//!
//! Integers are JSON numbers when they fit in `i64`, decimal strings
//! otherwise. A `QuadNum` is `{"a": [num, den], "b": [num, den]}`; the
//! point at infinity is the string `"inf"`; polynomials are ascending
//! coefficient lists; the recursion is a grid `[i][j]` of `x^i y^j`
//! coefficients.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{EllipticPoint, Factored, KummerForm, Signature, TowerSpec};
use crate::algebra::{BiPoly, MobiusMap, Poly, PolyRing, ProjPoint, QuadField, QuadNum, Rat, RatFunc};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct QuadJson {
    pub a: [Value; 2],
    pub b: [Value; 2],
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct RatFuncJson {
    pub num: Vec<QuadJson>,
    pub den: Vec<QuadJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct MobiusJson {
    pub a: QuadJson,
    pub b: QuadJson,
    pub c: QuadJson,
    pub d: QuadJson,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct SignatureJson {
    pub g0: i64,
    pub orders: Vec<u32>,
    pub area: [Value; 2],
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct FactorJson {
    pub poly: Vec<QuadJson>,
    pub exp: i32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct FactoredJson {
    pub scalar: QuadJson,
    pub factors: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct KummerJson {
    pub exponent: u32,
    pub rhs: RatFuncJson,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct EllipticJson {
    pub label: String,
    pub order: u32,
    pub j_value: Value,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TowerJson {
    pub name: String,
    pub base_field: String,
    #[serde(default)]
    pub description: String,
    pub signature: SignatureJson,
    pub j_map: RatFuncJson,
    pub j_minus_one: FactoredJson,
    pub level2_map: RatFuncJson,
    pub omega1: MobiusJson,
    pub omega2: MobiusJson,
    pub recursion: Vec<Vec<QuadJson>>,
    pub z_substitution: MobiusJson,
    pub kummer: KummerJson,
    pub elliptic_points: Vec<EllipticJson>,
    pub norm_of_i: u32,
    pub bad_primes: Vec<u64>,
}

pub fn int_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn rat_value(r: &Rat) -> [Value; 2] {
    [int_value(r.numer()), int_value(r.denom())]
}

pub fn quad_json(x: &QuadNum) -> QuadJson {
    QuadJson { a: rat_value(&x.a), b: rat_value(&x.b) }
}

pub fn point_json(p: &ProjPoint<QuadNum>) -> Value {
    match p {
        ProjPoint::Infinity => Value::String("inf".into()),
        ProjPoint::Finite(x) => serde_json::to_value(quad_json(x)).expect("plain data"),
    }
}

fn poly_json(p: &Poly<QuadNum>) -> Vec<QuadJson> {
    p.coeffs().iter().map(quad_json).collect()
}

fn ratfunc_json(f: &RatFunc<QuadNum>) -> RatFuncJson {
    RatFuncJson { num: poly_json(f.num()), den: poly_json(f.den()) }
}

fn mobius_json(m: &MobiusMap<QuadNum>) -> MobiusJson {
    MobiusJson { a: quad_json(&m.a), b: quad_json(&m.b), c: quad_json(&m.c), d: quad_json(&m.d) }
}

pub fn spec_to_json(spec: &TowerSpec) -> TowerJson {
    TowerJson {
        name: spec.name.clone(),
        base_field: spec.base_field.clone(),
        description: spec.description.clone(),
        signature: SignatureJson {
            g0: spec.signature.g0,
            orders: spec.signature.orders.clone(),
            area: rat_value(&spec.signature.area),
        },
        j_map: ratfunc_json(&spec.j_map),
        j_minus_one: FactoredJson {
            scalar: quad_json(&spec.j_minus_one.scalar),
            factors: spec.j_minus_one.factors.iter().map(|(p, e)| FactorJson { poly: poly_json(p), exp: *e }).collect(),
        },
        level2_map: ratfunc_json(&spec.level2_map),
        omega1: mobius_json(&spec.omega1),
        omega2: mobius_json(&spec.omega2),
        recursion: spec.recursion.grid(&QuadField).iter().map(|row| row.iter().map(quad_json).collect()).collect(),
        z_substitution: mobius_json(&spec.z_substitution),
        kummer: KummerJson { exponent: spec.kummer.exponent, rhs: ratfunc_json(&spec.kummer.rhs) },
        elliptic_points: spec
            .elliptic_points
            .iter()
            .map(|e| EllipticJson { label: e.label.clone(), order: e.order, j_value: point_json(&e.j_value) })
            .collect(),
        norm_of_i: spec.norm_of_i,
        bad_primes: spec.bad_primes.clone(),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("non-integral number {n}"))),
        Value::String(s) => s.parse::<BigInt>().map_err(|_| bad(format!("bad integer string {s:?}"))),
        other => Err(bad(format!("expected integer, got {other}"))),
    }
}

fn parse_rat(v: &[Value; 2]) -> Result<Rat> {
    let d = parse_int(&v[1])?;
    if d == BigInt::from(0) {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(parse_int(&v[0])?, d))
}

pub fn parse_quad(q: &QuadJson) -> Result<QuadNum> {
    Ok(QuadNum::new(parse_rat(&q.a)?, parse_rat(&q.b)?))
}

fn parse_poly(cs: &[QuadJson]) -> Result<Poly<QuadNum>> {
    let coeffs = cs.iter().map(parse_quad).collect::<Result<Vec<_>>>()?;
    Ok(PolyRing::new(QuadField).from_coeffs(coeffs))
}

fn parse_ratfunc(f: &RatFuncJson) -> Result<RatFunc<QuadNum>> {
    RatFunc::new(&QuadField, parse_poly(&f.num)?, parse_poly(&f.den)?)
}

fn parse_mobius(m: &MobiusJson) -> Result<MobiusMap<QuadNum>> {
    MobiusMap::new(&QuadField, parse_quad(&m.a)?, parse_quad(&m.b)?, parse_quad(&m.c)?, parse_quad(&m.d)?)
}

fn parse_point(v: &Value) -> Result<ProjPoint<QuadNum>> {
    match v {
        Value::String(s) if s == "inf" => Ok(ProjPoint::Infinity),
        other => {
            let q: QuadJson = serde_json::from_value(other.clone()).map_err(|e| bad(e.to_string()))?;
            Ok(ProjPoint::Finite(parse_quad(&q)?))
        }
    }
}

/// Parses and validates a spec.
pub fn spec_from_json(j: &TowerJson) -> Result<TowerSpec> {
    let grid = j
        .recursion
        .iter()
        .map(|row| row.iter().map(parse_quad).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let spec = TowerSpec {
        name: j.name.clone(),
        base_field: j.base_field.clone(),
        description: j.description.clone(),
        signature: Signature { g0: j.signature.g0, orders: j.signature.orders.clone(), area: parse_rat(&j.signature.area)? },
        j_map: parse_ratfunc(&j.j_map)?,
        j_minus_one: Factored {
            scalar: parse_quad(&j.j_minus_one.scalar)?,
            factors: j
                .j_minus_one
                .factors
                .iter()
                .map(|f| Ok((parse_poly(&f.poly)?, f.exp)))
                .collect::<Result<Vec<_>>>()?,
        },
        level2_map: parse_ratfunc(&j.level2_map)?,
        omega1: parse_mobius(&j.omega1)?,
        omega2: parse_mobius(&j.omega2)?,
        recursion: BiPoly::from_grid(&QuadField, grid),
        z_substitution: parse_mobius(&j.z_substitution)?,
        kummer: KummerForm { exponent: j.kummer.exponent, rhs: parse_ratfunc(&j.kummer.rhs)? },
        elliptic_points: j
            .elliptic_points
            .iter()
            .map(|e| Ok(EllipticPoint { label: e.label.clone(), order: e.order, j_value: parse_point(&e.j_value)? }))
            .collect::<Result<Vec<_>>>()?,
        norm_of_i: j.norm_of_i,
        bad_primes: j.bad_primes.clone(),
    };
    spec.validate()?;
    Ok(spec)
}

/// Accepts a single tower object or an array of them.
pub fn parse_towers(text: &str) -> Result<Vec<TowerSpec>> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let items = match v {
        Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|item| {
            let j: TowerJson = serde_json::from_value(item).map_err(|e| bad(e.to_string()))?;
            spec_from_json(&j)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_towers;

    #[test]
    fn round_trip_builtin_towers() {
        for t in builtin_towers() {
            let j = spec_to_json(&t);
            let text = serde_json::to_string(&j).unwrap();
            let back = parse_towers(&text).unwrap().pop().unwrap();
            assert_eq!(spec_to_json(&back), j);
        }
    }

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(10);
        assert!(int_value(&big).is_string());
        assert_eq!(parse_int(&int_value(&big)).unwrap(), big);
        assert_eq!(int_value(&BigInt::from(-7)), Value::from(-7));
    }

    #[test]
    fn rejects_broken_recursion() {
        let t = &builtin_towers()[1];
        let mut j = spec_to_json(t);
        j.recursion[0][0] = quad_json(&QuadNum::int(99, 0));
        assert!(matches!(spec_from_json(&j), Err(Error::InvalidSpec(_))));
    }
}
