//! JSON encodings.
//!
//! Rationals are canonical strings, real polynomials are ascending arrays of
//! them. Quaternion-valued polynomials are objects of coordinate arrays keyed
//! `"1","i","j","k"` (plus `"e","ei","ej","ek"` for the dual part); planes
//! use `"u0".."u3"`, points `"x0".."x3"`. Missing keys read as zero, unknown
//! keys are rejected.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{CPoly, Gauss};
use crate::plane::{PlanePoly, PointPoly};
use crate::poly::{Poly, RPoly};
use crate::qpoly::{Components, DualQuatPoly, QuatPoly};
use crate::quat::{DualQuat, Quat};
use crate::rat::{format_rat, parse_rat, Rat};

pub const QUAT_KEYS: [&str; 4] = ["1", "i", "j", "k"];
pub const DQ_KEYS: [&str; 8] = ["1", "i", "j", "k", "e", "ei", "ej", "ek"];
pub const GAUSS_KEYS: [&str; 2] = ["re", "im"];

pub mod rat_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(de::Error::custom)
    }
}

pub mod opt_rat_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rat(r)),
            None => s.serialize_none(),
        }
    }
}

pub fn ser_factor_list<S: Serializer>(
    parts: &[(RPoly, u32)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Item<'a> {
        factor: &'a RPoly,
        multiplicity: u32,
    }
    let mut seq = s.serialize_seq(Some(parts.len()))?;
    for (f, m) in parts {
        seq.serialize_element(&Item {
            factor: f,
            multiplicity: *m,
        })?;
    }
    seq.end()
}

impl Serialize for RPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&format_rat(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of canonical rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> std::result::Result<RPoly, A::Error> {
                let mut out = Vec::new();
                while let Some(s) = a.next_element::<String>()? {
                    out.push(parse_rat(&s).map_err(de::Error::custom)?);
                }
                Ok(Poly::new(out))
            }
        }
        d.deserialize_seq(V)
    }
}

fn ser_keyed<R: Components, S: Serializer>(
    p: &Poly<R>,
    keys: &[&str],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let parts = p.component_polys();
    let mut m = s.serialize_map(Some(keys.len()))?;
    for (k, c) in keys.iter().zip(&parts) {
        m.serialize_entry(k, c)?;
    }
    m.end()
}

fn de_keyed<'de, R: Components, D: Deserializer<'de>>(
    d: D,
    keys: &[&str],
) -> std::result::Result<Poly<R>, D::Error> {
    let map = BTreeMap::<String, RPoly>::deserialize(d)?;
    let mut parts = vec![RPoly::zero(); keys.len()];
    for (k, v) in map {
        let idx = keys
            .iter()
            .position(|x| *x == k)
            .ok_or_else(|| de::Error::unknown_field(&k, &[]))?;
        parts[idx] = v;
    }
    Ok(Poly::from_component_polys(&parts))
}

macro_rules! keyed_serde {
    ($ty:ty, $keys:expr) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                ser_keyed(self, &$keys, s)
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                de_keyed(d, &$keys)
            }
        }
    };
}

keyed_serde!(QuatPoly, QUAT_KEYS);
keyed_serde!(DualQuatPoly, DQ_KEYS);
keyed_serde!(CPoly, GAUSS_KEYS);

fn ser_scalar_keyed<S: Serializer>(
    vals: &[&Rat],
    keys: &[&str],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(keys.len()))?;
    for (k, v) in keys.iter().zip(vals) {
        m.serialize_entry(k, &format_rat(v))?;
    }
    m.end()
}

fn de_scalar_keyed<'de, D: Deserializer<'de>>(
    d: D,
    keys: &[&str],
) -> std::result::Result<Vec<Rat>, D::Error> {
    let map = BTreeMap::<String, String>::deserialize(d)?;
    let mut vals = vec![Rat::from_integer(0.into()); keys.len()];
    for (k, v) in map {
        let idx = keys
            .iter()
            .position(|x| *x == k)
            .ok_or_else(|| de::Error::unknown_field(&k, &[]))?;
        vals[idx] = parse_rat(&v).map_err(de::Error::custom)?;
    }
    Ok(vals)
}

impl Serialize for Quat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_scalar_keyed(&self.components(), &QUAT_KEYS, s)
    }
}

impl<'de> Deserialize<'de> for Quat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Quat::from_slice(&de_scalar_keyed(d, &QUAT_KEYS)?))
    }
}

impl Serialize for DualQuat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_scalar_keyed(&self.components(), &DQ_KEYS, s)
    }
}

impl<'de> Deserialize<'de> for DualQuat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(DualQuat::from_slice(&de_scalar_keyed(d, &DQ_KEYS)?))
    }
}

impl Serialize for Gauss {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_scalar_keyed(&[&self.re, &self.im], &GAUSS_KEYS, s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlaneRepr {
    #[serde(default)]
    u0: RPoly,
    #[serde(default)]
    u1: RPoly,
    #[serde(default)]
    u2: RPoly,
    #[serde(default)]
    u3: RPoly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointRepr {
    #[serde(default)]
    x0: RPoly,
    #[serde(default)]
    x1: RPoly,
    #[serde(default)]
    x2: RPoly,
    #[serde(default)]
    x3: RPoly,
}

impl Serialize for PlanePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PlaneRepr {
            u0: self.u0.clone(),
            u1: self.u1.clone(),
            u2: self.u2.clone(),
            u3: self.u3.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PlaneRepr::deserialize(d)?;
        Ok(PlanePoly::new(r.u0, r.u1, r.u2, r.u3))
    }
}

impl Serialize for PointPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointRepr {
            x0: self.x0.clone(),
            x1: self.x1.clone(),
            x2: self.x2.clone(),
            x3: self.x3.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PointRepr::deserialize(d)?;
        Ok(PointPoly::new(r.x0, r.x1, r.x2, r.x3))
    }
}

/// A rational function `num/den`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatFunc {
    pub num: RPoly,
    #[serde(default = "RPoly::one")]
    pub den: RPoly,
}

/// Plane data with rational-function coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalPlane {
    pub u0: RatFunc,
    pub u1: RatFunc,
    pub u2: RatFunc,
    pub u3: RatFunc,
}

/// Plane input accepted from files: either polynomial or rational-function
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum PlaneInput {
    Poly(PlanePoly),
    Rational(RationalPlane),
}

pub fn parse_plane_input(text: &str) -> Result<PlaneInput> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let rational = v
        .as_object()
        .is_some_and(|m| m.values().any(|x| x.is_object()));
    if rational {
        serde_json::from_value(v)
            .map(PlaneInput::Rational)
            .map_err(|e| Error::Parse(e.to_string()))
    } else {
        serde_json::from_value(v)
            .map(PlaneInput::Poly)
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rpoly, rpoly_q};

    #[test]
    fn rpoly_round_trip() {
        let p = rpoly_q(&[(13, 3), (-32, 15)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["13/3","-32/15"]"#);
        assert_eq!(from_json::<RPoly>(&s).unwrap(), p);
        assert!(from_json::<RPoly>(r#"["2/4"]"#).is_err());
        assert!(from_json::<RPoly>(r#"[1]"#).is_err());
    }

    #[test]
    fn dq_round_trip() {
        let c = DualQuatPoly::from_component_polys(&[
            rpoly(&[1]),
            rpoly(&[0, 1]),
            rpoly(&[1, -1]),
            rpoly(&[-2, 1]),
            rpoly(&[]),
            rpoly_q(&[(2, 3), (-8, 15)]),
            rpoly(&[0]),
            rpoly(&[3]),
        ]);
        let s = to_json(&c);
        assert_eq!(from_json::<DualQuatPoly>(&s).unwrap(), c);
        assert!(from_json::<DualQuatPoly>(r#"{"1":["1"],"q":["2"]}"#).is_err());
        let partial: DualQuatPoly = from_json(r#"{"k":["1"]}"#).unwrap();
        assert_eq!(partial, DualQuatPoly::constant(DualQuat::from_primal(Quat::k())));
    }

    #[test]
    fn plane_round_trip() {
        let u = PlanePoly::new(rpoly(&[1, 1]), rpoly(&[-1, 0, 1]), rpoly(&[0, 1]), rpoly(&[0, 2, 2]));
        let s = to_json(&u);
        assert_eq!(from_json::<PlanePoly>(&s).unwrap(), u);
        assert!(from_json::<PlanePoly>(r#"{"u4":["1"]}"#).is_err());
        match parse_plane_input(&s).unwrap() {
            PlaneInput::Poly(p) => assert_eq!(p, u),
            _ => panic!(),
        }
        let r = r#"{"u0":{"num":["1","1"],"den":["0","-1","1"]},
                   "u1":{"num":["1","1"],"den":["0","1"]},
                   "u2":{"num":["1"],"den":["-1","1"]},
                   "u3":{"num":["2","2"],"den":["-1","1"]}}"#;
        assert!(matches!(parse_plane_input(r).unwrap(), PlaneInput::Rational(_)));
    }
}
