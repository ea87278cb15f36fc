//! JSON forms.
//!
//! Rationals are strings `"p/q"` or `"p"` (integers are also accepted on
//! input). A polyhedron is
//! `{"points": [...], "rays": [...], "lines": [...], "halfspaces": [{"normal": [...], "offset": "p/q"}]}`
//! where equalities appear as pairs of opposite halfspaces. Both forms are
//! always written; on input the halfspaces are authoritative when present.

use std::collections::BTreeMap;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::exactq::{parse_scalar, Scalar, Vector};
use crate::momentum::BoundedAnswer;
use crate::polyhedra::{Halfspace, Polyhedron};
use crate::repweights::WeightSystem;
use crate::rootsys::RootSystem;
use crate::QVec;

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Int(i64),
    Text(String),
}

fn scalar_from_repr<S: Scalar, E: de::Error>(r: ScalarRepr) -> Result<S, E> {
    match r {
        ScalarRepr::Int(i) => Ok(S::from_i64(i)),
        ScalarRepr::Text(t) => parse_scalar(&t).map_err(E::custom),
    }
}

/// A rational read from or written to JSON.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JsonScalar<S>(pub S);

impl<S: Scalar> Serialize for JsonScalar<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de, S: Scalar> Deserialize<'de> for JsonScalar<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        scalar_from_repr(ScalarRepr::deserialize(d)?).map(JsonScalar)
    }
}

impl<S: Scalar> Serialize for Vector<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        s.collect_seq(self.iter().map(|c| JsonScalar(c.clone())))
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Vector<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<JsonScalar<S>> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|c| c.0).collect())
    }
}

impl<S: Scalar> Serialize for Halfspace<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        HalfspaceRepr {
            normal: self.normal.clone(),
            offset: JsonScalar(self.offset.clone()),
        }
        .serialize(s)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Halfspace<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let h = HalfspaceRepr::<S>::deserialize(d)?;
        Ok(Halfspace::new(h.normal, h.offset.0))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
struct HalfspaceRepr<S> {
    normal: Vector<S>,
    offset: JsonScalar<S>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
struct PolyRepr<S> {
    #[serde(default)]
    points: Vec<Vector<S>>,
    #[serde(default)]
    rays: Vec<Vector<S>>,
    #[serde(default)]
    lines: Vec<Vector<S>>,
    #[serde(default)]
    halfspaces: Option<Vec<Halfspace<S>>>,
}

impl<S: Scalar> Serialize for Polyhedron<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        PolyRepr {
            points: self.points().to_vec(),
            rays: self.rays().to_vec(),
            lines: self.lines().to_vec(),
            halfspaces: Some(self.halfspaces()),
        }
        .serialize(s)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Polyhedron<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PolyRepr::<S>::deserialize(d)?;
        let dim = r
            .halfspaces
            .iter()
            .flatten()
            .map(|h| h.normal.len())
            .chain(r.points.iter().chain(&r.rays).chain(&r.lines).map(|v| v.len()))
            .next()
            .ok_or_else(|| de::Error::custom("polyhedron without any vector to fix its dimension"))?;
        match r.halfspaces {
            Some(hs) if !hs.is_empty() || r.points.is_empty() => {
                Polyhedron::from_halfspaces(dim, hs, Vec::new()).map_err(de::Error::custom)
            }
            _ => Polyhedron::from_generators(dim, r.points, r.rays, r.lines).map_err(de::Error::custom),
        }
    }
}

impl Serialize for BoundedAnswer {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            certificate: &'a str,
            exact: &'a Option<crate::QPolyhedron>,
            lower: &'a crate::QPolyhedron,
            upper: &'a crate::QPolyhedron,
        }
        Repr {
            certificate: &self.certificate,
            exact: &self.exact,
            lower: &self.lower,
            upper: &self.upper,
        }
        .serialize(s)
    }
}

/// One entry of a serialized weight system.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightEntry {
    pub weight: QVec,
    pub mult: u64,
}

/// The weight map as a lexicographically sorted entry list.
pub fn weight_entries(rs: &RootSystem, ws: &WeightSystem) -> Vec<WeightEntry> {
    let entries: BTreeMap<QVec, u64> = ws.entries(rs);
    entries
        .into_iter()
        .map(|(weight, mult)| WeightEntry { weight, mult })
        .collect()
}
