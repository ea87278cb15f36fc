//! Requests `{"command", "group", "payload"}` and their dispatch.

use std::str::FromStr;

use momentum_core::json::weight_entries;
use momentum_core::momentum::{
    affine_cone_from_hw, assemble_polytope, cotangent_homogeneous, gelfand_infinity_polytope,
    linear_cone_torus, local_cone, momentum_polytope_projective, projective_closure_polytope,
    projective_polytope_torus, recover_cone, reduce, vertex_condition, IsotropyCase, LocalConeSpec,
};
use momentum_core::repweights::{irrep_weights, reducible_weights};
use momentum_core::rootsys::RootSystem;
use momentum_core::{QPolyhedron, QVec};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::render::{render, RenderInput};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Roots,
    Irrep,
    Orbit,
    Projective,
    LinearCone,
    AffineCone,
    LocalCone,
    Assemble,
    Reduce,
    Cotangent,
    Closure,
    Render,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: Command,
    pub group: String,
    #[serde(default)]
    pub payload: Value,
}

impl Request {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("malformed request: {e}")))
    }
}

fn payload<T: DeserializeOwned>(p: &Value) -> Result<T, CliError> {
    let p = if p.is_null() { json!({}) } else { p.clone() };
    serde_json::from_value(p).map_err(|e| CliError::parse(format!("malformed payload: {e}")))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("values serialize")
}

/// One highest weight or a list of them.
#[derive(Deserialize)]
#[serde(untagged)]
enum Weights {
    One(QVec),
    Many(Vec<QVec>),
}

impl Weights {
    fn into_vec(self) -> Vec<QVec> {
        match self {
            Weights::One(w) => vec![w],
            Weights::Many(ws) => ws,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HwPayload {
    hw: Weights,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightPayload {
    weight: QVec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinearPayload {
    weights: Vec<QVec>,
    #[serde(default)]
    projectivize: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorsPayload {
    generators: Vec<QVec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct SpecPayload {
    mu: QVec,
    #[serde(default)]
    slice_weights: Vec<QVec>,
    #[serde(default)]
    isotropy_subtorus: Vec<QVec>,
    #[serde(default = "default_case")]
    case: String,
}

fn default_case() -> String {
    IsotropyCase::FullTorus.tag().to_string()
}

impl SpecPayload {
    fn into_spec(self) -> Result<LocalConeSpec, CliError> {
        Ok(LocalConeSpec {
            mu: self.mu,
            slice_weights: self.slice_weights,
            isotropy_subtorus: self.isotropy_subtorus,
            case: IsotropyCase::from_str(&self.case)?,
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AssemblePayload {
    specs: Vec<SpecPayload>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ReducePayload {
    polytope: QPolyhedron,
    mu: QVec,
    basis: Vec<QVec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WallPayload {
    #[serde(default)]
    wall: Vec<QVec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClosurePayload {
    infinity_polytope: Option<QPolyhedron>,
}

/// The response document and, for `render`, the SVG text.
pub struct Response {
    pub json: Value,
    pub svg: Option<String>,
}

impl From<Value> for Response {
    fn from(json: Value) -> Self {
        Response { json, svg: None }
    }
}

pub fn run(req: &Request) -> Result<Response, CliError> {
    let rs = RootSystem::parse(&req.group)?;
    let p = &req.payload;
    let json = match req.command {
        Command::Roots => roots(&rs),
        Command::Irrep => {
            let hw = payload::<HwPayload>(p)?.hw.into_vec();
            let ws = match hw.as_slice() {
                [one] => irrep_weights(&rs, one)?,
                _ => reducible_weights(&rs, &hw)?,
            };
            json!({
                "dim": ws.dim(&rs).to_string(),
                "highest_weights": to_json(&hw),
                "weights": to_json(&weight_entries(&rs, &ws)),
            })
        }
        Command::Orbit => {
            let w = payload::<WeightPayload>(p)?.weight;
            let orbit = rs.weyl_orbit(&w)?;
            let (dominant, word) = rs.dominantize(&w);
            json!({ "dominant": to_json(&dominant), "orbit": to_json(&orbit), "word": word.0 })
        }
        Command::Projective => {
            let hw = payload::<HwPayload>(p)?.hw.into_vec();
            to_json(&momentum_polytope_projective(&rs, &hw)?)
        }
        Command::LinearCone => {
            let lp = payload::<LinearPayload>(p)?;
            let poly = if lp.projectivize {
                projective_polytope_torus(&rs, &lp.weights)?
            } else {
                linear_cone_torus(&rs, &lp.weights)?
            };
            json!({ "polyhedron": to_json(&poly) })
        }
        Command::AffineCone => {
            let g = payload::<GeneratorsPayload>(p)?;
            json!({ "cone": to_json(&affine_cone_from_hw(&rs, &g.generators)?) })
        }
        Command::LocalCone => {
            let spec = payload::<SpecPayload>(p)?.into_spec()?;
            json!({
                "cone": to_json(&local_cone(&rs, &spec)?),
                "vertex_condition": vertex_condition(&rs, &spec)?,
            })
        }
        Command::Assemble => {
            let specs = payload::<AssemblePayload>(p)?
                .specs
                .into_iter()
                .map(SpecPayload::into_spec)
                .collect::<Result<Vec<_>, _>>()?;
            json!({ "polyhedron": to_json(&assemble_polytope(&rs, &specs)?) })
        }
        Command::Reduce => {
            let r = payload::<ReducePayload>(p)?;
            json!({ "polyhedron": to_json(&reduce(&rs, &r.polytope, &r.mu, &r.basis)?) })
        }
        Command::Cotangent => {
            let w = payload::<WallPayload>(p)?;
            to_json(&cotangent_homogeneous(&rs, &w.wall)?)
        }
        Command::Closure => {
            let c = payload::<ClosurePayload>(p)?;
            let infinity = match c.infinity_polytope {
                Some(poly) => poly,
                None => gelfand_infinity_polytope(&rs)?,
            };
            json!({
                "closure": to_json(&projective_closure_polytope(&infinity)?),
                "cone": to_json(&recover_cone(&infinity)?),
                "infinity_polytope": to_json(&infinity),
            })
        }
        Command::Render => {
            let input: RenderInput = payload(p)?;
            let (svg, answer) = render(&rs, input)?;
            let mut doc = json!({ "svg": svg });
            if let Some(a) = answer {
                doc["answer"] = to_json(&a);
            }
            return Ok(Response { json: doc, svg: Some(svg) });
        }
    };
    Ok(json.into())
}

fn roots(rs: &RootSystem) -> Value {
    let roots: Vec<Value> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            json!({
                "coeffs": r.coeffs,
                "coroot": to_json(&r.coroot),
                "height": r.height(),
                "norm2": r.norm2.to_string(),
                "weight": to_json(&r.weight),
            })
        })
        .collect();
    let cartan: Vec<Value> = rs.cartan().rows().iter().map(to_json).collect();
    json!({
        "cartan": cartan,
        "group": rs.spec().to_string(),
        "positive_roots": roots,
        "rank": rs.rank(),
        "rho": to_json(&rs.rho()),
        "weyl_group_order": rs.weyl_group_order(),
    })
}
