//! Local momentum cones `Δ_m = μ + Δ(Y_m)` and their intersection.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::linear_cone_torus;
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::{QHalfspace, QMat, QPolyhedron, QVec};

/// Which isotropy data determines the local cone.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IsotropyCase {
    /// `K_m` is the maximal torus.
    FullTorus,
    /// `K_m = K_μ`; supported when `K_μ` is abelian.
    CentralOrbit,
    /// `K_m ∩ T` is a subtorus given by a basis of its Lie algebra.
    Subtorus,
}

impl IsotropyCase {
    pub fn tag(self) -> &'static str {
        match self {
            IsotropyCase::FullTorus => "full-torus-isotropy",
            IsotropyCase::CentralOrbit => "central-orbit",
            IsotropyCase::Subtorus => "subtorus-isotropy",
        }
    }
}

impl fmt::Display for IsotropyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IsotropyCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full-torus-isotropy" => Ok(IsotropyCase::FullTorus),
            "central-orbit" => Ok(IsotropyCase::CentralOrbit),
            "subtorus-isotropy" => Ok(IsotropyCase::Subtorus),
            other => Err(Error::unsupported(
                format!("isotropy case {other:?}"),
                "one of full-torus-isotropy, central-orbit, subtorus-isotropy",
            )),
        }
    }
}

/// A point `μ = Φ(m)` with the isotropy data of `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalConeSpec {
    pub mu: QVec,
    /// Weights of the symplectic slice under the (sub)torus.
    pub slice_weights: Vec<QVec>,
    /// Basis of the Lie algebra of `K_m ∩ T` in coweight coordinates;
    /// used by [`IsotropyCase::Subtorus`] only.
    pub isotropy_subtorus: Vec<QVec>,
    pub case: IsotropyCase,
}

impl LocalConeSpec {
    pub fn torus(mu: QVec, slice_weights: Vec<QVec>) -> Self {
        LocalConeSpec {
            mu,
            slice_weights,
            isotropy_subtorus: Vec::new(),
            case: IsotropyCase::FullTorus,
        }
    }
}

fn check_len(rs: &RootSystem, v: &QVec) -> Result<()> {
    if v.len() != rs.rank() {
        return Err(Error::shape(rs.rank(), v.len()));
    }
    Ok(())
}

pub fn local_cone(rs: &RootSystem, spec: &LocalConeSpec) -> Result<QPolyhedron> {
    check_len(rs, &spec.mu)?;
    if !rs.is_dominant(&spec.mu) {
        return Err(Error::NotDominant(spec.mu.to_string()));
    }
    match spec.case {
        IsotropyCase::FullTorus => linear_cone_torus(rs, &spec.slice_weights)?.shift(&spec.mu),
        IsotropyCase::CentralOrbit => {
            let abelian = rs.semisimple_rank() == 0 || rs.is_strictly_dominant(&spec.mu);
            if !abelian && !spec.slice_weights.is_empty() {
                return Err(Error::unsupported(
                    "local cone at a point with nonabelian stabilizer K_μ",
                    "the momentum cone of the slice as a linear K_μ-module, beyond torus data",
                ));
            }
            linear_cone_torus(rs, &spec.slice_weights)?.shift(&spec.mu)
        }
        IsotropyCase::Subtorus => subtorus_cone(rs, spec),
    }
}

/// `μ + {x : R x ∈ −cone(R ν_i)}` with `R` restriction to the subtorus.
fn subtorus_cone(rs: &RootSystem, spec: &LocalConeSpec) -> Result<QPolyhedron> {
    let n = rs.rank();
    let basis = &spec.isotropy_subtorus;
    if basis.is_empty() {
        return Err(Error::Domain("subtorus isotropy needs a nonempty basis".into()));
    }
    for b in basis {
        check_len(rs, b)?;
    }
    let k = basis.len();
    let r = QMat::from_rows(basis.clone())?;
    if r.rank() != k {
        return Err(Error::DependentBasis);
    }
    let restricted = spec
        .slice_weights
        .iter()
        .map(|w| match w.len() {
            l if l == n => r.mul_vec(w),
            l if l == k => Ok(w.clone()),
            l => Err(Error::shape(k, l)),
        })
        .collect::<Result<Vec<_>>>()?;
    let cone = QPolyhedron::cone_from_rays(k, restricted.iter().map(|w| -w).collect())?;
    let pull = |h: &QHalfspace| -> Result<QHalfspace> {
        let normal = r.left_mul_vec(&h.normal)?;
        let offset = normal.dot(&spec.mu) + h.offset.clone();
        Ok(QHalfspace::new(normal, offset))
    };
    let facets = cone.facets().iter().map(pull).collect::<Result<Vec<_>>>()?;
    let eqs = cone.equalities().iter().map(pull).collect::<Result<Vec<_>>>()?;
    QPolyhedron::from_halfspaces(n, facets, eqs)
}

/// `Δ(M) = ⋂ Δ_m`.
pub fn assemble_polytope(rs: &RootSystem, specs: &[LocalConeSpec]) -> Result<QPolyhedron> {
    let cones = specs
        .iter()
        .map(|s| local_cone(rs, s))
        .collect::<Result<Vec<_>>>()?;
    QPolyhedron::intersect_all(&cones)?.ok_or(Error::Empty("no local cones"))
}

/// Necessary condition for `μ` to be a vertex: the local cone is proper.
pub fn vertex_condition(rs: &RootSystem, spec: &LocalConeSpec) -> Result<bool> {
    local_cone(rs, spec)?.shift(&-&spec.mu)?.is_proper()
}

/// `(−μ + Δ(M)) ∩ span(basis)` in the coordinates of `basis`, for a central
/// `μ`.
pub fn reduce(rs: &RootSystem, p: &QPolyhedron, mu: &QVec, basis: &[QVec]) -> Result<QPolyhedron> {
    check_len(rs, mu)?;
    if p.dim() != rs.rank() {
        return Err(Error::shape(rs.rank(), p.dim()));
    }
    if mu[..rs.semisimple_rank()].iter().any(|c| !c.is_zero()) {
        return Err(Error::Domain(format!("reduction level {mu} is not central")));
    }
    p.shift(&-mu)?.slice(basis)
}
