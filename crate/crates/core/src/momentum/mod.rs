//! Momentum polytopes and cones built from Lie-theoretic data.
//!
//! Sign convention: a torus acting on `V` with weights `ν_i` has momentum
//! image `−cone{ν_i}` on `V` and `−hull{ν_i}` on `P(V)`. Nonabelian images
//! are compared with the chamber after applying `ν ↦ ν* = −w₀ν`.

mod cotangent;
mod local;
mod projective;

pub use cotangent::cotangent_homogeneous;
pub use local::{
    assemble_polytope, local_cone, reduce, vertex_condition, IsotropyCase, LocalConeSpec,
};
pub use projective::{
    lower_bound_projective, lower_bound_search, momentum_polytope_projective, naive_polytope,
    upper_bound_projective, LowerBound, SearchStrategy, EXHAUSTIVE_LIMIT,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::{QHalfspace, QPolyhedron, QVec, Rational};

/// A momentum polytope known exactly, or only between two bounds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedAnswer {
    pub exact: Option<QPolyhedron>,
    pub lower: QPolyhedron,
    pub upper: QPolyhedron,
    /// Names the argument that makes `exact` available, or why it is absent.
    pub certificate: String,
}

impl BoundedAnswer {
    pub fn exact(p: QPolyhedron, certificate: impl Into<String>) -> Self {
        BoundedAnswer {
            exact: Some(p.clone()),
            lower: p.clone(),
            upper: p,
            certificate: certificate.into(),
        }
    }

    /// Fails if `lower ⊄ upper`.
    pub fn bounds(lower: QPolyhedron, upper: QPolyhedron, certificate: impl Into<String>) -> Result<Self> {
        if !lower.is_subset_of(&upper) {
            return Err(Error::Domain("lower bound is not contained in upper bound".into()));
        }
        Ok(BoundedAnswer {
            exact: None,
            lower,
            upper,
            certificate: certificate.into(),
        })
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

fn check_weights(rs: &RootSystem, weights: &[QVec]) -> Result<()> {
    match weights.iter().find(|w| w.len() != rs.rank()) {
        Some(w) => Err(Error::shape(rs.rank(), w.len())),
        None => Ok(()),
    }
}

/// `Δ(V) = −cone{ν_i}` for a module with torus weights `ν_i`.
pub fn linear_cone_torus(rs: &RootSystem, weights: &[QVec]) -> Result<QPolyhedron> {
    check_weights(rs, weights)?;
    QPolyhedron::cone_from_rays(rs.rank(), weights.iter().map(|w| -w).collect())
}

/// `Δ(P(V)) = −hull{ν_i}`.
pub fn projective_polytope_torus(rs: &RootSystem, weights: &[QVec]) -> Result<QPolyhedron> {
    check_weights(rs, weights)?;
    if weights.is_empty() {
        return Err(Error::Empty("projective space of the zero module"));
    }
    QPolyhedron::hull(weights.iter().map(|w| -w).collect())
}

/// The momentum cone `cone hw(X)` of an affine variety, given generators of
/// its highest-weight monoid.
pub fn affine_cone_from_hw(rs: &RootSystem, generators: &[QVec]) -> Result<QPolyhedron> {
    check_weights(rs, generators)?;
    if let Some(g) = generators.iter().find(|g| !rs.is_dominant(g)) {
        return Err(Error::NotDominant(g.to_string()));
    }
    QPolyhedron::cone_from_rays(rs.rank(), generators.to_vec())
}

/// Momentum polytope of the projective closure of a conical affine variety,
/// from the polytope of its divisor at infinity.
pub fn projective_closure_polytope(infinity_polytope: &QPolyhedron) -> Result<QPolyhedron> {
    infinity_polytope.join_with_origin()
}

/// The affine momentum cone recovered from the polytope at infinity.
pub fn recover_cone(infinity_polytope: &QPolyhedron) -> Result<QPolyhedron> {
    infinity_polytope.cone_over()
}

/// The polytope at infinity of the standard embedding of `G//N`: the simplex
/// on the fundamental weights when `K` is semisimple, and the cube
/// `hull{±ζ_1 ± … ± ζ_k}` when `K` is a torus.
pub fn gelfand_infinity_polytope(rs: &RootSystem) -> Result<QPolyhedron> {
    let (ss, k) = (rs.semisimple_rank(), rs.torus_rank());
    match (ss, k) {
        (0, 0) => Err(Error::Domain("trivial group".into())),
        (_, 0) => QPolyhedron::hull((0..ss).map(|i| QVec::unit(ss, i)).collect()),
        (0, _) => QPolyhedron::hull(sign_vectors(k)),
        _ => Err(Error::unsupported(
            "polytope at infinity of G//N for a group with both semisimple and central parts",
            "use gelfand_closure_polytope, which is known in this case",
        )),
    }
}

/// Momentum polytope of the projective closure of `G//N`: the product of
/// `hull{0, π_1, …, π_r}` with the cube on the central weight lattice basis.
pub fn gelfand_closure_polytope(rs: &RootSystem) -> Result<QPolyhedron> {
    let (ss, k) = (rs.semisimple_rank(), rs.torus_rank());
    let mut simplex = vec![QVec::zeros(ss)];
    simplex.extend((0..ss).map(|i| QVec::unit(ss, i)));
    let simplex = QPolyhedron::hull(simplex)?;
    let cube = if k == 0 {
        QPolyhedron::hull(vec![QVec::zeros(0)])?
    } else {
        QPolyhedron::hull(sign_vectors(k))?
    };
    simplex.product(&cube)
}

fn sign_vectors(k: usize) -> Vec<QVec> {
    (0..1usize << k)
        .map(|bits| {
            (0..k)
                .map(|i| if bits >> i & 1 == 1 { 1 } else { -1 })
                .collect::<Vec<i64>>()
        })
        .map(|c| QVec::from_i64s(&c))
        .collect()
}

/// Whether `ν ↦ ν*` maps `p` onto itself.
pub fn star_invariance_check(rs: &RootSystem, p: &QPolyhedron) -> Result<bool> {
    if p.dim() != rs.rank() {
        return Err(Error::shape(rs.rank(), p.dim()));
    }
    Ok(&p.map_linear(&rs.star_matrix())? == p)
}

/// `𝔱*₊ ∩ [𝔨, 𝔨]`: the chamber with central coordinates set to zero.
pub fn semisimple_chamber(rs: &RootSystem) -> QPolyhedron {
    let n = rs.rank();
    let eqs = (rs.semisimple_rank()..n)
        .map(|i| QHalfspace::new(QVec::unit(n, i), Rational::zero()))
        .collect();
    let chamber = rs.chamber();
    QPolyhedron::from_halfspaces(n, chamber.facets().to_vec(), eqs).expect("chamber")
}

#[cfg(test)]
mod tests;
