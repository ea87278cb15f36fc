//! Cotangent bundles of homogeneous spaces: `Δ(T*(K/L)) = K𝔩° ∩ 𝔱*₊`.

use num_traits::Zero;

use super::{semisimple_chamber, BoundedAnswer};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};
use crate::{QPolyhedron, QVec};

/// `L = K_σ` for the face `σ = cone(wall_generators)` of the chamber; an
/// empty or zero wall means `L = T`.
pub fn cotangent_homogeneous(rs: &RootSystem, wall_generators: &[QVec]) -> Result<BoundedAnswer> {
    for g in wall_generators {
        if g.len() != rs.rank() {
            return Err(Error::shape(rs.rank(), g.len()));
        }
        if !rs.is_dominant(g) {
            return Err(Error::NotDominant(g.to_string()));
        }
    }
    let chamber = semisimple_chamber(rs);
    let wall: Vec<&QVec> = wall_generators.iter().filter(|g| !g.is_zero()).collect();
    if wall.is_empty() {
        return Ok(BoundedAnswer::exact(
            chamber,
            "L = T: Kostant convexity gives the whole (semisimple) chamber",
        ));
    }

    let rays: Vec<QVec> = rs
        .dominant_roots()
        .into_iter()
        .filter(|theta| wall.iter().any(|g| !rs.inner(theta, g).is_zero()))
        .collect();
    let lower = QPolyhedron::cone_from_rays(rs.rank(), rays)?;
    if lower == chamber {
        return Ok(BoundedAnswer::exact(
            chamber,
            "rays through dominant roots not perpendicular to the wall fill the chamber",
        ));
    }
    if is_type_a_end_wall(rs, &wall) {
        return Ok(BoundedAnswer::exact(
            lower,
            "SU(n) with wall spanned by π1 or π_{n-1}: the ray through the maximal root",
        ));
    }
    BoundedAnswer::bounds(
        lower,
        chamber,
        "bounds only: dominant-root rays below, chamber above",
    )
}

/// `K` simple of type `A_{n-1}` and `σ` the ray through `π_1` or `π_{n-1}`.
fn is_type_a_end_wall(rs: &RootSystem, wall: &[&QVec]) -> bool {
    let spec = rs.spec();
    let [f] = spec.factors.as_slice() else {
        return false;
    };
    if f.kind != CartanType::A || spec.torus_rank != 0 {
        return false;
    }
    let on_axis = |i: usize| {
        wall.iter()
            .all(|g| g.iter().enumerate().all(|(j, c)| (j == i) != c.is_zero()))
    };
    on_axis(0) || on_axis(f.rank - 1)
}
