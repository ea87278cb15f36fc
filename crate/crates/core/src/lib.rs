//! Exact momentum polytopes and momentum cones of Hamiltonian actions.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactq`]: rational scalars, vectors, matrices (generic over [`Scalar`]).
//! * [`polyhedra`]: convex polyhedra in double description (generic over [`Scalar`]).
//! * [`rootsys`]: root systems, Weyl group orbits and the involution `λ ↦ λ*`.
//! * [`repweights`]: weight systems of irreducible representations.
//! * [`momentum`]: momentum polytopes, cones, local cones and their calculus.
//! * [`json`]: canonical JSON forms of the above.
//!
//! Weights are written in fundamental-weight coordinates, with central torus
//! coordinates appended. No floating point is used on weight data.
//!
//! Sign convention: for a torus acting linearly on `V` with weights `ν_i` the
//! momentum image is `−cone{ν_i}`, and for `P(V)` it is `−hull{ν_i}`. After
//! intersecting with the dominant chamber this becomes the familiar
//! `hull(W λ*)` picture.

pub mod error;
pub mod exactq;
pub mod json;
pub mod momentum;
pub mod polyhedra;
pub mod repweights;
pub mod rootsys;

pub use error::{Error, Result};
pub use exactq::{Int, Matrix, Scalar, Vector};
pub use polyhedra::{Halfspace, Polyhedron};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
pub type QScalar = Rational;
pub type QVec = Vector<Rational>;
pub type QMat = Matrix<Rational>;
pub type QHalfspace = Halfspace<Rational>;
pub type QPolyhedron = Polyhedron<Rational>;
