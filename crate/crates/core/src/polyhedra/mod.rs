//! Exact rational convex polyhedra in double description.
//!
//! A [`Polyhedron`] always carries both descriptions in canonical form:
//!
//! * generators: vertices, extreme rays and a lineality basis. The lineality
//!   basis is in reduced row echelon form scaled to primitive integers;
//!   vertices and rays are reduced modulo it (zero at its pivot columns),
//!   rays scaled to primitive integer vectors.
//! * constraints: affine-hull equalities (echelon form, primitive) and
//!   irredundant facet inequalities `normal · x ≥ offset`, reduced modulo the
//!   equalities and scaled to primitive integers.
//!
//! All lists are sorted, so `==` is equality of sets. The empty polyhedron is
//! an ordinary value.

pub(crate) mod dd;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::{primitive_integer, Matrix, Rref, Scalar, Vector};

/// The closed halfspace `normal · x ≥ offset`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace<S> {
    pub normal: Vector<S>,
    pub offset: S,
}

impl<S: Scalar> Halfspace<S> {
    pub fn new(normal: Vector<S>, offset: S) -> Self {
        Halfspace { normal, offset }
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        self.normal.dot(x) >= self.offset
    }

    fn value(&self, x: &Vector<S>) -> S {
        self.normal.dot(x) - self.offset.clone()
    }

    fn augmented(&self) -> Vector<S> {
        let mut v = self.normal.clone().into_coords();
        v.push(self.offset.clone());
        Vector::new(v)
    }

    fn from_augmented(v: Vector<S>) -> Self {
        let mut c = v.into_coords();
        let offset = c.pop().expect("augmented row has an offset");
        Halfspace {
            normal: Vector::new(c),
            offset,
        }
    }

    /// Homogenized row `(-offset, normal)` with integer entries.
    fn homogeneous_row(&self) -> Vec<S::Int> {
        let mut v = vec![-self.offset.clone()];
        v.extend(self.normal.iter().cloned());
        primitive_integer(&v).unwrap_or_else(|| vec![S::Int::zero(); v.len()])
    }
}

impl<S: Scalar> fmt::Display for Halfspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · x ≥ {}", self.normal, self.offset)
    }
}

impl<S: Scalar> fmt::Debug for Halfspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polyhedron<S> {
    dim: usize,
    points: Vec<Vector<S>>,
    rays: Vec<Vector<S>>,
    lines: Vec<Vector<S>>,
    equalities: Vec<Halfspace<S>>,
    facets: Vec<Halfspace<S>>,
}

struct Generators<S> {
    points: Vec<Vector<S>>,
    rays: Vec<Vector<S>>,
    lines: Vec<Vector<S>>,
}

struct Constraints<S> {
    equalities: Vec<Halfspace<S>>,
    facets: Vec<Halfspace<S>>,
}

fn check_dims<S: Scalar>(dim: usize, vs: &[Vector<S>]) -> Result<()> {
    match vs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::shape(dim, v.len())),
        None => Ok(()),
    }
}

fn ints_to_vec<S: Scalar>(v: &[S::Int]) -> Vector<S> {
    v.iter().cloned().map(S::from_int).collect()
}

/// Facets and equalities of the polyhedron generated by `g`, which must have
/// at least one point.
fn generators_to_constraints<S: Scalar>(dim: usize, g: &Generators<S>) -> Constraints<S> {
    let hom = |lead: S, v: &Vector<S>| {
        let mut row = vec![lead];
        row.extend(v.iter().cloned());
        primitive_integer(&row).unwrap_or_else(|| vec![S::Int::zero(); dim + 1])
    };
    let mut rows = Vec::new();
    for p in &g.points {
        rows.push(hom(S::one(), p));
    }
    for r in &g.rays {
        rows.push(hom(S::zero(), r));
    }
    for l in &g.lines {
        rows.push(hom(S::zero(), l));
        rows.push(hom(S::zero(), &-l));
    }
    let dual = dd::cone_generators(dim + 1, &rows);
    let split = |v: &[S::Int]| {
        let normal = ints_to_vec::<S>(&v[1..]);
        let offset = -S::from_int(v[0].clone());
        Halfspace { normal, offset }
    };
    Constraints {
        equalities: dual.lines.iter().map(|v| split(v)).collect(),
        facets: dual
            .rays
            .iter()
            .map(|v| split(v))
            .filter(|h| !h.normal.is_zero())
            .collect(),
    }
}

/// Vertices, rays and lineality of the constraint system, or `None` if empty.
fn constraints_to_generators<S: Scalar>(dim: usize, c: &Constraints<S>) -> Option<Generators<S>> {
    let mut rows = Vec::new();
    let mut t = vec![S::Int::zero(); dim + 1];
    t[0] = S::Int::one();
    rows.push(t);
    for e in &c.equalities {
        rows.push(e.homogeneous_row());
        rows.push(
            Halfspace::new(-&e.normal, -e.offset.clone()).homogeneous_row(),
        );
    }
    for h in &c.facets {
        rows.push(h.homogeneous_row());
    }
    let cone = dd::cone_generators(dim + 1, &rows);
    let mut g = Generators {
        points: Vec::new(),
        rays: Vec::new(),
        lines: cone.lines.iter().map(|l| ints_to_vec(&l[1..])).collect(),
    };
    for r in &cone.rays {
        if r[0].is_zero() {
            g.rays.push(ints_to_vec(&r[1..]));
        } else {
            let t = S::from_int(r[0].clone());
            g.points
                .push(r[1..].iter().map(|x| S::from_int(x.clone()) / t.clone()).collect());
        }
    }
    if g.points.is_empty() {
        None
    } else {
        Some(g)
    }
}

fn primitive_rows<S: Scalar>(rref: &Rref<S>) -> Vec<Vector<S>> {
    rref.rows.iter().map(Vector::primitive).collect()
}

impl<S: Scalar> Polyhedron<S> {
    pub fn empty(dim: usize) -> Self {
        Polyhedron {
            dim,
            points: Vec::new(),
            rays: Vec::new(),
            lines: Vec::new(),
            equalities: Vec::new(),
            facets: vec![Halfspace::new(Vector::zeros(dim), S::one())],
        }
    }

    pub fn universe(dim: usize) -> Self {
        Self::from_halfspaces(dim, Vec::new(), Vec::new()).expect("no constraints")
    }

    /// The polyhedron `hull(points) + cone(rays) + span(lines)`.
    pub fn from_generators(
        dim: usize,
        points: Vec<Vector<S>>,
        rays: Vec<Vector<S>>,
        lines: Vec<Vector<S>>,
    ) -> Result<Self> {
        check_dims(dim, &points)?;
        check_dims(dim, &rays)?;
        check_dims(dim, &lines)?;
        if points.is_empty() {
            if rays.is_empty() && lines.is_empty() {
                return Ok(Self::empty(dim));
            }
            return Err(Error::Empty("a polyhedron with rays needs at least one point"));
        }
        let g = Generators {
            points,
            rays: rays.into_iter().filter(|r| !r.is_zero()).collect(),
            lines: lines.into_iter().filter(|l| !l.is_zero()).collect(),
        };
        let c = generators_to_constraints(dim, &g);
        let g = constraints_to_generators(dim, &c).expect("generated polyhedron is nonempty");
        Ok(Self::canonical(dim, g, c))
    }

    /// The polyhedron `{x : h.normal · x ≥ h.offset for h in inequalities,
    /// e.normal · x = e.offset for e in equalities}`.
    pub fn from_halfspaces(
        dim: usize,
        inequalities: Vec<Halfspace<S>>,
        equalities: Vec<Halfspace<S>>,
    ) -> Result<Self> {
        for h in inequalities.iter().chain(&equalities) {
            if h.normal.len() != dim {
                return Err(Error::shape(dim, h.normal.len()));
            }
        }
        let c = Constraints {
            equalities,
            facets: inequalities,
        };
        match constraints_to_generators(dim, &c) {
            None => Ok(Self::empty(dim)),
            Some(g) => {
                let c = generators_to_constraints(dim, &g);
                Ok(Self::canonical(dim, g, c))
            }
        }
    }

    /// Convex hull of a nonempty finite point set.
    pub fn hull(points: Vec<Vector<S>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::Empty("hull of no points"))?.len();
        Self::from_generators(dim, points, Vec::new(), Vec::new())
    }

    /// Convex cone spanned by `rays`; the origin cone when `rays` is empty.
    pub fn cone_from_rays(dim: usize, rays: Vec<Vector<S>>) -> Result<Self> {
        Self::from_generators(dim, vec![Vector::zeros(dim)], rays, Vec::new())
    }

    fn canonical(dim: usize, g: Generators<S>, c: Constraints<S>) -> Self {
        let line_basis = Matrix::from_rows(g.lines)
            .unwrap_or_else(|_| Matrix::with_cols(dim))
            .rref();
        let mut lines = primitive_rows(&line_basis);
        lines.sort();

        let mut rays: Vec<_> = g
            .rays
            .iter()
            .map(|r| line_basis.reduce(r).primitive())
            .filter(|r| !r.is_zero())
            .collect();
        rays.sort();
        rays.dedup();

        let mut points: Vec<_> = g.points.iter().map(|p| line_basis.reduce(p)).collect();
        points.sort();
        points.dedup();

        let eq_rows: Vec<_> = c.equalities.iter().map(Halfspace::augmented).collect();
        let eq_basis = Matrix::from_rows(eq_rows)
            .unwrap_or_else(|_| Matrix::with_cols(dim + 1))
            .rref();
        let mut equalities: Vec<_> = primitive_rows(&eq_basis)
            .into_iter()
            .map(Halfspace::from_augmented)
            .collect();
        equalities.sort();

        let mut facets: Vec<_> = c
            .facets
            .iter()
            .map(|h| Halfspace::from_augmented(eq_basis.reduce(&h.augmented()).primitive()))
            .collect();
        facets.sort();
        facets.dedup();

        Polyhedron {
            dim,
            points,
            rays,
            lines,
            equalities,
            facets,
        }
    }

    /// Rebuilds the canonical form from the constraint description alone.
    pub fn dd_convert(&self) -> Self {
        if self.is_empty() {
            return Self::empty(self.dim);
        }
        Self::from_halfspaces(self.dim, self.facets.clone(), self.equalities.clone())
            .expect("dimensions already checked")
    }

    /// Rebuilds the canonical form from the generator description alone.
    pub fn from_own_generators(&self) -> Self {
        Self::from_generators(
            self.dim,
            self.points.clone(),
            self.rays.clone(),
            self.lines.clone(),
        )
        .expect("dimensions already checked")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Vertices (modulo lineality).
    pub fn points(&self) -> &[Vector<S>] {
        &self.points
    }

    pub fn rays(&self) -> &[Vector<S>] {
        &self.rays
    }

    pub fn lines(&self) -> &[Vector<S>] {
        &self.lines
    }

    pub fn equalities(&self) -> &[Halfspace<S>] {
        &self.equalities
    }

    pub fn facets(&self) -> &[Halfspace<S>] {
        &self.facets
    }

    /// All constraints as `≥` halfspaces, equalities emitted as opposite pairs.
    pub fn halfspaces(&self) -> Vec<Halfspace<S>> {
        let mut out = self.facets.clone();
        for e in &self.equalities {
            out.push(e.clone());
            out.push(Halfspace::new(-&e.normal, -e.offset.clone()));
        }
        out.sort();
        out
    }

    pub fn is_polytope(&self) -> bool {
        !self.is_empty() && self.rays.is_empty() && self.lines.is_empty()
    }

    pub fn is_cone(&self) -> bool {
        self.points.len() == 1 && self.points[0].is_zero()
    }

    /// Dimension of the affine hull; `None` for the empty set.
    pub fn affine_dim(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.dim - self.equalities.len())
    }

    /// True iff the cone contains no line.
    pub fn is_proper(&self) -> Result<bool> {
        if !self.is_cone() {
            return Err(Error::NotCone);
        }
        Ok(self.lines.is_empty())
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        if self.is_empty() || x.len() != self.dim {
            return false;
        }
        self.equalities.iter().all(|e| e.value(x).is_zero())
            && self.facets.iter().all(|h| h.contains(x))
    }

    fn contains_direction(&self, r: &Vector<S>) -> bool {
        self.equalities.iter().all(|e| e.normal.dot(r).is_zero())
            && self.facets.iter().all(|h| !h.normal.dot(r).is_negative())
    }

    /// Containment checked on generators against facets.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        if other.is_empty() {
            return false;
        }
        self.points.iter().all(|p| other.contains(p))
            && self.rays.iter().all(|r| other.contains_direction(r))
            && self
                .lines
                .iter()
                .all(|l| other.contains_direction(l) && other.contains_direction(&-l))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::shape(self.dim, other.dim));
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(self.dim));
        }
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equalities.clone();
        eqs.extend(other.equalities.iter().cloned());
        Self::from_halfspaces(self.dim, ineqs, eqs)
    }

    /// Intersection of a nonempty family; `None` for an empty family.
    pub fn intersect_all<'a>(items: impl IntoIterator<Item = &'a Self>) -> Result<Option<Self>> {
        let mut it = items.into_iter();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let dim = first.dim;
        let mut ineqs = first.facets.clone();
        let mut eqs = first.equalities.clone();
        let mut empty = first.is_empty();
        for p in it {
            if p.dim != dim {
                return Err(Error::shape(dim, p.dim));
            }
            empty |= p.is_empty();
            ineqs.extend(p.facets.iter().cloned());
            eqs.extend(p.equalities.iter().cloned());
        }
        if empty {
            return Ok(Some(Self::empty(dim)));
        }
        Self::from_halfspaces(dim, ineqs, eqs).map(Some)
    }

    /// `hull(vertices ∪ {0})`.
    pub fn join_with_origin(&self) -> Result<Self> {
        if !self.rays.is_empty() || !self.lines.is_empty() {
            return Err(Error::NotPolytope);
        }
        let mut pts = self.points.clone();
        pts.push(Vector::zeros(self.dim));
        Self::from_generators(self.dim, pts, Vec::new(), Vec::new())
    }

    /// The cone spanned by the vertices of a polytope.
    pub fn cone_over(&self) -> Result<Self> {
        if !self.rays.is_empty() || !self.lines.is_empty() {
            return Err(Error::NotPolytope);
        }
        Self::cone_from_rays(self.dim, self.points.clone())
    }

    pub fn recession_cone(&self) -> Self {
        if self.is_empty() {
            return Self::cone_from_rays(self.dim, Vec::new()).expect("origin cone");
        }
        Self::from_generators(
            self.dim,
            vec![Vector::zeros(self.dim)],
            self.rays.clone(),
            self.lines.clone(),
        )
        .expect("dimensions already checked")
    }

    pub fn shift(&self, v: &Vector<S>) -> Result<Self> {
        if v.len() != self.dim {
            return Err(Error::shape(self.dim, v.len()));
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        Self::from_generators(
            self.dim,
            self.points.iter().map(|p| p + v).collect(),
            self.rays.clone(),
            self.lines.clone(),
        )
    }

    /// Intersects with `span(basis)` and expresses the result in the
    /// coordinates of `basis`: `c ↦ Σ c_i basis_i`.
    pub fn slice(&self, basis: &[Vector<S>]) -> Result<Self> {
        check_dims(self.dim, basis)?;
        let k = basis.len();
        let b = Matrix::from_rows(basis.to_vec()).unwrap_or_else(|_| Matrix::with_cols(self.dim));
        if b.rank() != k {
            return Err(Error::DependentBasis);
        }
        if self.is_empty() {
            return Ok(Self::empty(k));
        }
        let pull = |h: &Halfspace<S>| -> Halfspace<S> {
            Halfspace::new(b.mul_vec(&h.normal).expect("shape checked"), h.offset.clone())
        };
        Self::from_halfspaces(
            k,
            self.facets.iter().map(pull).collect(),
            self.equalities.iter().map(pull).collect(),
        )
    }

    /// Image under the linear map `x ↦ M x` with `M` square of size `dim`.
    pub fn map_linear(&self, m: &Matrix<S>) -> Result<Self> {
        if m.ncols() != self.dim {
            return Err(Error::shape(self.dim, m.ncols()));
        }
        if self.is_empty() {
            return Ok(Self::empty(m.nrows()));
        }
        let f = |vs: &[Vector<S>]| -> Vec<Vector<S>> {
            vs.iter().map(|v| m.mul_vec(v).expect("shape checked")).collect()
        };
        Self::from_generators(m.nrows(), f(&self.points), f(&self.rays), f(&self.lines))
    }

    /// Cartesian product `self × other`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let dim = self.dim + other.dim;
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(dim));
        }
        let zl = Vector::zeros(self.dim);
        let zr = Vector::zeros(other.dim);
        let mut points = Vec::new();
        for p in &self.points {
            for q in &other.points {
                points.push(p.concat(q));
            }
        }
        let rays = self
            .rays
            .iter()
            .map(|r| r.concat(&zr))
            .chain(other.rays.iter().map(|r| zl.concat(r)))
            .collect();
        let lines = self
            .lines
            .iter()
            .map(|l| l.concat(&zr))
            .chain(other.lines.iter().map(|l| zl.concat(l)))
            .collect();
        Self::from_generators(dim, points, rays, lines)
    }
}

impl<S: Scalar> fmt::Display for Polyhedron<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅ ⊂ Q^{}", self.dim);
        }
        write!(f, "points {:?}", self.points)?;
        if !self.rays.is_empty() {
            write!(f, " rays {:?}", self.rays)?;
        }
        if !self.lines.is_empty() {
            write!(f, " lines {:?}", self.lines)?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Polyhedron<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polyhedron")
            .field("dim", &self.dim)
            .field("points", &self.points)
            .field("rays", &self.rays)
            .field("lines", &self.lines)
            .field("equalities", &self.equalities)
            .field("facets", &self.facets)
            .finish()
    }
}

/// Free-function forms matching the operation names used elsewhere.
pub fn hull<S: Scalar>(points: Vec<Vector<S>>) -> Result<Polyhedron<S>> {
    Polyhedron::hull(points)
}

pub fn cone_from_rays<S: Scalar>(dim: usize, rays: Vec<Vector<S>>) -> Result<Polyhedron<S>> {
    Polyhedron::cone_from_rays(dim, rays)
}

pub fn intersect<S: Scalar>(a: &Polyhedron<S>, b: &Polyhedron<S>) -> Result<Polyhedron<S>> {
    a.intersect(b)
}
