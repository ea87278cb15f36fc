//! Root systems of compact groups `K = (K_1 × … × K_s) · T^k`.
//!
//! Weights live in fundamental-weight coordinates: `λ = Σ λ_i π_i`, so the
//! simple coroot pairing `(λ, α̌_i)` is the coordinate `λ_i`. Central torus
//! coordinates follow the semisimple ones and are fixed by the Weyl group.
//! Each simple factor carries the invariant form normalized so that long
//! roots have squared length 2.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::polyhedra::Halfspace;
use crate::{QMat, QPolyhedron, QVec, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleFactor {
    pub kind: CartanType,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let ok = match kind {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 3,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if ok {
            Ok(SimpleFactor { kind, rank })
        } else {
            Err(Error::InvalidGroup(format!("{kind:?}{rank}")))
        }
    }

    pub fn weyl_group_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.kind {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u64 << n) * fact(n),
            CartanType::D => (1u64 << (n - 1)) * fact(n),
            CartanType::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanType::F => 1152,
            CartanType::G => 12,
        }
    }

    /// Inner products `(α_i, α_j)` of the simple roots (Bourbaki numbering).
    fn gram(&self) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
        let mut g = vec![vec![Rational::zero(); n]; n];
        let link = |g: &mut Vec<Vec<Rational>>, i: usize, j: usize, x: Rational| {
            g[i][j] = x.clone();
            g[j][i] = x;
        };
        let mut diag = vec![q(2, 1); n];
        match self.kind {
            CartanType::A => {
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, q(-1, 1));
                }
            }
            CartanType::B => {
                diag[n - 1] = q(1, 1);
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, q(-1, 1));
                }
            }
            CartanType::C => {
                for d in diag.iter_mut().take(n - 1) {
                    *d = q(1, 1);
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, q(-1, 2));
                }
                link(&mut g, n - 2, n - 1, q(-1, 1));
            }
            CartanType::D => {
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, q(-1, 1));
                }
                link(&mut g, n - 3, n - 1, q(-1, 1));
            }
            CartanType::E => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (1, 3), (4, 5), (5, 6), (6, 7)] {
                    if j < n {
                        link(&mut g, i, j, q(-1, 1));
                    }
                }
            }
            CartanType::F => {
                diag[2] = q(1, 1);
                diag[3] = q(1, 1);
                link(&mut g, 0, 1, q(-1, 1));
                link(&mut g, 1, 2, q(-1, 1));
                link(&mut g, 2, 3, q(-1, 2));
            }
            CartanType::G => {
                diag[0] = q(2, 3);
                link(&mut g, 0, 1, q(-1, 1));
            }
        }
        for (i, d) in diag.into_iter().enumerate() {
            g[i][i] = d;
        }
        g
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

/// A product of simple types and a central torus, e.g. `"A2xB2xT1"`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupSpec {
    pub factors: Vec<SimpleFactor>,
    pub torus_rank: usize,
}

impl GroupSpec {
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGroup(s.to_string());
        let mut factors = Vec::new();
        let mut torus_rank = 0;
        if s.trim().is_empty() {
            return Err(bad());
        }
        for tok in s.trim().split('x') {
            let mut chars = tok.chars();
            let letter = chars.next().ok_or_else(bad)?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            let kind = match letter {
                'A' => CartanType::A,
                'B' => CartanType::B,
                'C' => CartanType::C,
                'D' => CartanType::D,
                'E' => CartanType::E,
                'F' => CartanType::F,
                'G' => CartanType::G,
                'T' if rank >= 1 => {
                    torus_rank += rank;
                    continue;
                }
                _ => return Err(bad()),
            };
            factors.push(SimpleFactor::new(kind, rank).map_err(|_| bad())?);
        }
        Ok(GroupSpec {
            factors,
            torus_rank,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        f.write_str(&parts.join("x"))
    }
}

/// A positive root with its coroot data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    /// Coefficients in the simple roots (semisimple indices).
    pub coeffs: Vec<i64>,
    /// The root in fundamental-weight coordinates.
    pub weight: QVec,
    /// `(λ, α̌) = coroot · λ`.
    pub coroot: QVec,
    pub norm2: Rational,
    pub factor: usize,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn pairing(&self, lambda: &QVec) -> Rational {
        self.coroot.dot(lambda)
    }
}

/// Reduced word in the simple reflections; indices are 0-based and the
/// reflections are applied left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn apply(&self, rs: &RootSystem, v: &QVec) -> Result<QVec> {
        self.0.iter().try_fold(v.clone(), |acc, &i| rs.reflect(i, &acc))
    }

    /// Applies the inverse element.
    pub fn apply_inverse(&self, rs: &RootSystem, v: &QVec) -> Result<QVec> {
        self.0.iter().rev().try_fold(v.clone(), |acc, &i| rs.reflect(i, &acc))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: GroupSpec,
    ss_rank: usize,
    cartan: QMat,
    simple_norm2: Vec<Rational>,
    factor_of: Vec<usize>,
    simple_roots: Vec<QVec>,
    positive_roots: Vec<Root>,
    form: QMat,
    star_perm: Vec<usize>,
}

impl RootSystem {
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        let ss = spec.semisimple_rank();
        let rank = spec.rank();
        let mut gram = vec![vec![Rational::zero(); ss]; ss];
        let mut factor_of = Vec::with_capacity(ss);
        let mut off = 0;
        for (fi, f) in spec.factors.iter().enumerate() {
            let SimpleFactor { kind, rank: n } = *f;
            SimpleFactor::new(kind, n)?;
            let g = f.gram();
            for i in 0..n {
                for j in 0..n {
                    gram[off + i][off + j] = g[i][j].clone();
                }
                factor_of.push(fi);
            }
            off += n;
        }
        let simple_norm2: Vec<Rational> = (0..ss).map(|i| gram[i][i].clone()).collect();
        let two = Rational::from_i64(2);
        let cartan = QMat::from_rows(
            (0..ss)
                .map(|i| {
                    (0..ss)
                        .map(|j| two.clone() * gram[i][j].clone() / simple_norm2[j].clone())
                        .collect()
                })
                .collect(),
        )
        .unwrap_or_else(|_| QMat::with_cols(0));

        let simple_roots: Vec<QVec> = (0..ss)
            .map(|i| {
                let mut c = cartan[i].clone().into_coords();
                c.resize(rank, Rational::zero());
                QVec::new(c)
            })
            .collect();

        // (π_i, π_j) = (C^{-1})_{ij} |α_j|^2 / 2 on the semisimple block.
        let mut form_rows = vec![vec![Rational::zero(); rank]; rank];
        if ss > 0 {
            let inv = cartan
                .inverse()
                .ok_or_else(|| Error::InvalidGroup(spec.to_string()))?;
            for i in 0..ss {
                for j in 0..ss {
                    form_rows[i][j] = inv.get(i, j).clone() * simple_norm2[j].clone() / two.clone();
                }
            }
        }
        for (i, row) in form_rows.iter_mut().enumerate().skip(ss) {
            row[i] = Rational::one();
        }
        let form = QMat::from_rows(form_rows.into_iter().map(QVec::new).collect())
            .unwrap_or_else(|_| QMat::with_cols(0));

        let mut rs = RootSystem {
            spec: spec.clone(),
            ss_rank: ss,
            cartan,
            simple_norm2,
            factor_of,
            simple_roots,
            positive_roots: Vec::new(),
            form,
            star_perm: Vec::new(),
        };
        rs.positive_roots = rs.close_positive_roots();
        rs.star_perm = (0..ss)
            .map(|i| {
                let (d, _) = rs.dominantize(&-&QVec::unit(rank, i));
                d.iter().position(|c| c.is_one()).expect("−w0 permutes fundamental weights")
            })
            .collect();
        Ok(rs)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::build(&s.parse()?)
    }

    fn close_positive_roots(&self) -> Vec<Root> {
        let ss = self.ss_rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..ss {
            let mut e = vec![0; ss];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(c) = queue.pop_front() {
            let w = self.root_weight(&c);
            for i in 0..ss {
                let p = w[i].to_integer();
                let mut next = c.clone();
                next[i] -= i64::try_from(p).expect("root pairings are small integers");
                if next.iter().all(|&x| x >= 0) && next.iter().any(|&x| x > 0) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().map(|c| self.make_root(c)).collect();
        roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coeffs.cmp(&a.coeffs))
        });
        roots
    }

    fn root_weight(&self, coeffs: &[i64]) -> QVec {
        let mut w = QVec::zeros(self.rank());
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            if *c != 0 {
                w = &w + &a.scale(&Rational::from_i64(*c));
            }
        }
        w
    }

    fn make_root(&self, coeffs: Vec<i64>) -> Root {
        let weight = self.root_weight(&coeffs);
        let mut norm2 = Rational::zero();
        // (α, α) = Σ c_i (α_i, α) and (α_i, α) = |α_i|^2/2 · (α, α̌_i)
        for (i, c) in coeffs.iter().enumerate() {
            norm2 += Rational::from_i64(*c) * self.simple_norm2[i].clone() * weight[i].clone()
                / Rational::from_i64(2);
        }
        let mut coroot = QVec::zeros(self.rank()).into_coords();
        for (i, c) in coeffs.iter().enumerate() {
            coroot[i] = Rational::from_i64(*c) * self.simple_norm2[i].clone() / norm2.clone();
        }
        let factor = coeffs
            .iter()
            .position(|&c| c != 0)
            .map(|i| self.factor_of[i])
            .unwrap_or(0);
        Root {
            coeffs,
            weight,
            coroot: QVec::new(coroot),
            norm2,
            factor,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.ss_rank
    }

    pub fn torus_rank(&self) -> usize {
        self.spec.torus_rank
    }

    /// `cartan[i][j] = (α_i, α̌_j)`; row `i` is the simple root `α_i`.
    pub fn cartan(&self) -> &QMat {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[QVec] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Index of the simple factor owning simple index `i`.
    pub fn factor_of(&self, i: usize) -> usize {
        self.factor_of[i]
    }

    /// Invariant inner product of two weights.
    pub fn inner(&self, a: &QVec, b: &QVec) -> Rational {
        a.dot(&self.form.mul_vec(b).expect("rank-length weights"))
    }

    /// `(λ, α)` for a positive root, without building the full form.
    pub fn root_inner(&self, lambda: &QVec, root: &Root) -> Rational {
        root.coeffs
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, c)| {
                acc + Rational::from_i64(*c) * self.simple_norm2[i].clone() * lambda[i].clone()
                    / Rational::from_i64(2)
            })
    }

    pub fn weyl_group_order(&self) -> u64 {
        self.spec.factors.iter().map(SimpleFactor::weyl_group_order).product()
    }

    /// `ρ`, the half sum of positive roots.
    pub fn rho(&self) -> QVec {
        let mut c = vec![Rational::one(); self.ss_rank];
        c.resize(self.rank(), Rational::zero());
        QVec::new(c)
    }

    fn check_len(&self, v: &QVec) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::shape(self.rank(), v.len()));
        }
        Ok(())
    }

    /// `s_i λ = λ − (λ, α̌_i) α_i`.
    pub fn reflect(&self, i: usize, lambda: &QVec) -> Result<QVec> {
        if i >= self.ss_rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.ss_rank,
            });
        }
        self.check_len(lambda)?;
        Ok(self.reflect_unchecked(i, lambda))
    }

    fn reflect_unchecked(&self, i: usize, lambda: &QVec) -> QVec {
        let p = &lambda[i];
        if p.is_zero() {
            return lambda.clone();
        }
        lambda - &self.simple_roots[i].scale(p)
    }

    /// Reflection in an arbitrary positive root.
    pub fn reflect_root(&self, root: &Root, lambda: &QVec) -> QVec {
        lambda - &root.weight.scale(&root.pairing(lambda))
    }

    pub fn is_dominant(&self, lambda: &QVec) -> bool {
        lambda.len() == self.rank() && lambda[..self.ss_rank].iter().all(|c| !c.is_negative())
    }

    pub fn is_strictly_dominant(&self, lambda: &QVec) -> bool {
        lambda.len() == self.rank() && lambda[..self.ss_rank].iter().all(|c| c.is_positive())
    }

    pub fn is_integral(&self, lambda: &QVec) -> bool {
        lambda.is_integral()
    }

    /// The full Weyl orbit, sorted lexicographically.
    pub fn weyl_orbit(&self, lambda: &QVec) -> Result<Vec<QVec>> {
        self.check_len(lambda)?;
        let mut seen: HashSet<QVec> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.ss_rank {
                let w = self.reflect_unchecked(i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<QVec> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Dominant representative of the orbit and a word carrying `λ` to it.
    pub fn dominantize(&self, lambda: &QVec) -> (QVec, WeylWord) {
        let mut v = lambda.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.ss_rank).find(|&i| v[i].is_negative()) {
            v = self.reflect_unchecked(i, &v);
            word.push(i);
        }
        (v, WeylWord(word))
    }

    /// `λ* = −w₀ λ` for dominant `λ`.
    pub fn star(&self, lambda: &QVec) -> Result<QVec> {
        self.check_len(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(self.dominantize(&-lambda).0)
    }

    /// `ν ↦ −w₀ ν` on all of `t*`: a permutation of the semisimple
    /// coordinates and negation on the central ones.
    pub fn star_linear(&self, nu: &QVec) -> QVec {
        let mut out = QVec::zeros(self.rank()).into_coords();
        for (i, &j) in self.star_perm.iter().enumerate() {
            out[j] = nu[i].clone();
        }
        for (i, o) in out.iter_mut().enumerate().skip(self.ss_rank) {
            *o = -nu[i].clone();
        }
        QVec::new(out)
    }

    /// Matrix of [`RootSystem::star_linear`].
    pub fn star_matrix(&self) -> QMat {
        let n = self.rank();
        QMat::from_rows(
            (0..n)
                .map(|i| self.star_linear(&QVec::unit(n, i)))
                .collect(),
        )
        .expect("square")
        .transpose()
    }

    /// Positive roots that are dominant: per simple factor the highest root,
    /// and the highest short root when two root lengths occur.
    pub fn dominant_roots(&self) -> Vec<QVec> {
        self.positive_roots
            .iter()
            .filter(|r| self.is_dominant(&r.weight))
            .map(|r| r.weight.clone())
            .collect()
    }

    /// Coordinates of `v` in the simple roots, if `v` lies in their span.
    pub fn simple_root_coords(&self, v: &QVec) -> Option<Vec<Rational>> {
        if v[self.ss_rank..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        if self.ss_rank == 0 {
            return Some(Vec::new());
        }
        let x = QVec::new(v[..self.ss_rank].to_vec());
        self.cartan
            .transpose()
            .solve(&x)
            .ok()
            .flatten()
            .map(QVec::into_coords)
    }

    /// The dominant chamber `{λ : (λ, α̌_i) ≥ 0}`.
    pub fn chamber(&self) -> QPolyhedron {
        let n = self.rank();
        let hs = (0..self.ss_rank)
            .map(|i| Halfspace::new(QVec::unit(n, i), Rational::zero()))
            .collect();
        QPolyhedron::from_halfspaces(n, hs, Vec::new()).expect("chamber")
    }

    pub fn is_root(&self, v: &QVec) -> bool {
        self.positive_roots
            .iter()
            .any(|r| &r.weight == v || r.weight == -v)
    }
}

/// Free-function forms of the root system operations.
pub fn build(spec: &GroupSpec) -> Result<RootSystem> {
    RootSystem::build(spec)
}

pub fn reflect(rs: &RootSystem, i: usize, lambda: &QVec) -> Result<QVec> {
    rs.reflect(i, lambda)
}

pub fn weyl_orbit(rs: &RootSystem, lambda: &QVec) -> Result<Vec<QVec>> {
    rs.weyl_orbit(lambda)
}

pub fn dominantize(rs: &RootSystem, lambda: &QVec) -> (QVec, WeylWord) {
    rs.dominantize(lambda)
}

pub fn star(rs: &RootSystem, lambda: &QVec) -> Result<QVec> {
    rs.star(lambda)
}

pub fn dominant_roots(rs: &RootSystem) -> Vec<QVec> {
    rs.dominant_roots()
}
