//! Independent oracles and random generators shared by the integration tests.

#![allow(dead_code)]

use momentum_core::{QHalfspace, QPolyhedron, QVec, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn v(c: &[i64]) -> QVec {
    QVec::from_i64s(c)
}

/// Whether `A x = b, x ≥ 0` is feasible, by phase one of the tableau simplex
/// method with Bland's rule in exact arithmetic.
pub fn lp_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // Columns: n structural, then m artificial, then the right-hand side.
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let mut row: Vec<Rational> = a[i]
                .iter()
                .map(|x| if flip { -x } else { x.clone() })
                .collect();
            row.extend((0..m).map(|j| if i == j { q(1) } else { q(0) }));
            row.push(if flip { -&b[i] } else { b[i].clone() });
            row
        })
        .collect();
    let width = n + m + 1;
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Objective: minimize the sum of artificials; reduced costs row.
    let mut cost = vec![q(0); width];
    for row in &t {
        for (c, x) in cost.iter_mut().zip(row) {
            *c -= x;
        }
    }
    for c in cost.iter_mut().skip(n).take(m) {
        *c = q(0);
    }
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else {
            // Unbounded in phase one cannot happen; the objective is bounded by 0.
            unreachable!("phase one is bounded");
        };
        let pivot = t[p][enter].clone();
        for x in t[p].iter_mut() {
            *x /= &pivot;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
        basis[p] = enter;
    }
    cost[width - 1].is_zero()
}

/// Whether `x ∈ hull(points) + cone(rays)`.
pub fn lp_member(points: &[QVec], rays: &[QVec], x: &QVec) -> bool {
    let d = x.len();
    let cols: Vec<(&QVec, bool)> = points
        .iter()
        .map(|p| (p, true))
        .chain(rays.iter().map(|r| (r, false)))
        .collect();
    let mut a: Vec<Vec<Rational>> = (0..d)
        .map(|i| cols.iter().map(|(c, _)| c[i].clone()).collect())
        .collect();
    a.push(cols.iter().map(|&(_, is_pt)| if is_pt { q(1) } else { q(0) }).collect());
    let mut b: Vec<Rational> = x.iter().cloned().collect();
    b.push(q(1));
    lp_feasible(&a, &b)
}

pub fn random_int_vec(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> QVec {
    QVec::new((0..d).map(|_| q(rng.gen_range(-bound..=bound))).collect())
}

pub fn random_rational_vec(rng: &mut ChaCha8Rng, d: usize, bound: i64, den: i64) -> QVec {
    QVec::new(
        (0..d)
            .map(|_| qf(rng.gen_range(-bound * den..=bound * den), den))
            .collect(),
    )
}

pub fn random_points(rng: &mut ChaCha8Rng, d: usize, count: usize, bound: i64) -> Vec<QVec> {
    (0..count).map(|_| random_int_vec(rng, d, bound)).collect()
}

/// A random polyhedron given by generators, possibly unbounded.
pub fn random_polyhedron(rng: &mut ChaCha8Rng, d: usize) -> QPolyhedron {
    let count = rng.gen_range(1..=d + 4);
    let pts = random_points(rng, d, count, 4);
    let rays = if rng.gen_bool(0.3) {
        let count = rng.gen_range(1..=2);
        random_points(rng, d, count, 2)
    } else {
        Vec::new()
    };
    let lines = if rng.gen_bool(0.1) {
        random_points(rng, d, 1, 2)
    } else {
        Vec::new()
    };
    QPolyhedron::from_generators(d, pts, rays, lines).expect("generators of equal length")
}

/// The box `|x_i| ≤ bound` as halfspaces `±x_i ≥ −bound`, written without
/// any hull computation.
pub fn box_halfspaces(d: usize, bound: i64) -> Vec<QHalfspace> {
    (0..d)
        .flat_map(|i| {
            [1, -1].map(|s| {
                let normal: QVec = (0..d).map(|j| q(if i == j { s } else { 0 })).collect();
                QHalfspace::new(normal, q(-bound))
            })
        })
        .collect()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}
