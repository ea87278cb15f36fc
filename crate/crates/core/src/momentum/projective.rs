//! Momentum polytopes of projectivized representations `P(V)`.
//!
//! The upper bound trims the weights `λ − α` with `(λ, α̌) = 1` from the
//! hull. The lower bound collects sets of weight vectors whose pairwise
//! root-vector matrix coefficients vanish: weights from different
//! irreducible summands (mutually orthogonal and invariant), or from the
//! same summand with a difference that is not a root. Each such set `S`
//! contributes `𝔱*₊ ∩ hull S*`, and the polytope is convex, so the hull of
//! all contributions is still inside it.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashSet};

use num_traits::One;

use super::BoundedAnswer;
use crate::error::{Error, Result};
use crate::repweights::{irrep_weights, pi_lambda, reducible_weights, WeightSystem};
use crate::rootsys::{CartanType, RootSystem, SimpleFactor};
use crate::{QPolyhedron, QVec, Rational};

/// Largest number of weights for which every maximal compatible set is
/// enumerated.
pub const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchStrategy {
    Exhaustive,
    Greedy,
}

/// A lower bound together with how it was found.
#[derive(Clone, Debug)]
pub struct LowerBound {
    pub polytope: QPolyhedron,
    pub strategy: SearchStrategy,
    pub weights: usize,
    pub sets: usize,
}

impl LowerBound {
    pub fn describe(&self) -> String {
        let how = match self.strategy {
            SearchStrategy::Exhaustive => "exhaustive",
            SearchStrategy::Greedy => "greedy",
        };
        format!(
            "{how} search over {} weights, {} compatible sets",
            self.weights, self.sets
        )
    }
}

fn check_hw(rs: &RootSystem, lambda: &QVec) -> Result<()> {
    if lambda.len() != rs.rank() {
        return Err(Error::shape(rs.rank(), lambda.len()));
    }
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// `𝔱*₊ ∩ hull Π_λ*`, which contains `Δ(P(V(λ)))`.
pub fn upper_bound_projective(rs: &RootSystem, lambda: &QVec) -> Result<QPolyhedron> {
    let pts: Vec<QVec> = pi_lambda(rs, lambda)?
        .iter()
        .map(|nu| rs.star_linear(nu))
        .collect();
    rs.chamber().intersect(&QPolyhedron::hull(pts)?)
}

/// `𝔱*₊ ∩ hull(W λ_1* ∪ … ∪ W λ_k*)`.
pub fn naive_polytope(rs: &RootSystem, hw_list: &[QVec]) -> Result<QPolyhedron> {
    if hw_list.is_empty() {
        return Err(Error::Empty("no highest weights"));
    }
    let mut pts = BTreeSet::new();
    for l in hw_list {
        check_hw(rs, l)?;
        pts.extend(rs.weyl_orbit(&rs.star(l)?)?);
    }
    rs.chamber().intersect(&QPolyhedron::hull(pts.into_iter().collect())?)
}

pub fn lower_bound_projective(rs: &RootSystem, ws: &WeightSystem) -> Result<QPolyhedron> {
    Ok(lower_bound_search(rs, ws)?.polytope)
}

struct Item {
    summand: usize,
    weight: QVec,
    orbit: QVec,
    norm: Rational,
}

pub fn lower_bound_search(rs: &RootSystem, ws: &WeightSystem) -> Result<LowerBound> {
    if ws.group() != rs.spec() {
        return Err(Error::MismatchedGroups(ws.group().to_string(), rs.spec().to_string()));
    }
    let mut items = Vec::new();
    for k in 0..ws.summands().len() {
        for nu in ws.summand_entries(rs, k).into_keys() {
            let (orbit, _) = rs.dominantize(&nu);
            let norm = rs.inner(&nu, &nu);
            items.push(Item {
                summand: k,
                weight: nu,
                orbit,
                norm,
            });
        }
    }
    if items.is_empty() {
        return Err(Error::Empty("weight system without weights"));
    }

    let roots: HashSet<QVec> = rs
        .positive_roots()
        .iter()
        .flat_map(|r| [r.weight.clone(), -&r.weight])
        .collect();
    let n = items.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let ok = items[i].summand != items[j].summand
                || !roots.contains(&(&items[i].weight - &items[j].weight));
            adj[i][j] = ok;
            adj[j][i] = ok;
        }
    }

    let (strategy, sets) = if n <= EXHAUSTIVE_LIMIT {
        (SearchStrategy::Exhaustive, maximal_cliques(&adj))
    } else {
        (SearchStrategy::Greedy, greedy_cliques(&items, &adj))
    };

    let chamber = rs.chamber();
    let mut seen: HashSet<Vec<QVec>> = HashSet::new();
    let mut points: BTreeSet<QVec> = BTreeSet::new();
    for set in &sets {
        let mut star: Vec<QVec> = set.iter().map(|&i| rs.star_linear(&items[i].weight)).collect();
        star.sort();
        if !seen.insert(star.clone()) {
            continue;
        }
        let region = chamber.intersect(&QPolyhedron::hull(star)?)?;
        points.extend(region.points().iter().cloned());
    }
    let polytope = if points.is_empty() {
        QPolyhedron::empty(rs.rank())
    } else {
        QPolyhedron::hull(points.into_iter().collect())?
    };
    Ok(LowerBound {
        polytope,
        strategy,
        weights: n,
        sets: sets.len(),
    })
}

/// All maximal cliques (Bron–Kerbosch with pivoting); `adj.len() ≤ 32`.
fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let masks: Vec<u32> = adj
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &b)| b).fold(0u32, |m, (j, _)| m | 1 << j))
        .collect();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(0, all, 0, &masks, &mut out);
    out.into_iter()
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

fn bron_kerbosch(r: u32, mut p: u32, mut x: u32, adj: &[u32], out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let px = p | x;
    let pivot = (0..adj.len())
        .filter(|&u| px >> u & 1 == 1)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p ∪ x is nonempty");
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u32 << v;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= !bit;
        x |= bit;
        cand &= !bit;
    }
}

/// One maximal clique per seed, extended preferring the seed's own Weyl
/// orbit, then longer weights.
fn greedy_cliques(items: &[Item], adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for seed in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&j| j != seed).collect();
        order.sort_by_key(|&j| {
            let same = items[j].summand == items[seed].summand && items[j].orbit == items[seed].orbit;
            (!same, Reverse(items[j].norm.clone()), items[j].weight.clone(), items[j].summand)
        });
        let mut clique = vec![seed];
        for j in order {
            if clique.iter().all(|&c| adj[c][j]) {
                clique.push(j);
            }
        }
        clique.sort_unstable();
        out.insert(clique);
    }
    out.into_iter().collect()
}

fn has_unit_simple_pairing(rs: &RootSystem, hw_list: &[QVec]) -> bool {
    hw_list
        .iter()
        .any(|l| l[..rs.semisimple_rank()].iter().any(One::is_one))
}

fn is_su4_listed_weight(rs: &RootSystem, lambda: &QVec) -> bool {
    let spec = rs.spec();
    if spec.torus_rank != 0 || spec.factors != [SimpleFactor { kind: CartanType::A, rank: 3 }] {
        return false;
    }
    let listed: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    listed.iter().any(|w| &QVec::from_i64s(w) == lambda)
}

/// `Δ(P(V))` for `V = ⊕ V(λ_j)`, exactly when a sufficient condition holds
/// and otherwise as a pair of bounds.
pub fn momentum_polytope_projective(rs: &RootSystem, hw_list: &[QVec]) -> Result<BoundedAnswer> {
    if hw_list.is_empty() {
        return Err(Error::Empty("no highest weights"));
    }
    for l in hw_list {
        check_hw(rs, l)?;
    }

    if !has_unit_simple_pairing(rs, hw_list) {
        return Ok(BoundedAnswer::exact(
            naive_polytope(rs, hw_list)?,
            "no simple coroot pairing equals 1: chamber ∩ hull of the Weyl orbits of λ*",
        ));
    }
    if let [lambda] = hw_list {
        if rs.rank() <= 2 {
            return Ok(BoundedAnswer::exact(
                upper_bound_projective(rs, lambda)?,
                "rank at most two: the trimmed hull chamber ∩ hull Π_λ* is sharp",
            ));
        }
        if is_su4_listed_weight(rs, lambda) {
            return Ok(BoundedAnswer::exact(
                upper_bound_projective(rs, lambda)?,
                "SU(4) with λ ∈ {π1, π2, π3, π1+π2+π3}: the trimmed hull is sharp",
            ));
        }
    }
    let first = &hw_list[0];
    if hw_list.len() > rs.rank() && hw_list.iter().all(|l| l == first) {
        return Ok(BoundedAnswer::exact(
            naive_polytope(rs, hw_list)?,
            "at least rank+1 copies of one irreducible: chamber ∩ hull W λ*",
        ));
    }

    let upper = match hw_list {
        [lambda] => upper_bound_projective(rs, lambda)?,
        _ => naive_polytope(rs, hw_list)?,
    };
    let ws = if hw_list.len() == 1 {
        irrep_weights(rs, first)?
    } else {
        reducible_weights(rs, hw_list)?
    };
    let lower = lower_bound_search(rs, &ws)?;
    if lower.polytope == upper {
        return Ok(BoundedAnswer::exact(
            upper,
            format!("lower and upper bounds coincide ({})", lower.describe()),
        ));
    }
    BoundedAnswer::bounds(
        lower.polytope.clone(),
        upper,
        format!("bounds only; no sufficient condition applies ({})", lower.describe()),
    )
}
