//! Weight systems of finite-dimensional representations.
//!
//! Multiplicities of an irreducible module are computed with Freudenthal's
//! recursion over its dominant weights and stored on those representatives
//! only; the full Weyl-invariant weight map is expanded on demand.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::rootsys::{GroupSpec, RootSystem};
use crate::{QVec, Rational};

/// One irreducible summand: its highest weight and the multiplicities of
/// its dominant weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Summand {
    pub highest_weight: QVec,
    pub dominant: BTreeMap<QVec, u64>,
}

/// Weights with multiplicities of a direct sum of irreducible modules.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightSystem {
    group: GroupSpec,
    summands: Vec<Summand>,
}

impl WeightSystem {
    pub fn empty(rs: &RootSystem) -> Self {
        WeightSystem {
            group: rs.spec().clone(),
            summands: Vec::new(),
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn hw_list(&self) -> Vec<QVec> {
        self.summands.iter().map(|s| s.highest_weight.clone()).collect()
    }

    /// Distinct weights of summand `k` with their multiplicities.
    pub fn summand_entries(&self, rs: &RootSystem, k: usize) -> BTreeMap<QVec, u64> {
        let mut out = BTreeMap::new();
        for (mu, m) in &self.summands[k].dominant {
            for nu in rs.weyl_orbit(mu).expect("weights have the group's rank") {
                out.insert(nu, *m);
            }
        }
        out
    }

    /// The full weight map, multiplicities summed over summands.
    pub fn entries(&self, rs: &RootSystem) -> BTreeMap<QVec, u64> {
        let mut out: BTreeMap<QVec, u64> = BTreeMap::new();
        for k in 0..self.summands.len() {
            for (nu, m) in self.summand_entries(rs, k) {
                *out.entry(nu).or_insert(0) += m;
            }
        }
        out
    }

    pub fn mult(&self, rs: &RootSystem, nu: &QVec) -> u64 {
        let (d, _) = rs.dominantize(nu);
        self.summands
            .iter()
            .map(|s| s.dominant.get(&d).copied().unwrap_or(0))
            .sum()
    }

    /// Sum of all multiplicities.
    pub fn dim(&self, rs: &RootSystem) -> BigInt {
        let mut total = BigInt::zero();
        for s in &self.summands {
            for (mu, m) in &s.dominant {
                let orbit = rs.weyl_orbit(mu).expect("weights have the group's rank").len();
                total += BigInt::from(*m) * BigInt::from(orbit);
            }
        }
        total
    }

    fn check_group(&self, rs: &RootSystem) -> Result<()> {
        if &self.group != rs.spec() {
            return Err(Error::MismatchedGroups(
                self.group.to_string(),
                rs.spec().to_string(),
            ));
        }
        Ok(())
    }
}

fn check_highest_weight(rs: &RootSystem, lambda: &QVec) -> Result<Vec<i64>> {
    if lambda.len() != rs.rank() {
        return Err(Error::shape(rs.rank(), lambda.len()));
    }
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    lambda
        .iter()
        .map(|c| c.to_integer().to_i64())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Domain(format!("highest weight {lambda} too large")))
}

fn to_qvec(v: &[i64]) -> QVec {
    QVec::from_i64s(v)
}

/// Integer data for the recursion: simple roots, positive roots, and the
/// invariant form scaled to integer entries.
struct IntData {
    ss: usize,
    simple: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
}

impl IntData {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let ints = |v: &QVec| -> Vec<i64> {
            v.iter()
                .map(|c| c.to_integer().to_i64().expect("root coordinates are small"))
                .collect()
        };
        let mut lcm = BigInt::one();
        let mut g = vec![vec![Rational::zero(); n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = rs.inner(&QVec::unit(n, i), &QVec::unit(n, j));
                lcm = lcm.lcm(x.denom());
            }
        }
        let scale = Rational::from_int(lcm);
        let form = g
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * &scale).to_integer().to_i64().expect("small form"))
                    .collect()
            })
            .collect();
        IntData {
            ss: rs.semisimple_rank(),
            simple: rs.simple_roots().iter().map(ints).collect(),
            positive: rs.positive_roots().iter().map(|r| ints(&r.weight)).collect(),
            form,
        }
    }

    fn inner(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut s = 0i128;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                s += i128::from(*x) * i128::from(self.form[i][j]) * i128::from(*y);
            }
        }
        s
    }

    fn is_dominant(&self, v: &[i64]) -> bool {
        v[..self.ss].iter().all(|&c| c >= 0)
    }

    fn dominantize(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        while let Some(i) = (0..self.ss).find(|&i| v[i] < 0) {
            let p = v[i];
            for (x, a) in v.iter_mut().zip(&self.simple[i]) {
                *x -= p * a;
            }
        }
        v
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_scaled(a: &[i64], k: i64, b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Dominant weights of the irreducible module with highest weight `lambda`
/// and their multiplicities (Freudenthal).
fn dominant_multiplicities(rs: &RootSystem, lambda: &[i64]) -> BTreeMap<QVec, u64> {
    let d = IntData::new(rs);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.to_vec());
    queue.push_back(lambda.to_vec());
    while let Some(mu) = queue.pop_front() {
        for a in &d.positive {
            let nu = sub(&mu, a);
            if d.is_dominant(&nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }

    let rho: Vec<i64> = (0..rs.rank()).map(|i| i64::from(i < d.ss)).collect();
    let shifted_norm = |mu: &[i64]| {
        let s = add_scaled(mu, 1, &rho);
        d.inner(&s, &s)
    };
    let top = shifted_norm(lambda);
    let mut order: Vec<(i128, Vec<i64>)> = seen.into_iter().map(|m| (shifted_norm(&m), m)).collect();
    // |μ+ρ|² strictly increases along the dominance order on dominant weights.
    order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (norm, mu) in order {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut num = 0i128;
        for a in &d.positive {
            for k in 1.. {
                let nu = add_scaled(&mu, k, a);
                let Some(m) = mult.get(&d.dominantize(&nu)) else {
                    break;
                };
                num += i128::from(*m) * d.inner(&nu, a);
            }
        }
        let den = top - norm;
        let m = 2 * num / den;
        debug_assert_eq!(2 * num % den, 0);
        mult.insert(mu, u64::try_from(m).expect("nonnegative multiplicity"));
    }
    mult.into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|(mu, m)| (to_qvec(&mu), m))
        .collect()
}

/// All weights of the irreducible module with highest weight `lambda`.
pub fn irrep_weights(rs: &RootSystem, lambda: &QVec) -> Result<WeightSystem> {
    let l = check_highest_weight(rs, lambda)?;
    Ok(WeightSystem {
        group: rs.spec().clone(),
        summands: vec![Summand {
            highest_weight: lambda.clone(),
            dominant: dominant_multiplicities(rs, &l),
        }],
    })
}

/// Weight system of `⊕ V(λ_j)`.
pub fn reducible_weights(rs: &RootSystem, hw_list: &[QVec]) -> Result<WeightSystem> {
    let systems = hw_list
        .iter()
        .map(|l| irrep_weights(rs, l))
        .collect::<Result<Vec<_>>>()?;
    union_weights(rs, &systems)
}

/// Weyl dimension formula `Π (λ+ρ, α̌)/(ρ, α̌)`.
pub fn dim(rs: &RootSystem, lambda: &QVec) -> Result<BigInt> {
    check_highest_weight(rs, lambda)?;
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut q = Rational::one();
    for a in rs.positive_roots() {
        q = q * a.pairing(&shifted) / a.pairing(&rho);
    }
    debug_assert!(q.is_integer());
    Ok(q.to_integer())
}

/// Weights of `V(λ)` that are not of the form `λ − α` for a positive root
/// `α` with `(λ, α̌) = 1`.
pub fn pi_lambda(rs: &RootSystem, lambda: &QVec) -> Result<Vec<QVec>> {
    let ws = irrep_weights(rs, lambda)?;
    let excluded: HashSet<QVec> = rs
        .positive_roots()
        .iter()
        .filter(|a| a.pairing(lambda).is_one())
        .map(|a| lambda - &a.weight)
        .collect();
    Ok(ws
        .entries(rs)
        .into_keys()
        .filter(|nu| !excluded.contains(nu))
        .collect())
}

/// Direct sum of weight systems over one root system.
pub fn union_weights(rs: &RootSystem, systems: &[WeightSystem]) -> Result<WeightSystem> {
    let mut out = WeightSystem::empty(rs);
    for s in systems {
        s.check_group(rs)?;
        out.summands.extend(s.summands.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> QVec {
        QVec::from_i64s(c)
    }

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    fn entries(r: &RootSystem, l: &[i64]) -> BTreeMap<QVec, u64> {
        irrep_weights(r, &v(l)).unwrap().entries(r)
    }

    #[test]
    fn a2_adjoint() {
        let r = rs("A2");
        let e = entries(&r, &[1, 1]);
        assert_eq!(e.len(), 7);
        assert_eq!(e[&v(&[0, 0])], 2);
        for root in r.positive_roots() {
            assert_eq!(e[&root.weight], 1);
            assert_eq!(e[&-&root.weight], 1);
        }
        assert_eq!(irrep_weights(&r, &v(&[1, 1])).unwrap().dim(&r), BigInt::from(8));
    }

    #[test]
    fn a2_standard_and_trivial() {
        let r = rs("A2");
        let e = entries(&r, &[1, 0]);
        let expect: BTreeMap<QVec, u64> =
            [v(&[1, 0]), v(&[-1, 1]), v(&[0, -1])].into_iter().map(|w| (w, 1)).collect();
        assert_eq!(e, expect);
        let e = entries(&r, &[0, 0]);
        assert_eq!(e, [(v(&[0, 0]), 1)].into_iter().collect());
        assert_eq!(irrep_weights(&r, &v(&[0, 0])).unwrap().dim(&r), BigInt::one());
    }

    #[test]
    fn rejects_bad_highest_weights() {
        let r = rs("A2");
        assert!(matches!(irrep_weights(&r, &v(&[-1, 2])), Err(Error::NotDominant(_))));
        let half: QVec = vec![Rational::new(1.into(), 2.into()), Rational::zero()].into();
        assert!(matches!(irrep_weights(&r, &half), Err(Error::NotIntegral(_))));
        assert!(dim(&r, &half).is_err());
    }

    #[test]
    fn weyl_dimensions() {
        let r = rs("A2");
        assert_eq!(dim(&r, &v(&[2, 1])).unwrap(), BigInt::from(15));
        assert_eq!(dim(&r, &v(&[1, 1])).unwrap(), BigInt::from(8));
        assert_eq!(dim(&r, &v(&[0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(dim(&rs("G2"), &v(&[0, 1])).unwrap(), BigInt::from(14));
        assert_eq!(dim(&rs("G2"), &v(&[1, 0])).unwrap(), BigInt::from(7));
        assert_eq!(dim(&rs("E8"), &v(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), BigInt::from(248));
        assert_eq!(dim(&rs("F4"), &v(&[0, 0, 0, 1])).unwrap(), BigInt::from(26));
    }

    #[test]
    fn g2_adjoint_zero_weight() {
        let r = rs("G2");
        let e = entries(&r, &[0, 1]);
        assert_eq!(e[&v(&[0, 0])], 2);
        assert_eq!(e.len(), 13);
    }

    #[test]
    fn torus_characters() {
        let r = rs("A1xT1");
        let e = entries(&r, &[1, -2]);
        assert_eq!(e.len(), 2);
        assert!(e.contains_key(&v(&[-1, -2])));
    }

    #[test]
    fn pi_lambda_cases() {
        let r = rs("A2");
        let all = entries(&r, &[2, 1]);
        assert_eq!(all.len(), 12);
        let p = pi_lambda(&r, &v(&[2, 1])).unwrap();
        assert_eq!(p.len(), 11);
        assert!(!p.contains(&v(&[3, -1])));
        assert!(p.contains(&v(&[2, 1])));

        let p = pi_lambda(&r, &v(&[2, 2])).unwrap();
        assert_eq!(p.len(), entries(&r, &[2, 2]).len());

        assert_eq!(pi_lambda(&rs("A3"), &v(&[1, 0, 0])).unwrap(), vec![v(&[1, 0, 0])]);
    }

    #[test]
    fn unions() {
        let r = rs("A2");
        let a = irrep_weights(&r, &v(&[1, 0])).unwrap();
        let b = irrep_weights(&r, &v(&[0, 1])).unwrap();
        let aa = union_weights(&r, &[a.clone(), a.clone()]).unwrap();
        assert!(aa.entries(&r).values().all(|&m| m == 2));
        assert_eq!(aa.entries(&r).len(), 3);
        let ab = union_weights(&r, &[a, b]).unwrap();
        assert_eq!(ab.entries(&r).len(), 6);
        assert!(ab.entries(&r).values().all(|&m| m == 1));
        let e = union_weights(&r, &[]).unwrap();
        assert!(e.entries(&r).is_empty());
        assert_eq!(e.dim(&r), BigInt::zero());

        let g2 = rs("G2");
        let other = irrep_weights(&g2, &v(&[1, 0])).unwrap();
        assert!(matches!(union_weights(&r, &[other]), Err(Error::MismatchedGroups(..))));
    }

    #[test]
    fn weyl_invariance_and_top_multiplicity() {
        for (g, l) in [("B2", vec![2, 1]), ("G2", vec![1, 1]), ("A3", vec![1, 0, 2]), ("C3", vec![0, 1, 1])] {
            let r = rs(g);
            let ws = irrep_weights(&r, &v(&l)).unwrap();
            let e = ws.entries(&r);
            assert_eq!(e[&v(&l)], 1);
            for (nu, m) in &e {
                for i in 0..r.semisimple_rank() {
                    assert_eq!(e[&r.reflect(i, nu).unwrap()], *m, "{g}");
                }
                assert_eq!(ws.mult(&r, nu), *m);
            }
        }
    }

    #[test]
    fn freudenthal_matches_weyl_dimension() {
        for g in ["A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"] {
            let r = rs(g);
            let n = r.rank();
            for code in 0..3usize.pow(n as u32) {
                let l: Vec<i64> = (0..n).map(|i| ((code / 3usize.pow(i as u32)) % 3) as i64).collect();
                let lam = v(&l);
                let ws = irrep_weights(&r, &lam).unwrap();
                assert_eq!(ws.dim(&r), dim(&r, &lam).unwrap(), "{g} {lam}");
            }
        }
    }
}
