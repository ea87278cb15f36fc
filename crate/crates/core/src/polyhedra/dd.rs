//! Double description method on integer cones.
//!
//! Given rows `a_1, …, a_m`, [`cone_generators`] returns a lineality basis and
//! the extreme rays (modulo lineality) of `{y : a_k · y ≥ 0 for all k}`.
//! Rows are inserted one at a time. Adjacency of rays is decided
//! combinatorially: two rays are adjacent iff no third ray is tight on every
//! row both of them are tight on.

use crate::exactq::Int;

#[derive(Clone, Debug, Default)]
pub(crate) struct ConeGenerators<I> {
    pub lines: Vec<Vec<I>>,
    pub rays: Vec<Vec<I>>,
}

struct Ray<I> {
    v: Vec<I>,
    zero: Bits,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn prefix(n: usize, len: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

pub(crate) fn dot<I: Int>(a: &[I], b: &[I]) -> I {
    a.iter()
        .zip(b)
        .fold(I::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Divides by the (positive) gcd of the entries.
pub(crate) fn make_primitive<I: Int>(v: &mut [I]) {
    let g = v.iter().fold(I::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.clone() / g.clone();
    }
}

/// `s·u − t·w`, made primitive.
fn combine<I: Int>(s: &I, u: &[I], t: &I, w: &[I]) -> Vec<I> {
    let mut out: Vec<I> = u
        .iter()
        .zip(w)
        .map(|(x, y)| s.clone() * x.clone() - t.clone() * y.clone())
        .collect();
    make_primitive(&mut out);
    out
}

pub(crate) fn cone_generators<I: Int>(dim: usize, rows: &[Vec<I>]) -> ConeGenerators<I> {
    let m = rows.len();
    let mut lines: Vec<Vec<I>> = (0..dim)
        .map(|i| {
            let mut e = vec![I::zero(); dim];
            e[i] = I::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray<I>> = Vec::new();

    for (k, a) in rows.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if let Some(j) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lines.swap_remove(j);
            let mut s0 = dot(a, &l0);
            if s0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
                s0 = -s0;
            }
            for l in lines.iter_mut() {
                let t = dot(a, l);
                if !t.is_zero() {
                    *l = combine(&s0, l, &t, &l0);
                }
            }
            for r in rays.iter_mut() {
                let t = dot(a, &r.v);
                if !t.is_zero() {
                    r.v = combine(&s0, &r.v, &t, &l0);
                }
                r.zero.set(k);
            }
            rays.push(Ray {
                v: l0,
                zero: Bits::prefix(m, k),
            });
            continue;
        }

        let values: Vec<I> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if minus.is_empty() {
            for (r, t) in rays.iter_mut().zip(&values) {
                if t.is_zero() {
                    r.zero.set(k);
                }
            }
            continue;
        }

        let mut fresh = Vec::new();
        for &p in &plus {
            for &n in &minus {
                let common = rays[p].zero.and(&rays[n].zero);
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == n || !common.is_subset_of(&rays[r].zero));
                if !adjacent {
                    continue;
                }
                // values[p] > 0 > values[n]: both coefficients positive.
                let v = combine(&values[p], &rays[n].v, &values[n], &rays[p].v);
                let mut zero = common;
                zero.set(k);
                fresh.push(Ray { v, zero });
            }
        }

        let mut kept = Vec::with_capacity(rays.len() - minus.len() + fresh.len());
        for (mut r, t) in rays.into_iter().zip(values) {
            if t.is_zero() {
                r.zero.set(k);
                kept.push(r);
            } else if t.is_positive() {
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    for l in lines.iter_mut() {
        make_primitive(l);
    }
    ConeGenerators {
        lines,
        rays: rays
            .into_iter()
            .map(|mut r| {
                make_primitive(&mut r.v);
                r.v
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn quadrant() {
        let g = cone_generators(2, &rows(&[&[1, 0], &[0, 1]]));
        assert!(g.lines.is_empty());
        assert_eq!(sorted(g.rays), rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn no_rows_gives_full_space() {
        let g = cone_generators::<BigInt>(3, &[]);
        assert_eq!(g.lines.len(), 3);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn halfplane_keeps_a_line() {
        let g = cone_generators(2, &rows(&[&[1, 1]]));
        assert_eq!(g.lines.len(), 1);
        assert_eq!(g.rays.len(), 1);
    }

    #[test]
    fn square_pyramid_cone() {
        // cone over the square [-1,1]^2 at height 1 in (t, x, y)
        let g = cone_generators(
            3,
            &rows(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]),
        );
        assert!(g.lines.is_empty());
        assert_eq!(
            sorted(g.rays),
            rows(&[&[1, -1, -1], &[1, -1, 1], &[1, 1, -1], &[1, 1, 1]])
        );
    }

    #[test]
    fn redundant_rows_do_not_add_rays() {
        let g = cone_generators(2, &rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]));
        assert_eq!(sorted(g.rays), rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn equality_pair_collapses_to_ray() {
        let g = cone_generators(2, &rows(&[&[1, -1], &[-1, 1], &[1, 0]]));
        assert!(g.lines.is_empty());
        assert_eq!(sorted(g.rays), rows(&[&[1, 1]]));
    }
}
