//! Exact rational scalars, vectors and matrices.
//!
//! Everything here is generic over [`Scalar`], which is implemented for
//! `num_rational::Ratio<I>` with any signed integer backing `I`. The crate
//! root fixes `I = BigInt` through the [`crate::Rational`] alias; the
//! fixed-width backings are useful for tests and small problems.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Deref, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer type backing a rational [`Scalar`].
pub trait Int:
    Integer + Signed + Clone + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<I> Int for I where
    I: Integer + Signed + Clone + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// An exact ordered field element stored in lowest terms with positive denominator.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + FromStr + num_traits::Num + Signed + Send + Sync + 'static
{
    type Int: Int;

    fn numer(&self) -> &Self::Int;
    fn denom(&self) -> &Self::Int;
    fn from_ratio(numer: Self::Int, denom: Self::Int) -> Self;

    fn from_int(n: Self::Int) -> Self {
        Self::from_ratio(n, Self::Int::one())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_int(Self::Int::from_i64(v).expect("i64 fits the integer backing"))
    }

    fn is_integer(&self) -> bool {
        self.denom().is_one()
    }
}

impl<I: Int> Scalar for Ratio<I> {
    type Int = I;

    fn numer(&self) -> &I {
        Ratio::numer(self)
    }

    fn denom(&self) -> &I {
        Ratio::denom(self)
    }

    fn from_ratio(numer: I, denom: I) -> Self {
        Ratio::new(numer, denom)
    }
}

/// Coordinate vector with exact entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector<S>(Vec<S>);

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![S::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = S::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<S> {
        self.0
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Vector(self.0.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Scalar::is_integer)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut c = self.0.clone();
        c.extend(other.0.iter().cloned());
        Vector(c)
    }

    /// Smallest positive multiple with coprime integer entries.
    /// The zero vector is returned unchanged.
    pub fn primitive(&self) -> Self {
        match primitive_integer(&self.0) {
            Some(ints) => Vector(ints.into_iter().map(S::from_int).collect()),
            None => self.clone(),
        }
    }

    /// Integer entries of [`Vector::primitive`].
    pub fn primitive_ints(&self) -> Vec<S::Int> {
        primitive_integer(&self.0).unwrap_or_else(|| vec![S::Int::zero(); self.len()])
    }
}

/// Scales a rational vector by a positive factor into coprime integers.
/// Returns `None` for the zero vector.
pub(crate) fn primitive_integer<S: Scalar>(v: &[S]) -> Option<Vec<S::Int>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v
        .iter()
        .fold(S::Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<S::Int> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    let g = ints.iter().fold(S::Int::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / g.clone()).collect())
}

impl<S> Deref for Vector<S> {
    type Target = [S];

    fn deref(&self) -> &[S] {
        &self.0
    }
}

impl<S: Scalar> From<Vec<S>> for Vector<S> {
    fn from(v: Vec<S>) -> Self {
        Vector(v)
    }
}

impl<S: Scalar> FromIterator<S> for Vector<S> {
    fn from_iter<T: IntoIterator<Item = S>>(iter: T) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl<S: Scalar> Add for &Vector<S> {
    type Output = Vector<S>;

    fn add(self, rhs: Self) -> Vector<S> {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &Vector<S> {
    type Output = Vector<S>;

    fn sub(self, rhs: Self) -> Vector<S> {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Neg for &Vector<S> {
    type Output = Vector<S>;

    fn neg(self) -> Vector<S> {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }
}

impl<'a, S: Scalar> Mul<&'a S> for &'a Vector<S> {
    type Output = Vector<S>;

    fn mul(self, rhs: &'a S) -> Vector<S> {
        self.scale(rhs)
    }
}

impl<S: Display> Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<S: Display> Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// Dense rectangular matrix, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: Vec<Vector<S>>,
    ncols: usize,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vector<S>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::shape(ncols, r.len()));
            }
        }
        Ok(Matrix { rows, ncols })
    }

    /// Empty matrix with a fixed column count.
    pub fn with_cols(ncols: usize) -> Self {
        Matrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| Vector::from_i64s(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n).map(|i| Vector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vector<S>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix {
            rows,
            ncols: self.rows.len(),
        }
    }

    pub fn mul_vec(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.len() != self.ncols {
            return Err(Error::shape(self.ncols, x.len()));
        }
        Ok(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    /// Row-vector product `x^T A`.
    pub fn left_mul_vec(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.len() != self.rows.len() {
            return Err(Error::shape(self.rows.len(), x.len()));
        }
        let mut out = Vector::<S>::zeros(self.ncols);
        for (c, row) in x.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.0.iter_mut().zip(row.iter()) {
                *o = o.clone() + c.clone() * a.clone();
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if other.nrows() != self.ncols {
            return Err(Error::shape(self.ncols, other.nrows()));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.left_mul_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows,
            ncols: other.ncols,
        })
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Reduced row echelon form; zero rows are dropped.
    pub fn rref(&self) -> Rref<S> {
        let mut rows: Vec<Vec<S>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.ncols {
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = S::one() / rows[top][col].clone();
            for x in rows[top].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..rows.len() {
                if i == top || rows[i][col].is_zero() {
                    continue;
                }
                let f = rows[i][col].clone();
                for j in col..self.ncols {
                    let d = f.clone() * rows[top][j].clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        Rref {
            rows: rows.into_iter().map(Vector).collect(),
            pivots,
        }
    }

    /// Exact solution of `A x = b`, or `None` when the system is inconsistent.
    /// Free variables, if any, are set to zero.
    pub fn solve(&self, b: &Vector<S>) -> Result<Option<Vector<S>>> {
        if b.len() != self.rows.len() {
            return Err(Error::shape(self.rows.len(), b.len()));
        }
        let augmented = Matrix {
            rows: self
                .rows
                .iter()
                .zip(b.iter())
                .map(|(r, bi)| {
                    let mut v = r.0.clone();
                    v.push(bi.clone());
                    Vector(v)
                })
                .collect(),
            ncols: self.ncols + 1,
        };
        let rref = augmented.rref();
        if rref.pivots.last() == Some(&self.ncols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.ncols);
        for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
            x.0[p] = row[self.ncols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.nrows() != self.ncols {
            return None;
        }
        let n = self.ncols;
        if self.rank() != n {
            return None;
        }
        let cols = (0..n)
            .map(|j| self.solve(&Vector::unit(n, j)).ok().flatten())
            .collect::<Option<Vec<_>>>()?;
        Matrix::from_rows(cols).ok().map(|m| m.transpose())
    }
}

impl<S> Index<usize> for Matrix<S> {
    type Output = Vector<S>;

    fn index(&self, i: usize) -> &Vector<S> {
        &self.rows[i]
    }
}

impl<S: Display> Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// Output of [`Matrix::rref`].
#[derive(Clone, PartialEq, Eq)]
pub struct Rref<S> {
    pub rows: Vec<Vector<S>>,
    pub pivots: Vec<usize>,
}

impl<S: Display> Debug for Rref<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rref")
            .field("rows", &self.rows)
            .field("pivots", &self.pivots)
            .finish()
    }
}

impl<S: Scalar> Rref<S> {
    /// Subtracts multiples of the rows so that `v` vanishes at every pivot column.
    pub fn reduce(&self, v: &Vector<S>) -> Vector<S> {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..out.len() {
                out.0[j] = out.0[j].clone() - c.clone() * row[j].clone();
            }
        }
        out
    }
}

/// Free function form of [`Matrix::solve`].
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &Vector<S>) -> Result<Option<Vector<S>>> {
    a.solve(b)
}

/// Free function form of [`Matrix::rank`].
pub fn rank<S: Scalar>(a: &Matrix<S>) -> usize {
    a.rank()
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer literal.
pub fn parse_scalar<S: Scalar>(s: &str) -> Result<S> {
    s.trim()
        .parse::<S>()
        .map_err(|_| Error::Domain(format!("cannot parse rational literal `{s}`")))
}
