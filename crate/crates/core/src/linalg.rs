// SPDX-License-Identifier: Apache-2.0

//! Exact rational scalars, vectors and matrices.
//!
//! Every computation in the crate goes through these types. Nothing is ever
//! rounded: `Scalar` is an arbitrary-precision rational kept in lowest terms
//! with a positive denominator, so structural equality is numeric equality.

use std::fmt;
use std::ops::{Deref, Index};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
pub type Scalar = BigRational;

/// Builds the integer scalar `n`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the strict token form `p/q` or `p`.
pub fn parse_scalar(token: &str) -> Option<Scalar> {
    if token.is_empty() || token.chars().any(char::is_whitespace) {
        return None;
    }
    match token.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).ok()?;
            let q = BigInt::from_str(q).ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Scalar::new(p, q))
        }
        None => BigInt::from_str(token).ok().map(Scalar::from_integer),
    }
}

/// Parses `p/q`, `p`, decimal (`0.001`) or scientific (`1e-3`) notation exactly.
pub fn parse_decimal(token: &str) -> Option<Scalar> {
    if let Some(s) = parse_scalar(token) {
        return Some(s);
    }
    let (mantissa, exponent) = match token.find(['e', 'E']) {
        Some(pos) => (&token[..pos], token[pos + 1..].parse::<i32>().ok()?),
        None => (token, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}0").parse::<BigInt>().ok()? / BigInt::from(10);
    let shift = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Scalar::from_integer(digits);
    if shift >= 0 {
        value *= Scalar::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        value /= Scalar::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Some(if negative { -value } else { value })
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales `values` by a positive factor so they become coprime integers.
///
/// Returns the integer vector together with the factor used. A zero vector
/// maps to itself with factor one.
pub fn primitive_integer(values: &[Scalar]) -> (Vec<BigInt>, Scalar) {
    let lcm = common_denominator(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return (ints, Scalar::one());
    }
    let ints = ints.into_iter().map(|v| v / &g).collect();
    (ints, Scalar::new(lcm, g))
}

/// Divides an integer vector by the gcd of its entries.
pub fn make_primitive(values: &mut [BigInt]) {
    let g = values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in values.iter_mut() {
            *v /= &g;
        }
    }
}

/// A point or direction with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        values.iter().map(|&v| int(v)).collect()
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        self.0.iter().map(|a| a * factor).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Squared Euclidean norm.
    pub fn norm_squared(&self) -> Scalar {
        self.dot(self)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Vector) -> Vector {
        self.0.iter().chain(&other.0).cloned().collect()
    }

    /// Arithmetic mean of a nonempty list of points.
    pub fn mean(points: &[Vector]) -> Vector {
        let dim = points[0].dim();
        let sum = points.iter().fold(Vector::zeros(dim), |acc, p| acc.add(p));
        sum.scale(&Scalar::new(BigInt::one(), BigInt::from(points.len())))
    }
}

impl Deref for Vector {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Self {
        Matrix::new(rows, cols, values.iter().map(|&v| int(v)).collect())
            .expect("entry count matches shape")
    }

    /// Stacks row vectors; `cols` is needed for the empty case.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.dim(), cols, "row length must equal column count");
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::new(self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.iter())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry scanning rows from the
    /// lowest index, so the result is deterministic.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for k in c..m.cols {
                let v = m.get(lead, k) * &inv;
                m.set(lead, k, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &factor * m.get(lead, k);
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        self.get(r, c)
    }
}

/// Exact rank over the rationals.
pub fn mat_rank(m: &Matrix) -> usize {
    m.rref().1.len()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to integers; the integer determinant is then
/// divided by the product of the row scales.
pub fn mat_det(m: &Matrix) -> Result<Scalar> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| {
            let lcm = common_denominator(m.row(r));
            let ints = m.row(r).iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            scale *= lcm;
            ints
        })
        .collect();
    Ok(Scalar::new(bareiss_det(rows), scale))
}

/// Fraction-free determinant of a square integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of an integer matrix given as rows, by fraction-free elimination.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let Some(cols) = a.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..cols {
                row[k] = &row[k] * &pivot_row[c] - &f * &pivot_row[k];
            }
            make_primitive(&mut row[c..]);
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Exact basis of the right kernel `{x : m x = 0}`.
pub fn nullspace_basis(m: &Matrix) -> Vec<Vector> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut entries = vec![Scalar::zero(); m.cols()];
            entries[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                entries[p] = -r.get(row, f).clone();
            }
            Vector::new(entries)
        })
        .collect()
}

/// An affine chart of the hull of a point set.
///
/// `basis` holds the reduced row echelon rows spanning `lin(X)`, and
/// `pivots` their pivot columns, so coordinates in the chart are read off
/// the pivot entries of `x - basepoint`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    pub basepoint: Vector,
    pub basis: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl AffineHull {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basepoint.dim()
    }

    /// Whether `x` lies on the affine hull.
    pub fn contains(&self, x: &Vector) -> bool {
        let rel = x.sub(&self.basepoint);
        let back = self.lift_direction(&self.coordinates_of_direction(&rel));
        back == rel
    }

    /// Chart coordinates of a direction in `lin(X)`.
    pub fn coordinates_of_direction(&self, d: &Vector) -> Vector {
        self.pivots.iter().map(|&p| d[p].clone()).collect()
    }

    /// Inverse of [`Self::coordinates_of_direction`].
    pub fn lift_direction(&self, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.ambient_dim());
        for (coef, b) in y.iter().zip(&self.basis) {
            if coef.is_zero() {
                continue;
            }
            out = out.add(&b.scale(coef));
        }
        out
    }
}

/// Affine hull of a nonempty point list as a basepoint and a basis of `lin(X)`.
pub fn solve_affine_hull(points: &[Vector]) -> Result<AffineHull> {
    let first = points.first().ok_or(Error::Empty)?;
    let dim = first.dim();
    if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p.sub(first)).collect();
    let m = Matrix::from_rows(&diffs, dim);
    let (r, pivots) = m.rref();
    let basis = (0..pivots.len()).map(|i| r.row_vector(i)).collect();
    Ok(AffineHull {
        basepoint: first.clone(),
        basis,
        pivots,
    })
}

/// Dimension of the affine hull of a nonempty point list.
pub fn affine_rank(points: &[Vector]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p.sub(first)).collect();
    mat_rank(&Matrix::from_rows(&diffs, first.dim()))
}

/// Sign of a scalar, as an ordering against zero.
pub fn sign(value: &Scalar) -> std::cmp::Ordering {
    if value.is_positive() {
        std::cmp::Ordering::Greater
    } else if value.is_negative() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(mat_rank(&Matrix::identity(3)), 3);
        assert_eq!(mat_rank(&Matrix::zeros(2, 3)), 0);
        let m = Matrix::from_ints(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 0]);
        assert_eq!(mat_rank(&m), 2);
    }

    #[test]
    fn det_examples() {
        assert_eq!(mat_det(&Matrix::identity(7)).unwrap(), int(1));
        assert_eq!(mat_det(&Matrix::from_ints(2, 2, &[1, 2, 3, 4])).unwrap(), int(-2));
        let m = Matrix::from_ints(3, 3, &[1, 5, 7, 2, 0, 3, 1, 5, 7]);
        assert_eq!(mat_det(&m).unwrap(), int(0));
        assert!(matches!(
            mat_det(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn det_with_fractions() {
        let m = Matrix::new(2, 2, vec![ratio(1, 2), ratio(1, 3), ratio(1, 4), ratio(1, 5)]).unwrap();
        // 1/10 - 1/12
        assert_eq!(mat_det(&m).unwrap(), ratio(1, 60));
    }

    #[test]
    fn det_needs_pivoting() {
        let m = Matrix::from_ints(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(mat_det(&m).unwrap(), int(-1));
    }

    #[test]
    fn affine_hull_examples() {
        let p = Vector::from_ints(&[3, 4]);
        let h = solve_affine_hull(std::slice::from_ref(&p)).unwrap();
        assert_eq!(h.basepoint, p);
        assert!(h.basis.is_empty());

        let tri = [
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[0, 1]),
        ];
        assert_eq!(solve_affine_hull(&tri).unwrap().dim(), 2);

        let line = [
            Vector::from_ints(&[0, 0, 0]),
            Vector::from_ints(&[1, 1, 0]),
            Vector::from_ints(&[2, 2, 0]),
        ];
        let h = solve_affine_hull(&line).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.contains(&Vector::from_ints(&[5, 5, 0])));
        assert!(!h.contains(&Vector::from_ints(&[5, 4, 0])));
        assert!(solve_affine_hull(&[]).is_err());
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace_basis(&Matrix::identity(4)).is_empty());
        let n = nullspace_basis(&Matrix::from_ints(1, 2, &[1, 1]));
        assert_eq!(n.len(), 1);
        assert_eq!(n[0][0].clone() + n[0][1].clone(), int(0));
        assert!(!n[0].is_zero());
        assert_eq!(nullspace_basis(&Matrix::zeros(2, 2)).len(), 2);
    }

    #[test]
    fn scalar_text_forms() {
        assert_eq!(parse_scalar("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert!(parse_scalar("1/0").is_none());
        assert!(parse_scalar("1 /2").is_none());
        assert!(parse_scalar("0.5").is_none());
        assert_eq!(parse_decimal("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_decimal("0.0001").unwrap(), ratio(1, 10000));
        assert_eq!(parse_decimal("-2.5E1").unwrap(), int(-25));
        assert_eq!(ratio(-4, 6).to_string(), "-2/3");
        assert_eq!(int(5).to_string(), "5");
    }

    #[test]
    fn primitive_integer_scaling() {
        let (ints, factor) = primitive_integer(&[ratio(1, 2), ratio(-3, 4), int(0)]);
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        assert_eq!(factor, int(4));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |vals| {
                let data = vals.into_iter().map(|(n, d)| ratio(n, d)).collect();
                Matrix::new(r, c, data).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let kernel = nullspace_basis(&m);
            prop_assert_eq!(mat_rank(&m) + kernel.len(), m.cols());
            for k in &kernel {
                prop_assert!(m.mul_vec(k).is_zero());
            }
        }

        #[test]
        fn det_zero_iff_rank_deficient(vals in proptest::collection::vec(-3i64..4, 9)) {
            let m = Matrix::from_ints(3, 3, &vals);
            let det = mat_det(&m).unwrap();
            prop_assert_eq!(det.is_zero(), mat_rank(&m) < 3);
        }

        #[test]
        fn scalar_text_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
            let s = ratio(n, d);
            prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
        }

        #[test]
        fn int_rank_agrees(vals in proptest::collection::vec(-3i64..4, 12)) {
            let m = Matrix::from_ints(4, 3, &vals);
            let rows: Vec<Vec<BigInt>> = vals.chunks(3).map(|c| c.iter().map(|&v| BigInt::from(v)).collect()).collect();
            prop_assert_eq!(int_rank(&rows), mat_rank(&m));
        }
    }
}
