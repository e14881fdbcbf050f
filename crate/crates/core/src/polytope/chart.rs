// SPDX-License-Identifier: Apache-2.0

use crate::error::Result;
use crate::linalg::{solve_affine_hull, AffineHull, Matrix, Vector};

/// Exact affine coordinates on the affine hull of a point set.
///
/// A point `x` of the hull has chart coordinates `(x - base)[pivots]`; the
/// inverse is `base + Σ y_i basis_i`. Both directions are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    hull: AffineHull,
}

impl Chart {
    pub fn from_hull(hull: AffineHull) -> Self {
        Chart { hull }
    }

    /// The identity chart of `R^dim`.
    pub fn identity(dim: usize) -> Self {
        Chart {
            hull: AffineHull {
                basepoint: Vector::zeros(dim),
                basis: (0..dim).map(|i| Vector::unit(dim, i)).collect(),
                pivots: (0..dim).collect(),
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.hull.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.hull.ambient_dim()
    }

    pub fn basepoint(&self) -> &Vector {
        &self.hull.basepoint
    }

    pub fn hull(&self) -> &AffineHull {
        &self.hull
    }

    pub fn is_identity(&self) -> bool {
        self.dim() == self.ambient_dim() && self.hull.basepoint.is_zero() && {
            let id = Chart::identity(self.dim());
            id.hull.basis == self.hull.basis
        }
    }

    /// Chart coordinates of a point on the hull.
    pub fn project(&self, x: &Vector) -> Vector {
        self.hull.coordinates_of_direction(&x.sub(&self.hull.basepoint))
    }

    /// Ambient point with chart coordinates `y`.
    pub fn lift(&self, y: &Vector) -> Vector {
        self.hull.basepoint.add(&self.hull.lift_direction(y))
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.hull.contains(x)
    }

    /// The linear part of [`Self::lift`] as an `ambient x dim` matrix.
    pub fn lift_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.hull.basis, self.ambient_dim()).transpose()
    }

    /// The linear part of [`Self::project`] as a `dim x ambient` matrix.
    pub fn project_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.ambient_dim());
        for (row, &p) in self.hull.pivots.iter().enumerate() {
            m.set(row, p, num_traits::One::one());
        }
        m
    }
}

/// Projects points onto coordinates of their affine hull.
///
/// Points that already span their ambient space get the identity chart.
pub fn chart_project(points: &[Vector]) -> Result<(Vec<Vector>, Chart)> {
    let hull = solve_affine_hull(points)?;
    let chart = if hull.dim() == hull.ambient_dim() {
        Chart::identity(hull.dim())
    } else {
        Chart::from_hull(hull)
    };
    let projected = points.iter().map(|p| chart.project(p)).collect();
    Ok((projected, chart))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn full_dimensional_gets_identity() {
        let pts = vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[3, 0]),
            Vector::from_ints(&[0, 5]),
        ];
        let (proj, chart) = chart_project(&pts).unwrap();
        assert!(chart.is_identity());
        assert_eq!(proj, pts);
    }

    #[test]
    fn diagonal_segment() {
        let pts = vec![Vector::from_ints(&[0, 0, 0]), Vector::from_ints(&[1, 1, 1])];
        let (proj, chart) = chart_project(&pts).unwrap();
        assert_eq!(chart.dim(), 1);
        assert_eq!(proj, vec![Vector::new(vec![int(0)]), Vector::new(vec![int(1)])]);
        for (p, y) in pts.iter().zip(&proj) {
            assert_eq!(&chart.lift(y), p);
        }
        let mid = Vector::from_ints(&[7, 7, 7]);
        assert!(chart.contains(&mid));
        assert_eq!(chart.lift(&chart.project(&mid)), mid);
    }

    #[test]
    fn matrices_match_maps() {
        let pts = vec![
            Vector::from_ints(&[1, 2, 3]),
            Vector::from_ints(&[2, 2, 5]),
            Vector::from_ints(&[1, 4, 3]),
        ];
        let (_, chart) = chart_project(&pts).unwrap();
        let y = Vector::from_ints(&[3, -2]);
        let lifted = chart.basepoint().add(&chart.lift_matrix().mul_vec(&y));
        assert_eq!(lifted, chart.lift(&y));
        let x = chart.lift(&y);
        assert_eq!(chart.project_matrix().mul_vec(&x.sub(chart.basepoint())), y);
    }
}
