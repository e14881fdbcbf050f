// SPDX-License-Identifier: Apache-2.0

//! Dual-description polytopes.
//!
//! A [`Polytope`] carries a V-representation, an H-representation, or both,
//! together with the vertex/facet incidence table. Conversions between the
//! two go through the double description method on the homogenization cone,
//! and always require the input to be full-dimensional in its ambient space;
//! lower-dimensional point sets are first projected with [`chart_project`].

mod chart;
pub(crate) mod dd;
mod io;
mod lattice;
pub mod lp;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use chart::{chart_project, Chart};
pub use io::{parse_polytope, write_hrep, write_vrep, PolytopeFile};
pub use lattice::{face_lattice, f_vector, Face, FaceLattice};

use crate::error::{Error, Result};
use crate::linalg::{affine_rank, common_denominator, int_rank, primitive_integer, Scalar, Vector};

/// A finite point list in a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub ambient_dim: usize,
    pub points: Vec<Vector>,
}

impl VRep {
    pub fn new(ambient_dim: usize, points: Vec<Vector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(p) = points.iter().find(|p| p.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: p.dim(),
            });
        }
        Ok(VRep { ambient_dim, points })
    }
}

/// The half-space `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub normal: Vector,
    pub offset: Scalar,
}

impl Inequality {
    pub fn new(normal: Vector, offset: Scalar) -> Self {
        Inequality { normal, offset }
    }

    /// Rescales so the normal is a primitive integer vector.
    pub fn canonical(&self) -> Self {
        if self.normal.is_zero() {
            return self.clone();
        }
        let (ints, factor) = primitive_integer(&self.normal);
        Inequality {
            normal: ints.into_iter().map(Scalar::from_integer).collect(),
            offset: &self.offset * factor,
        }
    }

    /// `offset - normal · x`; zero on the hyperplane, positive inside.
    pub fn slack(&self, x: &Vector) -> Scalar {
        &self.offset - self.normal.dot(x)
    }
}

/// A finite list of inequalities in a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub ambient_dim: usize,
    pub inequalities: Vec<Inequality>,
}

impl HRep {
    pub fn new(ambient_dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        if let Some(h) = inequalities.iter().find(|h| h.normal.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: h.normal.dim(),
            });
        }
        Ok(HRep {
            ambient_dim,
            inequalities,
        })
    }

    /// Same system with every inequality in canonical form.
    pub fn canonical(&self) -> Self {
        HRep {
            ambient_dim: self.ambient_dim,
            inequalities: self.inequalities.iter().map(Inequality::canonical).collect(),
        }
    }
}

/// Vertex-by-facet incidence: `rows[v]` holds the facets tight at vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    rows: Vec<FixedBitSet>,
    facets: usize,
}

impl Incidence {
    pub fn compute(vertices: &[Vector], inequalities: &[Inequality]) -> Self {
        let rows = vertices
            .iter()
            .map(|v| {
                let mut bits = FixedBitSet::with_capacity(inequalities.len());
                for (j, h) in inequalities.iter().enumerate() {
                    if h.slack(v).is_zero() {
                        bits.insert(j);
                    }
                }
                bits
            })
            .collect();
        Incidence {
            rows,
            facets: inequalities.len(),
        }
    }

    pub fn is_incident(&self, vertex: usize, facet: usize) -> bool {
        self.rows[vertex].contains(facet)
    }

    pub fn facets_of(&self, vertex: usize) -> &FixedBitSet {
        &self.rows[vertex]
    }

    /// Vertices lying on `facet`.
    pub fn vertices_of(&self, facet: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.rows.len());
        for (v, row) in self.rows.iter().enumerate() {
            if row.contains(facet) {
                bits.insert(v);
            }
        }
        bits
    }

    pub fn num_vertices(&self) -> usize {
        self.rows.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets
    }
}

/// A bounded convex polytope in one or both representations.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vrep: Option<VRep>,
    hrep: Option<HRep>,
    incidence: Option<Incidence>,
}

/// Where a point sits relative to a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    /// On the boundary; lists the facets satisfied with equality.
    Boundary(Vec<usize>),
    Outside,
}

impl Polytope {
    /// Convex hull of `points`, with redundant points dropped.
    ///
    /// The points must span their ambient space.
    pub fn from_points(ambient_dim: usize, points: Vec<Vector>) -> Result<Self> {
        Self::from_vrep(VRep::new(ambient_dim, points)?)
    }

    /// Computes the facets and keeps only the extreme points of `vrep`.
    pub fn from_vrep(vrep: VRep) -> Result<Self> {
        let hrep = vrep_to_hrep(&vrep)?;
        let vertices = extreme_points(&vrep.points, &hrep.inequalities, vrep.ambient_dim);
        let incidence = Incidence::compute(&vertices, &hrep.inequalities);
        Ok(Polytope {
            ambient_dim: vrep.ambient_dim,
            vrep: Some(VRep {
                ambient_dim: vrep.ambient_dim,
                points: vertices,
            }),
            hrep: Some(hrep),
            incidence: Some(incidence),
        })
    }

    /// Enumerates the vertices of `hrep`; the inequality list is kept as given.
    pub fn from_hrep(hrep: HRep) -> Result<Self> {
        let vrep = hrep_to_vrep(&hrep)?;
        let incidence = Incidence::compute(&vrep.points, &hrep.inequalities);
        Ok(Polytope {
            ambient_dim: hrep.ambient_dim,
            vrep: Some(vrep),
            hrep: Some(hrep),
            incidence: Some(incidence),
        })
    }

    /// Wraps a point list without computing facets.
    pub fn vrep_only(vrep: VRep) -> Self {
        Polytope {
            ambient_dim: vrep.ambient_dim,
            vrep: Some(vrep),
            hrep: None,
            incidence: None,
        }
    }

    /// Wraps an inequality list without enumerating vertices.
    pub fn hrep_only(hrep: HRep) -> Self {
        Polytope {
            ambient_dim: hrep.ambient_dim,
            vrep: None,
            hrep: Some(hrep),
            incidence: None,
        }
    }

    /// Assembles a polytope from two representations known to agree.
    pub(crate) fn from_parts(vrep: VRep, hrep: HRep) -> Self {
        let incidence = Incidence::compute(&vrep.points, &hrep.inequalities);
        Polytope {
            ambient_dim: vrep.ambient_dim,
            vrep: Some(vrep),
            hrep: Some(hrep),
            incidence: Some(incidence),
        }
    }

    /// A copy with both representations and the incidence table present.
    pub fn complete(&self) -> Result<Self> {
        match (&self.vrep, &self.hrep) {
            (Some(_), Some(_)) if self.incidence.is_some() => Ok(self.clone()),
            (Some(v), Some(h)) => Ok(Self::from_parts(v.clone(), h.clone())),
            (Some(v), None) => Self::from_vrep(v.clone()),
            (None, Some(h)) => Self::from_hrep(h.clone()),
            (None, None) => Err(Error::MissingRepresentation("V or H")),
        }
    }

    /// A copy whose inequality list contains only facet-defining inequalities,
    /// one per facet, in canonical form.
    pub fn irredundant(&self) -> Result<Self> {
        let full = self.complete()?;
        let vertices = full.vertices()?;
        let inc = full.incidence.as_ref().expect("complete");
        let d = full.dim();
        let mut seen: Vec<FixedBitSet> = Vec::new();
        let mut keep = Vec::new();
        for (j, h) in full.facets()?.iter().enumerate() {
            let on = inc.vertices_of(j);
            let pts: Vec<Vector> = on.ones().map(|v| vertices[v].clone()).collect();
            if pts.is_empty() || affine_rank(&pts) + 1 != d || seen.contains(&on) {
                continue;
            }
            seen.push(on);
            keep.push(h.canonical());
        }
        let hrep = HRep::new(self.ambient_dim, keep)?;
        Ok(Self::from_parts(full.vrep.clone().expect("complete"), hrep))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vrep(&self) -> Option<&VRep> {
        self.vrep.as_ref()
    }

    pub fn hrep(&self) -> Option<&HRep> {
        self.hrep.as_ref()
    }

    pub fn incidence(&self) -> Option<&Incidence> {
        self.incidence.as_ref()
    }

    pub fn vertices(&self) -> Result<&[Vector]> {
        self.vrep
            .as_ref()
            .map(|v| v.points.as_slice())
            .ok_or(Error::MissingRepresentation("V"))
    }

    pub fn facets(&self) -> Result<&[Inequality]> {
        self.hrep
            .as_ref()
            .map(|h| h.inequalities.as_slice())
            .ok_or(Error::MissingRepresentation("H"))
    }

    pub fn num_vertices(&self) -> Option<usize> {
        self.vrep.as_ref().map(|v| v.points.len())
    }

    pub fn num_facets(&self) -> Option<usize> {
        self.hrep.as_ref().map(|h| h.inequalities.len())
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        polytope_dim(self)
    }

    /// Classifies `x` against the H-representation.
    pub fn contains_point(&self, x: &Vector) -> Result<Location> {
        let facets = self.facets()?;
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: x.dim(),
            });
        }
        let mut active = Vec::new();
        for (j, h) in facets.iter().enumerate() {
            let s = h.slack(x);
            if s.is_negative() {
                return Ok(Location::Outside);
            }
            if s.is_zero() {
                active.push(j);
            }
        }
        Ok(if active.is_empty() {
            Location::Interior
        } else {
            Location::Boundary(active)
        })
    }

    /// Whether `x` satisfies every inequality.
    pub fn contains(&self, x: &Vector) -> Result<bool> {
        Ok(self.contains_point(x)? != Location::Outside)
    }

    /// Index of `x` in the vertex list, if it is a vertex.
    pub fn vertex_index(&self, x: &Vector) -> Option<usize> {
        self.vrep.as_ref()?.points.iter().position(|v| v == x)
    }

    /// Whether vertex `v` lies on exactly `dim` facets.
    pub fn is_simple_vertex(&self, v: usize) -> Result<bool> {
        let inc = self
            .incidence
            .as_ref()
            .ok_or(Error::MissingRepresentation("incidence"))?;
        if v >= inc.num_vertices() {
            return Err(Error::IndexOutOfRange {
                index: v,
                len: inc.num_vertices(),
            });
        }
        Ok(inc.facets_of(v).count_ones(..) == self.dim())
    }
}

/// Dimension of the affine hull of a polytope.
pub fn polytope_dim(p: &Polytope) -> usize {
    match (&p.vrep, &p.hrep) {
        (Some(v), _) => affine_rank(&v.points),
        (None, Some(h)) => lp::hrep_dim(h).unwrap_or(0),
        (None, None) => 0,
    }
}

/// Integer row of `b - a·p >= 0` in the variables `(a, b)`.
fn point_row(p: &Vector) -> Vec<BigInt> {
    let lcm = common_denominator(p.iter());
    let mut row: Vec<BigInt> = p
        .iter()
        .map(|x| -(x.numer() * (&lcm / x.denom())))
        .collect();
    row.push(lcm);
    row
}

/// Facets of the convex hull of a full-dimensional point set.
///
/// Facets are ordered by their sorted lists of incident input points.
pub fn vrep_to_hrep(v: &VRep) -> Result<HRep> {
    if v.points.is_empty() {
        return Err(Error::Empty);
    }
    let d = v.ambient_dim;
    let hull_dim = affine_rank(&v.points);
    if hull_dim < d {
        return Err(Error::NotFullDimensional {
            hull_dim,
            ambient_dim: d,
        });
    }
    if d == 0 {
        return HRep::new(0, Vec::new());
    }
    let rows: Vec<Vec<BigInt>> = v.points.iter().map(point_row).collect();
    let rays = dd::extreme_rays(&rows, d + 1).map_err(|_| Error::NotFullDimensional {
        hull_dim,
        ambient_dim: d,
    })?;
    let mut facets: Vec<(Vec<usize>, Inequality)> = rays
        .into_iter()
        .filter(|r| r.coords[..d].iter().any(|x| !x.is_zero()))
        .map(|r| {
            let normal: Vector = r.coords[..d].iter().cloned().map(Scalar::from_integer).collect();
            let h = Inequality::new(normal, Scalar::from_integer(r.coords[d].clone())).canonical();
            let tight = (0..v.points.len()).filter(|&i| h.slack(&v.points[i]).is_zero()).collect();
            (tight, h)
        })
        .collect();
    facets.sort();
    HRep::new(d, facets.into_iter().map(|(_, h)| h).collect())
}

/// Vertices of a bounded H-polytope, each with its tight inequalities,
/// without requiring full dimension. Sorted lexicographically.
pub(crate) fn hrep_to_vrep_any(h: &HRep) -> Result<Vec<(Vector, FixedBitSet)>> {
    let d = h.ambient_dim;
    let m = h.inequalities.len();
    // Variables (x, t): b t - a·x >= 0 for each inequality, then t >= 0.
    let mut rows: Vec<Vec<BigInt>> = h
        .inequalities
        .iter()
        .map(|ineq| {
            let mut vals: Vec<Scalar> = ineq.normal.iter().map(|a| -a).collect();
            vals.push(ineq.offset.clone());
            primitive_integer(&vals).0
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); d + 1];
    t_row[d] = BigInt::from(1);
    rows.push(t_row);
    let rays = dd::extreme_rays(&rows, d + 1).map_err(|_| Error::Unbounded)?;
    if rays.iter().all(|r| r.coords[d].is_zero()) {
        return Err(Error::Infeasible);
    }
    if rays.iter().any(|r| r.coords[d].is_zero()) {
        return Err(Error::Unbounded);
    }
    let mut out: Vec<(Vector, FixedBitSet)> = rays
        .into_iter()
        .map(|r| {
            let t = Scalar::from_integer(r.coords[d].clone());
            let x: Vector = r.coords[..d]
                .iter()
                .map(|c| Scalar::from_integer(c.clone()) / &t)
                .collect();
            let mut tight = FixedBitSet::with_capacity(m);
            for j in r.zeros.ones().filter(|&j| j < m) {
                tight.insert(j);
            }
            (x, tight)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// All vertices of a bounded, full-dimensional H-polytope.
pub fn hrep_to_vrep(h: &HRep) -> Result<VRep> {
    let verts = hrep_to_vrep_any(h)?;
    let points: Vec<Vector> = verts.into_iter().map(|(x, _)| x).collect();
    let hull_dim = affine_rank(&points);
    if hull_dim < h.ambient_dim {
        return Err(Error::NotFullDimensional {
            hull_dim,
            ambient_dim: h.ambient_dim,
        });
    }
    VRep::new(h.ambient_dim, points)
}

/// Points of `points` that are vertices of their hull, first occurrence kept.
fn extreme_points(points: &[Vector], facets: &[Inequality], d: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for p in points {
        if out.contains(p) {
            continue;
        }
        let active: Vec<Vec<BigInt>> = facets
            .iter()
            .filter(|h| h.slack(p).is_zero())
            .map(|h| primitive_integer(&h.normal).0)
            .collect();
        if int_rank(&active) == d {
            out.push(p.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn square() -> Polytope {
        Polytope::from_points(
            2,
            vec![
                Vector::from_ints(&[1, 1]),
                Vector::from_ints(&[-1, 1]),
                Vector::from_ints(&[-1, -1]),
                Vector::from_ints(&[1, -1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn segment_facets() {
        let v = VRep::new(1, vec![Vector::from_ints(&[0]), Vector::from_ints(&[1])]).unwrap();
        let h = vrep_to_hrep(&v).unwrap();
        let mut got: Vec<(Scalar, Scalar)> = h
            .inequalities
            .iter()
            .map(|i| (i.normal[0].clone(), i.offset.clone()))
            .collect();
        got.sort();
        assert_eq!(got, vec![(int(-1), int(0)), (int(1), int(1))]);
    }

    #[test]
    fn cross_polytope_facets() {
        let pts = vec![
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[-1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::from_ints(&[0, -1]),
        ];
        let p = Polytope::from_points(2, pts).unwrap();
        assert_eq!(p.num_facets(), Some(4));
        for h in p.facets().unwrap() {
            assert_eq!(h.offset, int(1));
            assert!(h.normal.iter().all(|x| x == &int(1) || x == &int(-1)));
        }
    }

    #[test]
    fn square_vertices_from_h() {
        let ineqs = vec![
            Inequality::new(Vector::from_ints(&[1, 0]), int(1)),
            Inequality::new(Vector::from_ints(&[-1, 0]), int(1)),
            Inequality::new(Vector::from_ints(&[0, 1]), int(1)),
            Inequality::new(Vector::from_ints(&[0, -1]), int(1)),
        ];
        let v = hrep_to_vrep(&HRep::new(2, ineqs).unwrap()).unwrap();
        assert_eq!(v.points.len(), 4);
        assert!(v.points.contains(&Vector::from_ints(&[-1, 1])));
    }

    #[test]
    fn triangle_from_h() {
        let ineqs = vec![
            Inequality::new(Vector::from_ints(&[-1, 0]), int(0)),
            Inequality::new(Vector::from_ints(&[0, -1]), int(0)),
            Inequality::new(Vector::from_ints(&[1, 1]), int(1)),
        ];
        let v = hrep_to_vrep(&HRep::new(2, ineqs).unwrap()).unwrap();
        assert_eq!(
            v.points,
            vec![
                Vector::from_ints(&[0, 0]),
                Vector::from_ints(&[0, 1]),
                Vector::from_ints(&[1, 0])
            ]
        );
    }

    #[test]
    fn conversion_errors() {
        let unbounded = HRep::new(2, vec![Inequality::new(Vector::from_ints(&[1, 0]), int(1))]).unwrap();
        assert!(matches!(hrep_to_vrep(&unbounded), Err(Error::Unbounded)));

        let half_plane = HRep::new(
            2,
            vec![
                Inequality::new(Vector::from_ints(&[1, 0]), int(1)),
                Inequality::new(Vector::from_ints(&[-1, 0]), int(1)),
                Inequality::new(Vector::from_ints(&[0, 1]), int(1)),
            ],
        )
        .unwrap();
        assert!(matches!(hrep_to_vrep(&half_plane), Err(Error::Unbounded)));

        let infeasible = HRep::new(
            1,
            vec![
                Inequality::new(Vector::from_ints(&[1]), int(-1)),
                Inequality::new(Vector::from_ints(&[-1]), int(-1)),
            ],
        )
        .unwrap();
        assert!(matches!(hrep_to_vrep(&infeasible), Err(Error::Infeasible)));

        let flat = HRep::new(
            2,
            vec![
                Inequality::new(Vector::from_ints(&[1, 0]), int(1)),
                Inequality::new(Vector::from_ints(&[-1, 0]), int(1)),
                Inequality::new(Vector::from_ints(&[0, 1]), int(0)),
                Inequality::new(Vector::from_ints(&[0, -1]), int(0)),
            ],
        )
        .unwrap();
        assert!(matches!(
            hrep_to_vrep(&flat),
            Err(Error::NotFullDimensional { hull_dim: 1, ambient_dim: 2 })
        ));

        let collinear = VRep::new(
            2,
            vec![Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 1]), Vector::from_ints(&[2, 2])],
        )
        .unwrap();
        let err = vrep_to_hrep(&collinear).unwrap_err();
        assert!(err.to_string().contains("hull dimension 1"));
    }

    #[test]
    fn redundant_points_dropped() {
        let p = Polytope::from_points(
            2,
            vec![
                Vector::from_ints(&[0, 0]),
                Vector::from_ints(&[2, 0]),
                Vector::from_ints(&[1, 0]),
                Vector::from_ints(&[0, 2]),
                Vector::new(vec![ratio(1, 2), ratio(1, 2)]),
                Vector::from_ints(&[0, 0]),
            ],
        )
        .unwrap();
        assert_eq!(p.num_vertices(), Some(3));
        assert_eq!(p.num_facets(), Some(3));
    }

    #[test]
    fn dimension_and_location() {
        let sq = square();
        assert_eq!(sq.dim(), 2);
        assert_eq!(sq.contains_point(&Vector::zeros(2)).unwrap(), Location::Interior);
        match sq.contains_point(&Vector::from_ints(&[1, 1])).unwrap() {
            Location::Boundary(f) => assert_eq!(f.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(sq.contains_point(&Vector::from_ints(&[2, 0])).unwrap(), Location::Outside);
        assert!(sq.contains_point(&Vector::zeros(3)).is_err());

        let point = Polytope::vrep_only(VRep::new(2, vec![Vector::from_ints(&[1, 2])]).unwrap());
        assert_eq!(point.dim(), 0);
        let seg = Polytope::vrep_only(
            VRep::new(3, vec![Vector::from_ints(&[0, 0, 0]), Vector::from_ints(&[1, 2, 3])]).unwrap(),
        );
        assert_eq!(seg.dim(), 1);
    }

    #[test]
    fn simple_vertices() {
        let sq = square();
        for v in 0..4 {
            assert!(sq.is_simple_vertex(v).unwrap());
        }
        assert!(sq.is_simple_vertex(4).is_err());
        let pyramid = Polytope::from_points(
            3,
            vec![
                Vector::from_ints(&[1, 1, 0]),
                Vector::from_ints(&[-1, 1, 0]),
                Vector::from_ints(&[-1, -1, 0]),
                Vector::from_ints(&[1, -1, 0]),
                Vector::from_ints(&[0, 0, 1]),
            ],
        )
        .unwrap();
        let apex = pyramid.vertex_index(&Vector::from_ints(&[0, 0, 1])).unwrap();
        assert!(!pyramid.is_simple_vertex(apex).unwrap());
        assert_eq!(pyramid.incidence().unwrap().facets_of(apex).count_ones(..), 4);
    }

    #[test]
    fn point_in_zero_dimensions() {
        let p = Polytope::from_points(0, vec![Vector::zeros(0)]).unwrap();
        assert_eq!(p.num_facets(), Some(0));
        assert_eq!(p.dim(), 0);
        let back = hrep_to_vrep(p.hrep().unwrap()).unwrap();
        assert_eq!(back.points.len(), 1);
    }

    #[test]
    fn irredundant_drops_duplicates_and_non_facets() {
        let ineqs = vec![
            Inequality::new(Vector::from_ints(&[1, 0]), int(1)),
            Inequality::new(Vector::from_ints(&[2, 0]), int(2)),
            Inequality::new(Vector::from_ints(&[-1, 0]), int(1)),
            Inequality::new(Vector::from_ints(&[0, 1]), int(1)),
            Inequality::new(Vector::from_ints(&[0, -1]), int(1)),
            Inequality::new(Vector::from_ints(&[1, 1]), int(2)),
            Inequality::new(Vector::from_ints(&[1, 1]), int(5)),
        ];
        let p = Polytope::from_hrep(HRep::new(2, ineqs).unwrap()).unwrap();
        assert_eq!(p.num_facets(), Some(7));
        assert_eq!(p.irredundant().unwrap().num_facets(), Some(4));
    }
}
