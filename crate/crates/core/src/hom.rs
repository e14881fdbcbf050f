// SPDX-License-Identifier: Apache-2.0

//! Hom-polytopes: the affine maps `f` with `f(P) ⊆ Q`.
//!
//! A map `x ↦ Lx + t` from `R^d` to `R^e` is the hom-space point
//! `(L_11, …, L_1d, …, L_e1, …, L_ed, t_1, …, t_e)`. Each pair of a source
//! vertex `v` and a target facet `a·y <= b` contributes the inequality
//! `a·(Lv + t) <= b`, so `Hom(P, Q)` has `|vert P| · |F(Q)|` inequalities.

use std::fmt::{self, Write as _};

use fixedbitset::FixedBitSet;
use num_traits::Zero;

use crate::constructions::{bipyramid, center_at_barycenter, cross_polytope, cube, dual, power, simplex};
use crate::error::{Error, Result};
use crate::linalg::{affine_rank, mat_rank, Matrix, Scalar, Vector};
use crate::polytope::{f_vector, hrep_to_vrep_any, HRep, Inequality, Location, Polytope};

/// An affine map `x ↦ linear · x + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    linear: Matrix,
    translation: Vector,
}

impl AffineMap {
    pub fn new(linear: Matrix, translation: Vector) -> Result<Self> {
        if linear.rows() != translation.dim() {
            return Err(Error::DimensionMismatch {
                expected: linear.rows(),
                found: translation.dim(),
            });
        }
        Ok(AffineMap { linear, translation })
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap {
            linear: Matrix::identity(dim),
            translation: Vector::zeros(dim),
        }
    }

    /// The map from `R^source_dim` sending everything to `value`.
    pub fn constant(source_dim: usize, value: Vector) -> Self {
        AffineMap {
            linear: Matrix::zeros(value.dim(), source_dim),
            translation: value,
        }
    }

    pub fn source_dim(&self) -> usize {
        self.linear.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.linear.rows()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.linear.mul_vec(x).add(&self.translation)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap> {
        if inner.target_dim() != self.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim(),
                found: inner.target_dim(),
            });
        }
        Ok(AffineMap {
            linear: self.linear.mul(&inner.linear),
            translation: self.apply(&inner.translation),
        })
    }

    /// Rank of the linear part, i.e. the dimension of the image of any
    /// full-dimensional source.
    pub fn rank(&self) -> usize {
        mat_rank(&self.linear)
    }

    /// Hom-space coordinates: linear part row-major, then the translation.
    pub fn to_point(&self) -> Vector {
        let mut out = self.linear.entries().to_vec();
        out.extend(self.translation.iter().cloned());
        Vector::new(out)
    }

    pub fn from_point(source_dim: usize, target_dim: usize, point: &Vector) -> Result<Self> {
        let expected = source_dim * target_dim + target_dim;
        if point.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: point.dim(),
            });
        }
        let (lin, tr) = point.split_at(source_dim * target_dim);
        Ok(AffineMap {
            linear: Matrix::new(target_dim, source_dim, lin.to_vec())?,
            translation: Vector::new(tr.to_vec()),
        })
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_point())
    }
}

/// Which source vertex is sent into which target facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetLabel {
    pub source_vertex: usize,
    pub target_facet: usize,
}

/// `Hom(P, Q)` as an H-polytope whose inequalities carry [`FacetLabel`]s.
#[derive(Clone, Debug)]
pub struct HomPolytope {
    source: Polytope,
    target: Polytope,
    hom: Polytope,
    labels: Vec<FacetLabel>,
}

/// Build switches for [`build_hom_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct HomOptions {
    /// Enumerate the vertices and confirm every inequality defines a distinct
    /// facet. Costly; the construction never produces redundant rows.
    pub assert_irredundant: bool,
}

/// A vertex of a hom-polytope with the labels of its active inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub map: AffineMap,
    /// Indices into [`HomPolytope::labels`], ascending.
    pub active: Vec<usize>,
}

fn hom_inequality(v: &Vector, facet: &Inequality) -> Inequality {
    let e = facet.normal.dim();
    let d = v.dim();
    let mut coeffs = Vec::with_capacity(d * e + e);
    for a in facet.normal.iter() {
        coeffs.extend(v.iter().map(|x| a * x));
    }
    coeffs.extend(facet.normal.iter().cloned());
    Inequality::new(Vector::new(coeffs), facet.offset.clone())
}

fn require_full(p: &Polytope) -> Result<()> {
    let hull_dim = p.dim();
    if hull_dim < p.ambient_dim() {
        return Err(Error::NotFullDimensional {
            hull_dim,
            ambient_dim: p.ambient_dim(),
        });
    }
    Ok(())
}

pub fn build_hom(p: &Polytope, q: &Polytope) -> Result<HomPolytope> {
    build_hom_with(p, q, HomOptions::default())
}

pub fn build_hom_with(p: &Polytope, q: &Polytope, opts: HomOptions) -> Result<HomPolytope> {
    if p.vrep().is_none() {
        return Err(Error::MissingRepresentation("V (source)"));
    }
    if q.hrep().is_none() && q.vrep().is_none() {
        return Err(Error::MissingRepresentation("H (target)"));
    }
    require_full(p)?;
    let source = p.complete()?;
    let target = q.irredundant()?;
    require_full(&target)?;

    let (d, e) = (source.ambient_dim(), target.ambient_dim());
    let mut ineqs = Vec::new();
    let mut labels = Vec::new();
    for (vi, v) in source.vertices()?.iter().enumerate() {
        for (fi, facet) in target.facets()?.iter().enumerate() {
            ineqs.push(hom_inequality(v, facet));
            labels.push(FacetLabel {
                source_vertex: vi,
                target_facet: fi,
            });
        }
    }
    let hom = Polytope::hrep_only(HRep::new(d * e + e, ineqs)?);
    let h = HomPolytope {
        source,
        target,
        hom,
        labels,
    };
    if opts.assert_irredundant {
        h.check_irredundant()?;
    }
    Ok(h)
}

impl HomPolytope {
    /// Rebuilds `P` and `Q` from a labeled hom H-representation.
    ///
    /// Each row must be a positive multiple of `a·(Lv + t) <= b`; vertex `v`
    /// and facet `(a, b)` are read back from the coefficients.
    pub fn from_labeled_hrep(
        source_dim: usize,
        target_dim: usize,
        hrep: HRep,
        labels: Vec<FacetLabel>,
    ) -> Result<Self> {
        let (d, e) = (source_dim, target_dim);
        if hrep.ambient_dim != d * e + e {
            return Err(Error::DimensionMismatch {
                expected: d * e + e,
                found: hrep.ambient_dim,
            });
        }
        if labels.len() != hrep.inequalities.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} inequalities",
                labels.len(),
                hrep.inequalities.len()
            )));
        }
        let nv = labels.iter().map(|l| l.source_vertex + 1).max().unwrap_or(0);
        let nf = labels.iter().map(|l| l.target_facet + 1).max().unwrap_or(0);
        let mut verts: Vec<Option<Vector>> = vec![None; nv];
        let mut facets: Vec<Option<Inequality>> = vec![None; nf];
        for (row, label) in hrep.inequalities.iter().zip(&labels) {
            let a = Vector::new(row.normal[d * e..].to_vec());
            let i = a
                .iter()
                .position(|x| !x.is_zero())
                .ok_or_else(|| Error::InvalidArgument("hom row with zero translation part".into()))?;
            let v: Vector = (0..d).map(|j| &row.normal[i * d + j] / &a[i]).collect();
            if hom_inequality(&v, &Inequality::new(a.clone(), row.offset.clone())) != *row {
                return Err(Error::InvalidArgument(format!(
                    "row for label ({}, {}) is not of the form a·(Lv + t) <= b",
                    label.source_vertex, label.target_facet
                )));
            }
            let facet = Inequality::new(a, row.offset.clone()).canonical();
            check_consistent(&mut verts[label.source_vertex], v, "source vertex")?;
            check_consistent(&mut facets[label.target_facet], facet, "target facet")?;
        }
        let verts: Vec<Vector> = verts
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument("labels skip a source vertex".into()))?;
        let facets: Vec<Inequality> = facets
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument("labels skip a target facet".into()))?;
        let source = Polytope::from_points(d, verts)?;
        let target = Polytope::from_hrep(HRep::new(e, facets)?)?;
        Ok(HomPolytope {
            source,
            target,
            hom: Polytope::hrep_only(hrep),
            labels,
        })
    }

    pub fn source(&self) -> &Polytope {
        &self.source
    }

    pub fn target(&self) -> &Polytope {
        &self.target
    }

    /// The hom-polytope itself (H-representation only).
    pub fn hom(&self) -> &Polytope {
        &self.hom
    }

    pub fn hrep(&self) -> &HRep {
        self.hom.hrep().expect("hom is built from inequalities")
    }

    pub fn labels(&self) -> &[FacetLabel] {
        &self.labels
    }

    pub fn source_dim(&self) -> usize {
        self.source.ambient_dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target.ambient_dim()
    }

    /// Dimension of hom-space, `d·e + e`.
    pub fn dim(&self) -> usize {
        self.hom.ambient_dim()
    }

    pub fn num_inequalities(&self) -> usize {
        self.labels.len()
    }

    /// Labels of the inequalities tight at `f`; errors if `f(P) ⊄ Q`.
    pub fn active_labels(&self, f: &AffineMap) -> Result<Vec<usize>> {
        self.check_dims(f)?;
        let x = f.to_point();
        let mut active = Vec::new();
        for (j, h) in self.hrep().inequalities.iter().enumerate() {
            let s = h.slack(&x);
            if s < Scalar::zero() {
                return Err(Error::NotContained);
            }
            if s.is_zero() {
                active.push(j);
            }
        }
        Ok(active)
    }

    /// Whether `f(P) ⊆ Q`.
    pub fn contains_map(&self, f: &AffineMap) -> Result<bool> {
        self.check_dims(f)?;
        self.hom.contains(&f.to_point())
    }

    /// Whether the hom inequalities tight at `f` span hom-space.
    pub fn is_vertex(&self, f: &AffineMap) -> Result<bool> {
        let active = self.active_labels(f)?;
        let rows: Vec<Vector> = active.iter().map(|&j| self.hrep().inequalities[j].normal.clone()).collect();
        Ok(mat_rank(&Matrix::from_rows(&rows, self.dim())) == self.dim())
    }

    fn check_dims(&self, f: &AffineMap) -> Result<()> {
        if f.source_dim() != self.source_dim() || f.target_dim() != self.target_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.source_dim() * f.target_dim() + f.target_dim(),
            });
        }
        Ok(())
    }

    fn check_irredundant(&self) -> Result<()> {
        let verts = hrep_to_vrep_any(self.hrep())?;
        let points: Vec<Vector> = verts.iter().map(|(x, _)| x.clone()).collect();
        let dim = affine_rank(&points);
        if dim != self.dim() {
            return Err(Error::Invariant(format!(
                "hom-polytope has dimension {dim}, expected {}",
                self.dim()
            )));
        }
        let mut seen: Vec<FixedBitSet> = Vec::new();
        for j in 0..self.labels.len() {
            let mut on = FixedBitSet::with_capacity(verts.len());
            for (i, (_, tight)) in verts.iter().enumerate() {
                if tight.contains(j) {
                    on.insert(i);
                }
            }
            let pts: Vec<Vector> = on.ones().map(|i| points[i].clone()).collect();
            if pts.is_empty() || affine_rank(&pts) + 1 != dim || seen.contains(&on) {
                return Err(Error::Invariant(format!("hom inequality {j} is not facet-defining")));
            }
            seen.push(on);
        }
        Ok(())
    }

    /// The hom-polytope with its vertices enumerated.
    pub fn complete(&self) -> Result<Polytope> {
        self.hom.complete()
    }
}

fn check_consistent<T: PartialEq>(slot: &mut Option<T>, value: T, what: &str) -> Result<()> {
    match slot {
        Some(old) if *old != value => Err(Error::InvalidArgument(format!("inconsistent {what} across labels"))),
        Some(_) => Ok(()),
        None => {
            *slot = Some(value);
            Ok(())
        }
    }
}

/// Every vertex of `Hom(P, Q)` with its active labels, in lexicographic
/// order of hom-space coordinates.
pub fn enumerate_vertex_maps(h: &HomPolytope) -> Result<Vec<VertexMap>> {
    let (d, e) = (h.source_dim(), h.target_dim());
    let m = h.num_inequalities();
    hrep_to_vrep_any(h.hrep())?
        .into_iter()
        .map(|(x, tight)| {
            Ok(VertexMap {
                map: AffineMap::from_point(d, e, &x)?,
                active: tight.ones().filter(|&j| j < m).collect(),
            })
        })
        .collect()
}

/// Whether `f(v)` lies in `Q` for every vertex `v` of `P`.
pub fn maps_into(f: &AffineMap, p: &Polytope, q: &Polytope) -> Result<bool> {
    for v in p.vertices()? {
        if q.contains_point(&f.apply(v))? == Location::Outside {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Structural identities, checked on f-vectors.

/// Largest hom dimension accepted by [`hom_identity_check`].
pub const IDENTITY_DIM_LIMIT: usize = 8;

#[derive(Clone, Debug)]
pub enum IdentityKind {
    /// `Hom(Δ_n, P)` against `P^(n+1)`.
    SimplexPower { n: usize, target: Polytope },
    /// `Hom(P, □_n)` against `◇(P°)^n`, with `P` recentred at its barycenter.
    CubeBipyramid { source: Polytope, n: usize },
    /// `Hom(□_m, ◇_n)` against `Hom(□_(n-1), ◇_(m+1))`.
    CubeCrossSwap { m: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: String,
    pub rhs: String,
    pub lhs_f_vector: Vec<usize>,
    pub rhs_f_vector: Vec<usize>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs_f_vector == self.rhs_f_vector
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_vec = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        writeln!(f, "{}\t({})", self.lhs, fmt_vec(&self.lhs_f_vector))?;
        writeln!(f, "{}\t({})", self.rhs, fmt_vec(&self.rhs_f_vector))?;
        write!(f, "{}", if self.holds() { "equal" } else { "different" })
    }
}

fn check_limit(dim: usize) -> Result<()> {
    if dim > IDENTITY_DIM_LIMIT {
        return Err(Error::TooLarge {
            dim,
            limit: IDENTITY_DIM_LIMIT,
        });
    }
    Ok(())
}

fn hom_f_vector(p: &Polytope, q: &Polytope) -> Result<Vec<usize>> {
    check_limit(p.ambient_dim() * q.ambient_dim() + q.ambient_dim())?;
    f_vector(&build_hom(p, q)?.complete()?)
}

pub fn hom_identity_check(kind: &IdentityKind) -> Result<IdentityReport> {
    match kind {
        IdentityKind::SimplexPower { n, target } => {
            check_limit(n * target.ambient_dim() + target.ambient_dim())?;
            let lhs = hom_f_vector(&simplex(*n)?, target)?;
            let rhs = f_vector(&power(target, n + 1)?)?;
            Ok(IdentityReport {
                lhs: format!("Hom(simplex {n}, P)"),
                rhs: format!("P^{}", n + 1),
                lhs_f_vector: lhs,
                rhs_f_vector: rhs,
            })
        }
        IdentityKind::CubeBipyramid { source, n } => {
            check_limit((source.ambient_dim() + 1) * n)?;
            let lhs = hom_f_vector(source, &cube(*n)?)?;
            let polar = dual(&center_at_barycenter(source)?)?;
            let rhs = f_vector(&power(&bipyramid(&polar)?, *n)?)?;
            Ok(IdentityReport {
                lhs: format!("Hom(P, cube {n})"),
                rhs: format!("bipyramid(dual P)^{n}"),
                lhs_f_vector: lhs,
                rhs_f_vector: rhs,
            })
        }
        IdentityKind::CubeCrossSwap { m, n } => {
            if *n < 2 {
                return Err(Error::InvalidArgument("cube/cross swap needs n >= 2".into()));
            }
            check_limit(m * n + n)?;
            let lhs = hom_f_vector(&cube(*m)?, &cross_polytope(*n)?)?;
            let rhs = hom_f_vector(&cube(n - 1)?, &cross_polytope(m + 1)?)?;
            Ok(IdentityReport {
                lhs: format!("Hom(cube {m}, cross {n})"),
                rhs: format!("Hom(cube {}, cross {})", n - 1, m + 1),
                lhs_f_vector: lhs,
                rhs_f_vector: rhs,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Label sidecar: `# hom source_dim=<d> target_dim=<e>` then
// `<ineq_index> <vertex_index> <facet_index>` per line.

pub fn write_labels(h: &HomPolytope) -> String {
    let mut out = format!("# hom source_dim={} target_dim={}\n", h.source_dim(), h.target_dim());
    for (i, l) in h.labels.iter().enumerate() {
        let _ = writeln!(out, "{i} {} {}", l.source_vertex, l.target_facet);
    }
    out
}

/// Source and target dimension from a sidecar header.
pub type SidecarDims = (usize, usize);

/// Parsed sidecar: the dimensions (if the header is present) and the labels.
pub fn parse_labels(text: &str) -> Result<(Option<SidecarDims>, Vec<FacetLabel>)> {
    let mut dims = None;
    let mut labels = Vec::new();
    for (ln, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut toks = rest.split_whitespace();
            if toks.next() == Some("hom") {
                let mut d = None;
                let mut e = None;
                for t in toks {
                    if let Some(v) = t.strip_prefix("source_dim=") {
                        d = v.parse().ok();
                    } else if let Some(v) = t.strip_prefix("target_dim=") {
                        e = v.parse().ok();
                    }
                }
                match (d, e) {
                    (Some(d), Some(e)) => dims = Some((d, e)),
                    _ => {
                        return Err(Error::Parse {
                            line: ln,
                            column: 1,
                            message: "malformed hom header".into(),
                        })
                    }
                }
            }
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: ln,
                column: 1,
                message: "label lines hold three nonnegative integers".into(),
            })?;
        if nums.len() != 3 || nums[0] != labels.len() {
            return Err(Error::Parse {
                line: ln,
                column: 1,
                message: format!("expected `{} <vertex> <facet>`", labels.len()),
            });
        }
        labels.push(FacetLabel {
            source_vertex: nums[1],
            target_facet: nums[2],
        });
    }
    Ok((dims, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{regular_polygon, RegularPolygonSpec};
    use crate::linalg::{int, ratio};
    use proptest::prelude::*;

    fn ngon(n: usize) -> Polytope {
        regular_polygon(RegularPolygonSpec::new(n, 6).unwrap()).unwrap()
    }

    #[test]
    fn map_round_trip_and_compose() {
        let f = AffineMap::new(Matrix::from_ints(2, 2, &[1, 2, 3, 4]), Vector::from_ints(&[5, 6])).unwrap();
        assert_eq!(f.to_point(), Vector::from_ints(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(AffineMap::from_point(2, 2, &f.to_point()).unwrap(), f);
        let g = AffineMap::new(Matrix::from_ints(1, 2, &[1, -1]), Vector::from_ints(&[0])).unwrap();
        let gf = g.compose(&f).unwrap();
        let x = Vector::from_ints(&[7, -2]);
        assert_eq!(gf.apply(&x), g.apply(&f.apply(&x)));
        assert!(f.compose(&g).is_err());
        assert!(AffineMap::from_point(2, 2, &Vector::zeros(5)).is_err());
    }

    #[test]
    fn segment_to_segment() {
        let s = simplex(1).unwrap();
        let h = build_hom_with(&s, &s, HomOptions { assert_irredundant: true }).unwrap();
        assert_eq!((h.dim(), h.num_inequalities()), (2, 4));
        let maps = enumerate_vertex_maps(&h).unwrap();
        assert_eq!(maps.len(), 4);
        let mut images: Vec<(Vector, Vector)> = maps
            .iter()
            .map(|m| (m.map.apply(&Vector::from_ints(&[0])), m.map.apply(&Vector::from_ints(&[1]))))
            .collect();
        images.sort();
        let z = || Vector::from_ints(&[0]);
        let o = || Vector::from_ints(&[1]);
        assert_eq!(images, vec![(z(), z()), (z(), o()), (o(), z()), (o(), o())]);
    }

    #[test]
    fn triangle_and_square_homs() {
        let p3 = ngon(3);
        let h = build_hom_with(&p3, &p3, HomOptions { assert_irredundant: true }).unwrap();
        assert_eq!((h.dim(), h.num_inequalities()), (6, 9));

        let sq = cube(2).unwrap();
        let h = build_hom(&sq, &sq).unwrap();
        assert_eq!((h.dim(), h.num_inequalities()), (6, 16));
        let maps = enumerate_vertex_maps(&h).unwrap();
        assert_eq!(maps.len(), 36);
        for vm in &maps {
            assert!(maps_into(&vm.map, h.source(), h.target()).unwrap());
            assert!(vm.active.len() >= h.dim());
            assert!(h.is_vertex(&vm.map).unwrap());
        }
    }

    #[test]
    fn simplex_source_counts() {
        let p5 = ngon(5);
        let h = build_hom(&simplex(2).unwrap(), &p5).unwrap();
        assert_eq!(enumerate_vertex_maps(&h).unwrap().len(), 125);
    }

    #[test]
    fn identity_vertex_of_square_hom() {
        let p4 = ngon(4);
        let h = build_hom(&p4, &p4).unwrap();
        let id = AffineMap::identity(2);
        assert_eq!(h.active_labels(&id).unwrap().len(), 8);
        assert!(h.is_vertex(&id).unwrap());
        let maps = enumerate_vertex_maps(&h).unwrap();
        let mid_point = maps[0].map.to_point().add(&maps[1].map.to_point()).scale(&ratio(1, 2));
        let mid = AffineMap::from_point(2, 2, &mid_point).unwrap();
        assert!(!h.is_vertex(&mid).unwrap());
        let outside = AffineMap::constant(2, Vector::from_ints(&[2, 0]));
        assert!(matches!(h.active_labels(&outside), Err(Error::NotContained)));
    }

    #[test]
    fn hom_of_square_has_expected_f_vector() {
        let p4 = ngon(4);
        let fv = f_vector(&build_hom(&p4, &p4).unwrap().complete().unwrap()).unwrap();
        // Hom(P_4, P_4) is the square of Hom(P_4, [-1, 1]), a bipyramid over a square.
        let factor = bipyramid(&dual(&p4).unwrap()).unwrap();
        assert_eq!(fv, f_vector(&power(&factor, 2).unwrap()).unwrap());
        assert_eq!(fv, vec![36, 144, 240, 204, 88, 16, 1]);
        let euler: i64 = fv[..fv.len() - 1].iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        assert_eq!(euler, 0);
    }

    #[test]
    fn rejects_bad_inputs() {
        let flat = Polytope::vrep_only(
            crate::polytope::VRep::new(2, vec![Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 1])]).unwrap(),
        );
        assert!(matches!(
            build_hom(&flat, &cube(2).unwrap()),
            Err(Error::NotFullDimensional { hull_dim: 1, .. })
        ));
        let h_only = Polytope::hrep_only(cube(1).unwrap().hrep().unwrap().clone());
        assert!(matches!(build_hom(&h_only, &h_only), Err(Error::MissingRepresentation(_))));
    }

    #[test]
    fn identities() {
        let r = hom_identity_check(&IdentityKind::SimplexPower { n: 1, target: ngon(5) }).unwrap();
        assert!(r.holds(), "{r}");
        let r = hom_identity_check(&IdentityKind::CubeBipyramid {
            source: cube(2).unwrap(),
            n: 1,
        })
        .unwrap();
        assert!(r.holds(), "{r}");
        assert_eq!(r.lhs_f_vector, f_vector(&cross_polytope(3).unwrap()).unwrap());
        let r = hom_identity_check(&IdentityKind::CubeCrossSwap { m: 2, n: 2 }).unwrap();
        assert!(r.holds(), "{r}");
        assert_eq!(r.lhs_f_vector.last(), Some(&1));
        assert_eq!(r.lhs_f_vector[r.lhs_f_vector.len() - 2], 16);
        assert!(matches!(
            hom_identity_check(&IdentityKind::CubeCrossSwap { m: 3, n: 3 }),
            Err(Error::TooLarge { dim: 12, limit: 8 })
        ));
    }

    #[test]
    fn labels_round_trip() {
        let p3 = ngon(3);
        let p4 = ngon(4);
        let h = build_hom(&p3, &p4).unwrap();
        let text = write_labels(&h);
        let (dims, labels) = parse_labels(&text).unwrap();
        assert_eq!(dims, Some((2, 2)));
        assert_eq!(labels, h.labels());
        let back = HomPolytope::from_labeled_hrep(2, 2, h.hrep().clone(), labels).unwrap();
        assert_eq!(back.source().vertices().unwrap(), h.source().vertices().unwrap());
        assert_eq!(back.target().num_facets(), h.target().num_facets());
        assert!(parse_labels("0 1 2\n2 0 0\n").is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn point_round_trip(d in 0usize..4, e in 1usize..4, seed in proptest::collection::vec(-9i64..9, 20)) {
            let vals: Vec<Scalar> = seed.iter().take(d * e + e).map(|&x| int(x)).collect();
            prop_assume!(vals.len() == d * e + e);
            let p = Vector::new(vals);
            let f = AffineMap::from_point(d, e, &p).unwrap();
            prop_assert_eq!(f.to_point(), p);
        }
    }
}
