// SPDX-License-Identifier: Apache-2.0

//! Classification of affine maps between polytopes: rank, the factorization
//! through the image, vertex test, deflations and face-collapses.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hom::{build_hom, enumerate_vertex_maps, maps_into, AffineMap, HomPolytope, VertexMap};
use crate::linalg::{Matrix, Vector};
use crate::polytope::{chart_project, face_lattice, hrep_to_vrep_any, Chart, HRep, Inequality, Location, Polytope};

pub fn map_rank(f: &AffineMap) -> usize {
    f.rank()
}

/// `f(P)` in coordinates of its affine hull.
#[derive(Clone, Debug)]
pub struct ImagePolytope {
    /// Full-dimensional in `R^chart.dim()`.
    pub polytope: Polytope,
    pub chart: Chart,
}

pub fn image_polytope(f: &AffineMap, p: &Polytope) -> Result<ImagePolytope> {
    let images: Vec<Vector> = p.vertices()?.iter().map(|v| f.apply(v)).collect();
    let (projected, chart) = chart_project(&images)?;
    let polytope = Polytope::from_points(chart.dim(), projected)?;
    Ok(ImagePolytope { polytope, chart })
}

/// `f = f_inj ∘ f_surj` through the image chart of `f(P)`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub image: ImagePolytope,
    pub surj: AffineMap,
    pub inj: AffineMap,
}

pub fn surj_inj_factorize(f: &AffineMap, p: &Polytope, q: &Polytope) -> Result<Factorization> {
    if !maps_into(f, p, q)? {
        return Err(Error::NotContained);
    }
    let image = image_polytope(f, p)?;
    let chart = &image.chart;
    let proj = chart.project_matrix();
    let surj = AffineMap::new(
        proj.mul(f.linear()),
        chart.project(&f.apply(&Vector::zeros(f.source_dim()))),
    )?;
    let inj = AffineMap::new(chart.lift_matrix(), chart.basepoint().clone())?;
    Ok(Factorization { image, surj, inj })
}

pub fn is_vertex_map(f: &AffineMap, h: &HomPolytope) -> Result<bool> {
    h.is_vertex(f)
}

/// Where `f(v)` lands in the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageLocation {
    Vertex(usize),
    BoundaryNonVertex,
    Interior,
}

impl fmt::Display for ImageLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageLocation::Vertex(i) => write!(f, "v{i}"),
            ImageLocation::BoundaryNonVertex => f.write_str("b"),
            ImageLocation::Interior => f.write_str("i"),
        }
    }
}

/// Locations of `f(v)` in `Q` for every vertex `v` of `P`.
pub fn image_vertex_locations(f: &AffineMap, p: &Polytope, q: &Polytope) -> Result<Vec<ImageLocation>> {
    p.vertices()?
        .iter()
        .map(|v| {
            let y = f.apply(v);
            Ok(match q.contains_point(&y)? {
                Location::Outside => return Err(Error::NotContained),
                Location::Interior => ImageLocation::Interior,
                Location::Boundary(_) => match q.vertex_index(&y) {
                    Some(i) => ImageLocation::Vertex(i),
                    None => ImageLocation::BoundaryNonVertex,
                },
            })
        })
        .collect()
}

/// Whether `f(P) = Q`, decided by mutual containment.
pub fn is_surjective(f: &AffineMap, p: &Polytope, q: &Polytope) -> Result<bool> {
    if !maps_into(f, p, q)? || f.rank() < q.ambient_dim() {
        return Ok(false);
    }
    // Full rank, so the image chart is the identity.
    let image = image_polytope(f, p)?.polytope;
    for w in q.vertices()? {
        if !image.contains(w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Surjective, a vertex of `Hom(P, Q)`, and every vertex lands on a vertex
/// of `Q` or in its interior.
pub fn is_deflation(f: &AffineMap, h: &HomPolytope) -> Result<bool> {
    let (p, q) = (h.source(), h.target());
    if !is_surjective(f, p, q)? || !h.is_vertex(f)? {
        return Ok(false);
    }
    Ok(image_vertex_locations(f, p, q)?
        .iter()
        .all(|l| *l != ImageLocation::BoundaryNonVertex))
}

// ---------------------------------------------------------------------------
// Face-collapses

/// A family of faces of `P`, each given by its vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceFamily {
    pub faces: Vec<Vec<usize>>,
}

/// Row echelon basis of the span of `vectors`.
fn span_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = Matrix::from_rows(vectors, dim).rref();
    (0..pivots.len()).map(|i| r.row_vector(i)).collect()
}

fn face_directions(verts: &[Vector], face: &[usize]) -> Vec<Vector> {
    face[1..].iter().map(|&i| verts[i].sub(&verts[face[0]])).collect()
}

impl FaceFamily {
    /// Basis of `lin(G_1) + … + lin(G_k)`.
    pub fn direction_basis(&self, p: &Polytope) -> Result<Vec<Vector>> {
        let verts = p.vertices()?;
        let dirs: Vec<Vector> = self.faces.iter().flat_map(|g| face_directions(verts, g)).collect();
        Ok(span_basis(&dirs, p.ambient_dim()))
    }

    /// Conditions (i)–(iii) for a collapse of rank `r`: positive-dimensional
    /// members, `codim Σ lin(G_i) = r`, and `(G_i + Σ lin(G_j)) ∩ P = G_i`.
    pub fn satisfies(&self, p: &Polytope, r: usize) -> Result<bool> {
        let verts = p.vertices()?;
        if self.faces.is_empty() || self.faces.iter().any(|g| g.len() < 2) {
            return Ok(false);
        }
        let basis = self.direction_basis(p)?;
        if p.ambient_dim() - basis.len() != r {
            return Ok(false);
        }
        for g in &self.faces {
            if slice_vertices(p, &verts[g[0]], &basis)?.len() != g.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Vertices of `(x0 + span(basis)) ∩ P`.
fn slice_vertices(p: &Polytope, x0: &Vector, basis: &[Vector]) -> Result<Vec<Vector>> {
    let ineqs: Vec<Inequality> = p
        .facets()?
        .iter()
        .map(|h| {
            let normal: Vector = basis.iter().map(|b| h.normal.dot(b)).collect();
            Inequality::new(normal, h.slack(x0))
        })
        .collect();
    let hrep = HRep::new(basis.len(), ineqs)?;
    Ok(hrep_to_vrep_any(&hrep)?
        .into_iter()
        .map(|(y, _)| {
            basis
                .iter()
                .zip(y.iter())
                .fold(x0.clone(), |acc, (b, c)| acc.add(&b.scale(c)))
        })
        .collect())
}

/// The positive-dimensional fibers of `f` over the vertices of `f(P)`.
pub fn canonical_family(f: &AffineMap, p: &Polytope) -> Result<FaceFamily> {
    let image = image_polytope(f, p)?;
    let verts = p.vertices()?;
    let mut faces = Vec::new();
    for w in image.polytope.vertices()? {
        let fiber: Vec<usize> = (0..verts.len())
            .filter(|&i| &image.chart.project(&f.apply(&verts[i])) == w)
            .collect();
        if fiber.len() > 1 {
            faces.push(fiber);
        }
    }
    Ok(FaceFamily { faces })
}

/// The family witnessing that `f` is a face-collapse, if it is one.
///
/// `f` is read as a surjection onto `f(P)`; the candidate is the canonical
/// fiber family, which must span `ker f`, separate as in condition (iii),
/// and admit no further face of `P`.
pub fn face_collapse_family(f: &AffineMap, p: &Polytope) -> Result<Option<FaceFamily>> {
    let p = p.complete()?;
    let d = p.ambient_dim();
    let r = f.rank();
    if p.dim() < d {
        return Err(Error::NotFullDimensional {
            hull_dim: p.dim(),
            ambient_dim: d,
        });
    }
    if r >= d {
        return Ok(None);
    }
    let family = canonical_family(f, &p)?;
    if !family.satisfies(&p, r)? {
        return Ok(None);
    }
    // Every fiber lies in ker f, so equal dimension means equal spaces.
    debug_assert!(family
        .direction_basis(&p)?
        .iter()
        .all(|b| f.linear().mul_vec(b).is_zero()));

    let lattice = face_lattice(&p)?;
    for face in lattice.iter().filter(|g| g.dim > 0) {
        if family.faces.contains(&face.vertices) {
            continue;
        }
        let mut bigger = family.clone();
        bigger.faces.push(face.vertices.clone());
        if bigger.satisfies(&p, r)? {
            return Ok(None);
        }
    }
    Ok(Some(family))
}

pub fn is_face_collapse(f: &AffineMap, p: &Polytope) -> Result<bool> {
    Ok(face_collapse_family(f, p)?.is_some())
}

// ---------------------------------------------------------------------------
// Whole hom-polytopes

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapClassification {
    pub rank: usize,
    pub is_vertex: bool,
    pub surjective_onto_target: bool,
    pub image_vertex_locations: Vec<ImageLocation>,
    pub is_deflation: bool,
    /// Whether `f_surj: P → f(P)` is a face-collapse.
    pub surj_factor_is_face_collapse: bool,
    /// Whether `f_surj` is a deflation onto `f(P)`.
    pub surj_factor_is_deflation: bool,
    pub surj_factor_is_vertex: bool,
    pub inj_factor_is_vertex: bool,
    pub active_labels: usize,
    pub simple: bool,
}

/// Counts over a classified hom-polytope.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    /// Vertex counts by rank `0..=min(d, e)`.
    pub by_rank: Vec<usize>,
    pub simple: usize,
    pub deflations: usize,
    pub face_collapses: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.by_rank.iter().sum()
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, c) in self.by_rank.iter().enumerate() {
            write!(f, "rank{r}={c}\t")?;
        }
        write!(
            f,
            "total={}\tsimple={}\tnon_simple={}",
            self.total(),
            self.simple,
            self.total() - self.simple
        )
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub vertices: Vec<VertexMap>,
    pub records: Vec<MapClassification>,
    pub summary: Summary,
}

/// Classifies one map in `Hom(P, Q)`; `f` must map `P` into `Q`.
pub fn classify_map(f: &AffineMap, h: &HomPolytope) -> Result<MapClassification> {
    let (p, q) = (h.source(), h.target());
    let active = h.active_labels(f)?;
    let is_vertex = h.is_vertex(f)?;
    let fac = surj_inj_factorize(f, p, q)?;
    let onto_image = build_hom(p, &fac.image.polytope)?;
    let from_image = build_hom(&fac.image.polytope, q)?;
    let surjective = fac.image.chart.dim() == q.ambient_dim() && is_surjective(f, p, q)?;
    Ok(MapClassification {
        rank: f.rank(),
        is_vertex,
        surjective_onto_target: surjective,
        image_vertex_locations: image_vertex_locations(f, p, q)?,
        is_deflation: surjective && is_deflation(f, h)?,
        surj_factor_is_face_collapse: is_face_collapse(&fac.surj, p)?,
        surj_factor_is_deflation: is_deflation(&fac.surj, &onto_image)?,
        surj_factor_is_vertex: onto_image.is_vertex(&fac.surj)?,
        inj_factor_is_vertex: from_image.is_vertex(&fac.inj)?,
        active_labels: active.len(),
        simple: is_vertex && active.len() == h.dim(),
    })
}

/// Enumerates and classifies every vertex of `Hom(P, Q)`.
pub fn classify_all(h: &HomPolytope) -> Result<Classification> {
    let vertices = enumerate_vertex_maps(h)?;
    let max_rank = h.source_dim().min(h.target_dim());
    let mut summary = Summary {
        by_rank: vec![0; max_rank + 1],
        ..Summary::default()
    };
    let records = vertices
        .iter()
        .map(|v| classify_map(&v.map, h))
        .collect::<Result<Vec<_>>>()?;
    for c in &records {
        summary.by_rank[c.rank] += 1;
        summary.simple += c.simple as usize;
        summary.deflations += c.is_deflation as usize;
        summary.face_collapses += c.surj_factor_is_face_collapse as usize;
    }
    Ok(Classification {
        vertices,
        records,
        summary,
    })
}

/// `(l - m) · n · (n - 1)` for an `l`-gon source with `m` pairs of parallel
/// edges and a target with `n` vertices.
pub fn rank1_polygon_count(p: &Polytope, q: &Polytope) -> Result<usize> {
    let p = p.irredundant()?;
    if p.ambient_dim() != 2 || p.dim() != 2 {
        return Err(Error::InvalidArgument(format!(
            "source must be a polygon, got dimension {} in R^{}",
            p.dim(),
            p.ambient_dim()
        )));
    }
    let normals: Vec<&Vector> = p.facets()?.iter().map(|h| &h.normal).collect();
    let l = normals.len();
    let parallel = (0..l)
        .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
        .filter(|&(i, j)| normals[i].add(normals[j]).iter().all(Zero::is_zero))
        .count();
    let n = q.complete()?.num_vertices().unwrap_or(0);
    Ok((l - parallel) * n * n.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cross_polytope, cube, regular_polygon, simplex, RegularPolygonSpec};
    use crate::linalg::{ratio, Matrix};

    fn ngon(n: usize) -> Polytope {
        regular_polygon(RegularPolygonSpec::new(n, 6).unwrap()).unwrap()
    }

    fn pts(rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter().map(|r| Vector::from_ints(r)).collect()
    }

    fn proj(rows: usize, cols: usize) -> AffineMap {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            m.set(i, i, num_traits::One::one());
        }
        AffineMap::new(m, Vector::zeros(rows)).unwrap()
    }

    fn prism_pi() -> (Polytope, Polytope) {
        let p = Polytope::from_points(
            3,
            pts(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]),
        )
        .unwrap();
        let q = Polytope::from_points(2, pts(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        (p, q)
    }

    fn wedge_rho() -> (Polytope, Polytope) {
        let p = Polytope::from_points(3, pts(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap();
        let q = Polytope::from_points(2, pts(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        (p, q)
    }

    #[test]
    fn ranks() {
        assert_eq!(map_rank(&AffineMap::constant(2, Vector::from_ints(&[1, 1]))), 0);
        assert_eq!(map_rank(&AffineMap::identity(2)), 2);
        let f = AffineMap::new(Matrix::from_ints(2, 2, &[1, 1, 1, 1]), Vector::zeros(2)).unwrap();
        assert_eq!(map_rank(&f), 1);
    }

    #[test]
    fn images() {
        let sq = cube(2).unwrap();
        let id = image_polytope(&AffineMap::identity(2), &sq).unwrap();
        assert!(id.chart.is_identity());
        assert_eq!(id.polytope.num_vertices(), Some(4));
        let seg = image_polytope(&proj(1, 2), &sq).unwrap();
        let mut v = seg.polytope.vertices().unwrap().to_vec();
        v.sort();
        assert_eq!(v, pts(&[&[-1], &[1]]));

        // P_4 inscribed in P_8 as the square on every other vertex.
        let p8 = ngon(8);
        let p8v = p8.vertices().unwrap();
        let p4 = ngon(4);
        let p4v = p4.vertices().unwrap();
        let lin = {
            // Solve L with L e_1 = w_0, L e_2 = w_2 (the square's vertices are ±e_i).
            let mut m = Matrix::zeros(2, 2);
            for (i, (a, b)) in p8v[0].iter().zip(p8v[2].iter()).enumerate() {
                m.set(i, 0, a.clone());
                m.set(i, 1, b.clone());
            }
            m
        };
        let f = AffineMap::new(lin, Vector::zeros(2)).unwrap();
        assert!(p4v.iter().all(|v| p8.vertex_index(&f.apply(v)).is_some()));
        let im = image_polytope(&f, &p4).unwrap();
        assert_eq!((im.polytope.num_vertices(), im.polytope.dim()), (Some(4), 2));
    }

    #[test]
    fn factorizations() {
        let sq = cube(2).unwrap();
        let x = Vector::from_ints(&[1, -1]);
        for f in [
            AffineMap::identity(2),
            AffineMap::constant(2, Vector::from_ints(&[0, 1])),
        ] {
            let fac = surj_inj_factorize(&f, &sq, &sq).unwrap();
            assert_eq!(fac.inj.compose(&fac.surj).unwrap(), f);
            assert_eq!(fac.inj.apply(&fac.surj.apply(&x)), f.apply(&x));
        }
        // Collapse the square onto the diagonal of the triangle.
        let tri = simplex(2).unwrap();
        let f = AffineMap::new(
            Matrix::new(2, 2, vec![ratio(1, 2), ratio(0, 1), ratio(-1, 2), ratio(0, 1)]).unwrap(),
            Vector::new(vec![ratio(1, 2), ratio(1, 2)]),
        )
        .unwrap();
        let fac = surj_inj_factorize(&f, &sq, &tri).unwrap();
        assert_eq!(fac.image.chart.dim(), 1);
        assert_eq!(fac.inj.compose(&fac.surj).unwrap(), f);
        assert_eq!(fac.surj.rank(), 1);
        assert_eq!(fac.inj.rank(), 1);
        let out = AffineMap::constant(2, Vector::from_ints(&[5, 5]));
        assert!(matches!(surj_inj_factorize(&out, &sq, &sq), Err(Error::NotContained)));
    }

    #[test]
    fn deflations() {
        let c3 = cube(3).unwrap();
        let c2 = cube(2).unwrap();
        assert!(is_deflation(&proj(2, 3), &build_hom(&c3, &c2).unwrap()).unwrap());
        let c1 = cube(1).unwrap();
        assert!(is_deflation(&proj(1, 2), &build_hom(&c2, &c1).unwrap()).unwrap());
        let (p, q) = prism_pi();
        assert!(!is_deflation(&proj(2, 3), &build_hom(&p, &q).unwrap()).unwrap());
    }

    #[test]
    fn face_collapses() {
        let (p, _) = prism_pi();
        let fam = face_collapse_family(&proj(2, 3), &p).unwrap().unwrap();
        let v = p.vertices().unwrap();
        assert_eq!(fam.faces.len(), 1);
        let mut seg: Vec<Vector> = fam.faces[0].iter().map(|&i| v[i].clone()).collect();
        seg.sort();
        assert_eq!(seg, pts(&[&[0, 0, 0], &[0, 0, 1]]));

        let (p, q) = wedge_rho();
        assert!(!is_face_collapse(&proj(2, 3), &p).unwrap());
        assert!(build_hom(&p, &q).unwrap().is_vertex(&proj(2, 3)).unwrap());

        assert!(!is_face_collapse(&AffineMap::identity(2), &cube(2).unwrap()).unwrap());
        assert!(is_face_collapse(&AffineMap::constant(2, Vector::from_ints(&[0])), &cube(2).unwrap()).unwrap());
    }

    #[test]
    fn hexagonal_prism_family_is_both_facets() {
        let hex = ngon(6);
        let prism = crate::constructions::product(&hex, &cube(1).unwrap()).unwrap();
        let v = prism.vertices().unwrap().to_vec();
        // Collapse along the direction of the edge from vertex 0 to vertex 1 and the vertical axis.
        let hv = hex.vertices().unwrap();
        let e = hv[1].sub(&hv[0]);
        let normal = Vector::new(vec![-e[1].clone(), e[0].clone(), ratio(0, 1)]);
        let f = AffineMap::new(Matrix::from_rows(&[normal], 3), Vector::zeros(1)).unwrap();
        let fam = face_collapse_family(&f, &prism).unwrap().unwrap();
        assert_eq!(fam.faces.len(), 2);
        assert!(fam.faces.iter().all(|g| g.len() == 4));
        let basis = fam.direction_basis(&prism).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(v.len(), 12);
    }

    #[test]
    fn classify_small_homs() {
        let s1 = simplex(1).unwrap();
        let s2 = simplex(2).unwrap();
        let c = classify_all(&build_hom(&s1, &s2).unwrap()).unwrap();
        assert_eq!(c.summary.by_rank, vec![3, 6]);
        assert_eq!(c.summary.total(), 9);

        let o3 = cross_polytope(3).unwrap();
        let c = classify_all(&build_hom(&o3, &s2).unwrap()).unwrap();
        assert_eq!(c.summary.by_rank[2], 0);
        assert_eq!(c.summary.by_rank[0], 3);

        let p4 = ngon(4);
        let h = build_hom(&p4, &p4).unwrap();
        let c = classify_all(&h).unwrap();
        assert_eq!(c.summary.by_rank, vec![4, 24, 8]);
        let id = classify_map(&AffineMap::identity(2), &h).unwrap();
        assert!(id.is_vertex && !id.simple && id.active_labels == 8);
        assert!(id.is_deflation);
    }

    #[test]
    fn factor_properties_on_polygon_homs() {
        for (m, n) in [(3, 3), (4, 3), (3, 4), (4, 4)] {
            let (p, q) = (ngon(m), ngon(n));
            let h = build_hom(&p, &q).unwrap();
            let c = classify_all(&h).unwrap();
            assert_eq!(c.summary.by_rank[0], n);
            for r in &c.records {
                assert!(r.is_vertex && r.active_labels >= 6);
                assert!(r.surj_factor_is_vertex && r.inj_factor_is_vertex);
                if r.surj_factor_is_deflation && r.rank < 2 {
                    assert!(r.surj_factor_is_face_collapse, "({m}, {n}) {r:?}");
                }
                if r.is_deflation {
                    assert!(r.surjective_onto_target);
                }
            }
            assert_eq!(c.summary.by_rank[1], rank1_polygon_count(&p, &q).unwrap());
        }
    }

    #[test]
    fn rank1_counts() {
        assert_eq!(rank1_polygon_count(&ngon(3), &ngon(3)).unwrap(), 18);
        assert_eq!(rank1_polygon_count(&ngon(4), &ngon(3)).unwrap(), 12);
        assert_eq!(rank1_polygon_count(&ngon(5), &ngon(4)).unwrap(), 60);
        assert!(rank1_polygon_count(&cube(3).unwrap(), &ngon(3)).is_err());
    }
}
