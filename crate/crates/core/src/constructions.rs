// SPDX-License-Identifier: Apache-2.0

//! Standard polytopes and the classical constructions on them.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{int, Scalar, Vector};
use crate::polytope::{HRep, Inequality, Polytope, VRep};

/// A regular polygon approximated by decimal rounding of its vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegularPolygonSpec {
    pub n: usize,
    pub digits: u32,
}

impl RegularPolygonSpec {
    pub const DEFAULT_DIGITS: u32 = 6;

    pub fn new(n: usize, digits: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("a polygon needs n >= 3, got {n}")));
        }
        if !(1..=12).contains(&digits) {
            return Err(Error::InvalidArgument(format!(
                "polygon precision must be between 1 and 12 digits, got {digits}"
            )));
        }
        Ok(RegularPolygonSpec { n, digits })
    }
}

/// Which standard polytope to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Simplex(usize),
    Cube(usize),
    CrossPolytope(usize),
    RegularNgon(RegularPolygonSpec),
}

/// Builds a standard polytope with both representations.
pub fn standard(kind: StandardKind) -> Result<Polytope> {
    match kind {
        StandardKind::Simplex(n) => simplex(n),
        StandardKind::Cube(n) => cube(n),
        StandardKind::CrossPolytope(n) => cross_polytope(n),
        StandardKind::RegularNgon(spec) => regular_polygon(spec),
    }
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} dimension must be at least 1")));
    }
    Ok(())
}

/// `Δ_n` in its `n`-dimensional chart: the origin and the unit vectors.
pub fn simplex(n: usize) -> Result<Polytope> {
    require_positive(n, "simplex")?;
    let mut pts = vec![Vector::zeros(n)];
    pts.extend((0..n).map(|i| Vector::unit(n, i)));
    Polytope::from_points(n, pts)
}

/// `□_n = conv(±1)^n`.
pub fn cube(n: usize) -> Result<Polytope> {
    require_positive(n, "cube")?;
    let pts = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|i| int(if mask >> i & 1 == 1 { 1 } else { -1 }))
                .collect()
        })
        .collect();
    Polytope::from_points(n, pts)
}

/// `◇_n = conv(±e_i)`.
pub fn cross_polytope(n: usize) -> Result<Polytope> {
    require_positive(n, "cross-polytope")?;
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let e = Vector::unit(n, i);
        pts.push(e.scale(&int(-1)));
        pts.push(e);
    }
    Polytope::from_points(n, pts)
}

/// Rounds `x` to `digits` decimals, halves away from zero.
fn round_decimal(x: f64, digits: u32) -> Result<Scalar> {
    let scale = 10f64.powi(digits as i32);
    let scaled = x * scale;
    let frac = (scaled.abs() - scaled.abs().floor() - 0.5).abs();
    if frac < 1e-6 {
        return Err(Error::InvalidArgument(format!(
            "{x} is too close to a rounding tie at {digits} digits"
        )));
    }
    let rounded = scaled.round() as i64;
    Ok(Scalar::new(BigInt::from(rounded), num_traits::pow(BigInt::from(10), digits as usize)))
}

/// Vertices of the rounded regular polygon, counterclockwise from `(1, 0)`.
pub fn regular_polygon_vertices(spec: RegularPolygonSpec) -> Result<Vec<Vector>> {
    let RegularPolygonSpec { n, digits } = RegularPolygonSpec::new(spec.n, spec.digits)?;
    let pts: Vec<Vector> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            Ok(Vector::new(vec![
                round_decimal(angle.cos(), digits)?,
                round_decimal(angle.sin(), digits)?,
            ]))
        })
        .collect::<Result<_>>()?;
    for k in 0..n {
        let a = &pts[k];
        let b = &pts[(k + 1) % n];
        let c = &pts[(k + 2) % n];
        let e1 = b.sub(a);
        let e2 = c.sub(b);
        let cross = &e1[0] * &e2[1] - &e1[1] * &e2[0];
        if !cross.is_positive() {
            return Err(Error::NotConvex { n, digits });
        }
    }
    Ok(pts)
}

/// The regular `n`-gon with vertices rounded to `digits` decimals.
pub fn regular_polygon(spec: RegularPolygonSpec) -> Result<Polytope> {
    Polytope::from_points(2, regular_polygon_vertices(spec)?)
}

/// `join(P, Q) = conv{(x, 0, 0), (0, 1, y)}`.
pub fn join(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    let (dp, dq) = (p.ambient_dim(), q.ambient_dim());
    let mut pts = Vec::new();
    for x in p.vertices()? {
        pts.push(x.concat(&Vector::zeros(1 + dq)));
    }
    for y in q.vertices()? {
        pts.push(Vector::zeros(dp).concat(&Vector::from_ints(&[1])).concat(y));
    }
    Polytope::from_points(dp + 1 + dq, pts)
}

/// Cartesian product with lifted inequalities and the vertex-pair grid.
pub fn product(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    let p = p.complete()?;
    let q = q.complete()?;
    let (dp, dq) = (p.ambient_dim(), q.ambient_dim());
    let mut pts = Vec::new();
    for v in p.vertices()? {
        for w in q.vertices()? {
            pts.push(v.concat(w));
        }
    }
    let mut ineqs = Vec::new();
    for h in p.facets()? {
        ineqs.push(Inequality::new(h.normal.concat(&Vector::zeros(dq)), h.offset.clone()));
    }
    for h in q.facets()? {
        ineqs.push(Inequality::new(Vector::zeros(dp).concat(&h.normal), h.offset.clone()));
    }
    Ok(Polytope::from_parts(
        VRep::new(dp + dq, pts)?,
        HRep::new(dp + dq, ineqs)?,
    ))
}

/// Iterated product `P × P × … × P` with `k >= 1` factors.
pub fn power(p: &Polytope, k: usize) -> Result<Polytope> {
    if k == 0 {
        return Err(Error::InvalidArgument("product power needs at least one factor".into()));
    }
    let mut acc = p.complete()?;
    for _ in 1..k {
        acc = product(&acc, p)?;
    }
    Ok(acc)
}

/// Row-major flattening of `v ⊗ w`.
pub fn outer(v: &Vector, w: &Vector) -> Vector {
    v.iter().flat_map(|a| w.iter().map(move |b| a * b)).collect()
}

/// `P ⊗ Q = conv{(v ⊗ w, v, w)}` over vertex pairs; V-representation only.
pub fn tensor(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    let (dp, dq) = (p.ambient_dim(), q.ambient_dim());
    let mut pts = Vec::new();
    for v in p.vertices()? {
        for w in q.vertices()? {
            pts.push(outer(v, w).concat(v).concat(w));
        }
    }
    Ok(Polytope::vrep_only(VRep::new(dp * dq + dp + dq, pts)?))
}

/// Polar dual `{h : h·x <= 1 on P}`; the origin must be interior.
pub fn dual(p: &Polytope) -> Result<Polytope> {
    let p = p.irredundant()?;
    let facets = p.facets()?;
    if facets.iter().any(|h| !h.offset.is_positive()) || p.dim() < p.ambient_dim() {
        return Err(Error::OriginNotInterior);
    }
    let pts = facets.iter().map(|h| h.normal.scale(&h.offset.recip())).collect();
    Polytope::from_points(p.ambient_dim(), pts)
}

/// Translates `p` so its vertex barycenter sits at the origin.
pub fn center_at_barycenter(p: &Polytope) -> Result<Polytope> {
    let verts = p.vertices()?;
    let c = Vector::mean(verts);
    Polytope::from_points(p.ambient_dim(), verts.iter().map(|v| v.sub(&c)).collect())
}

/// `◇(P) = conv((P, 0), c_P ± e)` with `c_P` the vertex barycenter.
pub fn bipyramid(p: &Polytope) -> Result<Polytope> {
    let verts = p.vertices()?;
    let c = Vector::mean(verts);
    let mut pts: Vec<Vector> = verts.iter().map(|v| v.concat(&Vector::zeros(1))).collect();
    pts.push(c.concat(&Vector::from_ints(&[1])));
    pts.push(c.concat(&Vector::from_ints(&[-1])));
    Polytope::from_points(p.ambient_dim() + 1, pts)
}

/// A single point in `R^0`.
pub fn point() -> Polytope {
    Polytope::from_points(0, vec![Vector::zeros(0)]).expect("a point is full-dimensional in R^0")
}

/// Whether every entry of the vector is zero apart from rounding noise; used
/// only to sanity-check rounded polygons in tests.
#[cfg(test)]
fn is_origin(v: &Vector) -> bool {
    use num_traits::Zero;
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use crate::polytope::f_vector;

    fn ngon(n: usize) -> Polytope {
        regular_polygon(RegularPolygonSpec::new(n, 6).unwrap()).unwrap()
    }

    #[test]
    fn cube_two() {
        let c = cube(2).unwrap();
        assert_eq!(c.num_vertices(), Some(4));
        assert!(c.vertices().unwrap().contains(&Vector::from_ints(&[-1, 1])));
        assert_eq!(cube(3).unwrap().num_facets(), Some(6));
    }

    #[test]
    fn square_is_exact() {
        let p = regular_polygon_vertices(RegularPolygonSpec::new(4, 6).unwrap()).unwrap();
        assert_eq!(
            p,
            vec![
                Vector::from_ints(&[1, 0]),
                Vector::from_ints(&[0, 1]),
                Vector::from_ints(&[-1, 0]),
                Vector::from_ints(&[0, -1]),
            ]
        );
    }

    #[test]
    fn triangle_rounding() {
        let p = regular_polygon_vertices(RegularPolygonSpec::new(3, 6).unwrap()).unwrap();
        assert_eq!(p[0], Vector::from_ints(&[1, 0]));
        assert_eq!(p[1], Vector::new(vec![ratio(-1, 2), ratio(866025, 1_000_000)]));
        assert_eq!(p[2], Vector::new(vec![ratio(-1, 2), ratio(-866025, 1_000_000)]));
    }

    #[test]
    fn coarse_polygon_rejected() {
        let err = regular_polygon(RegularPolygonSpec::new(40, 1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotConvex { n: 40, digits: 1 }));
        assert!(RegularPolygonSpec::new(2, 6).is_err());
    }

    #[test]
    fn even_polygons_are_centrally_symmetric() {
        for n in [4, 6, 8] {
            let p = regular_polygon_vertices(RegularPolygonSpec::new(n, 6).unwrap()).unwrap();
            for k in 0..n / 2 {
                assert!(is_origin(&p[k].add(&p[k + n / 2])));
            }
        }
    }

    #[test]
    fn joins() {
        let seg = join(&point(), &point()).unwrap();
        assert_eq!(seg.ambient_dim(), 1);
        assert_eq!(seg.num_vertices(), Some(2));

        let s1 = simplex(1).unwrap();
        let tet = join(&s1, &s1).unwrap();
        assert_eq!((tet.num_vertices(), tet.dim()), (Some(4), 3));

        let p3 = ngon(3);
        let j = join(&p3, &p3).unwrap();
        assert_eq!((j.num_vertices(), j.dim()), (Some(6), 5));
    }

    #[test]
    fn products() {
        let s1 = simplex(1).unwrap();
        let sq = product(&s1, &s1).unwrap();
        assert_eq!(f_vector(&sq).unwrap(), vec![4, 4, 1]);

        let o3 = cross_polytope(3).unwrap();
        let pp = product(&o3, &o3).unwrap();
        assert_eq!((pp.num_vertices(), pp.num_facets()), (Some(36), Some(16)));
    }

    #[test]
    fn product_f_vector_is_convolution() {
        let a = cube(2).unwrap();
        let b = simplex(2).unwrap();
        let fa = f_vector(&a).unwrap();
        let fb = f_vector(&b).unwrap();
        let fp = f_vector(&product(&a, &b).unwrap()).unwrap();
        let conv: Vec<usize> = (0..fp.len())
            .map(|i| (0..=i).filter(|&j| j < fa.len() && i - j < fb.len()).map(|j| fa[j] * fb[i - j]).sum())
            .collect();
        assert_eq!(fp, conv);
        assert_eq!(fp, vec![12, 24, 19, 7, 1]);
    }

    #[test]
    fn tensor_products() {
        let s1 = simplex(1).unwrap();
        let t = tensor(&s1, &s1).unwrap();
        assert_eq!(t.dim(), 3);

        let p4 = ngon(4);
        let tp = tensor(&point(), &p4).unwrap();
        assert_eq!(tp.dim(), 2);

        let s2 = simplex(2).unwrap();
        let t22 = tensor(&s2, &s2).unwrap().complete().unwrap();
        assert_eq!(t22.num_vertices(), Some(9));
        assert_eq!(t22.dim(), 8);
        assert_eq!(f_vector(&t22).unwrap(), f_vector(&simplex(8).unwrap()).unwrap());
    }

    #[test]
    fn duals() {
        for n in 1..=3 {
            let d = dual(&cube(n).unwrap()).unwrap();
            let mut got = d.vertices().unwrap().to_vec();
            let mut want = cross_polytope(n).unwrap().vertices().unwrap().to_vec();
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
        let p4 = ngon(4);
        let back = dual(&dual(&p4).unwrap()).unwrap();
        let mut a = back.vertices().unwrap().to_vec();
        let mut b = p4.vertices().unwrap().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);

        let d3 = dual(&ngon(3)).unwrap();
        assert_eq!((d3.num_vertices(), d3.num_facets()), (Some(3), Some(3)));

        let shifted = Polytope::from_points(1, vec![Vector::from_ints(&[1]), Vector::from_ints(&[2])]).unwrap();
        assert!(matches!(dual(&shifted), Err(Error::OriginNotInterior)));
        assert!(dual(&center_at_barycenter(&shifted).unwrap()).is_ok());
    }

    #[test]
    fn bipyramids() {
        let seg = cube(1).unwrap();
        assert_eq!(f_vector(&bipyramid(&seg).unwrap()).unwrap(), vec![4, 4, 1]);
        let oct = bipyramid(&cube(2).unwrap()).unwrap();
        assert_eq!((oct.num_vertices(), oct.num_facets()), (Some(6), Some(8)));
        let b6 = bipyramid(&dual(&ngon(6)).unwrap()).unwrap();
        assert_eq!(b6.num_vertices(), Some(8));
    }
}
