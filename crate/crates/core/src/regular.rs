// SPDX-License-Identifier: Apache-2.0

//! Vertex counts of `Hom(P_m, P_n)` for regular polygons.
//!
//! Regular polygons have irrational coordinates, so the pipeline works with
//! rounded polygons `Q_m`, `Q_n`, enumerates `Hom(Q_m, Q_n)` exactly, and
//! merges the vertices that rounding split apart by `ε`-clustering in
//! hom-space. Closed forms cover rank 0 and 1 always, and rank 2 when one of
//! the polygons is a triangle or a square.

use std::fmt;

use num_traits::ToPrimitive;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::constructions::{regular_polygon, RegularPolygonSpec};
use crate::error::{Error, Result};
use crate::hom::{build_hom, enumerate_vertex_maps};
use crate::linalg::{Scalar, Vector};

// ---------------------------------------------------------------------------
// Closed forms

/// Counts known in closed form; `rank2` and `total` only for `m` or `n` in
/// `{3, 4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub rank0: u64,
    pub rank1: u64,
    pub rank2: Option<u64>,
}

impl ClosedForm {
    pub fn total(&self) -> Option<u64> {
        self.rank2.map(|r2| self.rank0 + self.rank1 + r2)
    }
}

pub fn closed_form_counts(m: u64, n: u64) -> Result<ClosedForm> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidArgument(format!("polygons need at least 3 sides, got ({m}, {n})")));
    }
    let rank1 = if m % 2 == 1 { m * n * (n - 1) } else { m * n * (n - 1) / 2 };
    let rank2 = if m == 3 {
        Some(n * (n - 1) * (n - 2))
    } else if n == 3 {
        Some(if m % 2 == 1 {
            m * (m + 1) * (m - 1) / 4
        } else {
            m * (m - 2) * (m - 4) / 4
        })
    } else if n == 4 {
        Some(if m % 2 == 1 { 4 * m * m - 4 * m } else { m * m - 2 * m })
    } else if m == 4 {
        Some(if n % 2 == 1 {
            n * n * n - 9 * n
        } else {
            n * n * n - 5 * n * n + 6 * n
        })
    } else {
        None
    };
    Ok(ClosedForm { rank0: n, rank1, rank2 })
}

/// Necessary conditions on the vertex count `v` of `Hom(P_m, P_n)`.
///
/// Returns the violated conditions; empty means all hold.
pub fn divisibility_check(v: u64, m: u64, n: u64) -> Vec<String> {
    let mut failures = Vec::new();
    if !v.is_multiple_of(n) {
        failures.push(format!("n = {n} does not divide V = {v}"));
    }
    if v < n || !(v - n).is_multiple_of(m) {
        failures.push(format!("m = {m} does not divide V - n = {}", v as i64 - n as i64));
    }
    if v % 2 != n % 2 {
        failures.push(format!("V = {v} and n = {n} have different parity"));
    }
    failures
}

// ---------------------------------------------------------------------------
// Clustering

/// Connected components of the graph joining points closer than `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterPartition {
    pub epsilon: Scalar,
    /// Each cluster ascending; clusters ordered by their least index.
    pub clusters: Vec<Vec<usize>>,
    /// Whether every cluster also has all pairwise distances below `ε`.
    pub pairwise_ok: bool,
}

impl ClusterPartition {
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }
}

fn closer_than(a: &Vector, b: &Vector, eps2: &Scalar) -> bool {
    &a.sub(b).norm_squared() < eps2
}

/// Clusters `points` with exact squared distances against `ε²`.
///
/// A floating-point sweep along the first coordinate discards pairs that
/// are far apart by a wide margin; every remaining pair is decided exactly.
pub fn cluster_vertices(points: &[Vector], epsilon: &Scalar) -> Result<ClusterPartition> {
    if epsilon <= &Scalar::from_integer(0.into()) {
        return Err(Error::InvalidArgument("epsilon must be positive".into()));
    }
    if let Some(dim) = points.first().map(Vector::dim) {
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    let eps2 = epsilon * epsilon;
    let eps_f = epsilon.to_f64().unwrap_or(f64::INFINITY);
    // Generous enough that rounding in f64 can never reject a close pair.
    let cutoff = 2.0 * eps_f + 1e-9;
    let approx: Vec<Vec<f64>> = points
        .iter()
        .map(|p| p.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let key = |i: usize| approx[i].first().copied().unwrap_or(0.0);
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| key(a).total_cmp(&key(b)).then(a.cmp(&b)));

    let mut uf = UnionFind::<usize>::new(points.len());
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if key(j) - key(i) > cutoff {
                break;
            }
            let d2: f64 = approx[i].iter().zip(&approx[j]).map(|(a, b)| (a - b) * (a - b)).sum();
            if d2.sqrt() > cutoff {
                continue;
            }
            if closer_than(&points[i], &points[j], &eps2) {
                uf.union(i, j);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..points.len() {
        by_root.entry(uf.find(i)).or_default().push(i);
    }
    let mut clusters: Vec<Vec<usize>> = by_root.into_values().collect();
    clusters.sort_by_key(|c| c[0]);
    let pairwise_ok = clusters.iter().all(|c| {
        c.iter()
            .enumerate()
            .all(|(k, &a)| c[k + 1..].iter().all(|&b| closer_than(&points[a], &points[b], &eps2)))
    });
    Ok(ClusterPartition {
        epsilon: epsilon.clone(),
        clusters,
        pairwise_ok,
    })
}

// ---------------------------------------------------------------------------
// Table rows

/// How a count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    /// Raw vertex count; clustering merged nothing in this rank.
    Enumerated,
    /// Count of clusters, at least one of which merged several vertices.
    Clustered,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::Enumerated => "enumerated",
            Provenance::Clustered => "clustered",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub m: usize,
    pub n: usize,
    /// Counts by rank 0, 1, 2.
    pub ranks: [u64; 3],
    pub provenance: [Provenance; 3],
}

impl CountRow {
    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }
}

/// Everything `table_row` learned besides the counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub raw_vertices: usize,
    pub raw_ranks: [u64; 3],
    pub clusters: usize,
    /// Clusters (as vertex index lists) whose members disagree in rank.
    pub mixed_rank_clusters: Vec<Vec<usize>>,
    /// Clusters whose members have different numbers of active labels.
    pub mixed_label_clusters: usize,
    pub pairwise_ok: bool,
    pub divisibility_failures: Vec<String>,
    /// `(rank, clustered, closed form)` for every disagreement.
    pub closed_form_mismatches: Vec<(usize, u64, u64)>,
    pub warnings: Vec<String>,
}

impl Diagnostics {
    /// No mixed ranks, pairwise-tight clusters, divisibility and closed forms
    /// satisfied.
    pub fn is_clean(&self) -> bool {
        self.mixed_rank_clusters.is_empty()
            && self.pairwise_ok
            && self.divisibility_failures.is_empty()
            && self.closed_form_mismatches.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub row: CountRow,
    pub diagnostics: Diagnostics,
}

/// The row from closed forms alone, if all three ranks are known.
pub fn closed_form_row(m: usize, n: usize) -> Result<Option<CountRow>> {
    let cf = closed_form_counts(m as u64, n as u64)?;
    Ok(cf.rank2.map(|r2| CountRow {
        m,
        n,
        ranks: [cf.rank0, cf.rank1, r2],
        provenance: [Provenance::ClosedForm; 3],
    }))
}

pub fn table_row(m: usize, n: usize, digits: u32, eps_list: &[Scalar]) -> Result<TableRow> {
    let Some((eps, rest)) = eps_list.split_first() else {
        return Err(Error::InvalidArgument("at least one epsilon is required".into()));
    };
    let p = regular_polygon(RegularPolygonSpec::new(m, digits)?)?;
    let q = regular_polygon(RegularPolygonSpec::new(n, digits)?)?;
    let hom = build_hom(&p, &q)?;
    let verts = enumerate_vertex_maps(&hom)?;
    let points: Vec<Vector> = verts.iter().map(|v| v.map.to_point()).collect();
    let ranks: Vec<usize> = verts.iter().map(|v| v.map.rank()).collect();

    let partition = cluster_vertices(&points, eps)?;
    for other in rest {
        let alt = cluster_vertices(&points, other)?;
        if alt.clusters != partition.clusters {
            return Err(Error::UnstablePartition {
                first: eps.to_string(),
                second: other.to_string(),
                first_clusters: partition.len(),
                second_clusters: alt.len(),
            });
        }
    }

    let mut diag = Diagnostics {
        raw_vertices: verts.len(),
        clusters: partition.len(),
        pairwise_ok: partition.pairwise_ok,
        ..Diagnostics::default()
    };
    for &r in &ranks {
        diag.raw_ranks[r] += 1;
    }
    let mut counts = [0u64; 3];
    let mut merged = [false; 3];
    for cluster in &partition.clusters {
        let least = *cluster
            .iter()
            .min_by(|&&a, &&b| points[a].cmp(&points[b]))
            .expect("clusters are nonempty");
        let r = ranks[least];
        counts[r] += 1;
        merged[r] |= cluster.len() > 1;
        if cluster.iter().any(|&i| ranks[i] != r) {
            diag.mixed_rank_clusters.push(cluster.clone());
        }
        let k = verts[cluster[0]].active.len();
        if cluster.iter().any(|&i| verts[i].active.len() != k) {
            diag.mixed_label_clusters += 1;
        }
    }
    if diag.mixed_label_clusters > 0 {
        diag.warnings.push(format!(
            "{} clusters mix vertices with different numbers of active labels",
            diag.mixed_label_clusters
        ));
    }
    if !diag.pairwise_ok {
        diag.warnings.push("some cluster is connected but not pairwise within epsilon".into());
    }

    let row = CountRow {
        m,
        n,
        ranks: counts,
        provenance: merged.map(|b| if b { Provenance::Clustered } else { Provenance::Enumerated }),
    };
    diag.divisibility_failures = divisibility_check(row.total(), m as u64, n as u64);
    let cf = closed_form_counts(m as u64, n as u64)?;
    let known = [Some(cf.rank0), Some(cf.rank1), cf.rank2];
    for (r, expect) in known.iter().enumerate() {
        if let Some(e) = *expect {
            if e != counts[r] {
                diag.closed_form_mismatches.push((r, counts[r], e));
            }
        }
    }
    Ok(TableRow { row, diagnostics: diag })
}

/// Rows for every `(m, n)` in the given ranges, in row-major order.
///
/// Rows are independent and computed on up to `jobs` threads.
pub fn table(
    m_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
    digits: u32,
    eps_list: &[Scalar],
    jobs: usize,
) -> Result<Vec<TableRow>> {
    let cells: Vec<(usize, usize)> = m_range
        .flat_map(|m| n_range.clone().map(move |n| (m, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    pool.install(|| {
        cells
            .par_iter()
            .map(|&(m, n)| table_row(m, n, digits, eps_list))
            .collect()
    })
}
