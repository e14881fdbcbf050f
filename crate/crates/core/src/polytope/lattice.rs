// SPDX-License-Identifier: Apache-2.0

use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use super::Polytope;
use crate::error::{Error, Result};
use crate::linalg::{affine_rank, Vector};

/// A face as a closed vertex set together with the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub facets: Vec<usize>,
    /// `-1` for the empty face.
    pub dim: isize,
}

/// All faces of a polytope, graded by dimension.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    /// `levels[k]` holds the faces of dimension `k - 1`.
    levels: Vec<Vec<Face>>,
}

impl FaceLattice {
    /// Faces of dimension `dim` (`-1` for the empty face).
    pub fn faces_of_dim(&self, dim: isize) -> &[Face] {
        let idx = (dim + 1) as usize;
        self.levels.get(idx).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Face counts `(f_0, …, f_d)`; the empty face is not counted.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels[1..].iter().map(Vec::len).collect()
    }
}

/// Enumerates every face by closing the facet vertex sets under intersection.
pub fn face_lattice(p: &Polytope) -> Result<FaceLattice> {
    let full;
    let p = if p.incidence().is_some() {
        p
    } else {
        full = p.complete()?;
        &full
    };
    let inc = p.incidence().ok_or(Error::MissingRepresentation("incidence"))?;
    let vertices = p.vertices()?;
    let nv = inc.num_vertices();
    let nf = inc.num_facets();
    let d = p.dim() as isize;
    let facet_sets: Vec<FixedBitSet> = (0..nf).map(|j| inc.vertices_of(j)).collect();

    let closure_facets = |vs: &FixedBitSet| -> Vec<usize> {
        (0..nf).filter(|&j| vs.is_subset(&facet_sets[j])).collect()
    };
    let face_dim = |vs: &FixedBitSet| -> isize {
        let pts: Vec<Vector> = vs.ones().map(|v| vertices[v].clone()).collect();
        if pts.is_empty() {
            -1
        } else {
            affine_rank(&pts) as isize
        }
    };

    let mut top = FixedBitSet::with_capacity(nv);
    top.insert_range(..);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut faces: Vec<Face> = Vec::new();
    seen.insert(top.clone());
    queue.push_back(top);
    while let Some(vs) = queue.pop_front() {
        for fs in &facet_sets {
            let mut next = vs.clone();
            next.intersect_with(fs);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        faces.push(Face {
            facets: closure_facets(&vs),
            dim: face_dim(&vs),
            vertices: vs.ones().collect(),
        });
    }

    let mut levels: Vec<Vec<Face>> = vec![Vec::new(); (d + 2) as usize];
    for f in faces {
        let idx = (f.dim + 1) as usize;
        levels[idx].push(f);
    }
    for level in &mut levels {
        level.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    }
    Ok(FaceLattice { levels })
}

/// Convenience wrapper returning only the f-vector.
pub fn f_vector(p: &Polytope) -> Result<Vec<usize>> {
    Ok(face_lattice(p)?.f_vector())
}
