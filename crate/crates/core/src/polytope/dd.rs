// SPDX-License-Identifier: Apache-2.0

//! Double description method for pointed polyhedral cones.
//!
//! A cone is given by homogeneous constraints `row · y >= 0` with integer
//! rows. Rays are kept as primitive integer vectors so that the only
//! arithmetic is integer multiply/add followed by a gcd reduction.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{make_primitive, Scalar};

/// An extreme ray together with the constraints it satisfies with equality.
#[derive(Clone, Debug)]
pub(crate) struct Ray {
    pub coords: Vec<BigInt>,
    pub zeros: FixedBitSet,
}

/// The constraint rows do not span the space, so the cone contains a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct NotPointed {
    pub rank: usize,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Greedy choice of `dim` linearly independent rows, lowest index first.
///
/// Returns the chosen row indices and, for each, the ray `r_j` with
/// `row_{i_k} · r_j = [k == j]` (up to a positive factor).
fn initial_simplex(rows: &[Vec<BigInt>], dim: usize) -> Result<(Vec<usize>, Vec<Vec<BigInt>>), NotPointed> {
    // Echelon basis in rational form for the independence test.
    let mut echelon: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v: Vec<Scalar> = row.iter().map(|x| Scalar::from_integer(x.clone())).collect();
        for (pivot, basis) in &echelon {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone() / &basis[*pivot];
            for (a, b) in v.iter_mut().zip(basis) {
                *a -= &f * b;
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((p, v));
            chosen.push(idx);
            if chosen.len() == dim {
                break;
            }
        }
    }
    if chosen.len() < dim {
        return Err(NotPointed { rank: chosen.len() });
    }

    // Invert the chosen square block by Gauss-Jordan on [B | I].
    let n = dim;
    let mut aug: Vec<Vec<Scalar>> = chosen
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let mut r: Vec<Scalar> = rows[i].iter().map(|x| Scalar::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if j == k { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !aug[r][c].is_zero()).expect("block is nonsingular");
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == c || aug[r][c].is_zero() {
                continue;
            }
            let f = aug[r][c].clone();
            let (pivot_row, target) = if r < c {
                let (lo, hi) = aug.split_at_mut(c);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = aug.split_at_mut(r);
                (&lo[c], &mut hi[0])
            };
            for (t, pv) in target.iter_mut().zip(pivot_row.iter()) {
                *t -= &f * pv;
            }
        }
    }
    // Column j of the inverse is the ray for chosen row j.
    let rays = (0..n)
        .map(|j| {
            let col: Vec<Scalar> = (0..n).map(|r| aug[r][n + j].clone()).collect();
            let (ints, _) = crate::linalg::primitive_integer(&col);
            ints
        })
        .collect();
    Ok((chosen, rays))
}

/// Extreme rays of `{y : row · y >= 0 for every row}`.
///
/// Rows are inserted in input order after an initial simplicial cone built
/// from the first independent rows. Adjacency uses the combinatorial test.
/// The returned zero sets index into `rows`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Ray>, NotPointed> {
    let (chosen, init) = initial_simplex(rows, dim)?;
    let m = rows.len();
    let mut rays: Vec<Ray> = init
        .into_iter()
        .enumerate()
        .map(|(j, coords)| {
            let mut zeros = FixedBitSet::with_capacity(m);
            for (k, &i) in chosen.iter().enumerate() {
                if k != j {
                    zeros.insert(i);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    let mut is_chosen = FixedBitSet::with_capacity(m);
    for &i in &chosen {
        is_chosen.insert(i);
    }
    let need = dim.saturating_sub(2);

    for (idx, row) in rows.iter().enumerate() {
        if is_chosen.contains(idx) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut fresh = Vec::new();
        if !neg.is_empty() {
            for &p in &pos {
                for &n in &neg {
                    let mut common = rays[p].zeros.clone();
                    common.intersect_with(&rays[n].zeros);
                    if common.count_ones(..) < need {
                        continue;
                    }
                    let adjacent = rays.iter().enumerate().all(|(i, r)| {
                        i == p || i == n || !common.is_subset(&r.zeros)
                    });
                    if !adjacent {
                        continue;
                    }
                    let vp = &values[p];
                    let vn = -&values[n];
                    let mut coords: Vec<BigInt> = rays[n]
                        .coords
                        .iter()
                        .zip(&rays[p].coords)
                        .map(|(a, b)| vp * a + &vn * b)
                        .collect();
                    make_primitive(&mut coords);
                    common.insert(idx);
                    fresh.push(Ray { coords, zeros: common });
                }
            }
        }

        let mut next = Vec::with_capacity(rays.len() - neg.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.insert(idx);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    Ok(rays)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(values: &[&[i64]]) -> Vec<Vec<BigInt>> {
        values
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn orthant_rays() {
        let r = extreme_rays(&rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap();
        assert_eq!(r.len(), 3);
    }

    #[test]
    fn square_cone() {
        // Homogenized square |x|,|y| <= t.
        let r = extreme_rays(
            &rows(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]),
            3,
        )
        .unwrap();
        assert_eq!(r.len(), 4);
        for ray in &r {
            assert_eq!(ray.zeros.count_ones(..), 2);
        }
    }

    #[test]
    fn line_is_not_pointed() {
        let e = extreme_rays(&rows(&[&[1, 0], &[2, 0]]), 2).unwrap_err();
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn empty_cone() {
        // x >= 0, -x >= 0, y >= 0, -y >= 0 gives only the origin.
        let r = extreme_rays(&rows(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]), 2).unwrap();
        assert!(r.is_empty());
    }
}
