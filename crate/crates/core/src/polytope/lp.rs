// SPDX-License-Identifier: Apache-2.0

//! Exact linear programming over `a·x ≤ b` with free variables.
//!
//! A dense two-phase tableau simplex with Bland's rule; small problems only.

use num_traits::{Signed, Zero};

use super::{HRep, Inequality};
use crate::linalg::{int, mat_rank, Matrix, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Scalar, point: Vector },
}

struct Tableau {
    /// Each row reads `Σ_j rows[i][j]·y_j = rows[i][last]`.
    rows: Vec<Vec<Scalar>>,
    basis: Vec<usize>,
    /// Number of variable columns; the right-hand side is column `width`.
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = col;
    }

    /// Maximizes `cost·y` from the current basic feasible solution over the
    /// columns for which `allowed` holds. `None` means unbounded.
    fn optimize(&mut self, cost: &[Scalar], allowed: impl Fn(usize) -> bool) -> Option<Scalar> {
        let w = self.width;
        loop {
            let reduced = |j: usize| -> Scalar {
                let mut d = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() {
                        d -= &cost[self.basis[i]] * &row[j];
                    }
                }
                d
            };
            let entering = (0..w).find(|&j| allowed(j) && !self.basis.contains(&j) && reduced(j).is_positive());
            let Some(col) = entering else {
                let value = self
                    .rows
                    .iter()
                    .zip(&self.basis)
                    .map(|(row, &b)| &cost[b] * &row[w])
                    .fold(Scalar::zero(), |a, x| a + x);
                return Some(value);
            };
            let mut leave: Option<(usize, Scalar)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[col];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let (r, _) = leave?;
            self.pivot(r, col);
        }
    }
}

/// Maximizes `c·x` subject to the inequalities of `h`.
pub fn maximize(c: &Vector, h: &HRep) -> LpOutcome {
    let n = h.ambient_dim;
    let m = h.inequalities.len();
    // Columns: x⁺ (n), x⁻ (n), slacks (m), auxiliary (1).
    let aux = 2 * n + m;
    let w = aux + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, ineq) in h.inequalities.iter().enumerate() {
        let mut row = vec![Scalar::zero(); w + 1];
        for (k, a) in ineq.normal.iter().enumerate() {
            row[k] = a.clone();
            row[n + k] = -a;
        }
        row[2 * n + i] = int(1);
        row[aux] = int(-1);
        row[w] = ineq.offset.clone();
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (0..m).map(|i| 2 * n + i).collect(),
        width: w,
    };

    if m > 0 {
        let (worst, b) = t
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r[w].clone()))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("nonempty");
        if b.is_negative() {
            t.pivot(worst, aux);
            let mut phase1 = vec![Scalar::zero(); w];
            phase1[aux] = int(-1);
            let v = t.optimize(&phase1, |_| true).expect("phase one is bounded");
            if v.is_negative() {
                return LpOutcome::Infeasible;
            }
            if let Some(r) = t.basis.iter().position(|&b| b == aux) {
                // Degenerate: the auxiliary is basic at zero; swap it out.
                match (0..aux).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => t.pivot(r, j),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                    }
                }
            }
        }
    }

    let mut cost = vec![Scalar::zero(); w];
    for (k, ck) in c.iter().enumerate() {
        cost[k] = ck.clone();
        cost[n + k] = -ck;
    }
    let Some(value) = t.optimize(&cost, |j| j != aux) else {
        return LpOutcome::Unbounded;
    };
    let mut y = vec![Scalar::zero(); w];
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        y[b] = row[w].clone();
    }
    let point = Vector::new((0..n).map(|k| &y[k] - &y[n + k]).collect());
    LpOutcome::Optimal { value, point }
}

/// Dimension of `{x : a·x ≤ b}`, or `None` when it is empty.
///
/// A strictly feasible point proves full dimension; otherwise the affine hull
/// is cut out by the implicit equalities, found one inequality at a time.
pub fn hrep_dim(h: &HRep) -> Option<usize> {
    let n = h.ambient_dim;
    // max t subject to a·x + t ≤ b, t ≤ 1.
    let mut lifted: Vec<Inequality> = h
        .inequalities
        .iter()
        .map(|q| {
            let mut a = q.normal.entries().to_vec();
            a.push(int(1));
            Inequality::new(Vector::new(a), q.offset.clone())
        })
        .collect();
    lifted.push(Inequality::new(Vector::unit(n + 1, n), int(1)));
    let slater = HRep {
        ambient_dim: n + 1,
        inequalities: lifted,
    };
    match maximize(&Vector::unit(n + 1, n), &slater) {
        LpOutcome::Optimal { value, .. } if value.is_positive() => return Some(n),
        LpOutcome::Optimal { value, .. } if value.is_negative() => return None,
        LpOutcome::Infeasible => return None,
        _ => {}
    }
    let mut equalities = Vec::new();
    for q in &h.inequalities {
        // The largest slack b - a·x is zero exactly on implicit equalities.
        match maximize(&q.normal.scale(&int(-1)), h) {
            LpOutcome::Optimal { value, .. } if &value + &q.offset == Scalar::zero() => {
                equalities.push(q.normal.clone());
            }
            _ => {}
        }
    }
    Some(n - mat_rank(&Matrix::from_rows(&equalities, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{affine_rank, ratio};
    use crate::polytope::Polytope;
    use proptest::prelude::*;

    fn hrep(n: usize, rows: &[(&[i64], i64)]) -> HRep {
        HRep::new(
            n,
            rows.iter()
                .map(|(a, b)| Inequality::new(Vector::from_ints(a), int(*b)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn square_optimum() {
        let sq = hrep(2, &[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)]);
        match maximize(&Vector::from_ints(&[2, 1]), &sq) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, int(3));
                assert_eq!(point, Vector::from_ints(&[1, 1]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn needs_phase_one() {
        // 1 ≤ x ≤ 2, 3 ≤ y ≤ 5, minimize x + y.
        let box_ = hrep(2, &[(&[1, 0], 2), (&[-1, 0], -1), (&[0, 1], 5), (&[0, -1], -3)]);
        match maximize(&Vector::from_ints(&[-1, -1]), &box_) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(-4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let empty = hrep(1, &[(&[1], 0), (&[-1], -1)]);
        assert_eq!(maximize(&Vector::from_ints(&[1]), &empty), LpOutcome::Infeasible);
        let ray = hrep(2, &[(&[-1, 0], 0), (&[0, -1], 0)]);
        assert_eq!(maximize(&Vector::from_ints(&[1, 1]), &ray), LpOutcome::Unbounded);
        assert_eq!(hrep_dim(&empty), None);
    }

    #[test]
    fn dimensions() {
        let tri = hrep(2, &[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 1)]);
        assert_eq!(hrep_dim(&tri), Some(2));
        // A segment in the plane: y = 1/2 written as two inequalities.
        let seg = HRep::new(
            2,
            vec![
                Inequality::new(Vector::from_ints(&[0, 2]), int(1)),
                Inequality::new(Vector::from_ints(&[0, -2]), int(-1)),
                Inequality::new(Vector::from_ints(&[1, 0]), ratio(1, 3)),
                Inequality::new(Vector::from_ints(&[-1, 0]), int(0)),
            ],
        )
        .unwrap();
        assert_eq!(hrep_dim(&seg), Some(1));
        let pt = hrep(2, &[(&[1, 0], 0), (&[-1, 0], 0), (&[0, 1], 0), (&[0, -1], 0)]);
        assert_eq!(hrep_dim(&pt), Some(0));
    }

    fn full_points(d: usize, raw: &[i64]) -> Option<Vec<Vector>> {
        let pts: Vec<Vector> = raw.chunks(d).filter(|c| c.len() == d).map(Vector::from_ints).collect();
        (affine_rank(&pts) == d).then_some(pts)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn optimum_is_best_vertex(
            d in 1usize..4,
            raw in proptest::collection::vec(-6i64..7, 24),
            c in proptest::collection::vec(-4i64..5, 3),
        ) {
            let pts = full_points(d, &raw);
            prop_assume!(pts.is_some());
            let p = Polytope::from_points(d, pts.unwrap()).unwrap();
            let c = Vector::from_ints(&c[..d]);
            let best = p.vertices().unwrap().iter().map(|v| c.dot(v)).max().unwrap();
            match maximize(&c, p.hrep().unwrap()) {
                LpOutcome::Optimal { value, point } => {
                    prop_assert_eq!(&value, &best);
                    prop_assert_eq!(c.dot(&point), best);
                }
                other => prop_assert!(false, "{:?}", other),
            }
        }

        #[test]
        fn slices_lose_one_dimension(d in 2usize..4, raw in proptest::collection::vec(-6i64..7, 24)) {
            let pts = full_points(d, &raw);
            prop_assume!(pts.is_some());
            let pts = pts.unwrap();
            let p = Polytope::from_points(d, pts.clone()).unwrap();
            let mut h = p.hrep().unwrap().clone();
            prop_assert_eq!(hrep_dim(&h), Some(d));
            // The vertex average is interior, so the hyperplane through it
            // meets the interior.
            let c = Vector::mean(p.vertices().unwrap()).entries()[0].clone();
            h.inequalities.push(Inequality::new(Vector::unit(d, 0), c.clone()));
            h.inequalities.push(Inequality::new(Vector::unit(d, 0).scale(&int(-1)), -c));
            prop_assert_eq!(hrep_dim(&h), Some(d - 1));
        }
    }
}
