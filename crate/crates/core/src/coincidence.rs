// SPDX-License-Identifier: Apache-2.0

//! Coincidence graphs for seven vertex-on-edge-line conditions between two
//! polygons, and nonvanishing certificates for their generic determinants.
//!
//! Edge `k` of a graph joins A-node `i_k` (an edge line of the target) to
//! B-node `j_k` (a vertex of the source). The generic matrix has row
//! `(u_i s_j, u_i t_j, u_i, v_i s_j, v_i t_j, v_i, -1)` for each edge.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::bareiss_det;
use crate::poly::Poly;

pub const EDGES: usize = 7;

/// A bipartite multigraph pattern with [`EDGES`] distinct edges.
///
/// Nodes on each side are numbered `0..` in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoincidenceGraph {
    edges: Vec<(usize, usize)>,
    num_a: usize,
    num_b: usize,
}

fn relabel(labels: impl Iterator<Item = usize>) -> (Vec<usize>, usize) {
    let mut seen: Vec<usize> = Vec::new();
    let out = labels
        .map(|l| match seen.iter().position(|&s| s == l) {
            Some(i) => i,
            None => {
                seen.push(l);
                seen.len() - 1
            }
        })
        .collect();
    (out, seen.len())
}

impl CoincidenceGraph {
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() != EDGES {
            return Err(Error::InvalidArgument(format!(
                "coincidence graphs have {EDGES} edges, got {}",
                edges.len()
            )));
        }
        let (a, num_a) = relabel(edges.iter().map(|e| e.0));
        let (b, num_b) = relabel(edges.iter().map(|e| e.1));
        let edges: Vec<(usize, usize)> = a.into_iter().zip(b).collect();
        for (k, e) in edges.iter().enumerate() {
            if edges[..k].contains(e) {
                return Err(Error::InvalidArgument(format!("edge {k} repeats an earlier edge")));
            }
        }
        Ok(CoincidenceGraph { edges, num_a, num_b })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_a(&self) -> usize {
        self.num_a
    }

    pub fn num_b(&self) -> usize {
        self.num_b
    }

    pub fn degree_a(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == i).count()
    }

    pub fn degree_b(&self, j: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == j).count()
    }

    fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    fn has_four_cycle(&self) -> bool {
        (0..self.num_a).any(|a1| {
            (a1 + 1..self.num_a).any(|a2| {
                (0..self.num_b)
                    .filter(|&b| self.has_edge(a1, b) && self.has_edge(a2, b))
                    .count()
                    >= 2
            })
        })
    }

    fn has_six_cycle(&self) -> bool {
        let (na, nb) = (self.num_a, self.num_b);
        for a1 in 0..na {
            for a2 in 0..na {
                for a3 in 0..na {
                    if a1 == a2 || a2 == a3 || a1 == a3 {
                        continue;
                    }
                    for b1 in 0..nb {
                        for b2 in 0..nb {
                            for b3 in 0..nb {
                                if b1 == b2 || b2 == b3 || b1 == b3 {
                                    continue;
                                }
                                if self.has_edge(a1, b1)
                                    && self.has_edge(a2, b1)
                                    && self.has_edge(a2, b2)
                                    && self.has_edge(a3, b2)
                                    && self.has_edge(a3, b3)
                                    && self.has_edge(a1, b3)
                                {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// Path types joined by `+`, longest first; `None` unless the graph is a
    /// disjoint union of paths.
    ///
    /// A path is spelled by the sides of its nodes from one end, choosing
    /// the end that starts with `A` when the two ends differ.
    pub fn canonical_form(&self) -> Option<String> {
        if reject_reason(self) != Verdict::Accepted {
            return None;
        }
        // Nodes: A-nodes 0..na, B-nodes na..na+nb.
        let n = self.num_a + self.num_b;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(self.num_a + b);
            adj[self.num_a + b].push(a);
        }
        let side = |v: usize| if v < self.num_a { 'A' } else { 'B' };
        let mut seen = vec![false; n];
        let mut paths: Vec<String> = Vec::new();
        for start in 0..n {
            if seen[start] || adj[start].len() != 1 {
                continue;
            }
            let mut walk = vec![start];
            seen[start] = true;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&w| !seen[w]) {
                seen[next] = true;
                walk.push(next);
                cur = next;
            }
            let spelled: String = walk.iter().map(|&v| side(v)).collect();
            let reversed: String = spelled.chars().rev().collect();
            paths.push(spelled.min(reversed));
        }
        paths.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        Some(paths.join("+"))
    }
}

impl fmt::Display for CoincidenceGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(a, b)| format!("a{a}b{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Why a pattern cannot host a non-simple full-rank vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// Three edge lines of a polygon through one point.
    ADegree = 1,
    /// Three source vertices on one edge line forces rank < 2.
    BDegree = 2,
    /// Two source vertices at one point forces rank < 2.
    FourCycle = 3,
    /// Forces both polygons to be triangles, where every vertex is simple.
    SixCycle = 4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Rule),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted => f.write_str("accepted"),
            Verdict::Rejected(r) => write!(f, "rejected({})", *r as u8),
        }
    }
}

/// The first rejection rule that applies, in rule order.
pub fn reject_reason(g: &CoincidenceGraph) -> Verdict {
    if (0..g.num_a).any(|i| g.degree_a(i) > 2) {
        Verdict::Rejected(Rule::ADegree)
    } else if (0..g.num_b).any(|j| g.degree_b(j) > 2) {
        Verdict::Rejected(Rule::BDegree)
    } else if g.has_four_cycle() {
        Verdict::Rejected(Rule::FourCycle)
    } else if g.has_six_cycle() {
        Verdict::Rejected(Rule::SixCycle)
    } else {
        Verdict::Accepted
    }
}

/// Set partitions of `0..n` as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[k] = b;
            rec(k + 1, max.max(b), cur, out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(1, 0, &mut cur, &mut out);
    out
}

/// Every 7-edge pattern: a choice of which edges share an A-node and which
/// share a B-node, with no edge repeated.
pub fn all_patterns() -> Vec<CoincidenceGraph> {
    let parts = set_partitions(EDGES);
    let mut out = Vec::new();
    for pa in &parts {
        for pb in &parts {
            let edges: Vec<(usize, usize)> = pa.iter().copied().zip(pb.iter().copied()).collect();
            if let Ok(g) = CoincidenceGraph::new(edges) {
                out.push(g);
            }
        }
    }
    out
}

/// The accepted graphs up to isomorphism, ordered by canonical form; each
/// is represented by its first occurrence in [`all_patterns`].
pub fn enumerate_graphs() -> Vec<CoincidenceGraph> {
    let mut by_form: std::collections::BTreeMap<String, CoincidenceGraph> = Default::default();
    for g in all_patterns() {
        if let Some(form) = g.canonical_form() {
            by_form.entry(form).or_insert(g);
        }
    }
    by_form.into_values().collect()
}

// ---------------------------------------------------------------------------
// Generic determinants

/// A variable of the generic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    S(usize),
    T(usize),
    U(usize),
    V(usize),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::S(j) => write!(f, "s{j}"),
            Variable::T(j) => write!(f, "t{j}"),
            Variable::U(i) => write!(f, "u{i}"),
            Variable::V(i) => write!(f, "v{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    /// Variable order: `s_j, t_j` for each B-node, then `u_i, v_i` for each A-node.
    pub variables: Vec<Variable>,
    /// `EDGES x EDGES` entries, row-major.
    pub entries: Vec<Vec<Poly>>,
}

pub fn build_generic_matrix(g: &CoincidenceGraph) -> GenericMatrix {
    let mut variables = Vec::with_capacity(2 * (g.num_a + g.num_b));
    for j in 0..g.num_b {
        variables.push(Variable::S(j));
        variables.push(Variable::T(j));
    }
    for i in 0..g.num_a {
        variables.push(Variable::U(i));
        variables.push(Variable::V(i));
    }
    let idx = |v: Variable| variables.iter().position(|&w| w == v).expect("variable registered");
    let entries = g
        .edges
        .iter()
        .map(|&(i, j)| {
            let (s, t, u, v) = (idx(Variable::S(j)), idx(Variable::T(j)), idx(Variable::U(i)), idx(Variable::V(i)));
            let one = BigInt::from(1);
            vec![
                Poly::term(vec![u, s], one.clone()),
                Poly::term(vec![u, t], one.clone()),
                Poly::term(vec![u], one.clone()),
                Poly::term(vec![v, s], one.clone()),
                Poly::term(vec![v, t], one.clone()),
                Poly::term(vec![v], one),
                Poly::constant(-1),
            ]
        })
        .collect();
    GenericMatrix { variables, entries }
}

impl GenericMatrix {
    pub fn evaluate(&self, point: &[BigInt]) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.eval(point)).collect())
            .collect()
    }

    /// Determinant at an integer point, by fraction-free elimination.
    pub fn determinant_at(&self, point: &[BigInt]) -> BigInt {
        bareiss_det(self.evaluate(point))
    }

    /// The determinant as a polynomial, by the permutation expansion.
    ///
    /// Every entry is a single term, so each permutation contributes one
    /// monomial.
    pub fn symbolic_determinant(&self) -> Poly {
        let n = self.entries.len();
        let mut det = Poly::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = BigInt::from(1);
        heap_permutations(&mut perm, n, &mut sign, &mut |perm, sign| {
            let mut term = Poly::constant(sign.clone());
            for (r, &c) in perm.iter().enumerate() {
                term = term.mul(&self.entries[r][c]);
                if term.is_zero() {
                    return;
                }
            }
            det = det.add(&term);
        });
        det
    }
}

/// Heap's algorithm, tracking the permutation sign.
fn heap_permutations(
    perm: &mut Vec<usize>,
    k: usize,
    sign: &mut BigInt,
    visit: &mut dyn FnMut(&[usize], &BigInt),
) {
    if k <= 1 {
        visit(perm, sign);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(perm, k - 1, sign, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        perm.swap(j, k - 1);
        *sign = -sign.clone();
    }
    heap_permutations(perm, k - 1, sign, visit);
}

/// A point where the generic determinant is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Values of [`GenericMatrix::variables`], in order.
    pub point: Vec<BigInt>,
    pub det_value: BigInt,
    /// 1 when the first prime assignment already worked.
    pub attempts: usize,
}

pub const MAX_ATTEMPTS: usize = 32;

fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| !c.is_multiple_of(p)) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Assigns the `k`-th variable the `(k + shift)`-th prime, `shift = 0, 1, …`,
/// until the determinant is nonzero.
pub fn certify_nonvanishing(g: &CoincidenceGraph) -> Result<Certificate> {
    let m = build_generic_matrix(g);
    let nvars = m.variables.len();
    let ps = primes(nvars + MAX_ATTEMPTS);
    for shift in 0..MAX_ATTEMPTS {
        let point: Vec<BigInt> = ps[shift..shift + nvars].iter().map(|&p| BigInt::from(p)).collect();
        let det = m.determinant_at(&point);
        if !det.is_zero() {
            return Ok(Certificate {
                point,
                det_value: det,
                attempts: shift + 1,
            });
        }
    }
    Err(Error::CertificateExhausted(MAX_ATTEMPTS))
}
