// SPDX-License-Identifier: Apache-2.0

//! Sparse multivariate polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A monomial as the sorted multiset of its variable indices.
pub type Monomial = Vec<usize>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    /// No zero coefficients are stored.
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::term(Vec::new(), c.into())
    }

    pub fn var(index: usize) -> Self {
        Poly::term(vec![index], BigInt::one())
    }

    pub fn term(mut monomial: Monomial, coeff: BigInt) -> Self {
        monomial.sort_unstable();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                m.sort_unstable();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| m.iter().fold(c.clone(), |acc, &v| acc * &point[v]))
            .sum()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if c < &BigInt::zero() { " - " } else { " + " })?;
            } else if c < &BigInt::zero() {
                f.write_str("-")?;
            }
            let abs = if c < &BigInt::zero() { -c } else { c.clone() };
            if m.is_empty() || !abs.is_one() {
                write!(f, "{abs}")?;
                if !m.is_empty() {
                    f.write_str("*")?;
                }
            }
            let names: Vec<String> = m.iter().map(|v| format!("x{v}")).collect();
            f.write_str(&names.join("*"))?;
        }
        Ok(())
    }
}
