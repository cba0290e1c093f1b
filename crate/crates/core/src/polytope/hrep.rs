//! Exact vertex and ray enumeration for `{x : E x = e, A x ≤ b}` by brute
//! force over active sets. Meant for the modest sizes of simple polytopes.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{common_denominator, dot, gcd_all, linalg, Rat};

/// One linear constraint `coeffs · x (= or ≤) rhs`.
#[derive(Debug, Clone)]
pub(crate) struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

#[derive(Debug, Clone)]
pub(crate) struct HalfSpaces {
    pub dim: usize,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawVertex {
    pub coords: Vec<Rat>,
    pub active: BTreeSet<usize>,
}

/// Scales a nonzero rational direction to a primitive integer vector.
pub(crate) fn primitive_direction(v: &[Rat]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
    let g = gcd_all(&ints);
    ints.into_iter().map(|x| x / &g).collect()
}

impl HalfSpaces {
    pub fn satisfies(&self, x: &[Rat]) -> bool {
        self.equalities.iter().all(|c| dot(&c.coeffs, x) == c.rhs)
            && self.inequalities.iter().all(|c| dot(&c.coeffs, x) <= c.rhs)
    }

    pub fn active(&self, x: &[Rat]) -> BTreeSet<usize> {
        self.inequalities
            .iter()
            .enumerate()
            .filter(|(_, c)| dot(&c.coeffs, x) == c.rhs)
            .map(|(i, _)| i)
            .collect()
    }

    /// Directions along which every constraint is constant.
    pub fn lineality(&self) -> Vec<Vec<Rat>> {
        let rows: Vec<Vec<Rat>> = self
            .equalities
            .iter()
            .chain(&self.inequalities)
            .map(|c| c.coeffs.clone())
            .collect();
        linalg::nullspace(&rows, self.dim)
    }

    /// Vertices of the intersection with the orthogonal complement of the
    /// lineality space, sorted lexicographically. No boundedness check.
    pub fn vertices_unchecked(&self) -> Vec<RawVertex> {
        let mut eq_rows: Vec<Vec<Rat>> = self.equalities.iter().map(|c| c.coeffs.clone()).collect();
        let mut eq_rhs: Vec<Rat> = self.equalities.iter().map(|c| c.rhs.clone()).collect();
        for l in self.lineality() {
            eq_rows.push(l);
            eq_rhs.push(Rat::zero());
        }
        if linalg::solve(&eq_rows, &eq_rhs, self.dim).is_none() {
            return Vec::new();
        }
        let need = self.dim - linalg::rank(&eq_rows, self.dim);
        if need > self.inequalities.len() {
            return Vec::new();
        }
        let mut found: BTreeMap<Vec<Rat>, ()> = BTreeMap::new();
        for combo in (0..self.inequalities.len()).combinations(need) {
            let mut rows = eq_rows.clone();
            let mut rhs = eq_rhs.clone();
            for &i in &combo {
                rows.push(self.inequalities[i].coeffs.clone());
                rhs.push(self.inequalities[i].rhs.clone());
            }
            let Some(x) = linalg::solve_unique(&rows, &rhs, self.dim) else {
                continue;
            };
            if found.contains_key(&x) {
                continue;
            }
            if self.inequalities.iter().all(|c| dot(&c.coeffs, &x) <= c.rhs) {
                found.insert(x, ());
            }
        }
        found
            .into_keys()
            .map(|coords| {
                let active = self.active(&coords);
                RawVertex { coords, active }
            })
            .collect()
    }

    /// Extreme rays of the recession cone restricted to the complement of
    /// the lineality space, as primitive integer directions.
    pub fn recession_rays(&self) -> Vec<Vec<BigInt>> {
        let mut eq_rows: Vec<Vec<Rat>> = self.equalities.iter().map(|c| c.coeffs.clone()).collect();
        eq_rows.extend(self.lineality());
        let r = linalg::rank(&eq_rows, self.dim);
        if r >= self.dim {
            return Vec::new();
        }
        let need = self.dim - r - 1;
        if need > self.inequalities.len() {
            return Vec::new();
        }
        let feasible = |d: &[Rat]| self.inequalities.iter().all(|c| !dot(&c.coeffs, d).is_positive());
        let mut rays = BTreeSet::new();
        for combo in (0..self.inequalities.len()).combinations(need) {
            let mut rows = eq_rows.clone();
            rows.extend(combo.iter().map(|&i| self.inequalities[i].coeffs.clone()));
            let ns = linalg::nullspace(&rows, self.dim);
            if ns.len() != 1 {
                continue;
            }
            let d = &ns[0];
            if feasible(d) {
                rays.insert(primitive_direction(d));
            }
            let neg: Vec<Rat> = d.iter().map(|x| -x).collect();
            if feasible(&neg) {
                rays.insert(primitive_direction(&neg));
            }
        }
        rays.into_iter().collect()
    }

    /// Vertices of a bounded nonempty polyhedron.
    pub fn vertices(&self) -> Result<Vec<RawVertex>> {
        let vertices = self.vertices_unchecked();
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        if !self.lineality().is_empty() || !self.recession_rays().is_empty() {
            return Err(Error::Unbounded);
        }
        Ok(vertices)
    }
}
