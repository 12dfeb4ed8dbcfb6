//! Rational polyhedral cones given by integer generators: exact
//! membership, relative-interior membership, and minimal faces, all via
//! rational feasibility.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::rational::{rat, rat_of, Feasibility, Rat};
use crate::{Error, Result};

/// Cone of nonnegative rational combinations of the generators. An empty
/// generator list is the origin cone.
#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    gens: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn new(dim: usize, gens: Vec<Vec<BigInt>>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), dim, "generator dimension mismatch");
        }
        Cone { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.gens
    }

    /// Does `v` lie in the cone? Exact: feasibility of G·λ = v, λ ≥ 0.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let lhs: Vec<Vec<Rat>> = (0..self.dim)
            .map(|i| self.gens.iter().map(|g| rat_of(&g[i])).collect())
            .collect();
        let rhs: Vec<Rat> = v.iter().map(rat_of).collect();
        Feasibility { lhs, rhs, lower: vec![Some(rat(0)); self.gens.len()] }.feasible()
    }

    /// Relative-interior membership: some representation of `v` uses
    /// strictly positive coefficients on every generator. Strictness is
    /// encoded by scaling: G·λ = τ·v with λ ≥ 1, τ ≥ 1.
    pub fn contains_relint(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let m = self.gens.len();
        let lhs: Vec<Vec<Rat>> = (0..self.dim)
            .map(|i| {
                let mut row: Vec<Rat> = self.gens.iter().map(|g| rat_of(&g[i])).collect();
                row.push(-rat_of(&v[i]));
                row
            })
            .collect();
        let rhs = vec![rat(0); self.dim];
        let mut lower = vec![Some(rat(1)); m];
        lower.push(Some(rat(1))); // τ
        Feasibility { lhs, rhs, lower }.feasible()
    }

    /// Can `v` be represented with a strictly positive coefficient on
    /// generator `j`?
    fn representable_with_positive(&self, v: &[BigInt], j: usize) -> bool {
        let m = self.gens.len();
        let lhs: Vec<Vec<Rat>> = (0..self.dim)
            .map(|i| {
                let mut row: Vec<Rat> = self.gens.iter().map(|g| rat_of(&g[i])).collect();
                row.push(-rat_of(&v[i]));
                row
            })
            .collect();
        let rhs = vec![rat(0); self.dim];
        let mut lower: Vec<Option<Rat>> = vec![Some(rat(0)); m];
        lower[j] = Some(rat(1));
        lower.push(Some(rat(1))); // τ
        Feasibility { lhs, rhs, lower }.feasible()
    }

    /// Indices of the generators lying on the unique minimal face of the
    /// cone that contains `v` in its relative interior. Rejects v ∉ cone.
    ///
    /// A generator is on that face iff some representation of `v` gives
    /// it a strictly positive coefficient.
    pub fn minimal_face(&self, v: &[BigInt]) -> Result<BTreeSet<usize>> {
        if !self.contains(v) {
            return Err(Error::OutsideCone);
        }
        Ok((0..self.gens.len())
            .filter(|&j| self.representable_with_positive(v, j))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cone(dim: usize, gens: &[&[i64]]) -> Cone {
        Cone::new(dim, gens.iter().map(|g| bv(g)).collect())
    }

    #[test]
    fn quadrant_interior() {
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        assert!(c.contains(&bv(&[1, 1])));
        assert!(c.contains_relint(&bv(&[1, 1])));
        assert!(c.contains(&bv(&[1, 0])));
        assert!(!c.contains_relint(&bv(&[1, 0])));
    }

    #[test]
    fn ray_misses() {
        let c = cone(2, &[&[1, 0]]);
        assert!(!c.contains(&bv(&[1, 1])));
    }

    #[test]
    fn flag_unstable_certificate() {
        // weights {x2} = {(0,1)} in the flag example; chi = (1,1) outside
        let c = cone(2, &[&[0, 1]]);
        assert!(!c.contains(&bv(&[1, 1])));
    }

    #[test]
    fn relint_implies_membership() {
        let c = cone(2, &[&[1, 0], &[1, 2], &[0, 1]]);
        for v in [[1, 1], [2, 1], [1, 3], [5, 0]] {
            if c.contains_relint(&bv(&v)) {
                assert!(c.contains(&bv(&v)));
            }
        }
    }

    #[test]
    fn minimal_face_on_axis() {
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        let f = c.minimal_face(&bv(&[1, 0])).unwrap();
        assert_eq!(f, BTreeSet::from([0]));
        let f = c.minimal_face(&bv(&[2, 3])).unwrap();
        assert_eq!(f, BTreeSet::from([0, 1]));
        assert!(c.minimal_face(&bv(&[-1, 0])).is_err());
    }

    #[test]
    fn minimal_face_egs_section_data() {
        // weights of {y, z, w, v}; chi = (1,1,1): the face excludes y
        let c = cone(3, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 1, 1]]);
        let f = c.minimal_face(&bv(&[1, 1, 1])).unwrap();
        assert_eq!(f, BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn origin_cone() {
        let c = cone(2, &[]);
        assert!(c.contains(&bv(&[0, 0])));
        assert!(!c.contains(&bv(&[1, 0])));
        assert!(c.contains_relint(&bv(&[0, 0])));
    }

    #[test]
    fn lineality_face_of_origin() {
        // cone spanned by (1,0) and (-1,0): minimal face of 0 is the line
        let c = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let f = c.minimal_face(&bv(&[0, 0])).unwrap();
        assert_eq!(f, BTreeSet::from([0, 1]));
    }
}
