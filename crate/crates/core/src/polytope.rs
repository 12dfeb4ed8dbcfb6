//! Rational polytopes by equations and inequalities, exhaustive tight-set
//! vertex enumeration, and normal fans in the dual of the affine hull's
//! direction lattice.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cones::Cone;
use crate::lattice::saturate_span;
use crate::matrix::{kernel_basis, primitive_vector, IntMatrix};
use crate::rational::{self, rat, rat_of, Feasibility, Rat};
use crate::{Error, Result};

/// {x : eq_lhs x = eq_rhs, ineq_lhs x >= ineq_rhs}, integer data.
#[derive(Clone)]
pub struct Polytope {
    pub dim: usize,
    pub eq_lhs: IntMatrix,
    pub eq_rhs: Vec<BigInt>,
    pub ineq_lhs: IntMatrix,
    pub ineq_rhs: Vec<BigInt>,
}

impl Polytope {
    /// The GIT polytope {a >= 0 : W a = chi}.
    pub fn git(weights: &IntMatrix, chi: &[BigInt]) -> Self {
        let n = weights.cols();
        Polytope {
            dim: n,
            eq_lhs: weights.clone(),
            eq_rhs: chi.to_vec(),
            ineq_lhs: IntMatrix::identity(n),
            ineq_rhs: vec![BigInt::zero(); n],
        }
    }

    /// Append one inequality row.
    pub fn with_inequality(&self, row: &[BigInt], rhs: BigInt) -> Self {
        let mut ineq_rows: Vec<Vec<BigInt>> =
            (0..self.ineq_lhs.rows()).map(|i| self.ineq_lhs.row(i)).collect();
        ineq_rows.push(row.to_vec());
        let mut ineq_rhs = self.ineq_rhs.clone();
        ineq_rhs.push(rhs);
        Polytope {
            dim: self.dim,
            eq_lhs: self.eq_lhs.clone(),
            eq_rhs: self.eq_rhs.clone(),
            ineq_lhs: IntMatrix::from_bigint_rows(ineq_rows),
            ineq_rhs,
        }
    }

    fn eq_rows_rat(&self) -> Vec<Vec<Rat>> {
        (0..self.eq_lhs.rows())
            .map(|i| (0..self.dim).map(|j| rat_of(&self.eq_lhs[(i, j)])).collect())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        // feasibility with slacks: E x = e, N x - s = c, s >= 0, x free
        let n = self.dim;
        let m = self.ineq_lhs.rows();
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..self.eq_lhs.rows() {
            let mut row: Vec<Rat> = (0..n).map(|j| rat_of(&self.eq_lhs[(i, j)])).collect();
            row.extend(vec![rat(0); m]);
            lhs.push(row);
            rhs.push(rat_of(&self.eq_rhs[i]));
        }
        for i in 0..m {
            let mut row: Vec<Rat> = (0..n).map(|j| rat_of(&self.ineq_lhs[(i, j)])).collect();
            for k in 0..m {
                row.push(if k == i { rat(-1) } else { rat(0) });
            }
            lhs.push(row);
            rhs.push(rat_of(&self.ineq_rhs[i]));
        }
        let mut lower: Vec<Option<Rat>> = vec![None; n];
        lower.extend(vec![Some(rat(0)); m]);
        !Feasibility { lhs, rhs, lower }.feasible()
    }

    /// Does the recession cone contain a nonzero vector?
    pub fn is_unbounded_direction(&self) -> bool {
        let n = self.dim;
        let m = self.ineq_lhs.rows();
        // lineality: E x = 0, N x = 0, x != 0  <=>  rank([E; N]) < n
        let mut stacked: Vec<Vec<Rat>> = self.eq_rows_rat();
        for i in 0..m {
            stacked.push((0..n).map(|j| rat_of(&self.ineq_lhs[(i, j)])).collect());
        }
        if rational::rank(&stacked) < n {
            return true;
        }
        // otherwise a nonzero recession vector has N x != 0, so we can
        // normalize the total slack to 1:
        // E x = 0, N x - s = 0, sum s = 1, s >= 0, x free
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..self.eq_lhs.rows() {
            let mut row: Vec<Rat> = (0..n).map(|j| rat_of(&self.eq_lhs[(i, j)])).collect();
            row.extend(vec![rat(0); m]);
            lhs.push(row);
            rhs.push(rat(0));
        }
        for i in 0..m {
            let mut row: Vec<Rat> = (0..n).map(|j| rat_of(&self.ineq_lhs[(i, j)])).collect();
            for k in 0..m {
                row.push(if k == i { rat(-1) } else { rat(0) });
            }
            lhs.push(row);
            rhs.push(rat(0));
        }
        let mut row = vec![rat(0); n];
        row.extend(vec![rat(1); m]);
        lhs.push(row);
        rhs.push(rat(1));
        let mut lower: Vec<Option<Rat>> = vec![None; n];
        lower.extend(vec![Some(rat(0)); m]);
        Feasibility { lhs, rhs, lower }.feasible()
    }

    /// Exact vertex list by exhaustive tight-set search, sorted
    /// lexicographically. Errors on unbounded input.
    pub fn vertices(&self) -> Result<Vec<Vec<Rat>>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        if self.is_unbounded_direction() {
            return Err(Error::Unbounded);
        }
        let n = self.dim;
        let eq_rows = self.eq_rows_rat();
        let eq_rank = rational::rank(&eq_rows);
        let k0 = n - eq_rank;
        let m = self.ineq_lhs.rows();
        let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for tight in (0..m).combinations(k0) {
            let mut lhs = eq_rows.clone();
            let mut rhs: Vec<Rat> = self.eq_rhs.iter().map(rat_of).collect();
            for &i in &tight {
                lhs.push((0..n).map(|j| rat_of(&self.ineq_lhs[(i, j)])).collect());
                rhs.push(rat_of(&self.ineq_rhs[i]));
            }
            if rational::rank(&lhs) < n {
                continue;
            }
            let Some(x) = rational::solve(&lhs, &rhs) else { continue };
            let ok = (0..m).all(|i| {
                let lhs_val: Rat =
                    (0..n).map(|j| rat_of(&self.ineq_lhs[(i, j)]) * &x[j]).sum();
                lhs_val >= rat_of(&self.ineq_rhs[i])
            });
            if ok {
                found.insert(x);
            }
        }
        Ok(found.into_iter().collect())
    }
}

/// A fan: primitive rays plus cones as ray-index sets, closed under
/// taking faces. Cones are stored in a canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub rank: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub cones: Vec<BTreeSet<usize>>,
    pub maximal: Vec<usize>,
}

impl Fan {
    pub fn new(rank: usize, rays: Vec<Vec<BigInt>>, cone_sets: Vec<BTreeSet<usize>>) -> Self {
        for r in &rays {
            assert_eq!(r.len(), rank);
            assert_eq!(primitive_vector(r), *r, "fan rays must be primitive");
        }
        let mut cones: Vec<BTreeSet<usize>> = cone_sets.into_iter().collect();
        cones.sort_by(|a, b| {
            (a.len(), a.iter().collect::<Vec<_>>()).cmp(&(b.len(), b.iter().collect::<Vec<_>>()))
        });
        cones.dedup();
        let maximal = (0..cones.len())
            .filter(|&i| !cones.iter().any(|c| c != &cones[i] && c.is_superset(&cones[i])))
            .collect();
        Fan { rank, rays, cones, maximal }
    }

    pub fn cone_rays(&self, idx: usize) -> Vec<Vec<BigInt>> {
        self.cones[idx].iter().map(|&r| self.rays[r].clone()).collect()
    }

    pub fn cone_geom(&self, idx: usize) -> Cone {
        Cone::new(self.rank, self.cone_rays(idx))
    }

    pub fn cone_dim(&self, idx: usize) -> usize {
        let rows: Vec<Vec<Rat>> = self.cones[idx]
            .iter()
            .map(|&r| self.rays[r].iter().map(rat_of).collect())
            .collect();
        rational::rank(&rows)
    }

    pub fn cones_of_dim(&self, d: usize) -> Vec<usize> {
        (0..self.cones.len()).filter(|&i| self.cone_dim(i) == d).collect()
    }

    pub fn dim(&self) -> usize {
        self.maximal.iter().map(|&i| self.cone_dim(i)).max().unwrap_or(0)
    }

    /// Saturated lattice basis of the span of cone `idx` (columns).
    pub fn cone_lattice(&self, idx: usize) -> IntMatrix {
        let rays = self.cone_rays(idx);
        saturate_span(&IntMatrix::from_columns(self.rank, &rays))
    }

    /// Index of the cone whose ray set is exactly `set`, if present.
    pub fn find_cone(&self, set: &BTreeSet<usize>) -> Option<usize> {
        self.cones.iter().position(|c| c == set)
    }

    /// The unique minimal cone containing all the given vectors, or None
    /// when no cone contains them all.
    pub fn minimal_cone_containing(&self, vectors: &[Vec<BigInt>]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in 0..self.cones.len() {
            let geom = self.cone_geom(i);
            if vectors.iter().all(|v| geom.contains(v)) {
                let better = match best {
                    None => true,
                    Some(b) => self.cone_dim(i) < self.cone_dim(b),
                };
                if better {
                    best = Some(i);
                }
            }
        }
        best
    }

    /// Completeness by deterministic direction sampling: every sampled
    /// direction must lie in some maximal cone.
    pub fn is_complete_sampled(&self, samples: usize) -> bool {
        if self.rank == 0 {
            return true;
        }
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 19) - 9
        };
        for _ in 0..samples {
            let v: Vec<BigInt> = (0..self.rank).map(|_| BigInt::from(next())).collect();
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let covered = self
                .maximal
                .iter()
                .any(|&i| self.cone_geom(i).contains(&v));
            if !covered {
                return false;
            }
        }
        true
    }

    /// All maximal cones simplicial (ray count == dimension)?
    pub fn is_simplicial(&self) -> bool {
        self.maximal.iter().all(|&i| self.cones[i].len() == self.cone_dim(i))
    }

    /// Apply a unimodular transform to all rays (same combinatorics).
    pub fn transform(&self, u: &IntMatrix) -> Fan {
        let rays: Vec<Vec<BigInt>> =
            self.rays.iter().map(|r| primitive_vector(&u.mul_vec(r))).collect();
        Fan {
            rank: u.rows(),
            rays,
            cones: self.cones.clone(),
            maximal: self.maximal.clone(),
        }
    }
}

/// Search for a unimodular map carrying fan `a` onto fan `b` (rays to
/// rays, cones to cones). Small fans only.
pub fn unimodular_equivalence(a: &Fan, b: &Fan) -> Option<IntMatrix> {
    if a.rank != b.rank || a.rays.len() != b.rays.len() || a.cones.len() != b.cones.len() {
        return None;
    }
    let d = a.rank;
    // pick d linearly independent rays of `a`
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..a.rays.len() {
        let mut test = chosen.clone();
        test.push(i);
        let rows: Vec<Vec<Rat>> =
            test.iter().map(|&r| a.rays[r].iter().map(rat_of).collect()).collect();
        if rational::rank(&rows) == test.len() {
            chosen = test;
        }
        if chosen.len() == d {
            break;
        }
    }
    if chosen.len() < d {
        return None;
    }
    let n = b.rays.len();
    for assignment in (0..n).permutations(d) {
        // solve u * a.rays[chosen[k]] = b.rays[assignment[k]]
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        // unknowns: entries of u, row-major (d*d)
        for (k, &ca) in chosen.iter().enumerate() {
            for row in 0..d {
                let mut eq = vec![rat(0); d * d];
                for col in 0..d {
                    eq[row * d + col] = rat_of(&a.rays[ca][col]);
                }
                lhs.push(eq);
                rhs.push(rat_of(&b.rays[assignment[k]][row]));
            }
        }
        let Some(sol) = rational::solve(&lhs, &rhs) else { continue };
        if !sol.iter().all(|x| x.is_integer()) {
            continue;
        }
        let mut u = IntMatrix::zero(d, d);
        for row in 0..d {
            for col in 0..d {
                u[(row, col)] = sol[row * d + col].to_integer();
            }
        }
        if u.det().abs() != BigInt::from(1) {
            continue;
        }
        // ray bijection induced by u
        let mut ray_map = Vec::new();
        let mut ok = true;
        for r in &a.rays {
            let img = primitive_vector(&u.mul_vec(r));
            match b.rays.iter().position(|s| *s == img) {
                Some(j) => ray_map.push(j),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        if !ray_map.iter().all(|&j| seen.insert(j)) {
            continue;
        }
        let cones_ok = a.cones.iter().all(|c| {
            let img: BTreeSet<usize> = c.iter().map(|&r| ray_map[r]).collect();
            b.find_cone(&img).is_some()
        });
        if cones_ok {
            return Some(u);
        }
    }
    None
}

/// Normal fan of a polytope, together with the lattice identification
/// data needed to interpret it.
pub struct NormalFanData {
    pub fan: Fan,
    /// columns: lattice basis of the affine hull's direction space
    pub kernel: IntMatrix,
    /// rational base point of the affine hull
    pub base: Vec<Rat>,
    /// polytope vertices (ambient coordinates), sorted
    pub vertices: Vec<Vec<Rat>>,
    /// same vertices in kernel-basis coordinates
    pub vertices_xi: Vec<Vec<Rat>>,
    /// vertex index -> index of its (maximal) normal cone in fan.cones
    pub vertex_cone: Vec<usize>,
    /// inequality index -> ray index (facet-defining inequalities only)
    pub ineq_ray: Vec<Option<usize>>,
}

pub fn normal_fan(p: &Polytope) -> Result<NormalFanData> {
    let vertices = p.vertices()?;
    if vertices.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let kernel = kernel_basis(&p.eq_lhs);
    let d = kernel.cols();
    let base = if p.eq_lhs.rows() == 0 {
        vec![rat(0); p.dim]
    } else {
        let rows = p.eq_rows_rat();
        let rhs: Vec<Rat> = p.eq_rhs.iter().map(rat_of).collect();
        rational::solve(&rows, &rhs).ok_or(Error::EmptyPolytope)?
    };
    // xi-coordinates: v = base + kernel * xi
    let kernel_rows: Vec<Vec<Rat>> = (0..p.dim)
        .map(|i| (0..d).map(|j| rat_of(&kernel[(i, j)])).collect())
        .collect();
    let mut vertices_xi = Vec::new();
    for v in &vertices {
        let rhs: Vec<Rat> = (0..p.dim).map(|i| &v[i] - &base[i]).collect();
        let xi = rational::solve(&kernel_rows, &rhs).expect("vertex outside affine hull");
        vertices_xi.push(xi);
    }
    // full-dimensionality within the affine hull
    if !vertices_xi.is_empty() {
        let diffs: Vec<Vec<Rat>> = vertices_xi[1..]
            .iter()
            .map(|x| (0..d).map(|j| &x[j] - &vertices_xi[0][j]).collect())
            .collect();
        if rational::rank(&diffs) < d {
            return Err(Error::DegeneratePolytope);
        }
    }

    let m = p.ineq_lhs.rows();
    // tight vertex sets per inequality
    let tight: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..vertices.len())
                .filter(|&vi| {
                    let val: Rat = (0..p.dim)
                        .map(|j| rat_of(&p.ineq_lhs[(i, j)]) * &vertices[vi][j])
                        .sum();
                    val == rat_of(&p.ineq_rhs[i])
                })
                .collect()
        })
        .collect();
    // facet-defining inequalities
    let facet_defining: Vec<bool> = (0..m)
        .map(|i| {
            if tight[i].is_empty() {
                return false;
            }
            let v0 = &vertices_xi[tight[i][0]];
            let diffs: Vec<Vec<Rat>> = tight[i][1..]
                .iter()
                .map(|&vi| (0..d).map(|j| &vertices_xi[vi][j] - &v0[j]).collect())
                .collect();
            rational::rank(&diffs) == d.saturating_sub(1)
        })
        .collect();

    // rays (deduplicated primitive inner normals of facets)
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut ineq_ray: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        if !facet_defining[i] {
            continue;
        }
        let normal: Vec<BigInt> = (0..d)
            .map(|j| (0..p.dim).map(|c| &p.ineq_lhs[(i, c)] * &kernel[(c, j)]).sum())
            .collect();
        let prim = primitive_vector(&normal);
        let idx = match rays.iter().position(|r| *r == prim) {
            Some(idx) => idx,
            None => {
                rays.push(prim);
                rays.len() - 1
            }
        };
        ineq_ray[i] = Some(idx);
    }
    // canonical ray order
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
    let inv: BTreeMap<usize, usize> =
        order.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let rays: Vec<Vec<BigInt>> = order.iter().map(|&i| rays[i].clone()).collect();
    for r in ineq_ray.iter_mut() {
        if let Some(x) = r {
            *x = inv[x];
        }
    }

    // maximal cones at vertices
    let vertex_sets: Vec<BTreeSet<usize>> = (0..vertices.len())
        .map(|vi| {
            (0..m)
                .filter(|&i| facet_defining[i] && tight[i].contains(&vi))
                .filter_map(|i| ineq_ray[i])
                .collect()
        })
        .collect();
    // face closure under pairwise intersection
    let mut all: BTreeSet<BTreeSet<usize>> = vertex_sets.iter().cloned().collect();
    all.insert(BTreeSet::new());
    loop {
        let mut added = false;
        let current: Vec<BTreeSet<usize>> = all.iter().cloned().collect();
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                let inter: BTreeSet<usize> =
                    current[i].intersection(&current[j]).cloned().collect();
                if all.insert(inter) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let fan = Fan::new(d, rays, all.into_iter().collect());
    let vertex_cone: Vec<usize> = vertex_sets
        .iter()
        .map(|s| fan.find_cone(s).expect("vertex cone missing from fan"))
        .collect();

    Ok(NormalFanData { fan, kernel, base, vertices, vertices_xi, vertex_cone, ineq_ray })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p2_fan() -> Fan {
        Fan::new(
            2,
            vec![vec![bi(-1), bi(-1)], vec![bi(0), bi(1)], vec![bi(1), bi(0)]],
            vec![
                BTreeSet::new(),
                BTreeSet::from([0]),
                BTreeSet::from([1]),
                BTreeSet::from([2]),
                BTreeSet::from([0, 1]),
                BTreeSet::from([0, 2]),
                BTreeSet::from([1, 2]),
            ],
        )
    }

    #[test]
    fn simplex_vertices() {
        // standard simplex {a >= 0, sum a = 1} in R^3
        let p = Polytope::git(&IntMatrix::from_rows(&[vec![1, 1, 1]]), &[bi(1)]);
        let vs = p.vertices().unwrap();
        assert_eq!(vs.len(), 3);
        for v in &vs {
            assert!(v.iter().filter(|x| !x.is_zero()).count() == 1);
        }
    }

    #[test]
    fn quadric_polytope_vertices() {
        // {a in R^5, a >= 0, a1+a3+a5 = 1, a2+a4+a5 = 1}: pyramid over a square
        let w = IntMatrix::from_rows(&[vec![1, 0, 1, 0, 1], vec![0, 1, 0, 1, 1]]);
        let p = Polytope::git(&w, &[bi(1), bi(1)]);
        let vs = p.vertices().unwrap();
        assert_eq!(vs.len(), 5);
        let apex: Vec<Rat> = vec![rat(0), rat(0), rat(0), rat(0), rat(1)];
        assert!(vs.contains(&apex));
        assert_eq!(vs.iter().filter(|v| v[4].is_zero()).count(), 4);
    }

    #[test]
    fn egs_polytope_is_triangle() {
        let w = IntMatrix::from_rows(&[
            vec![1, 0, 0, 1, 1],
            vec![0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1],
        ]);
        let p = Polytope::git(&w, &[bi(1), bi(1), bi(1)]);
        let vs = p.vertices().unwrap();
        assert_eq!(vs.len(), 3);
    }

    #[test]
    fn unbounded_rejected() {
        let p = Polytope::git(&IntMatrix::from_rows(&[vec![1, 0]]), &[bi(0)]);
        assert!(matches!(p.vertices(), Err(Error::Unbounded)));
    }

    #[test]
    fn unit_square_normal_fan() {
        // [0,1]^2: x >= 0, y >= 0, -x >= -1, -y >= -1
        let p = Polytope {
            dim: 2,
            eq_lhs: IntMatrix::zero(0, 2),
            eq_rhs: vec![],
            ineq_lhs: IntMatrix::from_rows(&[
                vec![1, 0],
                vec![0, 1],
                vec![-1, 0],
                vec![0, -1],
            ]),
            ineq_rhs: vec![bi(0), bi(0), bi(-1), bi(-1)],
        };
        let nf = normal_fan(&p).unwrap();
        assert_eq!(nf.fan.rays.len(), 4);
        assert_eq!(nf.fan.maximal.len(), 4);
        assert!(nf.fan.is_complete_sampled(100));
        assert!(nf.fan.is_simplicial());
    }

    #[test]
    fn triangle_normal_fan_is_p2() {
        // conv{0, e1, e2}: x >= 0, y >= 0, -x-y >= -1
        let p = Polytope {
            dim: 2,
            eq_lhs: IntMatrix::zero(0, 2),
            eq_rhs: vec![],
            ineq_lhs: IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![-1, -1]]),
            ineq_rhs: vec![bi(0), bi(0), bi(-1)],
        };
        let nf = normal_fan(&p).unwrap();
        assert!(unimodular_equivalence(&nf.fan, &p2_fan()).is_some());
    }

    #[test]
    fn quadric_fan_has_one_nonsimplicial_cone() {
        let w = IntMatrix::from_rows(&[vec![1, 0, 1, 0, 1], vec![0, 1, 0, 1, 1]]);
        let p = Polytope::git(&w, &[bi(1), bi(1)]);
        let nf = normal_fan(&p).unwrap();
        assert_eq!(nf.fan.rays.len(), 5);
        let nonsimplicial: Vec<usize> = nf
            .fan
            .maximal
            .iter()
            .copied()
            .filter(|&i| nf.fan.cones[i].len() != nf.fan.cone_dim(i))
            .collect();
        assert_eq!(nonsimplicial.len(), 1);
        assert_eq!(nf.fan.cones[nonsimplicial[0]].len(), 4);
        assert!(nf.fan.is_complete_sampled(200));
    }

    #[test]
    fn vertex_count_equals_maximal_cone_count() {
        for (w, chi) in [
            (IntMatrix::from_rows(&[vec![1, 0, 1, 0, 1], vec![0, 1, 0, 1, 1]]), vec![bi(1), bi(1)]),
            (IntMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 0, 1]]), vec![bi(1), bi(1)]),
        ] {
            let p = Polytope::git(&w, &chi);
            let nf = normal_fan(&p).unwrap();
            assert_eq!(nf.vertices.len(), nf.fan.maximal.len());
        }
    }

    #[test]
    fn degenerate_polytope_rejected() {
        // {x >= 0, -x >= 0} in R^1: a single point, but the affine hull
        // is all of R^1, so the polytope is lower-dimensional in it.
        let p = Polytope {
            dim: 1,
            eq_lhs: IntMatrix::zero(0, 1),
            eq_rhs: vec![],
            ineq_lhs: IntMatrix::from_rows(&[vec![1], vec![-1]]),
            ineq_rhs: vec![bi(0), bi(0)],
        };
        assert!(matches!(normal_fan(&p), Err(Error::DegeneratePolytope)));
    }
}
