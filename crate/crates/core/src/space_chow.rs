//! The good moduli space as a toric variety: the quotient fan (normal
//! fan of the GIT polytope), Chow groups of possibly singular complete
//! toric varieties by the orbit-closure / divisor-of-character
//! presentation, images of invariant cycles, Cartier intersection, and
//! pushforward along fan refinements.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::{quotient_by_saturated, GroupStructure, Lattice};
use crate::matrix::{kernel_basis, smith_normal_form, vec_gcd, IntMatrix};
use crate::polytope::{normal_fan, Fan};
use crate::rational::{self, rat, rat_of, Rat};
use crate::strata::{IdxSet, Slice, Strata};
use crate::{Error, Result};

/// The toric good moduli space: normal fan of the GIT polytope in the
/// dual of ker(weight map), remembering which coordinate gave which ray.
pub struct QuotientFan {
    pub fan: Fan,
    /// columns: lattice basis of ker(W) identifying the fan lattice
    pub kernel: IntMatrix,
    /// rational point with W base = chi
    pub base: Vec<Rat>,
    /// coordinate j -> ray index, for coordinates whose inequality is a
    /// facet of the polytope
    pub coord_ray: Vec<Option<usize>>,
    /// polytope vertices, ambient coordinates
    pub vertices: Vec<Vec<Rat>>,
    /// vertices in fan-lattice coordinates
    pub vertices_xi: Vec<Vec<Rat>>,
    /// vertex -> maximal cone index
    pub vertex_cone: Vec<usize>,
}

impl QuotientFan {
    pub fn dim(&self) -> usize {
        self.fan.rank
    }

    /// Support-function value min_{x in P} <u, x>.
    pub fn support_value(&self, u: &[BigInt]) -> Rat {
        self.vertices_xi
            .iter()
            .map(|xi| {
                xi.iter()
                    .zip(u.iter())
                    .map(|(a, b)| a * rat_of(b))
                    .sum::<Rat>()
            })
            .min()
            .expect("polytope has vertices")
    }

    /// The hyperplane-class piecewise-linear function: on the maximal
    /// cone of vertex v it is <xi_v, .>.
    pub fn hyperplane(&self) -> PlFunction {
        let per_max_cone: BTreeMap<usize, Vec<Rat>> = self
            .vertex_cone
            .iter()
            .zip(self.vertices_xi.iter())
            .map(|(&c, xi)| (c, xi.clone()))
            .collect();
        PlFunction { per_max_cone }
    }
}

/// Compute the quotient fan of a presentation with character.
pub fn quotient_fan(strata: &Strata) -> Result<QuotientFan> {
    let poly = strata.p.git_polytope()?;
    let nf = normal_fan(&poly)?;
    let n = strata.p.n();
    let coord_ray = (0..n).map(|j| nf.ineq_ray[j]).collect();
    Ok(QuotientFan {
        fan: nf.fan,
        kernel: nf.kernel,
        base: nf.base,
        coord_ray,
        vertices: nf.vertices,
        vertices_xi: nf.vertices_xi,
        vertex_cone: nf.vertex_cone,
    })
}

/// A piecewise-linear function on a fan: a linear functional per maximal
/// cone, agreeing on shared faces.
#[derive(Clone, Debug)]
pub struct PlFunction {
    pub per_max_cone: BTreeMap<usize, Vec<Rat>>,
}

impl PlFunction {
    pub fn zero(fan: &Fan) -> PlFunction {
        PlFunction {
            per_max_cone: fan
                .maximal
                .iter()
                .map(|&c| (c, vec![rat(0); fan.rank]))
                .collect(),
        }
    }

    pub fn eval(&self, fan: &Fan, u: &[BigInt]) -> Result<Rat> {
        for (&cone, func) in &self.per_max_cone {
            if fan.cone_geom(cone).contains(u) {
                return Ok(func.iter().zip(u.iter()).map(|(a, b)| a * rat_of(b)).sum());
            }
        }
        Err(Error::Input("vector outside the fan support".into()))
    }

    /// Do the chart functionals agree on every shared ray?
    pub fn is_continuous(&self, fan: &Fan) -> bool {
        for (&c1, f1) in &self.per_max_cone {
            for (&c2, f2) in &self.per_max_cone {
                if c1 >= c2 {
                    continue;
                }
                let shared: BTreeSet<usize> =
                    fan.cones[c1].intersection(&fan.cones[c2]).cloned().collect();
                for ray in shared {
                    let v1: Rat = f1
                        .iter()
                        .zip(fan.rays[ray].iter())
                        .map(|(a, b)| a * rat_of(b))
                        .sum();
                    let v2: Rat = f2
                        .iter()
                        .zip(fan.rays[ray].iter())
                        .map(|(a, b)| a * rat_of(b))
                        .sum();
                    if v1 != v2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Are all chart functionals integral (honest Cartier data)?
    pub fn is_integral(&self) -> bool {
        self.per_max_cone.values().all(|f| f.iter().all(|x| x.is_integer()))
    }
}

/// An integer/rational combination of orbit closures of fixed dimension:
/// coefficients keyed by cone index (cones of dimension fan.dim - k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceCycle {
    pub dim: usize,
    pub coeffs: BTreeMap<usize, Rat>,
}

impl SpaceCycle {
    pub fn zero(dim: usize) -> SpaceCycle {
        SpaceCycle { dim, coeffs: BTreeMap::new() }
    }

    pub fn single(dim: usize, cone: usize, coeff: Rat) -> SpaceCycle {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(cone, coeff);
        }
        SpaceCycle { dim, coeffs }
    }

    pub fn add_term(&mut self, cone: usize, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(cone).or_insert_with(|| rat(0));
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&cone);
        }
    }

    pub fn add(&self, other: &SpaceCycle) -> Result<SpaceCycle> {
        if self.dim != other.dim {
            return Err(Error::CycleDimension(format!("{} vs {}", self.dim, other.dim)));
        }
        let mut out = self.clone();
        for (&c, v) in &other.coeffs {
            out.add_term(c, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rat) -> SpaceCycle {
        if k.is_zero() {
            return SpaceCycle::zero(self.dim);
        }
        SpaceCycle {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(&c, v)| (c, v * k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Presentation of A_k of a toric variety: free group on the cones of
/// codimension-complement dimension modulo divisor-of-character
/// relations on the one-smaller cones.
pub struct SpaceChowPresentation {
    pub k: usize,
    /// cone indices forming the basis (dimension fan.dim - k)
    pub basis: Vec<usize>,
    basis_pos: BTreeMap<usize, usize>,
    /// relation rows over the basis
    pub relations: Vec<Vec<BigInt>>,
    pub structure: GroupStructure,
    lattice: Lattice,
    /// SNF row transform of the relation-column matrix, for coordinates
    snf_p: IntMatrix,
    snf_rank: usize,
}

impl SpaceChowPresentation {
    fn cycle_vector(&self, c: &SpaceCycle) -> Result<Vec<Rat>> {
        let mut v = vec![rat(0); self.basis.len()];
        for (&cone, coeff) in &c.coeffs {
            let pos = self
                .basis_pos
                .get(&cone)
                .ok_or_else(|| Error::CycleDimension(format!("cone {cone} not in basis")))?;
            v[*pos] = coeff.clone();
        }
        Ok(v)
    }

    /// Are two cycles rationally equivalent? Integral mode demands
    /// integer coefficients and integral lattice membership; rational
    /// mode works in the Q-span of the relations.
    pub fn cycles_equal(&self, a: &SpaceCycle, b: &SpaceCycle, rational: bool) -> Result<bool> {
        if a.dim != b.dim {
            return Err(Error::CycleDimension(format!("{} vs {}", a.dim, b.dim)));
        }
        let va = self.cycle_vector(a)?;
        let vb = self.cycle_vector(b)?;
        let diff: Vec<Rat> = va.iter().zip(vb.iter()).map(|(x, y)| x - y).collect();
        if diff.iter().all(|x| x.is_zero()) {
            return Ok(true);
        }
        if rational {
            Ok(self.lattice.member_rational(&diff).is_some())
        } else {
            if !diff.iter().all(|x| x.is_integer()) {
                return Ok(false);
            }
            let vi: Vec<BigInt> = diff.iter().map(|x| x.to_integer()).collect();
            Ok(self.lattice.member(&vi).is_some())
        }
    }

    pub fn is_zero_cycle(&self, a: &SpaceCycle, rational: bool) -> Result<bool> {
        self.cycles_equal(a, &SpaceCycle::zero(a.dim), rational)
    }

    /// Coordinates of a cycle in the Smith basis of the presentation;
    /// entries beyond the torsion rank are the free coordinates, which
    /// are a complete rational invariant of the class.
    pub fn snf_coordinates(&self, a: &SpaceCycle) -> Result<Vec<Rat>> {
        let v = self.cycle_vector(a)?;
        let mut out = Vec::new();
        for i in 0..self.snf_p.rows() {
            let mut acc = rat(0);
            for j in 0..v.len() {
                acc += rat_of(&self.snf_p[(i, j)]) * &v[j];
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Free (rational) coordinates only.
    pub fn free_coordinates(&self, a: &SpaceCycle) -> Result<Vec<Rat>> {
        Ok(self.snf_coordinates(a)?[self.snf_rank..].to_vec())
    }
}

/// Build the A_k presentation of a toric variety from its fan.
pub fn toric_chow_presentation(fan: &Fan, k: usize) -> Result<SpaceChowPresentation> {
    let d = fan.dim();
    if k > d {
        return Err(Error::Input(format!("A_{k} of a {d}-dimensional variety")));
    }
    let basis = fan.cones_of_dim(d - k);
    let basis_pos: BTreeMap<usize, usize> =
        basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    if d - k >= 1 {
        for tau in fan.cones_of_dim(d - k - 1) {
            // characters of the torus of V(tau): integer vectors
            // orthogonal to tau
            let tau_rays = fan.cone_rays(tau);
            let rows = if tau_rays.is_empty() {
                IntMatrix::zero(0, fan.rank)
            } else {
                IntMatrix::from_bigint_rows(tau_rays.clone())
            };
            let perp = kernel_basis(&rows); // columns u with tau . u = 0
            if perp.cols() == 0 {
                continue;
            }
            let n_tau = fan.cone_lattice(tau);
            let quot = quotient_by_saturated(fan.rank, &n_tau);
            for uc in 0..perp.cols() {
                let u = perp.column(uc);
                let mut row = vec![BigInt::zero(); basis.len()];
                let mut any = false;
                for (&sigma, &pos) in &basis_pos {
                    if !fan.cones[tau].is_subset(&fan.cones[sigma]) {
                        continue;
                    }
                    // lattice point of sigma off tau: sum of its rays
                    let mut point = vec![BigInt::zero(); fan.rank];
                    for ray in fan.cone_rays(sigma) {
                        for i in 0..fan.rank {
                            point[i] += &ray[i];
                        }
                    }
                    let image = quot.proj.mul_vec(&point);
                    let g = vec_gcd(&image);
                    if g.is_zero() {
                        continue;
                    }
                    let pairing: BigInt =
                        u.iter().zip(point.iter()).map(|(a, b)| a * b).sum();
                    let (q, r) = pairing.div_rem(&g);
                    debug_assert!(r.is_zero(), "pairing not divisible by index");
                    if !q.is_zero() {
                        row[pos] = q;
                        any = true;
                    }
                }
                if any {
                    relations.push(row);
                }
            }
        }
    }
    let rel_matrix = IntMatrix::from_columns(
        basis.len(),
        &relations.iter().cloned().collect::<Vec<_>>(),
    );
    let lattice = Lattice::new(basis.len(), rel_matrix.clone());
    let structure = lattice.quotient_structure();
    let snf = smith_normal_form(&rel_matrix);
    let snf_rank = snf.rank();
    Ok(SpaceChowPresentation {
        k,
        basis,
        basis_pos,
        relations,
        structure,
        lattice,
        snf_p: snf.p,
        snf_rank,
    })
}

/// The fan cone of the toric stratum that the closed-orbit support B
/// maps into: spanned by the rays of the coordinates outside B.
pub fn image_cone(strata: &Strata, qfan: &QuotientFan, b: IdxSet) -> Result<usize> {
    let n = strata.p.n();
    let rays: BTreeSet<usize> = b
        .complement(n)
        .indices()
        .iter()
        .filter_map(|&j| qfan.coord_ray[j])
        .collect();
    qfan.fan
        .find_cone(&rays)
        .ok_or_else(|| Error::Input(format!("image rays {rays:?} span no fan cone")))
}

/// The reduced image cycle [pi(V(x_S))] of a slice: the orbit closure of
/// the image cone of B(generic support).
pub fn image_cycle_of_slice(
    strata: &Strata,
    qfan: &QuotientFan,
    s: Slice,
) -> Result<SpaceCycle> {
    let n = strata.p.n();
    let generic = s.complement(n);
    let a = if strata.is_semistable(generic) && strata.in_x(generic) {
        generic
    } else {
        // components of V(x_S) in X: maximal semistable strata avoiding S
        let candidates: Vec<IdxSet> = strata
            .semistable_supports()
            .into_iter()
            .filter(|a| a.inter(s).is_empty() && strata.in_x(*a))
            .collect();
        let maximal: Vec<IdxSet> = candidates
            .iter()
            .copied()
            .filter(|a| !candidates.iter().any(|b| b != a && a.is_subset(*b)))
            .collect();
        match maximal.len() {
            0 => return Err(Error::UnstableSupport(strata.p.set_names(s))),
            1 => maximal[0],
            _ => {
                return Err(Error::Input(format!(
                    "slice {} is reducible in X; push its components separately",
                    strata.p.set_names(s)
                )))
            }
        }
    };
    let b = strata.closed_orbit_support(a)?;
    let cone = image_cone(strata, qfan, b)?;
    let k = qfan.dim() - qfan.fan.cone_dim(cone);
    Ok(SpaceCycle::single(k, cone, rat(1)))
}

/// d times the divisor cycle of the polytope support function: the image
/// cycle of a generic semi-invariant hypersurface of weight d*chi.
pub fn image_cycle_of_hypersurface(qfan: &QuotientFan, d: &BigInt) -> SpaceCycle {
    let mut cyc = SpaceCycle::zero(qfan.dim() - 1);
    for (ray_idx, ray) in qfan.fan.rays.iter().enumerate() {
        let psi = qfan.support_value(ray);
        let set = BTreeSet::from([ray_idx]);
        let cone = qfan.fan.find_cone(&set).expect("ray cone in fan");
        cyc.add_term(cone, -psi * rat_of(d));
    }
    cyc
}

/// Cartier intersection: phi . c, one dimension down, computed
/// cone-by-cone from the local differences of the piecewise-linear
/// function against a linearization on each cone.
pub fn divisor_action(
    qfan: &QuotientFan,
    phi: &PlFunction,
    c: &SpaceCycle,
) -> Result<SpaceCycle> {
    let fan = &qfan.fan;
    let d = fan.dim();
    if c.dim == 0 {
        return Err(Error::CycleDimension("cannot intersect a 0-cycle".into()));
    }
    let mut out = SpaceCycle::zero(c.dim - 1);
    for (&sigma, coeff) in &c.coeffs {
        // linearization of phi on sigma: <m, ray> = phi(ray)
        let sigma_rays = fan.cone_rays(sigma);
        let m = if sigma_rays.is_empty() {
            vec![rat(0); fan.rank]
        } else {
            let lhs: Vec<Vec<Rat>> = sigma_rays
                .iter()
                .map(|ray| ray.iter().map(rat_of).collect())
                .collect();
            let mut rhs = Vec::new();
            for ray in &sigma_rays {
                rhs.push(phi.eval(fan, ray)?);
            }
            rational::solve(&lhs, &rhs).ok_or(Error::NotCartier(sigma))?
        };
        let n_sigma = fan.cone_lattice(sigma);
        let quot = quotient_by_saturated(fan.rank, &n_sigma);
        let sdim = fan.cone_dim(sigma);
        for tau in fan.cones_of_dim(sdim + 1) {
            if !fan.cones[sigma].is_subset(&fan.cones[tau]) {
                continue;
            }
            let mut point = vec![BigInt::zero(); fan.rank];
            for ray in fan.cone_rays(tau) {
                for i in 0..fan.rank {
                    point[i] += &ray[i];
                }
            }
            let image = quot.proj.mul_vec(&point);
            let g = vec_gcd(&image);
            if g.is_zero() {
                continue;
            }
            let m_val: Rat = m.iter().zip(point.iter()).map(|(a, b)| a * rat_of(b)).sum();
            let phi_val = phi.eval(fan, &point)?;
            let local = (m_val - phi_val) / rat_of(&g);
            if !local.is_zero() {
                out.add_term(tau, coeff * &local);
            }
        }
    }
    Ok(out)
}

/// Verify that every cone of `fine` is contained in a cone of `coarse`
/// (both in the same lattice).
pub fn verify_refinement(fine: &Fan, coarse: &Fan) -> Result<()> {
    for i in 0..fine.cones.len() {
        let rays = fine.cone_rays(i);
        if coarse.minimal_cone_containing(&rays).is_none() {
            return Err(Error::NotRefinement(format!("fine cone {i} not covered")));
        }
    }
    Ok(())
}

/// Pushforward of a cycle along a refinement fine -> coarse in the same
/// lattice: V(sigma') maps to [N_sigma : N_sigma'] V(sigma) when the
/// minimal containing cone has the same dimension, else to zero.
pub fn toric_pushforward(fine: &Fan, coarse: &Fan, c: &SpaceCycle) -> Result<SpaceCycle> {
    if fine.rank != coarse.rank {
        return Err(Error::NotRefinement("lattice ranks differ".into()));
    }
    let mut out = SpaceCycle::zero(c.dim);
    for (&sigma_f, coeff) in &c.coeffs {
        let rays = fine.cone_rays(sigma_f);
        let target = coarse
            .minimal_cone_containing(&rays)
            .ok_or_else(|| Error::NotRefinement(format!("cone {sigma_f} not covered")))?;
        let dim_f = fine.cone_dim(sigma_f);
        let dim_c = coarse.cone_dim(target);
        if dim_f != dim_c {
            continue;
        }
        // index [N_sigma : N_sigma']: solve B X = B' and take |det X|
        let b_coarse = coarse.cone_lattice(target);
        let b_fine = fine.cone_lattice(sigma_f);
        let s = b_coarse.cols();
        let mut x = IntMatrix::zero(s, s);
        let lhs: Vec<Vec<Rat>> = (0..fine.rank)
            .map(|i| (0..s).map(|j| rat_of(&b_coarse[(i, j)])).collect())
            .collect();
        for col in 0..s {
            let rhs: Vec<Rat> = (0..fine.rank).map(|i| rat_of(&b_fine[(i, col)])).collect();
            let sol = rational::solve(&lhs, &rhs)
                .ok_or_else(|| Error::NotRefinement("lattice solve failed".into()))?;
            for row in 0..s {
                if !sol[row].is_integer() {
                    return Err(Error::NotRefinement(
                        "fine cone lattice not inside coarse".into(),
                    ));
                }
                x[(row, col)] = sol[row].to_integer();
            }
        }
        let index = x.det().abs();
        out.add_term(target, coeff * rat_of(&index));
    }
    Ok(out)
}

/// A cycle is generically strong when no extra saturation component
/// dominates its image: every extra component's image cone must not be
/// contained in the slice's image cone.
pub fn is_generically_strong_slice(
    strata: &Strata,
    qfan: &QuotientFan,
    s: Slice,
) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySlice);
    }
    if !strata.slice_meets_x(s) {
        return Err(Error::ExcisedSlice(strata.p.set_names(s)));
    }
    let n = strata.p.n();
    let generic = s.complement(n);
    if !strata.is_semistable(generic) {
        // the slice does not dominate the stratum of its own index set;
        // treat its true components separately via saturation
        return Ok(false);
    }
    let b_s = strata.closed_orbit_support(generic)?;
    let cone_s = image_cone(strata, qfan, b_s)?;
    for t in strata.saturation_of_slice(s)? {
        if t == s {
            continue;
        }
        let b_t = strata.closed_orbit_support(t.complement(n))?;
        let cone_t = image_cone(strata, qfan, b_t)?;
        // cone containment in a fan is ray-set containment
        if qfan.fan.cones[cone_t].is_subset(&qfan.fan.cones[cone_s]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::fixtures;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn egs_quotient_fan_is_p2() {
        let s = fixtures::egs();
        let q = quotient_fan(&s).unwrap();
        assert_eq!(q.fan.rays.len(), 3);
        assert_eq!(q.fan.maximal.len(), 3);
        assert!(q.fan.is_complete_sampled(100));
        assert!(q.fan.is_simplicial());
        // x and y share a ray; z's inequality is not a facet
        assert_eq!(q.coord_ray[0], q.coord_ray[1]);
        assert!(q.coord_ray[2].is_none());
    }

    #[test]
    fn flag_quotient_fan_is_p2() {
        let s = fixtures::flag();
        let q = quotient_fan(&s).unwrap();
        assert_eq!(q.fan.rays.len(), 3);
        assert!(q.coord_ray[1].is_none()); // x2 redundant
    }

    #[test]
    fn quadric_quotient_fan() {
        let s = fixtures::quadric();
        let q = quotient_fan(&s).unwrap();
        assert_eq!(q.fan.rays.len(), 5);
        assert!(!q.fan.is_simplicial());
        assert!(q.fan.is_complete_sampled(100));
    }

    #[test]
    fn p2_chow_groups_are_z(){
        let s = fixtures::egs();
        let q = quotient_fan(&s).unwrap();
        for k in 0..=2usize {
            let pres = toric_chow_presentation(&q.fan, k).unwrap();
            assert_eq!(
                pres.structure,
                GroupStructure { free_rank: 1, torsion: vec![] },
                "A_{k}"
            );
        }
    }

    #[test]
    fn quadric_chow_groups() {
        let s = fixtures::quadric();
        let q = quotient_fan(&s).unwrap();
        // A_top = Z (fundamental class), A_0 = Z
        let top = toric_chow_presentation(&q.fan, 3).unwrap();
        assert_eq!(top.structure, GroupStructure { free_rank: 1, torsion: vec![] });
        let a0 = toric_chow_presentation(&q.fan, 0).unwrap();
        assert_eq!(a0.structure, GroupStructure { free_rank: 1, torsion: vec![] });
        // in A_1 the two rulings through the vertex agree
        let a1 = toric_chow_presentation(&q.fan, 1).unwrap();
        let beta = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[1, 4])).unwrap();
        let gamma = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[0, 4])).unwrap();
        assert_ne!(beta.coeffs, gamma.coeffs);
        assert!(a1.cycles_equal(&beta, &gamma, true).unwrap());
        assert!(a1.cycles_equal(&beta, &gamma, false).unwrap());
    }

    #[test]
    fn egs_image_cycles() {
        let s = fixtures::egs();
        let q = quotient_fan(&s).unwrap();
        // V(v): divisor
        let c = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[4])).unwrap();
        assert_eq!(c.dim, 1);
        // V(w,v): the point (1:0:0)
        let c = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[3, 4])).unwrap();
        assert_eq!(c.dim, 0);
        // V(z) collapses to a point
        let c = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[2])).unwrap();
        assert_eq!(c.dim, 0);
    }

    #[test]
    fn hyperplane_action_on_p2() {
        let s = fixtures::flag();
        let q = quotient_fan(&s).unwrap();
        let h = q.hyperplane();
        assert!(h.is_continuous(&q.fan));
        assert!(h.is_integral());
        // h . [P^2] = line class = image of V(z); h . line = point; point class nonzero
        let fundamental = SpaceCycle::single(2, q.fan.find_cone(&BTreeSet::new()).unwrap(), rat(1));
        let line = divisor_action(&q, &h, &fundamental).unwrap();
        let vz = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[3])).unwrap();
        let a1 = toric_chow_presentation(&q.fan, 1).unwrap();
        assert!(a1.cycles_equal(&line, &vz, false).unwrap());
        let point = divisor_action(&q, &h, &line).unwrap();
        let a0 = toric_chow_presentation(&q.fan, 0).unwrap();
        assert!(!a0.is_zero_cycle(&point, true).unwrap());
        // h^3-analog: a point has degree 1 on P^2
        let coords = a0.free_coordinates(&point).unwrap();
        assert_eq!(coords.iter().map(|x| x.clone().abs()).collect::<Vec<_>>(), vec![rat(1)]);
    }

    #[test]
    fn hyperplane_squared_on_quadric_cone() {
        let s = fixtures::quadric();
        let q = quotient_fan(&s).unwrap();
        let h = q.hyperplane();
        assert!(h.is_continuous(&q.fan));
        let fundamental = SpaceCycle::single(3, q.fan.find_cone(&BTreeSet::new()).unwrap(), rat(1));
        let section = divisor_action(&q, &h, &fundamental).unwrap();
        let curve = divisor_action(&q, &h, &section).unwrap();
        // h^2 equals twice the ruling line in A_1
        let a1 = toric_chow_presentation(&q.fan, 1).unwrap();
        let ruling = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[0, 4])).unwrap();
        assert!(a1.cycles_equal(&curve, &ruling.scale(&rat(2)), true).unwrap());
    }

    #[test]
    fn zero_divisor_acts_as_zero() {
        let s = fixtures::flag();
        let q = quotient_fan(&s).unwrap();
        let zero = PlFunction::zero(&q.fan);
        let fundamental = SpaceCycle::single(2, q.fan.find_cone(&BTreeSet::new()).unwrap(), rat(1));
        let c = divisor_action(&q, &zero, &fundamental).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn divisor_action_respects_rational_equivalence() {
        // act on two representatives of the same class, compare classes
        let s = fixtures::quadric();
        let q = quotient_fan(&s).unwrap();
        let h = q.hyperplane();
        let a1 = toric_chow_presentation(&q.fan, 1).unwrap();
        let beta = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[1, 4])).unwrap();
        let gamma = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[0, 4])).unwrap();
        assert!(a1.cycles_equal(&beta, &gamma, true).unwrap());
        let db = divisor_action(&q, &h, &beta).unwrap();
        let dg = divisor_action(&q, &h, &gamma).unwrap();
        let a0 = toric_chow_presentation(&q.fan, 0).unwrap();
        assert!(a0.cycles_equal(&db, &dg, true).unwrap());
    }

    #[test]
    fn identity_pushforward() {
        let s = fixtures::egs();
        let q = quotient_fan(&s).unwrap();
        let c = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[4])).unwrap();
        let pushed = toric_pushforward(&q.fan, &q.fan, &c).unwrap();
        assert_eq!(pushed, c);
        verify_refinement(&q.fan, &q.fan).unwrap();
    }

    #[test]
    fn generically_strong_examples() {
        let s = fixtures::flag();
        let q = quotient_fan(&s).unwrap();
        // V(x1): extra component V(x2) maps to a point: generically strong
        assert!(is_generically_strong_slice(&s, &q, IdxSet::from_indices(&[0])).unwrap());
        // V(x2): its saturation partner dominates its point image
        assert!(!is_generically_strong_slice(&s, &q, IdxSet::from_indices(&[1])).unwrap());
        // strong implies generically strong
        let e = fixtures::egs();
        let qe = quotient_fan(&e).unwrap();
        assert!(is_generically_strong_slice(&e, &qe, IdxSet::from_indices(&[4])).unwrap());
    }

    #[test]
    fn hypersurface_image_is_support_divisor() {
        let s = fixtures::flag();
        let q = quotient_fan(&s).unwrap();
        let c = image_cycle_of_hypersurface(&q, &bi(1));
        let vz = image_cycle_of_slice(&s, &q, IdxSet::from_indices(&[3])).unwrap();
        // same class as the image of V(z) (the representative depends on
        // the base-point normalization, only the class is canonical)
        let a1 = toric_chow_presentation(&q.fan, 1).unwrap();
        assert!(a1.cycles_equal(&c, &vz, false).unwrap());
        let c3 = image_cycle_of_hypersurface(&q, &bi(3));
        assert_eq!(c3, c.scale(&rat(3)));
        assert!(a1.cycles_equal(&c3, &vz.scale(&rat(3)), false).unwrap());
    }
}
