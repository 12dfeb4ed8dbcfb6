//! The torus GIT layer: presentations of quotient stacks [X/T] with X a
//! monomial-complement open set of affine space, support strata,
//! stability classification, stabilizers, closed-orbit degeneration,
//! saturation, and strongness tests.
//!
//! Everything works at the level of supports (torus-orbit strata): a
//! support is the set of coordinates nonzero at a generic point of the
//! stratum, encoded as a bitmask.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cones::Cone;
use crate::lattice::{cokernel_structure, Lattice};
use crate::matrix::IntMatrix;
use crate::polytope::Polytope;
use crate::rational::common_denominator;
use crate::{Error, Result};

/// Set of coordinate indices as a bitmask. Used both for supports (the
/// coordinates nonzero on a stratum) and slices (the coordinates cut out
/// by a coordinate subvariety V(x_j : j in S)).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct IdxSet(pub u64);

pub type Support = IdxSet;
pub type Slice = IdxSet;

impl IdxSet {
    pub const EMPTY: IdxSet = IdxSet(0);

    pub fn full(n: usize) -> IdxSet {
        IdxSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn from_indices(idx: &[usize]) -> IdxSet {
        IdxSet(idx.iter().fold(0, |m, &i| m | (1u64 << i)))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IdxSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn inter(self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 & other.0)
    }

    pub fn union(self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 | other.0)
    }

    pub fn minus(self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> IdxSet {
        IdxSet::full(n).minus(self)
    }

    pub fn insert(self, i: usize) -> IdxSet {
        IdxSet(self.0 | (1u64 << i))
    }

    /// All subsets of {0..n-1}, ascending as masks.
    pub fn all(n: usize) -> impl Iterator<Item = IdxSet> {
        (0..(1u64 << n)).map(IdxSet)
    }
}

/// Reduce a family of index sets to the inclusion-minimal ones (the
/// antichain covering the same union of coordinate subvarieties).
pub fn antichain(sets: impl IntoIterator<Item = IdxSet>) -> Vec<IdxSet> {
    let all: BTreeSet<IdxSet> = sets.into_iter().collect();
    all.iter()
        .copied()
        .filter(|s| !all.iter().any(|t| t != s && t.is_subset(*s)))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum StabilityClass {
    Unstable,
    SemistableNonStable,
    Stable,
    ProperlyStable,
}

impl StabilityClass {
    pub fn is_semistable(self) -> bool {
        self != StabilityClass::Unstable
    }

    pub fn is_stable(self) -> bool {
        matches!(self, StabilityClass::Stable | StabilityClass::ProperlyStable)
    }
}

impl std::fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StabilityClass::Unstable => "unstable",
            StabilityClass::SemistableNonStable => "semistable (not stable)",
            StabilityClass::Stable => "stable",
            StabilityClass::ProperlyStable => "properly stable",
        };
        write!(f, "{s}")
    }
}

/// Generic stabilizer of a stratum: dimension, and group order when the
/// dimension is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerInfo {
    pub dimension: usize,
    pub order: Option<BigInt>,
}

/// A weight-matrix presentation of the quotient stack [X/T]:
/// T = G_m^r acts on A^n with weight matrix `weights` (column j is the
/// weight of coordinate j), X is the complement of the union of the
/// excised coordinate subspaces, and `character` is the GIT
/// linearization when X arose as a semistable locus.
#[derive(Clone)]
pub struct Presentation {
    pub coords: Vec<String>,
    pub torus: Vec<String>,
    pub weights: IntMatrix,
    pub character: Option<Vec<BigInt>>,
    pub excised: Option<Vec<Slice>>,
}

impl Presentation {
    pub fn new(
        coords: Vec<String>,
        torus: Vec<String>,
        weights: IntMatrix,
        character: Option<Vec<BigInt>>,
        excised: Option<Vec<Slice>>,
    ) -> Result<Self> {
        let n = coords.len();
        let r = torus.len();
        if weights.rows() != r || weights.cols() != n {
            return Err(Error::Dimension(format!(
                "weight matrix is {}x{}, expected {}x{}",
                weights.rows(),
                weights.cols(),
                r,
                n
            )));
        }
        if n > 20 {
            return Err(Error::Input("more than 20 coordinates".into()));
        }
        let mut seen = BTreeSet::new();
        for c in &coords {
            if !seen.insert(c.clone()) {
                return Err(Error::Input(format!("duplicate coordinate name {c}")));
            }
        }
        if let Some(chi) = &character {
            if chi.len() != r {
                return Err(Error::Dimension(format!(
                    "character has {} entries, expected {}",
                    chi.len(),
                    r
                )));
            }
        }
        if character.is_none() && excised.is_none() {
            return Err(Error::Input(
                "presentation needs a character or an excised list".into(),
            ));
        }
        // normalize chi primitive; strongness-of-hypersurface tests are
        // ray conditions, so nothing downstream sees the difference
        let character = character.map(|chi| {
            let g = crate::matrix::vec_gcd(&chi);
            if g.is_zero() || g.is_one() {
                chi
            } else {
                chi.iter().map(|x| x / &g).collect()
            }
        });
        let excised = excised.map(|e| antichain(e));
        Ok(Presentation { coords, torus, weights, character, excised })
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn r(&self) -> usize {
        self.torus.len()
    }

    /// Dimension of the stack [X/T]; equals dim of the good moduli space
    /// for properly stable presentations.
    pub fn stack_dim(&self) -> usize {
        self.n() - self.r()
    }

    pub fn weight_col(&self, j: usize) -> Vec<BigInt> {
        self.weights.column(j)
    }

    pub fn weight_cone(&self, a: Support) -> Cone {
        Cone::new(self.r(), a.indices().iter().map(|&j| self.weight_col(j)).collect())
    }

    /// Names of the coordinates in an index set, for diagnostics.
    pub fn set_names(&self, s: IdxSet) -> String {
        let names: Vec<&str> =
            s.indices().iter().map(|&j| self.coords[j].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// The GIT polytope {a >= 0 : W a = chi}.
    pub fn git_polytope(&self) -> Result<Polytope> {
        let chi = self.character.as_ref().ok_or(Error::MissingCharacter)?;
        Ok(Polytope::git(&self.weights, chi))
    }

    /// Is the generic point of stratum `a` inside X, judged from the
    /// excised list?
    pub fn in_x_excised(&self, a: Support) -> Option<bool> {
        self.excised
            .as_ref()
            .map(|ex| ex.iter().all(|e| !e.inter(a).is_empty()))
    }
}

/// A chart D(m) of the semistable locus: m is the semi-invariant monomial
/// built from a vertex of the GIT polytope.
#[derive(Clone, Debug)]
pub struct Chart {
    pub support: IdxSet,
    pub exponent: Vec<BigInt>,
}

impl Chart {
    pub fn monomial_string(&self, p: &Presentation) -> String {
        let mut parts = Vec::new();
        for (j, e) in self.exponent.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                parts.push(p.coords[j].clone());
            } else {
                parts.push(format!("{}^{}", p.coords[j], e));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Why a slice is, or is not, strongly embedded.
#[derive(Clone, Debug)]
pub enum StrongCertificate {
    /// Saturated and cut by invariant monomials on every chart. For each
    /// chart either the slice misses it (shares a coordinate with the
    /// chart support) or every slice coordinate's weight lies in the
    /// lattice of the chart support's weights.
    Strong { charts: Vec<String> },
    /// Topological saturation picked up extra components.
    ExtraSaturation { extra: Vec<Slice> },
    /// On the named chart the slice is not cut out by invariant
    /// monomials: the weight of `coordinate` is not in the weight
    /// lattice of the chart support.
    ChartFailure { chart: String, coordinate: usize },
}

impl StrongCertificate {
    pub fn is_strong(&self) -> bool {
        matches!(self, StrongCertificate::Strong { .. })
    }
}

/// Precomputed stratum tables for one presentation: semistability of
/// every support, the closed-orbit operator B, and stabilizer data.
pub struct Strata {
    pub p: Presentation,
    n: usize,
    /// chi-semistability per support mask (via excised when no character)
    sst: Vec<bool>,
    /// generic point of stratum lies in X (excised view; equals sst when
    /// only a character is given)
    in_x: Vec<bool>,
    /// closed-orbit support B(A) for semistable A
    b_op: Vec<Option<IdxSet>>,
    /// stabilizer dimension per support
    stab_dim: Vec<usize>,
}

impl Strata {
    pub fn new(p: Presentation) -> Result<Strata> {
        let n = p.n();
        let r = p.r();
        let size = 1usize << n;
        let mut sst = vec![false; size];
        let mut in_x = vec![false; size];
        let mut b_op = vec![None; size];
        let mut stab_dim = vec![0usize; size];

        let has_chi = p.character.is_some();
        for a in IdxSet::all(n) {
            let idx = a.0 as usize;
            let semistable = if has_chi {
                let chi = p.character.as_ref().unwrap();
                p.weight_cone(a).contains(chi)
            } else {
                p.in_x_excised(a).unwrap()
            };
            sst[idx] = semistable;
            in_x[idx] = p.in_x_excised(a).unwrap_or(semistable);
            let wa = p.weights.select_columns(&a.indices());
            stab_dim[idx] = r - crate::matrix::smith_normal_form(&wa).rank();
            if semistable && has_chi {
                let chi = p.character.as_ref().unwrap();
                let cone = p.weight_cone(a);
                let face = cone.minimal_face(chi)?;
                let idxs = a.indices();
                let b: Vec<usize> = face.iter().map(|&k| idxs[k]).collect();
                b_op[idx] = Some(IdxSet::from_indices(&b));
            } else if semistable {
                // no character: every orbit is treated as closed in its
                // fiber; B is only used by character-based analyses
                b_op[idx] = None;
            }
        }
        Ok(Strata { p, n, sst, in_x, b_op, stab_dim })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_semistable(&self, a: Support) -> bool {
        self.sst[a.0 as usize]
    }

    pub fn in_x(&self, a: Support) -> bool {
        self.in_x[a.0 as usize]
    }

    pub fn semistable_supports(&self) -> Vec<Support> {
        IdxSet::all(self.n).filter(|a| self.sst[a.0 as usize]).collect()
    }

    /// Closed-orbit support B(A): the coordinates of A whose weights lie
    /// on the minimal face of Cone(w_j : j in A) containing chi in its
    /// relative interior. Defined for semistable A on presentations with
    /// a character.
    pub fn closed_orbit_support(&self, a: Support) -> Result<Support> {
        if !self.is_semistable(a) {
            return Err(Error::UnstableSupport(self.p.set_names(a)));
        }
        self.b_op[a.0 as usize].ok_or(Error::MissingCharacter)
    }

    pub fn stabilizer(&self, a: Support) -> StabilizerInfo {
        let dim = self.stab_dim[a.0 as usize];
        let order = if dim == 0 {
            let wa = self.p.weights.select_columns(&a.indices());
            Some(cokernel_structure(&wa).torsion_order())
        } else {
            None
        };
        StabilizerInfo { dimension: dim, order }
    }

    pub fn classify(&self, a: Support) -> Result<StabilityClass> {
        if !self.is_semistable(a) {
            return Ok(StabilityClass::Unstable);
        }
        let b = self.closed_orbit_support(a)?;
        if b != a {
            return Ok(StabilityClass::SemistableNonStable);
        }
        for a2 in self.semistable_supports() {
            if a2 != a && a.is_subset(a2) && self.closed_orbit_support(a2)? == a {
                return Ok(StabilityClass::SemistableNonStable);
            }
        }
        if self.stab_dim[a.0 as usize] == 0 {
            Ok(StabilityClass::ProperlyStable)
        } else {
            Ok(StabilityClass::Stable)
        }
    }

    pub fn has_properly_stable(&self) -> Result<bool> {
        for a in self.semistable_supports() {
            if self.classify(a)? == StabilityClass::ProperlyStable {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Is the stack Deligne-Mumford: every stratum in X has a
    /// zero-dimensional stabilizer? (Judged from the excised view when
    /// present, else from semistability.)
    pub fn is_deligne_mumford(&self) -> bool {
        IdxSet::all(self.n)
            .filter(|a| self.in_x[a.0 as usize])
            .all(|a| self.stab_dim[a.0 as usize] == 0)
    }

    /// Does V(x_S) meet X?
    pub fn slice_meets_x(&self, s: Slice) -> bool {
        IdxSet::all(self.n).any(|a| self.in_x[a.0 as usize] && a.inter(s).is_empty())
    }

    /// Strata of the saturation of V(x_S): semistable supports whose
    /// closed-orbit support avoids S.
    fn saturation_strata(&self, s: Slice) -> Result<Vec<Support>> {
        let mut out = Vec::new();
        for a in self.semistable_supports() {
            if self.closed_orbit_support(a)?.inter(s).is_empty() {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// Minimal slices whose union is the saturation of V(x_S) with
    /// respect to the good moduli space map, as an antichain.
    pub fn saturation_of_slice(&self, s: Slice) -> Result<Vec<Slice>> {
        let strata = self.saturation_strata(s)?;
        let maximal: Vec<Support> = strata
            .iter()
            .copied()
            .filter(|a| !strata.iter().any(|b| b != a && a.is_subset(*b)))
            .collect();
        Ok(antichain(maximal.into_iter().map(|a| a.complement(self.n))))
    }

    /// Charts D(m) covering the semistable locus, one per vertex of the
    /// GIT polytope (exponent = vertex cleared of denominators).
    pub fn charts(&self) -> Result<Vec<Chart>> {
        let poly = self.p.git_polytope()?;
        let vertices = poly.vertices()?;
        if vertices.is_empty() {
            return Err(Error::EmptySemistable);
        }
        let mut charts = Vec::new();
        for v in &vertices {
            let den = common_denominator(v);
            let exponent: Vec<BigInt> = v
                .iter()
                .map(|x| {
                    let scaled = x * crate::rational::rat_of(&den);
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect();
            let support = IdxSet::from_indices(
                &(0..self.n).filter(|&j| !exponent[j].is_zero()).collect::<Vec<_>>(),
            );
            charts.push(Chart { support, exponent });
        }
        Ok(charts)
    }

    /// Strong embedding test for a coordinate slice: topological
    /// saturation must return the slice itself, and on every invariant
    /// chart the slice ideal must be generated by invariant Laurent
    /// monomials. The certificate records the failing chart or the extra
    /// saturation components.
    pub fn is_strong_slice(&self, s: Slice) -> Result<StrongCertificate> {
        if s.is_empty() {
            return Err(Error::EmptySlice);
        }
        if !self.slice_meets_x(s) {
            return Err(Error::ExcisedSlice(self.p.set_names(s)));
        }
        let sat = self.saturation_of_slice(s)?;
        if sat != vec![s] {
            let extra: Vec<Slice> = sat.into_iter().filter(|t| *t != s).collect();
            return Ok(StrongCertificate::ExtraSaturation { extra });
        }
        let mut witnesses = Vec::new();
        for chart in self.charts()? {
            let name = chart.monomial_string(&self.p);
            if !chart.support.inter(s).is_empty() {
                witnesses.push(format!(
                    "V({}) misses the chart D({})",
                    self.p.set_names(s),
                    name
                ));
                continue;
            }
            let gens: Vec<Vec<BigInt>> = chart
                .support
                .indices()
                .iter()
                .map(|&j| self.p.weight_col(j))
                .collect();
            let lat = Lattice::from_generators(self.p.r(), &gens);
            for j in s.indices() {
                match lat.member(&self.p.weight_col(j)) {
                    Some(c) => {
                        let chart_idx = chart.support.indices();
                        let denom: Vec<String> = c
                            .iter()
                            .enumerate()
                            .filter(|(_, coeff)| !coeff.is_zero())
                            .map(|(k, coeff)| {
                                format!("{}^{}", self.p.coords[chart_idx[k]], coeff)
                            })
                            .collect();
                        witnesses.push(format!(
                            "on D({}): {} = invariant {} / ({})",
                            name,
                            self.p.coords[j],
                            self.p.coords[j],
                            if denom.is_empty() { "1".into() } else { denom.join("*") },
                        ));
                    }
                    None => {
                        return Ok(StrongCertificate::ChartFailure {
                            chart: name,
                            coordinate: j,
                        });
                    }
                }
            }
        }
        Ok(StrongCertificate::Strong { charts: witnesses })
    }

    /// A generic semi-invariant hypersurface V(f) of the given weight is
    /// strong iff the weight is a positive rational multiple of chi.
    pub fn is_strong_hypersurface(&self, weight: &[BigInt]) -> Result<bool> {
        let chi = self.p.character.as_ref().ok_or(Error::MissingCharacter)?;
        if weight.len() != self.p.r() {
            return Err(Error::Dimension("hypersurface weight length".into()));
        }
        // weight = d * chi with d > 0 rational
        let mut ratio: Option<(BigInt, BigInt)> = None; // (num, den)
        for (w, c) in weight.iter().zip(chi.iter()) {
            if c.is_zero() {
                if !w.is_zero() {
                    return Ok(false);
                }
                continue;
            }
            match &ratio {
                None => ratio = Some((w.clone(), c.clone())),
                Some((num, den)) => {
                    if w * den != num * c {
                        return Ok(false);
                    }
                }
            }
        }
        match ratio {
            Some((num, den)) => Ok((num * den).is_positive()),
            // chi = 0: only the zero weight qualifies, and it is not a
            // positive multiple
            None => Ok(false),
        }
    }

    /// Maximal stabilizer dimension over semistable strata, with the
    /// minimal slices covering the closed locus where it is achieved.
    pub fn max_stabilizer_locus(&self) -> Result<(usize, Vec<Slice>)> {
        let sst = self.semistable_supports();
        if sst.is_empty() {
            return Err(Error::EmptySemistable);
        }
        let max = sst.iter().map(|a| self.stab_dim[a.0 as usize]).max().unwrap();
        let achieving: Vec<Support> = sst
            .iter()
            .copied()
            .filter(|a| self.stab_dim[a.0 as usize] == max)
            .collect();
        let maximal: Vec<Support> = achieving
            .iter()
            .copied()
            .filter(|a| !achieving.iter().any(|b| b != a && a.is_subset(*b)))
            .collect();
        Ok((max, antichain(maximal.into_iter().map(|a| a.complement(self.n)))))
    }

    /// Does the chi-unstable locus equal the excised union? Returns the
    /// verdict plus a list of mismatching supports for diagnostics.
    pub fn consistency_check(&self) -> Result<(bool, Vec<String>)> {
        let chi = self.p.character.as_ref().ok_or(Error::MissingCharacter)?;
        let _ = chi;
        if self.p.excised.is_none() {
            return Err(Error::MissingExcised);
        }
        let mut mismatches = Vec::new();
        for a in IdxSet::all(self.n) {
            let semistable = self.sst[a.0 as usize];
            let excluded = !self.p.in_x_excised(a).unwrap();
            if semistable == excluded {
                mismatches.push(format!(
                    "support {} is {} but {} by the excised list",
                    self.p.set_names(a),
                    if semistable { "semistable" } else { "unstable" },
                    if excluded { "removed" } else { "kept" },
                ));
            }
        }
        Ok((mismatches.is_empty(), mismatches))
    }

    /// Minimal primes of the squarefree monomial ideal cutting out the
    /// excised union (derived from the character when no excised list is
    /// stored): the unstable locus as an antichain of slices.
    pub fn excised_components(&self) -> Vec<Slice> {
        if let Some(ex) = &self.p.excised {
            return ex.clone();
        }
        // complements of maximal semistable supports do not describe the
        // unstable locus directly; instead take maximal unstable strata
        let unstable: Vec<Support> =
            IdxSet::all(self.n).filter(|a| !self.sst[a.0 as usize]).collect();
        let maximal: Vec<Support> = unstable
            .iter()
            .copied()
            .filter(|a| !unstable.iter().any(|b| b != a && a.is_subset(*b)))
            .collect();
        antichain(maximal.into_iter().map(|a| a.complement(self.n)))
    }
}

/// Minimal transversals (hitting sets) of a family of index sets: the
/// minimal primes of the squarefree monomial ideal whose generators have
/// the given supports.
pub fn minimal_transversals(n: usize, supports: &[IdxSet]) -> Vec<IdxSet> {
    // exhaustive over subsets; fine at desk scale
    let hits: Vec<IdxSet> = IdxSet::all(n)
        .filter(|t| supports.iter().all(|s| !s.inter(*t).is_empty()))
        .collect();
    antichain(hits)
}

/// The paper's worked examples, used as shared fixtures across the test
/// suite.
#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    pub fn flag() -> Strata {
        // Example: G_m^2 on A^4, coordinates (x1,x2,x3,z),
        // X = A^4 \ V(x1x2, x2x3, z), chi = (1,1)
        let p = Presentation::new(
            vec!["x1".into(), "x2".into(), "x3".into(), "z".into()],
            vec!["s".into(), "t".into()],
            IntMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 0, 1]]),
            Some(vec![bi(1), bi(1)]),
            Some(vec![
                IdxSet::from_indices(&[1, 3]),
                IdxSet::from_indices(&[0, 2, 3]),
            ]),
        )
        .unwrap();
        Strata::new(p).unwrap()
    }

    pub fn egs() -> Strata {
        // G_m^3 on A^5, coordinates (x,y,z,w,v), X = A^5 \ V(xyz, zw, v)
        let p = Presentation::new(
            vec!["x".into(), "y".into(), "z".into(), "w".into(), "v".into()],
            vec!["s".into(), "t".into(), "u".into()],
            IntMatrix::from_rows(&[
                vec![1, 0, 0, 1, 1],
                vec![0, 1, 0, 1, 1],
                vec![0, 0, 1, 0, 1],
            ]),
            Some(vec![bi(1), bi(1), bi(1)]),
            Some(vec![
                IdxSet::from_indices(&[0, 3, 4]),
                IdxSet::from_indices(&[1, 3, 4]),
                IdxSet::from_indices(&[2, 4]),
            ]),
        )
        .unwrap();
        Strata::new(p).unwrap()
    }

    pub fn quadric() -> Strata {
        // G_m^2 on A^5, coordinates (x1,x2,x3,x4,v)
        let p = Presentation::new(
            vec!["x1".into(), "x2".into(), "x3".into(), "x4".into(), "v".into()],
            vec!["s".into(), "t".into()],
            IntMatrix::from_rows(&[vec![1, 0, 1, 0, 1], vec![0, 1, 0, 1, 1]]),
            Some(vec![bi(1), bi(1)]),
            Some(vec![
                IdxSet::from_indices(&[0, 2, 4]),
                IdxSet::from_indices(&[1, 3, 4]),
            ]),
        )
        .unwrap();
        Strata::new(p).unwrap()
    }

    pub fn a2_gm() -> Strata {
        // G_m on A^2 with weights (1,0), chi = 0: no stable points
        let p = Presentation::new(
            vec!["x".into(), "y".into()],
            vec!["s".into()],
            IntMatrix::from_rows(&[vec![1, 0]]),
            Some(vec![bi(0)]),
            None,
        )
        .unwrap();
        Strata::new(p).unwrap()
    }
}
