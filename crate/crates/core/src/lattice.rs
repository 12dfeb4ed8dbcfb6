//! Integer lattices: membership with certificates, canonical coset
//! representatives, and cokernel structure. Backs both the per-degree
//! relation lattices of the Chow rings and the stabilizer-order
//! computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::{column_hermite, smith_normal_form, ColumnHermite, IntMatrix};
use crate::rational::{self, Rat};

/// Abstract abelian group report: Z^free_rank plus the listed cyclic
/// torsion factors (each > 1, divisibility order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl GroupStructure {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl std::fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Structure of coker(Z^cols -> Z^rows) of an integer matrix.
pub fn cokernel_structure(a: &IntMatrix) -> GroupStructure {
    let snf = smith_normal_form(a);
    GroupStructure { free_rank: a.rows() - snf.rank(), torsion: snf.torsion() }
}

/// A sublattice of Z^ambient given by generating columns, with its
/// Hermite echelon basis cached for membership and coset reduction.
pub struct Lattice {
    ambient: usize,
    gens: IntMatrix,
    hermite: ColumnHermite,
}

impl Lattice {
    pub fn new(ambient: usize, gens: IntMatrix) -> Self {
        assert_eq!(gens.rows(), ambient, "generator ambient mismatch");
        let hermite = column_hermite(&gens);
        Lattice { ambient, gens, hermite }
    }

    pub fn from_generators(ambient: usize, gens: &[Vec<BigInt>]) -> Self {
        Lattice::new(ambient, IntMatrix::from_columns(ambient, gens))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.hermite.h.cols()
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.gens
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.hermite.h
    }

    /// Reduce `v` against the echelon basis. Returns the residual and the
    /// coefficients used on the basis columns.
    fn reduce(&self, v: &[BigInt], floor_mode: bool) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(v.len(), self.ambient, "vector ambient mismatch");
        let h = &self.hermite.h;
        let mut x = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); h.cols()];
        for (col, &row) in self.hermite.pivot_rows.iter().enumerate() {
            let pivot = &h[(row, col)];
            let q = if floor_mode {
                x[row].div_floor(pivot)
            } else {
                let (q, r) = x[row].div_rem(pivot);
                if r.is_zero() {
                    q
                } else {
                    x[row].div_floor(pivot)
                }
            };
            if q.is_zero() {
                continue;
            }
            for i in 0..self.ambient {
                let t = &q * &h[(i, col)];
                x[i] -= t;
            }
            coeffs[col] = q;
        }
        (x, coeffs)
    }

    /// Exact membership over Z. On success returns coefficients on the
    /// original generators with generators * c = v.
    pub fn member(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let (residual, basis_coeffs) = self.reduce(v, false);
        if !residual.iter().all(|x| x.is_zero()) {
            return None;
        }
        // coefficients on original generators: u * (basis coeffs padded)
        let m = self.gens.cols();
        let mut padded = basis_coeffs;
        padded.resize(m, BigInt::zero());
        let c = self.hermite.u.mul_vec(&padded);
        debug_assert_eq!(self.gens.mul_vec(&c), v.to_vec());
        Some(c)
    }

    /// Membership in the Q-span, with rational coefficients on the
    /// original generators.
    pub fn member_rational(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let rows: Vec<Vec<Rat>> = (0..self.ambient)
            .map(|i| (0..self.gens.cols()).map(|j| rational::rat_of(&self.gens[(i, j)])).collect())
            .collect();
        rational::solve(&rows, v)
    }

    /// Canonical representative of the coset v + L: pivot-row residues
    /// lie in [0, pivot). Two vectors get the same representative iff
    /// they differ by a lattice element.
    pub fn coset_canonical(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.reduce(v, true).0
    }

    /// Structure of Z^ambient / L.
    pub fn quotient_structure(&self) -> GroupStructure {
        cokernel_structure(&self.gens)
    }
}

/// Saturation of the column span: basis of (Q-span of cols) ∩ Z^n.
pub fn saturate_span(cols: &IntMatrix) -> IntMatrix {
    // orthogonal complement of the span, then its kernel
    let ortho = crate::matrix::kernel_basis(&cols.transpose());
    crate::matrix::kernel_basis(&ortho.transpose())
}

/// Projection data for the quotient of Z^n by a saturated sublattice.
pub struct SaturatedQuotient {
    /// (n - s) x n projection matrix; kernel is exactly the sublattice.
    pub proj: IntMatrix,
    /// n x (n - s) section with proj * lift = identity.
    pub lift: IntMatrix,
}

/// Quotient map Z^n -> Z^(n-s) by the (saturated) column span of `basis`.
/// Panics if the span is not saturated (the quotient would have torsion).
pub fn quotient_by_saturated(n: usize, basis: &IntMatrix) -> SaturatedQuotient {
    assert_eq!(basis.rows(), n);
    let snf = smith_normal_form(basis);
    let s = snf.rank();
    for i in 0..s {
        assert!(snf.d[(i, i)].is_one(), "sublattice is not saturated");
    }
    // p * basis * q = [I_s; 0]; the last n-s rows of p give the quotient
    // projection, the last n-s columns of p_inv a section.
    let proj_rows: Vec<Vec<BigInt>> = (s..n).map(|i| snf.p.row(i)).collect();
    let proj = IntMatrix::from_bigint_rows(proj_rows);
    let lift_cols: Vec<Vec<BigInt>> = (s..n).map(|j| snf.p_inv.column(j)).collect();
    let lift = IntMatrix::from_columns(n, &lift_cols);
    SaturatedQuotient { proj, lift }
}
