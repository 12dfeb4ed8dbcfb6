//! The integral Chow ring of the quotient stack via the excision
//! presentation: Z[t1..tr] modulo the ideal generated by the classes of
//! the excised coordinate subspaces. All graded computation is per-degree
//! integer linear algebra against the lattice spanned by
//! (relation generator) x (monomial) products; no Groebner bases.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lattice::{GroupStructure, Lattice};
use crate::matrix::IntMatrix;
use crate::strata::{Slice, Strata};
use crate::{Error, Result};

/// Integer polynomial stored as exponent vector -> coefficient, with no
/// zero coefficients kept. Grading is by weighted total degree (the ring
/// fixes the variable degrees; ordinary Chow variables all have degree 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly { terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], BigInt::one());
        GradedPoly { terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        GradedPoly { terms }
    }

    /// Degree-one form with the given coefficients on the variables.
    pub fn linear_form(coeffs: &[BigInt]) -> Self {
        let nvars = coeffs.len();
        let mut p = GradedPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.terms.insert(e, c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> GradedPoly {
        if k.is_zero() {
            return GradedPoly::zero();
        }
        GradedPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> GradedPoly {
        let nvars = self.terms.keys().next().map_or(0, |e| e.len());
        let mut out = GradedPoly::one(nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    fn weighted_degree(e: &[u32], var_degrees: &[u32]) -> u32 {
        e.iter().zip(var_degrees.iter()).map(|(a, d)| a * d).sum()
    }

    /// Split into homogeneous components by weighted degree.
    pub fn components(&self, var_degrees: &[u32]) -> BTreeMap<u32, GradedPoly> {
        let mut out: BTreeMap<u32, GradedPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = GradedPoly::weighted_degree(e, var_degrees);
            out.entry(d).or_insert_with(GradedPoly::zero).insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self, var_degrees: &[u32]) -> Option<u32> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d = GradedPoly::weighted_degree(e, var_degrees);
            match deg {
                None => deg = Some(d),
                Some(x) if x == d => {}
                _ => return None,
            }
        }
        deg.or(Some(0))
    }

    pub fn to_string_with(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        // graded lexicographic display order
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(v, k)| {
                    if *k == 1 {
                        vars[v].clone()
                    } else {
                        format!("{}^{}", vars[v], k)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", mag, mono));
            }
        }
        out
    }
}

/// All exponent vectors of the given weighted degree, in descending
/// lexicographic order (the canonical monomial order within a degree).
pub fn monomials_of_degree(var_degrees: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn rec(var_degrees: &[u32], pos: usize, remaining: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == var_degrees.len() {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if pos + 1 == var_degrees.len() {
            let d = var_degrees[pos];
            if d == 0 {
                if remaining == 0 {
                    acc.push(0);
                    out.push(acc.clone());
                    acc.pop();
                }
                return;
            }
            if remaining % d == 0 {
                acc.push(remaining / d);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        let d = var_degrees[pos];
        let max = if d == 0 { 0 } else { remaining / d };
        for e in (0..=max).rev() {
            acc.push(e);
            rec(var_degrees, pos + 1, remaining - e * d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(var_degrees, 0, k, &mut Vec::new(), &mut out);
    out
}

struct DegreeData {
    monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    lattice: Lattice,
    /// lattice generator column -> (relation index, multiplier monomial)
    gen_tags: Vec<(usize, Vec<u32>)>,
}

/// An element of the ring, stored in canonical form (each homogeneous
/// component Hermite-reduced against the relation lattice of its degree;
/// degrees above the ring's bound are truncated away).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackClass {
    ring_fp: u64,
    pub poly: GradedPoly,
}

/// Certificate that a homogeneous element lies in the relation ideal:
/// element = sum of cofactor * generator.
pub struct MembershipCertificate {
    pub combination: Vec<(usize, GradedPoly)>,
}

impl MembershipCertificate {
    pub fn to_string_with(&self, ring: &StackChowRing) -> String {
        if self.combination.is_empty() {
            return "0 (empty combination)".into();
        }
        self.combination
            .iter()
            .map(|(rel, cof)| {
                format!(
                    "({}) * ({})",
                    cof.to_string_with(&ring.vars),
                    ring.relations[*rel].to_string_with(&ring.vars)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub struct StackChowRing {
    pub vars: Vec<String>,
    pub var_degrees: Vec<u32>,
    pub relations: Vec<GradedPoly>,
    pub max_degree: u32,
    degrees: Vec<DegreeData>,
    fingerprint: u64,
}

fn fnv(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

impl StackChowRing {
    pub fn new(
        vars: Vec<String>,
        var_degrees: Vec<u32>,
        relations: Vec<GradedPoly>,
        max_degree: u32,
    ) -> Result<Self> {
        assert_eq!(vars.len(), var_degrees.len());
        for rel in &relations {
            if rel.is_homogeneous(&var_degrees).is_none() {
                return Err(Error::Input("relation generator is not homogeneous".into()));
            }
        }
        let mut fp_src = String::new();
        for (v, d) in vars.iter().zip(var_degrees.iter()) {
            fp_src.push_str(&format!("{v}:{d};"));
        }
        for rel in &relations {
            fp_src.push_str(&rel.to_string_with(&vars));
            fp_src.push('|');
        }
        fp_src.push_str(&max_degree.to_string());
        let fingerprint = fnv(fp_src.as_bytes());

        let mut degrees = Vec::new();
        for k in 0..=max_degree {
            let monomials = monomials_of_degree(&var_degrees, k);
            let index: BTreeMap<Vec<u32>, usize> =
                monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            let mut cols: Vec<Vec<BigInt>> = Vec::new();
            let mut gen_tags = Vec::new();
            for (ri, rel) in relations.iter().enumerate() {
                let d = rel.is_homogeneous(&var_degrees).unwrap();
                if d > k {
                    continue;
                }
                for m in monomials_of_degree(&var_degrees, k - d) {
                    let mut shifted = GradedPoly::zero();
                    for (e, c) in &rel.terms {
                        let sum: Vec<u32> =
                            e.iter().zip(m.iter()).map(|(a, b)| a + b).collect();
                        shifted.insert_term(sum, c.clone());
                    }
                    let mut col = vec![BigInt::zero(); monomials.len()];
                    for (e, c) in &shifted.terms {
                        col[index[e]] = c.clone();
                    }
                    cols.push(col);
                    gen_tags.push((ri, m));
                }
            }
            let lattice = Lattice::new(monomials.len(), IntMatrix::from_columns(monomials.len(), &cols));
            degrees.push(DegreeData { monomials, index, lattice, gen_tags });
        }
        Ok(StackChowRing { vars, var_degrees, relations, max_degree, degrees, fingerprint })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn degree_data(&self, k: u32) -> &DegreeData {
        &self.degrees[k as usize]
    }

    pub fn monomial_basis(&self, k: u32) -> &[Vec<u32>] {
        &self.degree_data(k).monomials
    }

    fn component_vector(&self, k: u32, comp: &GradedPoly) -> Vec<BigInt> {
        let dd = self.degree_data(k);
        let mut v = vec![BigInt::zero(); dd.monomials.len()];
        for (e, c) in &comp.terms {
            v[dd.index[e]] = c.clone();
        }
        v
    }

    fn vector_to_poly(&self, k: u32, v: &[BigInt]) -> GradedPoly {
        let dd = self.degree_data(k);
        let mut p = GradedPoly::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p.insert_term(dd.monomials[i].clone(), c.clone());
            }
        }
        p
    }

    /// Canonicalize: reduce every homogeneous component against its
    /// degree's relation lattice; truncate above the degree bound.
    pub fn class_of(&self, poly: &GradedPoly) -> StackClass {
        let mut out = GradedPoly::zero();
        for (k, comp) in poly.components(&self.var_degrees) {
            if k > self.max_degree {
                continue;
            }
            let v = self.component_vector(k, &comp);
            let reduced = self.degree_data(k).lattice.coset_canonical(&v);
            out = out.add(&self.vector_to_poly(k, &reduced));
        }
        StackClass { ring_fp: self.fingerprint, poly: out }
    }

    pub fn zero_class(&self) -> StackClass {
        StackClass { ring_fp: self.fingerprint, poly: GradedPoly::zero() }
    }

    pub fn one_class(&self) -> StackClass {
        self.class_of(&GradedPoly::one(self.nvars()))
    }

    fn check(&self, a: &StackClass) -> Result<()> {
        if a.ring_fp != self.fingerprint {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &StackClass, b: &StackClass) -> Result<StackClass> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.class_of(&a.poly.add(&b.poly)))
    }

    pub fn sub(&self, a: &StackClass, b: &StackClass) -> Result<StackClass> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.class_of(&a.poly.sub(&b.poly)))
    }

    pub fn multiply(&self, a: &StackClass, b: &StackClass) -> Result<StackClass> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.class_of(&a.poly.mul(&b.poly)))
    }

    /// Exact zero test of a class: integral by default, rational span on
    /// request.
    pub fn is_zero_class(
        &self,
        a: &StackClass,
        rational: bool,
    ) -> Result<(bool, Vec<(u32, MembershipCertificate)>)> {
        self.check(a)?;
        self.ideal_membership(&a.poly, rational)
    }

    /// Ideal membership of a raw polynomial, degree by degree. The
    /// integral certificate expresses each component as an explicit
    /// combination of relation generators.
    pub fn ideal_membership(
        &self,
        poly: &GradedPoly,
        rational: bool,
    ) -> Result<(bool, Vec<(u32, MembershipCertificate)>)> {
        let mut certs = Vec::new();
        for (k, comp) in poly.components(&self.var_degrees) {
            if k > self.max_degree {
                continue;
            }
            let dd = self.degree_data(k);
            let v = self.component_vector(k, &comp);
            if rational {
                let vq = crate::rational::rats_of(&v);
                if dd.lattice.member_rational(&vq).is_none() {
                    return Ok((false, Vec::new()));
                }
            } else {
                match dd.lattice.member(&v) {
                    Some(coeffs) => {
                        let mut by_rel: BTreeMap<usize, GradedPoly> = BTreeMap::new();
                        for (col, c) in coeffs.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let (ri, mono) = &dd.gen_tags[col];
                            let mut term = GradedPoly::zero();
                            term.insert_term(mono.clone(), c.clone());
                            let entry =
                                by_rel.entry(*ri).or_insert_with(GradedPoly::zero);
                            *entry = entry.add(&term);
                        }
                        certs.push((
                            k,
                            MembershipCertificate {
                                combination: by_rel.into_iter().collect(),
                            },
                        ));
                    }
                    None => return Ok((false, Vec::new())),
                }
            }
        }
        Ok((true, certs))
    }

    pub fn classes_equal(&self, a: &StackClass, b: &StackClass, rational: bool) -> Result<bool> {
        let diff = self.sub(a, b)?;
        Ok(self.is_zero_class(&diff, rational)?.0)
    }

    /// The degree-k piece as an abstract abelian group.
    pub fn graded_piece(&self, k: u32) -> GroupStructure {
        self.degree_data(k).lattice.quotient_structure()
    }

    /// Per-degree ideal equality against another ring over the same
    /// variables (both inclusions of relation lattices, degree by degree).
    pub fn same_ideal_through(&self, other: &StackChowRing, through: u32) -> bool {
        if self.vars.len() != other.vars.len() {
            return false;
        }
        for k in 0..=through.min(self.max_degree).min(other.max_degree) {
            let a = self.degree_data(k);
            let b = other.degree_data(k);
            let ag = a.lattice.generators();
            for j in 0..ag.cols() {
                if b.lattice.member(&ag.column(j)).is_none() {
                    return false;
                }
            }
            let bg = b.lattice.generators();
            for j in 0..bg.cols() {
                if a.lattice.member(&bg.column(j)).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Coordinates of the degree-k component in the monomial basis.
    pub fn component_coords(&self, a: &StackClass, k: u32) -> Vec<BigInt> {
        let comps = a.poly.components(&self.var_degrees);
        match comps.get(&k) {
            Some(c) => self.component_vector(k, c),
            None => vec![BigInt::zero(); self.degree_data(k).monomials.len()],
        }
    }

    /// The relation sublattice of degree k.
    pub fn relation_lattice(&self, k: u32) -> &Lattice {
        &self.degree_data(k).lattice
    }
}

/// Build the excision-presented Chow ring of a presentation: one
/// relation per excised component, the product of the weight linear
/// forms of its coordinates.
pub fn build_ring(strata: &Strata, max_degree: u32) -> Result<StackChowRing> {
    let p = &strata.p;
    let relations: Vec<GradedPoly> = strata
        .excised_components()
        .iter()
        .map(|s| slice_polynomial(strata, *s))
        .collect();
    StackChowRing::new(p.torus.clone(), vec![1; p.r()], relations, max_degree)
}

/// The polynomial of a coordinate slice before reduction: the product of
/// the weight linear forms over the slice.
pub fn slice_polynomial(strata: &Strata, s: Slice) -> GradedPoly {
    let p = &strata.p;
    let mut poly = GradedPoly::one(p.r());
    for j in s.indices() {
        poly = poly.mul(&GradedPoly::linear_form(&p.weight_col(j)));
    }
    poly
}

/// The class of V(x_S) in the ring; rejects slices that miss X.
pub fn class_of_slice(ring: &StackChowRing, strata: &Strata, s: Slice) -> Result<StackClass> {
    if !strata.slice_meets_x(s) {
        return Err(Error::ExcisedSlice(strata.p.set_names(s)));
    }
    Ok(ring.class_of(&slice_polynomial(strata, s)))
}

/// The class d * <weight, t> of a degree-d hypersurface of the given
/// base weight.
pub fn class_of_hypersurface(ring: &StackChowRing, weight: &[BigInt], d: &BigInt) -> StackClass {
    ring.class_of(&GradedPoly::linear_form(weight).scale(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::fixtures;
    use crate::strata::IdxSet;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn st_vars(p: &GradedPoly) -> String {
        p.to_string_with(&["s".into(), "t".into()])
    }

    #[test]
    fn monomial_order_grlex() {
        let ms = monomials_of_degree(&[1, 1], 2);
        assert_eq!(ms, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let ms = monomials_of_degree(&[1, 2], 3);
        // a^3 (3,0) then a*b (1,1)
        assert_eq!(ms, vec![vec![3, 0], vec![1, 1]]);
    }

    #[test]
    fn flag_ring_relations() {
        let s = fixtures::flag();
        let ring = build_ring(&s, 5).unwrap();
        let rels: Vec<String> = ring.relations.iter().map(st_vars).collect();
        assert_eq!(rels, vec!["s*t + t^2", "s^3 + s^2*t"]);
        // same ideal as (t(s+t), s^2(s+t)) written differently
        let st = GradedPoly::linear_form(&[bi(1), bi(1)]);
        let alt = StackChowRing::new(
            ring.vars.clone(),
            vec![1, 1],
            vec![
                GradedPoly::var(2, 1).mul(&st),
                GradedPoly::var(2, 0).pow(2).mul(&st),
            ],
            5,
        )
        .unwrap();
        assert!(ring.same_ideal_through(&alt, 5));
    }

    #[test]
    fn quadric_and_egs_ring_relations() {
        let q = fixtures::quadric();
        let ring = build_ring(&q, 6).unwrap();
        let rels: Vec<String> = ring.relations.iter().map(st_vars).collect();
        assert_eq!(rels, vec!["s^3 + s^2*t", "s*t^2 + t^3"]);

        let e = fixtures::egs();
        let ring = build_ring(&e, 5).unwrap();
        let stu = GradedPoly::linear_form(&[bi(1), bi(1), bi(1)]);
        let s_plus_t = GradedPoly::linear_form(&[bi(1), bi(1), bi(0)]);
        let expected = StackChowRing::new(
            ring.vars.clone(),
            vec![1, 1, 1],
            vec![
                GradedPoly::var(3, 2).mul(&stu),
                GradedPoly::var(3, 0).mul(&s_plus_t).mul(&stu),
                GradedPoly::var(3, 1).mul(&s_plus_t).mul(&stu),
            ],
            5,
        )
        .unwrap();
        assert!(ring.same_ideal_through(&expected, 5));
    }

    #[test]
    fn flag_identities() {
        let s = fixtures::flag();
        let ring = build_ring(&s, 5).unwrap();
        // (s+t)^3 = 0 with an integral certificate
        let spt = GradedPoly::linear_form(&[bi(1), bi(1)]).pow(3);
        let (zero, certs) = ring.ideal_membership(&spt, false).unwrap();
        assert!(zero);
        assert!(!certs.is_empty());
        assert!(ring.class_of(&spt).poly.is_zero());
        // [V(x1,z)] = [V(z)]^2
        let vz = class_of_slice(&ring, &s, IdxSet::from_indices(&[3])).unwrap();
        let vx1z = class_of_slice(&ring, &s, IdxSet::from_indices(&[0, 3])).unwrap();
        let sq = ring.multiply(&vz, &vz).unwrap();
        assert!(ring.classes_equal(&vx1z, &sq, false).unwrap());
        // but s+t itself is not zero in degree 1
        let d1 = ring.class_of(&GradedPoly::linear_form(&[bi(1), bi(1)]));
        assert!(!ring.is_zero_class(&d1, false).unwrap().0);
    }

    #[test]
    fn quadric_identities() {
        let q = fixtures::quadric();
        let ring = build_ring(&q, 6).unwrap();
        let alpha = ring.class_of(&GradedPoly::linear_form(&[bi(1), bi(1)]));
        let beta = class_of_slice(&ring, &q, IdxSet::from_indices(&[1, 4])).unwrap();
        let gamma = class_of_slice(&ring, &q, IdxSet::from_indices(&[0, 4])).unwrap();
        // alpha^2 = beta + gamma
        let a2 = ring.multiply(&alpha, &alpha).unwrap();
        let bg = ring.add(&beta, &gamma).unwrap();
        assert!(ring.classes_equal(&a2, &bg, false).unwrap());
        // alpha*beta = alpha*gamma
        let ab = ring.multiply(&alpha, &beta).unwrap();
        let ag = ring.multiply(&alpha, &gamma).unwrap();
        assert!(ring.classes_equal(&ab, &ag, false).unwrap());
        // beta*gamma = 0, beta^2 = 0
        let bg = ring.multiply(&beta, &gamma).unwrap();
        assert!(ring.is_zero_class(&bg, false).unwrap().0);
        let b2 = ring.multiply(&beta, &beta).unwrap();
        assert!(ring.is_zero_class(&b2, false).unwrap().0);
        // (s+t)^4 = 0 but (s+t)^3 != 0 (top strong 0-cycle survives)
        let a3 = ring.class_of(&GradedPoly::linear_form(&[bi(1), bi(1)]).pow(3));
        assert!(!ring.is_zero_class(&a3, false).unwrap().0);
        let a4 = ring.class_of(&GradedPoly::linear_form(&[bi(1), bi(1)]).pow(4));
        assert!(ring.is_zero_class(&a4, false).unwrap().0);
        // alpha*beta reduces to the class of the strong point V(x1,x2,v)
        let pt = class_of_slice(&ring, &q, IdxSet::from_indices(&[0, 1, 4])).unwrap();
        assert!(ring.classes_equal(&ab, &pt, false).unwrap());
    }

    #[test]
    fn egs_identity() {
        let e = fixtures::egs();
        let ring = build_ring(&e, 5).unwrap();
        let stu = GradedPoly::linear_form(&[bi(1), bi(1), bi(1)]).pow(3);
        let (zero, certs) = ring.ideal_membership(&stu, false).unwrap();
        assert!(zero);
        assert!(!certs.is_empty());
        // [V(w,v)] = [V(v)]^2
        let vv = class_of_slice(&ring, &e, IdxSet::from_indices(&[4])).unwrap();
        let vwv = class_of_slice(&ring, &e, IdxSet::from_indices(&[3, 4])).unwrap();
        let sq = ring.multiply(&vv, &vv).unwrap();
        assert!(ring.classes_equal(&vwv, &sq, false).unwrap());
    }

    #[test]
    fn graded_piece_structures() {
        let s = fixtures::flag();
        let ring = build_ring(&s, 5).unwrap();
        assert_eq!(ring.graded_piece(0), GroupStructure { free_rank: 1, torsion: vec![] });
        assert_eq!(ring.graded_piece(1), GroupStructure { free_rank: 2, torsion: vec![] });
        assert_eq!(ring.graded_piece(2), GroupStructure { free_rank: 2, torsion: vec![] });
    }

    #[test]
    fn no_relations_polynomial_ring() {
        let ring = StackChowRing::new(
            vec!["s".into(), "t".into()],
            vec![1, 1],
            vec![],
            4,
        )
        .unwrap();
        for k in 0..=4u32 {
            assert_eq!(ring.graded_piece(k).free_rank, (k + 1) as usize);
        }
    }

    #[test]
    fn hypersurface_class() {
        let e = fixtures::egs();
        let ring = build_ring(&e, 5).unwrap();
        let h = class_of_hypersurface(&ring, &[bi(1), bi(1), bi(1)], &bi(1));
        assert_eq!(h.poly.to_string_with(&ring.vars), "s + t + u");
        let zero = class_of_hypersurface(&ring, &[bi(0), bi(0), bi(0)], &bi(3));
        assert!(zero.poly.is_zero());
    }

    #[test]
    fn excised_slice_rejected() {
        let s = fixtures::flag();
        let ring = build_ring(&s, 5).unwrap();
        // V(x2, z) misses X in the flag example
        assert!(class_of_slice(&ring, &s, IdxSet::from_indices(&[1, 3])).is_err());
    }

    #[test]
    fn rational_mode_implied_by_integral() {
        let q = fixtures::quadric();
        let ring = build_ring(&q, 6).unwrap();
        let x = ring.class_of(&GradedPoly::linear_form(&[bi(1), bi(1)]).pow(4));
        assert!(ring.is_zero_class(&x, false).unwrap().0);
        assert!(ring.is_zero_class(&x, true).unwrap().0);
    }

    #[test]
    fn certificate_reconstructs_membership() {
        let s = fixtures::flag();
        let ring = build_ring(&s, 5).unwrap();
        let p = GradedPoly::linear_form(&[bi(1), bi(1)]).pow(3);
        let (zero, certs) = ring.ideal_membership(&p, false).unwrap();
        assert!(zero);
        // rebuild: sum of cofactor * relation must equal p
        let mut rebuilt = GradedPoly::zero();
        for (_deg, cert) in &certs {
            for (ri, cof) in &cert.combination {
                rebuilt = rebuilt.add(&cof.mul(&ring.relations[*ri]));
            }
        }
        assert_eq!(rebuilt, p);
    }
}
