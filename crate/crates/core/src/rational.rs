//! Exact rational linear algebra: canonical Gaussian solves and a small
//! phase-1 simplex used for cone membership / feasibility questions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_of(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn rats_of(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(rat_of).collect()
}

/// Least common multiple of the denominators of a rational vector.
pub fn common_denominator(v: &[Rat]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::one(), |acc, x| {
        let d = x.denom();
        &acc / acc.gcd(d) * d
    })
}

/// Canonical particular solution of `a x = b` over the rationals, or
/// `None` when inconsistent. Free variables are pinned to zero and the
/// elimination order is deterministic, so repeated runs agree.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        let scale = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= scale.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Some(x)
}

pub fn rank(a: &[Vec<Rat>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.to_vec();
    let mut r = 0usize;
    for c in 0..cols {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Basis of the rational kernel of `a`, canonical (free variable = 1 one
/// at a time, reverse elimination).
pub fn kernel(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(r, piv);
        let scale = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= scale.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                v[c] = -m[pr][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// A feasibility problem: `lhs x = rhs` with per-variable lower bounds
/// (`None` means the variable is free).
pub struct Feasibility {
    pub lhs: Vec<Vec<Rat>>,
    pub rhs: Vec<Rat>,
    pub lower: Vec<Option<Rat>>,
}

impl Feasibility {
    /// Exact phase-1 simplex with Bland's rule. Returns whether the
    /// system admits a solution.
    pub fn feasible(&self) -> bool {
        let nvars = self.lower.len();
        let rows = self.lhs.len();
        assert_eq!(self.rhs.len(), rows);

        // Shift bounded variables to y >= 0; split free variables.
        // Column layout: one column per bounded variable, two (plus,
        // minus) per free variable.
        let mut col_map: Vec<Vec<(usize, Rat)>> = Vec::new(); // columns as (orig var, sign)
        for (v, lb) in self.lower.iter().enumerate() {
            match lb {
                Some(_) => col_map.push(vec![(v, Rat::one())]),
                None => {
                    col_map.push(vec![(v, Rat::one())]);
                    col_map.push(vec![(v, -Rat::one())]);
                }
            }
        }
        let ncols = col_map.len();
        let mut a: Vec<Vec<Rat>> = vec![vec![Rat::zero(); ncols]; rows];
        let mut b: Vec<Rat> = self.rhs.clone();
        for i in 0..rows {
            assert_eq!(self.lhs[i].len(), nvars);
            for (j, parts) in col_map.iter().enumerate() {
                for (v, sign) in parts {
                    let t = &self.lhs[i][*v] * sign;
                    a[i][j] += t;
                }
            }
            for (v, lb) in self.lower.iter().enumerate() {
                if let Some(lb) = lb {
                    let t = &self.lhs[i][v] * lb;
                    b[i] -= t;
                }
            }
        }
        for i in 0..rows {
            if b[i].is_negative() {
                for x in a[i].iter_mut() {
                    *x = -x.clone();
                }
                b[i] = -b[i].clone();
            }
        }

        // Tableau: [a | I | b], basis = artificials, minimize sum of
        // artificials.
        let total = ncols + rows;
        let mut t: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut row = a[i].clone();
            for k in 0..rows {
                row.push(if k == i { Rat::one() } else { Rat::zero() });
            }
            row.push(b[i].clone());
            t.push(row);
        }
        let mut basis: Vec<usize> = (ncols..total).collect();
        let cost = |j: usize| -> Rat {
            if j >= ncols {
                Rat::one()
            } else {
                Rat::zero()
            }
        };

        loop {
            // reduced costs with Bland's rule
            let mut entering = None;
            for j in 0..total {
                if basis.contains(&j) {
                    continue;
                }
                let mut red = cost(j);
                for (i, &bi) in basis.iter().enumerate() {
                    let t_ij = &t[i][j];
                    if !t_ij.is_zero() {
                        red -= cost(bi) * t_ij;
                    }
                }
                if red.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(e) = entering else { break };
            // ratio test, Bland tie-break on basis variable index
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..rows {
                if t[i][e].is_positive() {
                    let ratio = &t[i][total] / &t[i][e];
                    let better = match &leaving {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            let Some((l, _)) = leaving else {
                // unbounded phase-1 objective cannot happen (bounded below by 0)
                unreachable!("phase-1 simplex unbounded");
            };
            // pivot on (l, e)
            let scale = t[l][e].clone();
            for x in t[l].iter_mut() {
                *x /= scale.clone();
            }
            for i in 0..rows {
                if i != l && !t[i][e].is_zero() {
                    let f = t[i][e].clone();
                    for j in 0..=total {
                        let u = &f * &t[l][j];
                        t[i][j] -= u;
                    }
                }
            }
            basis[l] = e;
        }

        let objective: Rat = basis
            .iter()
            .enumerate()
            .map(|(i, &bi)| cost(bi) * &t[i][total])
            .sum();
        objective.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_unique() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(3), rat(1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        let b = vec![rat(1), rat(3)];
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn feasibility_quadrant() {
        // x + y = 2, x,y >= 0 : feasible
        let f = Feasibility {
            lhs: vec![vec![rat(1), rat(1)]],
            rhs: vec![rat(2)],
            lower: vec![Some(rat(0)), Some(rat(0))],
        };
        assert!(f.feasible());
        // x + y = -1, x,y >= 0 : infeasible
        let f = Feasibility {
            lhs: vec![vec![rat(1), rat(1)]],
            rhs: vec![rat(-1)],
            lower: vec![Some(rat(0)), Some(rat(0))],
        };
        assert!(!f.feasible());
    }

    #[test]
    fn feasibility_free_variable() {
        // x free, y >= 1: x - y = -5 feasible
        let f = Feasibility {
            lhs: vec![vec![rat(1), rat(-1)]],
            rhs: vec![rat(-5)],
            lower: vec![None, Some(rat(1))],
        };
        assert!(f.feasible());
    }

    #[test]
    fn kernel_dimension() {
        let a = vec![vec![rat(1), rat(1), rat(0)]];
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: Rat = v.iter().cloned().sum::<Rat>() - v[2].clone();
            let _ = s;
            assert!((v[0].clone() + v[1].clone()).is_zero());
        }
    }
}
