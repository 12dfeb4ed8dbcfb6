//! Dense matrices over the unbounded integers, with the normal forms the
//! rest of the crate is built on: Smith normal form with full transform
//! tracking and a column-style Hermite echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-major dense integer matrix. Entries are arbitrary-precision; all
/// intermediate growth in the normal-form algorithms is exact.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row in matrix literal");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row in matrix literal");
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ambient: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = IntMatrix::zero(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient, "column length mismatch");
            for i in 0..ambient {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Submatrix keeping the listed columns, in order.
    pub fn select_columns(&self, keep: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rows, keep.len());
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += t;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// row_i += f * row_k
    fn add_row_multiple(&mut self, i: usize, k: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = f * &self[(k, j)];
            self[(i, j)] += t;
        }
    }

    /// col_j += f * col_k
    fn add_col_multiple(&mut self, j: usize, k: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = f * &self[(i, k)];
            self[(i, j)] += t;
        }
    }

    /// Fraction-free Bareiss determinant. Square matrices only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[(i, k)].is_zero());
                match swap {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num.checked_div(&prev).expect("bareiss exact division");
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `p * a * q = d` with unimodular `p`, `q` and their
/// inverses tracked alongside. The diagonal is nonnegative and satisfies
/// the divisibility chain d1 | d2 | ... .
pub struct SmithForm {
    pub d: IntMatrix,
    pub p: IntMatrix,
    pub p_inv: IntMatrix,
    pub q: IntMatrix,
    pub q_inv: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Nontrivial invariant factors (> 1), in divisibility order.
    pub fn torsion(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut p = IntMatrix::identity(rows);
    let mut p_inv = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);
    let mut q_inv = IntMatrix::identity(cols);

    // Elementary operations, mirrored on the transforms. Row ops act on
    // the left (p), column ops on the right (q).
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            d.swap_rows($i, $j);
            p.swap_rows($i, $j);
            p_inv.swap_cols($i, $j);
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            d.swap_cols($i, $j);
            q.swap_cols($i, $j);
            q_inv.swap_rows($i, $j);
        }};
    }
    macro_rules! row_add {
        ($i:expr, $k:expr, $f:expr) => {{
            let f: BigInt = $f;
            d.add_row_multiple($i, $k, &f);
            p.add_row_multiple($i, $k, &f);
            p_inv.add_col_multiple($k, $i, &(-f));
        }};
    }
    macro_rules! col_add {
        ($j:expr, $k:expr, $f:expr) => {{
            let f: BigInt = $f;
            d.add_col_multiple($j, $k, &f);
            q.add_col_multiple($j, $k, &f);
            q_inv.add_row_multiple($k, $j, &(-f));
        }};
    }

    let n = rows.min(cols);
    for k in 0..n {
        'pivot: loop {
            // Locate a pivot: smallest nonzero absolute value in the
            // trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => d[(i, j)].abs() < d[(pi, pj)].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'pivot };
            row_swap!(k, pi);
            col_swap!(k, pj);
            if d[(k, k)].is_negative() {
                d.negate_row(k);
                p.negate_row(k);
                p_inv.negate_col(k);
            }

            let mut dirty = false;
            for i in k + 1..rows {
                if !d[(i, k)].is_zero() {
                    let f = -(&d[(i, k)] / &d[(k, k)]);
                    row_add!(i, k, f);
                    if !d[(i, k)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !d[(k, j)].is_zero() {
                    let f = -(&d[(k, j)] / &d[(k, k)]);
                    col_add!(j, k, f);
                    if !d[(k, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Row and column k are clear. Enforce divisibility of the
            // remaining block by the pivot.
            let mut violation = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&d[(i, j)] % &d[(k, k)]).is_zero() {
                        violation = Some(i);
                        break 'scan;
                    }
                }
            }
            match violation {
                Some(i) => {
                    row_add!(k, i, BigInt::one());
                    continue 'pivot;
                }
                None => break 'pivot,
            }
        }
    }

    SmithForm { d, p, p_inv, q, q_inv }
}

/// Basis (as columns) of the saturated integer kernel of `a`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let keep: Vec<usize> = (rank..a.cols()).collect();
    snf.q.select_columns(&keep)
}

/// Column-style Hermite echelon form of the column span. `h` holds the
/// echelon basis (pivot rows strictly increasing, pivots positive,
/// entries left of a pivot reduced into [0, pivot)), and `g * u = [h | 0]`
/// with `u` unimodular.
pub struct ColumnHermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

pub fn column_hermite(g: &IntMatrix) -> ColumnHermite {
    let n = g.rows();
    let m = g.cols();
    let mut a = g.clone();
    let mut u = IntMatrix::identity(m);
    let mut next = 0usize;
    let mut pivot_rows = Vec::new();

    for row in 0..n {
        if next == m {
            break;
        }
        // gcd-reduce the entries of this row across columns next..m
        loop {
            let mut best: Option<usize> = None;
            for j in next..m {
                if a[(row, j)].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => a[(row, j)].abs() < a[(row, b)].abs(),
                };
                if better {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            a.swap_cols(next, b);
            u.swap_cols(next, b);
            let mut any = false;
            for j in next + 1..m {
                if a[(row, j)].is_zero() {
                    continue;
                }
                let f = -(&a[(row, j)] / &a[(row, next)]);
                a.add_col_multiple(j, next, &f);
                u.add_col_multiple(j, next, &f);
                if !a[(row, j)].is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if a[(row, next)].is_zero() {
            continue;
        }
        if a[(row, next)].is_negative() {
            a.negate_col(next);
            u.negate_col(next);
        }
        // normalize earlier columns at this row into [0, pivot)
        let pivot = a[(row, next)].clone();
        for j in 0..next {
            let f = -a[(row, j)].div_floor(&pivot);
            a.add_col_multiple(j, next, &f);
            u.add_col_multiple(j, next, &f);
        }
        pivot_rows.push(row);
        next += 1;
    }

    let keep: Vec<usize> = (0..next).collect();
    ColumnHermite { h: a.select_columns(&keep), u, pivot_rows }
}

/// gcd of a slice, nonnegative; 0 for the empty/zero slice.
pub fn vec_gcd(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divide a vector by the gcd of its entries (no-op on the zero vector).
pub fn primitive_vector(v: &[BigInt]) -> Vec<BigInt> {
    let g = vec_gcd(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

trait CheckedDivExact {
    fn checked_div(&self, d: &BigInt) -> Option<BigInt>;
}

impl CheckedDivExact for BigInt {
    fn checked_div(&self, d: &BigInt) -> Option<BigInt> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(a: &IntMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(s.p.mul(a).mul(&s.q), s.d, "reconstruction failed");
        assert_eq!(s.p.mul(&s.p_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.q.mul(&s.q_inv), IntMatrix::identity(a.cols()));
        assert!(s.p.det().abs().is_one());
        assert!(s.q.det().abs().is_one());
        let n = a.rows().min(a.cols());
        for i in 0..n {
            assert!(!s.d[(i, i)].is_negative());
            for j in 0..a.cols() {
                if i != j && j < n {
                    continue;
                }
            }
            if i + 1 < n && !s.d[(i + 1, i + 1)].is_zero() {
                assert!(
                    (&s.d[(i + 1, i + 1)] % &s.d[(i, i)]).is_zero() || s.d[(i, i)].is_zero(),
                    "divisibility chain broken"
                );
            }
        }
        // off-diagonal zero
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, IntMatrix::identity(2));
        check_snf(&a);
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![1, 0], vec![0, 6]]));
        check_snf(&a);
    }

    #[test]
    fn snf_quadric_slice_weights() {
        // weights of x2, x3, x4 in the quadric example; trivial cokernel
        let a = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 1]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.rank(), 2);
        assert!(s.torsion().is_empty());
        check_snf(&a);
    }

    #[test]
    fn hermite_reduction_shape() {
        let g = IntMatrix::from_rows(&[vec![2, 4, 1], vec![0, 2, 0]]);
        let ch = column_hermite(&g);
        assert_eq!(ch.pivot_rows, vec![0, 1]);
        // g * u agrees with [h | 0]
        let gu = g.mul(&ch.u);
        for j in 0..ch.h.cols() {
            for i in 0..g.rows() {
                assert_eq!(gu[(i, j)], ch.h[(i, j)]);
            }
        }
        for j in ch.h.cols()..g.cols() {
            for i in 0..g.rows() {
                assert!(gu[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn kernel_of_flag_weights() {
        let w = IntMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 0, 1]]);
        let k = kernel_basis(&w);
        assert_eq!(k.cols(), 2);
        assert!(w.mul(&k).is_zero());
    }

    #[test]
    fn bareiss_det() {
        let a = IntMatrix::from_rows(&[vec![2, 3, 1], vec![0, 1, -1], vec![4, 0, 2]]);
        assert_eq!(a.det(), BigInt::from(2 * (1 * 2 - (-1) * 0) - 3 * (0 - (-4)) + (0 - 4)));
    }
}
