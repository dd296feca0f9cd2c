use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged integer matrix");
            data.extend(row);
        }
        IntegerMatrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            BigInt::one()
        } else {
            sign * &a[n - 1][n - 1]
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = q * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] -= t;
        }
    }

    /// `col[dst] -= q * col[src]`
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = q * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())).finish()
    }
}

/// Row Hermite normal form. Returns `(H, U)` with `U` unimodular and
/// `U·A = H`; pivots are positive and entries above a pivot lie in
/// `[0, pivot)`. Zero rows come last.
pub fn hnf(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let (h, u, _) = hnf_with_pivots(a);
    (h, u)
}

fn hnf_with_pivots(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, Vec<usize>) {
    let m = a.rows;
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == m {
            break;
        }
        loop {
            let Some(p) = (r..m).filter(|&i| !h.get(i, c).is_zero()).min_by_key(|&i| h.get(i, c).abs()) else {
                break;
            };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut done = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c) / h.get(r, c);
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    (h, u, pivots)
}

/// Smith normal form. Returns `(D, U, V)` with `U`, `V` unimodular,
/// `U·A·V = D` diagonal, nonnegative, and `d₁ | d₂ | …`.
pub fn snf(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (d, u, v);
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..m {
                let q = d.get(i, t) / d.get(t, t);
                d.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let q = d.get(t, j) / d.get(t, t);
                d.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    // row t += row i brings a non-multiple into row t
                    let minus_one = -BigInt::one();
                    d.sub_row(t, i, &minus_one);
                    u.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

/// Some integral `x` with `A·x = b`, or `None`.
///
/// Uses the column Hermite form `A·W = Hᵀ` (from the row form of `Aᵀ`),
/// solves the echelon system by forward substitution with free coordinates
/// set to zero and maps back through `W`.
pub fn integer_solve(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len(), "right-hand side length mismatch");
    let (h, u, pivots) = hnf_with_pivots(&a.transpose());
    // Uᵀ is W; the system is Hᵀ·y = b with Hᵀ lower echelon: row r of H has its
    // pivot in column pivots[r], so equation pivots[r] determines y_r.
    let mut y = vec![BigInt::zero(); a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        let partial: BigInt = (0..r).map(|k| h.get(k, pc) * &y[k]).sum();
        let rest = &b[pc] - partial;
        let (q, rem) = rest.div_rem(h.get(r, pc));
        if !rem.is_zero() {
            return None;
        }
        y[r] = q;
    }
    // every equation must hold, including those without a pivot
    let ht = h.transpose();
    if ht.mul_vec(&y) != b {
        return None;
    }
    Some(u.transpose().mul_vec(&y))
}

/// Basis of the integer kernel `{x ∈ Zᶜ : A·x = 0}` in row Hermite form.
pub fn integer_kernel(a: &IntegerMatrix) -> IntegerMatrix {
    let (_, u, pivots) = hnf_with_pivots(&a.transpose());
    let rows: Vec<Vec<BigInt>> = (pivots.len()..a.cols).map(|i| u.row(i).to_vec()).collect();
    let k = IntegerMatrix::from_rows(a.cols, rows);
    hnf(&k).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_hnf(h: &IntegerMatrix) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let lead = (0..h.cols()).find(|&j| !h.get(i, j).is_zero());
            match lead {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.is_some_and(|l| c <= l) || !h.get(i, c).is_positive() {
                        return false;
                    }
                    for k in 0..i {
                        let x = h.get(k, c);
                        if x.is_negative() || x >= h.get(i, c) {
                            return false;
                        }
                    }
                    for k in i + 1..h.rows() {
                        if !h.get(k, c).is_zero() {
                            return false;
                        }
                    }
                    last = Some(c);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_small_cases() {
        let (h, u) = hnf(&IntegerMatrix::identity(3));
        assert_eq!(h, IntegerMatrix::identity(3));
        assert_eq!(u, IntegerMatrix::identity(3));

        let a = IntegerMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let (h, u) = hnf(&a);
        assert_eq!(h, IntegerMatrix::from_i64(&[&[2, 0], &[0, 4]]));
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.determinant().abs(), BigInt::one());

        let z = IntegerMatrix::from_i64(&[&[0, 0]]);
        assert_eq!(hnf(&z).0, z);
    }

    #[test]
    fn hnf_shape_rejects_bad_forms() {
        assert!(!is_hnf(&IntegerMatrix::from_i64(&[&[2, 3], &[0, 2]])));
        assert!(!is_hnf(&IntegerMatrix::from_i64(&[&[-1, 0]])));
        assert!(is_hnf(&IntegerMatrix::from_i64(&[&[1, 1], &[0, 2], &[0, 0]])));
    }

    #[test]
    fn snf_small_cases() {
        let a = IntegerMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let (d, u, v) = snf(&a);
        assert_eq!(d, IntegerMatrix::from_i64(&[&[2, 0], &[0, 4]]));
        assert_eq!(u.mul(&a).mul(&v), d);
        assert_eq!(snf(&IntegerMatrix::identity(2)).0, IntegerMatrix::identity(2));
        let n = IntegerMatrix::from_i64(&[&[-7]]);
        assert_eq!(snf(&n).0, IntegerMatrix::from_i64(&[&[7]]));
    }

    #[test]
    fn integer_solve_small_cases() {
        let a = IntegerMatrix::from_i64(&[&[2]]);
        assert_eq!(integer_solve(&a, &[BigInt::from(4)]), Some(vec![BigInt::from(2)]));
        assert_eq!(integer_solve(&a, &[BigInt::from(3)]), None);
        let a = IntegerMatrix::from_i64(&[&[1, 0], &[2, 2]]);
        let b = [BigInt::from(3), BigInt::from(10)];
        let x = integer_solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert_eq!(integer_solve(&a, &[BigInt::from(3), BigInt::from(7)]), None);
        // inconsistent over Q
        let a = IntegerMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(integer_solve(&a, &[BigInt::from(1), BigInt::from(2)]), None);
    }

    #[test]
    fn kernel_of_balanced_row() {
        let k = integer_kernel(&IntegerMatrix::from_i64(&[&[1, 1, 1]]));
        assert_eq!(k.rows(), 2);
        assert!(is_hnf(&k));
        let a = IntegerMatrix::from_i64(&[&[1, 1, 1]]);
        assert!(a.mul(&k.transpose()).to_rows().iter().flatten().all(Zero::is_zero));
        // the kernel lattice contains (1,-1,0) and (0,1,-1) integrally
        for v in [[1, -1, 0], [0, 1, -1]] {
            let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            assert!(integer_solve(&k.transpose(), &v).is_some());
        }
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(IntegerMatrix::from_i64(&[&[2, 1], &[7, 4]]).determinant(), BigInt::one());
        assert_eq!(IntegerMatrix::from_i64(&[&[0, 1], &[1, 0]]).determinant(), -BigInt::one());
        assert_eq!(IntegerMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).determinant(), BigInt::from(-3));
    }

    pub(crate) fn check_hnf(a: &IntegerMatrix) {
        let (h, u) = hnf(a);
        assert_eq!(u.mul(a), h);
        assert!(is_hnf(&h), "{h:?}");
        assert_eq!(u.determinant().abs(), BigInt::one());
    }

    #[test]
    fn hnf_random_shapes() {
        check_hnf(&IntegerMatrix::from_i64(&[&[0, 3, 6], &[0, 5, 1], &[0, 0, 0], &[4, -2, 2]]));
        check_hnf(&IntegerMatrix::from_i64(&[&[-6, 4], &[9, -6], &[3, -2]]));
    }
}
