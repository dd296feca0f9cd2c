use std::fmt;

use crate::arith::{FieldElement, RealAlgebraicField};

use super::LinalgError;

/// Dense matrix over a real algebraic field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: RealAlgebraicField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn zeros(field: &RealAlgebraicField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field: field.clone(), rows, cols, data: vec![FieldElement::zero(field); rows * cols] }
    }

    pub fn identity(field: &RealAlgebraicField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::one(field));
        }
        m
    }

    /// Builds a matrix from rows. All rows must have `cols` entries, all in
    /// `field`.
    pub fn from_rows(field: &RealAlgebraicField, cols: usize, rows: &[Vec<FieldElement>]) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            for x in row {
                if x.field() != field {
                    return Err(LinalgError::MixedFields);
                }
                data.push(x.clone());
            }
        }
        Ok(FieldMatrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors of length `dim`.
    pub fn from_columns(field: &RealAlgebraicField, dim: usize, columns: &[Vec<FieldElement>]) -> Result<Self, LinalgError> {
        Ok(Self::from_rows(field, dim, columns)?.transpose())
    }

    pub fn field(&self) -> &RealAlgebraicField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        FieldMatrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(&self.field, self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols, None);
        let m = FieldMatrix::from_rows(&self.field, self.cols, &rows).unwrap();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis in reduced form: one vector per free column, with a 1 in
    /// that column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    pub fn determinant(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut rows = self.to_rows();
        let n = self.rows;
        let mut det = FieldElement::one(&self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return FieldElement::zero(&self.field);
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pivot = rows[c][c].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if rows[i][c].is_zero() {
                    continue;
                }
                let f = &rows[i][c] * &inv;
                for j in c..n {
                    let v = &rows[i][j] - &(&f * &rows[c][j]);
                    rows[i][j] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FieldMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut companion = FieldMatrix::identity(&self.field, n).to_rows();
        let pivots = rref_in_place(&mut rows, n, Some(&mut companion));
        (pivots.len() == n).then(|| FieldMatrix::from_rows(&self.field, n, &companion).unwrap())
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

pub fn dot(field: &RealAlgebraicField, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::zero(field), |acc, (x, y)| &acc + &(x * y))
}

/// Gauss–Jordan elimination restricted to the first `cols` columns. Row
/// operations are mirrored on `companion` when given. Returns pivot columns.
pub(crate) fn rref_in_place(
    rows: &mut [Vec<FieldElement>],
    cols: usize,
    mut companion: Option<&mut Vec<Vec<FieldElement>>>,
) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        if let Some(comp) = companion.as_deref_mut() {
            comp.swap(p, r);
        }
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        if let Some(comp) = companion.as_deref_mut() {
            for x in comp[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        for i in 0..m {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
            if let Some(comp) = companion.as_deref_mut() {
                let pivot_row = comp[r].clone();
                for (x, y) in comp[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(r: &FieldMatrix, pivots: &[usize]) -> Vec<Vec<FieldElement>> {
    let field = r.field();
    (0..r.cols())
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![FieldElement::zero(field); r.cols()];
            v[free] = FieldElement::one(field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            v
        })
        .collect()
}

/// Result of [`rank_kernel_solve`].
#[derive(Clone, Debug)]
pub struct LinearSolve {
    pub rank: usize,
    pub kernel_basis: Vec<Vec<FieldElement>>,
    /// A particular solution of `A·x = b` (free variables set to zero).
    pub solution: Option<Vec<FieldElement>>,
    /// When `b` was given and the system is inconsistent: a vector `y` with
    /// `yᵀ·A = 0` and `yᵀ·b ≠ 0`.
    pub certificate: Option<Vec<FieldElement>>,
}

/// Rank, reduced kernel basis and, when `b` is given, a solution of `A·x = b`
/// or a certificate of inconsistency.
pub fn rank_kernel_solve(a: &FieldMatrix, b: Option<&[FieldElement]>) -> LinearSolve {
    let field = a.field();
    let (r, pivots) = a.rref();
    let kernel_basis = kernel_from_rref(&r, &pivots);
    let rank = pivots.len();
    let Some(b) = b else {
        return LinearSolve { rank, kernel_basis, solution: None, certificate: None };
    };
    assert_eq!(b.len(), a.rows(), "right-hand side length mismatch");
    let mut rows: Vec<Vec<FieldElement>> =
        (0..a.rows()).map(|i| a.row(i).iter().cloned().chain([b[i].clone()]).collect()).collect();
    let mut tracker = FieldMatrix::identity(field, a.rows()).to_rows();
    let pivots = rref_in_place(&mut rows, a.cols(), Some(&mut tracker));
    if let Some(i) = (pivots.len()..a.rows()).find(|&i| !rows[i][a.cols()].is_zero()) {
        return LinearSolve { rank, kernel_basis, solution: None, certificate: Some(tracker[i].clone()) };
    }
    let mut x = vec![FieldElement::zero(field); a.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[row][a.cols()].clone();
    }
    LinearSolve { rank, kernel_basis, solution: Some(x), certificate: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};

    fn q() -> RealAlgebraicField {
        RealAlgebraicField::rationals()
    }

    fn mat(rows: &[&[i64]]) -> FieldMatrix {
        let f = q();
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<FieldElement>> =
            rows.iter().map(|r| r.iter().map(|&x| FieldElement::from_int(&f, x)).collect()).collect();
        FieldMatrix::from_rows(&f, cols, &rows).unwrap()
    }

    fn ints(v: &[FieldElement]) -> Vec<Rational> {
        v.iter().map(|x| x.to_rational().unwrap()).collect()
    }

    #[test]
    fn identity_has_full_rank() {
        let s = rank_kernel_solve(&FieldMatrix::identity(&q(), 3), None);
        assert_eq!(s.rank, 3);
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn balanced_row_kernel() {
        let s = rank_kernel_solve(&mat(&[&[1, 1, 1]]), None);
        assert_eq!(s.rank, 1);
        let k: Vec<_> = s.kernel_basis.iter().map(|v| ints(v)).collect();
        assert_eq!(k, vec![vec![int(-1), int(1), int(0)], vec![int(-1), int(0), int(1)]]);
    }

    #[test]
    fn consistent_and_inconsistent_solves() {
        let a = mat(&[&[1, 2], &[2, 4]]);
        let f = q();
        let b: Vec<_> = [3, 6].iter().map(|&x| FieldElement::from_int(&f, x)).collect();
        let s = rank_kernel_solve(&a, Some(&b));
        assert_eq!(a.mul_vec(s.solution.as_ref().unwrap()), b);
        let b: Vec<_> = [3, 7].iter().map(|&x| FieldElement::from_int(&f, x)).collect();
        let s = rank_kernel_solve(&a, Some(&b));
        assert!(s.solution.is_none());
        let y = s.certificate.unwrap();
        let ya = a.transpose().mul_vec(&y);
        assert!(ya.iter().all(FieldElement::is_zero));
        assert!(!dot(&f, &y, &b).is_zero());
    }

    #[test]
    fn determinant_and_inverse() {
        let a = mat(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant().to_rational().unwrap(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FieldMatrix::identity(&q(), 2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(mat(&[&[1, 2], &[2, 4]]).determinant().is_zero());
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant().to_rational().unwrap(), int(-1));
    }

    #[test]
    fn rank_plus_nullity() {
        let a = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let s = rank_kernel_solve(&a, None);
        assert_eq!(s.rank + s.kernel_basis.len(), 4);
        for v in &s.kernel_basis {
            assert!(a.mul_vec(v).iter().all(FieldElement::is_zero));
        }
    }
}
