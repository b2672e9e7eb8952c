//! Dense row-major matrices and vectors.
//!
//! Values are immutable once constructed: every constructor checks that the
//! dimensions are positive and every entry is finite, so downstream code can
//! rely on both without re-checking. All arithmetic returns fresh values.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Dense real matrix with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimensions must be positive".into(),
            ));
        }
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| Error::InvalidArgument("matrix dimensions overflow".into()))?;
        if entries.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                len,
                rows,
                cols,
                entries.len()
            )));
        }
        if !entries.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix by evaluating `f(i, j)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.saturating_mul(cols));
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::from_rows(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_rows(rows, cols, vec![0.0; rows * cols]).expect("zeros is always valid")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 }).expect("identity is always valid")
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i] } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.cols + j] = value;
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vector {
        let entries = (0..self.rows).map(|i| self.get(i, j)).collect();
        Vector::from_entries(entries).expect("column of a valid matrix is valid")
    }

    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidArgument("no columns given".into()));
        }
        let rows = columns[0].dim();
        if columns.iter().any(|c| c.dim() != rows) {
            return Err(Error::ShapeMismatch("columns of unequal length".into()));
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
            .expect("transpose of a valid matrix is valid")
    }

    /// Matrix-vector product.
    pub fn matvec(&self, x: &Vector) -> Result<Vector> {
        if self.cols != x.dim() {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} matrix with vector of length {}",
                self.rows,
                self.cols,
                x.dim()
            )));
        }
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            out[i] = row.iter().zip(x.entries()).map(|(a, b)| a * b).sum();
        }
        Vector::from_entries(out)
    }

    /// Matrix-matrix product.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![0.0; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                let out_row = &mut entries[i * other.cols..(i + 1) * other.cols];
                let other_row = &other.entries[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(other_row) {
                    *o += aik * b;
                }
            }
        }
        DenseMatrix::from_rows(self.rows, other.cols, entries)
    }

    /// Returns A - shift*I.
    pub fn shift_diagonal(&self, shift: f64) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("shift of a non-square matrix".into()));
        }
        Self::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                self.get(i, j) - shift
            } else {
                self.get(i, j)
            }
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Frobenius norm of the strictly off-diagonal part.
    pub fn off_diagonal_frobenius(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    let x = self.get(i, j);
                    sum += x * x;
                }
            }
        }
        sum.sqrt()
    }

    /// Frobenius norm of the strictly lower-triangular part.
    pub fn lower_triangle_frobenius(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..i.min(self.cols) {
                let x = self.get(i, j);
                sum += x * x;
            }
        }
        sum.sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise absolute difference against `other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "max_abs_diff on mismatched shapes"
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Largest |a_ij - a_ji|; zero iff the matrix is exactly symmetric.
    pub fn symmetry_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Symmetry check at the solver gate tolerance: max|A - A^T| <= 1e-12 * max|A|.
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.symmetry_defect() <= 1e-12 * self.max_abs()
    }

    /// Deviation of Q^T Q from the identity, as a max-abs entry.
    pub fn orthogonality_defect(&self) -> f64 {
        let qtq = self
            .transpose()
            .matmul(self)
            .expect("square product of a valid matrix");
        qtq.max_abs_diff(&DenseMatrix::identity(self.cols))
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.cols + j]
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>12.5e}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dense real vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    entries: Vec<f64>,
}

impl Vector {
    pub fn from_entries(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument(
                "vector dimension must be positive".into(),
            ));
        }
        if !entries.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("vector entries"));
        }
        Ok(Self { entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![0.0; dim],
        }
    }

    /// Standard basis vector e_i.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = 1.0;
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dot on mismatched lengths");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Euclidean norm.
    pub fn norm2(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, c: f64) -> Vector {
        Vector {
            entries: self.entries.iter().map(|x| c * x).collect(),
        }
    }

    /// self - other.
    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "sub on mismatched lengths");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "add on mismatched lengths");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|x| x.is_finite())
    }

    /// Unit vector in the same direction; errors on the zero vector.
    pub fn normalized(&self) -> Result<Vector> {
        let n = self.norm2();
        if n == 0.0 {
            return Err(Error::InvalidArgument(
                "cannot normalize the zero vector".into(),
            ));
        }
        if !n.is_finite() {
            return Err(Error::NonFinite("vector norm"));
        }
        Ok(self.scale(1.0 / n))
    }

    /// Flips the sign so the first nonzero component is positive.
    pub fn canonicalized(&self) -> Vector {
        match self.entries.iter().find(|x| **x != 0.0) {
            Some(x) if *x < 0.0 => self.scale(-1.0),
            _ => self.clone(),
        }
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.entries[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, entries: &[f64]) -> DenseMatrix {
        DenseMatrix::from_rows(rows, cols, entries.to_vec()).unwrap()
    }

    fn vec2(entries: &[f64]) -> Vector {
        Vector::from_entries(entries.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            DenseMatrix::from_rows(2, 2, vec![1.0, 2.0, 3.0]),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            DenseMatrix::from_rows(2, 2, vec![1.0, f64::NAN, 0.0, 1.0]),
            Err(Error::NonFinite(_))
        ));
        assert!(matches!(
            DenseMatrix::from_rows(0, 3, vec![]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            Vector::from_entries(vec![1.0, f64::INFINITY]),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn matvec_identity_and_zero() {
        let id = DenseMatrix::identity(3);
        let x = vec2(&[1.0, 2.0, 3.0]);
        assert_eq!(id.matvec(&x).unwrap(), x);

        let z = DenseMatrix::zeros(3, 3);
        assert_eq!(z.matvec(&x).unwrap(), Vector::zeros(3));
    }

    #[test]
    fn matvec_column_extraction() {
        let a = mat(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let e1 = vec2(&[1.0, 0.0]);
        assert_eq!(a.matvec(&e1).unwrap(), vec2(&[2.0, 1.0]));
    }

    #[test]
    fn matvec_dimension_mismatch() {
        let a = DenseMatrix::identity(3);
        let x = vec2(&[1.0, 2.0]);
        assert!(matches!(a.matvec(&x), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn matmul_identity_diagonal_involution() {
        let a = mat(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(a.matmul(&DenseMatrix::identity(2)).unwrap(), a);

        let d1 = DenseMatrix::diagonal(&[2.0, 3.0]).unwrap();
        let d2 = DenseMatrix::diagonal(&[5.0, 7.0]).unwrap();
        assert_eq!(
            d1.matmul(&d2).unwrap(),
            DenseMatrix::diagonal(&[10.0, 21.0]).unwrap()
        );

        let swap = mat(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert_eq!(swap.matmul(&swap).unwrap(), DenseMatrix::identity(2));
    }

    #[test]
    fn norm2_examples() {
        assert_eq!(vec2(&[3.0, 4.0]).norm2(), 5.0);
        assert_eq!(Vector::zeros(3).norm2(), 0.0);
        assert_eq!(vec2(&[1.0, 1.0, 1.0, 1.0]).norm2(), 2.0);
    }

    #[test]
    fn canonical_sign_flips_on_first_nonzero() {
        let v = vec2(&[0.0, -2.0, 1.0]);
        assert_eq!(v.canonicalized(), vec2(&[0.0, 2.0, -1.0]));
        let w = vec2(&[0.5, -1.0]);
        assert_eq!(w.canonicalized(), w);
    }

    #[test]
    fn symmetry_defect_and_gate() {
        let a = mat(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        assert_eq!(a.symmetry_defect(), 0.0);
        assert!(a.is_symmetric());
        let b = mat(2, 2, &[2.0, 1.0, 1.5, 2.0]);
        assert_eq!(b.symmetry_defect(), 0.5);
        assert!(!b.is_symmetric());
    }

    #[test]
    fn off_diagonal_mass() {
        let a = mat(2, 2, &[1.0, 3.0, 4.0, 1.0]);
        assert_eq!(a.off_diagonal_frobenius(), 5.0);
        assert_eq!(a.lower_triangle_frobenius(), 4.0);
        assert_eq!(DenseMatrix::diagonal(&[3.0, 9.0]).unwrap().off_diagonal_frobenius(), 0.0);
    }

    #[test]
    fn values_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<DenseMatrix>();
        check::<Vector>();
    }
}
