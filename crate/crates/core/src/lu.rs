//! Pivoted LU factorization, triangular solves, and determinants.
//!
//! Backs the inverse-iteration family: factor once, then solve repeatedly
//! against fresh right-hand sides.

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, Vector};
use crate::qr::rank_drop_tolerance;

/// Packed LU factors of a row-permuted square matrix.
///
/// `factored` stores the unit-lower-triangular multipliers below the diagonal
/// and U on and above it; `pivots[k]` is the row swapped into position k at
/// elimination step k.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveFactorization {
    factored: DenseMatrix,
    pivots: Vec<usize>,
    min_pivot: f64,
    swaps_odd: bool,
}

impl SolveFactorization {
    pub fn dim(&self) -> usize {
        self.factored.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Magnitude of the smallest pivot encountered.
    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    /// Determinant of the factored matrix: product of the pivots times the
    /// sign of the row permutation.
    pub fn det(&self) -> f64 {
        let diag: f64 = (0..self.dim()).map(|i| self.factored.get(i, i)).product();
        if self.swaps_odd {
            -diag
        } else {
            diag
        }
    }

    /// Rebuilds the original matrix from the packed factors, undoing the
    /// row permutation. Agrees with the input entrywise within
    /// `1e-10 * max|A|`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.dim();
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![0.0; n];
            for j in 0..n {
                // (L*U)[i][j] with unit diagonal on L.
                let upto = i.min(j);
                let mut sum = 0.0;
                for k in 0..upto {
                    sum += self.factored.get(i, k) * self.factored.get(k, j);
                }
                if i <= j {
                    sum += self.factored.get(i, j);
                }
                row[j] = sum;
            }
            rows.push(row);
        }
        // Undo the recorded swaps in reverse order.
        for k in (0..n).rev() {
            rows.swap(k, self.pivots[k]);
        }
        DenseMatrix::from_rows(n, n, rows.into_iter().flatten().collect())
            .expect("reconstruction of a valid factorization")
    }

    /// Solves A x = b using the packed factors.
    pub fn solve(&self, b: &Vector) -> Result<Vector> {
        let n = self.dim();
        if b.dim() != n {
            return Err(Error::ShapeMismatch(format!(
                "factorization is {}x{} but right-hand side has length {}",
                n,
                n,
                b.dim()
            )));
        }
        let mut x: Vec<f64> = b.entries().to_vec();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
        }
        // Forward substitution with unit-diagonal L.
        for i in 1..n {
            let mut sum = x[i];
            for k in 0..i {
                sum -= self.factored.get(i, k) * x[k];
            }
            x[i] = sum;
        }
        // Back substitution with U.
        for i in (0..n).rev() {
            let mut sum = x[i];
            for k in (i + 1)..n {
                sum -= self.factored.get(i, k) * x[k];
            }
            x[i] = sum / self.factored.get(i, i);
        }
        Vector::from_entries(x)
    }
}

fn factor_with_tolerance(a: &DenseMatrix, pivot_tol: f64) -> Result<SolveFactorization> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "LU factorization requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut pivots = vec![0usize; n];
    let mut min_pivot = f64::INFINITY;
    let mut swaps_odd = false;

    for k in 0..n {
        let mut best_row = k;
        let mut best = m.get(k, k).abs();
        for i in (k + 1)..n {
            let cand = m.get(i, k).abs();
            if cand > best {
                best = cand;
                best_row = i;
            }
        }
        if best <= pivot_tol {
            return Err(Error::NearSingular { min_pivot: best });
        }
        pivots[k] = best_row;
        if best_row != k {
            swaps_odd = !swaps_odd;
            for j in 0..n {
                let tmp = m.get(k, j);
                m.set(k, j, m.get(best_row, j));
                m.set(best_row, j, tmp);
            }
        }
        min_pivot = min_pivot.min(best);
        let pivot = m.get(k, k);
        for i in (k + 1)..n {
            let mult = m.get(i, k) / pivot;
            m.set(i, k, mult);
            if mult != 0.0 {
                for j in (k + 1)..n {
                    m.set(i, j, m.get(i, j) - mult * m.get(k, j));
                }
            }
        }
    }

    Ok(SolveFactorization {
        factored: m,
        pivots,
        min_pivot,
        swaps_odd,
    })
}

/// Partial-pivoting LU factorization.
///
/// Declares the matrix near-singular when the best available pivot magnitude
/// falls at or below `1e-12 * n * max|A|`; the error carries that magnitude.
pub fn lu_factor(a: &DenseMatrix) -> Result<SolveFactorization> {
    factor_with_tolerance(a, rank_drop_tolerance(a))
}

/// LU factorization that proceeds through arbitrarily small nonzero pivots.
///
/// Used by Rayleigh quotient iteration, where the shifted matrix approaches
/// exact singularity as the shift converges; only a pivot of exactly zero
/// stops the elimination.
pub(crate) fn lu_factor_unguarded(a: &DenseMatrix) -> Result<SolveFactorization> {
    factor_with_tolerance(a, 0.0)
}

/// Convenience wrapper: factor then solve a single system.
pub fn solve(a: &DenseMatrix, b: &Vector) -> Result<Vector> {
    lu_factor(a)?.solve(b)
}

/// Determinant via pivoted Gaussian elimination: product of pivots times the
/// permutation sign. A singular matrix yields exactly 0.
pub fn determinant(a: &DenseMatrix) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "determinant requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut det = 1.0;
    for k in 0..n {
        let mut best_row = k;
        let mut best = m.get(k, k).abs();
        for i in (k + 1)..n {
            let cand = m.get(i, k).abs();
            if cand > best {
                best = cand;
                best_row = i;
            }
        }
        if best == 0.0 {
            return Ok(0.0);
        }
        if best_row != k {
            det = -det;
            for j in 0..n {
                let tmp = m.get(k, j);
                m.set(k, j, m.get(best_row, j));
                m.set(best_row, j, tmp);
            }
        }
        let pivot = m.get(k, k);
        det *= pivot;
        for i in (k + 1)..n {
            let mult = m.get(i, k) / pivot;
            if mult != 0.0 {
                for j in (k + 1)..n {
                    m.set(i, j, m.get(i, j) - mult * m.get(k, j));
                }
            }
        }
    }
    Ok(det)
}
