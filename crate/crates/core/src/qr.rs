//! QR factorization of square matrices.
//!
//! Householder reflections followed by a sign-fixing pass that forces every
//! diagonal entry of R positive. With that convention the factorization of a
//! full-rank matrix is unique, which the simultaneous-iteration/QR-method
//! equivalence harness depends on.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Orthogonal factor Q and upper-triangular factor R with positive diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct QrFactors {
    pub q: DenseMatrix,
    pub r: DenseMatrix,
}

impl QrFactors {
    /// Recomputes Q*R; useful for reconstruction checks.
    pub fn product(&self) -> DenseMatrix {
        self.q.matmul(&self.r).expect("factors have matching shapes")
    }
}

/// Drop tolerance below which a diagonal entry of R declares rank deficiency.
pub(crate) fn rank_drop_tolerance(a: &DenseMatrix) -> f64 {
    1e-12 * a.rows() as f64 * a.max_abs()
}

/// Factors a square full-rank matrix as A = QR with R[i][i] > 0.
///
/// Rank deficiency is detected, not assumed: a diagonal entry of R whose
/// magnitude falls at or below `1e-12 * n * max|A|` fails the factorization
/// with the offending column index.
pub fn qr_decompose(a: &DenseMatrix) -> Result<QrFactors> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "QR factorization requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut r = a.clone();
    let mut q = DenseMatrix::identity(n);
    let mut reflector = vec![0.0; n];

    for j in 0..n {
        // Householder vector for column j, acting on rows j..n.
        let mut norm_sq = 0.0;
        for i in j..n {
            let x = r.get(i, j);
            norm_sq += x * x;
        }
        let norm = norm_sq.sqrt();
        if norm == 0.0 {
            // Column already zero below and at the diagonal; the rank check
            // at the end reports it.
            continue;
        }
        let head = r.get(j, j);
        let alpha = if head >= 0.0 { -norm } else { norm };
        reflector[j] = head - alpha;
        for i in (j + 1)..n {
            reflector[i] = r.get(i, j);
        }
        let v_norm_sq = reflector[j..n].iter().map(|x| x * x).sum::<f64>();
        if v_norm_sq == 0.0 {
            continue;
        }

        // R <- H R on the trailing block.
        for col in j..n {
            let mut proj = 0.0;
            for i in j..n {
                proj += reflector[i] * r.get(i, col);
            }
            let scale = 2.0 * proj / v_norm_sq;
            for i in j..n {
                r.set(i, col, r.get(i, col) - scale * reflector[i]);
            }
        }
        // Q <- Q H (accumulate from the right).
        for row in 0..n {
            let mut proj = 0.0;
            for i in j..n {
                proj += q.get(row, i) * reflector[i];
            }
            let scale = 2.0 * proj / v_norm_sq;
            for i in j..n {
                q.set(row, i, q.get(row, i) - scale * reflector[i]);
            }
        }
    }

    // The strict lower triangle is zero by construction; make it exact.
    for i in 0..n {
        for j in 0..i {
            r.set(i, j, 0.0);
        }
    }

    let tol = rank_drop_tolerance(a);
    for i in 0..n {
        if r.get(i, i).abs() <= tol {
            return Err(Error::RankDeficient { column: i });
        }
    }

    // Def-2.4 convention: flip signs so every R diagonal entry is positive.
    for i in 0..n {
        if r.get(i, i) < 0.0 {
            for j in i..n {
                r.set(i, j, -r.get(i, j));
            }
            for row in 0..n {
                q.set(row, i, -q.get(row, i));
            }
        }
    }

    Ok(QrFactors { q, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn identity_factors_as_identity() {
        let f = qr_decompose(&DenseMatrix::identity(3)).unwrap();
        assert_eq!(f.q, DenseMatrix::identity(3));
        assert_eq!(f.r, DenseMatrix::identity(3));
    }

    #[test]
    fn orthogonal_input_gets_identity_r() {
        let swap = DenseMatrix::from_rows(2, 2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let f = qr_decompose(&swap).unwrap();
        assert_eq!(f.q, swap);
        assert_eq!(f.r, DenseMatrix::identity(2));
    }

    #[test]
    fn seeded_reconstruction() {
        let a = gallery::random_uniform(5, 7);
        let f = qr_decompose(&a).unwrap();
        let n = a.rows() as f64;
        assert!(f.q.orthogonality_defect() <= 1e-12 * n);
        assert!(f.product().max_abs_diff(&a) <= 1e-10 * a.max_abs());
        for i in 0..a.rows() {
            assert!(f.r.get(i, i) > 0.0);
            for j in 0..i {
                assert_eq!(f.r.get(i, j), 0.0);
            }
        }
    }

    #[test]
    fn rank_deficiency_reports_column() {
        let singular = DenseMatrix::from_rows(2, 2, vec![1.0, 2.0, 2.0, 4.0]).unwrap();
        match qr_decompose(&singular) {
            Err(Error::RankDeficient { column }) => assert_eq!(column, 1),
            other => panic!("expected rank deficiency, got {other:?}"),
        }
    }

    #[test]
    fn zero_matrix_is_rank_deficient() {
        let z = DenseMatrix::zeros(3, 3);
        assert!(matches!(
            qr_decompose(&z),
            Err(Error::RankDeficient { column: 0 })
        ));
    }

    #[test]
    fn deterministic_bits() {
        let a = gallery::random_uniform(6, 3);
        let f1 = qr_decompose(&a).unwrap();
        let f2 = qr_decompose(&a).unwrap();
        let bits = |m: &DenseMatrix| m.entries().iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&f1.q), bits(&f2.q));
        assert_eq!(bits(&f1.r), bits(&f2.r));
    }

    #[test]
    fn non_square_is_a_usage_error() {
        let a = DenseMatrix::from_rows(2, 3, vec![1.0; 6]).unwrap();
        assert!(matches!(qr_decompose(&a), Err(Error::ShapeMismatch(_))));
    }
}
