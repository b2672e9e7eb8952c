//! Companion matrices: the bridge between monic polynomials and
//! eigenproblems, in both directions.
//!
//! A monic polynomial maps to a companion matrix whose characteristic
//! polynomial it is, so polynomial root finding reduces to an eigenvalue
//! run. Companion matrices are never symmetric, so the root finder drives
//! the QR method in its triangular (lower-mass) mode and accepts an answer
//! only after every root certifies |p(root)| against the residual bound.

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::lu::determinant;
use crate::matrix::DenseMatrix;
use crate::multi::{IterationEngine, QrMethodEngine};

/// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_1 z + a_0, stored as the
/// coefficient list [a_0, ..., a_{n-1}]. The leading coefficient is 1 by
/// construction; callers must normalize non-monic input themselves (dividing
/// through silently could hide overflow for tiny leading coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<f64>,
}

impl MonicPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a monic polynomial needs degree at least 1".into(),
            ));
        }
        if !coeffs.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite("polynomial coefficients"));
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients [a_0, ..., a_{n-1}].
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation of z^n + a_{n-1} z^{n-1} + ... + a_0.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 1.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Builds the monic polynomial with the given roots, by expanding the
    /// product of linear factors.
    pub fn from_roots(roots: &[f64]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidArgument(
                "a monic polynomial needs at least one root".into(),
            ));
        }
        // Full coefficient list, low to high degree, starting from the
        // constant polynomial 1; each root multiplies in a factor (z - r).
        let mut full = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; full.len() + 1];
            for (i, &c) in full.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            full = next;
        }
        let leading = full.pop();
        debug_assert_eq!(leading, Some(1.0), "expansion stays monic");
        Self::new(full)
    }
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, the
/// negated coefficients down the last column, zeros elsewhere. Its
/// characteristic polynomial is exactly the input.
pub fn companion_matrix(p: &MonicPolynomial) -> DenseMatrix {
    let n = p.degree();
    DenseMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -p.coeffs()[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    })
    .expect("finite coefficients produce a finite matrix")
}

/// Characteristic polynomial value P_A(x) = det(xI - A), computed through the
/// pivoted elimination determinant. Exactly zero at (numerically exact)
/// eigenvalues; a singular determinant is a valid output, not an error.
pub fn char_poly_eval(a: &DenseMatrix, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "cannot evaluate the characteristic polynomial at {x}"
        )));
    }
    let shifted = a.shift_diagonal(x)?; // A - xI
    let d = determinant(&shifted)?;
    // det(xI - A) = (-1)^n det(A - xI).
    if a.rows() % 2 == 0 {
        Ok(d)
    } else {
        Ok(-d)
    }
}

/// Real roots of a monic polynomial with certified residuals, sorted
/// ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    /// Root estimates in ascending order.
    pub roots: Vec<f64>,
    /// |p(root)| for each root, aligned with `roots`.
    pub residuals: Vec<f64>,
    /// QR iterations spent.
    pub iterations: usize,
}

/// Finds all roots of a monic polynomial expected to have real roots, as the
/// eigenvalues of its companion matrix.
///
/// Runs the unshifted QR method with the symmetry gate disabled, declaring
/// success only when the strictly-lower off-diagonal mass has collapsed AND
/// every diagonal entry r certifies |p(r)| <= tol * (1 + max|a_i|) * n.
/// Complex or equal-magnitude roots never satisfy that and surface as
/// [`Error::NoRealConvergence`] carrying the off-diagonal mass trajectory.
pub fn poly_roots(p: &MonicPolynomial, cfg: &SolverConfig) -> Result<RootSet> {
    cfg.validate()?;
    let n = p.degree();
    let a = companion_matrix(p);
    let norm_a = a.frobenius_norm();
    let coeff_scale = p.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let certify_bound = cfg.tol * (1.0 + coeff_scale) * n as f64;

    let mut engine = QrMethodEngine::new(&a);
    let mut trajectory = Vec::new();
    for k in 1..=cfg.max_iters {
        engine.step()?;
        let off = engine.a_k().lower_triangle_frobenius();
        trajectory.push(off);
        if off <= cfg.tol * norm_a {
            let mut roots: Vec<f64> = (0..n).map(|i| engine.a_k().get(i, i)).collect();
            roots.sort_by(|x, y| x.partial_cmp(y).expect("finite roots"));
            let residuals: Vec<f64> = roots.iter().map(|r| p.eval(*r).abs()).collect();
            if residuals.iter().all(|r| *r <= certify_bound) {
                return Ok(RootSet {
                    roots,
                    residuals,
                    iterations: k,
                });
            }
        }
    }
    Err(Error::NoRealConvergence {
        iterations: cfg.max_iters,
        off_diagonal: trajectory,
    })
}
