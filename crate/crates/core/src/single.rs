//! Single-vector iterative eigensolvers: power iteration, inverse iteration
//! (plain and shifted), and Rayleigh quotient iteration.
//!
//! Each solver normalizes its iterate every step, canonicalizes the sign so
//! the first nonzero component is positive, reports the eigenvalue as the
//! Rayleigh quotient with respect to the original matrix, and records a full
//! iteration trace. Convergence means the residual ||Av - lambda*v|| dropped
//! to the configured tolerance; running out of iterations returns the best
//! pair seen with `converged == false` rather than an error.

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::gallery;
use crate::lu::{lu_factor, lu_factor_unguarded, SolveFactorization};
use crate::matrix::{DenseMatrix, Vector};
use crate::trace::{signed_step_change, IterationTrace};

/// A converged (or best-effort) eigenvalue/eigenvector estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    /// Eigenvalue estimate: the Rayleigh quotient of `vector`.
    pub value: f64,
    /// Unit eigenvector estimate, first nonzero component positive.
    pub vector: Vector,
    /// ||A v - value * v|| at exit.
    pub residual: f64,
    /// Iterations actually performed.
    pub iterations: usize,
    /// Whether `residual <= tol` was reached.
    pub converged: bool,
}

/// Rayleigh quotient r(x) = x^T A x / x^T x.
///
/// Scale-invariant in x; for an exact eigenvector it returns the exact
/// eigenvalue, and for any x it is the least-squares best eigenvalue
/// estimate, minimizing ||alpha*x - Ax|| over alpha.
pub fn rayleigh_quotient(a: &DenseMatrix, x: &Vector) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "Rayleigh quotient requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() != x.dim() {
        return Err(Error::ShapeMismatch(format!(
            "matrix is {}x{} but vector has length {}",
            a.rows(),
            a.cols(),
            x.dim()
        )));
    }
    let denom = x.dot(x);
    if denom == 0.0 {
        return Err(Error::InvalidArgument(
            "Rayleigh quotient of the zero vector".into(),
        ));
    }
    Ok(x.dot(&a.matvec(x)?) / denom)
}

fn starting_vector(a: &DenseMatrix, cfg: &SolverConfig) -> Result<Vector> {
    let n = a.rows();
    match &cfg.start {
        Some(v) => {
            if v.dim() != n {
                return Err(Error::ShapeMismatch(format!(
                    "starting vector has length {} but matrix is {}x{}",
                    v.dim(),
                    n,
                    n
                )));
            }
            v.normalized()
        }
        None => Ok(gallery::random_unit_vector(n, cfg.seed)),
    }
}

fn require_square(a: &DenseMatrix, what: &str) -> Result<()> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{what} requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

fn require_symmetric(a: &DenseMatrix, cfg: &SolverConfig) -> Result<()> {
    if cfg.allow_unsymmetric {
        return Ok(());
    }
    let defect = a.symmetry_defect();
    if defect > 1e-12 * a.max_abs() {
        return Err(Error::NotSymmetric {
            max_asymmetry: defect,
        });
    }
    Ok(())
}

/// Tracks the lowest-residual iterate for max-iters exhaustion reporting.
struct BestSoFar {
    value: f64,
    vector: Vector,
    residual: f64,
}

impl BestSoFar {
    fn new(value: f64, vector: Vector, residual: f64) -> Self {
        Self {
            value,
            vector,
            residual,
        }
    }

    fn consider(&mut self, value: f64, vector: &Vector, residual: f64) {
        if residual < self.residual {
            self.value = value;
            self.vector = vector.clone();
            self.residual = residual;
        }
    }

    fn into_pair(self, iterations: usize, converged: bool) -> EigenPair {
        EigenPair {
            value: self.value,
            vector: self.vector,
            residual: self.residual,
            iterations,
            converged,
        }
    }
}

fn residual_norm(a: &DenseMatrix, v: &Vector, lambda: f64) -> f64 {
    a.matvec(v)
        .expect("dimensions already checked")
        .sub(&v.scale(lambda))
        .norm2()
}

/// Power iteration: repeatedly multiply by A and normalize.
///
/// Converges to the eigenpair of largest |lambda| when that magnitude is
/// strictly dominant; the per-step error contraction is the ratio of the two
/// largest magnitudes.
pub fn power_iteration(
    a: &DenseMatrix,
    cfg: &SolverConfig,
) -> Result<(EigenPair, IterationTrace)> {
    require_square(a, "power iteration")?;
    cfg.validate()?;
    let mut v = starting_vector(a, cfg)?;
    let mut trace = IterationTrace::new();
    let mut best: Option<BestSoFar> = None;

    for k in 1..=cfg.max_iters {
        let w = a.matvec(&v)?;
        let norm = w.norm2();
        if norm == 0.0 {
            return Err(Error::Breakdown {
                iteration: k,
                reason: "iterate mapped into the null space of the matrix".into(),
            });
        }
        let next = w.scale(1.0 / norm).canonicalized();
        let lambda = rayleigh_quotient(a, &next)?;
        let residual = residual_norm(a, &next, lambda);
        trace.push(k, lambda, residual, signed_step_change(&next, &v));
        match &mut best {
            Some(b) => b.consider(lambda, &next, residual),
            None => best = Some(BestSoFar::new(lambda, next.clone(), residual)),
        }
        v = next;
        if residual <= cfg.tol {
            return Ok((
                EigenPair {
                    value: lambda,
                    vector: v,
                    residual,
                    iterations: k,
                    converged: true,
                },
                trace,
            ));
        }
    }
    let best = best.expect("max_iters >= 1 guarantees at least one step");
    Ok((best.into_pair(cfg.max_iters, false), trace))
}

/// Inverse iteration: power iteration on A^{-1} via one LU factorization.
///
/// Converges to the eigenpair of smallest |lambda|; the reported eigenvalue
/// is the Rayleigh quotient with respect to A itself, never the reciprocal.
pub fn inverse_iteration(
    a: &DenseMatrix,
    cfg: &SolverConfig,
) -> Result<(EigenPair, IterationTrace)> {
    shifted_inverse_iteration(a, 0.0, cfg)
}

/// Inverse iteration on (A - mu*I): converges to the eigenpair nearest mu.
///
/// The shifted matrix is factored exactly once. If the factorization reports
/// near-singularity, mu already is an eigenvalue to working precision and the
/// error says so.
pub fn shifted_inverse_iteration(
    a: &DenseMatrix,
    mu: f64,
    cfg: &SolverConfig,
) -> Result<(EigenPair, IterationTrace)> {
    require_square(a, "inverse iteration")?;
    cfg.validate()?;
    if !mu.is_finite() {
        return Err(Error::InvalidArgument(format!("shift must be finite, got {mu}")));
    }
    let shifted = a.shift_diagonal(mu)?;
    let factors = lu_factor(&shifted).map_err(|e| match e {
        Error::NearSingular { min_pivot } => Error::ShiftIsEigenvalue {
            shift: mu,
            min_pivot,
        },
        other => other,
    })?;

    let mut v = starting_vector(a, cfg)?;
    let mut trace = IterationTrace::new();
    let mut best: Option<BestSoFar> = None;

    for k in 1..=cfg.max_iters {
        let w = factors.solve(&v)?;
        if !w.is_finite() || w.norm2() == 0.0 {
            return Err(Error::Breakdown {
                iteration: k,
                reason: "shifted solve produced an unusable direction".into(),
            });
        }
        let next = w.normalized()?.canonicalized();
        let lambda = rayleigh_quotient(a, &next)?;
        let residual = residual_norm(a, &next, lambda);
        trace.push(k, lambda, residual, signed_step_change(&next, &v));
        match &mut best {
            Some(b) => b.consider(lambda, &next, residual),
            None => best = Some(BestSoFar::new(lambda, next.clone(), residual)),
        }
        v = next;
        if residual <= cfg.tol {
            return Ok((
                EigenPair {
                    value: lambda,
                    vector: v,
                    residual,
                    iterations: k,
                    converged: true,
                },
                trace,
            ));
        }
    }
    let best = best.expect("max_iters >= 1 guarantees at least one step");
    Ok((best.into_pair(cfg.max_iters, false), trace))
}

/// Rayleigh quotient iteration: shifted inverse iteration whose shift is
/// refreshed to the current Rayleigh quotient every step, so the shifted
/// matrix is refactored every iteration.
///
/// Only guaranteed to converge on symmetric input, and gated on symmetry
/// unless `cfg.allow_unsymmetric` opts into unsupported territory. The shift
/// approaching an exact eigenvalue makes the shifted matrix singular by
/// design: a factorization or solve breakdown with the residual already at
/// tolerance is convergence, anything else is a hard `Breakdown`.
pub fn rayleigh_quotient_iteration(
    a: &DenseMatrix,
    cfg: &SolverConfig,
) -> Result<(EigenPair, IterationTrace)> {
    require_square(a, "Rayleigh quotient iteration")?;
    require_symmetric(a, cfg)?;
    cfg.validate()?;

    let mut v = starting_vector(a, cfg)?;
    let mut lambda = rayleigh_quotient(a, &v)?;
    let mut residual = residual_norm(a, &v, lambda);
    let mut trace = IterationTrace::new();
    let mut best = BestSoFar::new(lambda, v.clone(), residual);

    for k in 1..=cfg.max_iters {
        let shifted = a.shift_diagonal(lambda)?;
        let step = lu_factor_unguarded(&shifted)
            .and_then(|f: SolveFactorization| f.solve(&v))
            .ok()
            .filter(|w| w.is_finite() && w.norm2() > 0.0 && w.norm2().is_finite());
        let w = match step {
            Some(w) => w,
            None => {
                // The shift landed on an eigenvalue exactly.
                if residual <= cfg.tol {
                    trace.push(k, lambda, residual, 0.0);
                    return Ok((
                        EigenPair {
                            value: lambda,
                            vector: v,
                            residual,
                            iterations: k,
                            converged: true,
                        },
                        trace,
                    ));
                }
                return Err(Error::Breakdown {
                    iteration: k,
                    reason: format!(
                        "shifted matrix became singular with residual {residual:e} above tolerance"
                    ),
                });
            }
        };
        let next = w.normalized()?.canonicalized();
        lambda = rayleigh_quotient(a, &next)?;
        residual = residual_norm(a, &next, lambda);
        trace.push(k, lambda, residual, signed_step_change(&next, &v));
        best.consider(lambda, &next, residual);
        v = next;
        if residual <= cfg.tol {
            return Ok((
                EigenPair {
                    value: lambda,
                    vector: v,
                    residual,
                    iterations: k,
                    converged: true,
                },
                trace,
            ));
        }
    }
    Ok((best.into_pair(cfg.max_iters, false), trace))
}
