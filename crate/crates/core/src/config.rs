use crate::error::{Error, Result};
use crate::matrix::Vector;

/// Shared knobs for every iterative solver.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Residual threshold: iteration stops once ||Av - lambda*v|| <= tol.
    pub tol: f64,
    /// Hard cap on iterations; exhaustion is reported, not raised.
    pub max_iters: usize,
    /// Seed for the starting-vector draw when `start` is absent.
    pub seed: u64,
    /// Explicit starting vector; normalized before use.
    pub start: Option<Vector>,
    /// Skips the symmetry gate on methods that are only guaranteed to
    /// converge for symmetric input. Unsupported territory for the
    /// single-vector solvers; the polynomial root finder relies on it.
    pub allow_unsymmetric: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iters: 10_000,
            seed: 42,
            start: None,
            allow_unsymmetric: false,
        }
    }
}

impl SolverConfig {
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iters(mut self, max_iters: usize) -> Self {
        self.max_iters = max_iters;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_start(mut self, start: Vector) -> Self {
        self.start = Some(start);
        self
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tol must be positive and finite, got {}",
                self.tol
            )));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidArgument("max_iters must be at least 1".into()));
        }
        if let Some(start) = &self.start {
            if start.norm2() == 0.0 {
                return Err(Error::InvalidArgument(
                    "starting vector must be nonzero".into(),
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = SolverConfig::default();
        assert_eq!(cfg.tol, 1e-10);
        assert_eq!(cfg.max_iters, 10_000);
        assert_eq!(cfg.seed, 42);
        assert!(cfg.start.is_none());
        assert!(!cfg.allow_unsymmetric);
    }

    #[test]
    fn validation_rejects_bad_configs() {
        assert!(SolverConfig::default().with_tol(0.0).validate().is_err());
        assert!(SolverConfig::default().with_tol(-1.0).validate().is_err());
        assert!(SolverConfig::default().with_max_iters(0).validate().is_err());
        let zero_start = SolverConfig::default().with_start(Vector::zeros(3));
        assert!(zero_start.validate().is_err());
    }
}
