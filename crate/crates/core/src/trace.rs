use crate::matrix::Vector;

/// One recorded iteration of a single-vector solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStep {
    /// Iteration index, starting at 1.
    pub k: usize,
    /// Eigenvalue estimate after this iteration (Rayleigh quotient).
    pub lambda: f64,
    /// ||A v - lambda v|| after this iteration.
    pub residual: f64,
    /// ||v_k - s * v_{k-1}|| with the sign s in {+1, -1} that minimizes it.
    pub step_change: f64,
}

/// Full per-iteration record of a solver run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IterationTrace {
    steps: Vec<TraceStep>,
}

impl IterationTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, k: usize, lambda: f64, residual: f64, step_change: f64) {
        debug_assert!(
            self.steps.last().map_or(k == 1, |prev| k > prev.k),
            "iteration indices must increase from 1"
        );
        debug_assert!(
            lambda.is_finite() && residual.is_finite() && step_change.is_finite(),
            "trace scalars must be finite"
        );
        self.steps.push(TraceStep {
            k,
            lambda,
            residual,
            step_change,
        });
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> Option<&TraceStep> {
        self.steps.last()
    }

    /// The residual column, in iteration order.
    pub fn residuals(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.residual).collect()
    }
}

/// Smallest distance between v and ±prev.
pub(crate) fn signed_step_change(v: &Vector, prev: &Vector) -> f64 {
    let minus = v.sub(prev).norm2();
    let plus = v.add(prev).norm2();
    minus.min(plus)
}
