use thiserror::Error;

/// Errors produced by the dense kernels and the iterative solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A constructed value contained NaN or infinity.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// A caller-supplied argument violated a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// QR factorization hit a diagonal entry below the drop tolerance.
    #[error("rank deficient at column {column}")]
    RankDeficient { column: usize },

    /// LU factorization found no usable pivot.
    #[error("near-singular matrix (smallest pivot magnitude {min_pivot:e})")]
    NearSingular { min_pivot: f64 },

    /// A method that requires symmetry was handed a non-symmetric matrix.
    #[error("matrix is not symmetric (max |a_ij - a_ji| = {max_asymmetry:e})")]
    NotSymmetric { max_asymmetry: f64 },

    /// Shifted solve could not factor A - mu*I: mu is numerically an
    /// eigenvalue, and is itself the best available estimate.
    #[error("shift {shift} is numerically an eigenvalue (smallest pivot magnitude {min_pivot:e})")]
    ShiftIsEigenvalue { shift: f64, min_pivot: f64 },

    /// An iteration produced a state it cannot continue from.
    #[error("iteration breakdown at step {iteration}: {reason}")]
    Breakdown { iteration: usize, reason: String },

    /// The QR method failed to settle on real eigenvalues; carries the
    /// full off-diagonal mass trajectory for diagnosis.
    #[error("no convergence to real roots after {iterations} iterations")]
    NoRealConvergence {
        iterations: usize,
        off_diagonal: Vec<f64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
