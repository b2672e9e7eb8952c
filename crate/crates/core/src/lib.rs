//! Iterative eigensolvers for dense real matrices.
//!
//! Five classic iterations over a small hand-rolled dense kernel:
//!
//! * [`power_iteration`] — dominant eigenpair by repeated multiplication
//! * [`inverse_iteration`] — smallest-magnitude eigenpair via one LU factorization
//! * [`shifted_inverse_iteration`] — the eigenpair nearest a chosen shift
//! * [`rayleigh_quotient_iteration`] — cubically convergent on symmetric input
//! * [`simultaneous_iteration`] / [`qr_iteration`] — the full spectrum of a
//!   symmetric matrix, two algebraically equivalent routes
//!
//! [`verify_equivalence`] runs the last two side by side and measures how far
//! the sequences drift, together with the identities A^k = QR and
//! A^(k) = Q^T A Q they both satisfy. [`poly_roots`] feeds a companion matrix
//! through the QR method to find real polynomial roots, certified against the
//! polynomial itself.
//!
//! Everything is deterministic given the inputs and the configured seed, and
//! every returned eigenpair carries the residual norm that certifies it. The
//! solvers are pure functions over immutable values and may run from any
//! number of threads at once.

mod config;
mod error;
pub mod gallery;
mod lu;
mod matrix;
mod multi;
mod poly;
mod qr;
mod single;
mod trace;

pub use config::SolverConfig;
pub use error::{Error, Result};
pub use lu::{determinant, lu_factor, solve, SolveFactorization};
pub use matrix::{DenseMatrix, Vector};
pub use multi::{
    qr_iteration, simultaneous_iteration, verify_equivalence, EigenDecomposition,
    EquivalenceReport, EquivalenceStep, QrIterationState,
};
pub use poly::{char_poly_eval, companion_matrix, poly_roots, MonicPolynomial, RootSet};
pub use qr::{qr_decompose, QrFactors};
pub use single::{
    inverse_iteration, power_iteration, rayleigh_quotient, rayleigh_quotient_iteration,
    shifted_inverse_iteration, EigenPair,
};
pub use trace::{IterationTrace, TraceStep};
