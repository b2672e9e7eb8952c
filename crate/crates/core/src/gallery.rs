//! Seeded families of test matrices.
//!
//! Everything here is deterministic given the seed, so solver runs, the
//! benchmark subcommand, and the test suites can reproduce each other's
//! inputs exactly.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::matrix::{DenseMatrix, Vector};
use crate::qr::qr_decompose;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n x n matrix with entries drawn uniformly from [-1, 1].
pub fn random_uniform(n: usize, seed: u64) -> DenseMatrix {
    let mut r = rng(seed);
    let dist = Uniform::new_inclusive(-1.0, 1.0);
    DenseMatrix::from_fn(n, n, |_, _| dist.sample(&mut r)).expect("finite by construction")
}

/// n x n matrix with standard normal entries.
pub fn random_gaussian(n: usize, seed: u64) -> DenseMatrix {
    let mut r = rng(seed);
    DenseMatrix::from_fn(n, n, |_, _| StandardNormal.sample(&mut r)).expect("finite by construction")
}

/// Symmetrized Gaussian: (G + G^T) / 2.
pub fn random_symmetric(n: usize, seed: u64) -> DenseMatrix {
    let g = random_gaussian(n, seed);
    DenseMatrix::from_fn(n, n, |i, j| 0.5 * (g.get(i, j) + g.get(j, i)))
        .expect("finite by construction")
}

/// Haar-ish random orthogonal matrix: Q factor of a Gaussian sample.
pub fn random_orthogonal(n: usize, seed: u64) -> DenseMatrix {
    // A Gaussian sample is full rank with probability one; bump the seed in
    // the measure-zero event that the factorization rejects it.
    for attempt in 0..8 {
        let g = random_gaussian(n, seed.wrapping_add(attempt * 0x9e37_79b9));
        if let Ok(f) = qr_decompose(&g) {
            return f.q;
        }
    }
    unreachable!("eight consecutive rank-deficient Gaussian samples")
}

/// Symmetric matrix with a prescribed spectrum: Q diag(eigs) Q^T for a
/// seeded random orthogonal Q. The exact eigenvectors are the columns of Q.
pub fn symmetric_with_spectrum(eigs: &[f64], seed: u64) -> (DenseMatrix, DenseMatrix) {
    let n = eigs.len();
    let q = random_orthogonal(n, seed);
    let lambda = DenseMatrix::diagonal(eigs).expect("finite spectrum");
    let raw = q
        .matmul(&lambda)
        .and_then(|m| m.matmul(&q.transpose()))
        .expect("shapes agree");
    // Symmetrize away the last few ulps so the solvers' symmetry gate
    // never trips on rounding.
    let a = DenseMatrix::from_fn(n, n, |i, j| 0.5 * (raw.get(i, j) + raw.get(j, i)))
        .expect("finite by construction");
    (a, q)
}

/// Geometrically decaying spectrum: lambda_1 = top, lambda_{i+1} = ratio * lambda_i.
pub fn geometric_spectrum(n: usize, top: f64, ratio: f64) -> Vec<f64> {
    let mut eigs = Vec::with_capacity(n);
    let mut x = top;
    for _ in 0..n {
        eigs.push(x);
        x *= ratio;
    }
    eigs
}

/// Seeded scalars drawn uniformly from [-1, 1].
pub fn random_scalars(count: usize, seed: u64) -> Vec<f64> {
    let mut r = rng(seed);
    let dist = Uniform::new_inclusive(-1.0, 1.0);
    (0..count).map(|_| dist.sample(&mut r)).collect()
}

/// Uniformly random direction on the unit sphere.
pub fn random_unit_vector(n: usize, seed: u64) -> Vector {
    let mut r = rng(seed);
    loop {
        let entries: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut r)).collect();
        let v = Vector::from_entries(entries).expect("finite by construction");
        if let Ok(unit) = v.normalized() {
            return unit;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_families_are_deterministic() {
        assert_eq!(random_uniform(4, 9), random_uniform(4, 9));
        assert_eq!(random_symmetric(5, 2), random_symmetric(5, 2));
        assert_ne!(random_uniform(4, 9), random_uniform(4, 10));
    }

    #[test]
    fn orthogonal_factor_is_orthogonal() {
        let q = random_orthogonal(6, 3);
        assert!(q.orthogonality_defect() <= 1e-12 * 6.0);
    }

    #[test]
    fn prescribed_spectrum_is_symmetric_with_known_eigenvectors() {
        let eigs = [4.0, 2.0, 1.0];
        let (a, q) = symmetric_with_spectrum(&eigs, 7);
        assert_eq!(a.symmetry_defect(), 0.0);
        // A q_i = eig_i q_i by construction.
        for (i, eig) in eigs.iter().enumerate() {
            let qi = q.column(i);
            let err = a.matvec(&qi).unwrap().sub(&qi.scale(*eig)).norm2();
            assert!(err <= 1e-12, "column {i}: residual {err}");
        }
    }

    #[test]
    fn unit_vector_has_unit_norm() {
        let v = random_unit_vector(8, 4);
        assert!((v.norm2() - 1.0).abs() <= 1e-12);
    }
}
