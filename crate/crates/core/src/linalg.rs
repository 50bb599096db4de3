//! Thin wrappers over the LAPACK-backed dense routines used across modules.

use ndarray::Array2;
use ndarray_linalg::{Eigh, SVD, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = Array2<Complex64>;

/// All singular values, descending.
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>> {
    let (_, s, _) = a.svd(false, false)?;
    Ok(s.to_vec())
}

/// Smallest singular value of a square (or rectangular) matrix.
pub fn min_singular_value(a: &CMatrix) -> Result<f64> {
    let s = singular_values(a)?;
    s.last()
        .copied()
        .ok_or_else(|| Error::InvalidParameter("empty matrix".into()))
}

/// Largest singular value.
pub fn max_singular_value(a: &CMatrix) -> Result<f64> {
    let s = singular_values(a)?;
    s.first()
        .copied()
        .ok_or_else(|| Error::InvalidParameter("empty matrix".into()))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Result<Vec<f64>> {
    let (w, _) = a.eigh(UPLO::Lower)?;
    Ok(w.to_vec())
}

/// Largest singular value by power iteration on AᴴA with a seeded start
/// vector. Used only where a full decomposition would dominate the runtime
/// (grid-doubling convergence gates); reported norms go through [`max_singular_value`].
pub fn top_singular_value_iterative(a: &CMatrix, tol: f64, max_iter: usize, seed: u64) -> f64 {
    use rand::{Rng, SeedableRng};
    let n = a.ncols();
    if n == 0 || a.nrows() == 0 {
        return 0.0;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
        .collect();
    normalize(&mut v);
    let ah = a.t().mapv(|z| z.conj());
    let mut sigma = 0.0f64;
    for _ in 0..max_iter {
        let av = matvec(a, &v);
        let mut w = matvec(&ah, &av);
        let new_sigma = av.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        normalize(&mut w);
        v = w;
        if (new_sigma - sigma).abs() <= tol * new_sigma.max(f64::MIN_POSITIVE) {
            return new_sigma;
        }
        sigma = new_sigma;
    }
    sigma
}

fn matvec(a: &CMatrix, v: &[Complex64]) -> Vec<Complex64> {
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut out = vec![Complex64::new(0.0, 0.0); rows];
    for (i, out_i) in out.iter_mut().enumerate() {
        let row = a.row(i);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..cols {
            acc += row[j] * v[j];
        }
        *out_i = acc;
    }
    out
}

fn normalize(v: &mut [Complex64]) {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if n > 0.0 {
        for z in v.iter_mut() {
            *z /= n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn min_singular_of_diagonal_is_min_modulus() {
        let a: CMatrix = array![
            [Complex64::new(-0.5, 0.1), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)]
        ];
        let s = min_singular_value(&a).unwrap();
        assert!((s - 0.26f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn iterative_top_singular_matches_dense() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = CMatrix::from_shape_fn((40, 40), |_| {
            Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        let dense = max_singular_value(&a).unwrap();
        let iterative = top_singular_value_iterative(&a, 1e-12, 10_000, 1);
        assert!((dense - iterative).abs() < 1e-8 * dense);
    }
}
