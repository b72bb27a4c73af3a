//! Symmetric eigensolver: cyclic Jacobi rotations.
//!
//! Accurate and simple at the sizes this crate needs (n <= 32); every
//! Cartan projection goes through here via the Gram matrix `g^t g`.

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Sweep cap; exceeding it raises a numeric-failure error naming the cap.
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a symmetric matrix.
///
/// Returns eigenvalues sorted in nonincreasing order and the matrix whose
/// columns are the matching orthonormal eigenvectors.  `tol` bounds both
/// the accepted asymmetry of the input and the off-diagonal norm at
/// convergence (scaled by max(1, ||A||_F)).
pub fn sym_eigen(a: &Matrix, tol: f64) -> Result<(Vec<f64>, Matrix)> {
    if tol <= 0.0 {
        return Err(Error::Contract("sym_eigen: tol must be positive".into()));
    }
    if !a.is_square() {
        return Err(Error::Contract(format!(
            "sym_eigen: matrix is {}x{}, not square",
            a.rows(),
            a.cols()
        )));
    }
    let scale = a.max_abs().max(1.0);
    if a.symmetry_residual() > tol * scale {
        return Err(Error::Contract(format!(
            "sym_eigen: asymmetry residual {:.3e} exceeds tol",
            a.symmetry_residual()
        )));
    }

    let n = a.rows();
    let mut m = a.clone();
    // Symmetrize exactly so rotations preserve symmetry bit-for-bit.
    for r in 0..n {
        for c in (r + 1)..n {
            let avg = 0.5 * (m[(r, c)] + m[(c, r)]);
            m[(r, c)] = avg;
            m[(c, r)] = avg;
        }
    }
    let mut v = Matrix::identity(n);
    let threshold = tol * a.frobenius().max(1.0);

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for r in 0..n {
                for c in (r + 1)..n {
                    s += m[(r, c)] * m[(r, c)];
                }
            }
            (2.0 * s).sqrt()
        };
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.abs() <= f64::EPSILON * scale * 1e-2 {
                    continue;
                }
                let tau = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Rotate rows/columns p and q of M.
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                // Accumulate eigenvectors.
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NumericFailure(format!(
            "sym_eigen: no convergence after {} Jacobi sweeps",
            MAX_SWEEPS
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].partial_cmp(&m[(i, i)]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_col)] = v[(r, old_col)];
        }
    }
    Ok((eigenvalues, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_eigenvalues() {
        let (vals, _) = sym_eigen(&Matrix::identity(3), 1e-12).unwrap();
        assert_eq!(vals, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_sorted_descending() {
        let (vals, vecs) = sym_eigen(&Matrix::diagonal(&[1.0, 4.0]), 1e-12).unwrap();
        assert_eq!(vals, vec![4.0, 1.0]);
        // Standard basis vectors, largest eigenvalue first.
        assert!((vecs[(1, 0)].abs() - 1.0).abs() < 1e-14);
        assert!((vecs[(0, 1)].abs() - 1.0).abs() < 1e-14);
    }

    // Oracle: characteristic polynomial of [[2,1],[1,2]] is
    // l^2 - 4l + 3 = (l-3)(l-1), eigenvectors (1,1)/sqrt2 and (1,-1)/sqrt2.
    #[test]
    fn two_by_two_hand_oracle() {
        let a = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let (vals, vecs) = sym_eigen(&a, 1e-12).unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        let inv_sqrt2 = 0.5f64.sqrt();
        let col0 = [vecs[(0, 0)], vecs[(1, 0)]];
        let col1 = [vecs[(0, 1)], vecs[(1, 1)]];
        assert!((col0[0].abs() - inv_sqrt2).abs() < 1e-12);
        assert!((col0[0] - col0[1]).abs() < 1e-12); // (1,1) direction
        assert!((col1[0] + col1[1]).abs() < 1e-12); // (1,-1) direction
    }

    #[test]
    fn rejects_asymmetric() {
        let a = Matrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(sym_eigen(&a, 1e-12), Err(Error::Contract(_))));
    }

    #[test]
    fn rejects_non_square() {
        let a = Matrix::new(2, 3, vec![0.0; 6]).unwrap();
        assert!(sym_eigen(&a, 1e-12).is_err());
    }

    #[test]
    fn reconstructs_random_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=8 {
            let mut a = Matrix::zeros(n, n);
            for r in 0..n {
                for c in r..n {
                    let x = rng.gen_range(-1.0..1.0);
                    a[(r, c)] = x;
                    a[(c, r)] = x;
                }
            }
            let (vals, vecs) = sym_eigen(&a, 1e-12).unwrap();
            // Rebuild V D V^t and compare.
            let d = Matrix::diagonal(&vals);
            let rebuilt = vecs.mul(&d).unwrap().mul(&vecs.transpose()).unwrap();
            let rel = rebuilt.max_abs_diff(&a) / a.max_abs().max(1.0);
            assert!(rel < 1e-9, "n={} relative error {}", n, rel);
            // Orthonormality.
            let vtv = vecs.transpose().mul(&vecs).unwrap();
            assert!(vtv.max_abs_diff(&Matrix::identity(n)) < 1e-11);
        }
    }
}
