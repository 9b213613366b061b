//! Cyclic Jacobi eigensolver for real symmetric matrices, and complex
//! Hermitian input via the doubled real-symmetric embedding.
//!
//! Generic over the floating scalar so the same kernel serves `f32` and
//! `f64`; everything in the crate instantiates it at `f64`.

use num_traits::Float;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JacobiError {
    #[error("jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
}

const MAX_SWEEPS: usize = 128;

/// Eigenvalues of a real symmetric matrix (row-major, `n * n` entries),
/// sorted in descending order. Converges when the off-diagonal Frobenius
/// norm falls below `threshold`.
pub fn symmetric_eigenvalues<F: Float>(
    matrix: &[F],
    n: usize,
    threshold: F,
) -> Result<Vec<F>, JacobiError> {
    assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let idx = |i: usize, j: usize| i * n + j;
    if n < 2 {
        return Ok(a.iter().step_by(n + 1).copied().collect());
    }
    for _ in 0..MAX_SWEEPS {
        let mut off = F::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                off = off + a[idx(i, j)] * a[idx(i, j)];
            }
        }
        if (off + off).sqrt() < threshold {
            let mut eig: Vec<F> = (0..n).map(|i| a[idx(i, i)]).collect();
            eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
            return Ok(eig);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq == F::zero() {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / ((apq + apq) * F::one());
                let two = F::one() + F::one();
                let t = if theta.abs() > F::one() / F::epsilon() {
                    // Rotation angle underflows; tan is ~1/(2 theta).
                    F::one() / (theta * two)
                } else {
                    let sign = if theta >= F::zero() { F::one() } else { -F::one() };
                    sign / (theta.abs() + (theta * theta + F::one()).sqrt())
                };
                let c = F::one() / (t * t + F::one()).sqrt();
                let s = t * c;
                let tau = s / (F::one() + c);
                a[idx(p, p)] = app - t * apq;
                a[idx(q, q)] = aqq + t * apq;
                a[idx(p, q)] = F::zero();
                a[idx(q, p)] = F::zero();
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    let new_kp = akp - s * (akq + tau * akp);
                    let new_kq = akq + s * (akp - tau * akq);
                    a[idx(k, p)] = new_kp;
                    a[idx(p, k)] = new_kp;
                    a[idx(k, q)] = new_kq;
                    a[idx(q, k)] = new_kq;
                }
            }
        }
    }
    Err(JacobiError::NoConvergence(MAX_SWEEPS))
}

/// Eigenvalues of a complex Hermitian matrix given as separate real and
/// imaginary parts (row-major). Uses the real-symmetric embedding
/// `[[Re, -Im], [Im, Re]]`, whose spectrum is that of the input doubled.
pub fn hermitian_eigenvalues<F: Float>(
    re: &[F],
    im: &[F],
    n: usize,
    threshold: F,
) -> Result<Vec<F>, JacobiError> {
    assert_eq!(re.len(), n * n);
    assert_eq!(im.len(), n * n);
    let m = 2 * n;
    let mut big = vec![F::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            big[i * m + j] = re[i * n + j];
            big[(i + n) * m + (j + n)] = re[i * n + j];
            big[i * m + (j + n)] = -im[i * n + j];
            big[(i + n) * m + j] = im[i * n + j];
        }
    }
    let doubled = symmetric_eigenvalues(&big, m, threshold)?;
    Ok(doubled.into_iter().step_by(2).collect())
}

/// Default convergence threshold for `f64` runs.
pub fn default_threshold() -> f64 {
    1e-12
}
