use crate::error::LinalgError;
use crate::linalg::DenseMatrix;

const MAX_SWEEPS: usize = 100;

/// Diagonalizes a real symmetric matrix with cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, eigenvectors)` where column `j` of the eigenvector
/// matrix pairs with `eigenvalues[j]`; the pairs are unsorted. Iteration
/// stops once the off-diagonal Frobenius mass drops below
/// `1e-13 * ||A||_F`, or fails after 100 sweeps.
pub fn jacobi_eigen(a: &DenseMatrix) -> Result<(Vec<f64>, DenseMatrix), LinalgError> {
    assert!(a.is_square(), "eigensolver needs a square matrix");
    let n = a.rows();
    let mut m = a.clone();
    let mut v = DenseMatrix::identity(n);
    if n <= 1 {
        return Ok(((0..n).map(|i| m[(i, i)]).collect(), v));
    }
    let threshold = 1e-13 * a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off += m[(p, q)] * m[(p, q)];
            }
        }
        if (2.0 * off).sqrt() <= threshold {
            return Ok(((0..n).map(|i| m[(i, i)]).collect(), v));
        }

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let tau = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                // smaller-magnitude root of t^2 + 2 tau t - 1 = 0
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                rotate_columns(&mut m, p, q, c, s);
                rotate_rows(&mut m, p, q, c, s);
                // clamp the annihilated pair against round-off
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                rotate_columns(&mut v, p, q, c, s);
            }
        }
    }
    Err(LinalgError::NoConvergence(MAX_SWEEPS))
}

fn rotate_columns(m: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..m.rows() {
        let kp = m[(k, p)];
        let kq = m[(k, q)];
        m[(k, p)] = c * kp - s * kq;
        m[(k, q)] = s * kp + c * kq;
    }
}

fn rotate_rows(m: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..m.cols() {
        let pk = m[(p, k)];
        let qk = m[(q, k)];
        m[(p, k)] = c * pk - s * qk;
        m[(q, k)] = s * pk + c * qk;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(values: &[f64], vectors: &DenseMatrix) -> DenseMatrix {
        let n = vectors.rows();
        DenseMatrix::from_fn(n, n, |r, c| {
            (0..n)
                .map(|j| values[j] * vectors[(r, j)] * vectors[(c, j)])
                .sum()
        })
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let a = DenseMatrix::from_rows(&[&[3.0, 0.0], &[0.0, -1.0]]);
        let (vals, vecs) = jacobi_eigen(&a).unwrap();
        let mut sorted = vals.clone();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(sorted, vec![-1.0, 3.0]);
        assert!(reconstruct(&vals, &vecs).max_abs_diff(&a) < 1e-14);
    }

    #[test]
    fn two_by_two_hand_spectrum() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let a = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let (vals, _) = jacobi_eigen(&a).unwrap();
        let mut sorted = vals;
        sorted.sort_by(f64::total_cmp);
        assert!((sorted[0] - 1.0).abs() < 1e-14);
        assert!((sorted[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn reconstruction_and_orthogonality_on_dense_symmetric() {
        let n = 12;
        let a = DenseMatrix::from_fn(n, n, |r, c| {
            let (lo, hi) = if r <= c { (r, c) } else { (c, r) };
            ((lo * 31 + hi * 7) as f64 * 0.13).sin()
        });
        let (vals, vecs) = jacobi_eigen(&a).unwrap();
        assert!(reconstruct(&vals, &vecs).max_abs_diff(&a) < 1e-12);
        let gram = &vecs.transpose() * &vecs;
        assert!(gram.max_abs_diff(&DenseMatrix::identity(n)) < 1e-12);
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        let a = DenseMatrix::from_rows(&[
            &[1.0, 2.0, 3.0],
            &[2.0, 3.0, 2.0],
            &[3.0, 2.0, 2.0],
        ]);
        let (vals, _) = jacobi_eigen(&a).unwrap();
        assert!((vals.iter().sum::<f64>() - a.trace()).abs() < 1e-12);
    }
}
