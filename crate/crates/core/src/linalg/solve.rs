use crate::error::LinalgError;
use crate::linalg::DenseMatrix;

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
///
/// The pivot tolerance is scaled to the largest entry of `A`, so an exactly
/// singular system is reported rather than amplified into garbage.
pub fn solve(a: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
    assert!(a.is_square(), "solve needs a square matrix");
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.rows();
    let mut m = a.clone();
    let mut x = b.to_vec();
    let tol = f64::EPSILON * a.max_abs().max(1.0) * n as f64;

    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, m[(r, col)]))
            .max_by(|(_, p), (_, q)| p.abs().total_cmp(&q.abs()))
            .expect("nonempty column");
        if pivot.abs() <= tol {
            return Err(LinalgError::Singular { column: col, pivot });
        }
        if pivot_row != col {
            for c in 0..n {
                let tmp = m[(col, c)];
                m[(col, c)] = m[(pivot_row, c)];
                m[(pivot_row, c)] = tmp;
            }
            x.swap(col, pivot_row);
        }
        for r in (col + 1)..n {
            let factor = m[(r, col)] / pivot;
            if factor == 0.0 {
                continue;
            }
            m[(r, col)] = 0.0;
            for c in (col + 1)..n {
                let delta = factor * m[(col, c)];
                m[(r, c)] -= delta;
            }
            x[r] -= factor * x[col];
        }
    }

    for col in (0..n).rev() {
        x[col] /= m[(col, col)];
        let xc = x[col];
        for r in 0..col {
            x[r] -= m[(r, col)] * xc;
        }
    }
    Ok(x)
}
