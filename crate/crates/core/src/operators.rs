//! The linear operators of the walk: local coin, adjacency and incidence
//! matrices, the shift, the truncated arc-space evolution, and the
//! doubled vertex-space evolution it intertwines with.
//!
//! Everything here is real-valued: with the Grover coin and a constant
//! unit inflow the amplitudes never leave the real line.

use crate::error::OperatorError;
use crate::graph::Digraph;
use crate::linalg::{self, DenseMatrix};

/// Maximum |a_ij - a_ji| accepted by the eigendecomposition.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Relative gap under which two computed eigenvalues are treated as one.
pub const EIGENVALUE_GROUPING_TOLERANCE: f64 = 1e-8;

/// The `d`-dimensional Grover coin `(2/d) J - I`.
///
/// Symmetric and orthogonal, hence its own inverse. The off-diagonal
/// entries `2/d` are the transmitting amplitudes, the diagonal `2/d - 1`
/// the reflecting amplitude; at `d = 2` the diagonal vanishes, which is
/// what makes the dynamics on tail vertices free.
pub fn grover_coin(d: usize) -> Result<DenseMatrix, OperatorError> {
    if d == 0 {
        return Err(OperatorError::ZeroCoinDimension);
    }
    let off = 2.0 / d as f64;
    Ok(DenseMatrix::from_fn(d, d, |r, c| {
        if r == c {
            off - 1.0
        } else {
            off
        }
    }))
}

/// The 0/1 adjacency matrix of the internal graph.
pub fn adjacency_matrix(g: &Digraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut m = DenseMatrix::zeros(n, n);
    for a in g.arcs() {
        m[(a.terminal, a.origin)] = 1.0;
    }
    m
}

/// The weighted incidence map from arc space to vertex space: entry
/// `(u, a)` is `1/sqrt(kappa + 1)` when arc `a` terminates at `u`.
///
/// The weight presumes a `kappa`-regular graph; non-regular graphs are
/// rejected.
pub fn incidence_map(g: &Digraph) -> Result<DenseMatrix, OperatorError> {
    let kappa = g.is_regular().ok_or(OperatorError::RegularityRequired)?;
    let w = 1.0 / ((kappa + 1) as f64).sqrt();
    let mut k = DenseMatrix::zeros(g.vertex_count(), g.arc_count());
    for (i, a) in g.arcs().iter().enumerate() {
        k[(a.terminal, i)] = w;
    }
    Ok(k)
}

/// The arc-inversion permutation matrix: `(S psi)(a) = psi(a-bar)`.
pub fn shift_operator(g: &Digraph) -> DenseMatrix {
    let m = g.arc_count();
    let mut s = DenseMatrix::zeros(m, m);
    for i in 0..m {
        s[(i, g.inverse(i))] = 1.0;
    }
    s
}

/// The evolution restricted to the internal arcs.
///
/// Entry `(a, b)` is `2/(d(o(a)) + 1) - [b = a-bar]` when arc `b` feeds the
/// origin of `a`, else 0. The `+1` in the denominator accounts for the tail
/// attached to each vertex; the tail column itself is truncated away, which
/// is what makes the operator a strict contraction.
pub fn truncated_evolution(g: &Digraph) -> DenseMatrix {
    let m = g.arc_count();
    let mut e = DenseMatrix::zeros(m, m);
    for (row, a) in g.arcs().iter().enumerate() {
        let coeff = 2.0 / g.augmented_degree(a.origin) as f64;
        for (col, b) in g.arcs().iter().enumerate() {
            if b.terminal == a.origin {
                e[(row, col)] = coeff;
            }
        }
        let inv = g.inverse(row);
        e[(row, inv)] -= 1.0;
    }
    e
}

/// The `|A| x 2N` map whose left block is the incidence transpose and whose
/// right block is its shift: it carries the doubled vertex-space evolution
/// to the arc-space evolution.
pub fn intertwining_map(g: &Digraph) -> Result<DenseMatrix, OperatorError> {
    let kappa = g.is_regular().ok_or(OperatorError::RegularityRequired)?;
    let n = g.vertex_count();
    let w = 1.0 / ((kappa + 1) as f64).sqrt();
    let mut l = DenseMatrix::zeros(g.arc_count(), 2 * n);
    for (i, a) in g.arcs().iter().enumerate() {
        l[(i, a.terminal)] = w;
        l[(i, n + a.origin)] = w;
    }
    Ok(l)
}

/// The `2N x 2N` evolution on the doubled vertex space,
/// `[[0, -I], [(kappa-1)/(kappa+1) I, 2/(kappa+1) M]]`,
/// where `M` is the adjacency matrix.
pub fn adjacency_evolution(g: &Digraph) -> Result<DenseMatrix, OperatorError> {
    let kappa = g.is_regular().ok_or(OperatorError::RegularityRequired)? as f64;
    let n = g.vertex_count();
    let m = adjacency_matrix(g);
    let mut e = DenseMatrix::zeros(2 * n, 2 * n);
    for u in 0..n {
        e[(u, n + u)] = -1.0;
        e[(n + u, u)] = (kappa - 1.0) / (kappa + 1.0);
        for v in 0..n {
            e[(n + u, n + v)] = 2.0 / (kappa + 1.0) * m[(u, v)];
        }
    }
    Ok(e)
}

/// The 2x2 block attached to an adjacency eigenvalue `lambda` in the
/// doubled-space decomposition:
/// `[[0, -1], [(kappa-1)/(kappa+1), 2 lambda/(kappa+1)]]`.
pub fn spectral_block(kappa: usize, lambda: f64) -> DenseMatrix {
    debug_assert!(kappa >= 1);
    debug_assert!(lambda.abs() <= kappa as f64 + 1e-9);
    let k = kappa as f64;
    DenseMatrix::from_rows(&[
        &[0.0, -1.0],
        &[(k - 1.0) / (k + 1.0), 2.0 * lambda / (k + 1.0)],
    ])
}

/// Eigenprojections of the principal block (the one at `lambda = kappa`),
/// whose eigenvalues are 1 and `(kappa-1)/(kappa+1)`:
///
/// ```text
/// Q1 = 1/2 [[-(k-1), -(k+1)], [k-1, k+1]]
/// Q2 = 1/2 [[k+1, k+1], [-(k-1), -(k-1)]]
/// ```
///
/// The pair `(Q1)_{0,1} + (Q1)_{1,1}` cancels exactly, which is what keeps
/// the linear-in-t term out of the amplitude evolution. `kappa = 1` is
/// rejected: the second eigenvalue collapses to 0 there and the projection
/// pair degenerates.
pub fn principal_block_projections(
    kappa: usize,
) -> Result<(DenseMatrix, DenseMatrix), OperatorError> {
    if kappa < 2 {
        return Err(OperatorError::DegenerateKappa);
    }
    let k = kappa as f64;
    let q1 = DenseMatrix::from_rows(&[
        &[-(k - 1.0) / 2.0, -(k + 1.0) / 2.0],
        &[(k - 1.0) / 2.0, (k + 1.0) / 2.0],
    ]);
    let q2 = DenseMatrix::from_rows(&[
        &[(k + 1.0) / 2.0, (k + 1.0) / 2.0],
        &[-(k - 1.0) / 2.0, -(k - 1.0) / 2.0],
    ]);
    Ok((q1, q2))
}

/// Spectral decomposition of a real symmetric matrix: distinct eigenvalues
/// in descending order with their orthogonal eigenprojections.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    projections: Vec<DenseMatrix>,
}

impl SpectralDecomposition {
    /// Distinct eigenvalues, largest first.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn projections(&self) -> &[DenseMatrix] {
        &self.projections
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Rebuilds the matrix as the eigenvalue-weighted sum of projections.
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.projections[0].rows();
        let mut out = DenseMatrix::zeros(n, n);
        for (value, p) in self.eigenvalues.iter().zip(&self.projections) {
            out = &out + &p.scale(*value);
        }
        out
    }
}

/// Diagonalizes a symmetric matrix and groups nearly-equal eigenvalues
/// into shared projections.
///
/// Grouping uses a relative tolerance so that spectra with exact
/// multiplicities (circulants, complete graphs) are not split by
/// round-off.
pub fn symmetric_eigendecomposition(
    a: &DenseMatrix,
) -> Result<SpectralDecomposition, OperatorError> {
    let defect = a.symmetry_defect();
    if defect > SYMMETRY_TOLERANCE {
        return Err(OperatorError::NotSymmetric(defect));
    }
    let (values, vectors) = linalg::jacobi_eigen(a)?;
    let n = a.rows();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));

    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let gap = EIGENVALUE_GROUPING_TOLERANCE * scale;

    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut projections = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i;
        // group indices whose eigenvalues sit within the gap of the leader
        while j + 1 < n && (values[order[i]] - values[order[j + 1]]).abs() <= gap {
            j += 1;
        }
        let group = &order[i..=j];
        let mean = group.iter().map(|&idx| values[idx]).sum::<f64>() / group.len() as f64;
        let mut p = DenseMatrix::zeros(n, n);
        for &idx in group {
            for r in 0..n {
                let vr = vectors[(r, idx)];
                if vr == 0.0 {
                    continue;
                }
                for c in 0..n {
                    p[(r, c)] += vr * vectors[(c, idx)];
                }
            }
        }
        eigenvalues.push(mean);
        multiplicities.push(group.len());
        projections.push(p);
        i = j + 1;
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        multiplicities,
        projections,
    })
}
