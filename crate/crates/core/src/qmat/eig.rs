//! Cyclic complex Jacobi eigensolver for small Hermitian matrices.

use num_complex::Complex64;

use super::{CMat, NegativePart, NEGATIVE_EIGENVALUE_THRESHOLD};
use crate::{Error, Result};

/// Largest `|A - A†|` entry accepted as Hermitian input.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Default stopping point: off-diagonal Frobenius norm relative to `‖A‖_F`.
pub const EIG_TOLERANCE: f64 = 1e-14;

const MAX_SWEEPS: usize = 64;

/// Real eigenvalues in ascending order with orthonormal eigenvectors as columns.
///
/// Each eigenvector's phase is fixed so that its largest-magnitude component is
/// real and positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralDecomposition<const N: usize = 4> {
    pub eigenvalues: [f64; N],
    pub eigenvectors: CMat<N>,
}

impl<const N: usize> SpectralDecomposition<N> {
    pub fn eigenvector(&self, k: usize) -> [Complex64; N] {
        self.eigenvectors.column(k)
    }

    /// `V·Λ·V†`.
    pub fn reconstruct(&self) -> CMat<N> {
        let v = &self.eigenvectors;
        CMat::from_fn(|i, j| {
            (0..N)
                .map(|k| v.0[i][k] * v.0[j][k].conj() * self.eigenvalues[k])
                .sum()
        })
    }

    /// `max |V†V - I|`.
    pub fn orthonormality_error(&self) -> f64 {
        (self.eigenvectors.adjoint() * self.eigenvectors).max_abs_diff(&CMat::identity())
    }

    /// `Σ |λ|`.
    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }

    pub fn negative_count(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&l| l < -NEGATIVE_EIGENVALUE_THRESHOLD)
            .count()
    }
}

impl SpectralDecomposition<4> {
    /// `Σ_{λ<0} |λ| |v⟩⟨v|`, counting only eigenvalues below the negativity threshold.
    pub fn negative_part(&self) -> NegativePart {
        let mut operator = CMat::zeros();
        let mut trace = 0.0;
        for (k, &l) in self.eigenvalues.iter().enumerate() {
            if l < -NEGATIVE_EIGENVALUE_THRESHOLD {
                operator = operator + CMat::outer(&self.eigenvector(k)).scale(-l);
                trace -= l;
            }
        }
        NegativePart { operator, trace }
    }
}

/// Eigendecomposition with the default convergence tolerance.
pub fn hermitian_eig<const N: usize>(a: &CMat<N>) -> Result<SpectralDecomposition<N>> {
    hermitian_eig_with_tolerance(a, EIG_TOLERANCE)
}

/// Eigendecomposition stopping once `off(A) ≤ tolerance·‖A‖_F`.
pub fn hermitian_eig_with_tolerance<const N: usize>(
    a: &CMat<N>,
    tolerance: f64,
) -> Result<SpectralDecomposition<N>> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let dev = a.hermitian_deviation();
    if dev >= HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian(dev));
    }

    let mut m = a.hermitian_part();
    for i in 0..N {
        m.0[i][i].im = 0.0;
    }
    let mut v = CMat::<N>::identity();
    let target = tolerance * m.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= target {
            converged = true;
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&m);
        if off > target {
            return Err(Error::NoConvergence(off));
        }
    }

    let mut order = [0usize; N];
    for (k, o) in order.iter_mut().enumerate() {
        *o = k;
    }
    order.sort_by(|&x, &y| m.0[x][x].re.total_cmp(&m.0[y][y].re));

    let mut eigenvalues = [0.0; N];
    let mut eigenvectors = CMat::<N>::zeros();
    for (dst, &src) in order.iter().enumerate() {
        eigenvalues[dst] = m.0[src][src].re;
        let mut col = v.column(src);
        fix_phase(&mut col);
        for (row, z) in eigenvectors.0.iter_mut().zip(col) {
            row[dst] = z;
        }
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm<const N: usize>(m: &CMat<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += m.0[i][j].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

/// Zeroes `m[p][q]` with `J = [[c, s·e^{iφ}], [-s·e^{-iφ}, c]]`, `m ← J†·m·J`, `v ← v·J`.
fn rotate<const N: usize>(m: &mut CMat<N>, v: &mut CMat<N>, p: usize, q: usize) {
    let apq = m.0[p][q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = m.0[p][p].re;
    let aqq = m.0[q][q].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    let s_fwd = phase * s; // s·e^{iφ}
    let s_bwd = phase.conj() * s; // s·e^{-iφ}

    // m·J on columns p, q
    for i in 0..N {
        let mp = m.0[i][p];
        let mq = m.0[i][q];
        m.0[i][p] = mp * c - mq * s_bwd;
        m.0[i][q] = mp * s_fwd + mq * c;
    }
    // J†·(m·J) on rows p, q
    for j in 0..N {
        let mp = m.0[p][j];
        let mq = m.0[q][j];
        m.0[p][j] = mp * c - mq * s_fwd;
        m.0[q][j] = mp * s_bwd + mq * c;
    }
    m.0[p][p] = Complex64::new(app - t * r, 0.0);
    m.0[q][q] = Complex64::new(aqq + t * r, 0.0);
    m.0[p][q] = Complex64::new(0.0, 0.0);
    m.0[q][p] = Complex64::new(0.0, 0.0);

    for i in 0..N {
        let vp = v.0[i][p];
        let vq = v.0[i][q];
        v.0[i][p] = vp * c - vq * s_bwd;
        v.0[i][q] = vp * s_fwd + vq * c;
    }
}

fn fix_phase<const N: usize>(col: &mut [Complex64; N]) {
    let mut best = 0;
    let mut best_norm = -1.0;
    for (k, z) in col.iter().enumerate() {
        let n = z.norm();
        if n > best_norm + 1e-12 {
            best = k;
            best_norm = n;
        }
    }
    if best_norm <= 0.0 {
        return;
    }
    let rot = col[best].conj() / best_norm;
    for z in col.iter_mut() {
        *z *= rot;
    }
    col[best] = Complex64::new(best_norm, 0.0);
}
