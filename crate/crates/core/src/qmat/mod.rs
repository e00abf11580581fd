//! Exact-shape complex matrix algebra for one- and two-qubit operators.
//!
//! Two-qubit operators use the computational basis `|00⟩, |01⟩, |10⟩, |11⟩`,
//! i.e. the row index of `|ab⟩` is `2a + b` with `a` the first qubit (A).

mod density;
mod eig;

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

pub use density::{negative_part, trace_norm, DensityMatrix4, NegativePart};
pub use eig::{
    hermitian_eig, hermitian_eig_with_tolerance, SpectralDecomposition, EIG_TOLERANCE,
    HERMITIAN_TOLERANCE,
};

/// Eigenvalues below this count as negative when forming negative parts.
pub const NEGATIVE_EIGENVALUE_THRESHOLD: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense row-major `N×N` complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat<const N: usize>(pub [[Complex64; N]; N]);

pub type Mat2 = CMat<2>;
pub type Mat4 = CMat<4>;

impl<const N: usize> Default for CMat<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> CMat<N> {
    pub const fn zeros() -> Self {
        CMat([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(|i, j| Complex64::new(rows[i][j], 0.0))
    }

    pub fn diag(d: [f64; N]) -> Self {
        Self::from_fn(|i, j| if i == j { Complex64::new(d[i], 0.0) } else { ZERO })
    }

    /// `|v⟩⟨v|`.
    pub fn outer(v: &[Complex64; N]) -> Self {
        Self::from_fn(|i, j| v[i] * v[j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    /// `A·B·A†`.
    pub fn conjugate_by(&self, a: &Self) -> Self {
        *a * *self * a.adjoint()
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `max_ij |A_ij - B_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// `max_ij |A_ij - conj(A_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// `(A + A†)/2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(|i, j| (self.0[i][j] + self.0[j][i].conj()) * 0.5)
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.0.iter().flatten().map(|z| z.norm_sqr()).sum())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn mul_vec(&self, v: &[Complex64; N]) -> [Complex64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }

    pub fn column(&self, j: usize) -> [Complex64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i][j];
        }
        out
    }
}

impl<const N: usize> Index<(usize, usize)> for CMat<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for CMat<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> Sub for CMat<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<const N: usize> Neg for CMat<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.0[i][j])
    }
}

impl<const N: usize> Mul for CMat<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

/// Pauli matrices `σ₁, σ₂, σ₃`.
pub fn pauli() -> [Mat2; 3] {
    let i = Complex64::new(0.0, 1.0);
    [
        CMat([[ZERO, ONE], [ONE, ZERO]]),
        CMat([[ZERO, -i], [i, ZERO]]),
        CMat([[ONE, ZERO], [ZERO, -ONE]]),
    ]
}

/// Kronecker product, `(a⊗b)[2i+k][2j+l] = a[i][j]·b[k][l]`.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a.0[r / 2][c / 2] * b.0[r % 2][c % 2])
}

/// Tensor factor of a two-qubit operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

/// Transposes the indices of one tensor factor.
///
/// For `B`: `ρ^Γ[(i,k),(j,l)] = ρ[(i,l),(j,k)]`. The map is an involution and
/// only moves entries, so a double application returns the input bit-exactly.
pub fn partial_transpose(rho: &Mat4, subsystem: Subsystem) -> Mat4 {
    Mat4::from_fn(|r, c| {
        let (i, k) = (r / 2, r % 2);
        let (j, l) = (c / 2, c % 2);
        match subsystem {
            Subsystem::A => rho.0[2 * j + k][2 * i + l],
            Subsystem::B => rho.0[2 * i + l][2 * j + k],
        }
    })
}

/// Exchanges the two qubits, `|ab⟩ → |ba⟩`.
pub fn swap_qubits(rho: &Mat4) -> Mat4 {
    const PERM: [usize; 4] = [0, 2, 1, 3];
    Mat4::from_fn(|r, c| rho.0[PERM[r]][PERM[c]])
}
