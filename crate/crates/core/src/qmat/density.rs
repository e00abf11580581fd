use super::{hermitian_eig, CMat, Mat4};
use crate::{Error, Result};

/// Hermitian, unit-trace, positive semidefinite 4×4 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix4(Mat4);

impl DensityMatrix4 {
    pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
    pub const TRACE_TOLERANCE: f64 = 1e-12;
    pub const PSD_TOLERANCE: f64 = 1e-10;

    /// Validates `m` as a two-qubit state.
    pub fn new(m: Mat4) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let dev = m.hermitian_deviation();
        if dev >= Self::HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian(dev));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() >= Self::TRACE_TOLERANCE || tr.im.abs() >= Self::TRACE_TOLERANCE {
            return Err(Error::InvalidTrace(tr.re));
        }
        let min = hermitian_eig(&m)?.eigenvalues[0];
        if min < -Self::PSD_TOLERANCE {
            return Err(Error::NotPositive(min));
        }
        Ok(DensityMatrix4(m))
    }

    /// Maximally mixed state `I/4`.
    pub fn maximally_mixed() -> Self {
        DensityMatrix4(Mat4::identity().scale(0.25))
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat4 {
        self.0
    }

    /// `Tr[ρ²]`.
    pub fn purity(&self) -> f64 {
        (self.0 * self.0).trace().re
    }
}

impl AsRef<Mat4> for DensityMatrix4 {
    fn as_ref(&self) -> &Mat4 {
        &self.0
    }
}

/// Negative part `A_- = Σ_{λ<0} |λ| |v⟩⟨v|`, stored as a positive operator.
///
/// With this sign convention `‖A‖₁ = Tr[A] + 2·Tr[A_-]` for Hermitian `A`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegativePart {
    pub operator: Mat4,
    pub trace: f64,
}

impl NegativePart {
    pub fn is_zero(&self) -> bool {
        self.trace == 0.0
    }
}

pub fn negative_part(a: &Mat4) -> Result<NegativePart> {
    Ok(hermitian_eig(a)?.negative_part())
}

/// `Σ |λ_i|` for Hermitian `a`.
pub fn trace_norm(a: &Mat4) -> Result<f64> {
    Ok(hermitian_eig(a)?.trace_norm())
}

impl From<DensityMatrix4> for CMat<4> {
    fn from(rho: DensityMatrix4) -> Self {
        rho.0
    }
}
