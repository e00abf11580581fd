use thiserror::Error;

/// Errors raised by state validation and the spectral routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has a non-finite entry")]
    NonFinite,

    #[error("matrix is not Hermitian (max |A - A†| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is {0}, expected 1")]
    InvalidTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("parameter `{name}` = {value} is out of range")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("Jacobi iteration did not converge (off-diagonal norm {0:e})")]
    NoConvergence(f64),

    #[error("partial transpose has no negative eigenvalue (state is PPT)")]
    NoNegativeEigenvalue,

    #[error("partial transpose has {0} negative eigenvalues, expected exactly one")]
    MultipleNegativeEigenvalues(usize),

    #[error("negativity forms disagree: 2 Tr[A_-] = {twice_negative_trace}, ||A||_1 - 1 = {trace_norm_minus_one}")]
    InconsistentNegativity {
        twice_negative_trace: f64,
        trace_norm_minus_one: f64,
    },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(name: &'static str, value: f64) -> Self {
        Error::InvalidParameter { name, value }
    }
}
