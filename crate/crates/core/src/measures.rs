//! Concurrence, negativity and binegativity of two-qubit states.
//!
//! All three vanish exactly on PPT (equivalently, separable) two-qubit states
//! and satisfy `N₂ ≤ N ≤ C`.

use num_complex::Complex64;

use crate::qmat::{
    hermitian_eig, partial_transpose, CMat, DensityMatrix4, Mat4, SpectralDecomposition, Subsystem,
};
use crate::{Error, Result};

/// Largest accepted gap between `2·Tr[ρ^Γ_-]` and `‖ρ^Γ‖₁ − 1`.
pub const NEGATIVITY_CONSISTENCY_TOLERANCE: f64 = 1e-10;

/// Negativities below this are treated as zero (no negative eigenvector is extracted).
pub const SEPARABLE_NEGATIVITY: f64 = 1e-10;

/// Concurrence, negativity and binegativity of one state.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MeasureTriple {
    pub concurrence: f64,
    pub negativity: f64,
    pub binegativity: f64,
}

impl MeasureTriple {
    pub fn new(concurrence: f64, negativity: f64, binegativity: f64) -> Self {
        MeasureTriple {
            concurrence,
            negativity,
            binegativity,
        }
    }

    /// All three measures equal to `value`.
    pub fn uniform(value: f64) -> Self {
        Self::new(value, value, value)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.concurrence, self.negativity, self.binegativity]
    }

    /// Largest componentwise absolute difference.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Whether `N₂ ≤ N ≤ C` holds up to `tol`.
    pub fn is_ordered(&self, tol: f64) -> bool {
        self.binegativity <= self.negativity + tol && self.negativity <= self.concurrence + tol
    }
}

/// Pure state `ρ_ψ` built from the negative eigenvector of `ρ^Γ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegativeEigenstate {
    pub state: DensityMatrix4,
    pub vector: [Complex64; 4],
    pub negative_eigenvalue_magnitude: f64,
}

fn pt_spectrum(rho: &Mat4) -> Result<SpectralDecomposition> {
    hermitian_eig(&partial_transpose(rho, Subsystem::B))
}

fn negativity_of(rho: &Mat4) -> Result<f64> {
    let eig = pt_spectrum(rho)?;
    let neg = eig.negative_part();
    let twice_negative_trace = 2.0 * neg.trace;
    let trace_norm_minus_one = eig.trace_norm() - 1.0;
    if (twice_negative_trace - trace_norm_minus_one).abs() >= NEGATIVITY_CONSISTENCY_TOLERANCE {
        return Err(Error::InconsistentNegativity {
            twice_negative_trace,
            trace_norm_minus_one,
        });
    }
    Ok(twice_negative_trace)
}

/// `N(ρ) = 2·Tr[ρ^Γ_-]`, checked against `‖ρ^Γ‖₁ − 1`.
pub fn negativity(rho: &DensityMatrix4) -> Result<f64> {
    negativity_of(rho.matrix())
}

/// `σ_y⊗σ_y`, which is real: `-1` on the anti-diagonal corners, `+1` in the middle.
fn spin_flip() -> Mat4 {
    Mat4::from_real([
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ])
}

/// Wootters concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)`.
///
/// The `λ_i` are the singular values of `τ = Wᵀ(σ_y⊗σ_y)W` for any factorization
/// `ρ = WW†`. They are read off as the positive eigenvalues of the Hermitian
/// dilation `[[0, τ], [τ†, 0]]`, which resolves small `λ_i` to absolute precision
/// instead of the square-root precision of `√eig(ρρ̃)`.
pub fn concurrence(rho: &DensityMatrix4) -> Result<f64> {
    let eig = hermitian_eig(rho.matrix())?;
    let mut w = Mat4::zeros();
    for k in 0..4 {
        let s = libm::sqrt(eig.eigenvalues[k].max(0.0));
        for i in 0..4 {
            w[(i, k)] = eig.eigenvectors[(i, k)] * s;
        }
    }
    let tau = w.transpose() * spin_flip() * w;
    let dilation = CMat::<8>::from_fn(|i, j| match (i < 4, j < 4) {
        (true, false) => tau[(i, j - 4)],
        (false, true) => tau[(j, i - 4)].conj(),
        _ => Complex64::new(0.0, 0.0),
    });
    let sv = hermitian_eig(&dilation)?.eigenvalues;
    let c = sv[7] - sv[6] - sv[5] - sv[4];
    Ok(c.clamp(0.0, 1.0))
}

/// `N₂ = Tr[ρ^Γ_-] + 2·Tr[((ρ^Γ_-)^Γ)_-]`, evaluated spectrally.
pub fn binegativity_spectral(rho: &DensityMatrix4) -> Result<f64> {
    let first = pt_spectrum(rho.matrix())?.negative_part();
    if first.is_zero() {
        return Ok(0.0);
    }
    let second = pt_spectrum(&first.operator)?.negative_part();
    Ok(first.trace + 2.0 * second.trace)
}

/// The pure state on the unique negative eigenvector of `ρ^Γ`.
pub fn negative_eigvec_state(rho: &DensityMatrix4) -> Result<NegativeEigenstate> {
    let eig = pt_spectrum(rho.matrix())?;
    let negativity = 2.0 * eig.negative_part().trace;
    match eig.negative_count() {
        0 => return Err(Error::NoNegativeEigenvalue),
        1 => {}
        n => return Err(Error::MultipleNegativeEigenvalues(n)),
    }
    if negativity < SEPARABLE_NEGATIVITY {
        return Err(Error::NoNegativeEigenvalue);
    }
    // ascending order: the negative eigenvalue is the first
    let vector = eig.eigenvector(0);
    Ok(NegativeEigenstate {
        state: DensityMatrix4::new(Mat4::outer(&vector))?,
        vector,
        negative_eigenvalue_magnitude: -eig.eigenvalues[0],
    })
}

/// `N₂ = ½·N(ρ)·[1 + N(ρ_ψ)]` with `ρ_ψ` from [`negative_eigvec_state`].
pub fn binegativity_closed(rho: &DensityMatrix4) -> Result<f64> {
    let n = negativity(rho)?;
    if n < SEPARABLE_NEGATIVITY {
        return Ok(0.0);
    }
    let psi = negative_eigvec_state(rho)?;
    Ok(0.5 * n * (1.0 + negativity(&psi.state)?))
}

/// Spectral `(C, N, N₂)`.
pub fn measure_triple(rho: &DensityMatrix4) -> Result<MeasureTriple> {
    Ok(MeasureTriple {
        concurrence: concurrence(rho)?,
        negativity: negativity(rho)?,
        binegativity: binegativity_spectral(rho)?,
    })
}

/// Two-qubit state supported on the diagonal and anti-diagonal:
///
/// ```text
/// ⎡ a  0  0  e ⎤
/// ⎢ 0  b  c  0 ⎥
/// ⎢ 0  c* b  0 ⎥
/// ⎣ e* 0  0  d ⎦
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XState {
    pub a: f64,
    pub b: f64,
    pub c: Complex64,
    pub d: f64,
    pub e: Complex64,
}

impl XState {
    pub fn matrix(&self) -> Mat4 {
        let mut m = Mat4::diag([self.a, self.b, self.b, self.d]);
        m[(0, 3)] = self.e;
        m[(3, 0)] = self.e.conj();
        m[(1, 2)] = self.c;
        m[(2, 1)] = self.c.conj();
        m
    }
}

/// Closed-form `(C, N, N₂)` of an [`XState`].
///
/// With `θ = √((a−d)² + 4|c|²)`, the only possible negative eigenvalue of `ρ^Γ`
/// is `(a+d−θ)/2` or `b − |e|`; the first branch gives
/// `N₂ = N/2·(1 + 2|c|/θ)` and the second `N₂ = N`.
pub fn xstate_measures(x: &XState) -> Result<MeasureTriple> {
    DensityMatrix4::new(x.matrix())?;
    let (a, b, d) = (x.a, x.b, x.d);
    let (c, e) = (x.c.norm(), x.e.norm());

    let concurrence = 2.0 * (c - libm::sqrt(a * d)).max(e - b).max(0.0);
    let theta = libm::sqrt((a - d) * (a - d) + 4.0 * c * c);
    let (negativity, binegativity) = if a + d < theta {
        let n = theta - (a + d);
        (n, 0.5 * n * (1.0 + 2.0 * c / theta))
    } else if b < e {
        let n = 2.0 * (e - b);
        (n, n)
    } else {
        (0.0, 0.0)
    };
    Ok(MeasureTriple {
        concurrence,
        negativity,
        binegativity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{EwParams, WernerParams};

    fn pure(v: [f64; 4]) -> DensityMatrix4 {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        DensityMatrix4::new(Mat4::outer(&v.map(|x| Complex64::new(x / n, 0.0)))).unwrap()
    }

    fn singlet() -> DensityMatrix4 {
        pure([0.0, 1.0, -1.0, 0.0])
    }

    #[test]
    fn singlet_is_maximally_entangled() {
        let m = measure_triple(&singlet()).unwrap();
        assert!((m.concurrence - 1.0).abs() < 1e-12);
        assert!((m.negativity - 1.0).abs() < 1e-12);
        assert!((m.binegativity - 1.0).abs() < 1e-12);
        assert!((binegativity_closed(&singlet()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_has_zero_measures() {
        let rho = pure([1.0, 0.0, 0.0, 0.0]);
        assert_eq!(measure_triple(&rho).unwrap(), MeasureTriple::default());
        assert_eq!(binegativity_closed(&rho).unwrap(), 0.0);
        assert_eq!(negative_eigvec_state(&rho), Err(Error::NoNegativeEigenvalue));
    }

    #[test]
    fn werner_half_has_negativity_quarter() {
        let rho = WernerParams::new(0.5).unwrap().density();
        assert!((negativity(&rho).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn werner_two_thirds_binegativity_half() {
        let rho = WernerParams::new(2.0 / 3.0).unwrap().density();
        assert!((binegativity_spectral(&rho).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn werner_negative_eigvec_is_singlet() {
        let rho = WernerParams::new(0.9).unwrap().density();
        let psi = negative_eigvec_state(&rho).unwrap();
        // ρ^Γ of the singlet has |φ⁺⟩ as its negative eigenvector
        let phi_plus = pure([1.0, 0.0, 0.0, 1.0]);
        assert!(psi.state.matrix().max_abs_diff(phi_plus.matrix()) < 1e-12);
        assert!((negativity(&psi.state).unwrap() - 1.0).abs() < 1e-12);
        let n = negativity(&rho).unwrap();
        assert!((psi.negative_eigenvalue_magnitude - n / 2.0).abs() < 1e-12);
        assert!((psi.state.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pure_ew_concurrence_matches_two_alpha_beta() {
        // 2|αβ| with α = 0.4, β = √0.84
        let rho = EwParams::new(1.0, Complex64::new(0.4, 0.0)).unwrap().density();
        let c = concurrence(&rho).unwrap();
        assert!((c - 0.733_212_111_192_934_4).abs() < 1e-12, "{c}");
    }

    #[test]
    fn xstate_diagonal_is_separable() {
        let x = XState {
            a: 0.1,
            b: 0.3,
            c: Complex64::new(0.0, 0.0),
            d: 0.3,
            e: Complex64::new(0.0, 0.0),
        };
        assert_eq!(xstate_measures(&x).unwrap(), MeasureTriple::default());
    }

    #[test]
    fn xstate_inner_branch_has_equal_negativities() {
        let x = XState {
            a: 0.4,
            b: 0.05,
            c: Complex64::new(0.0, 0.0),
            d: 0.5,
            e: Complex64::new(0.3, 0.2),
        };
        let m = xstate_measures(&x).unwrap();
        assert!(m.negativity > 0.0);
        assert_eq!(m.negativity, m.binegativity);
        let spectral = measure_triple(&DensityMatrix4::new(x.matrix()).unwrap()).unwrap();
        assert!(m.max_deviation(&spectral) < 1e-10);
    }

    #[test]
    fn xstate_quarter_middle_block_matches_spectral() {
        // a = d = b = c = 1/4: rank-deficient, right on the entanglement boundary
        let x = XState {
            a: 0.25,
            b: 0.25,
            c: Complex64::new(0.25, 0.0),
            d: 0.25,
            e: Complex64::new(0.0, 0.0),
        };
        let m = xstate_measures(&x).unwrap();
        let spectral = measure_triple(&DensityMatrix4::new(x.matrix()).unwrap()).unwrap();
        assert!(m.max_deviation(&spectral) < 1e-10, "{m:?} vs {spectral:?}");
        assert!(m.concurrence.abs() < 1e-12);
    }

    #[test]
    fn xstate_rejects_invalid_matrix() {
        let x = XState {
            a: 0.25,
            b: 0.25,
            c: Complex64::new(0.5, 0.0),
            d: 0.25,
            e: Complex64::new(0.0, 0.0),
        };
        assert!(matches!(xstate_measures(&x), Err(Error::NotPositive(_))));
    }
}
