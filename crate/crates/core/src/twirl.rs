//! Haar `U⊗U` twirling and the binegativity monotonicity experiment.
//!
//! Twirling averages `(U⊗U)ρ(U⊗U)†` over the Haar measure. The result is the
//! Werner state with the same singlet fidelity `F = ⟨ψ⁻|ρ|ψ⁻⟩`, i.e. Werner
//! parameter `p = (4F − 1)/3 ∈ [−1/3, 1]`. [`analytic_twirl`] computes that
//! projection exactly and serves as the reference for [`mc_twirl`].

use num_complex::Complex64;
use rand::Rng;

use crate::measures::{binegativity_spectral, measure_triple, negativity, MeasureTriple};
use crate::qmat::{kron, CMat, DensityMatrix4, Mat2, Mat4};
use crate::sample::{complex_normal, ginibre_state, substream};
use crate::states::{singlet, werner_matrix};
use crate::{Error, Result};

/// Margin by which a twirled measure may exceed its input before it counts as a violation.
pub const MONOTONICITY_TOLERANCE: f64 = 1e-9;

/// Minimum negativity of states admitted into the experiment.
pub const ENTANGLED_NEGATIVITY: f64 = 1e-6;

/// Haar-random 2×2 unitary.
///
/// Gram–Schmidt on the columns of a complex Gaussian matrix, i.e. the `Q` of a
/// QR factorization whose `R` has a positive real diagonal.
pub fn haar_unitary_2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    loop {
        let g = [
            [complex_normal(rng), complex_normal(rng)],
            [complex_normal(rng), complex_normal(rng)],
        ];
        let c0 = [g[0][0], g[1][0]];
        let n0 = libm::sqrt(c0[0].norm_sqr() + c0[1].norm_sqr());
        if n0 < 1e-150 {
            continue;
        }
        let q0 = [c0[0] / n0, c0[1] / n0];
        let c1 = [g[0][1], g[1][1]];
        let proj = q0[0].conj() * c1[0] + q0[1].conj() * c1[1];
        let w = [c1[0] - q0[0] * proj, c1[1] - q0[1] * proj];
        let n1 = libm::sqrt(w[0].norm_sqr() + w[1].norm_sqr());
        if n1 < 1e-150 {
            continue;
        }
        let q1 = [w[0] / n1, w[1] / n1];
        return CMat([[q0[0], q1[0]], [q0[1], q1[1]]]);
    }
}

/// `⟨ψ⁻|ρ|ψ⁻⟩`.
pub fn singlet_fidelity(rho: &Mat4) -> f64 {
    (singlet() * *rho).trace().re
}

/// Monte-Carlo average of `(U⊗U)ρ(U⊗U)†` over `samples` Haar draws.
pub fn mc_twirl<R: Rng + ?Sized>(
    rho: &DensityMatrix4,
    samples: usize,
    rng: &mut R,
) -> Result<DensityMatrix4> {
    if samples == 0 {
        return Err(Error::param("samples", 0.0));
    }
    let mut acc = Mat4::zeros();
    for _ in 0..samples {
        let u = haar_unitary_2(rng);
        acc = acc + rho.matrix().conjugate_by(&kron(&u, &u));
    }
    DensityMatrix4::new(acc.scale(1.0 / samples as f64).hermitian_part())
}

/// Exact twirl: the Werner state with the singlet fidelity of `rho`, and its parameter.
pub fn analytic_twirl(rho: &DensityMatrix4) -> Result<(DensityMatrix4, f64)> {
    let p = (4.0 * singlet_fidelity(rho.matrix()) - 1.0) / 3.0;
    Ok((DensityMatrix4::new(werner_matrix(p))?, p))
}

/// Outcome of twirling one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwirlResult {
    pub input: MeasureTriple,
    pub output: MeasureTriple,
    pub werner_p: f64,
    pub mc_samples: usize,
    /// Max-entry distance between the Monte-Carlo and the analytic twirl.
    pub mc_deviation: f64,
}

impl TwirlResult {
    pub fn input_binegativity(&self) -> f64 {
        self.input.binegativity
    }

    pub fn output_binegativity(&self) -> f64 {
        self.output.binegativity
    }

    /// `N₂(out) − N₂(in)`; positive values mean the twirl increased `N₂`.
    pub fn binegativity_margin(&self) -> f64 {
        self.output.binegativity - self.input.binegativity
    }
}

/// Twirls `rho` analytically and, when `samples > 0`, by Monte-Carlo.
pub fn twirl_state<R: Rng + ?Sized>(
    rho: &DensityMatrix4,
    samples: usize,
    rng: &mut R,
) -> Result<TwirlResult> {
    let (out, werner_p) = analytic_twirl(rho)?;
    let mc_deviation = if samples > 0 {
        mc_twirl(rho, samples, rng)?.matrix().max_abs_diff(out.matrix())
    } else {
        0.0
    };
    Ok(TwirlResult {
        input: measure_triple(rho)?,
        output: measure_triple(&out)?,
        werner_p,
        mc_samples: samples,
        mc_deviation,
    })
}

/// Rejection-samples a Ginibre state with `N > ENTANGLED_NEGATIVITY`.
pub fn entangled_ginibre_state<R: Rng + ?Sized>(rng: &mut R) -> Result<DensityMatrix4> {
    loop {
        let rho = ginibre_state(rng);
        if negativity(&rho)? > ENTANGLED_NEGATIVITY {
            return Ok(rho);
        }
    }
}

/// State `index` of the experiment seeded with `seed`, twirled.
///
/// Each index draws from its own substream, so any subset of indices can be
/// evaluated independently and in any order.
pub fn experiment_trial(seed: u64, index: u64, samples: usize) -> Result<TwirlResult> {
    let mut rng = substream(seed, index);
    let rho = entangled_ginibre_state(&mut rng)?;
    twirl_state(&rho, samples, &mut rng)
}

/// Aggregate of the twirl monotonicity experiment.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MonotonicityReport {
    pub n_states: usize,
    pub samples_per_state: usize,
    /// `N₂(twirl(ρ)) > N₂(ρ) + MONOTONICITY_TOLERANCE`.
    pub binegativity_violations: usize,
    pub negativity_violations: usize,
    pub concurrence_violations: usize,
    /// Largest `N₂(out) − N₂(in)` seen (negative when every state strictly decreased).
    pub worst_margin: f64,
    pub max_mc_deviation: f64,
    pub mean_mc_deviation: f64,
}

impl MonotonicityReport {
    pub const ENSEMBLE: &'static str = "Ginibre (Hilbert-Schmidt), rejection-sampled to N > 1e-6";

    pub fn from_results<'a>(
        samples_per_state: usize,
        results: impl IntoIterator<Item = &'a TwirlResult>,
    ) -> Self {
        let mut report = MonotonicityReport {
            samples_per_state,
            worst_margin: f64::NEG_INFINITY,
            ..Default::default()
        };
        let mut dev_sum = 0.0;
        for r in results {
            report.n_states += 1;
            let tol = MONOTONICITY_TOLERANCE;
            if r.output.binegativity > r.input.binegativity + tol {
                report.binegativity_violations += 1;
            }
            if r.output.negativity > r.input.negativity + tol {
                report.negativity_violations += 1;
            }
            if r.output.concurrence > r.input.concurrence + tol {
                report.concurrence_violations += 1;
            }
            report.worst_margin = report.worst_margin.max(r.binegativity_margin());
            report.max_mc_deviation = report.max_mc_deviation.max(r.mc_deviation);
            dev_sum += r.mc_deviation;
        }
        if report.n_states == 0 {
            report.worst_margin = 0.0;
        } else {
            report.mean_mc_deviation = dev_sum / report.n_states as f64;
        }
        report
    }

    pub fn violations(&self) -> usize {
        self.binegativity_violations
    }
}

/// Compares `N₂(ρ)` with `N₂(twirl(ρ))` on `n_states` entangled Ginibre states.
pub fn monotonicity_experiment(
    n_states: usize,
    samples_per_state: usize,
    seed: u64,
) -> Result<MonotonicityReport> {
    let mut results = alloc::vec::Vec::with_capacity(n_states);
    for i in 0..n_states {
        results.push(experiment_trial(seed, i as u64, samples_per_state)?);
    }
    Ok(MonotonicityReport::from_results(samples_per_state, &results))
}

/// `N₂` of the analytic twirl output, `max(0, (3p−1)/2)`.
pub fn twirled_binegativity(rho: &DensityMatrix4) -> Result<f64> {
    let (out, _) = analytic_twirl(rho)?;
    binegativity_spectral(&out)
}

/// `max |U†U − I|`.
pub fn unitarity_error(u: &Mat2) -> f64 {
    (u.adjoint() * *u).max_abs_diff(&Mat2::identity())
}

pub fn det2(u: &Mat2) -> Complex64 {
    u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)]
}
