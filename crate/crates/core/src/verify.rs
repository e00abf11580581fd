//! Self-check suites run by the `verify` command.
//!
//! Each suite is a reduced-size version of an invariant that the test suite
//! checks at full size. Suites are independent and deterministic, so callers
//! may run them in parallel.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::channels::{evaluate, standard_configs, ChannelConfig, Formulas, Sidedness};
use crate::measures::{
    binegativity_closed, binegativity_spectral, measure_triple, xstate_measures, MeasureTriple,
};
use crate::qmat::{
    hermitian_eig, hermitian_eig_with_tolerance, kron, partial_transpose, DensityMatrix4, Mat2,
    Subsystem, EIG_TOLERANCE,
};
use crate::sample::{
    ginibre, ginibre_state, haar_pure_state, random_hermitian, random_xstate, substream,
};
use crate::states::{BellDiagonalParams, EwParams, GMemParams, MemParams, WernerParams};
use crate::twirl::{analytic_twirl, mc_twirl, monotonicity_experiment};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Closed forms used by the channel-oracle suite.
    pub formulas: Formulas,
    /// Eigensolver tolerance used by the reconstruction suite.
    pub eig_tolerance: f64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            formulas: Formulas::Corrected,
            eig_tolerance: EIG_TOLERANCE,
            seed: 20_190_101,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const SUITES: [&str; 9] = [
    "qmat-identities",
    "eigen-reconstruction",
    "lemma-equivalence",
    "ordering",
    "family-closed-forms",
    "xstate-formulas",
    "channel-oracle",
    "monotone-decay",
    "twirl-monotonicity",
];

pub fn run_suite(name: &str, opts: &VerifyOptions) -> SuiteOutcome {
    let result = match name {
        "qmat-identities" => qmat_identities(opts),
        "eigen-reconstruction" => eigen_reconstruction(opts),
        "lemma-equivalence" => lemma_equivalence(opts),
        "ordering" => ordering(opts),
        "family-closed-forms" => family_closed_forms(),
        "xstate-formulas" => xstate_formulas(opts),
        "channel-oracle" => channel_oracle(opts),
        "monotone-decay" => monotone_decay(),
        "twirl-monotonicity" => twirl_monotonicity(opts),
        _ => Ok((false, format!("unknown suite `{name}`"))),
    };
    let name = SUITES.iter().copied().find(|s| *s == name).unwrap_or("unknown");
    match result {
        Ok((passed, detail)) => SuiteOutcome {
            name,
            passed,
            detail,
        },
        Err(e) => SuiteOutcome {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteOutcome> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

type Check = Result<(bool, String)>;

fn qmat_identities(opts: &VerifyOptions) -> Check {
    let mut rng = substream(opts.seed, 1);
    let (mut norm_gap, mut pt_gap, mut kron_gap) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..2000 {
        let a = random_hermitian(&mut rng);
        let eig = hermitian_eig(&a)?;
        let identity = a.trace().re + 2.0 * eig.negative_part().trace;
        norm_gap = norm_gap.max((eig.trace_norm() - identity).abs());

        let pt = partial_transpose(&a, Subsystem::B);
        pt_gap = pt_gap
            .max(partial_transpose(&pt, Subsystem::B).max_abs_diff(&a))
            .max(pt.hermitian_deviation())
            .max((pt.trace() - a.trace()).norm());

        let m: [Mat2; 4] = [ginibre(&mut rng), ginibre(&mut rng), ginibre(&mut rng), ginibre(&mut rng)];
        let lhs = kron(&m[0], &m[1]) * kron(&m[2], &m[3]);
        let rhs = kron(&(m[0] * m[2]), &(m[1] * m[3]));
        kron_gap = kron_gap.max(lhs.max_abs_diff(&rhs));
    }
    Ok((
        norm_gap < 1e-10 && pt_gap == 0.0 && kron_gap < 1e-12,
        format!("trace-norm identity {norm_gap:.2e}, partial transpose {pt_gap:.2e}, kron {kron_gap:.2e}"),
    ))
}

fn eigen_reconstruction(opts: &VerifyOptions) -> Check {
    let mut rng = substream(opts.seed, 2);
    let (mut recon, mut ortho) = (0.0f64, 0.0f64);
    for _ in 0..2000 {
        let a = random_hermitian(&mut rng);
        let eig = hermitian_eig_with_tolerance(&a, opts.eig_tolerance)?;
        recon = recon.max(eig.reconstruct().max_abs_diff(&a));
        ortho = ortho.max(eig.orthonormality_error());
    }
    Ok((
        recon < 1e-10 && ortho < 1e-10,
        format!(
            "tolerance {:.1e}: reconstruction {recon:.2e}, orthonormality {ortho:.2e}",
            opts.eig_tolerance
        ),
    ))
}

fn lemma_equivalence(opts: &VerifyOptions) -> Check {
    let mut rng = substream(opts.seed, 3);
    let mut gap = 0.0f64;
    let mut multi = 0usize;
    for _ in 0..5000 {
        let rho = ginibre_state(&mut rng);
        let spectral = binegativity_spectral(&rho)?;
        let closed = binegativity_closed(&rho)?;
        gap = gap.max((spectral - closed).abs());
        let pt = partial_transpose(rho.matrix(), Subsystem::B);
        if hermitian_eig(&pt)?.negative_count() > 1 {
            multi += 1;
        }
    }
    Ok((
        gap < 1e-9 && multi == 0,
        format!("max |N2 spectral - N2 closed| {gap:.2e}, states with >1 negative eigenvalue {multi}"),
    ))
}

fn ordering(opts: &VerifyOptions) -> Check {
    let mut rng = substream(opts.seed, 4);
    let mut order_violations = 0usize;
    let mut ppt_mismatch = 0usize;
    for _ in 0..5000 {
        let m = measure_triple(&ginibre_state(&mut rng))?;
        if !m.is_ordered(1e-9) {
            order_violations += 1;
        }
        let zeros = m.as_array().map(|v| v < 1e-9);
        if zeros.iter().any(|&z| z != zeros[0]) {
            ppt_mismatch += 1;
        }
    }
    let mut pure_gap = 0.0f64;
    for _ in 0..1000 {
        let m = measure_triple(&haar_pure_state(&mut rng))?;
        pure_gap = pure_gap
            .max((m.binegativity - m.negativity).abs())
            .max((m.negativity - m.concurrence).abs());
    }
    Ok((
        order_violations == 0 && ppt_mismatch == 0 && pure_gap < 1e-9,
        format!(
            "ordering violations {order_violations}, PPT mismatches {ppt_mismatch}, pure-state gap {pure_gap:.2e}"
        ),
    ))
}

fn grid(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn family_closed_forms() -> Check {
    let mut worst = 0.0f64;
    let mut check = |rho: DensityMatrix4, closed: MeasureTriple| -> Result<()> {
        worst = worst.max(measure_triple(&rho)?.max_deviation(&closed));
        Ok(())
    };
    for p in grid(51, 0.0, 1.0) {
        let w = WernerParams::new(p)?;
        check(w.density(), w.closed_form())?;
    }
    for c in grid(51, 0.0, 1.0) {
        let m = MemParams::new(c)?;
        check(m.density(), m.closed_form())?;
    }
    // the valid region is the tetrahedron spanned by the four Bell states
    const VERTICES: [[f64; 3]; 4] = [
        [-1.0, -1.0, -1.0],
        [-1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0],
        [1.0, 1.0, -1.0],
    ];
    for (k, v) in VERTICES.iter().enumerate() {
        let w = VERTICES[(k + 1) % 4];
        for t in grid(51, 0.0, 1.0) {
            let b = BellDiagonalParams::new(t * v[0], t * v[1], t * v[2])?;
            check(b.density(), b.closed_form())?;
            let e = |i: usize| t * v[i] + (1.0 - t) * w[i];
            let b = BellDiagonalParams::new(e(0), e(1), e(2))?;
            check(b.density(), b.closed_form())?;
        }
    }
    for g in grid(11, 0.0, 1.0) {
        for a in grid(6, 0.0, 1.0 - g) {
            let rest = 1.0 - g - a;
            let p = GMemParams::new(0.25 * rest, 0.25 * rest, a, 0.5 * rest, g)?;
            check(p.density(), p.closed_form())?;
        }
    }
    for p in grid(51, 0.0, 1.0) {
        let e = EwParams::new(p, Complex64::new(0.4, 0.0))?;
        check(e.density(), e.closed_form())?;
    }
    Ok((worst < 1e-10, format!("max deviation from spectral {worst:.2e}")))
}

fn xstate_formulas(opts: &VerifyOptions) -> Check {
    let mut rng = substream(opts.seed, 6);
    let mut worst = 0.0f64;
    let (mut outer, mut inner) = (0usize, 0usize);
    for _ in 0..2000 {
        let x = random_xstate(&mut rng);
        let closed = xstate_measures(&x)?;
        let spectral = measure_triple(&DensityMatrix4::new(x.matrix())?)?;
        worst = worst.max(closed.max_deviation(&spectral));
        let theta = libm::sqrt((x.a - x.d) * (x.a - x.d) + 4.0 * x.c.norm_sqr());
        if x.a + x.d < theta {
            outer += 1;
        } else if x.b < x.e.norm() {
            inner += 1;
        }
    }
    Ok((
        worst < 1e-10 && outer > 0 && inner > 0,
        format!("max deviation {worst:.2e}; branch hits outer {outer}, inner {inner}"),
    ))
}

fn channel_oracle(opts: &VerifyOptions) -> Check {
    let mut ok = true;
    let mut detail = String::new();
    for (kind, side) in standard_configs() {
        let (mut state_dev, mut measure_dev) = (0.0f64, 0.0f64);
        for p in grid(21, 0.0, 1.0) {
            for eta in grid(21, 0.0, 1.0) {
                let cfg = ChannelConfig::new(kind, side, eta)?;
                let r = evaluate(&cfg, &EwParams::new(p, Complex64::new(0.4, 0.0))?, opts.formulas)?;
                state_dev = state_dev.max(r.max_entry_deviation);
                measure_dev = measure_dev.max(r.measure_deviation);
            }
        }
        let pass = state_dev < 1e-12 && measure_dev < 1e-9;
        ok &= pass;
        detail.push_str(&format!(
            "{}{}/{}: state {state_dev:.2e} measures {measure_dev:.2e}{}",
            if detail.is_empty() { "" } else { "; " },
            kind.short_name(),
            side.short_name(),
            if pass { "" } else { " DISCREPANCY" },
        ));
    }
    Ok((ok, detail))
}

/// Largest increase of any spectral measure along `η` over the standard grid,
/// and the largest excess of a two-sided over the one-sided measure.
pub fn monotone_decay_scan(p_values: &[f64], eta_points: usize) -> Result<(f64, f64)> {
    let mut increase = 0.0f64;
    let mut excess = 0.0f64;
    for &p in p_values {
        let ew = EwParams::new(p, Complex64::new(0.4, 0.0))?;
        let rho = ew.density();
        for (kind, side) in standard_configs() {
            let mut prev: Option<MeasureTriple> = None;
            for eta in grid(eta_points, 0.0, 1.0) {
                let cfg = ChannelConfig::new(kind, side, eta)?;
                let m = measure_triple(&crate::channels::apply(&rho, &cfg)?)?;
                if let Some(prev) = prev {
                    for (a, b) in m.as_array().iter().zip(prev.as_array()) {
                        increase = increase.max(a - b);
                    }
                }
                prev = Some(m);
                if side == Sidedness::BothSided {
                    let one = ChannelConfig::new(kind, Sidedness::OneSidedA, eta)?;
                    let m1 = measure_triple(&crate::channels::apply(&rho, &one)?)?;
                    for (a, b) in m.as_array().iter().zip(m1.as_array()) {
                        excess = excess.max(a - b);
                    }
                }
            }
        }
    }
    Ok((increase, excess))
}

fn monotone_decay() -> Check {
    let ps = [0.4, 0.6, 0.8, 1.0];
    let (increase, excess) = monotone_decay_scan(&ps, 51)?;
    Ok((
        increase <= 1e-12 && excess <= 1e-12,
        format!("max increase along eta {increase:.2e}, two-sided minus one-sided {excess:.2e}"),
    ))
}

fn twirl_monotonicity(opts: &VerifyOptions) -> Check {
    let report = monotonicity_experiment(500, 0, opts.seed)?;
    let mut rng = substream(opts.seed, 9);
    let samples = 2000;
    let bound = 5.0 / libm::sqrt(samples as f64);
    let mut within = 0usize;
    for _ in 0..20 {
        let rho = ginibre_state(&mut rng);
        let (exact, _) = analytic_twirl(&rho)?;
        if mc_twirl(&rho, samples, &mut rng)?.matrix().max_abs_diff(exact.matrix()) < bound {
            within += 1;
        }
    }
    Ok((
        report.violations() == 0 && within >= 19,
        format!(
            "{} states: N2 violations {}, worst margin {:.2e}; MC within 5/sqrt(M) {within}/20",
            report.n_states,
            report.violations(),
            report.worst_margin
        ),
    ))
}
