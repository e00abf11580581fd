//! Text reports for the `measures`, `twirl` and `verify` commands.

use std::fmt::Write as _;

use anyhow::Result;
use bineg_core::measures::{
    binegativity_closed, measure_triple, negative_eigvec_state, negativity, SEPARABLE_NEGATIVITY,
};
use bineg_core::qmat::{hermitian_eig, partial_transpose, Subsystem};
use bineg_core::twirl::{experiment_trial, MonotonicityReport, TwirlResult};
use bineg_core::verify::{run_suite, SuiteOutcome, VerifyOptions, SUITES};
use rayon::prelude::*;

use crate::state_file::LoadedState;

/// Report for `measures <file>`.
pub fn measures_report(state: &LoadedState) -> Result<String> {
    let rho = &state.density;
    let spectral = measure_triple(rho)?;
    let closed = binegativity_closed(rho)?;
    let pt = hermitian_eig(&partial_transpose(rho.matrix(), Subsystem::B))?;
    let n = negativity(rho)?;

    let mut out = String::new();
    if let Some(family) = &state.family {
        writeln!(out, "state: {} family", family.name())?;
    } else {
        writeln!(out, "state: explicit matrix")?;
    }
    writeln!(out, "concurrence C          = {:.12}", spectral.concurrence)?;
    writeln!(out, "negativity N           = {:.12}", spectral.negativity)?;
    writeln!(out, "binegativity N2        = {:.12}  (spectral)", spectral.binegativity)?;
    writeln!(out, "binegativity N2        = {:.12}  (N/2 [1 + N(rho_psi)])", closed)?;
    if let Some(family) = &state.family {
        let f = family.closed_form();
        writeln!(
            out,
            "family closed form     = C {:.12}, N {:.12}, N2 {:.12}",
            f.concurrence, f.negativity, f.binegativity
        )?;
    }
    writeln!(
        out,
        "partial transpose eigenvalues = [{}]",
        pt.eigenvalues
            .iter()
            .map(|l| format!("{l:.12}"))
            .collect::<Vec<_>>()
            .join(", ")
    )?;
    if n < SEPARABLE_NEGATIVITY {
        writeln!(out, "PPT: yes (separable), no negative eigenvalue")?;
    } else {
        let psi = negative_eigvec_state(rho)?;
        writeln!(out, "PPT: no, exactly one negative eigenvalue: -{:.12}", psi.negative_eigenvalue_magnitude)?;
        writeln!(
            out,
            "negative eigenvector psi = [{}]",
            psi.vector
                .iter()
                .map(|z| format!("{:.12}{:+.12}i", z.re, z.im))
                .collect::<Vec<_>>()
                .join(", ")
        )?;
        writeln!(out, "N(rho_psi)             = {:.12}", negativity(&psi.state)?)?;
    }
    Ok(out)
}

/// Runs the twirl experiment with one substream per state, in parallel.
pub fn twirl_experiment(n_states: usize, samples: usize, seed: u64) -> Result<MonotonicityReport> {
    let results = (0..n_states as u64)
        .into_par_iter()
        .map(|i| experiment_trial(seed, i, samples))
        .collect::<bineg_core::Result<Vec<TwirlResult>>>()?;
    Ok(MonotonicityReport::from_results(samples, &results))
}

pub fn twirl_report(report: &MonotonicityReport, seed: u64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ensemble: {}", MonotonicityReport::ENSEMBLE);
    let _ = writeln!(out, "seed: {seed}");
    let _ = writeln!(out, "states: {}", report.n_states);
    let _ = writeln!(out, "mc samples per state: {}", report.samples_per_state);
    let _ = writeln!(out, "N2 violations: {}", report.binegativity_violations);
    let _ = writeln!(out, "N violations: {}", report.negativity_violations);
    let _ = writeln!(out, "C violations: {}", report.concurrence_violations);
    let _ = writeln!(out, "worst N2 margin (out - in): {:.6e}", report.worst_margin);
    let _ = writeln!(out, "max mc deviation: {:.6e}", report.max_mc_deviation);
    let _ = writeln!(out, "mean mc deviation: {:.6e}", report.mean_mc_deviation);
    out
}

/// Runs every suite (in parallel) and returns outcomes in declaration order.
pub fn verify(opts: &VerifyOptions) -> Vec<SuiteOutcome> {
    SUITES.par_iter().map(|s| run_suite(s, opts)).collect()
}

pub fn verify_report(outcomes: &[SuiteOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let _ = writeln!(
            out,
            "[{}] {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    out
}
