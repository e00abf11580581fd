//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines appear in order; exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use bineg_core::channels::{
    apply, evaluate, standard_configs, ChannelConfig, ChannelKind, Formulas, Sidedness,
};
use bineg_core::measures::{
    binegativity_closed, binegativity_spectral, concurrence, measure_triple, negativity,
    xstate_measures, MeasureTriple,
};
use bineg_core::qmat::{hermitian_eig, partial_transpose, Subsystem};
use bineg_core::sample::{ginibre_state, haar_pure_state, random_xstate, substream};
use bineg_core::states::{BellDiagonalParams, EwParams, GMemParams, MemParams, WernerParams};
use bineg_core::twirl::{experiment_trial, MonotonicityReport};
use bineg_core::verify::monotone_decay_scan;
use bineg_core::{Complex64, DensityMatrix4};
use rayon::prelude::*;

const SEED: u64 = 0x5eed_2019;

type Outcome = Result<(bool, String), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn grid(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

#[derive(Default)]
struct GinibreStats {
    lemma_gap: f64,
    ordering_violations: usize,
}

fn ginibre_stats() -> Result<GinibreStats, String> {
    (0..100_000u64)
        .into_par_iter()
        .map(|i| -> Result<GinibreStats, String> {
            let rho = ginibre_state(&mut substream(SEED, i));
            let spectral = binegativity_spectral(&rho).map_err(e)?;
            let closed = binegativity_closed(&rho).map_err(e)?;
            let n = negativity(&rho).map_err(e)?;
            let c = concurrence(&rho).map_err(e)?;
            let ordered = spectral <= n + 1e-9 && n <= c + 1e-9;
            Ok(GinibreStats {
                lemma_gap: (spectral - closed).abs(),
                ordering_violations: usize::from(!ordered),
            })
        })
        .try_reduce(GinibreStats::default, |a, b| {
            Ok(GinibreStats {
                lemma_gap: a.lemma_gap.max(b.lemma_gap),
                ordering_violations: a.ordering_violations + b.ordering_violations,
            })
        })
}

fn lemma(stats: &GinibreStats) -> Outcome {
    Ok((
        stats.lemma_gap < 1e-9,
        format!("100000 Ginibre states, max |N2_spectral - N2_closed| = {:.2e}", stats.lemma_gap),
    ))
}

fn ordering(stats: &GinibreStats) -> Outcome {
    Ok((
        stats.ordering_violations == 0,
        format!("N2 <= N <= C (slack 1e-9) violations: {}", stats.ordering_violations),
    ))
}

fn pure_states() -> Outcome {
    let worst = (0..10_000u64)
        .into_par_iter()
        .map(|i| -> Result<f64, String> {
            let rho = haar_pure_state(&mut substream(SEED ^ 3, i));
            let m = measure_triple(&rho).map_err(e)?;
            Ok((m.binegativity - m.negativity).abs().max((m.negativity - m.concurrence).abs()))
        })
        .try_reduce(|| 0.0, |a: f64, b| Ok(a.max(b)))?;
    Ok((worst < 1e-9, format!("10000 Haar pure states, max gap {worst:.2e}")))
}

fn families() -> Outcome {
    let mut worst = 0.0f64;
    let mut points = [0usize; 4];
    let mut check = |k: usize, rho: DensityMatrix4, closed: MeasureTriple| -> Result<(), String> {
        worst = worst.max(measure_triple(&rho).map_err(e)?.max_deviation(&closed));
        points[k] += 1;
        Ok(())
    };
    for p in grid(101, 0.0, 1.0) {
        let w = WernerParams::new(p).map_err(e)?;
        check(0, w.density(), w.closed_form())?;
    }
    let vertices = [[-1.0, -1.0, -1.0], [-1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [1.0, 1.0, -1.0]];
    for (k, v) in vertices.iter().enumerate() {
        let w = vertices[(k + 1) % 4];
        for t in grid(26, 0.0, 1.0) {
            let b = BellDiagonalParams::new(t * v[0], t * v[1], t * v[2]).map_err(e)?;
            check(1, b.density(), b.closed_form())?;
            let mid = |i: usize| t * v[i] + (1.0 - t) * w[i];
            let b = BellDiagonalParams::new(mid(0), mid(1), mid(2)).map_err(e)?;
            check(1, b.density(), b.closed_form())?;
        }
    }
    for c in grid(101, 0.0, 1.0) {
        let m = MemParams::new(c).map_err(e)?;
        check(2, m.density(), m.closed_form())?;
    }
    for g in grid(11, 0.0, 1.0) {
        for a in grid(8, 0.0, 1.0 - g) {
            let rest = (1.0 - g - a).max(0.0);
            let p = GMemParams::new(0.3 * rest, 0.2 * rest, a, 0.5 * rest, g).map_err(e)?;
            check(3, p.density(), p.closed_form())?;
        }
    }
    let werner = WernerParams::new(0.7).map_err(e)?.closed_form();
    let mem = MemParams::new(0.5).map_err(e)?.closed_form();
    let mem_spectral = measure_triple(&MemParams::new(0.5).map_err(e)?.density()).map_err(e)?;
    let spots = werner.max_deviation(&MeasureTriple::uniform(0.55)) < 1e-12
        && (mem.negativity - 0.267592).abs() < 1e-6
        && (mem_spectral.negativity - 0.267592).abs() < 1e-6;
    Ok((
        worst < 1e-10 && spots && points.iter().all(|&n| n >= 50),
        format!(
            "grid points werner/bell/mem/gmem = {points:?}, max deviation {worst:.2e}; \
             Werner p=0.7 -> {:.12}, MEM C=0.5 -> N = {:.12}",
            werner.negativity, mem.negativity
        ),
    ))
}

fn channel_oracle() -> Outcome {
    let alpha = Complex64::new(0.4, 0.0);
    let mut ok = true;
    let mut parts = Vec::new();
    for (kind, sided) in standard_configs() {
        let (mut corrected, mut literal) = (0.0f64, 0.0f64);
        for p in grid(21, 0.0, 1.0) {
            for eta in grid(21, 0.0, 1.0) {
                let ew = EwParams::new(p, alpha).map_err(e)?;
                let cfg = ChannelConfig::new(kind, sided, eta).map_err(e)?;
                corrected = corrected.max(evaluate(&cfg, &ew, Formulas::Corrected).map_err(e)?.max_entry_deviation);
                literal = literal.max(evaluate(&cfg, &ew, Formulas::PaperLiteral).map_err(e)?.max_entry_deviation);
            }
        }
        let cfg = ChannelConfig::new(kind, sided, 0.0).map_err(e)?;
        let (k, s) = cfg.label();
        ok &= corrected < 1e-12;
        if matches!(kind, ChannelKind::PhaseDamping) && matches!(sided, Sidedness::OneSidedA)
            || matches!(kind, ChannelKind::Depolarizing) && matches!(sided, Sidedness::BothSided)
        {
            ok &= literal > 1e-6;
        }
        parts.push(format!("{k}/{s}: corrected {corrected:.1e}, literal {literal:.1e}"));
    }
    Ok((ok, parts.join("; ")))
}

fn monotone_decay() -> Outcome {
    let ps: Vec<f64> = (4..=10).map(|k| k as f64 / 10.0).collect();
    let (increase, excess) = monotone_decay_scan(&ps, 101).map_err(e)?;
    Ok((
        increase <= 1e-12,
        format!(
            "6 channel configs, p in 0.4..1.0, 101 eta points: max increase {increase:.2e}, \
             two-sided minus one-sided {excess:.2e}"
        ),
    ))
}

fn ad_spot_value() -> Outcome {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    let ew = EwParams::new(1.0, Complex64::new(a, 0.0)).map_err(e)?;
    let cfg = ChannelConfig::new(ChannelKind::AmplitudeDamping, Sidedness::OneSidedA, 0.5).map_err(e)?;
    let m = measure_triple(&apply(&ew.density(), &cfg).map_err(e)?).map_err(e)?;
    let ok = (m.negativity - 0.5).abs() < 1e-10
        && (m.concurrence - 0.5f64.sqrt()).abs() < 1e-10
        && (m.binegativity - 0.485702).abs() < 1e-6;
    Ok((
        ok,
        format!("N = {:.12}, C = {:.12}, N2 = {:.12}", m.negativity, m.concurrence, m.binegativity),
    ))
}

fn twirl() -> Outcome {
    let mc = (0..100u64)
        .into_par_iter()
        .map(|i| experiment_trial(SEED ^ 8, i, 10_000))
        .collect::<Result<Vec<_>, _>>()
        .map_err(e)?;
    let close = mc.iter().filter(|r| r.mc_deviation < 5e-2).count();
    let worst = mc.iter().map(|r| r.mc_deviation).fold(0.0, f64::max);
    let trials = (0..10_000u64)
        .into_par_iter()
        .map(|i| experiment_trial(SEED ^ 9, i, 0))
        .collect::<Result<Vec<_>, _>>()
        .map_err(e)?;
    let report = MonotonicityReport::from_results(0, &trials);
    Ok((
        close >= 99 && report.violations() == 0,
        format!(
            "MC (M=10000) within 5e-2 of Werner projection: {close}/100 (worst {worst:.2e}); \
             {} entangled states, N2 violations {}, worst margin {:.2e}",
            report.n_states,
            report.violations(),
            report.worst_margin
        ),
    ))
}

fn xstates() -> Outcome {
    let (worst, outer, inner) = (0..10_000u64)
        .into_par_iter()
        .map(|i| -> Result<(f64, usize, usize), String> {
            let x = random_xstate(&mut substream(SEED ^ 10, i));
            let closed = xstate_measures(&x).map_err(e)?;
            let rho = DensityMatrix4::new(x.matrix()).map_err(e)?;
            let dev = closed.max_deviation(&measure_triple(&rho).map_err(e)?);
            // which eigenvalue of the partial transpose can go negative
            let pt = hermitian_eig(&partial_transpose(rho.matrix(), Subsystem::B)).map_err(e)?;
            let theta = ((x.a - x.d).powi(2) + 4.0 * x.c.norm_sqr()).sqrt();
            let entangled = pt.eigenvalues[0] < -1e-12;
            let outer = entangled && x.a + x.d < theta;
            let inner = entangled && !outer;
            Ok((dev, usize::from(outer), usize::from(inner)))
        })
        .try_reduce(|| (0.0, 0, 0), |a: (f64, usize, usize), b| Ok((a.0.max(b.0), a.1 + b.1, a.2 + b.2)))?;
    Ok((
        worst < 1e-10 && outer > 0 && inner > 0,
        format!("10000 X-states, max deviation {worst:.2e}; branch hits {outer} / {inner}"),
    ))
}

fn verify_command() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_bineg");
    let clean = Command::new(bin).arg("verify").output().map_err(e)?;
    let faulty = Command::new(bin)
        .args(["verify", "--fault-eig-tolerance", "0.1"])
        .output()
        .map_err(e)?;
    Ok((
        clean.status.success() && !faulty.status.success(),
        format!(
            "clean exit {:?}, with eigensolver tolerance fault exit {:?}",
            clean.status.code(),
            faulty.status.code()
        ),
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let stats = ginibre_stats();
    let from_stats = |f: fn(&GinibreStats) -> Outcome| match &stats {
        Ok(s) => f(s),
        Err(err) => Err(err.clone()),
    };
    let shared = start.elapsed();

    let mut criteria: Vec<Criterion> = vec![
        ("lemma equivalence", Box::new(move || from_stats(lemma))),
        ("ordering chain", Box::new(move || from_stats(ordering))),
        ("pure-state coincidence", Box::new(pure_states)),
        ("family closed forms", Box::new(families)),
        ("channel oracle agreement", Box::new(channel_oracle)),
        ("monotone decay", Box::new(monotone_decay)),
        ("amplitude-damping spot value", Box::new(ad_spot_value)),
        ("twirl", Box::new(twirl)),
        ("X-state formulas", Box::new(xstates)),
        ("verify command", Box::new(verify_command)),
    ];

    let mut failures = 0;
    for (k, (name, run)) in criteria.drain(..).enumerate() {
        let t = Instant::now();
        let (passed, detail) = run().unwrap_or_else(|err| (false, format!("error: {err}")));
        let mut elapsed = t.elapsed();
        if k < 2 {
            elapsed += shared;
        }
        failures += usize::from(!passed);
        println!(
            "{} [{:>2}] {name}: {detail} ({:.2}s)",
            if passed { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
