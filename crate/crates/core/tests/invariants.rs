use bineg_core::channels::{apply, evaluate, standard_configs, ChannelConfig, Formulas};
use bineg_core::measures::{binegativity_closed, binegativity_spectral, concurrence, negativity};
use bineg_core::qmat::{hermitian_eig, kron, partial_transpose, trace_norm, Subsystem};
use bineg_core::sample::{ginibre, ginibre_state, haar_state_vector, random_local_unitary, substream};
use bineg_core::states::EwParams;
use bineg_core::{Complex64, DensityMatrix4, Mat4};
use proptest::prelude::*;

fn sigma_yy() -> Mat4 {
    Mat4::from_real([
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ])
}

fn psd_sqrt(m: &Mat4) -> Mat4 {
    let eig = hermitian_eig(m).unwrap();
    let mut out = Mat4::zeros();
    for k in 0..4 {
        let v = eig.eigenvector(k);
        out = out + Mat4::outer(&v).scale(eig.eigenvalues[k].max(0.0).sqrt());
    }
    out
}

/// Wootters' concurrence from the eigenvalues of `√ρ ρ̃ √ρ`.
fn wootters_oracle(rho: &Mat4) -> f64 {
    let yy = sigma_yy();
    let tilde = rho.conj().conjugate_by(&yy);
    let s = psd_sqrt(rho);
    let r = (s * tilde * s).hermitian_part();
    let mut l: Vec<f64> = hermitian_eig(&r)
        .unwrap()
        .eigenvalues
        .iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    l.sort_by(|a, b| b.partial_cmp(a).unwrap());
    (l[0] - l[1] - l[2] - l[3]).max(0.0)
}

#[test]
fn concurrence_matches_wootters_oracle() {
    for i in 0..500 {
        let rho = ginibre_state(&mut substream(11, i));
        let c = concurrence(&rho).unwrap();
        let o = wootters_oracle(rho.matrix());
        assert!((c - o).abs() < 1e-8, "state {i}: {c} vs {o}");
    }
}

#[test]
fn pure_state_concurrence_is_twice_determinant() {
    for i in 0..500 {
        let v = haar_state_vector(&mut substream(12, i));
        let expected = 2.0 * (v[0] * v[3] - v[1] * v[2]).norm();
        let rho = DensityMatrix4::new(Mat4::outer(&v)).unwrap();
        let c = concurrence(&rho).unwrap();
        assert!((c - expected).abs() < 1e-10, "{c} vs {expected}");
        assert!((negativity(&rho).unwrap() - expected).abs() < 1e-10);
    }
}

#[test]
fn channel_closed_forms_match_kraus_on_grid() {
    let alpha = Complex64::new(0.4, 0.0);
    for (kind, sided) in standard_configs() {
        for i in 0..21 {
            for j in 0..21 {
                let p = i as f64 / 20.0;
                let eta = j as f64 / 20.0;
                let ew = EwParams::new(p, alpha).unwrap();
                let cfg = ChannelConfig::new(kind, sided, eta).unwrap();
                let r = evaluate(&cfg, &ew, Formulas::Corrected).unwrap();
                assert!(r.max_entry_deviation < 1e-12, "{:?} p={p} eta={eta}", cfg.label());
                assert!(r.measure_deviation < 1e-9, "{:?} p={p} eta={eta}", cfg.label());
            }
        }
    }
}

fn seed_strategy() -> impl Strategy<Value = (u64, u64)> {
    (any::<u64>(), 0u64..1_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partial_transpose_is_an_involution((seed, idx) in seed_strategy()) {
        let m = ginibre::<4, _>(&mut substream(seed, idx));
        for s in [Subsystem::A, Subsystem::B] {
            let back = partial_transpose(&partial_transpose(&m, s), s);
            prop_assert!(back.max_abs_diff(&m) == 0.0);
        }
        let full = partial_transpose(&partial_transpose(&m, Subsystem::A), Subsystem::B);
        prop_assert!(full.max_abs_diff(&m.transpose()) == 0.0);
    }

    #[test]
    fn kron_mixed_product((seed, idx) in seed_strategy()) {
        let mut rng = substream(seed, idx);
        let [a, b, c, d] = [(); 4].map(|_| ginibre::<2, _>(&mut rng));
        let lhs = kron(&a, &b) * kron(&c, &d);
        let rhs = kron(&(a * c), &(b * d));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
    }

    #[test]
    fn negativity_equals_trace_norm_identity((seed, idx) in seed_strategy()) {
        let rho = ginibre_state(&mut substream(seed, idx));
        let pt = partial_transpose(rho.matrix(), Subsystem::B);
        let tn = trace_norm(&pt).unwrap();
        prop_assert!((negativity(&rho).unwrap() - (tn - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn measures_are_local_unitary_invariant((seed, idx) in seed_strategy()) {
        let mut rng = substream(seed, idx);
        let rho = ginibre_state(&mut rng);
        let u = random_local_unitary(&mut rng);
        let rotated = DensityMatrix4::new(rho.matrix().conjugate_by(&u).hermitian_part()).unwrap();
        for f in [concurrence, negativity, binegativity_spectral] {
            prop_assert!((f(&rho).unwrap() - f(&rotated).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn ordering_and_lemma_hold((seed, idx) in seed_strategy()) {
        let rho = ginibre_state(&mut substream(seed, idx));
        let c = concurrence(&rho).unwrap();
        let n = negativity(&rho).unwrap();
        let n2 = binegativity_spectral(&rho).unwrap();
        prop_assert!(n2 <= n + 1e-9 && n <= c + 1e-9);
        prop_assert!((n2 - binegativity_closed(&rho).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn channels_preserve_states((seed, idx) in seed_strategy(), eta in 0.0f64..=1.0, which in 0usize..6) {
        let rho = ginibre_state(&mut substream(seed, idx));
        let (kind, sided) = standard_configs()[which];
        let cfg = ChannelConfig::new(kind, sided, eta).unwrap();
        let out = apply(&rho, &cfg).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
        let eig = hermitian_eig(out.matrix()).unwrap();
        prop_assert!(eig.eigenvalues[0] > -1e-10);
        prop_assert!(negativity(&out).unwrap() <= negativity(&rho).unwrap() + 1e-9);
    }
}
