//! Amplitude-damping, phase-damping and depolarizing noise on `ρ_EW`.
//!
//! [`apply`] pushes a state through the Kraus operators and is the reference
//! for everything else here. The closed-form final states and measures come in
//! two flavours, selected by [`Formulas`]:
//!
//! - [`Formulas::Corrected`] agrees with [`apply`] to rounding.
//! - [`Formulas::PaperLiteral`] reproduces the published expressions exactly as
//!   printed, including their known misprints, so the discrepancies can be
//!   measured.
//!
//! The printed expressions differ from the Kraus result in these places:
//!
//! - AD, one-sided: `4ε|αβ*|²` in `L` and in the `N₂` denominator must read
//!   `4ε²|αβ*|²`.
//! - AD, both sides: `v = (1−η)[ℓ₊ + pη²|β|²]` must read `(1−η)[ℓ₊ + pη|β|²]`
//!   (otherwise the trace is not one); the same term appears in the measure.
//! - PD: the corner entry `mⁱ/p` must read `mⁱ/p^{i−1}`, and the measure's
//!   `(1−η)/4` must read `(1−p)/4`.
//! - DP, one-sided: `Θ_x = r + pη|x|²` must read `r + (2/3)pη|x|²`.
//! - DP, both sides: the middle block vanishes and the corner is
//!   `κ = p·t₄²·αβ*`; the printed `ς`, `τ` and `−ξα*β` do not follow from the
//!   Kraus operators, although `δ` and `Δ_xy` do.
//! - All printed matrices put `α*β` in the upper corner where `|Ψ⟩⟨Ψ|` has
//!   `αβ*`; this only matters for complex `α`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::measures::{measure_triple, MeasureTriple};
use crate::qmat::{kron, pauli, swap_qubits, DensityMatrix4, Mat2, Mat4};
use crate::states::EwParams;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    AmplitudeDamping,
    PhaseDamping,
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] = [
        ChannelKind::AmplitudeDamping,
        ChannelKind::PhaseDamping,
        ChannelKind::Depolarizing,
    ];

    pub fn short_name(&self) -> &'static str {
        match self {
            ChannelKind::AmplitudeDamping => "ad",
            ChannelKind::PhaseDamping => "pd",
            ChannelKind::Depolarizing => "dp",
        }
    }
}

/// Which qubits the channel acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sidedness {
    /// `K_i ⊗ I`.
    OneSidedA,
    /// `I ⊗ K_i`.
    OneSidedB,
    /// `K_i ⊗ K_j`.
    BothSided,
}

impl Sidedness {
    pub fn short_name(&self) -> &'static str {
        match self {
            Sidedness::OneSidedA => "one",
            Sidedness::OneSidedB => "one-b",
            Sidedness::BothSided => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelConfig {
    pub kind: ChannelKind,
    pub sidedness: Sidedness,
    pub eta: f64,
}

impl ChannelConfig {
    pub fn new(kind: ChannelKind, sidedness: Sidedness, eta: f64) -> Result<Self> {
        check_eta(eta)?;
        Ok(ChannelConfig {
            kind,
            sidedness,
            eta,
        })
    }

    pub fn label(&self) -> (&'static str, &'static str) {
        (self.kind.short_name(), self.sidedness.short_name())
    }
}

/// The six (kind, sidedness) pairs with A-side one-sided channels.
pub fn standard_configs() -> [(ChannelKind, Sidedness); 6] {
    let mut out = [(ChannelKind::AmplitudeDamping, Sidedness::OneSidedA); 6];
    for (i, kind) in ChannelKind::ALL.into_iter().enumerate() {
        out[2 * i] = (kind, Sidedness::OneSidedA);
        out[2 * i + 1] = (kind, Sidedness::BothSided);
    }
    out
}

fn check_eta(eta: f64) -> Result<()> {
    if eta.is_finite() && (0.0..=1.0).contains(&eta) {
        Ok(())
    } else {
        Err(Error::param("eta", eta))
    }
}

/// Single-qubit channel in operator-sum form.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    pub kind: ChannelKind,
    pub eta: f64,
    pub operators: Vec<Mat2>,
}

impl KrausSet {
    /// `max |Σ K†K − I|`.
    pub fn completeness_error(&self) -> f64 {
        self.operators
            .iter()
            .fold(Mat2::zeros(), |acc, k| acc + k.adjoint() * *k)
            .max_abs_diff(&Mat2::identity())
    }

    pub fn apply_single(&self, rho: &Mat2) -> Mat2 {
        self.operators
            .iter()
            .fold(Mat2::zeros(), |acc, k| acc + rho.conjugate_by(k))
    }
}

pub fn kraus(kind: ChannelKind, eta: f64) -> Result<KrausSet> {
    check_eta(eta)?;
    let sq = libm::sqrt;
    let operators = match kind {
        ChannelKind::AmplitudeDamping => {
            let mut k1 = Mat2::zeros();
            k1[(0, 1)] = Complex64::new(sq(eta), 0.0);
            alloc::vec![Mat2::diag([1.0, sq(1.0 - eta)]), k1]
        }
        ChannelKind::PhaseDamping => alloc::vec![
            Mat2::identity().scale(sq(1.0 - eta)),
            Mat2::diag([sq(eta), 0.0]),
            Mat2::diag([0.0, sq(eta)]),
        ],
        ChannelKind::Depolarizing => {
            let w = sq(eta / 3.0);
            let [x, y, z] = pauli();
            alloc::vec![
                Mat2::identity().scale(sq(1.0 - eta)),
                x.scale(w),
                y.scale(w),
                z.scale(w),
            ]
        }
    };
    Ok(KrausSet {
        kind,
        eta,
        operators,
    })
}

/// Two-qubit Kraus operators for `config`.
pub fn two_qubit_operators(config: &ChannelConfig) -> Result<Vec<Mat4>> {
    let set = kraus(config.kind, config.eta)?;
    let id = Mat2::identity();
    Ok(match config.sidedness {
        Sidedness::OneSidedA => set.operators.iter().map(|k| kron(k, &id)).collect(),
        Sidedness::OneSidedB => set.operators.iter().map(|k| kron(&id, k)).collect(),
        Sidedness::BothSided => set
            .operators
            .iter()
            .flat_map(|a| set.operators.iter().map(move |b| kron(a, b)))
            .collect(),
    })
}

/// `ρ' = Σ (K_i⊗M_j) ρ (K_i⊗M_j)†`.
pub fn apply(rho: &DensityMatrix4, config: &ChannelConfig) -> Result<DensityMatrix4> {
    let out = two_qubit_operators(config)?
        .iter()
        .fold(Mat4::zeros(), |acc, k| acc + rho.matrix().conjugate_by(k));
    DensityMatrix4::new(out.hermitian_part())
}

/// Which set of closed-form expressions to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Formulas {
    /// Expressions consistent with the Kraus operators.
    #[default]
    Corrected,
    /// Expressions exactly as published.
    PaperLiteral,
}

/// Named intermediate scalar of a closed form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub name: &'static str,
    pub value: Complex64,
}

/// A closed-form final state together with the measures evaluated from the
/// corresponding closed-form expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub state: Mat4,
    pub measures: MeasureTriple,
    pub terms: Vec<Term>,
}

struct Terms(Vec<Term>);

impl Terms {
    fn real(&mut self, name: &'static str, v: f64) -> f64 {
        self.0.push(Term {
            name,
            value: Complex64::new(v, 0.0),
        });
        v
    }

    fn complex(&mut self, name: &'static str, v: Complex64) -> Complex64 {
        self.0.push(Term { name, value: v });
        v
    }
}

fn x_matrix(diag: [f64; 4], corner: Complex64) -> Mat4 {
    let mut m = Mat4::diag(diag);
    m[(0, 3)] = corner;
    m[(3, 0)] = corner.conj();
    m
}

/// Closed-form final state and measures for `ρ_EW(p, α)` under `config`.
pub fn closed_form(config: &ChannelConfig, ew: &EwParams, formulas: Formulas) -> Result<ClosedForm> {
    check_eta(config.eta)?;
    let mut cf = match (config.kind, config.sidedness) {
        (kind, Sidedness::OneSidedA | Sidedness::OneSidedB) => match kind {
            ChannelKind::AmplitudeDamping => ad_one_sided(config.eta, ew, formulas),
            ChannelKind::PhaseDamping => pd(1, config.eta, ew, formulas),
            ChannelKind::Depolarizing => dp_one_sided(config.eta, ew, formulas),
        },
        (ChannelKind::AmplitudeDamping, Sidedness::BothSided) => {
            ad_both_sided(config.eta, ew, formulas)
        }
        (ChannelKind::PhaseDamping, Sidedness::BothSided) => pd(2, config.eta, ew, formulas),
        (ChannelKind::Depolarizing, Sidedness::BothSided) => {
            dp_both_sided(config.eta, ew, formulas)
        }
    };
    // ρ_EW is swap symmetric, so acting on B is the swap of acting on A.
    if config.sidedness == Sidedness::OneSidedB {
        cf.state = swap_qubits(&cf.state);
    }
    Ok(cf)
}

/// The closed-form final state matrix.
pub fn closed_form_state(config: &ChannelConfig, ew: &EwParams, formulas: Formulas) -> Result<Mat4> {
    Ok(closed_form(config, ew, formulas)?.state)
}

/// The closed-form `(C, N, N₂)`.
pub fn closed_form_measures(
    config: &ChannelConfig,
    ew: &EwParams,
    formulas: Formulas,
) -> Result<MeasureTriple> {
    Ok(closed_form(config, ew, formulas)?.measures)
}

/// Upper-corner coherence in the chosen convention: `c·αβ*` or, as printed, `c·α*β`.
fn corner(ew: &EwParams, coefficient: Complex64, formulas: Formulas) -> Complex64 {
    let (_, _, ab) = ew.amplitudes();
    match formulas {
        Formulas::Corrected => coefficient * ab,
        Formulas::PaperLiteral => coefficient * ab.conj(),
    }
}

fn ad_one_sided(eta: f64, ew: &EwParams, formulas: Formulas) -> ClosedForm {
    let mut t = Terms(Vec::new());
    let p = ew.p;
    let (a2, b2, ab) = ew.amplitudes();
    let ab_abs = ab.norm();
    let lp = t.real("l_plus", (1.0 - p) * (1.0 + eta) / 4.0);
    let lm = t.real("l_minus", (1.0 - p) * (1.0 - eta) / 4.0);
    let eps = t.real("epsilon", p * libm::sqrt(1.0 - eta));
    let m = t.real("m", p * (1.0 - eta));

    let state = x_matrix(
        [lp + p * a2, lp + p * eta * b2, lm, lm + m * b2],
        corner(ew, Complex64::new(eps, 0.0), formulas),
    );

    // 4ε²|αβ*|², printed as 4ε|αβ*|²
    let coherence = match formulas {
        Formulas::Corrected => 4.0 * eps * eps * ab_abs * ab_abs,
        Formulas::PaperLiteral => 4.0 * eps * ab_abs * ab_abs,
    };
    let vartheta = t.real("vartheta", lp - lm + p * eta * b2);
    let big_l = t.real("L", libm::sqrt(vartheta * vartheta + coherence));

    let c = 2.0 * (eps * ab_abs - libm::sqrt(lm * (lp + p * eta * b2))).max(0.0);
    let n = (big_l - (lp + lm + p * eta * b2)).max(0.0);
    let n2 = if n > 0.0 {
        let num = 2.0 * (eps * ab_abs * (vartheta - big_l)).abs();
        let den = (coherence + vartheta * (vartheta - big_l)).abs();
        0.5 * n * (1.0 + num / den)
    } else {
        0.0
    };
    ClosedForm {
        state,
        measures: MeasureTriple::new(c, n, n2),
        terms: t.0,
    }
}

fn ad_both_sided(eta: f64, ew: &EwParams, formulas: Formulas) -> ClosedForm {
    let mut t = Terms(Vec::new());
    let p = ew.p;
    let (a2, b2, ab) = ew.amplitudes();
    let r = t.real("r", ew.r());
    let lp = t.real("l_plus", (1.0 - p) * (1.0 + eta) / 4.0);
    let eps = t.real("epsilon", p * libm::sqrt(1.0 - eta));
    let m = t.real("m", p * (1.0 - eta));
    let s = t.real(
        "s",
        r * (1.0 + eta) * (1.0 + eta) + p * (a2 + eta * eta * b2),
    );
    // the printed v carries η² on the |β|² term
    let eta_power = match formulas {
        Formulas::Corrected => eta,
        Formulas::PaperLiteral => eta * eta,
    };
    let v = t.real("v", (1.0 - eta) * (lp + p * eta_power * b2));
    let d = (r + p * b2) * (1.0 - eta) * (1.0 - eta);

    let state = x_matrix([s, v, v, d], corner(ew, Complex64::new(m, 0.0), formulas));

    // ε²/p = m; the printed form is kept as a ratio and taken to its p → 0 limit
    let coefficient = match formulas {
        Formulas::Corrected => m,
        Formulas::PaperLiteral if p > 0.0 => eps * eps / p,
        Formulas::PaperLiteral => 0.0,
    };
    let value = 2.0 * (coefficient * ab.norm() - (1.0 - eta) * (lp + p * eta_power * b2)).max(0.0);
    ClosedForm {
        state,
        measures: MeasureTriple::uniform(value),
        terms: t.0,
    }
}

/// Phase damping applied to `sides` ∈ {1, 2} qubits.
fn pd(sides: i32, eta: f64, ew: &EwParams, formulas: Formulas) -> ClosedForm {
    let mut t = Terms(Vec::new());
    let p = ew.p;
    let (a2, b2, ab) = ew.amplitudes();
    let r = t.real("r", ew.r());
    let m = t.real("m", p * (1.0 - eta));
    let decay = libm::pow(1.0 - eta, sides as f64);
    // mⁱ/p^{i−1} = p(1−η)ⁱ, printed as mⁱ/p = p^{i−1}(1−η)ⁱ
    let coefficient = match formulas {
        Formulas::Corrected => p * decay,
        Formulas::PaperLiteral => libm::pow(p, (sides - 1) as f64) * decay,
    };
    let _ = t.real("corner_coefficient", coefficient);
    let _ = m;

    let state = x_matrix(
        [r + p * a2, r, r, r + p * b2],
        corner(ew, Complex64::new(coefficient, 0.0), formulas),
    );

    let offset = match formulas {
        Formulas::Corrected => r,
        Formulas::PaperLiteral => (1.0 - eta) / 4.0,
    };
    let value = 2.0 * (p * decay * ab.norm() - offset).max(0.0);
    ClosedForm {
        state,
        measures: MeasureTriple::uniform(value),
        terms: t.0,
    }
}

fn dp_one_sided(eta: f64, ew: &EwParams, formulas: Formulas) -> ClosedForm {
    let mut t = Terms(Vec::new());
    let p = ew.p;
    let (a2, b2, _) = ew.amplitudes();
    let r = t.real("r", ew.r());
    let t2 = t.real("t2", 1.0 - 2.0 * eta / 3.0);
    let t4 = t.real("t4", 1.0 - 4.0 * eta / 3.0);
    let rate = match formulas {
        Formulas::Corrected => 2.0 * eta / 3.0,
        Formulas::PaperLiteral => eta,
    };
    let theta_a = t.real("theta_alpha", r + p * rate * a2);
    let theta_b = t.real("theta_beta", r + p * rate * b2);
    let omega = t.complex("omega", corner(ew, Complex64::new(p * t4, 0.0), formulas));

    let state = x_matrix(
        [r + p * t2 * a2, theta_b, theta_a, r + p * t2 * b2],
        omega,
    );

    let w = omega.norm();
    let diff = theta_b - theta_a;
    let upsilon = t.real("upsilon", libm::sqrt(diff * diff + 4.0 * w * w));
    let c = 2.0 * (w - libm::sqrt(theta_a * theta_b)).max(0.0);
    let n = (upsilon - (theta_a + theta_b)).max(0.0);
    let n2 = if n > 0.0 {
        let num = (2.0 * w * (diff - upsilon)).abs();
        let den = (4.0 * w * w + diff * (diff - upsilon)).abs();
        0.5 * n * (1.0 + num / den)
    } else {
        0.0
    };
    ClosedForm {
        state,
        measures: MeasureTriple::new(c, n, n2),
        terms: t.0,
    }
}

fn dp_both_sided(eta: f64, ew: &EwParams, formulas: Formulas) -> ClosedForm {
    let mut t = Terms(Vec::new());
    let p = ew.p;
    let (a2, b2, ab) = ew.amplitudes();
    let r = t.real("r", ew.r());
    let t2 = t.real("t2", 1.0 - 2.0 * eta / 3.0);
    let t4 = t.real("t4", 1.0 - 4.0 * eta / 3.0);
    let delta = t.real("delta", r + 2.0 / 9.0 * p * eta * (3.0 - 2.0 * eta));
    let xi = t.real("xi", 2.0 / 9.0 * p * eta * eta);
    let delta_ab = t.real("Delta_ab", r + p * t2 * t2 * a2 + 2.0 * xi * b2);
    let delta_ba = t.real("Delta_ba", r + p * t2 * t2 * b2 + 2.0 * xi * a2);

    let (kappa, middle) = match formulas {
        Formulas::Corrected => (p * t4 * t4 * ab, Complex64::new(0.0, 0.0)),
        Formulas::PaperLiteral => {
            let tau = t.real("tau", p / 9.0 * (9.0 - 24.0 * eta + 14.0 * eta * eta));
            let varsigma = t.complex(
                "varsigma",
                Complex64::new(1.0, -1.0) * (p / 9.0 * eta * eta),
            );
            (varsigma * ab + ab.conj() * tau, -(ab.conj() * xi))
        }
    };
    let kappa = t.complex("kappa", kappa);

    let mut state = x_matrix([delta_ab, delta, delta, delta_ba], kappa);
    state[(1, 2)] = middle;
    state[(2, 1)] = middle.conj();

    let value = 2.0 * (kappa.norm() - delta).max(0.0);
    ClosedForm {
        state,
        measures: MeasureTriple::uniform(value),
        terms: t.0,
    }
}

/// Closed form, Kraus oracle, and their disagreement at one grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormReport {
    pub config: ChannelConfig,
    pub formulas: Formulas,
    pub state: Mat4,
    pub measures: MeasureTriple,
    pub oracle_state: DensityMatrix4,
    pub oracle_measures: MeasureTriple,
    pub max_entry_deviation: f64,
    pub measure_deviation: f64,
    pub terms: Vec<Term>,
}

/// Evaluates the closed form and cross-checks it against [`apply`].
pub fn evaluate(config: &ChannelConfig, ew: &EwParams, formulas: Formulas) -> Result<ClosedFormReport> {
    let cf = closed_form(config, ew, formulas)?;
    let oracle_state = apply(&ew.density(), config)?;
    let oracle_measures = measure_triple(&oracle_state)?;
    Ok(ClosedFormReport {
        config: *config,
        formulas,
        max_entry_deviation: cf.state.max_abs_diff(oracle_state.matrix()),
        measure_deviation: cf.measures.max_deviation(&oracle_measures),
        state: cf.state,
        measures: cf.measures,
        oracle_state,
        oracle_measures,
        terms: cf.terms,
    })
}

/// Result of checking `|κ| > δ` for two-sided depolarizing noise.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct KappaScan {
    pub points: usize,
    /// Points with `|κ| ≤ δ`.
    pub violations: usize,
    /// Violations at which the oracle state is nevertheless entangled.
    pub entangled_violations: usize,
    /// Smallest `p` among violations at the largest scanned `η`, if any.
    pub first_violation: Option<(f64, f64, f64)>,
}

/// Scans `|κ| > δ` (corrected `κ`) over `p × η × |α|` grids with `n` points each.
pub fn kappa_dominance_scan(n: usize, formulas: Formulas) -> Result<KappaScan> {
    let mut scan = KappaScan::default();
    let grid = |i: usize| if n > 1 { i as f64 / (n - 1) as f64 } else { 0.0 };
    for ia in 0..n {
        let alpha = Complex64::new(grid(ia), 0.0);
        for ip in 0..n {
            for ie in 0..n {
                let ew = EwParams::new(grid(ip), alpha)?;
                let cfg = ChannelConfig::new(
                    ChannelKind::Depolarizing,
                    Sidedness::BothSided,
                    grid(ie),
                )?;
                let cf = closed_form(&cfg, &ew, formulas)?;
                let find = |name| cf.terms.iter().find(|t| t.name == name).map(|t| t.value);
                let kappa = find("kappa").map_or(0.0, |k| k.norm());
                let delta = find("delta").map_or(0.0, |d| d.re);
                scan.points += 1;
                if kappa <= delta {
                    scan.violations += 1;
                    if cf.measures.concurrence > 0.0 {
                        scan.entangled_violations += 1;
                    }
                    if scan.first_violation.is_none() {
                        scan.first_violation = Some((ew.p, cfg.eta, alpha.re));
                    }
                }
            }
        }
    }
    Ok(scan)
}
