//! State families with their known closed-form entanglement values.

use num_complex::Complex64;

use crate::measures::MeasureTriple;
use crate::qmat::{kron, pauli, DensityMatrix4, Mat4};
use crate::{Error, Result};

const PARAM_TOLERANCE: f64 = 1e-12;

fn in_unit_interval(name: &'static str, x: f64) -> Result<f64> {
    if x.is_finite() && (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(Error::param(name, x))
    }
}

fn basis_state(amplitudes: [Complex64; 4]) -> Mat4 {
    Mat4::outer(&amplitudes)
}

/// Singlet `|ψ⁻⟩ = (|01⟩ − |10⟩)/√2`.
pub fn singlet() -> Mat4 {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let z = Complex64::new(0.0, 0.0);
    basis_state([z, Complex64::new(h, 0.0), Complex64::new(-h, 0.0), z])
}

/// `(1−p)/4·I + p|ψ⁻⟩⟨ψ⁻|` without range checks; valid for `p ∈ [−1/3, 1]`.
pub(crate) fn werner_matrix(p: f64) -> Mat4 {
    Mat4::identity().scale((1.0 - p) / 4.0) + singlet().scale(p)
}

/// Werner state parameter, `p ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WernerParams {
    pub p: f64,
}

impl WernerParams {
    pub fn new(p: f64) -> Result<Self> {
        Ok(WernerParams {
            p: in_unit_interval("p", p)?,
        })
    }

    pub fn is_entangled(&self) -> bool {
        self.p > 1.0 / 3.0
    }

    pub fn density(&self) -> DensityMatrix4 {
        DensityMatrix4::new(werner_matrix(self.p)).expect("Werner state is valid for p in [0, 1]")
    }

    /// `C = N = N₂ = max(0, (3p−1)/2)`.
    pub fn closed_form(&self) -> MeasureTriple {
        MeasureTriple::uniform(((3.0 * self.p - 1.0) / 2.0).max(0.0))
    }
}

pub fn werner(p: f64) -> Result<DensityMatrix4> {
    Ok(WernerParams::new(p)?.density())
}

/// Bell-diagonal state `¼(I + Σ c_i σ_i⊗σ_i)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BellDiagonalParams {
    pub c: [f64; 3],
}

impl BellDiagonalParams {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        for (name, x) in [("c1", c1), ("c2", c2), ("c3", c3)] {
            if !x.is_finite() || !(-1.0..=1.0).contains(&x) {
                return Err(Error::param(name, x));
            }
        }
        let params = BellDiagonalParams { c: [c1, c2, c3] };
        if let Some(&l) = params.eigenvalues().iter().find(|&&l| l < -PARAM_TOLERANCE) {
            return Err(Error::param("lambda_mn", l));
        }
        Ok(params)
    }

    /// `λ_mn = ¼[1 + (−1)^m c₁ − (−1)^{m+n} c₂ + (−1)^n c₃]` for `(m,n)` in
    /// `(0,0), (0,1), (1,0), (1,1)`.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let [c1, c2, c3] = self.c;
        let sign = |k: u32| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut out = [0.0; 4];
        for m in 0..2u32 {
            for n in 0..2u32 {
                out[(2 * m + n) as usize] =
                    0.25 * (1.0 + sign(m) * c1 - sign(m + n) * c2 + sign(n) * c3);
            }
        }
        out
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues().into_iter().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn density(&self) -> DensityMatrix4 {
        let [x, y, z] = pauli();
        let paulis = [kron(&x, &x), kron(&y, &y), kron(&z, &z)];
        let m = paulis
            .iter()
            .zip(self.c)
            .fold(Mat4::identity(), |acc, (s, c)| acc + s.scale(c))
            .scale(0.25);
        DensityMatrix4::new(m).expect("Bell-diagonal state with nonnegative λ_mn is valid")
    }

    /// `C = N = N₂ = max(0, 2λ_max − 1)`.
    pub fn closed_form(&self) -> MeasureTriple {
        MeasureTriple::uniform((2.0 * self.lambda_max() - 1.0).max(0.0))
    }
}

pub fn bell_diagonal(c1: f64, c2: f64, c3: f64) -> Result<DensityMatrix4> {
    Ok(BellDiagonalParams::new(c1, c2, c3)?.density())
}

/// Maximally entangled mixed state with concurrence `C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MemParams {
    pub concurrence: f64,
}

impl MemParams {
    pub fn new(concurrence: f64) -> Result<Self> {
        Ok(MemParams {
            concurrence: in_unit_interval("C", concurrence)?,
        })
    }

    /// Whether `C ≥ 2/3`; the boundary belongs to this branch.
    pub fn upper_branch(&self) -> bool {
        self.concurrence >= 2.0 / 3.0
    }

    /// `g(C) = C/2` for `C ≥ 2/3`, else `1/3`.
    pub fn g(&self) -> f64 {
        if self.upper_branch() {
            self.concurrence / 2.0
        } else {
            1.0 / 3.0
        }
    }

    pub fn density(&self) -> DensityMatrix4 {
        let g = self.g();
        let mut m = Mat4::diag([g, 1.0 - 2.0 * g, 0.0, g]);
        m[(0, 3)] = Complex64::new(self.concurrence / 2.0, 0.0);
        m[(3, 0)] = m[(0, 3)];
        DensityMatrix4::new(m).expect("MEM is valid for C in [0, 1]")
    }

    /// The square root shared by the `N` and `N₂` branches.
    fn root(&self) -> f64 {
        let c = self.concurrence;
        if self.upper_branch() {
            libm::sqrt((1.0 - c) * (1.0 - c) + c * c)
        } else {
            libm::sqrt(1.0 + 9.0 * c * c)
        }
    }

    pub fn closed_form(&self) -> MeasureTriple {
        let c = self.concurrence;
        let root = self.root();
        let (n, ratio) = if self.upper_branch() {
            (root - (1.0 - c), c / root)
        } else {
            ((root - 1.0) / 3.0, 3.0 * c / root)
        };
        MeasureTriple::new(c, n, 0.5 * n * (1.0 + ratio))
    }
}

pub fn mem(concurrence: f64) -> Result<DensityMatrix4> {
    Ok(MemParams::new(concurrence)?.density())
}

/// Generalized MEM with populations `x, y, a, b` and coherence `γ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GMemParams {
    pub x: f64,
    pub y: f64,
    pub a: f64,
    pub b: f64,
    pub gamma: f64,
}

impl GMemParams {
    pub fn new(x: f64, y: f64, a: f64, b: f64, gamma: f64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("a", a), ("b", b), ("gamma", gamma)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::param(name, v));
            }
        }
        let total = x + y + a + b + gamma;
        if (total - 1.0).abs() > PARAM_TOLERANCE {
            return Err(Error::InvalidTrace(total));
        }
        Ok(GMemParams { x, y, a, b, gamma })
    }

    pub fn density(&self) -> DensityMatrix4 {
        let h = self.gamma / 2.0;
        let mut m = Mat4::diag([self.x + h, self.a, self.b, self.y + h]);
        m[(0, 3)] = Complex64::new(h, 0.0);
        m[(3, 0)] = m[(0, 3)];
        DensityMatrix4::new(m).expect("gMEM with nonnegative parameters is valid")
    }

    /// `C = max[0, γ − 2√(ab)]`, `N = √((a−b)² + γ²) − (a+b)`,
    /// `N₂ = N/2·[1 + γ/√((a−b)² + γ²)]`.
    pub fn closed_form(&self) -> MeasureTriple {
        let (a, b, g) = (self.a, self.b, self.gamma);
        let c = (g - 2.0 * libm::sqrt(a * b)).max(0.0);
        let root = libm::sqrt((a - b) * (a - b) + g * g);
        let n = (root - (a + b)).max(0.0);
        let n2 = if n > 0.0 { 0.5 * n * (1.0 + g / root) } else { 0.0 };
        MeasureTriple::new(c, n, n2)
    }
}

pub fn gmem(params: &GMemParams) -> DensityMatrix4 {
    params.density()
}

/// `ρ_EW = (1−p)/4·I + p|Ψ⟩⟨Ψ|` with `|Ψ⟩ = α|00⟩ + β|11⟩`, `β = √(1−|α|²) ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EwParams {
    pub p: f64,
    pub alpha: Complex64,
}

impl EwParams {
    pub fn new(p: f64, alpha: Complex64) -> Result<Self> {
        let p = in_unit_interval("p", p)?;
        let mag = alpha.norm();
        if !mag.is_finite() || mag > 1.0 + PARAM_TOLERANCE {
            return Err(Error::param("|alpha|", mag));
        }
        Ok(EwParams { p, alpha })
    }

    pub fn beta(&self) -> f64 {
        libm::sqrt((1.0 - self.alpha.norm_sqr()).max(0.0))
    }

    /// `(1−p)/4`.
    pub fn r(&self) -> f64 {
        (1.0 - self.p) / 4.0
    }

    /// `|α|²`, `|β|²`, `αβ*`.
    pub fn amplitudes(&self) -> (f64, f64, Complex64) {
        let beta = self.beta();
        (self.alpha.norm_sqr(), beta * beta, self.alpha * beta)
    }

    pub fn matrix(&self) -> Mat4 {
        let z = Complex64::new(0.0, 0.0);
        let psi = [self.alpha, z, z, Complex64::new(self.beta(), 0.0)];
        Mat4::identity().scale(self.r()) + basis_state(psi).scale(self.p)
    }

    pub fn density(&self) -> DensityMatrix4 {
        DensityMatrix4::new(self.matrix()).expect("ρ_EW is valid for p in [0,1], |α| ≤ 1")
    }

    /// `C = N = N₂ = 2·max[0, |pαβ*| − (1−p)/4]`.
    pub fn closed_form(&self) -> MeasureTriple {
        let v = 2.0 * (self.p * self.alpha.norm() * self.beta() - self.r()).max(0.0);
        MeasureTriple::uniform(v)
    }
}

pub fn ew(p: f64, alpha: Complex64) -> Result<DensityMatrix4> {
    Ok(EwParams::new(p, alpha)?.density())
}

/// A named family member, as it appears in state files.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StateFamily {
    Werner(WernerParams),
    BellDiagonal(BellDiagonalParams),
    Mem(MemParams),
    GMem(GMemParams),
    Ew(EwParams),
}

impl StateFamily {
    pub fn name(&self) -> &'static str {
        match self {
            StateFamily::Werner(_) => "werner",
            StateFamily::BellDiagonal(_) => "bell_diagonal",
            StateFamily::Mem(_) => "mem",
            StateFamily::GMem(_) => "gmem",
            StateFamily::Ew(_) => "ew",
        }
    }

    pub fn density(&self) -> DensityMatrix4 {
        match self {
            StateFamily::Werner(p) => p.density(),
            StateFamily::BellDiagonal(p) => p.density(),
            StateFamily::Mem(p) => p.density(),
            StateFamily::GMem(p) => p.density(),
            StateFamily::Ew(p) => p.density(),
        }
    }

    pub fn closed_form(&self) -> MeasureTriple {
        match self {
            StateFamily::Werner(p) => p.closed_form(),
            StateFamily::BellDiagonal(p) => p.closed_form(),
            StateFamily::Mem(p) => p.closed_form(),
            StateFamily::GMem(p) => p.closed_form(),
            StateFamily::Ew(p) => p.closed_form(),
        }
    }
}
